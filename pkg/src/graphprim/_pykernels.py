"""Pure-Python bitmask kernels.

Vertex sets are ints: bit ``i`` set means vertex ``i`` is a member.  The
Cython module ``_ckernels`` implements the same three functions with the
same signatures; ``graphprim.kernels`` picks one at import.
"""

MAX_BITS = 62


def reach_masks(n, succ):
    """Reflexive-transitive closure of the successor relation.

    ``succ[i]`` is the mask of ranges of edges leaving ``i``.  Returns a list
    whose ``i``-th entry is the mask of all ``w`` with a path (possibly of
    length zero) from ``i`` to ``w``.
    """
    down = [succ[i] | (1 << i) for i in range(n)]
    for k in range(n):
        bit = 1 << k
        dk = down[k]
        for i in range(n):
            if down[i] & bit:
                down[i] |= dk
    return down


def hereditary_saturated_masks(n, succ, finite_emitters):
    """All subsets closed under taking successors and under saturation.

    ``finite_emitters`` marks vertices with 0 < |s^-1(v)| < inf; only those
    are pulled in by saturation.
    """
    out = []
    for x in range(1 << n):
        ok = True
        for i in range(n):
            s = succ[i]
            if x >> i & 1:
                if s & ~x:
                    ok = False
                    break
            elif finite_emitters >> i & 1 and not s & ~x:
                ok = False
                break
        if ok:
            out.append(x)
    return out


def tail_masks(n, up, down, succ, finite_emitters):
    """All nonempty subsets satisfying the three maximal-tail conditions.

    (1) every vertex reaching a member is a member (``up[i]`` is the mask of
    vertices reaching ``i``), (2) members that are finite emitters have a
    successor inside, (3) any two members share a lower bound inside.
    """
    out = []
    for m in range(1, 1 << n):
        ok = True
        members = [i for i in range(n) if m >> i & 1]
        for i in members:
            if up[i] & ~m:
                ok = False
                break
            if finite_emitters >> i & 1 and not succ[i] & m:
                ok = False
                break
        if not ok:
            continue
        for a, i in enumerate(members):
            di = down[i] & m
            for j in members[a + 1:]:
                if not di & down[j]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(m)
    return out
