"""Brute-force reference implementations, written straight from the definitions.

Nothing here imports the package's bitmask machinery: vertex sets are
Python sets, reachability is breadth-first search, and subsets come from
itertools.  Only the graph container is shared.
"""
from itertools import combinations, product
from math import inf


def edges_of(g):
    return {(s, r): k for s, r, k in g.edges}


def out_total(g, v):
    return sum((k for (s, _), k in edges_of(g).items() if s == v), 0)


def count(g, sources, targets):
    return sum(
        (k for (s, r), k in edges_of(g).items() if s in sources and r in targets), 0
    )


def reach(g, v):
    seen, todo = {v}, [v]
    E = edges_of(g)
    while todo:
        u = todo.pop()
        for (s, r) in E:
            if s == u and r not in seen:
                seen.add(r)
                todo.append(r)
    return seen


def geq(g, v, w):
    return w in reach(g, v)


def subsets(items, nonempty=False):
    items = list(items)
    for k in range(1 if nonempty else 0, len(items) + 1):
        for c in combinations(items, k):
            yield frozenset(c)


def hereditary(g, X):
    return all(w in X for v in X for w in reach(g, v))


def saturated(g, X):
    for v in g.vertices:
        if v in X:
            continue
        d = out_total(g, v)
        if 0 < d < inf and all(r in X for (s, r) in edges_of(g) if s == v):
            return False
    return True


def hs_sets(g):
    return [X for X in subsets(g.vertices) if hereditary(g, X) and saturated(g, X)]


def omega(g, X):
    return frozenset(w for w in g.vertices if w not in X and not any(geq(g, w, v) for v in X))


def h_fin(g, H):
    rest = set(g.vertices) - set(H)
    return frozenset(
        v for v in rest if out_total(g, v) == inf and 0 < count(g, {v}, rest) < inf
    )


def h_empty(g, H):
    rest = set(g.vertices) - set(H)
    return frozenset(v for v in rest if out_total(g, v) == inf and count(g, {v}, rest) == 0)


def breaking(g):
    out = set()
    for v in g.vertices:
        if out_total(g, v) == inf:
            avoid = set(g.vertices) - omega(g, {v})
            if 0 < count(g, {v}, avoid) < inf:
                out.add(v)
    return frozenset(out)


def is_tail(g, M):
    if not M:
        return False
    for w in M:
        for v in g.vertices:
            if geq(g, v, w) and v not in M:
                return False
    for v in M:
        d = out_total(g, v)
        if 0 < d < inf and not any(s == v and r in M for (s, r) in edges_of(g)):
            return False
    for v in M:
        for w in M:
            if not any(geq(g, v, y) and geq(g, w, y) for y in M):
                return False
    return True


def tails(g):
    return [M for M in subsets(g.vertices, nonempty=True) if is_tail(g, M)]


def explicit_edges(g, cap=2):
    """Expand multiplicities into individual edges; INF is capped at ``cap`` copies."""
    out = []
    for (s, r), k in edges_of(g).items():
        for c in range(int(min(k, cap))):
            out.append((s, r, c))
    return out


def simple_loops(g, v, cap=2):
    """Edge-level simple loops at ``v``, enumerated as edge sequences (capped)."""
    E = explicit_edges(g, cap)
    found = 0

    def extend(path, visited):
        nonlocal found
        u = path[-1][1] if path else v
        for e in E:
            if e[0] != u:
                continue
            if e[1] == v:
                found += 1
            elif e[1] not in visited:
                extend(path + [e], visited | {e[1]})

    extend([], {v})
    return min(found, cap)


def exitless_loops_in(g, M):
    """Vertex sets of simple loops inside M with no exit whose range is in M."""
    E = explicit_edges(g, cap=2)
    loops = set()
    for start in M:
        def extend(path, visited):
            u = path[-1][1] if path else start
            for e in E:
                if e[0] != u or e[1] not in M:
                    continue
                if e[1] == start:
                    cycle = path + [e]
                    if all(
                        not any(f[0] == c[0] and f != c and f[1] in M for f in E)
                        for c in cycle
                    ):
                        loops.add(frozenset(c[0] for c in cycle))
                elif e[1] not in visited:
                    extend(path + [e], visited | {e[1]})

        extend([], {start})
    return loops


def tail_kind(g, M):
    loops = exitless_loops_in(g, M)
    return ("tau", next(iter(loops))) if loops else ("gamma", None)


def t1_condition(g):
    if breaking(g):
        return False
    T = tails(g)
    for M in T:
        for N in T:
            if M < N:
                e = h_empty(g, set(g.vertices) - M)
                if not e or count(g, e, N) == inf:
                    return False
    return True


def leq(I, J):
    return I[0] <= J[0] and I[1] <= (J[0] | J[1])


def gamma_ideal(g, M):
    om = omega(g, M)
    return (om, h_fin(g, om))


def bv_ideal(g, v):
    om = omega(g, {v})
    return (om, h_fin(g, om) - {v})


def hull_kernel_points(g):
    """Gauge-invariant primitive points with their ideals (valid under condition (K))."""
    pts = [(("gamma", M), gamma_ideal(g, M)) for M in tails(g)]
    pts += [(("bv", v), bv_ideal(g, v)) for v in sorted(breaking(g))]
    return pts


def all_tuples(n, alphabet):
    return product(alphabet, repeat=n)
