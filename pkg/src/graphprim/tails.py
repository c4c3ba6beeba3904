"""Maximal tails: enumeration, gamma/tau classification, Y_min / Y_inf, isolation."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional

from . import kernels
from .errors import NonUniqueGeneratingLoop, NotATail, NotT1
from .graph import INF, WeightedGraph
from .ideals import (
    DEFAULT_MAX_VERTICES,
    GaugeInvariantIdeal,
    check_size,
    h_empty_inf_mask,
    h_fin_inf_mask,
    vertex_key,
)


class TailKind(str, Enum):
    GAMMA = "gamma"
    TAU = "tau"


@dataclass(frozen=True)
class MaximalTail:
    vertices: frozenset
    kind: TailKind
    loop: Optional[frozenset] = None

    def to_json(self):
        out = {"vertices": sorted(self.vertices), "kind": self.kind.value}
        if self.loop is not None:
            out["loop"] = sorted(self.loop)
        return out

    def sort_key(self):
        return vertex_key(self.vertices)


# -- mask level ----------------------------------------------------------------

def is_tail_mask(g, m):
    if not m:
        return False
    masks = g.masks
    members = [i for i in range(len(g)) if m >> i & 1]
    for i in members:
        if masks.up[i] & ~m:
            return False
        if masks.finite_emitters >> i & 1 and not masks.succ[i] & m:
            return False
    for a, i in enumerate(members):
        for j in members[a + 1:]:
            if not masks.down[i] & masks.down[j] & m:
                return False
    return True


def generating_loops_mask(g, m):
    """Vertex masks of the exit-free simple loops inside ``m``.

    A vertex can lie on such a loop only if it emits exactly one edge with
    range in ``m``; following those unique edges is a partial function
    whose cycles are the loops.
    """
    nxt = {}
    for i in range(len(g)):
        if m >> i & 1 and g.count_into(1 << i, m) == 1:
            nxt[i] = (g.masks.succ[i] & m).bit_length() - 1
    loops = set()
    for start in nxt:
        path = []
        seen = {}
        u = start
        while u in nxt and u not in seen:
            seen[u] = len(path)
            path.append(u)
            u = nxt[u]
        if u in seen:
            cycle = 0
            for w in path[seen[u]:]:
                cycle |= 1 << w
            loops.add(cycle)
    return sorted(loops)


def classify_mask(g, m):
    loops = generating_loops_mask(g, m)
    if not loops:
        return TailKind.GAMMA, None
    if len(loops) > 1:
        raise NonUniqueGeneratingLoop(
            f"{sorted(g.unmask(m))} has {len(loops)} exit-free loops"
        )
    return TailKind.TAU, loops[0]


@lru_cache(maxsize=2048)
def tail_masks(g):
    """Maximal-tail masks of ``g`` in canonical order (unchecked size)."""
    m = g.masks
    raw = kernels.tail_masks(
        len(g), list(m.up), list(m.down), list(m.succ), m.finite_emitters
    )
    return tuple(sorted(raw, key=lambda x: vertex_key(g.unmask(x))))


def _make_tail(g, m):
    kind, loop = classify_mask(g, m)
    return MaximalTail(g.unmask(m), kind, None if loop is None else g.unmask(loop))


# -- public API ------------------------------------------------------------------

def is_maximal_tail(g: WeightedGraph, M) -> bool:
    return is_tail_mask(g, g.mask(M))


def classify_tail(g: WeightedGraph, M):
    """Return ``(kind, loop_vertices)``; ``loop_vertices`` is ``None`` for gamma."""
    m = g.mask(M)
    if not is_tail_mask(g, m):
        raise NotATail(f"{sorted(M)} is not a maximal tail")
    kind, loop = classify_mask(g, m)
    return kind, None if loop is None else g.unmask(loop)


def maximal_tails(g: WeightedGraph, max_vertices=DEFAULT_MAX_VERTICES):
    check_size(g, max_vertices)
    return [_make_tail(g, m) for m in tail_masks(g)]


def as_tail(g: WeightedGraph, M) -> MaximalTail:
    """Coerce a vertex collection or tail into a classified :class:`MaximalTail`."""
    vertices = M.vertices if isinstance(M, MaximalTail) else M
    m = g.mask(vertices)
    if not is_tail_mask(g, m):
        raise NotATail(f"{sorted(vertices)} is not a maximal tail")
    return _make_tail(g, m)


def tail_ideal(g: WeightedGraph, M) -> GaugeInvariantIdeal:
    """The ideal ``(Ω(M), Ω(M)^fin_inf)`` attached to a tail."""
    vertices = M.vertices if isinstance(M, MaximalTail) else M
    om = g.full_mask & ~g.mask(vertices)
    return GaugeInvariantIdeal(g.unmask(om), g.unmask(h_fin_inf_mask(g, om)))


def _loops_reach(g, src, dst):
    down = g.masks.down
    return any(down[i] & dst for i in range(len(g)) if src >> i & 1)


def _loop_masks(g, Y):
    out = []
    for U in Y:
        if U.kind is not TailKind.TAU:
            raise NotATail(f"{sorted(U.vertices)} is not a tau tail")
        out.append(g.mask(U.loop))
    return out


def y_min(g: WeightedGraph, Y):
    """Tails of ``Y`` whose loop reaches the loop of no other member."""
    Y = list(Y)
    loops = _loop_masks(g, Y)
    return [
        U
        for a, U in enumerate(Y)
        if not any(
            _loops_reach(g, loops[a], loops[b]) for b in range(len(Y)) if Y[b] != U
        )
    ]


def y_inf(g: WeightedGraph, Y):
    """Tails of ``Y`` whose loop reaches the loop of no member of ``y_min(Y)``."""
    Y = list(Y)
    minimal = _loop_masks(g, y_min(g, Y))
    loops = _loop_masks(g, Y)
    return [
        U for a, U in enumerate(Y)
        if not any(_loops_reach(g, loops[a], lm) for lm in minimal)
    ]


def tails_containing(g: WeightedGraph, M, max_vertices=DEFAULT_MAX_VERTICES):
    vertices = M.vertices if isinstance(M, MaximalTail) else frozenset(M)
    return [N for N in maximal_tails(g, max_vertices) if vertices <= N.vertices]


def is_isolated(g: WeightedGraph, M, max_vertices=DEFAULT_MAX_VERTICES) -> bool:
    """Private vertex, or finitely many edges from Ω(M)^∅_inf into the tails above M.

    Only meaningful for T1 graphs; raises :class:`NotT1` otherwise.
    """
    from .primtop import t1_check

    if not t1_check(g, max_vertices).t1:
        raise NotT1("isolation is defined for T1 graphs only")
    M = as_tail(g, M)
    tails = maximal_tails(g, max_vertices)
    others = frozenset().union(*(N.vertices for N in tails if N.vertices != M.vertices))
    if M.vertices - others:
        return True
    return _isolated_by_edges(g, M, max_vertices)


def _isolated_by_edges(g, M, max_vertices=DEFAULT_MAX_VERTICES):
    """Second isolation clause: Ω(M)^∅_inf emits finitely many edges into the tails above M."""
    om = g.full_mask & ~g.mask(M.vertices)
    empty_inf = h_empty_inf_mask(g, om)
    if not empty_inf:
        return False
    above = g.mask(frozenset().union(*(N.vertices for N in tails_containing(g, M, max_vertices))))
    return g.count_into(empty_inf, above) < INF
