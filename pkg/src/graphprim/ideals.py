"""Hereditary and saturated vertex sets and the gauge-invariant ideals they index.

A gauge-invariant ideal is a pair ``(H, B)`` with ``H`` hereditary and
saturated and ``B`` a subset of ``H^fin_inf``.  Public functions take and
return vertex sets as ``frozenset``; the ``*_mask`` variants work on the
bitmask encoding from :meth:`WeightedGraph.mask` and are what the rest of
the package uses internally.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .errors import InvalidSubset, NotHereditarySaturated, TooLarge
from .graph import INF, WeightedGraph

DEFAULT_MAX_VERTICES = 16


def check_size(g: WeightedGraph, max_vertices=DEFAULT_MAX_VERTICES):
    if len(g) > max_vertices:
        raise TooLarge(len(g), max_vertices)


def vertex_key(vertices):
    """Canonical sort key for a vertex set: size, then sorted member list."""
    members = sorted(vertices)
    return len(members), members


@dataclass(frozen=True)
class GaugeInvariantIdeal:
    H: frozenset
    B: frozenset = frozenset()

    def to_json(self):
        return {"H": sorted(self.H), "B": sorted(self.B)}

    @classmethod
    def from_json(cls, data):
        return cls(frozenset(data["H"]), frozenset(data.get("B", ())))

    def sort_key(self):
        return vertex_key(self.H), vertex_key(self.B)


# -- mask level ----------------------------------------------------------------

def is_hereditary_mask(g, x):
    succ = g.masks.succ
    return all(not succ[i] & ~x for i in range(len(g)) if x >> i & 1)


def is_saturated_mask(g, x):
    masks = g.masks
    for i in range(len(g)):
        if not x >> i & 1 and masks.finite_emitters >> i & 1:
            if not masks.succ[i] & ~x:
                return False
    return True


def sigma_h_mask(g, x):
    masks = g.masks
    n = len(g)
    while True:
        grown = x
        for i in range(n):
            if grown >> i & 1:
                grown |= masks.down[i]
        for i in range(n):
            if (
                not grown >> i & 1
                and masks.finite_emitters >> i & 1
                and not masks.succ[i] & ~grown
            ):
                grown |= 1 << i
        if grown == x:
            return x
        x = grown


def omega_mask(g, x):
    down = g.masks.down
    out = 0
    for i in range(len(g)):
        if not x >> i & 1 and not down[i] & x:
            out |= 1 << i
    return out


def h_fin_inf_mask(g, h):
    outside = g.full_mask & ~h
    out = 0
    for i in range(len(g)):
        if outside >> i & 1 and g.masks.infinite_emitters >> i & 1:
            if 0 < g.count_into(1 << i, outside) < INF:
                out |= 1 << i
    return out


def h_empty_inf_mask(g, h):
    outside = g.full_mask & ~h
    out = 0
    for i in range(len(g)):
        if outside >> i & 1 and g.masks.infinite_emitters >> i & 1:
            if g.count_into(1 << i, outside) == 0:
                out |= 1 << i
    return out


def breaking_vertices_mask(g):
    out = 0
    for i in range(len(g)):
        if g.masks.infinite_emitters >> i & 1:
            avoiding = g.full_mask & ~omega_mask(g, 1 << i)
            if 0 < g.count_into(1 << i, avoiding) < INF:
                out |= 1 << i
    return out


@lru_cache(maxsize=2048)
def hs_masks(g):
    """All hereditary saturated sets of ``g`` in canonical order (unchecked size)."""
    m = g.masks
    raw = kernels.hereditary_saturated_masks(len(g), list(m.succ), m.finite_emitters)
    return tuple(sorted(raw, key=lambda x: vertex_key(g.unmask(x))))


def ideal_leq_mask(ih, ib, jh, jb):
    return not ih & ~jh and not ib & ~(jh | jb)


# -- public API ------------------------------------------------------------------

def is_hereditary(g: WeightedGraph, X) -> bool:
    return is_hereditary_mask(g, g.mask(X))


def is_saturated(g: WeightedGraph, X) -> bool:
    """Infinite emitters and sinks never force membership."""
    return is_saturated_mask(g, g.mask(X))


def sigma_h(g: WeightedGraph, X) -> frozenset:
    """Smallest hereditary saturated set containing ``X``."""
    return g.unmask(sigma_h_mask(g, g.mask(X)))


def omega(g: WeightedGraph, X) -> frozenset:
    """Vertices outside ``X`` that reach no member of ``X``."""
    return g.unmask(omega_mask(g, g.mask(X)))


def _checked_hs(g, H):
    h = g.mask(H)
    if not (is_hereditary_mask(g, h) and is_saturated_mask(g, h)):
        raise NotHereditarySaturated(f"{sorted(H)} is not hereditary and saturated")
    return h


def h_fin_inf(g: WeightedGraph, H) -> frozenset:
    return g.unmask(h_fin_inf_mask(g, _checked_hs(g, H)))


def h_empty_inf(g: WeightedGraph, H) -> frozenset:
    return g.unmask(h_empty_inf_mask(g, _checked_hs(g, H)))


def breaking_vertices(g: WeightedGraph) -> frozenset:
    return g.unmask(breaking_vertices_mask(g))


def validate_ideal(g: WeightedGraph, ideal: GaugeInvariantIdeal):
    h = _checked_hs(g, ideal.H)
    b = g.mask(ideal.B)
    if b & ~h_fin_inf_mask(g, h):
        raise InvalidSubset(f"B={sorted(ideal.B)} is not contained in H^fin_inf")
    return ideal


def full_ideal(g: WeightedGraph) -> GaugeInvariantIdeal:
    return GaugeInvariantIdeal(frozenset(g.vertices))


def enumerate_ideals(g: WeightedGraph, max_vertices=DEFAULT_MAX_VERTICES):
    """Every pair ``(H, B)``, ordered by ``H`` then ``B`` (size, then members)."""
    check_size(g, max_vertices)
    out = []
    for h in hs_masks(g):
        fin = h_fin_inf_mask(g, h)
        bits = [1 << i for i in range(len(g)) if fin >> i & 1]
        subsets = []
        for k in range(1 << len(bits)):
            b = 0
            for j, bit in enumerate(bits):
                if k >> j & 1:
                    b |= bit
            subsets.append(g.unmask(b))
        H = g.unmask(h)
        for B in sorted(subsets, key=vertex_key):
            out.append(GaugeInvariantIdeal(H, B))
    return out


def ideal_leq(g: WeightedGraph, I: GaugeInvariantIdeal, J: GaugeInvariantIdeal) -> bool:
    """``J_{H,B} ⊆ J_{H',B'}`` iff ``H ⊆ H'`` and ``B ⊆ H' ∪ B'``."""
    return I.H <= J.H and I.B <= (J.H | J.B)


def is_maximal_gauge_invariant(
    g: WeightedGraph, I: GaugeInvariantIdeal, max_vertices=DEFAULT_MAX_VERTICES
) -> bool:
    """No gauge-invariant ideal lies strictly between ``I`` and the whole algebra.

    The whole algebra itself is not proper and so is never maximal.
    """
    check_size(g, max_vertices)
    top = full_ideal(g)
    if I == top:
        return False
    for J in enumerate_ideals(g, max_vertices):
        if J != I and J != top and ideal_leq(g, I, J):
            return False
    return True
