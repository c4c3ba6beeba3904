"""The primitive ideal space as a symbolic topological space.

Points of Prim C*(E) are gamma-tails, breaking vertices, and pairs
``(tau-tail, angle)``.  A :class:`PrimSubset` records a set of such points,
with the angles of each tau-tail collected into a :class:`CircleSet`.
:func:`closure` evaluates the closed-form membership rules of the
hull-kernel topology for every candidate point; nothing is iterated to a
fixed point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple, Optional

from .errors import ConditionKRequired, InvalidSubset, UnrepresentableComplement
from .graph import INF, WeightedGraph, condition_K
from .ideals import (
    DEFAULT_MAX_VERTICES,
    GaugeInvariantIdeal,
    breaking_vertices_mask,
    check_size,
    enumerate_ideals,
    h_empty_inf_mask,
    h_fin_inf_mask,
    ideal_leq,
    is_maximal_gauge_invariant,
    omega_mask,
    vertex_key,
)
from .tails import TailKind, tail_ideal, tail_masks, classify_mask


# -- circle sets ---------------------------------------------------------------

def _angle(a) -> Fraction:
    return Fraction(a) % 1


@dataclass(frozen=True)
class CircleSet:
    """Empty, a finite set of rational angles (in turns), or the full circle."""

    angles: frozenset = frozenset()
    is_full: bool = False

    def __post_init__(self):
        angles = frozenset() if self.is_full else frozenset(_angle(a) for a in self.angles)
        object.__setattr__(self, "angles", angles)

    @classmethod
    def full(cls):
        return cls(is_full=True)

    @classmethod
    def finite(cls, angles: Iterable):
        return cls(frozenset(angles))

    @property
    def is_empty(self):
        return not self.is_full and not self.angles

    def __or__(self, other):
        if self.is_full or other.is_full:
            return CircleSet.full()
        return CircleSet(self.angles | other.angles)

    def __le__(self, other):
        if other.is_full:
            return True
        return not self.is_full and self.angles <= other.angles

    def closure(self):
        # finite subsets of the circle are closed
        return self

    def to_json(self):
        if self.is_full:
            return "full"
        return [str(a) for a in sorted(self.angles)]

    @classmethod
    def from_json(cls, data):
        if data == "full":
            return cls.full()
        if isinstance(data, str):
            raise InvalidSubset(f"bad circle set {data!r}")
        try:
            return cls.finite(Fraction(a) for a in data)
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise InvalidSubset(f"bad angle in {data!r}: {exc}") from None


EMPTY_CIRCLE = CircleSet()
FULL_CIRCLE = CircleSet.full()


# -- points and subsets ----------------------------------------------------------

class GammaPoint(NamedTuple):
    tail: frozenset


class BVPoint(NamedTuple):
    vertex: str


class TauPoint(NamedTuple):
    tail: frozenset
    angle: Fraction


@dataclass(frozen=True)
class PrimSubset:
    """Gamma-tail points, breaking-vertex points, and circle sets per tau-tail.

    Tails are keyed by their vertex sets.  Empty circle sets are dropped, so
    equality is structural.
    """

    gamma: frozenset = frozenset()
    bv: frozenset = frozenset()
    tau: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "gamma", frozenset(frozenset(t) for t in self.gamma))
        object.__setattr__(self, "bv", frozenset(self.bv))
        tau = {}
        for tail, circle in dict(self.tau).items():
            if not circle.is_empty:
                tau[frozenset(tail)] = circle
        object.__setattr__(self, "tau", tau)

    __hash__ = None

    @classmethod
    def of(cls, *points):
        gamma, bv, tau = set(), set(), {}
        for p in points:
            if isinstance(p, GammaPoint):
                gamma.add(p.tail)
            elif isinstance(p, BVPoint):
                bv.add(p.vertex)
            elif isinstance(p, TauPoint):
                key = frozenset(p.tail)
                tau[key] = tau.get(key, EMPTY_CIRCLE) | CircleSet.finite([p.angle])
            else:
                raise TypeError(f"not a Prim point: {p!r}")
        return cls(gamma, bv, tau)

    def is_empty(self):
        return not (self.gamma or self.bv or self.tau)

    def __or__(self, other):
        tau = dict(self.tau)
        for tail, circle in other.tau.items():
            tau[tail] = tau.get(tail, EMPTY_CIRCLE) | circle
        return PrimSubset(self.gamma | other.gamma, self.bv | other.bv, tau)

    def __le__(self, other):
        return (
            self.gamma <= other.gamma
            and self.bv <= other.bv
            and all(c <= other.tau.get(t, EMPTY_CIRCLE) for t, c in self.tau.items())
        )

    def to_json(self):
        return {
            "gamma": sorted((sorted(t) for t in self.gamma), key=lambda l: (len(l), l)),
            "bv": sorted(self.bv),
            "tau": [
                {"tail": sorted(t), "circle": self.tau[t].to_json()}
                for t in sorted(self.tau, key=vertex_key)
            ],
        }

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, Mapping):
            raise InvalidSubset("a Prim subset must be a JSON object")
        unknown = set(data) - {"gamma", "bv", "tau"}
        if unknown:
            raise InvalidSubset(f"unknown keys {sorted(unknown)}")
        try:
            tau = {}
            for entry in data.get("tau", ()):
                tail = frozenset(entry["tail"])
                circle = CircleSet.from_json(entry.get("circle", "full"))
                tau[tail] = tau.get(tail, EMPTY_CIRCLE) | circle
            return cls(
                frozenset(frozenset(t) for t in data.get("gamma", ())),
                frozenset(data.get("bv", ())),
                tau,
            )
        except (KeyError, TypeError, AttributeError) as exc:
            raise InvalidSubset(f"malformed Prim subset: {exc}") from None


# -- the space --------------------------------------------------------------------

class _Space(NamedTuple):
    gamma: tuple  # (tail mask, Ω(M)^∅_inf mask)
    bv: tuple  # vertex indices
    tau: tuple  # (tail mask, loop mask)


@lru_cache(maxsize=2048)
def _space(g):
    gamma, tau = [], []
    for m in tail_masks(g):
        kind, loop = classify_mask(g, m)
        if kind is TailKind.GAMMA:
            gamma.append((m, h_empty_inf_mask(g, g.full_mask & ~m)))
        else:
            tau.append((m, loop))
    bvm = breaking_vertices_mask(g)
    bv = tuple(i for i in range(len(g)) if bvm >> i & 1)
    return _Space(tuple(gamma), bv, tuple(tau))


def prim_space(g: WeightedGraph, max_vertices=DEFAULT_MAX_VERTICES) -> PrimSubset:
    check_size(g, max_vertices)
    sp = _space(g)
    return PrimSubset(
        frozenset(g.unmask(m) for m, _ in sp.gamma),
        frozenset(g.vertices[i] for i in sp.bv),
        {g.unmask(m): FULL_CIRCLE for m, _ in sp.tau},
    )


def _validate(g, S, sp):
    gamma_tails = {g.unmask(m) for m, _ in sp.gamma}
    tau_tails = {g.unmask(m) for m, _ in sp.tau}
    bv = {g.vertices[i] for i in sp.bv}
    for t in S.gamma:
        if t not in gamma_tails:
            raise InvalidSubset(f"{sorted(t)} is not a gamma tail")
    for v in S.bv:
        if v not in bv:
            raise InvalidSubset(f"{v!r} is not a breaking vertex")
    for t in S.tau:
        if t not in tau_tails:
            raise InvalidSubset(f"{sorted(t)} is not a tau tail")


def _absorbs_tail(g, m, empty_inf, union):
    """Tail ``m`` lies in ``union`` and its Ω^∅_inf is empty or sends infinitely many edges there."""
    if m & ~union:
        return False
    return not empty_inf or g.count_into(empty_inf, union) == INF


def _absorbs_vertex(g, i, union):
    return bool(union >> i & 1) and g.count_into(1 << i, union) == INF


def _loop_reaches(g, src, dst):
    down = g.masks.down
    return any(down[i] & dst for i in range(len(g)) if src >> i & 1)


def closure(g: WeightedGraph, S: PrimSubset, max_vertices=DEFAULT_MAX_VERTICES) -> PrimSubset:
    """Hull-kernel closure of ``S``.

    The closure of a union is the union of closures, so the gamma, breaking
    vertex, and tau parts of ``S`` are closed separately and merged.
    """
    check_size(g, max_vertices)
    sp = _space(g)
    _validate(g, S, sp)
    gamma, bv, tau = set(), set(), {}

    def add_tau(m, circle):
        tau[m] = tau.get(m, EMPTY_CIRCLE) | circle

    if S.gamma:
        ux = 0
        for t in S.gamma:
            ux |= g.mask(t)
        given = {g.mask(t) for t in S.gamma}
        for m, empty_inf in sp.gamma:
            if m in given or _absorbs_tail(g, m, empty_inf, ux):
                gamma.add(m)
        bv.update(i for i in sp.bv if _absorbs_vertex(g, i, ux))
        for m, _ in sp.tau:
            if not m & ~ux:
                add_tau(m, FULL_CIRCLE)

    if S.bv:
        common = g.full_mask
        for v in S.bv:
            common &= omega_mask(g, 1 << g.index(v))
        z = g.full_mask & ~common
        given = {g.index(v) for v in S.bv}
        for m, empty_inf in sp.gamma:
            if _absorbs_tail(g, m, empty_inf, z):
                gamma.add(m)
        bv.update(i for i in sp.bv if i in given or _absorbs_vertex(g, i, z))
        for m, _ in sp.tau:
            if not m & ~z:
                add_tau(m, FULL_CIRCLE)

    if S.tau:
        loops = dict(sp.tau)
        Y = {g.mask(t): circle for t, circle in S.tau.items()}
        ymin = {
            u for u in Y
            if not any(_loop_reaches(g, loops[u], loops[w]) for w in Y if w != u)
        }
        yinf = {
            u for u in Y
            if not any(_loop_reaches(g, loops[u], loops[w]) for w in ymin)
        }
        u_min = u_inf = 0
        for u in ymin:
            u_min |= u
        for u in yinf:
            u_inf |= u
        for m, empty_inf in sp.gamma:
            if (yinf and _absorbs_tail(g, m, empty_inf, u_inf)) or (
                ymin and _absorbs_tail(g, m, empty_inf, u_min)
            ):
                gamma.add(m)
        bv.update(
            i for i in sp.bv
            if _absorbs_vertex(g, i, u_inf) or _absorbs_vertex(g, i, u_min)
        )
        for m, _ in sp.tau:
            if yinf and not m & ~u_inf:
                add_tau(m, FULL_CIRCLE)
            elif m not in ymin and ymin and not m & ~u_min:
                add_tau(m, FULL_CIRCLE)
            elif m in ymin:
                add_tau(m, Y[m].closure())

    return PrimSubset(
        frozenset(g.unmask(m) for m in gamma),
        frozenset(g.vertices[i] for i in bv),
        {g.unmask(m): c for m, c in tau.items()},
    )


def complement(g: WeightedGraph, S: PrimSubset, max_vertices=DEFAULT_MAX_VERTICES) -> PrimSubset:
    space = prim_space(g, max_vertices)
    tau = {}
    for tail in space.tau:
        circle = S.tau.get(tail, EMPTY_CIRCLE)
        if circle.is_empty:
            tau[tail] = FULL_CIRCLE
        elif not circle.is_full:
            raise UnrepresentableComplement(
                f"complement of a finite circle set over {sorted(tail)} is cofinite"
            )
    return PrimSubset(space.gamma - S.gamma, space.bv - S.bv, tau)


def is_closed(g: WeightedGraph, S: PrimSubset, max_vertices=DEFAULT_MAX_VERTICES) -> bool:
    return closure(g, S, max_vertices) == S


def is_clopen(g: WeightedGraph, S: PrimSubset, max_vertices=DEFAULT_MAX_VERTICES) -> bool:
    rest = complement(g, S, max_vertices)
    return is_closed(g, S, max_vertices) and is_closed(g, rest, max_vertices)


# -- T1 deciders ------------------------------------------------------------------

class BreakingVertexWitness(NamedTuple):
    vertex: str

    def to_json(self):
        return {"type": "breaking_vertex", "vertex": self.vertex}


class TailPairWitness(NamedTuple):
    smaller: frozenset
    larger: frozenset
    reason: str  # "EmptyOmegaInf" or "InfiniteEdgeCount"

    def to_json(self):
        return {
            "type": "tail_pair",
            "smaller": sorted(self.smaller),
            "larger": sorted(self.larger),
            "reason": self.reason,
        }


class T1Verdict(NamedTuple):
    t1: bool
    witnesses: tuple

    def to_json(self):
        return {"t1": self.t1, "witnesses": [w.to_json() for w in self.witnesses]}


@lru_cache(maxsize=2048)
def _t1_check(g):
    witnesses = []
    bvm = breaking_vertices_mask(g)
    witnesses += [
        BreakingVertexWitness(g.vertices[i]) for i in range(len(g)) if bvm >> i & 1
    ]
    tails = tail_masks(g)
    for m in tails:
        for n in tails:
            if m == n or m & ~n:
                continue
            empty_inf = h_empty_inf_mask(g, g.full_mask & ~m)
            if not empty_inf:
                reason = "EmptyOmegaInf"
            elif g.count_into(empty_inf, n) == INF:
                reason = "InfiniteEdgeCount"
            else:
                continue
            witnesses.append(TailPairWitness(g.unmask(m), g.unmask(n), reason))
    return T1Verdict(not witnesses, tuple(witnesses))


def t1_check(g: WeightedGraph, max_vertices=DEFAULT_MAX_VERTICES) -> T1Verdict:
    """No breaking vertices, and every strict inclusion M ⊊ N of tails has
    Ω(M)^∅_inf nonempty with finitely many edges into N.

    Each failure is reported as a witness.
    """
    check_size(g, max_vertices)
    return _t1_check(g)


def t1_check_via_lattice(g: WeightedGraph, max_vertices=DEFAULT_MAX_VERTICES) -> bool:
    check_size(g, max_vertices)
    if breaking_vertices_mask(g):
        return False
    images = []
    for m in tail_masks(g):
        ideal = tail_ideal(g, g.unmask(m))
        if not is_maximal_gauge_invariant(g, ideal, max_vertices):
            return False
        images.append(ideal)
    if len(set(images)) != len(images):
        return False
    maximal = {
        J for J in enumerate_ideals(g, max_vertices)
        if is_maximal_gauge_invariant(g, J, max_vertices)
    }
    return maximal == set(images)


PROBE_ANGLES = (Fraction(0), Fraction(1, 4))


def singleton_probes(g: WeightedGraph, angles=PROBE_ANGLES):
    sp = _space(g)
    points = [GammaPoint(g.unmask(m)) for m, _ in sp.gamma]
    points += [BVPoint(g.vertices[i]) for i in sp.bv]
    points += [TauPoint(g.unmask(m), a) for m, _ in sp.tau for a in angles]
    return points


def t1_check_via_closure(g: WeightedGraph, max_vertices=DEFAULT_MAX_VERTICES, angles=PROBE_ANGLES) -> bool:
    """Every probed one-point set is its own closure."""
    check_size(g, max_vertices)
    for p in singleton_probes(g, angles):
        S = PrimSubset.of(p)
        if closure(g, S, max_vertices) != S:
            return False
    return True


# -- hull-kernel oracle under condition (K) ---------------------------------------

def point_ideal(g: WeightedGraph, p) -> GaugeInvariantIdeal:
    """The gauge-invariant primitive ideal of a gamma or breaking-vertex point."""
    if isinstance(p, GammaPoint):
        return tail_ideal(g, p.tail)
    if isinstance(p, BVPoint):
        om = omega_mask(g, 1 << g.index(p.vertex))
        fin = h_fin_inf_mask(g, om) & ~(1 << g.index(p.vertex))
        return GaugeInvariantIdeal(g.unmask(om), g.unmask(fin))
    raise TypeError("tau points have no gauge-invariant ideal")


def upset(g: WeightedGraph, ideal: GaugeInvariantIdeal, max_vertices=DEFAULT_MAX_VERTICES) -> PrimSubset:
    """All primitive ideals containing ``ideal``.

    A tau point ``(N, t)`` contains a gauge-invariant ideal exactly when the
    ideal of ``N`` does, so tau tails enter with the full circle or not at all.
    """
    space = prim_space(g, max_vertices)
    gamma = {t for t in space.gamma if ideal_leq(g, ideal, point_ideal(g, GammaPoint(t)))}
    bv = {v for v in space.bv if ideal_leq(g, ideal, point_ideal(g, BVPoint(v)))}
    tau = {t: FULL_CIRCLE for t in space.tau if ideal_leq(g, ideal, tail_ideal(g, t))}
    return PrimSubset(frozenset(gamma), frozenset(bv), tau)


def closure_oracle_conditionK(g: WeightedGraph, S: PrimSubset, max_vertices=DEFAULT_MAX_VERTICES) -> PrimSubset:
    """Closure as the set of points whose ideal contains the ideal of some point of ``S``.

    Under condition (K) every primitive ideal is gauge-invariant, and a
    primitive ideal contains a finite intersection iff it contains a member.
    """
    if not condition_K(g):
        raise ConditionKRequired("the hull-kernel oracle needs condition (K)")
    check_size(g, max_vertices)
    _validate(g, S, _space(g))
    sources = [point_ideal(g, GammaPoint(t)) for t in S.gamma]
    sources += [point_ideal(g, BVPoint(v)) for v in S.bv]
    out = PrimSubset()
    for ideal in sources:
        out = out | upset(g, ideal, max_vertices)
    return out
