"""Consequences of the T1 property: clopen tails, discreteness, decompositions.

"Kirchberg" and "AF" are reported as combinatorial certificates: condition
(K) plus a loop in every tail, and a loop-free quotient graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (
    ConditionKRequired,
    GraphPrimError,
    NotPurelyInfinite,
    NotRowFinite,
    NotT1,
)
from .graph import WeightedGraph, condition_K, induced_subgraph, loop_bases, render_graph
from .ideals import (
    DEFAULT_MAX_VERTICES,
    GaugeInvariantIdeal,
    check_size,
    ideal_leq,
    sigma_h,
)
from .primtop import is_clopen, t1_check, upset
from .tails import MaximalTail, TailKind, is_isolated, maximal_tails, tail_ideal


class InconsistentVerdict(GraphPrimError):
    """Two independent computations of the same fact disagree."""


def _require_t1(g, max_vertices):
    if not t1_check(g, max_vertices).t1:
        raise NotT1("the graph is not T1")


def _private_vertices(tails, M):
    others = frozenset().union(*(N.vertices for N in tails if N != M))
    return M.vertices - others


@dataclass(frozen=True)
class ClopenEntry:
    tail: MaximalTail
    clopen: bool
    set_kind: str  # "point" or "circle"

    def to_json(self):
        return {"tail": self.tail.to_json(), "clopen": self.clopen, "set_kind": self.set_kind}


def clopen_report(g: WeightedGraph, max_vertices=DEFAULT_MAX_VERTICES):
    """Whether the set of primitive ideals above each tail's ideal is clopen.

    Decided twice, through :func:`is_isolated` and through the closure
    operator, and the two answers must agree.
    """
    _require_t1(g, max_vertices)
    out = []
    for M in maximal_tails(g, max_vertices):
        isolated = is_isolated(g, M, max_vertices)
        via_closure = is_clopen(g, upset(g, tail_ideal(g, M), max_vertices), max_vertices)
        if isolated != via_closure:
            raise InconsistentVerdict(
                f"tail {sorted(M.vertices)}: isolated={isolated}, clopen={via_closure}"
            )
        kind = "point" if M.kind is TailKind.GAMMA else "circle"
        out.append(ClopenEntry(M, via_closure, kind))
    return out


def discreteness_report(g: WeightedGraph, max_vertices=DEFAULT_MAX_VERTICES):
    _require_t1(g, max_vertices)
    tails = maximal_tails(g, max_vertices)
    return {
        "all_isolated": all(is_isolated(g, M, max_vertices) for M in tails),
        "shape": ["point" if M.kind is TailKind.GAMMA else "circle" for M in tails],
    }


def purely_infinite_check(g: WeightedGraph, max_vertices=DEFAULT_MAX_VERTICES) -> bool:
    """Condition (K) and every maximal tail contains the base of a loop."""
    check_size(g, max_vertices)
    if not condition_K(g):
        return False
    bases = loop_bases(g)
    return all(M.vertices & bases for M in maximal_tails(g, max_vertices))


@dataclass(frozen=True)
class Summand:
    tail: MaximalTail
    ideal: GaugeInvariantIdeal  # kernel of the quotient onto this summand
    quotient_vertices: frozenset
    generators: frozenset  # ΣH of the tail's private vertices

    def to_json(self):
        return {
            "tail": self.tail.to_json(),
            "ideal": self.ideal.to_json(),
            "quotient_vertices": sorted(self.quotient_vertices),
            "summand_generators": sorted(self.generators),
        }


@dataclass(frozen=True)
class DecompositionReport:
    summands: tuple
    exhaustive: bool

    def to_json(self):
        return {
            "summands": [s.to_json() for s in self.summands],
            "exhaustive": self.exhaustive,
        }


def kirchberg_decomposition(g: WeightedGraph, max_vertices=DEFAULT_MAX_VERTICES) -> DecompositionReport:
    _require_t1(g, max_vertices)
    if not purely_infinite_check(g, max_vertices):
        raise NotPurelyInfinite("needs condition (K) and a loop in every tail")
    tails = maximal_tails(g, max_vertices)
    summands = []
    covered = frozenset()
    for M in tails:
        if not is_isolated(g, M, max_vertices):  # pragma: no cover - Prim is discrete here
            raise InconsistentVerdict(f"tail {sorted(M.vertices)} is not isolated")
        gens = sigma_h(g, _private_vertices(tails, M))
        covered |= gens
        summands.append(Summand(M, tail_ideal(g, M), M.vertices, gens))
    exhaustive = sigma_h(g, covered) == frozenset(g.vertices)
    if not exhaustive:
        raise InconsistentVerdict("summands do not exhaust the algebra")
    return DecompositionReport(tuple(summands), exhaustive)


@dataclass(frozen=True)
class QuotientReport:
    generators: frozenset
    ideal: frozenset  # ΣH(generators)
    quotient_graph: WeightedGraph

    def to_json(self):
        q = self.quotient_graph
        return {
            "generators": sorted(self.generators),
            "ideal": sorted(self.ideal),
            "quotient": {
                "vertices": sorted(q.vertices),
                "dsl": render_graph(q) if len(q) else "",
            },
        }


def _loop_free_quotient(g, generators):
    ideal = sigma_h(g, generators)
    quotient = induced_subgraph(g, set(g.vertices) - ideal)
    if loop_bases(quotient):
        raise InconsistentVerdict("quotient graph contains a loop")
    return QuotientReport(frozenset(generators), ideal, quotient)


def af_quotient(g: WeightedGraph, max_vertices=DEFAULT_MAX_VERTICES) -> QuotientReport:
    """Quotient by the ideal generated by vertices lying in exactly one tail."""
    if not g.is_row_finite:
        raise NotRowFinite("the AF quotient is computed for row-finite graphs only")
    _require_t1(g, max_vertices)
    tails = maximal_tails(g, max_vertices)
    single = frozenset(
        v for v in g.vertices if sum(v in M.vertices for M in tails) == 1
    )
    return _loop_free_quotient(g, single)


def pi_ideal_af_quotient(g: WeightedGraph, max_vertices=DEFAULT_MAX_VERTICES) -> QuotientReport:
    """Quotient by the purely infinite ideal generated by all loop bases."""
    if not condition_K(g):
        raise ConditionKRequired("needs condition (K)")
    _require_t1(g, max_vertices)
    return _loop_free_quotient(g, loop_bases(g))


@dataclass(frozen=True)
class Fiber:
    index: object  # int, or "inf" for the point at infinity
    tail: Optional[MaximalTail]
    ideal: GaugeInvariantIdeal
    quotient_vertices: frozenset

    def to_json(self):
        return {
            "index": self.index,
            "tail": None if self.tail is None else self.tail.to_json(),
            "ideal": self.ideal.to_json(),
            "quotient_vertices": sorted(self.quotient_vertices),
        }


def c_ntilde_structure(g: WeightedGraph, max_vertices=DEFAULT_MAX_VERTICES):
    """Fibers over the one-point compactification of N.

    Fiber ``n`` is the direct summand of the n-th isolated tail (tails in
    lexicographic order of their sorted vertex lists), given as the ideal
    generated by its private vertices.  The fiber at infinity is the
    quotient by the sum of those summands; it is zero when that sum is the
    whole vertex set.
    """
    _require_t1(g, max_vertices)
    tails = maximal_tails(g, max_vertices)
    isolated = sorted(
        (M for M in tails if is_isolated(g, M, max_vertices)),
        key=lambda M: sorted(M.vertices),
    )
    fibers = []
    covered = frozenset()
    for n, M in enumerate(isolated, 1):
        private = _private_vertices(tails, M)
        if not private:
            raise InconsistentVerdict(
                f"tail {sorted(M.vertices)} is isolated without a private vertex"
            )
        gens = sigma_h(g, private)
        covered |= gens
        fibers.append(Fiber(n, M, GaugeInvariantIdeal(gens), M.vertices))
    covered = sigma_h(g, covered)
    fibers.append(
        Fiber("inf", None, GaugeInvariantIdeal(covered), frozenset(g.vertices) - covered)
    )
    return fibers
