import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from graphprim import (
    TailKind,
    classify_tail,
    is_isolated,
    is_maximal_tail,
    maximal_tails,
    omega,
    parse_graph,
    t1_check,
    tails_containing,
    vertex_profile,
    y_inf,
    y_min,
)
from graphprim.errors import NotATail, NotT1
from graphprim.fixtures import random_graph
from graphprim.graph import LoopClass
from graphprim.tails import tail_ideal


def _sets(tails):
    return [M.vertices for M in tails]


def test_tails_infsink(named):
    assert _sets(maximal_tails(named["FX_INFSINK"])) == [{"w"}, {"s", "w"}]


def test_tails_bv(named):
    tails = maximal_tails(named["FX_BV"])
    assert _sets(tails) == [{"v"}, {"a", "v"}]
    assert tails[0].kind is TailKind.TAU and tails[0].loop == {"v"}
    assert tails[1].kind is TailKind.GAMMA


def test_tails_fork(named):
    assert _sets(maximal_tails(named["FX_FORK"])) == [{"a", "b"}, {"a", "c"}]


def test_two_tau(named):
    tails = maximal_tails(named["FX_2TAU"])
    assert [(M.kind, M.loop) for M in tails] == [
        (TailKind.TAU, {"a"}),
        (TailKind.TAU, {"b"}),
    ]


def test_classify_tail_tau(named):
    assert classify_tail(named["FX_TAU"], {"a"}) == (TailKind.TAU, {"a"})
    assert classify_tail(named["FX_TAU"], {"a", "b"})[0] is TailKind.GAMMA


def test_not_a_tail(named):
    assert not is_maximal_tail(named["FX_LINE"], {"b"})
    with pytest.raises(NotATail):
        classify_tail(named["FX_LINE"], {"b"})


def test_tail_ideal_infsink(named):
    ideal = tail_ideal(named["FX_INFSINK"], {"w"})
    assert ideal.H == {"s"} and ideal.B == frozenset()


def test_tails_containing(named):
    above = tails_containing(named["FX_INFSINK"], {"w"})
    assert _sets(above) == [{"w"}, {"s", "w"}]


def test_isolated_mixed(named):
    assert is_isolated(named["FX_MIXED"], {"d", "b"})


def test_y_min_and_y_inf_two_tau(named):
    g = named["FX_2TAU"]
    Y = maximal_tails(g)
    assert _sets(y_min(g, Y)) == [{"a", "b"}]
    assert y_inf(g, Y) == []


def test_y_sets_single_and_empty(named):
    g = named["FX_TAU"]
    Y = [maximal_tails(g)[0]]
    assert y_min(g, Y) == Y
    assert y_inf(g, Y) == []
    assert y_min(g, []) == [] and y_inf(g, []) == []


def test_y_sets_reject_gamma(named):
    g = named["FX_FORK"]
    with pytest.raises(NotATail):
        y_min(g, maximal_tails(g))


@pytest.mark.parametrize(
    "name, M, expected",
    [
        ("FX_FORK", {"a", "b"}, [{"a", "b"}]),
        ("FX_TAU", {"a"}, [{"a"}, {"a", "b"}]),
        ("FX_BV", {"v", "a"}, [{"a", "v"}]),
    ],
)
def test_tails_containing_examples(named, name, M, expected):
    assert _sets(tails_containing(named[name], M)) == expected


def test_isolated_private_vertex(named):
    g = named["FX_FORK"]
    assert all(is_isolated(g, M) for M in maximal_tails(g))


def test_isolated_requires_t1(named):
    with pytest.raises(NotT1):
        is_isolated(named["FX_TAU"], {"a"})


def test_isolation_edge_clause(named):
    from graphprim.tails import _isolated_by_edges, as_tail

    # {w} has no private vertex; w sends infinitely many edges into {s, w}
    g = named["FX_INFSINK"]
    assert not _isolated_by_edges(g, as_tail(g, {"w"}))
    # no infinite emitter of M avoids M, so the clause cannot hold
    g = named["FX_FORK"]
    assert not _isolated_by_edges(g, as_tail(g, {"a", "b"}))


# -- properties ----------------------------------------------------------------

seeds = st.integers(0, 10**6)


@settings(max_examples=120)
@given(seeds)
def test_tails_match_oracle(seed):
    g = random_graph(random.Random(seed))
    tails = maximal_tails(g)
    assert set(_sets(tails)) == set(oracle.tails(g))
    for M in tails:
        kind, loop = oracle.tail_kind(g, M.vertices)
        assert M.kind.value == kind
        assert M.loop == loop


@settings(max_examples=120)
@given(seeds)
def test_tail_ideal_is_complement(seed):
    g = random_graph(random.Random(seed))
    for M in maximal_tails(g):
        assert omega(g, M.vertices) == frozenset(g.vertices) - M.vertices


@settings(max_examples=120)
@given(seeds)
def test_vertex_tail_criterion(seed):
    g = random_graph(random.Random(seed))
    tails = set(_sets(maximal_tails(g)))
    for v in g.vertices:
        p = vertex_profile(g, v)
        special = p.is_sink or p.is_infinite_emitter or p.simple_loop_class is not LoopClass.ZERO
        complement = frozenset(g.vertices) - omega(g, {v})
        assert (complement in tails) == special


@settings(max_examples=120)
@given(seeds)
def test_isolation_edge_clause_matches_oracle(seed):
    from graphprim.tails import _isolated_by_edges

    g = random_graph(random.Random(seed))
    for M in maximal_tails(g):
        empty = oracle.h_empty(g, frozenset(g.vertices) - M.vertices)
        above = set().union(*(N for N in oracle.tails(g) if M.vertices <= N))
        expected = bool(empty) and oracle.count(g, empty, above) < float("inf")
        assert _isolated_by_edges(g, M) == expected


@settings(max_examples=120)
@given(seeds)
def test_sink_or_loop_tails_are_isolated(seed):
    g = random_graph(random.Random(seed))
    if not t1_check(g).t1:
        return
    for M in maximal_tails(g):
        if any(
            vertex_profile(g, v).is_sink or vertex_profile(g, v).simple_loop_class is not LoopClass.ZERO
            for v in M.vertices
        ):
            assert is_isolated(g, M)
