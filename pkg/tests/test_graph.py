import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from graphprim import (
    INF,
    LoopClass,
    WeightedGraph,
    condition_K,
    edge_count_into,
    parse_graph,
    reaches,
    render_graph,
    vertex_profile,
)
from graphprim.errors import (
    DuplicateEdge,
    MalformedLine,
    UnknownToken,
    UnknownVertex,
    ZeroMultiplicity,
)


@st.composite
def graphs(draw, max_vertices=6):
    n = draw(st.integers(1, max_vertices))
    names = [f"v{i}" for i in range(n)]
    pairs = draw(st.sets(st.tuples(st.sampled_from(names), st.sampled_from(names))))
    edges = {p: draw(st.sampled_from([1, 2, 3, INF])) for p in sorted(pairs)}
    return WeightedGraph.build(names, edges)


# -- parsing -------------------------------------------------------------------

def test_parse_isolated_vertex():
    g = parse_graph("vertex a")
    assert g.vertices == ("a",)
    assert g.edges == ()


def test_parse_bv_fixture(named):
    g = named["FX_BV"]
    assert g.vertices == ("v", "a")
    assert g.m("v", "v") == 1
    assert g.m("v", "a") == INF
    assert g.m("a", "v") == 0


@pytest.mark.parametrize("text", ["a -> b x inf", "a -> b xinf", "a->b xinf"])
def test_parse_inf_spellings(text):
    assert parse_graph(text).m("a", "b") == INF


def test_parse_comments_and_blank_lines():
    g = parse_graph("# header\n\na -> b x3  # three edges\nvertex c\n")
    assert g.vertices == ("a", "b", "c")
    assert g.m("a", "b") == 3


def test_zero_multiplicity_rejected():
    with pytest.raises(ZeroMultiplicity):
        parse_graph("a -> b x0")


@pytest.mark.parametrize(
    "text, exc",
    [
        ("a -> -> b", MalformedLine),
        ("vertex", MalformedLine),
        ("vertex a b", MalformedLine),
        ("a -> b xfoo", UnknownToken),
        ("edge a b", UnknownToken),
        ("a -> b x1\na -> b x2", DuplicateEdge),
    ],
)
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_graph(text)


def test_parse_error_reports_line():
    with pytest.raises(ZeroMultiplicity) as info:
        parse_graph("vertex a\na -> a x0")
    assert info.value.lineno == 2


@given(graphs())
def test_render_parse_roundtrip(g):
    assert parse_graph(render_graph(g)) == g


def test_edge_to_undeclared_vertex():
    with pytest.raises(UnknownVertex):
        WeightedGraph(("a",), (("a", "b", 1),))


# -- reachability ----------------------------------------------------------------

def test_reaches_line(named):
    g = named["FX_LINE"]
    assert reaches(g, "a", "b")
    assert not reaches(g, "b", "a")
    assert reaches(g, "b", "b")


def test_reaches_unknown_vertex(named):
    with pytest.raises(UnknownVertex):
        reaches(named["FX_LINE"], "a", "zz")


@settings(max_examples=60)
@given(graphs())
def test_reaches_is_preorder_and_matches_bfs(g):
    V = g.vertices
    for u in V:
        assert reaches(g, u, u)
        for v in V:
            assert reaches(g, u, v) == oracle.geq(g, u, v)
            for w in V:
                if reaches(g, u, v) and reaches(g, v, w):
                    assert reaches(g, u, w)


# -- profiles and counts -------------------------------------------------------

def test_profile_point(named):
    assert vertex_profile(named["FX_POINT"], "a") == (True, False, LoopClass.ZERO)


def test_profile_loop2(named):
    assert vertex_profile(named["FX_LOOP2"], "a").simple_loop_class is LoopClass.MANY


def test_profile_bv(named):
    assert vertex_profile(named["FX_BV"], "v") == (False, True, LoopClass.ONE)


def test_profile_inf_on_cycle():
    g = parse_graph("a -> b xinf\nb -> a x1")
    assert vertex_profile(g, "a").simple_loop_class is LoopClass.MANY


def test_edge_count_into(named):
    g = named["FX_BV"]
    assert edge_count_into(g, "v", {"v", "a"}) == INF
    assert edge_count_into(g, "v", {"v"}) == 1
    assert edge_count_into(g, "v", set()) == 0


def test_condition_K(named):
    assert not condition_K(named["FX_LOOP1"])
    assert condition_K(named["FX_LOOP2"])
    assert condition_K(named["FX_POINT"])


@settings(max_examples=80)
@given(graphs(max_vertices=5))
def test_loop_class_matches_edge_enumeration(g):
    for v in g.vertices:
        expected = ("zero", "one", "many")[oracle.simple_loops(g, v)]
        assert vertex_profile(g, v).simple_loop_class.value == expected


@given(graphs())
def test_infinite_emitter_iff_infinite_count(g):
    for v in g.vertices:
        inf_emitter = vertex_profile(g, v).is_infinite_emitter
        assert inf_emitter == (edge_count_into(g, v, g.vertices) == INF)


@settings(max_examples=60)
@given(graphs(), st.randoms(use_true_random=False))
def test_loop_class_invariant_under_relabeling(g, rnd):
    perm = list(g.vertices)
    rnd.shuffle(perm)
    rename = dict(zip(g.vertices, (f"u{p[1:]}" for p in perm)))
    h = WeightedGraph.build(
        [rename[v] for v in g.vertices],
        {(rename[s], rename[r]): k for s, r, k in g.edges},
    )
    for v in g.vertices:
        assert vertex_profile(g, v) == vertex_profile(h, rename[v])
