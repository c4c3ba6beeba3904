"""Named fixture graphs, a seeded random-graph generator, and finite
truncations of the Bratteli-diagram-plus-components construction."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import InvalidSpec
from .graph import INF, WeightedGraph, parse_graph, render_graph
from .ideals import DEFAULT_MAX_VERTICES, hs_masks
from .tails import maximal_tails

FIXTURES = {
    "FX_POINT": "vertex a",
    "FX_LOOP1": "a -> a x1",
    "FX_LOOP2": "a -> a x2",
    "FX_LINE": "a -> b x1",
    "FX_FORK": "a -> b x1\na -> c x1\nb -> b x2\nc -> c x2",
    "FX_INFSINK": "w -> s xinf",
    "FX_BV": "v -> v x1\nv -> a xinf",
    "FX_TAU": "a -> a x1\na -> b x1\nb -> b x2",
    "FX_2TAU": "a -> a x1\nb -> b x1\na -> b x1",
    "FX_MIXED": "d -> b x1\nd -> e x1\nb -> b x2",
    "FX_LADDER3": (
        "w1 -> w2 x1\nw2 -> w3 x1\nw1 -> v1 x1\nw2 -> v2 x1\nw3 -> v3 x1"
    ),
}


def fixture(name: str) -> WeightedGraph:
    return parse_graph(FIXTURES[name])


def random_graph(rng: random.Random, max_vertices=6, density=0.35, weights=(1, 2, INF)):
    """A random graph on 1..max_vertices vertices named v0, v1, ..."""
    n = rng.randint(1, max_vertices)
    names = [f"v{i}" for i in range(n)]
    edges = {}
    for s in names:
        for r in names:
            if rng.random() < density:
                edges[s, r] = rng.choice(weights)
    return WeightedGraph.build(names, edges)


def random_corpus(count=500, seed=20240601, **kwargs):
    rng = random.Random(seed)
    return [random_graph(rng, **kwargs) for _ in range(count)]


# -- truncated Example class -----------------------------------------------------

@dataclass
class ExmClassSpec:
    """Rows ``F^0_1..F^0_n`` of a Bratteli diagram plus components ``G_1..G_n``.

    ``bratteli_edges[k]`` lists ``(i, j, multiplicity)`` for edges from row
    ``k`` vertex ``i`` to row ``k+1`` vertex ``j`` (0-based).  Each row vertex
    ``w`` of row ``k`` gets one connector edge into ``G_k``, landing on
    ``connectors[k][i]`` if given, else on the first vertex of ``G_k``.
    """

    rows: list
    bratteli_edges: list
    components: list
    connectors: list = field(default_factory=list)

    @property
    def levels(self):
        return len(self.rows)

    @classmethod
    def from_json(cls, data):
        try:
            components = [
                c if isinstance(c, WeightedGraph) else parse_graph(c)
                for c in data["components"]
            ]
            return cls(
                rows=list(data["rows"]),
                bratteli_edges=[
                    [tuple(e) for e in level] for level in data.get("bratteli_edges", [])
                ],
                components=components,
                connectors=list(data.get("connectors", [])),
            )
        except (KeyError, TypeError) as exc:
            raise InvalidSpec(f"malformed fixture spec: {exc}") from None


def _row_name(k, i):
    return f"w{k + 1}_{i + 1}"


def _component_name(k, v):
    return f"g{k + 1}_{v}"


def _validate(spec):
    n = spec.levels
    if n < 1 or any(not isinstance(k, int) or k < 1 for k in spec.rows):
        raise InvalidSpec("rows must be a nonempty list of positive integers")
    if len(spec.components) != n:
        raise InvalidSpec(f"need {n} components, got {len(spec.components)}")
    if len(spec.bratteli_edges) != n - 1:
        raise InvalidSpec(f"need {n - 1} Bratteli levels, got {len(spec.bratteli_edges)}")
    for k, comp in enumerate(spec.components):
        if len(comp) == 0:
            raise InvalidSpec(f"component {k + 1} is empty")
        nontrivial = [h for h in hs_masks(comp) if h not in (0, comp.full_mask)]
        if nontrivial:
            raise InvalidSpec(
                f"component {k + 1} has a nontrivial hereditary saturated set "
                f"{sorted(comp.unmask(nontrivial[0]))}"
            )
    for k, level in enumerate(spec.bratteli_edges):
        emitted, received = set(), set()
        for i, j, mult in level:
            if not (0 <= i < spec.rows[k] and 0 <= j < spec.rows[k + 1]):
                raise InvalidSpec(f"Bratteli edge ({i}, {j}) out of range at level {k + 1}")
            if not isinstance(mult, int) or mult < 1:
                raise InvalidSpec("Bratteli multiplicities must be positive integers")
            emitted.add(i)
            received.add(j)
        if emitted != set(range(spec.rows[k])):
            raise InvalidSpec(f"some row-{k + 1} vertex emits no Bratteli edge")
        if received != set(range(spec.rows[k + 1])):
            raise InvalidSpec(f"some row-{k + 2} vertex is not reached")


def gen_fixture(spec: ExmClassSpec, max_vertices=DEFAULT_MAX_VERTICES) -> WeightedGraph:
    """Finite truncation: rows 1..n, components G_1..G_n, one connector per row vertex.

    The last row keeps only its connectors, so the tail made of all rows is
    absent; the tails are exactly ``F^0_1 ∪ .. ∪ F^0_k ∪ G^0_k``.
    """
    _validate(spec)
    vertices, edges = [], {}
    for k, size in enumerate(spec.rows):
        vertices += [_row_name(k, i) for i in range(size)]
    for k, comp in enumerate(spec.components):
        vertices += [_component_name(k, v) for v in comp.vertices]
        for s, r, mult in comp.edges:
            edges[_component_name(k, s), _component_name(k, r)] = mult
    for k, level in enumerate(spec.bratteli_edges):
        for i, j, mult in level:
            key = (_row_name(k, i), _row_name(k + 1, j))
            edges[key] = edges.get(key, 0) + mult
    for k, size in enumerate(spec.rows):
        comp = spec.components[k]
        targets = spec.connectors[k] if k < len(spec.connectors) else None
        for i in range(size):
            target = targets[i] if targets else comp.vertices[0]
            if target not in comp:
                raise InvalidSpec(f"connector target {target!r} not in component {k + 1}")
            edges[_row_name(k, i), _component_name(k, target)] = 1
    g = WeightedGraph.build(vertices, edges)

    expected = []
    for k, comp in enumerate(spec.components):
        rows = {_row_name(j, i) for j in range(k + 1) for i in range(spec.rows[j])}
        expected.append(frozenset(rows | {_component_name(k, v) for v in comp.vertices}))
    found = [M.vertices for M in maximal_tails(g, max_vertices)]
    if sorted(found, key=sorted) != sorted(expected, key=sorted):
        raise InvalidSpec(
            "generated graph does not have the expected tails; got "
            f"{[sorted(t) for t in found]}"
        )
    return g


def exm_chain(n: int, component: str = "g -> g x2") -> ExmClassSpec:
    """n rows of one vertex each in a chain, every component the same graph."""
    return ExmClassSpec(
        rows=[1] * n,
        bratteli_edges=[[(0, 0, 1)] for _ in range(n - 1)],
        components=[parse_graph(component) for _ in range(n)],
    )


__all__ = [
    "FIXTURES",
    "ExmClassSpec",
    "exm_chain",
    "fixture",
    "gen_fixture",
    "random_corpus",
    "random_graph",
    "render_graph",
]
