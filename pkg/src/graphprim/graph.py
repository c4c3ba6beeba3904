"""Finitely presented directed multigraphs and their elementary predicates.

Parallel edges are stored as a multiplicity per ordered vertex pair.  A
multiplicity is a positive ``int`` or :data:`INF` (``math.inf``), so the
usual ``+`` and ``<`` already absorb and compare infinity correctly.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Union

from . import kernels
from .errors import (
    DuplicateEdge,
    MalformedLine,
    UnknownToken,
    UnknownVertex,
    ZeroMultiplicity,
)

INF = math.inf
Multiplicity = Union[int, float]

_ID = r"[A-Za-z0-9_]+"
_VERTEX_RE = re.compile(rf"^vertex\s+({_ID})$")
_EDGE_RE = re.compile(rf"^({_ID})\s*->\s*({_ID})(?:\s+x\s*(\S+))?$")


def check_multiplicity(k) -> Multiplicity:
    if k == INF:
        return INF
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError(f"multiplicity must be a positive int or INF, got {k!r}")
    if k <= 0:
        raise ZeroMultiplicity(f"multiplicity must be positive, got {k}")
    return k


def format_multiplicity(k: Multiplicity) -> str:
    return "inf" if k == INF else str(k)


class _Masks(NamedTuple):
    succ: tuple
    down: tuple  # down[i]: vertices reachable from i (reflexive)
    up: tuple  # up[i]: vertices reaching i (reflexive)
    finite_emitters: int
    infinite_emitters: int
    sinks: int


@dataclass(frozen=True)
class WeightedGraph:
    """A finite vertex set with edge multiplicities in N ∪ {INF}.

    ``edges`` holds ``(source, range, multiplicity)`` triples in canonical
    order (by vertex position); build graphs with :meth:`build` or
    :func:`parse_graph` rather than by hand.
    """

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        index = {}
        for v in self.vertices:
            if v in index:
                raise ValueError(f"duplicate vertex {v!r}")
            index[v] = len(index)
        m = {}
        for s, r, k in self.edges:
            if s not in index or r not in index:
                raise UnknownVertex(f"edge {s}->{r} uses an undeclared vertex")
            if (s, r) in m:
                raise DuplicateEdge(f"edge {s}->{r} declared twice")
            m[s, r] = check_multiplicity(k)
        canonical = tuple(
            sorted(self.edges, key=lambda e: (index[e[0]], index[e[1]]))
        )
        object.__setattr__(self, "edges", canonical)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_m", m)

    @classmethod
    def build(cls, vertices: Iterable = (), edges: Mapping | Iterable = ()) -> "WeightedGraph":
        """Build from an edge mapping ``{(s, r): k}`` or an iterable of triples.

        Endpoints not listed in ``vertices`` are appended in order of first
        appearance.
        """
        if isinstance(edges, Mapping):
            triples = [(s, r, k) for (s, r), k in edges.items()]
        else:
            triples = [tuple(e) for e in edges]
        order = list(dict.fromkeys(vertices))
        seen = set(order)
        for s, r, _ in triples:
            for v in (s, r):
                if v not in seen:
                    seen.add(v)
                    order.append(v)
        return cls(tuple(order), tuple(triples))

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self._index

    def index(self, v) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def m(self, v, w) -> Multiplicity:
        """Number of edges from ``v`` to ``w`` (0 if none)."""
        return self._m.get((v, w), 0)

    def out_edges(self, v):
        self.index(v)
        return [(r, k) for s, r, k in self.edges if s == v]

    def out_degree(self, v) -> Multiplicity:
        return sum((k for _, k in self.out_edges(v)), 0)

    @property
    def is_row_finite(self) -> bool:
        return all(k != INF for _, _, k in self.edges)

    # -- bitmask views ---------------------------------------------------

    def mask(self, vertices: Iterable) -> int:
        out = 0
        for v in vertices:
            out |= 1 << self.index(v)
        return out

    def unmask(self, mask: int) -> frozenset:
        return frozenset(v for i, v in enumerate(self.vertices) if mask >> i & 1)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.vertices)) - 1

    @cached_property
    def masks(self) -> _Masks:
        n = len(self.vertices)
        if n > kernels.MAX_BITS:
            raise ValueError(f"at most {kernels.MAX_BITS} vertices supported")
        succ = [0] * n
        degree = [0] * n
        for s, r, k in self.edges:
            i = self._index[s]
            succ[i] |= 1 << self._index[r]
            degree[i] += k
        down = kernels.reach_masks(n, succ)
        up = [0] * n
        for i in range(n):
            for j in range(n):
                if down[i] >> j & 1:
                    up[j] |= 1 << i
        fin = inf = sinks = 0
        for i, d in enumerate(degree):
            if d == 0:
                sinks |= 1 << i
            elif d == INF:
                inf |= 1 << i
            else:
                fin |= 1 << i
        return _Masks(tuple(succ), tuple(down), tuple(up), fin, inf, sinks)

    def count_into(self, sources_mask: int, targets_mask: int) -> Multiplicity:
        """Total multiplicity of edges from ``sources_mask`` into ``targets_mask``."""
        idx = self._index
        total = 0
        for s, r, k in self.edges:
            if sources_mask >> idx[s] & 1 and targets_mask >> idx[r] & 1:
                total += k
        return total


# -- DSL ---------------------------------------------------------------------

def parse_graph(text: str) -> WeightedGraph:
    """Parse the line-oriented graph DSL.

    ``vertex <id>`` declares a vertex, ``<id> -> <id> x<k>`` declares ``k``
    parallel edges (``x inf`` / ``xinf`` for infinitely many), ``#`` starts a
    comment.  Vertices are ordered by first appearance.
    """
    order: dict = {}
    edges: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" in line:
            match = _EDGE_RE.match(line)
            if match is None:
                raise MalformedLine(f"cannot parse edge statement {line!r}", lineno)
            s, r, token = match.groups()
            k = _parse_multiplicity(token, lineno)
            if (s, r) in edges:
                raise DuplicateEdge(f"edge {s} -> {r} declared twice", lineno)
            order.setdefault(s, None)
            order.setdefault(r, None)
            edges[s, r] = k
        elif line.split()[0] == "vertex":
            match = _VERTEX_RE.match(line)
            if match is None:
                raise MalformedLine(f"cannot parse vertex statement {line!r}", lineno)
            order.setdefault(match.group(1), None)
        else:
            raise UnknownToken(f"unknown statement {line.split()[0]!r}", lineno)
    return WeightedGraph.build(order, edges)


def _parse_multiplicity(token, lineno):
    if token is None:
        return 1
    if token == "inf":
        return INF
    if not token.isdigit():
        raise UnknownToken(f"bad multiplicity {token!r}", lineno)
    k = int(token)
    if k == 0:
        raise ZeroMultiplicity("multiplicity x0 is not allowed", lineno)
    return k


def render_graph(g: WeightedGraph) -> str:
    """Canonical DSL text; ``parse_graph(render_graph(g)) == g``."""
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"{s} -> {r} x{format_multiplicity(k)}" for s, r, k in g.edges]
    return "\n".join(lines) + "\n"


# -- predicates ----------------------------------------------------------------

class LoopClass(str, Enum):
    ZERO = "zero"
    ONE = "one"
    MANY = "many"


class VertexProfile(NamedTuple):
    is_sink: bool
    is_infinite_emitter: bool
    simple_loop_class: LoopClass


def reaches(g: WeightedGraph, v, w) -> bool:
    """``v >= w``: reflexive, so every vertex reaches itself."""
    i, j = g.index(v), g.index(w)
    return bool(g.masks.down[i] >> j & 1)


def edge_count_into(g: WeightedGraph, v, targets: Iterable) -> Multiplicity:
    return g.count_into(1 << g.index(v), g.mask(targets))


def simple_loop_count(g: WeightedGraph, v, cap: int = 2) -> Multiplicity:
    """Number of simple loops based at ``v``, saturating at ``cap``.

    Loops are counted at edge level: a vertex-simple cycle through ``v``
    contributes the product of its multiplicities.
    """
    start = g.index(v)
    out = [[] for _ in g.vertices]
    for s, r, k in g.edges:
        out[g._index[s]].append((g._index[r], k))
    total = 0

    def walk(u, visited, weight):
        nonlocal total
        for w, k in out[u]:
            if w == start:
                total += weight * k
                if total >= cap:
                    return True
            elif not visited >> w & 1:
                if walk(w, visited | 1 << w, weight * k):
                    return True
        return False

    walk(start, 1 << start, 1)
    return min(total, cap)


def vertex_profile(g: WeightedGraph, v) -> VertexProfile:
    i = g.index(v)
    masks = g.masks
    loops = simple_loop_count(g, v)
    loop_class = (LoopClass.ZERO, LoopClass.ONE, LoopClass.MANY)[loops]
    return VertexProfile(
        is_sink=bool(masks.sinks >> i & 1),
        is_infinite_emitter=bool(masks.infinite_emitters >> i & 1),
        simple_loop_class=loop_class,
    )


def loop_bases(g: WeightedGraph) -> frozenset:
    return frozenset(v for v in g.vertices if simple_loop_count(g, v, cap=1))


def condition_K(g: WeightedGraph) -> bool:
    """Every vertex is the base of no simple loop or of at least two."""
    return all(simple_loop_count(g, v) != 1 for v in g.vertices)


def induced_subgraph(g: WeightedGraph, keep: Iterable) -> WeightedGraph:
    keep = set(keep)
    vertices = tuple(v for v in g.vertices if v in keep)
    edges = tuple(e for e in g.edges if e[0] in keep and e[1] in keep)
    return WeightedGraph(vertices, edges)
