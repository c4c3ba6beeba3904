"""Graphviz DOT rendering (presentation only)."""
from __future__ import annotations

from .graph import INF, WeightedGraph

_FILL = {0: "white", 1: "lightblue"}


def _quote(v):
    return '"' + str(v).replace('"', '\\"') + '"'


def export_dot(g: WeightedGraph, tails=None) -> str:
    """DOT digraph of ``g``.

    Multiplicities other than 1 become edge labels (``∞`` for INF).  With
    ``tails`` (an iterable of vertex sets or tails), vertices are colored by
    how many tails contain them: light blue for exactly one, orange with a
    double border for several.
    """
    counts = None
    if tails is not None:
        sets = [getattr(t, "vertices", t) for t in tails]
        counts = {v: sum(v in s for s in sets) for v in g.vertices}
    lines = ["digraph G {"]
    for v in g.vertices:
        if counts is None:
            lines.append(f"  {_quote(v)};")
            continue
        c = counts[v]
        attrs = [f'tails="{c}"', "style=filled", f'fillcolor="{_FILL.get(c, "orange")}"']
        if c > 1:
            attrs.append("peripheries=2")
        lines.append(f"  {_quote(v)} [{', '.join(attrs)}];")
    for s, r, k in g.edges:
        label = "" if k == 1 else f' [label="{"∞" if k == INF else k}"]'
        lines.append(f"  {_quote(s)} -> {_quote(r)}{label};")
    lines.append("}")
    return "\n".join(lines) + "\n"
