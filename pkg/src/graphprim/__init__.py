"""Primitive ideal spaces of graph C*-algebras for finitely presented graphs.

Decides the T1 property of Prim C*(E) (with witnesses), computes its
hull-kernel closure symbolically, and derives clopen points, Kirchberg
decompositions, AF quotients and the fibers over the one-point
compactification of N.
"""
from .classify import (
    af_quotient,
    c_ntilde_structure,
    clopen_report,
    discreteness_report,
    kirchberg_decomposition,
    pi_ideal_af_quotient,
    purely_infinite_check,
)
from .dot import export_dot
from .errors import *  # noqa: F401,F403
from .fixtures import FIXTURES, ExmClassSpec, fixture, gen_fixture
from .graph import (
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
from .ideals import (
    GaugeInvariantIdeal,
    breaking_vertices,
    enumerate_ideals,
    h_empty_inf,
    h_fin_inf,
    ideal_leq,
    is_hereditary,
    is_maximal_gauge_invariant,
    is_saturated,
    omega,
    sigma_h,
)
from .kernels import BACKEND
from .primtop import (
    BVPoint,
    CircleSet,
    GammaPoint,
    PrimSubset,
    TauPoint,
    closure,
    closure_oracle_conditionK,
    is_clopen,
    is_closed,
    prim_space,
    t1_check,
    t1_check_via_closure,
    t1_check_via_lattice,
)
from .tails import (
    MaximalTail,
    TailKind,
    classify_tail,
    is_isolated,
    is_maximal_tail,
    maximal_tails,
    tails_containing,
    y_inf,
    y_min,
)

__version__ = "0.1.0"
