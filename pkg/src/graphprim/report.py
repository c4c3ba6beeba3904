"""JSON payloads for each analysis, in the shapes the CLI emits."""
from __future__ import annotations

import json

from . import classify
from .errors import PreconditionError
from .ideals import DEFAULT_MAX_VERTICES, enumerate_ideals
from .primtop import closure, prim_space, t1_check
from .tails import maximal_tails


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def tails_payload(g, max_vertices=DEFAULT_MAX_VERTICES):
    return {"tails": [M.to_json() for M in maximal_tails(g, max_vertices)]}


def ideals_payload(g, max_vertices=DEFAULT_MAX_VERTICES):
    return {"ideals": [I.to_json() for I in enumerate_ideals(g, max_vertices)]}


def prim_payload(g, max_vertices=DEFAULT_MAX_VERTICES):
    return {"prim": prim_space(g, max_vertices).to_json()}


def closure_payload(g, S, max_vertices=DEFAULT_MAX_VERTICES):
    cl = closure(g, S, max_vertices)
    return {"input": S.to_json(), "closure": cl.to_json(), "closed": cl == S}


def t1_payload(g, max_vertices=DEFAULT_MAX_VERTICES):
    return t1_check(g, max_vertices).to_json()


def clopen_payload(g, max_vertices=DEFAULT_MAX_VERTICES):
    return {"clopen": [e.to_json() for e in classify.clopen_report(g, max_vertices)]}


def decompose_payload(g, max_vertices=DEFAULT_MAX_VERTICES):
    return {
        "purely_infinite": classify.purely_infinite_check(g, max_vertices),
        "decomposition": classify.kirchberg_decomposition(g, max_vertices).to_json(),
    }


def af_payload(g, max_vertices=DEFAULT_MAX_VERTICES):
    return {"af_quotient": classify.af_quotient(g, max_vertices).to_json()}


def pi_af_payload(g, max_vertices=DEFAULT_MAX_VERTICES):
    return {"pi_af_quotient": classify.pi_ideal_af_quotient(g, max_vertices).to_json()}


def cn_payload(g, max_vertices=DEFAULT_MAX_VERTICES):
    return {"c_ntilde": [f.to_json() for f in classify.c_ntilde_structure(g, max_vertices)]}


def _attempt(fn):
    try:
        return fn()
    except PreconditionError as exc:
        return {"error": type(exc).__name__}


def full_report(g, max_vertices=DEFAULT_MAX_VERTICES):
    """Every analysis at once; parts whose preconditions fail carry ``{"error": <name>}``."""
    return {
        "t1": t1_payload(g, max_vertices),
        "tails": tails_payload(g, max_vertices)["tails"],
        "prim": prim_payload(g, max_vertices)["prim"],
        "clopen": _attempt(lambda: clopen_payload(g, max_vertices)["clopen"]),
        "discreteness": _attempt(lambda: classify.discreteness_report(g, max_vertices)),
        "purely_infinite": classify.purely_infinite_check(g, max_vertices),
        "decomposition": _attempt(
            lambda: classify.kirchberg_decomposition(g, max_vertices).to_json()
        ),
        "af_quotient": _attempt(lambda: classify.af_quotient(g, max_vertices).to_json()),
        "pi_af_quotient": _attempt(
            lambda: classify.pi_ideal_af_quotient(g, max_vertices).to_json()
        ),
        "c_ntilde": _attempt(lambda: cn_payload(g, max_vertices)["c_ntilde"]),
    }
