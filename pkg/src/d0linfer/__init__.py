"""Inference of deterministic L-systems through maximum independent sets.

A word sequence is turned into its characteristic graph, whose size-k
independent sets are exactly the compatible D0L-systems. The graph can be
solved exactly, with a simulated QAOA circuit over a penalized QUBO, or
exported as CNF for a SAT solver.
"""

from .chargraph import CGVertex, CharacteristicGraph, GraphStats, build, cross_edge, target_k
from .errors import D0LError
from .generate import gen_random_instance
from .lsystem import D0LSystem, derive_step, derive_trace, is_compatible, slice_word
from .oracle import oracle_infer
from .pipeline import (
    InferenceResult,
    classical_d0l_solver,
    extract_system,
    quant_infer_d0l,
    sat_infer_d0l,
    verify,
)
from .qaoa import QaoaParams
from .textio import parse_sequence, parse_system, serialize_system

__all__ = [
    "CGVertex",
    "CharacteristicGraph",
    "D0LError",
    "D0LSystem",
    "GraphStats",
    "InferenceResult",
    "QaoaParams",
    "build",
    "classical_d0l_solver",
    "cross_edge",
    "derive_step",
    "derive_trace",
    "extract_system",
    "gen_random_instance",
    "is_compatible",
    "oracle_infer",
    "parse_sequence",
    "parse_system",
    "quant_infer_d0l",
    "sat_infer_d0l",
    "serialize_system",
    "slice_word",
    "target_k",
    "verify",
]
