"""End-to-end inference: sequence -> characteristic graph -> solver -> D0L-system.

Every returned system has been re-derived against the input. Exact
backends answer ``system`` or ``infeasible``; the QAOA backend may also
answer ``unverified`` when its best sample is not a valid selection.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import sat
from .chargraph import CGVertex, GraphStats, build, stats
from .errors import (
    ConflictingProduction,
    D0LError,
    DegenerateSequence,
    IncompatibleModel,
    NotOnePerClique,
    QubitCapExceeded,
)
from .lsystem import D0LSystem, as_sequence, is_compatible, predecessor_symbols, slice_word
from .mis import find_k_is_structured, is_independent, mis_exact
from .qaoa import QaoaParams, modified_qaoa_mis_solver

SYSTEM, INFEASIBLE, UNVERIFIED = "system", "infeasible", "unverified"

EXACT_BACKENDS = ("structured", "generic-mis")


@dataclass
class InferenceResult:
    outcome: str
    solver: str
    system: Optional[D0LSystem] = None
    reason: str = ""
    stats: Optional[GraphStats] = None
    wall_time: float = 0.0
    vertices: tuple = ()
    details: dict = field(default_factory=dict)

    @property
    def feasible(self) -> bool:
        return self.outcome == SYSTEM

    def as_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "solver": self.solver,
            "axiom": self.system.axiom if self.system else None,
            "productions": dict(self.system.productions) if self.system else None,
            "reason": self.reason,
            "stats": self.stats.as_dict() if self.stats else None,
            "wall_time": self.wall_time,
            "vertices": [list(v) for v in self.vertices],
            **self.details,
        }


def verify(theta: Sequence[str], system: D0LSystem) -> bool:
    return is_compatible(system, theta)


def extract_system(theta: Sequence[str], selection) -> D0LSystem:
    """Read productions off one vertex per clique.

    ``selection`` holds ``(i, j, start, end)`` quadruples. Raises
    NotOnePerClique unless every position of w_0..w_{m-1} is covered exactly
    once, and ConflictingProduction if one symbol would get two successors,
    which an independent set never does.
    """
    theta = as_sequence(theta)
    chosen = {}
    for v in map(lambda q: CGVertex(*q), selection):
        if not (0 <= v.i < len(theta) - 1 and 1 <= v.j <= len(theta[v.i])):
            raise NotOnePerClique(f"{v} is not in any clique")
        if (v.i, v.j) in chosen:
            raise NotOnePerClique(f"two vertices selected from clique ({v.i}, {v.j})")
        chosen[(v.i, v.j)] = v
    k = sum(len(w) for w in theta[:-1])
    if len(chosen) != k:
        raise NotOnePerClique(f"{len(chosen)} cliques covered, {k} required")
    prods = {}
    for (i, j), v in sorted(chosen.items()):
        a = theta[i][j - 1]
        x = slice_word(theta[i + 1], v.start, v.end)
        if prods.setdefault(a, x) != x:
            raise ConflictingProduction(f"{a!r} -> {prods[a]!r} and {a!r} -> {x!r}")
    alphabet = predecessor_symbols(theta) | set("".join(prods.values()))
    return D0LSystem(theta[0], prods, alphabet=alphabet)


def _degenerate(theta, solver, t0):
    try:
        build(theta)
    except DegenerateSequence as exc:
        return InferenceResult(INFEASIBLE, solver, reason=str(exc), wall_time=time.perf_counter() - t0)
    return None


def classical_d0l_solver(theta: Sequence[str], backend: str = "structured", budget: Optional[int] = None) -> InferenceResult:
    """Exact inference through a size-k independent set of the characteristic graph."""
    t0 = time.perf_counter()
    theta = as_sequence(theta)
    if backend not in EXACT_BACKENDS:
        raise ValueError(f"unknown exact backend {backend!r}")
    early = _degenerate(theta, backend, t0)
    if early:
        return early
    G = build(theta)
    st = stats(G)
    if backend == "structured":
        found = find_k_is_structured(G, budget)
    else:
        best = mis_exact(G, budget).set
        found = best if len(best) == G.k else None
    if found is None:
        return InferenceResult(
            INFEASIBLE, backend, reason="no independent set of size k", stats=st,
            wall_time=time.perf_counter() - t0,
        )
    verts = tuple(G.vertex(t) for t in sorted(found))
    system = extract_system(theta, verts)
    assert verify(theta, system), "extracted system does not regenerate the sequence"
    return InferenceResult(SYSTEM, backend, system, stats=st, vertices=verts, wall_time=time.perf_counter() - t0)


def quant_infer_d0l(theta: Sequence[str], p: Optional[int] = None, params: Optional[QaoaParams] = None) -> InferenceResult:
    """QAOA inference. The best sample is always checked by re-derivation."""
    t0 = time.perf_counter()
    theta = as_sequence(theta)
    early = _degenerate(theta, "qaoa", t0)
    if early:
        return early
    G = build(theta)
    st = stats(G)
    cap = (params or QaoaParams()).qubit_cap
    if G.n > cap:
        raise QubitCapExceeded(
            f"characteristic graph has {G.n} vertices, above the {cap}-qubit cap; use the exact backend"
        )
    out = modified_qaoa_mis_solver(G, G.k, p, params)
    verts = tuple(G.vertex(t) for t in sorted(out.set))
    details = {
        "cost": out.cost,
        "independent": out.independent,
        "uniform_expectation": out.uniform_expectation,
        "final_expectation": out.final_expectation,
        "history": out.history,
    }

    def unverified(reason, candidate=None):
        return InferenceResult(
            UNVERIFIED, "qaoa", candidate, reason=reason, stats=st, vertices=verts,
            wall_time=time.perf_counter() - t0, details=details,
        )

    try:
        candidate = extract_system(theta, verts)
    except (NotOnePerClique, ConflictingProduction) as exc:
        return unverified(f"best sample (cost {out.cost}) is not a valid selection: {exc}")
    if not verify(theta, candidate):
        return unverified(f"best sample (cost {out.cost}) does not regenerate the sequence", candidate)
    return InferenceResult(
        SYSTEM, "qaoa", candidate, stats=st, vertices=verts,
        wall_time=time.perf_counter() - t0, details=details,
    )


def sat_infer_d0l(theta: Sequence[str], model=None) -> InferenceResult:
    """Inference through the CNF encoding.

    ``model=None`` sweeps all assignments internally (up to ``sat.SWEEP_CAP``
    variables). Otherwise ``model`` is a solver answer, as text or as the
    result of :func:`sat.parse_model`.
    """
    t0 = time.perf_counter()
    theta = as_sequence(theta)
    solver = "sat-internal" if model is None else "sat-model"
    early = _degenerate(theta, solver, t0)
    if early:
        return early
    G = build(theta)
    st = stats(G)
    formula, varmap = sat.encode(G)

    def done(outcome, **kw):
        return InferenceResult(outcome, solver, stats=st, wall_time=time.perf_counter() - t0, **kw)

    if model is None:
        models = sat.satisfying_assignments(formula)
        if models.size == 0:
            return done(INFEASIBLE, reason="formula unsatisfiable (exhaustive sweep)")
        assignment = sat.assignment_from_int(int(models[0]), formula.var_count)
    else:
        try:
            assignment = sat.parse_model(model) if isinstance(model, str) else model
            if assignment == sat.UNSAT:
                return done(INFEASIBLE, reason="solver reported UNSATISFIABLE")
        except D0LError as exc:
            raise IncompatibleModel(f"unreadable model: {exc}") from exc
    try:
        selected = sat.decode_model(varmap, assignment)
    except D0LError as exc:
        raise IncompatibleModel(str(exc)) from exc
    if len(selected) != G.k or not is_independent(G, selected):
        raise IncompatibleModel(
            f"model selects {len(selected)} vertices, need an independent set of size {G.k}"
        )
    verts = tuple(G.vertex(t) for t in sorted(selected))
    try:
        system = extract_system(theta, verts)
    except NotOnePerClique as exc:
        raise IncompatibleModel(str(exc)) from exc
    assert verify(theta, system), "extracted system does not regenerate the sequence"
    return done(SYSTEM, system=system, vertices=verts)
