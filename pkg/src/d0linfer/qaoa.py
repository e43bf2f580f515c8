"""State-vector simulation of QAOA on the penalized QUBO cost.

The cost Hamiltonian is diagonal in the computational basis, so it is kept
as a table of its diagonal: ``table[x]`` is the penalized cost of the bit
vector packed in x (qubit t = bit t = vertex t). This drops the Hamiltonian's
constant term, which only changes the global phase.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import InvalidInput, QubitCapExceeded
from .mis import SolveOutcome, is_independent
from .qubo import PenaltyConfig, all_costs, build_qubo, int_to_bits

QUBIT_CAP = 24


@dataclass
class QaoaParams:
    """Circuit and optimizer settings.

    ``p=None`` picks ``max(1, ceil(log2(n)))`` layers. Missing ``gamma`` or
    ``beta`` are drawn uniformly from [0, pi) and [0, pi/2) using ``seed``.
    With ``shot_based`` the optimizer descends on sampled cost averages
    instead of the exact expectation.
    """

    p: Optional[int] = None
    gamma: Optional[np.ndarray] = None
    beta: Optional[np.ndarray] = None
    lam: float = 2.0
    shots: int = 512
    iters: int = 100
    eta: float = 0.05
    fd_step: float = 1e-3
    seed: Optional[int] = 0
    qubit_cap: int = QUBIT_CAP
    shot_based: bool = False

    def __post_init__(self):
        if self.p is not None and self.p < 0:
            raise InvalidInput("p must be nonnegative")
        if self.shots < 1:
            raise InvalidInput("shots must be at least 1")
        if self.iters < 0:
            raise InvalidInput("iters must be nonnegative")
        if self.fd_step <= 0:
            raise InvalidInput("fd_step must be positive")


def default_layers(n: int) -> int:
    return max(1, math.ceil(math.log2(n))) if n > 1 else 1


def _check_cap(n, cap=QUBIT_CAP):
    if n > cap:
        raise QubitCapExceeded(
            f"{n} qubits exceed the simulator cap of {cap}; use the exact classical solver"
        )


def build_cost_table(Q, cfg: PenaltyConfig, qubit_cap: int = QUBIT_CAP) -> np.ndarray:
    _check_cap(Q.shape[0], qubit_cap)
    return all_costs(Q, cfg)


def init_plus(n: int, qubit_cap: int = QUBIT_CAP) -> np.ndarray:
    _check_cap(n, qubit_cap)
    return np.full(1 << n, 2.0 ** (-n / 2), dtype=complex)


def apply_cost_phase(psi, table, gamma) -> np.ndarray:
    return psi * np.exp(-1j * gamma * np.asarray(table))


def apply_mixer(psi, beta) -> np.ndarray:
    """RX(2 beta) on every qubit."""
    psi = np.asarray(psi, dtype=complex)
    n = psi.size.bit_length() - 1
    c, s = math.cos(beta), -1j * math.sin(beta)
    out = psi.copy()
    for q in range(n):
        view = out.reshape(-1, 2, 1 << q)
        zero, one = view[:, 0, :].copy(), view[:, 1, :].copy()
        view[:, 0, :] = c * zero + s * one
        view[:, 1, :] = s * zero + c * one
    return out


def run_circuit(n, table, gamma, beta, qubit_cap: int = QUBIT_CAP) -> np.ndarray:
    gamma, beta = np.atleast_1d(gamma), np.atleast_1d(beta)
    if gamma.shape != beta.shape:
        raise InvalidInput("gamma and beta must have the same length")
    psi = init_plus(n, qubit_cap)
    for g, b in zip(gamma, beta):
        psi = apply_mixer(apply_cost_phase(psi, table, g), b)
    return psi


def probabilities(psi) -> np.ndarray:
    return np.abs(psi) ** 2


def expectation(psi, table) -> float:
    return float(probabilities(psi) @ np.asarray(table))


def sample(psi, shots, rng) -> np.ndarray:
    """Measure ``shots`` times; returns the packed integer outcomes."""
    probs = probabilities(psi)
    probs = probs / probs.sum()
    return rng.choice(probs.size, size=shots, p=probs)


def fd_gradient(f, theta, h) -> np.ndarray:
    """Central finite-difference gradient of ``f`` at ``theta``."""
    theta = np.asarray(theta, dtype=float)
    grad = np.zeros_like(theta)
    for t in range(theta.size):
        step = np.zeros_like(theta)
        step[t] = h
        grad[t] = (f(theta + step) - f(theta - step)) / (2 * h)
    return grad


def initial_angles(p, rng):
    gamma = rng.uniform(0.0, math.pi, size=p)
    beta = rng.uniform(0.0, math.pi / 2, size=p)
    return gamma, beta


@dataclass
class _Tracker:
    table: np.ndarray
    best_cost: float = math.inf
    best_state: Optional[int] = None

    def observe(self, outcomes):
        costs = self.table[outcomes]
        t = int(np.argmin(costs))
        if costs[t] < self.best_cost:
            self.best_cost, self.best_state = float(costs[t]), int(outcomes[t])


def optimize(table, params: QaoaParams, rng=None, tracker=None):
    """Subgradient-style descent on the 2p circuit angles.

    Each of the ``iters`` steps moves the angles by ``-eta`` times a central
    finite-difference gradient. The steps are not guaranteed to descend, so
    the best iterate seen (including the last) is returned, as is usual for
    subgradient methods.

    Returns ``(gamma, beta, history)``. ``history`` holds one record per
    iterate, ``iters + 1`` in total, with the exact expectation and the
    objective value used for selection (sampled when ``shot_based``).
    """
    table = np.asarray(table, dtype=float)
    n = table.size.bit_length() - 1
    rng = np.random.default_rng(params.seed) if rng is None else rng
    p = default_layers(n) if params.p is None else params.p
    gamma, beta = initial_angles(p, rng)
    if params.gamma is not None:
        gamma = np.array(params.gamma, dtype=float)
    if params.beta is not None:
        beta = np.array(params.beta, dtype=float)
    if gamma.shape != (p,) or beta.shape != (p,):
        raise InvalidInput(f"expected {p} gamma and beta angles")

    def exact(theta):
        return expectation(run_circuit(n, table, theta[:p], theta[p:], params.qubit_cap), table)

    def sampled(theta):
        psi = run_circuit(n, table, theta[:p], theta[p:], params.qubit_cap)
        outcomes = sample(psi, params.shots, rng)
        if tracker is not None:
            tracker.observe(outcomes)
        return float(table[outcomes].mean())

    objective = sampled if params.shot_based else exact
    theta = np.concatenate([gamma, beta])
    history = []
    best_value, best_theta = math.inf, theta
    for t in range(params.iters + 1):
        value = objective(theta)
        history.append(
            {
                "iteration": t,
                "objective": value,
                "expectation": value if not params.shot_based else exact(theta),
                "gamma": theta[:p].tolist(),
                "beta": theta[p:].tolist(),
            }
        )
        if value < best_value:
            best_value, best_theta = value, theta
        if t < params.iters:
            theta = theta - params.eta * fd_gradient(objective, theta, params.fd_step)
    return best_theta[:p].copy(), best_theta[p:].copy(), history


def trace_json(history) -> str:
    return json.dumps(history, indent=1) + "\n"


@dataclass(frozen=True)
class QaoaOutcome(SolveOutcome):
    cost: float = math.inf
    independent: bool = False
    gamma: tuple = ()
    beta: tuple = ()
    uniform_expectation: float = math.nan
    final_expectation: float = math.nan
    history: list = field(default_factory=list, compare=False)


def modified_qaoa_mis_solver(G, k: int, p: Optional[int] = None, params: Optional[QaoaParams] = None) -> QaoaOutcome:
    """Search for a size-k independent set with QAOA on the penalized cost.

    After optimizing the angles, ``shots`` samples are drawn from the final
    state; the lowest-cost bit vector seen anywhere in the run is returned
    as a vertex set. Nothing guarantees it is independent; ``independent``
    and ``cost`` say what was found.
    """
    params = QaoaParams() if params is None else params
    Q = build_qubo(G)
    n = Q.shape[0]
    _check_cap(n, params.qubit_cap)
    if p is not None:
        params = QaoaParams(**{**params.__dict__, "p": p})
    table = build_cost_table(Q, PenaltyConfig(params.lam, k), params.qubit_cap)
    rng = np.random.default_rng(params.seed)
    tracker = _Tracker(table)
    gamma, beta, history = optimize(table, params, rng, tracker)
    psi = run_circuit(n, table, gamma, beta, params.qubit_cap)
    tracker.observe(sample(psi, params.shots, rng))
    x = int_to_bits(tracker.best_state, n)
    chosen = frozenset(np.flatnonzero(x).tolist())
    return QaoaOutcome(
        set=chosen,
        exact=False,
        cost=tracker.best_cost,
        independent=is_independent(Q > 0, chosen),
        gamma=tuple(gamma.tolist()),
        beta=tuple(beta.tolist()),
        uniform_expectation=float(table.mean()),
        final_expectation=expectation(psi, table),
        history=history,
    )
