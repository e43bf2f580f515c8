"""QUBO form of maximum independent set with a size-k penalty.

Bit vectors are integer numpy arrays with ``x[t] = 1`` when vertex t is
selected. When a bit vector is packed into an integer, vertex t is bit t
(least significant first).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InstanceTooLarge, InvalidInput
from .mis import as_adjacency

BRUTE_FORCE_CAP = 20
DEFAULT_LAMBDA = 2.0


@dataclass(frozen=True)
class PenaltyConfig:
    lam: float = DEFAULT_LAMBDA
    k: int = 0

    def __post_init__(self):
        if self.lam < 0:
            raise InvalidInput("penalty weight must be nonnegative")


def build_qubo(G) -> np.ndarray:
    """-1 on the diagonal, 1 on every edge (both orientations), 0 elsewhere."""
    Q = as_adjacency(G).astype(np.int64)
    np.fill_diagonal(Q, -1)
    return Q


def _bits(Q, x):
    x = np.asarray(x, dtype=np.int64)
    if x.shape != (Q.shape[0],):
        raise DimensionMismatch(f"bit vector of shape {x.shape} for a {Q.shape[0]}x{Q.shape[0]} QUBO")
    return x


def qubo_value(Q, x) -> int:
    x = _bits(Q, x)
    return int(x @ Q @ x)


def penalized_cost(Q, cfg: PenaltyConfig, x) -> float:
    """``x'Qx + lam * (sum(x) - k)**2``, the penalty kept in unexpanded form."""
    x = _bits(Q, x)
    return float(x @ Q @ x) + cfg.lam * float(x.sum() - cfg.k) ** 2


def int_to_bits(value: int, n: int) -> np.ndarray:
    return (value >> np.arange(n)) & 1


def bits_to_int(x) -> int:
    return int(sum(int(b) << t for t, b in enumerate(x)))


def bitstring(x) -> str:
    """Printable form, vertex 0 rightmost, e.g. ``[1, 0, 0] -> '001'``."""
    return "".join(str(int(b)) for b in reversed(list(x)))


def all_costs(Q, cfg: PenaltyConfig) -> np.ndarray:
    """Penalized cost of every bit vector, indexed by its integer value.

    Built one vertex at a time: adding vertex t to x changes x'Qx by
    ``Q[t, t] + 2 * sum_{u < t} Q[t, u] x_u``.
    """
    n = Q.shape[0]
    values = np.zeros(1, dtype=np.int64)
    popcount = np.zeros(1, dtype=np.int64)
    for t in range(n):
        size = 1 << t
        idx = np.arange(size)
        gain = np.full(size, Q[t, t], dtype=np.int64)
        for u in np.flatnonzero(Q[t, :t]):
            gain += 2 * Q[t, u] * ((idx >> u) & 1)
        values = np.concatenate([values, values + gain])
        popcount = np.concatenate([popcount, popcount + 1])
    return values.astype(float) + cfg.lam * (popcount - cfg.k).astype(float) ** 2


def brute_min(Q, cfg: PenaltyConfig, cap: int = BRUTE_FORCE_CAP):
    """Exhaustive minimum of the penalized cost; ties go to the lowest integer value.

    Returns ``(bits, cost)``.
    """
    n = Q.shape[0]
    if n > cap:
        raise InstanceTooLarge(f"exhaustive QUBO search limited to {cap} variables, got {n}")
    costs = all_costs(Q, cfg)
    best = int(np.argmin(costs))  # argmin returns the first, i.e. lowest, index
    return int_to_bits(best, n), float(costs[best])


def to_json(Q, cfg: PenaltyConfig) -> str:
    doc = {
        "dimension": int(Q.shape[0]),
        "rows": Q.astype(int).tolist(),
        "lambda": cfg.lam,
        "k": cfg.k,
        "bit_order": "bit t is vertex index t (least significant first)",
    }
    return json.dumps(doc, indent=1) + "\n"
