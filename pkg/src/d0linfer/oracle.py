"""Direct backtracking inference, used as an independent check on the graph route.

Nothing here touches the characteristic graph. The search walks every step
``w_i -> w_{i+1}`` position by position and tries each way of cutting the
next block off ``w_{i+1}``, keeping a single symbol -> successor map shared
by all steps.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import InstanceTooLarge
from .lsystem import D0LSystem, as_sequence

INFEASIBLE = None

DEFAULT_BUDGET = 2_000_000


class _Search:
    def __init__(self, theta, budget):
        self.theta = theta
        self.budget = budget
        self.nodes = 0
        # (step, position) pairs flattened in step-major order
        self.cells = [(i, j) for i in range(len(theta) - 1) for j in range(len(theta[i]))]

    def _tick(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise InstanceTooLarge(f"oracle search exceeded {self.budget} nodes")

    def _fits(self, i, j, offset, bind):
        # the successors still to place must fit in what is left of w_{i+1}
        word, nxt = self.theta[i], self.theta[i + 1]
        left = len(nxt) - offset
        need = 0
        all_bound = True
        for a in word[j:]:
            x = bind.get(a)
            if x is None:
                all_bound = False
            else:
                need += len(x)
        return need <= left if not all_bound else need == left

    def solutions(self) -> Iterator[dict]:
        yield from self._walk(0, 0, {})

    def _walk(self, cell, offset, bind):
        self._tick()
        if cell == len(self.cells):
            yield dict(bind)
            return
        i, j = self.cells[cell]
        word, nxt = self.theta[i], self.theta[i + 1]
        if j == 0:
            offset = 0
        if not self._fits(i, j, offset, bind):
            return
        a = word[j]
        last = j == len(word) - 1
        known = bind.get(a)
        if known is not None:
            if nxt.startswith(known, offset) and (not last or offset + len(known) == len(nxt)):
                yield from self._walk(cell + 1, offset + len(known), bind)
            return
        ends = [len(nxt)] if last else range(offset, len(nxt) + 1)
        for end in ends:
            bind[a] = nxt[offset:end]
            yield from self._walk(cell + 1, end, bind)
            del bind[a]


def _check(theta):
    theta = as_sequence(theta)
    for i in range(len(theta) - 1):
        if theta[i] == "" and theta[i + 1] != "":
            return theta, False
    return theta, True


def oracle_infer(theta: Sequence[str], budget: int | None = DEFAULT_BUDGET):
    """Return some D0L-system compatible with ``theta``, or ``None``.

    Raises InstanceTooLarge when more than ``budget`` search nodes are visited.
    """
    theta, ok = _check(theta)
    if not ok:
        return INFEASIBLE
    for bind in _Search(theta, budget).solutions():
        return D0LSystem(theta[0], bind)
    return INFEASIBLE


def oracle_all(theta: Sequence[str], budget: int | None = DEFAULT_BUDGET) -> list:
    """Every distinct compatible production map over the symbols of w_0..w_{m-1}."""
    theta, ok = _check(theta)
    if not ok:
        return []
    seen = {}
    for bind in _Search(theta, budget).solutions():
        key = tuple(sorted(bind.items()))
        seen.setdefault(key, D0LSystem(theta[0], bind))
    return list(seen.values())


def oracle_feasible(theta: Sequence[str], budget: int | None = DEFAULT_BUDGET) -> bool:
    return oracle_infer(theta, budget) is not None
