"""Seeded instance families shared by the unit and acceptance tests."""

from functools import lru_cache
from itertools import product

import numpy as np

from d0linfer.generate import gen_random_instance, perturb

CORPUS_SEED = 2024


@lru_cache(maxsize=None)
def random_instances(count=500, seed=CORPUS_SEED):
    """(system, theta) pairs: alphabet 1-4, successors up to 1-3, 1-4 steps, words <= 60."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        alphabet = int(rng.integers(1, 5))
        max_succ = int(rng.integers(1, 4))
        steps = int(rng.integers(1, 5))
        out.append(gen_random_instance(alphabet, max_succ, steps, 60, rng))
    return tuple(out)


@lru_cache(maxsize=None)
def perturbed_instances(count=500, seed=CORPUS_SEED + 1):
    rng = np.random.default_rng(seed)
    return tuple(perturb(theta, rng) for _, theta in random_instances(count, seed + 100))


def words(alphabet="ab", min_len=1, max_len=3):
    for n in range(min_len, max_len + 1):
        for t in product(alphabet, repeat=n):
            yield "".join(t)


@lru_cache(maxsize=None)
def exhaustive_family():
    """Every (w_0, w_1) over {a, b} with 1 <= |w_0|, |w_1| <= 3."""
    return tuple((u, v) for u in words() for v in words())


def random_adjacency(n, p, rng):
    upper = np.triu(rng.random((n, n)) < p, 1)
    return upper | upper.T
