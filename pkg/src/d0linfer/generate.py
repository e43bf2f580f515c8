"""Seeded random D0L-systems and their traces."""

from __future__ import annotations

import string

import numpy as np

from .errors import GenerationFailed, InvalidInput
from .lsystem import D0LSystem, derive_step

MAX_RETRIES = 1000


def _random_word(rng, symbols, length):
    return "".join(symbols[t] for t in rng.integers(0, len(symbols), size=length))


def gen_random_instance(
    alphabet_size: int,
    max_successor_length: int,
    steps: int,
    word_length_cap: int,
    seed=None,
    max_axiom_length: int = 3,
):
    """Sample a total D0L-system and derive ``steps`` steps from it.

    Successor lengths are uniform over ``0..max_successor_length`` and the
    axiom has between 1 and ``max_axiom_length`` symbols. A draw is rejected
    and redrawn when some word exceeds ``word_length_cap`` or a word before
    the last one is empty.

    Returns ``(system, theta)``. ``seed`` may be an int or a
    ``numpy.random.Generator``.
    """
    if alphabet_size < 1 or alphabet_size > len(string.ascii_lowercase):
        raise InvalidInput("alphabet_size must be between 1 and 26")
    if steps < 1:
        raise InvalidInput("steps must be at least 1")
    if max_successor_length < 0 or word_length_cap < 1:
        raise InvalidInput("negative successor length or empty word cap")
    rng = np.random.default_rng(seed)
    symbols = string.ascii_lowercase[:alphabet_size]

    for _ in range(MAX_RETRIES):
        prods = {
            a: _random_word(rng, symbols, int(rng.integers(0, max_successor_length + 1)))
            for a in symbols
        }
        axiom = _random_word(rng, symbols, int(rng.integers(1, max_axiom_length + 1)))
        system = D0LSystem(axiom, prods, alphabet=frozenset(symbols))
        trace = [axiom]
        ok = len(axiom) <= word_length_cap
        while ok and len(trace) <= steps:
            nxt = derive_step(system, trace[-1])
            if len(nxt) > word_length_cap or (nxt == "" and len(trace) < steps):
                ok = False
            trace.append(nxt)
        if ok:
            return system, tuple(trace)
    raise GenerationFailed(f"no acceptable trace after {MAX_RETRIES} draws")


def perturb(theta, seed=None):
    """Apply one random edit (substitute, insert or delete a symbol) to some w_{i+1}.

    The result is usually, but not always, incompatible with every D0L-system.
    """
    rng = np.random.default_rng(seed)
    theta = list(theta)
    symbols = sorted(set("".join(theta))) or ["a"]
    i = int(rng.integers(1, len(theta)))
    w = theta[i]
    ops = ["insert"] + (["substitute", "delete"] if w else [])
    op = ops[int(rng.integers(0, len(ops)))]
    if op == "insert":
        pos = int(rng.integers(0, len(w) + 1))
        theta[i] = w[:pos] + symbols[int(rng.integers(0, len(symbols)))] + w[pos:]
    elif op == "delete":
        pos = int(rng.integers(0, len(w)))
        theta[i] = w[:pos] + w[pos + 1 :]
    else:
        pos = int(rng.integers(0, len(w)))
        alt = [s for s in symbols if s != w[pos]] or [w[pos]]
        theta[i] = w[:pos] + alt[int(rng.integers(0, len(alt)))] + w[pos + 1 :]
    return tuple(theta)
