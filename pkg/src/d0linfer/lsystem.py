"""Words, D0L-systems and derivation.

Words are plain ``str`` values; every character is one symbol. Index
arguments of the helpers in this module are 1-based and slices are
end-exclusive, so ``slice_word(S, i, j)`` is ``S[i:j]`` in the notation of
the inference problem, not Python's.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Sequence

from .errors import IndexOutOfRange, InvalidInput, MissingProduction

WordSequence = tuple  # tuple[str, ...] holding (w_0, ..., w_m)


def slice_word(word: str, i: int, j: int) -> str:
    """Return ``word[i:j]`` with 1-based, end-exclusive indices.

    Valid arguments satisfy ``1 <= i <= j <= len(word) + 1``; ``i == j``
    gives the empty word and ``j == len(word) + 1`` gives the suffix from i.
    """
    if not 1 <= i <= j <= len(word) + 1:
        raise IndexOutOfRange(f"slice [{i}:{j}] outside word of length {len(word)}")
    return word[i - 1 : j - 1]


def symbol_at(word: str, i: int) -> str:
    if not 1 <= i <= len(word):
        raise IndexOutOfRange(f"position {i} outside word of length {len(word)}")
    return word[i - 1]


def as_sequence(words: Sequence[str]) -> WordSequence:
    """Freeze ``words`` into a sequence and check it has at least one step."""
    seq = tuple(words)
    if len(seq) < 2:
        raise InvalidInput("a word sequence needs at least two words (m >= 1)")
    for w in seq:
        if not isinstance(w, str):
            raise InvalidInput(f"words must be str, got {type(w).__name__}")
    return seq


def predecessor_symbols(theta: Sequence[str]) -> frozenset:
    """Symbols of w_0 ... w_{m-1}; the last word contributes nothing."""
    return frozenset("".join(theta[:-1]))


@dataclass(frozen=True)
class D0LSystem:
    """A deterministic context-free L-system ``(alphabet, axiom, productions)``.

    The production map may be partial. When ``alphabet`` is omitted it is
    taken to be every symbol occurring in the axiom, the predecessors and
    the successors.
    """

    axiom: str
    productions: Mapping[str, str]
    alphabet: frozenset = field(default=None)

    def __post_init__(self):
        prods = dict(self.productions)
        for a, x in prods.items():
            if not (isinstance(a, str) and len(a) == 1):
                raise InvalidInput(f"predecessor must be a single symbol, got {a!r}")
            if not isinstance(x, str):
                raise InvalidInput(f"successor of {a!r} must be a word")
        alphabet = self.alphabet
        if alphabet is None:
            alphabet = set(self.axiom) | set(prods) | set("".join(prods.values()))
        alphabet = frozenset(alphabet)
        used = set(self.axiom) | set(prods) | set("".join(prods.values()))
        if not used <= alphabet:
            raise InvalidInput(f"symbols {sorted(used - alphabet)} not in alphabet")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "productions", MappingProxyType(dict(sorted(prods.items()))))

    def successor(self, symbol: str) -> str:
        try:
            return self.productions[symbol]
        except KeyError:
            raise MissingProduction(symbol) from None

    def __eq__(self, other):
        if not isinstance(other, D0LSystem):
            return NotImplemented
        return (
            self.axiom == other.axiom
            and dict(self.productions) == dict(other.productions)
            and self.alphabet == other.alphabet
        )

    def __hash__(self):
        return hash((self.axiom, tuple(self.productions.items()), self.alphabet))

    def __repr__(self):
        rules = ", ".join(f"{a}->{x!r}" for a, x in self.productions.items())
        return f"D0LSystem(axiom={self.axiom!r}, {{{rules}}})"


def derive_step(system: D0LSystem, word: str) -> str:
    """Rewrite every symbol of ``word`` in parallel."""
    return "".join(system.successor(a) for a in word)


def derive_trace(system: D0LSystem, m: int) -> WordSequence:
    """Return the trace ``(w_0, ..., w_m)`` starting from the axiom."""
    if m < 1:
        raise InvalidInput("m must be at least 1")
    trace = [system.axiom]
    for _ in range(m):
        trace.append(derive_step(system, trace[-1]))
    return tuple(trace)


def is_compatible(system: D0LSystem, theta: Sequence[str]) -> bool:
    """True iff ``system`` generates ``theta`` as its trace.

    Missing productions make the sequence incompatible rather than raising.
    """
    theta = tuple(theta)
    if len(theta) < 2 or system.axiom != theta[0]:
        return False
    for w, nxt in zip(theta, theta[1:]):
        try:
            if derive_step(system, w) != nxt:
                return False
        except MissingProduction:
            return False
    return True
