"""Plain-text sequence and system files.

Sequence file: one word per line, ``w_0`` first; an empty line is the empty
word; the trailing newline is optional.

System file::

    axiom: ab
    a -> b
    b -> 

with exactly one space on each side of ``->``; the successor may be empty.
"""

from __future__ import annotations

from .errors import ParseError
from .lsystem import D0LSystem, as_sequence

ARROW = " -> "


def parse_sequence(text: str):
    if text.endswith("\n"):
        text = text[:-1]
    lines = text.split("\n")
    for n, line in enumerate(lines, 1):
        if line.endswith("\r"):
            raise ParseError("carriage return in word", n)
    if len(lines) < 2:
        raise ParseError("need at least two words (w_0 and w_1)", len(lines))
    return as_sequence(lines)


def serialize_sequence(theta) -> str:
    return "".join(w + "\n" for w in theta)


def parse_system(text: str) -> D0LSystem:
    if text.endswith("\n"):
        text = text[:-1]
    lines = text.split("\n")
    head = lines[0]
    if not head.startswith("axiom:"):
        raise ParseError("first line must be 'axiom: <word>'", 1)
    rest = head[len("axiom:") :]
    if rest and not rest.startswith(" "):
        raise ParseError("expected a space after 'axiom:'", 1)
    axiom = rest[1:]
    prods = {}
    for n, line in enumerate(lines[1:], 2):
        if line[1:] == ARROW.rstrip():
            line += " "  # empty successor written without the trailing space
        if len(line) < len(ARROW) + 1 or line[1:5] != ARROW:
            raise ParseError(f"expected '<symbol> -> <word>', got {line!r}", n)
        symbol, successor = line[0], line[5:]
        if symbol in prods:
            raise ParseError(f"second production for {symbol!r}", n)
        prods[symbol] = successor
    return D0LSystem(axiom, prods)


def serialize_system(system: D0LSystem) -> str:
    lines = [f"axiom: {system.axiom}"]
    lines += [f"{a}{ARROW}{x}" for a, x in sorted(system.productions.items())]
    return "\n".join(lines) + "\n"
