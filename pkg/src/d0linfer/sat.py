"""CNF encoding of "the characteristic graph has an independent set of size k".

Variable t+1 stands for vertex t. Each edge (u, v) contributes ``-u -v``,
forbidding both ends, and each clique contributes one clause asking for at
least one of its vertices. Edges inside a clique already allow at most one,
and the k cliques partition the vertices, so models are exactly the size-k
independent sets. This clause schema is one valid choice of MIS-to-SAT
reduction, not a canonical one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IncompleteModel, InstanceTooLarge, ParseError

SWEEP_CAP = 16


@dataclass(frozen=True)
class CnfFormula:
    var_count: int
    clauses: tuple

    def __post_init__(self):
        for clause in self.clauses:
            if not clause:
                raise ValueError("empty clause")
            if len(set(clause)) != len(clause):
                raise ValueError(f"duplicate literal in {clause}")
            if any(lit == 0 or abs(lit) > self.var_count for lit in clause):
                raise ValueError(f"literal out of range in {clause}")


@dataclass(frozen=True)
class VarMap:
    vertices: tuple  # CGVertex per variable, variable t+1 -> vertices[t]

    def var(self, vertex) -> int:
        return self.vertices.index(tuple(vertex)) + 1

    def vertex(self, var: int):
        return self.vertices[var - 1]

    def __len__(self):
        return len(self.vertices)


def encode(G):
    clauses = [(-(u + 1), -(v + 1)) for u, v in G.edges()]
    clauses += [tuple(t + 1 for t in G.clique_range(c)) for c in range(G.k)]
    return CnfFormula(G.n, tuple(clauses)), VarMap(tuple(G.vertices))


def write_dimacs(formula: CnfFormula, comments=()) -> str:
    lines = [f"c {line}" for line in comments]
    lines.append(f"p cnf {formula.var_count} {len(formula.clauses)}")
    lines += [" ".join(map(str, clause)) + " 0" for clause in formula.clauses]
    return "\n".join(lines) + "\n"


def theta_comments(theta) -> list:
    return ["independent set of size k in the characteristic graph of"] + [
        f"w_{i} = {w!r}" for i, w in enumerate(theta)
    ]


def parse_dimacs(text: str) -> CnfFormula:
    header = None
    literals = []
    for n, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"bad header {line!r}", n)
            header = (int(parts[2]), int(parts[3]))
            continue
        if header is None:
            raise ParseError("clause before the 'p cnf' header", n)
        try:
            literals += [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer literal in {line!r}", n) from None
    if header is None:
        raise ParseError("missing 'p cnf' header")
    clauses, current = [], []
    for lit in literals:
        if lit == 0:
            clauses.append(tuple(current))
            current = []
        else:
            current.append(lit)
    if current:
        raise ParseError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise ParseError(f"header announces {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(clauses))


UNSAT = "UNSATISFIABLE"


def parse_model(text: str):
    """Parse a solver's answer.

    Returns ``UNSAT`` for an ``s UNSATISFIABLE`` line, otherwise a dict
    ``{var: bool}`` built from the signed literals (plain lines or ``v``
    lines; ``c`` and ``s SATISFIABLE`` lines are ignored).
    """
    assignment = {}
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("s"):
            status = line[1:].strip().upper()
            if status == UNSAT:
                return UNSAT
            if status != "SATISFIABLE":
                raise ParseError(f"unknown status {line!r}", n)
            continue
        if line.startswith("v"):
            line = line[1:]
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", n) from None
            if lit != 0:
                if assignment.get(abs(lit), lit > 0) != (lit > 0):
                    raise ParseError(f"variable {abs(lit)} assigned both ways", n)
                assignment[abs(lit)] = lit > 0
    return assignment


def decode_model(varmap: VarMap, assignment) -> frozenset:
    """Vertex indices whose variables are true. The assignment must cover every variable."""
    missing = [v for v in range(1, len(varmap) + 1) if v not in assignment]
    if missing:
        raise IncompleteModel(f"no value for variables {missing[:10]}")
    return frozenset(v - 1 for v in range(1, len(varmap) + 1) if assignment[v])


def satisfying_assignments(formula: CnfFormula, cap: int = SWEEP_CAP) -> np.ndarray:
    """Every model of ``formula``, found by trying all 2^n assignments.

    Returns packed integers with variable t+1 in bit t, ascending.
    """
    n = formula.var_count
    if n > cap:
        raise InstanceTooLarge(f"assignment sweep limited to {cap} variables, got {n}")
    xs = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(xs.size, dtype=bool)
    for clause in formula.clauses:
        sat = np.zeros(xs.size, dtype=bool)
        for lit in clause:
            bit = (xs >> (abs(lit) - 1)) & 1
            sat |= bit.astype(bool) if lit > 0 else ~bit.astype(bool)
        ok &= sat
    return xs[ok]


def assignment_from_int(x: int, n: int) -> dict:
    return {v: bool(x >> (v - 1) & 1) for v in range(1, n + 1)}
