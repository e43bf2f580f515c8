import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from d0linfer.chargraph import CGVertex, build
from d0linfer.errors import IncompleteModel, InstanceTooLarge, ParseError
from d0linfer.mis import is_independent, iter_k_independent_sets
from d0linfer.sat import (
    UNSAT,
    CnfFormula,
    assignment_from_int,
    decode_model,
    encode,
    parse_dimacs,
    parse_model,
    satisfying_assignments,
    theta_comments,
    write_dimacs,
)

from corpus import random_instances


def test_encode_examples():
    formula, varmap = encode(build(("ab", "ba")))
    assert formula.var_count == 6 and len(formula.clauses) == 14
    assert sum(len(c) == 2 and c[0] < 0 for c in formula.clauses) == 12
    formula, _ = encode(build(("a", "a")))
    assert formula == CnfFormula(1, ((1,),))
    formula, _ = encode(build(("aa", "ab")))
    assert satisfying_assignments(formula).size == 0


def test_dimacs_examples():
    formula, _ = encode(build(("ab", "ba")))
    text = write_dimacs(formula, theta_comments(("ab", "ba")))
    assert "p cnf 6 14" in text.splitlines()
    assert parse_dimacs(text) == formula
    single = write_dimacs(encode(build(("a", "a")))[0])
    assert single == "p cnf 1 1\n1 0\n"


@pytest.mark.parametrize(
    "text",
    ["1 0\n", "p cnf 2 1\n1 2\n", "p cnf 2 2\n1 0\n", "p dnf 1 1\n1 0\n", "p cnf 1 1\nx 0\n"],
)
def test_parse_dimacs_errors(text):
    with pytest.raises(ParseError):
        parse_dimacs(text)


def test_formula_validation():
    with pytest.raises(ValueError):
        CnfFormula(2, ((3,),))
    with pytest.raises(ValueError):
        CnfFormula(2, ((),))


def test_decode_examples():
    G = build(("ab", "ba"))
    _, varmap = encode(G)
    picks = [CGVertex(0, 1, 1, 2), CGVertex(0, 2, 2, 3)]
    model = {v: varmap.vertex(v) in picks for v in range(1, 7)}
    assert sorted(G.vertex(t) for t in decode_model(varmap, model)) == picks
    assert decode_model(varmap, {v: False for v in range(1, 7)}) == frozenset()
    with pytest.raises(IncompleteModel):
        decode_model(varmap, {1: True})
    formula, _ = encode(G)
    valid = set(iter_k_independent_sets(G))
    for x in satisfying_assignments(formula):
        assert decode_model(varmap, assignment_from_int(int(x), 6)) in valid


def test_parse_model():
    assert parse_model("s UNSATISFIABLE\n") == UNSAT
    assert parse_model("s SATISFIABLE\nv 1 -2\nv 3 0\n") == {1: True, 2: False, 3: True}
    assert parse_model("c comment\n-1 2 0\n") == {1: False, 2: True}
    with pytest.raises(ParseError):
        parse_model("1 -1 0\n")
    with pytest.raises(ParseError):
        parse_model("v 1 x\n")
    with pytest.raises(ParseError):
        parse_model("s MAYBE\n")


def test_sweep_cap():
    with pytest.raises(InstanceTooLarge):
        satisfying_assignments(CnfFormula(17, ((1,),)))


def test_models_are_exactly_the_size_k_independent_sets():
    checked = 0
    for _, theta in random_instances():
        G = build(theta)
        if G.n > 12:
            continue
        formula, varmap = encode(G)
        assert len(formula.clauses) == G.edge_count + G.k
        models = {decode_model(varmap, assignment_from_int(int(x), G.n)) for x in satisfying_assignments(formula)}
        sets = {frozenset(c) for c in itertools.combinations(range(G.n), G.k) if is_independent(G, c)}
        assert models == sets, theta
        checked += 1
    assert checked > 30


@settings(max_examples=40, deadline=None)
@given(st.lists(st.text(alphabet="ab", min_size=1, max_size=3), min_size=2, max_size=2))
def test_dimacs_round_trip(theta):
    formula, _ = encode(build(theta))
    assert parse_dimacs(write_dimacs(formula, theta_comments(theta))) == formula
