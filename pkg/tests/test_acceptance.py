"""Acceptance criteria, one test each, at the stated tolerances.

Every test records a pass/fail line through the ``report`` fixture; the
lines are printed together at the end of the run.
"""

import time

import numpy as np
import pytest

from d0linfer.chargraph import build, stats
from d0linfer.errors import DegenerateSequence
from d0linfer.mis import count_k_independent_sets, is_independent, mis_bruteforce
from d0linfer.oracle import oracle_all, oracle_feasible
from d0linfer.pipeline import INFEASIBLE, SYSTEM, UNVERIFIED, classical_d0l_solver, quant_infer_d0l, sat_infer_d0l, verify
from d0linfer.qaoa import QaoaParams, apply_cost_phase, apply_mixer, build_cost_table, expectation, init_plus, probabilities, run_circuit
from d0linfer.qubo import PenaltyConfig, all_costs, brute_min, build_qubo, int_to_bits
from d0linfer.sat import assignment_from_int, decode_model, encode, satisfying_assignments, write_dimacs

from corpus import exhaustive_family, perturbed_instances, random_adjacency, random_instances

pytestmark = pytest.mark.acceptance


def _graph(theta):
    try:
        return build(theta)
    except DegenerateSequence:
        return None


def _criterion2_family():
    return list(exhaustive_family()) + list(perturbed_instances())


def test_c1_round_trip(report):
    t0 = time.perf_counter()
    ok = 0
    for _, theta in random_instances():
        result = classical_d0l_solver(theta)
        ok += result.outcome == SYSTEM and verify(theta, result.system)
    elapsed = time.perf_counter() - t0
    passed = ok == 500 and elapsed < 60
    report(1, passed, f"{ok}/500 recovered and verified in {elapsed:.2f} s (limit 60 s)")
    assert passed


def test_c2_feasibility_equivalence(report):
    family = _criterion2_family()
    disagree = [theta for theta in family if classical_d0l_solver(theta).feasible != oracle_feasible(theta)]
    infeasible = sum(not oracle_feasible(theta) for theta in family)
    report(2, not disagree, f"{len(disagree)} disagreements on {len(family)} sequences ({infeasible} infeasible)")
    assert not disagree


def test_c3_qubo_minimum_is_mis(report):
    rng = np.random.default_rng(3)
    bad = 0
    for _ in range(100):
        n = int(rng.integers(1, 13))
        adj = random_adjacency(n, float(rng.uniform(0.05, 0.95)), rng)
        Q = build_qubo(adj)
        table = all_costs(Q, PenaltyConfig(0.0, 0))
        x = int(np.argmin(table))
        bad += table[x] != -mis_bruteforce(adj).size or not is_independent(adj, np.flatnonzero(int_to_bits(x, n)))
    report(3, bad == 0, f"{100 - bad}/100 graphs with min x'Qx = -MIS size at an independent argmin")
    assert bad == 0


def test_c4_penalty_correctness(report):
    checked, bad = 0, []
    for theta in _criterion2_family():
        G = _graph(theta)
        if G is None or G.n > 16:
            continue
        checked += 1
        bits, cost = brute_min(build_qubo(G), PenaltyConfig(2.0, G.k))
        S = np.flatnonzero(bits)
        hit = cost == -G.k and len(S) == G.k and is_independent(G, S)
        if hit != oracle_feasible(theta):
            bad.append(theta)
    report(4, not bad, f"{checked - len(bad)}/{checked} graphs with n <= 16: cost -k at a size-k set iff feasible")
    assert not bad


def test_c5_simulator_determinism(report, k3):
    worst_uniform = worst_norm = 0.0
    rng = np.random.default_rng(5)
    for n in range(1, 9):
        table = rng.normal(size=1 << n)
        p = 3
        worst_uniform = max(worst_uniform, np.abs(probabilities(run_circuit(n, table, np.zeros(p), np.zeros(p))) - 2.0**-n).max())
        psi = init_plus(n)
        for g, b in zip(rng.uniform(0, np.pi, p), rng.uniform(0, np.pi / 2, p)):
            psi = apply_mixer(apply_cost_phase(psi, table, g), b)
            worst_norm = max(worst_norm, abs(np.linalg.norm(psi) - 1))
    k3_table = build_cost_table(build_qubo(k3), PenaltyConfig(2.0, 1))
    exp_err = abs(expectation(init_plus(3), k3_table) - 2.0)
    ok = worst_uniform <= 1e-9 and worst_norm <= 1e-9 and exp_err <= 1e-9
    report(5, ok, f"uniform dev {worst_uniform:.1e}, norm dev {worst_norm:.1e}, K3 expectation dev {exp_err:.1e} (tol 1e-9)")
    assert ok


def test_c6_global_phase_invariance(report):
    rng = np.random.default_rng(6)
    worst = 0.0
    for _ in range(50):
        n, p = int(rng.integers(1, 8)), int(rng.integers(1, 4))
        table = rng.integers(-5, 30, size=1 << n).astype(float)
        gamma, beta = rng.uniform(0, np.pi, p), rng.uniform(0, np.pi / 2, p)
        shift = float(rng.uniform(-100, 100))
        a = probabilities(run_circuit(n, table, gamma, beta))
        b = probabilities(run_circuit(n, table + shift, gamma, beta))
        worst = max(worst, float(np.abs(a - b).max()))
    report(6, worst <= 1e-9, f"largest probability change under a constant shift {worst:.1e} (tol 1e-9)")
    assert worst <= 1e-9


def test_c7_qaoa_end_to_end(report):
    theta = ("ab", "ba")
    t0 = time.perf_counter()
    result = quant_infer_d0l(theta, p=3, params=QaoaParams(iters=100, eta=0.05, shots=512, seed=0))
    elapsed = time.perf_counter() - t0
    final, uniform = result.details["final_expectation"], result.details["uniform_expectation"]
    ok = result.outcome == SYSTEM and verify(theta, result.system) and elapsed < 10 and final < uniform
    report(7, ok, f"{result.outcome} {dict(result.system.productions) if result.system else None} in {elapsed:.2f} s; "
                  f"expectation {final:.3f} < {uniform:.3f}")
    assert ok


def test_c8_sat_equivalence(report):
    checked, bad = 0, []
    pool = [theta for _, theta in random_instances()] + _criterion2_family()
    for theta in pool:
        G = _graph(theta)
        if G is None or G.n > 16:
            continue
        checked += 1
        formula, varmap = encode(G)
        models = satisfying_assignments(formula)
        has_set = count_k_independent_sets(G) > 0
        decoded_ok = all(
            len(S) == G.k and is_independent(G, S)
            for S in (decode_model(varmap, assignment_from_int(int(x), G.n)) for x in models[:50])
        )
        if (models.size > 0) != has_set or len(formula.clauses) != G.edge_count + G.k or not decoded_ok:
            bad.append(theta)
    header = write_dimacs(encode(build(("ab", "ba")))[0]).splitlines()[0]
    ok = not bad and header == "p cnf 6 14"
    report(8, ok, f"{checked - len(bad)}/{checked} formulas match; ('ab','ba') header {header!r}")
    assert ok


def test_c9_kl2_bound(report):
    violations = []
    for _, theta in random_instances():
        st = stats(build(theta))
        if not st.kl2_bound_holds:
            violations.append((theta, st.n, st.kl2))
    detail = f"{500 - len(violations)}/500 instances satisfy |V| <= k*l^2"
    if violations:
        theta, n, bound = violations[0]
        detail += f"; e.g. {theta} has |V| = {n} > {bound}"
    report(9, not violations, detail)
    assert not violations, detail


def test_c10_negative_instance(report):
    theta = ("aa", "ab")
    outcomes = {
        "exact": classical_d0l_solver(theta).outcome,
        "oracle": INFEASIBLE if not oracle_feasible(theta) else SYSTEM,
        "sat-internal": sat_infer_d0l(theta).outcome,
        "qaoa": quant_infer_d0l(theta, p=3).outcome,
    }
    ok = outcomes == {"exact": INFEASIBLE, "oracle": INFEASIBLE, "sat-internal": INFEASIBLE, "qaoa": UNVERIFIED}
    report(10, ok, ", ".join(f"{k}={v}" for k, v in outcomes.items()))
    assert ok


def test_c11_solution_counting(report):
    checked, bad = 0, []
    pool = [theta for _, theta in random_instances()] + _criterion2_family()
    for theta in pool:
        G = _graph(theta)
        if G is None or G.n > 16:
            continue
        checked += 1
        if count_k_independent_sets(G) != len(oracle_all(theta)):
            bad.append(theta)
    report(11, not bad, f"{checked - len(bad)}/{checked} instances with equal counts")
    assert not bad
