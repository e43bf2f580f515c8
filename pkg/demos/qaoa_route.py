"""
QUBO and a simulated QAOA run
=============================

Turn the graph into a penalized QUBO, look at its cost landscape, then
let a simulated QAOA circuit find a low-cost selection.
"""

import numpy as np

from d0linfer import QaoaParams, build, quant_infer_d0l
from d0linfer.qaoa import build_cost_table
from d0linfer.qubo import PenaltyConfig, bitstring, build_qubo, int_to_bits

theta = ("ab", "ba")
G = build(theta)
Q = build_qubo(G)
print(Q)

# x'Qx + 2 (|x| - k)^2; the minimum -k sits exactly on the size-k independent sets
table = build_cost_table(Q, PenaltyConfig(2.0, G.k))
for x in np.flatnonzero(table == table.min()):
    print(bitstring(int_to_bits(int(x), G.n)), table[x])
print("mean over all states:", table.mean())

# three layers, 100 finite-difference steps, best of 512 shots
params = QaoaParams(p=3, iters=100, eta=0.05, shots=512, seed=0)
result = quant_infer_d0l(theta, params=params)
print("outcome:", result.outcome, dict(result.system.productions))
print("expectation: uniform %.3f, optimized %.3f"
      % (result.details["uniform_expectation"], result.details["final_expectation"]))

# on an infeasible sequence the best sample cannot be verified
print("('aa', 'ab') ->", quant_infer_d0l(("aa", "ab"), p=3).outcome)
