"""
Handing the problem to a SAT solver
===================================

Write the size-k independent set question as DIMACS CNF, then read a
solver's model back as a D0L-system.
"""

from d0linfer import build, sat_infer_d0l
from d0linfer.sat import encode, satisfying_assignments, theta_comments, write_dimacs

theta = ("ab", "ba")
G = build(theta)
formula, varmap = encode(G)

# edge clauses forbid adjacent pairs, one clause per clique asks for a pick
print(write_dimacs(formula, theta_comments(theta)))

# small enough to try every assignment
models = satisfying_assignments(formula)
print(len(models), "models")

# an external solver would answer with a "v" line; fake one from the sweep
x = int(models[-1])
answer = "s SATISFIABLE\nv " + " ".join(str(v if x >> (v - 1) & 1 else -v) for v in range(1, G.n + 1)) + " 0\n"
print(answer)
result = sat_infer_d0l(theta, answer)
print(result.outcome, dict(result.system.productions))

print("UNSAT answer ->", sat_infer_d0l(("aa", "ab"), "s UNSATISFIABLE\n").outcome)
