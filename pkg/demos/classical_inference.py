"""
Recovering a D0L-system from its derivation
===========================================

Generate a random system, keep only the words it derives, and get a
compatible system back through the characteristic graph.
"""

from d0linfer import classical_d0l_solver, gen_random_instance, oracle_infer, serialize_system, verify

# a random system over three symbols, derived for three steps
system, theta = gen_random_instance(3, 2, 3, 40, seed=11)
print("hidden system:")
print(serialize_system(system))
for i, w in enumerate(theta):
    print(f"w_{i} = {w!r}")

# the solver looks for one vertex per clique with no edges between picks
result = classical_d0l_solver(theta)
print("\noutcome:", result.outcome)
print(serialize_system(result.system))
print("graph:", result.stats.as_dict())

# the answer need not equal the hidden system, only regenerate theta
print("regenerates theta:", verify(theta, result.system))

# the backtracking oracle never touches the graph and must agree
print("oracle agrees:", verify(theta, oracle_infer(theta)))

# an infeasible sequence: both a's need the same successor, and "ab" has no equal halves
print("\n('aa', 'ab') ->", classical_d0l_solver(("aa", "ab")).outcome)
