"""
Looking at a characteristic graph
=================================

Build the graph for a two-word sequence, walk its cliques and write it
out as Graphviz DOT.
"""

from pathlib import Path

from d0linfer import build
from d0linfer.mis import iter_k_independent_sets

theta = ("ab", "ba")
G = build(theta)
print(f"{G.n} vertices, {G.edge_count} edges, k = {G.k}")

# one clique per position of w_0; a vertex (i, j, s, e) says
# "the j-th symbol of w_i rewrites to w_{i+1}[s:e]"
for c in range(G.k):
    for t in G.clique_range(c):
        print(t, G.vertex(t).label(), repr(G.successor_slice(t)))

# every size-k independent set is one compatible production map
for S in iter_k_independent_sets(G):
    print(sorted(G.vertex(t).label() for t in S))

out = Path("characteristic.dot")
out.write_text(G.to_dot())
print("wrote", out, "(render with: dot -Tpng characteristic.dot -o g.png)")
