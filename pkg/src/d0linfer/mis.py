"""Exact maximum independent set solvers.

Generic solvers take anything :func:`as_adjacency` understands: a
``CharacteristicGraph``, a square boolean numpy array or a networkx graph
with nodes ``0..n-1``. Vertex sets are frozensets of vertex indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .errors import BudgetExceeded, InstanceTooLarge

BRUTE_FORCE_CAP = 20


@dataclass(frozen=True)
class SolveOutcome:
    set: frozenset
    exact: bool = True

    @property
    def size(self) -> int:
        return len(self.set)


def as_adjacency(G) -> np.ndarray:
    if hasattr(G, "adjacency_matrix") and not callable(G.adjacency_matrix):
        return G.adjacency_matrix
    if hasattr(G, "number_of_nodes"):
        import networkx as nx

        return nx.to_numpy_array(G, nodelist=range(G.number_of_nodes()), dtype=bool)
    adj = np.asarray(G, dtype=bool)
    if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
        raise ValueError("adjacency must be a square matrix")
    return adj


def _masks(adj) -> list:
    return [sum(1 << int(t) for t in np.flatnonzero(row)) for row in adj]


def is_independent(G, S) -> bool:
    """True iff no two members of ``S`` are adjacent."""
    members = sorted(S)
    if hasattr(G, "adjacent") and not hasattr(G, "number_of_nodes"):
        return not any(G.adjacent(u, v) for t, u in enumerate(members) for v in members[t + 1 :])
    adj = as_adjacency(G)
    idx = np.asarray(members, dtype=int)
    return not adj[np.ix_(idx, idx)].any()


def mis_bruteforce(G, cap: int = BRUTE_FORCE_CAP) -> SolveOutcome:
    """Enumerate all subsets; ties go to the lexicographically smallest index set."""
    adj = as_adjacency(G)
    n = adj.shape[0]
    if n > cap:
        raise InstanceTooLarge(f"brute force limited to {cap} vertices, graph has {n}")
    masks = np.arange(1 << n, dtype=np.int64)
    independent = np.ones(1 << n, dtype=bool)
    nbr = np.array(_masks(adj), dtype=np.int64)
    # a set is independent iff dropping its lowest vertex leaves an independent
    # set and that vertex has no neighbour in it
    for x in range(1, 1 << n):
        low = (x & -x).bit_length() - 1
        rest = x & (x - 1)
        independent[x] = independent[rest] and not (nbr[low] & rest)
    popcount = np.bitwise_count(masks)
    best = popcount[independent].max()
    winners = masks[independent & (popcount == best)]
    chosen = min(tuple(t for t in range(n) if x >> t & 1) for x in winners.tolist())
    return SolveOutcome(frozenset(chosen))


def mis_exact(G, budget: Optional[int] = None) -> SolveOutcome:
    """Branch and bound on a maximum-degree vertex with a clique-cover bound.

    ``budget`` caps the number of search nodes (BudgetExceeded when hit).
    """
    adj = as_adjacency(G)
    n = adj.shape[0]
    nbr = _masks(adj)
    best = [0, 0]  # size, mask
    nodes = [0]

    def cover_bound(cand):
        # greedy clique cover: independent sets meet each clique at most once
        cliques = 0
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            clique_cand = cand & nbr[v]
            cand ^= low
            while clique_cand:
                w_low = clique_cand & -clique_cand
                w = w_low.bit_length() - 1
                cand &= ~w_low
                clique_cand &= nbr[w]
            cliques += 1
        return cliques

    def search(cand, chosen, size):
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise BudgetExceeded(f"branch and bound exceeded {budget} nodes")
        if cand == 0:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + bin(cand).count("1") <= best[0] or size + cover_bound(cand) <= best[0]:
            return
        v, deg = -1, -1
        rest = cand
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            d = bin(nbr[u] & cand).count("1")
            if d > deg:
                v, deg = u, d
            rest ^= low
        bit = 1 << v
        search(cand & ~bit & ~nbr[v], chosen | bit, size + 1)
        if deg > 0:
            search(cand & ~bit, chosen, size)

    search((1 << n) - 1, 0, 0)
    return SolveOutcome(frozenset(t for t in range(n) if best[1] >> t & 1))


def iter_k_independent_sets(G, budget: Optional[int] = None) -> Iterator[frozenset]:
    """Yield every independent set meeting each clique of a characteristic graph once.

    Cliques are visited in ``(i, j)`` order. The first slice of a position must
    start where the previous one ended, and a symbol seen before must receive
    the same successor again; any other choice is adjacent to an earlier pick.
    """
    theta = G.theta
    k = G.k
    nodes = [0]
    bind = {}
    picks = []

    def fits(c, end):
        # bound successors of the remaining positions of this step must fit
        cl = G.cliques[c]
        word = theta[cl.i]
        left = len(theta[cl.i + 1]) + 1 - end
        need, all_bound = 0, True
        for a in word[cl.j :]:
            x = bind.get(a)
            if x is None:
                all_bound = False
            else:
                need += len(x)
        return need == left if all_bound else need <= left

    def walk(c, prev_end):
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise BudgetExceeded(f"clique search exceeded {budget} nodes")
        if c == k:
            yield frozenset(picks)
            return
        cl = G.cliques[c]
        nxt = theta[cl.i + 1]
        top = len(nxt) + 1
        start = 1 if cl.j == 1 else prev_end
        closes = cl.j == len(theta[cl.i])
        a = theta[cl.i][cl.j - 1]
        known = bind.get(a)
        if known is not None:
            end = start + len(known)
            if end > top or (closes and end != top) or nxt[start - 1 : end - 1] != known:
                return
            ends = [end]
        else:
            ends = [top] if closes else range(start, top + 1)
        for end in ends:
            if known is None:
                bind[a] = nxt[start - 1 : end - 1]
            if closes or fits(c, end):
                picks.append(G.index((cl.i, cl.j, start, end)))
                yield from walk(c + 1, end)
                picks.pop()
            if known is None:
                del bind[a]

    yield from walk(0, 1)


def find_k_is_structured(G, budget: Optional[int] = None) -> Optional[frozenset]:
    """A size-k independent set of a characteristic graph, or None if there is none."""
    return next(iter_k_independent_sets(G, budget), None)


def count_k_independent_sets(G, budget: Optional[int] = None) -> int:
    return sum(1 for _ in iter_k_independent_sets(G, budget))
