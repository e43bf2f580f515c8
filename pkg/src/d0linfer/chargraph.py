"""The characteristic graph of a word sequence.

A vertex ``(i, j, start, end)`` proposes that the symbol at position j of
w_i rewrites to ``w_{i+1}[start:end]`` (1-based, end-exclusive). All
candidates for one position form a clique. Two vertices of different
cliques are joined when they give one symbol two different successors, or
when they sit at neighbouring positions of one step and their slices do not
abut. A size-k independent set, k being the total length of w_0..w_{m-1},
picks one slice per position and is exactly a compatible D0L-system.

Vertices are indexed densely in lexicographic ``(i, j, start, end)`` order so
cliques occupy contiguous index ranges. Vertex lists and adjacency are built
lazily: structural queries (sizes, clique ranges, edge counts) are answered
arithmetically and stay cheap on long words, while the explicit adjacency
is only materialized for graphs up to ``DENSE_CAP`` vertices.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

import numpy as np

from .errors import DegenerateSequence, IndexOutOfRange, InstanceTooLarge
from .lsystem import as_sequence, slice_word

DENSE_CAP = 6000

SINGLE, FIRST, LAST, MIDDLE = "single", "first", "last", "middle"


class CGVertex(NamedTuple):
    i: int
    j: int
    start: int
    end: int

    def label(self) -> str:
        return f"({self.i},{self.j},{self.start},{self.end})"


class CliqueId(NamedTuple):
    i: int
    j: int


def clique_kind(j: int, length: int) -> str:
    if j == 1:
        return SINGLE if length == 1 else FIRST
    return LAST if j == length else MIDDLE


def slice_pairs(kind: str, L: int) -> list:
    """Candidate ``(start, end)`` pairs of a clique, in lexicographic order."""
    top = L + 1
    if kind == SINGLE:
        return [(1, top)]
    if kind == FIRST:
        return [(1, e) for e in range(1, top + 1)]
    if kind == LAST:
        return [(s, top) for s in range(1, top + 1)]
    return [(s, e) for s in range(1, top + 1) for e in range(s, top + 1)]


def clique_size(kind: str, L: int) -> int:
    if kind == SINGLE:
        return 1
    if kind in (FIRST, LAST):
        return L + 1
    return (L + 1) * (L + 2) // 2


def _pair_offset(kind: str, L: int, s: int, e: int) -> int:
    if kind == SINGLE:
        return 0
    if kind == FIRST:
        return e - 1
    if kind == LAST:
        return s - 1
    # rows s' < s hold L + 2 - s' pairs each
    return (s - 1) * (L + 2) - (s - 1) * s // 2 + (e - s)


def _valid_pair(kind, L, s, e):
    top = L + 1
    if not 1 <= s <= e <= top:
        return False
    if kind in (SINGLE, FIRST) and s != 1:
        return False
    if kind in (SINGLE, LAST) and e != top:
        return False
    return True


def clique_vertices(theta: Sequence[str], i: int, j: int) -> list:
    """Vertices of the clique for position j (1-based) of w_i."""
    theta = tuple(theta)
    if not 0 <= i < len(theta) - 1 or not 1 <= j <= len(theta[i]):
        raise IndexOutOfRange(f"no clique ({i}, {j})")
    kind = clique_kind(j, len(theta[i]))
    return [CGVertex(i, j, s, e) for s, e in slice_pairs(kind, len(theta[i + 1]))]


def cross_edge(theta: Sequence[str], v: CGVertex, w: CGVertex) -> bool:
    """Edge test for two vertices taken from different cliques."""
    if theta[v.i][v.j - 1] == theta[w.i][w.j - 1]:
        if slice_word(theta[v.i + 1], v.start, v.end) != slice_word(theta[w.i + 1], w.start, w.end):
            return True
    if v.i == w.i:
        if w.j == v.j + 1 and v.end != w.start:
            return True
        if v.j == w.j + 1 and w.end != v.start:
            return True
    return False


def target_k(theta: Sequence[str]) -> int:
    return sum(len(w) for w in tuple(theta)[:-1])


def check_degenerate(theta: Sequence[str]) -> None:
    for i in range(len(theta) - 1):
        if theta[i] == "" and theta[i + 1] != "":
            raise DegenerateSequence(
                f"w_{i} is empty but w_{i + 1} = {theta[i + 1]!r}; nothing can derive it"
            )


@dataclass(frozen=True)
class GraphStats:
    n: int
    m_edges: int
    k: int
    l: int
    h: int
    v: int

    @property
    def kl2(self) -> int:
        return self.k * self.l * self.l

    @property
    def kl2_bound_holds(self) -> bool:
        """Whether ``n <= k * l**2``. Fails for short successor words, see ``clique_size``."""
        return self.n <= self.kl2

    @property
    def exact_bound(self) -> int:
        """``k * (l + 1)(l + 2) / 2``: no clique is larger than a middle clique."""
        return self.k * (self.l + 1) * (self.l + 2) // 2

    def as_dict(self) -> dict:
        return {"n": self.n, "m_edges": self.m_edges, "k": self.k, "l": self.l, "h": self.h, "v": self.v}


class CharacteristicGraph:
    """Characteristic graph of ``theta``; construct with :func:`build`."""

    def __init__(self, theta):
        self.theta = theta
        self.cliques = tuple(
            CliqueId(i, j) for i in range(len(theta) - 1) for j in range(1, len(theta[i]) + 1)
        )
        self.kinds = tuple(clique_kind(c.j, len(theta[c.i])) for c in self.cliques)
        sizes = [clique_size(kd, len(theta[c.i + 1])) for c, kd in zip(self.cliques, self.kinds)]
        self.offsets = tuple(np.concatenate([[0], np.cumsum(sizes, dtype=np.int64)]).tolist())
        self._clique_index = {c: t for t, c in enumerate(self.cliques)}

    @property
    def k(self) -> int:
        return len(self.cliques)

    @property
    def n(self) -> int:
        return self.offsets[-1]

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"CharacteristicGraph(theta={self.theta!r}, n={self.n}, k={self.k})"

    def symbol(self, c: int) -> str:
        cl = self.cliques[c]
        return self.theta[cl.i][cl.j - 1]

    def successor_length(self, c: int) -> int:
        return len(self.theta[self.cliques[c].i + 1])

    def clique_range(self, c: int) -> range:
        return range(self.offsets[c], self.offsets[c + 1])

    def clique_pairs(self, c: int) -> list:
        return slice_pairs(self.kinds[c], self.successor_length(c))

    def clique_of(self, index: int) -> int:
        if not 0 <= index < self.n:
            raise IndexOutOfRange(f"vertex {index} not in graph of {self.n} vertices")
        return bisect_right(self.offsets, index) - 1

    def vertex(self, index: int) -> CGVertex:
        c = self.clique_of(index)
        s, e = self.clique_pairs(c)[index - self.offsets[c]]
        cl = self.cliques[c]
        return CGVertex(cl.i, cl.j, s, e)

    def index(self, v: CGVertex) -> int:
        v = CGVertex(*v)
        c = self._clique_index.get(CliqueId(v.i, v.j))
        if c is None:
            raise IndexOutOfRange(f"{v} belongs to no clique")
        kind, L = self.kinds[c], self.successor_length(c)
        if not _valid_pair(kind, L, v.start, v.end):
            raise IndexOutOfRange(f"{v} is not a vertex of clique {self.cliques[c]}")
        return self.offsets[c] + _pair_offset(kind, L, v.start, v.end)

    @cached_property
    def vertices(self) -> list:
        out = []
        for c, cl in enumerate(self.cliques):
            out.extend(CGVertex(cl.i, cl.j, s, e) for s, e in self.clique_pairs(c))
        return out

    def successor_slice(self, index: int) -> str:
        v = self.vertex(index)
        return slice_word(self.theta[v.i + 1], v.start, v.end)

    def adjacent(self, u: int, v: int) -> bool:
        """Edge predicate evaluated from the definition, without the stored adjacency."""
        if u == v:
            return False
        cu, cv = self.clique_of(u), self.clique_of(v)
        if cu == cv:
            return True
        return cross_edge(self.theta, self.vertex(u), self.vertex(v))

    def _require_dense(self):
        if self.n > DENSE_CAP:
            raise InstanceTooLarge(
                f"graph has {self.n} vertices; explicit adjacency is capped at {DENSE_CAP}"
            )

    @cached_property
    def adjacency_matrix(self) -> np.ndarray:
        """Dense boolean adjacency, symmetric with a false diagonal."""
        self._require_dense()
        n = self.n
        if n == 0:
            return np.zeros((0, 0), dtype=bool)
        verts = self.vertices
        step = np.array([v.i for v in verts])
        pos = np.array([v.j for v in verts])
        start = np.array([v.start for v in verts])
        end = np.array([v.end for v in verts])
        clique = np.repeat(np.arange(self.k), np.diff(self.offsets))
        sym_ids, slice_ids = {}, {}
        sym = np.array([sym_ids.setdefault(self.theta[v.i][v.j - 1], len(sym_ids)) for v in verts])
        sl = np.array(
            [slice_ids.setdefault(self.theta[v.i + 1][v.start - 1 : v.end - 1], len(slice_ids)) for v in verts]
        )
        same_clique = clique[:, None] == clique[None, :]
        determinism = (sym[:, None] == sym[None, :]) & (sl[:, None] != sl[None, :])
        seam = (step[:, None] == step[None, :]) & (pos[None, :] == pos[:, None] + 1) & (end[:, None] != start[None, :])
        adj = same_clique | determinism | seam | seam.T
        np.fill_diagonal(adj, False)
        adj.setflags(write=False)
        return adj

    @cached_property
    def neighbors(self) -> tuple:
        adj = self.adjacency_matrix
        return tuple(frozenset(np.flatnonzero(row).tolist()) for row in adj)

    def edges(self) -> list:
        """Every edge once as ``(u, v)`` with ``u < v``, sorted."""
        u, v = np.nonzero(np.triu(self.adjacency_matrix, 1))
        return list(zip(u.tolist(), v.tolist()))

    @cached_property
    def edge_count(self) -> int:
        return _count_edges(self)

    def stats(self) -> GraphStats:
        return stats(self)

    def to_dot(self) -> str:
        return to_dot(self)

    def to_json(self) -> str:
        return to_json(self)


def build(theta: Sequence[str]) -> CharacteristicGraph:
    theta = as_sequence(theta)
    check_degenerate(theta)
    return CharacteristicGraph(theta)


def stats(G: CharacteristicGraph) -> GraphStats:
    theta = G.theta
    freq = Counter("".join(theta[:-1]))
    st = GraphStats(
        n=G.n,
        m_edges=G.edge_count,
        k=G.k,
        l=max(len(w) for w in theta[1:]),
        h=max(freq.values(), default=0),
        v=len(freq),
    )
    assert st.n <= st.exact_bound, "clique sizes exceed (l+1)(l+2)/2"
    return st


def _count_edges(G: CharacteristicGraph) -> int:
    """Count edges without listing them.

    Within-clique pairs, plus pairs joined by the determinism rule, plus
    pairs joined by the seam rule, minus pairs joined by both. Candidate
    slices only depend on the step and the clique kind, so every tally is
    built per (step, kind) and weighted by how many cliques share it.
    """
    theta = G.theta
    intern = {}

    def ids_of(i, kind):
        L = len(theta[i + 1])
        return [intern.setdefault(theta[i + 1][s - 1 : e - 1], len(intern)) for s, e in slice_pairs(kind, L)]

    per_kind = {}
    for c in range(G.k):
        key = (G.cliques[c].i, G.kinds[c])
        if key not in per_kind:
            per_kind[key] = ids_of(*key)
    nslices = len(intern)
    vec = {key: np.bincount(ids, minlength=nslices).astype(np.int64) for key, ids in per_kind.items()}

    within = sum(s * (s - 1) // 2 for s in np.diff(G.offsets).tolist())

    mult = Counter((G.symbol(c), G.cliques[c].i, G.kinds[c]) for c in range(G.k))
    by_symbol = defaultdict(list)
    for (a, i, kind), cnt in mult.items():
        by_symbol[a].append((cnt, (i, kind)))
    determinism = 0
    for items in by_symbol.values():
        s1 = s2 = 0
        v1 = np.zeros(nslices, dtype=np.int64)
        v2 = np.zeros(nslices, dtype=np.int64)
        for cnt, key in items:
            size = len(per_kind[key])
            s1 += cnt * size
            s2 += cnt * size * size
            v1 += cnt * vec[key]
            v2 += cnt * vec[key] ** 2
        pairs = (s1 * s1 - s2) // 2
        equal = int((v1 * v1 - v2).sum()) // 2
        determinism += pairs - equal

    seam = both = 0
    cache = {}
    for c in range(G.k - 1):
        a, b = G.cliques[c], G.cliques[c + 1]
        if a.i != b.i:
            continue
        key = (a.i, G.kinds[c], G.kinds[c + 1])
        if key not in cache:
            cache[key] = _seam_tally(theta[a.i + 1], G.kinds[c], G.kinds[c + 1], vec[(a.i, G.kinds[c])], vec[(a.i, G.kinds[c + 1])])
        total, abut, same_slice, abut_same = cache[key]
        seam += total - abut
        if G.symbol(c) == G.symbol(c + 1):
            both += total - same_slice - abut + abut_same
    return within + determinism + seam - both


def _seam_tally(nxt, kind_a, kind_b, vec_a, vec_b):
    L = len(nxt)
    pa, pb = slice_pairs(kind_a, L), slice_pairs(kind_b, L)
    ends = Counter(e for _, e in pa)
    starts = Counter(s for s, _ in pb)
    abut = sum(ends[x] * starts[x] for x in ends)
    same_slice = int((vec_a * vec_b).sum())
    in_b = set(pb)
    abut_same = 0
    for s1, e1 in pa:
        e2 = 2 * e1 - s1
        if (e1, e2) in in_b and nxt[s1 - 1 : e1 - 1] == nxt[e1 - 1 : e2 - 1]:
            abut_same += 1
    return len(pa) * len(pb), abut, same_slice, abut_same


def to_dot(G: CharacteristicGraph) -> str:
    """Undirected DOT text, one cluster per clique, each edge once."""
    lines = ["graph characteristic {", "  node [shape=box];"]
    for c, cl in enumerate(G.cliques):
        lines.append(f"  subgraph cluster_{cl.i}_{cl.j} {{")
        lines.append(f'    label="G_{cl.i}_{cl.j}";')
        for idx in G.clique_range(c):
            lines.append(f'    v{idx} [label="{G.vertex(idx).label()}"];')
        lines.append("  }")
    for u, v in G.edges():
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(G: CharacteristicGraph) -> str:
    doc = {
        "theta": list(G.theta),
        "k": G.k,
        "vertices": [
            {"index": t, "i": v.i, "j": v.j, "start": v.start, "end": v.end}
            for t, v in enumerate(G.vertices)
        ],
        "edges": [list(e) for e in G.edges()],
        "bit_order": "qubit/bit t is vertex index t (least significant bit first)",
    }
    return json.dumps(doc, indent=2) + "\n"
