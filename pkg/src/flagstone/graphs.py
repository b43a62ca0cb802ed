"""Immutable graphs with clique machinery, links, joins, and pattern search.

Vertices are 0..n-1.  Adjacency is stored as a tuple of bitmask rows
(masks[v] has bit u set iff uv is an edge); the bitset form is canonical and
everything else (edge lists, degree sequences) is derived from it.
"""

from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .errors import InvalidParameter, NotAClique


@dataclass(frozen=True)
class Graph:
    """A finite simple graph: symmetric, irreflexive adjacency on 0..n-1."""

    n: int
    masks: tuple

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameter("vertex count must be nonnegative")
        if len(self.masks) != self.n:
            raise InvalidParameter("need one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.masks):
            if row & ~full:
                raise InvalidParameter(f"row {v} mentions vertices outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise InvalidParameter(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in kernels.bits_of(self.masks[v]):
                if not (self.masks[u] >> v) & 1:
                    raise InvalidParameter(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n, edges):
        rows = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f"bad edge ({u}, {v}) for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    # -- basic accessors -------------------------------------------------

    def degree(self, v):
        return self.masks[v].bit_count()

    def neighbors(self, v):
        return kernels.bits_of(self.masks[v])

    def has_edge(self, u, v):
        return bool((self.masks[u] >> v) & 1)

    def edges(self):
        """Edge list as sorted (u, v) pairs with u < v."""
        out = []
        for v in range(self.n):
            for u in kernels.bits_of(self.masks[v] >> (v + 1) << (v + 1)):
                out.append((v, u))
        return sorted(out)

    @property
    def edge_count(self):
        return sum(row.bit_count() for row in self.masks) // 2

    def with_edge(self, u, v):
        if u == v:
            raise InvalidParameter("no self-loops")
        rows = list(self.masks)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def without_edge(self, u, v):
        rows = list(self.masks)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    # -- clique machinery ------------------------------------------------

    def is_clique(self, vertices):
        vs = sorted(set(vertices))
        for a, b in combinations(vs, 2):
            if not self.has_edge(a, b):
                return False
        return True

    def clique_counts(self, kmax=-1):
        """Vector c with c[k] = number of k-vertex cliques (c[0] = 1)."""
        return tuple(kernels.clique_counts(self.masks, self.n, kmax))

    def clique_count(self, k):
        if k < 0:
            raise InvalidParameter("clique size must be nonnegative")
        counts = kernels.clique_counts(self.masks, self.n, k)
        return counts[k] if k < len(counts) else 0

    def maximal_cliques(self):
        return kernels.maximal_cliques(self.masks, self.n)

    def k_cliques(self, k):
        return kernels.k_cliques(self.masks, self.n, k)

    def clique_number(self, stop_at=-1):
        return kernels.clique_number(self.masks, self.n, stop_at)

    # -- derived graphs --------------------------------------------------

    def induced(self, vertices):
        """Induced subgraph plus the map new index -> old vertex."""
        vmap = tuple(sorted(set(vertices)))
        for v in vmap:
            if not 0 <= v < self.n:
                raise InvalidParameter(f"vertex {v} out of range")
        idx = {v: i for i, v in enumerate(vmap)}
        rows = [0] * len(vmap)
        for i, v in enumerate(vmap):
            for u in kernels.bits_of(self.masks[v]):
                j = idx.get(u)
                if j is not None:
                    rows[i] |= 1 << j
        return Graph(len(vmap), tuple(rows)), vmap

    def link(self, sigma):
        """Induced subgraph on the common neighborhood of a clique.

        Returns (graph, vmap) with vmap[i] the original label of new vertex
        i.  link(g, ()) is g itself.  Raises NotAClique when sigma has a
        missing pair.
        """
        vs = sorted(set(sigma))
        for a, b in combinations(vs, 2):
            if not self.has_edge(a, b):
                raise NotAClique(f"({a}, {b}) is not an edge")
        common = (1 << self.n) - 1
        for v in vs:
            common &= self.masks[v]
        return self.induced(kernels.bits_of(common))

    def relabel(self, perm):
        """Image under the permutation new_label = perm[old_label]."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidParameter("not a permutation of 0..n-1")
        rows = [0] * self.n
        for v in range(self.n):
            for u in kernels.bits_of(self.masks[v]):
                rows[perm[v]] |= 1 << perm[u]
        return Graph(self.n, tuple(rows))

    def canonical_key(self):
        """Isomorphism-invariant integer key; feasible for small n only."""
        return kernels.canonical_key(self.masks, self.n)


def join(g, h):
    """Disjoint union of g and h plus every cross edge."""
    n = g.n + h.n
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = []
    for v in range(g.n):
        rows.append(g.masks[v] | hmask)
    for v in range(h.n):
        rows.append((h.masks[v] << g.n) | gmask)
    return Graph(n, tuple(rows))


def disjoint_union(g, h):
    rows = list(g.masks) + [row << g.n for row in h.masks]
    return Graph(g.n + h.n, tuple(rows))


def verify_multipartite_witness(g, pattern, witness):
    """Check an embedding of the complete multipartite pattern.

    Part sizes must match the pattern, parts must be disjoint, and every
    cross-part pair must be an edge of g.  Within-part adjacency is
    unconstrained (the pattern is matched as a subgraph, not induced).
    """
    if len(witness) != len(pattern):
        return False
    seen = set()
    for size, part in zip(pattern, witness):
        if len(part) != size or len(set(part)) != size:
            return False
        for v in part:
            if not 0 <= v < g.n or v in seen:
                return False
            seen.add(v)
    for pa, pb in combinations(witness, 2):
        for a in pa:
            for b in pb:
                if not g.has_edge(a, b):
                    return False
    return True


def contains_multipartite_subgraph(g, pattern):
    """Search for a complete multipartite subgraph with the given part sizes.

    Returns (True, witness) with witness a tuple of vertex tuples aligned
    with pattern, or (False, None).  Only cross-part adjacencies are
    required.  Parts are filled largest-first with degree pruning; the
    witness is deterministic (lexicographically first in that search order)
    and is re-verified before being returned.
    """
    pattern = tuple(pattern)
    if not pattern or any(p < 1 for p in pattern):
        raise InvalidParameter("pattern needs at least one part, all sizes >= 1")
    total = sum(pattern)
    if total > g.n:
        return False, None
    order = sorted(range(len(pattern)), key=lambda j: (-pattern[j], j))
    sizes = [pattern[j] for j in order]
    r = len(sizes)
    suffix = [0] * (r + 1)
    for i in range(r - 1, -1, -1):
        suffix[i] = suffix[i + 1] + sizes[i]
    deg = [g.masks[v].bit_count() for v in range(g.n)]
    chosen = [None] * r

    def place(i, avail):
        if i == r:
            return True
        need = sizes[i]
        # a part-i vertex must reach every vertex of every other part
        cand = [v for v in kernels.bits_of(avail) if deg[v] >= total - need]
        if len(cand) < need:
            return False
        for combo in combinations(cand, need):
            nxt = avail
            for v in combo:
                nxt &= g.masks[v]
            if nxt.bit_count() >= suffix[i + 1]:
                chosen[i] = combo
                if place(i + 1, nxt):
                    return True
        return False

    if not place(0, (1 << g.n) - 1):
        return False, None
    witness = [None] * r
    for slot, j in enumerate(order):
        witness[j] = chosen[slot]
    witness = tuple(witness)
    if not verify_multipartite_witness(g, pattern, witness):
        raise AssertionError("multipartite search produced an invalid witness")
    return True, witness
