"""Graph container, clique machinery, links, joins, multipartite search."""

import itertools
import math
import random

import pytest

from flagstone import (
    Graph,
    InvalidParameter,
    NotAClique,
    contains_multipartite_subgraph,
    disjoint_union,
    gen_complete_multipartite,
    gen_cycle,
    gen_suspension_sphere,
    join,
    verify_multipartite_witness,
)
from helpers import brute_maximal_cliques, random_graph


def test_construction_validates():
    Graph(2, (2, 1))
    with pytest.raises(InvalidParameter):
        Graph(2, (2,))  # wrong length
    with pytest.raises(InvalidParameter):
        Graph(2, (3, 1))  # self-loop at 0
    with pytest.raises(InvalidParameter):
        Graph(2, (2, 0))  # asymmetric
    with pytest.raises(InvalidParameter):
        Graph(1, (2,))  # out-of-range bit


def test_from_edges_and_accessors():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.edge_count == 3
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert g.degree(1) == 2
    assert g.neighbors(1) == (0, 2)
    assert g.has_edge(2, 1) and not g.has_edge(0, 2)
    with pytest.raises(InvalidParameter):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(InvalidParameter):
        Graph.from_edges(2, [(0, 5)])


def test_edge_editing():
    g = Graph.from_edges(3, [(0, 1)])
    g2 = g.with_edge(1, 2)
    assert g2.has_edge(1, 2) and not g.has_edge(1, 2)
    g3 = g2.without_edge(0, 1)
    assert not g3.has_edge(0, 1)
    assert g3.edge_count == 1


def test_clique_predicates():
    g = gen_cycle(5)
    assert g.is_clique(()) and g.is_clique((3,)) and g.is_clique((0, 1))
    assert not g.is_clique((0, 2))
    assert g.clique_number() == 2
    assert g.clique_counts() == (1, 5, 5)
    assert g.clique_count(2) == 5
    assert g.clique_count(9) == 0


def test_maximal_cliques_match_brute():
    rng = random.Random(11)
    for _ in range(40):
        g = random_graph(rng.randrange(0, 8), rng.random(), rng)
        assert list(g.maximal_cliques()) == brute_maximal_cliques(g)


def test_k_cliques_lists_all():
    g = gen_complete_multipartite((2, 2, 2))
    tris = g.k_cliques(3)
    assert len(tris) == 8
    assert all(g.is_clique(t) for t in tris)


def test_induced():
    g = gen_cycle(6)
    sub, vmap = g.induced((0, 1, 3))
    assert sub.n == 3
    assert sub.edge_count == 1  # only 0-1 survives
    assert vmap == (0, 1, 3)  # new index -> original vertex


def test_link_of_vertex_in_octahedron_is_c4():
    g = gen_suspension_sphere(4)
    lk, vmap = g.link((0,))
    assert lk.n == 4
    assert lk.edge_count == 4
    assert all(lk.degree(v) == 2 for v in range(4))  # a 4-cycle
    assert 0 not in vmap


def test_link_rejects_non_clique():
    g = gen_cycle(5)
    with pytest.raises(NotAClique):
        g.link((0, 2))
    assert g.link(()) [0] == g


def test_link_vs_induced_common_neighborhood():
    rng = random.Random(12)
    for _ in range(40):
        g = random_graph(rng.randrange(2, 8), 0.6, rng)
        for size in (1, 2):
            for sigma in itertools.combinations(range(g.n), size):
                if not g.is_clique(sigma):
                    continue
                lk, vmap = g.link(sigma)
                common = [u for u in range(g.n) if u not in sigma
                          and all(g.has_edge(u, v) for v in sigma)]
                assert sorted(vmap) == common
                inv = {old: new for new, old in enumerate(vmap)}
                for a, b in itertools.combinations(common, 2):
                    assert lk.has_edge(inv[a], inv[b]) == g.has_edge(a, b)


def test_join_counts():
    g = join(gen_cycle(5), gen_cycle(5))
    assert g.n == 10 and g.edge_count == 5 + 5 + 25
    e = join(Graph(0, ()), gen_cycle(4))
    assert e.masks == gen_cycle(4).masks
    # clique counts multiply across a join
    a, b = gen_cycle(4), gen_cycle(5)
    ca, cb, cj = a.clique_counts(), b.clique_counts(), join(a, b).clique_counts()
    for k in range(len(cj)):
        assert cj[k] == sum(
            ca[i] * cb[k - i]
            for i in range(len(ca))
            if 0 <= k - i < len(cb)
        )


def test_disjoint_union():
    g = disjoint_union(gen_cycle(4), gen_cycle(5))
    assert g.n == 9 and g.edge_count == 9
    assert not any(g.has_edge(u, v) for u in range(4) for v in range(4, 9))


def test_relabel_roundtrip():
    rng = random.Random(13)
    for _ in range(30):
        g = random_graph(rng.randrange(1, 8), rng.random(), rng)
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        inv = [0] * g.n
        for v, p in enumerate(perm):
            inv[p] = v
        assert h.relabel(inv).masks == g.masks
        assert h.canonical_key() == g.canonical_key()


def test_multipartite_positive_controls():
    for pattern in ((1, 3), (1, 3, 3), (2, 2, 2)):
        g = gen_complete_multipartite(pattern)
        found, witness = contains_multipartite_subgraph(g, pattern)
        assert found
        assert verify_multipartite_witness(g, pattern, witness)


def test_multipartite_negatives():
    found, witness = contains_multipartite_subgraph(gen_cycle(6), (1, 3))
    assert not found and witness is None
    g = join(gen_cycle(5), gen_cycle(5))
    found, witness = contains_multipartite_subgraph(g, (1, 3, 3))
    assert not found and witness is None


def test_multipartite_subgraph_not_induced():
    # parts need not be independent: any degree-3 vertex hosts a K(1,3)
    g = gen_suspension_sphere(4)
    found, witness = contains_multipartite_subgraph(g, (1, 3))
    assert found
    assert verify_multipartite_witness(g, (1, 3), witness)


def test_multipartite_witness_checker_rejects_bad():
    g = gen_complete_multipartite((1, 3))
    assert not verify_multipartite_witness(g, (1, 3), ((1,), (0, 2, 3)))  # 0 is the apex
    assert not verify_multipartite_witness(g, (1, 3), ((0,), (1, 2)))  # wrong sizes
    assert not verify_multipartite_witness(g, (1, 3), ((0,), (0, 1, 2)))  # overlap


def test_multipartite_matches_brute():
    def brute(g, pattern):
        verts = range(g.n)
        for assign in itertools.product(range(len(pattern) + 1), repeat=g.n):
            parts = [[v for v in verts if assign[v] == i + 1] for i in range(len(pattern))]
            if [len(p) for p in parts] != list(pattern):
                continue
            if all(
                g.has_edge(u, v)
                for a, b in itertools.combinations(range(len(pattern)), 2)
                for u in parts[a]
                for v in parts[b]
            ):
                return True
        return False

    rng = random.Random(14)
    for _ in range(25):
        g = random_graph(rng.randrange(3, 7), rng.random(), rng)
        for pattern in ((1, 2), (2, 2), (1, 1, 2)):
            got, witness = contains_multipartite_subgraph(g, pattern)
            assert got == brute(g, pattern)
            if got:
                assert verify_multipartite_witness(g, pattern, witness)


def test_clique_counts_complete_graph():
    n = 9
    g = gen_complete_multipartite((1,) * n)
    assert g.clique_counts() == tuple(math.comb(n, k) for k in range(n + 1))
