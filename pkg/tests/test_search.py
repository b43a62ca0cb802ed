"""Enumeration, seeded local search, and corpus checking."""

import random

import pytest

from flagstone import (
    BudgetExceeded,
    Graph,
    InvalidParameter,
    SearchConfig,
    check_instance,
    corpus_summary,
    detect_level,
    dump_edge_list,
    dump_facet_list,
    dump_graph6,
    enumerate_classes,
    exhaustive_cap,
    exhaustive_search,
    gen_cycle,
    gen_grid_torus,
    gen_join_of_cycles,
    gen_suspension_sphere,
    graph_from_key,
    is_d_leveled,
    random_search,
    run_corpus_checks,
)
from flagstone import kernels
from flagstone.complexes import SimplicialComplex
from helpers import all_graphs, partitions


def test_enumerate_classes_counts():
    levels = enumerate_classes(6)
    assert [len(levels[n]) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_enumerate_classes_matches_brute_classes():
    levels = enumerate_classes(5)
    for n in (3, 4, 5):
        seen = {kernels.canonical_key(list(g.masks), g.n) for g in all_graphs(n)}
        assert sorted(seen) == levels[n]


def test_enumerate_classes_clique_cap():
    levels = enumerate_classes(6, clique_cap=4)
    assert [len(levels[n]) for n in (4, 5, 6)] == [11, 33, 150]
    for key in levels[6]:
        assert graph_from_key(key, 6).clique_number() <= 4


def test_enumerate_workers_byte_identical():
    assert enumerate_classes(5, workers=2) == enumerate_classes(5, workers=1)


def test_exhaustive_cap_env(monkeypatch):
    monkeypatch.delenv("FLAGSTONE_CAP", raising=False)
    assert exhaustive_cap(1) == 10 and exhaustive_cap(3) == 8
    monkeypatch.setenv("FLAGSTONE_CAP", "5")
    assert exhaustive_cap(1) == 5
    monkeypatch.setenv("FLAGSTONE_CAP", "lots")
    with pytest.raises(InvalidParameter):
        exhaustive_cap(1)


def test_exhaustive_search_rejects_huge_range(monkeypatch):
    monkeypatch.delenv("FLAGSTONE_CAP", raising=False)
    cfg = SearchConfig(mode="exhaustive", d=3, n_min=4, n_max=9)
    with pytest.raises(BudgetExceeded):
        exhaustive_search(cfg)
    # the acknowledgment flag bypasses the cap (kept tiny here)
    monkeypatch.setenv("FLAGSTONE_CAP", "4")
    cfg = SearchConfig(mode="exhaustive", d=3, n_min=4, n_max=5, allow_huge=True)
    exhaustive_search(cfg)


def test_exhaustive_search_level_one(monkeypatch):
    monkeypatch.delenv("FLAGSTONE_CAP", raising=False)
    cfg = SearchConfig(mode="exhaustive", d=1, n_min=4, n_max=8)
    res = exhaustive_search(cfg)
    assert res.s == 1
    # leveled classes at level 1 are disjoint unions of cycles of length >= 4
    for entry in res.per_n:
        n = entry["n"]
        assert entry["leveled_classes"] == len(partitions(n, 4))
        assert entry["max_edges"] == n and entry["bound"] == str(n)
        assert entry["bound_holds"] is True
        g = Graph.from_edges(n, [tuple(e) for e in entry["argmax_edges"]])
        assert g.edge_count == entry["max_edges"]
        assert is_d_leveled(g, 1).is_leveled


def test_exhaustive_search_level_three_small(monkeypatch):
    monkeypatch.delenv("FLAGSTONE_CAP", raising=False)
    cfg = SearchConfig(mode="exhaustive", d=3, n_min=4, n_max=6)
    res = exhaustive_search(cfg)
    got = {e["n"]: e for e in res.per_n}
    assert [got[n]["classes_enumerated"] for n in (4, 5, 6)] == [11, 33, 150]
    # no 3-leveled graph exists below n = 8
    assert all(got[n]["leveled_classes"] == 0 for n in (4, 5, 6))
    assert all(got[n]["max_edges"] is None for n in (4, 5, 6))
    assert res.reports == ()


def test_exhaustive_workers_byte_identical(monkeypatch):
    monkeypatch.delenv("FLAGSTONE_CAP", raising=False)
    one = exhaustive_search(SearchConfig(mode="exhaustive", d=1, n_min=4, n_max=6, workers=1))
    two = exhaustive_search(SearchConfig(mode="exhaustive", d=1, n_min=4, n_max=6, workers=2))
    assert one.to_json_bytes() == two.to_json_bytes()


def test_random_search_reproducible():
    cfg = SearchConfig(mode="random", d=3, n_min=10, n_max=10, seed=7, budget=60)
    a, b = random_search(cfg), random_search(cfg)
    assert a.to_json_bytes() == b.to_json_bytes()
    entry = a.per_n[0]
    # the balanced join meets the bound exactly; nothing found may beat it
    assert entry["max_edges"] == 35 and entry["bound_holds"] is True
    g = Graph.from_edges(10, [tuple(e) for e in entry["argmax_edges"]])
    assert is_d_leveled(g, 3).is_leveled and g.edge_count == 35
    assert a.reports and a.reports[0]["bounds"]["thm_odd"]["equality"]


def test_random_search_skips_too_small_and_budget_zero():
    res = random_search(SearchConfig(mode="random", d=3, n_min=4, n_max=7, seed=1, budget=10))
    assert res.per_n == ()
    assert any("skipped" in note for note in res.notes)
    res = random_search(SearchConfig(mode="random", d=3, n_min=10, n_max=12, seed=1, budget=0))
    assert res.per_n == ()


def test_search_config_validation():
    with pytest.raises(InvalidParameter):
        SearchConfig(mode="sideways", d=1, n_min=1, n_max=2)
    with pytest.raises(InvalidParameter):
        SearchConfig(mode="random", d=1, n_min=1, n_max=2)  # no seed
    with pytest.raises(InvalidParameter):
        SearchConfig(mode="exhaustive", d=0, n_min=1, n_max=2)
    with pytest.raises(InvalidParameter):
        SearchConfig(mode="exhaustive", d=1, n_min=3, n_max=2)
    assert SearchConfig(mode="exhaustive", d=3, n_min=1, n_max=2).s_effective == 2
    assert SearchConfig(mode="exhaustive", d=4, n_min=1, n_max=2).s_effective == 2
    assert SearchConfig(mode="exhaustive", d=4, n_min=1, n_max=2, s=3).s_effective == 3


def test_detect_level():
    d, verdict = detect_level(gen_cycle(5))
    assert d == 1 and verdict.is_leveled
    d, verdict = detect_level(gen_suspension_sphere(4))
    assert d == 2 and verdict.is_leveled
    d, verdict = detect_level(gen_join_of_cycles(2, 10))
    assert d == 3 and verdict.is_leveled
    # mixed maximal-clique sizes fail with the short clique as witness
    g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 4)])
    d, verdict = detect_level(g)
    assert d == 2 and not verdict.is_leveled
    assert verdict.witnesses[0] == ("maximal-clique", (3, 4))
    d, verdict = detect_level(Graph(0, ()))
    assert d == 0 and not verdict.is_leveled


def test_check_instance_graph_pipeline():
    entry = check_instance("j", gen_join_of_cycles(2, 10))
    assert entry["kind"] == "graph" and entry["flag"]["verdict"] is True
    assert entry["f"] == [1, 10, 35, 50, 25]
    assert entry["h"] == [1, 6, 11, 6, 1]
    assert entry["chi"] == 0
    assert entry["dehn_sommerville"]["all"] and entry["klee"]["all"]
    assert entry["gamma"] == [1, 2, 1]
    assert entry["leveled"] == {"d": 3, "verdict": True}
    assert entry["pseudomanifold"] is True
    assert entry["report"]["bounds"]["thm_odd"]["equality"] is True
    assert entry["potential_counterexample"] is False


def test_check_instance_torus_even_path():
    entry = check_instance("t", gen_grid_torus(4, 4))
    assert entry["leveled"] == {"d": 2, "verdict": True}
    assert entry["gamma"] is None  # h is not palindromic
    assert not entry["dehn_sommerville"]["all"]
    report = entry["report"]
    # the even bound targets sphere-like instances; the torus misses the
    # palindromy hypothesis and overshoots without raising a flag
    assert report["bounds"]["conj_even"]["holds"] is False
    assert any("palindromy" in note for note in report["notes"])
    assert entry["potential_counterexample"] is False


def test_check_instance_flag_complex_delegates():
    k = SimplicialComplex.from_facets(6, gen_suspension_sphere(4).maximal_cliques())
    entry = check_instance("oct", k)
    assert entry["kind"] == "complex" and entry["facets"] == 8
    assert entry["flag"]["verdict"] is True
    assert entry["f"] == [1, 6, 12, 8]
    assert entry["leveled"] == {"d": 2, "verdict": True}
    assert entry["pseudomanifold"] is True


def test_check_instance_non_flag_complex():
    k = SimplicialComplex.from_facets(3, [(0, 1), (1, 2), (0, 2)])
    entry = check_instance("hollow", k)
    assert entry["flag"]["verdict"] is False
    assert entry["flag"]["witness"] == [0, 1, 2]
    assert entry["f"] == [1, 3, 3]
    assert entry["leveled"] is None
    assert entry["pseudomanifold"] is True  # every vertex lies in two edges
    assert any("not flag" in note for note in entry["notes"])


def test_run_corpus_checks_isolates_failures(tmp_path):
    good6 = tmp_path / "pair.g6"
    good6.write_text(dump_graph6(gen_join_of_cycles(2, 10)) + "\n" + dump_graph6(gen_cycle(5)) + "\n")
    bad = tmp_path / "broken.txt"
    bad.write_text("3 1\n7 9\n")
    facets = tmp_path / "oct.facets"
    facets.write_text(dump_facet_list(
        SimplicialComplex.from_facets(6, gen_suspension_sphere(4).maximal_cliques())
    ))
    entries = run_corpus_checks([good6, bad, facets])
    kinds = [e["kind"] for e in entries]
    assert kinds == ["graph", "graph", "error", "complex"]
    err = entries[2]["error"]
    assert err["line"] == 2 and err["path"] == str(bad)

    summary = corpus_summary(entries)
    assert summary["instances"] == 4 and summary["parse_errors"] == 1
    assert summary["ok"] == 3 and summary["potential_counterexamples"] == 0
    # join at upper-bound equality, C5 at equality for both odd bounds,
    # octahedron at even-bound equality (12 = 3n - 6)
    assert summary["equality_cases"] == 4
