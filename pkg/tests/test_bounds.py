"""Edge-count bounds, the gamma verdict, and the per-instance report."""

import json
import random
from fractions import Fraction

import pytest

from flagstone import (
    InvalidParameter,
    edge_bound_even_conjecture,
    edge_bound_odd,
    edge_lower_bound_odd,
    gamma_check,
    gen_cycle,
    gen_join_of_cycles,
    gen_suspension_sphere,
    is_d_leveled,
    join,
    linear_excess,
    lower_bound_status,
    verify_theorem_instance,
)


def test_edge_bound_odd_values():
    assert edge_bound_odd(10, 1) == 10  # s=1 collapses to n
    assert edge_bound_odd(10, 2) == 35
    assert edge_bound_odd(12, 3) == 60
    assert edge_bound_odd(11, 2) == Fraction(165, 4)


def test_edge_lower_bound_odd_values():
    assert edge_lower_bound_odd(10, 2) == 34
    assert edge_lower_bound_odd(10, 1) == 10
    assert edge_lower_bound_odd(20, 3) == 9 * 20 - 48


def test_lower_bound_status():
    assert lower_bound_status(1) == "theorem"
    assert lower_bound_status(2) == "theorem"
    assert lower_bound_status(3) == "conjecture"
    assert lower_bound_status(7) == "conjecture"


def test_edge_bound_even_values():
    assert edge_bound_even_conjecture(12, 1) == 30  # 3n - 6
    assert edge_bound_even_conjecture(12, 2) == 55


def test_even_bound_equality_family():
    # join of s-1 cycles with a suspended cycle: n = sk+2 and the edge count
    # meets the even-level bound exactly
    for s in (1, 2, 3):
        for k in range(4, 13):
            g = gen_suspension_sphere(k)
            for _ in range(s - 1):
                g = join(gen_cycle(k), g)
            assert g.n == s * k + 2
            assert g.edge_count == edge_bound_even_conjecture(g.n, s)
            if k <= 6:
                assert is_d_leveled(g, 2 * s).is_leveled


def test_parameter_validation():
    with pytest.raises(InvalidParameter):
        edge_bound_odd(0, 1)
    with pytest.raises(InvalidParameter):
        edge_bound_odd(5, 0)
    with pytest.raises(InvalidParameter):
        edge_lower_bound_odd(5, 0)
    with pytest.raises(InvalidParameter):
        edge_bound_even_conjecture(5, 0)
    with pytest.raises(InvalidParameter):
        gamma_check(5, 5, 0)


def test_gamma_check_values():
    assert gamma_check(10, 35, 2) == (2, 1, True)
    assert gamma_check(8, 24, 2) == (0, 0, True)
    # one extra edge on the extremal pair flips the verdict
    assert gamma_check(10, 36, 2) == (2, 2, False)


def test_gamma_check_matches_edge_bound():
    # the gamma inequality is the edge bound in disguise
    rng = random.Random(91)
    for _ in range(300):
        s = rng.randrange(1, 9)
        f0 = rng.randrange(1, 500)
        f1 = rng.randrange(0, f0 * f0 + 1)
        _, _, holds = gamma_check(f0, f1, s)
        assert holds == (f1 <= edge_bound_odd(f0, s))


def test_linear_excess():
    assert linear_excess(gen_join_of_cycles(2, 10), 2) == 1
    assert linear_excess(gen_join_of_cycles(3, 12), 3) == 1
    g = gen_join_of_cycles(2, 10).without_edge(0, 5)
    assert linear_excess(g, 2) == Fraction(9, 10)
    with pytest.raises(InvalidParameter):
        from flagstone import Graph

        linear_excess(Graph(0, ()), 1)


def test_report_on_extremal_join():
    g = gen_join_of_cycles(2, 10)
    rep = verify_theorem_instance(g, 2, cap=Fraction(1, 2), instance="j")
    assert rep.instance == "j" and rep.n == 10 and rep.edges == 35
    assert rep.leveled and rep.leveled_d == 3
    assert rep.gamma == (2, 1, True)
    up = rep.bounds["thm_odd"]
    assert up.holds and up.equality and up.value == 35 and up.slack == 0
    assert up.status == "theorem"
    lo = rep.bounds["lower_odd"]
    assert lo.holds and not lo.equality and lo.value == 34 and lo.slack == -1
    assert not rep.potential_counterexample
    assert any("k_3 = 50 <=" in note for note in rep.notes)


def test_report_on_cycle():
    rep = verify_theorem_instance(gen_cycle(5), 1)
    assert rep.leveled and rep.leveled_d == 1
    # 1-leveled graphs sit at equality for both bounds
    assert rep.bounds["thm_odd"].equality
    assert rep.bounds["lower_odd"].equality
    assert rep.gamma == (1, 0, True)
    assert any("no cap supplied" in note for note in rep.notes)


def test_report_flags_level_failure():
    g = gen_suspension_sphere(4)  # 2-leveled, not 3
    rep = verify_theorem_instance(g, 2)
    assert not rep.leveled
    assert any("level test failed at d=3" in note for note in rep.notes)
    assert rep.bounds["thm_odd"].holds  # 12 <= 15, reported for reference
    assert not rep.potential_counterexample


def test_report_json_schema():
    rep = verify_theorem_instance(gen_join_of_cycles(2, 10), 2, cap=1)
    d = rep.to_json_dict()
    assert set(d) == {
        "instance", "n", "s", "edges", "bounds", "leveled", "gamma",
        "notes", "potential_counterexample",
    }
    assert set(d["leveled"]) == {"d", "verdict"}
    assert set(d["gamma"]) == {"g1", "g2", "holds"}
    for entry in d["bounds"].values():
        assert set(entry) == {"value", "holds", "equality", "status", "slack"}
        Fraction(entry["value"])  # str-encoded exact rationals
        Fraction(entry["slack"])
    json.dumps(d)


def test_slack_signs():
    rng = random.Random(92)
    for _ in range(30):
        s = rng.randrange(1, 4)
        n = rng.randrange(2 * s + 2, 30)
        g = gen_suspension_sphere(rng.randrange(4, 10))
        rep = verify_theorem_instance(g, s)
        up, lo = rep.bounds["thm_odd"], rep.bounds["lower_odd"]
        assert up.holds == (up.slack >= 0)
        assert lo.holds == (lo.slack <= 0)
        assert up.slack == up.value - rep.edges
        assert lo.slack == lo.value - rep.edges


def test_invalid_report_parameters():
    with pytest.raises(InvalidParameter):
        verify_theorem_instance(gen_cycle(5), 0)
