"""Edge-count bounds, the gamma-inequality, and per-instance reports.

Every bound evaluates to an exact Fraction and every verdict is an exact
comparison.  Bounds carry a status tag: "theorem" for statements with a
proof (possibly only for large n; see the notes emitted per report) and
"conjecture" for open ones.  Reports never present a conjecture failure as
an error, and a level-verified instance beating a theorem-status bound is
flagged as a potential counterexample, not as a refutation: the proven
statements are asymptotic, so a finite instance can at most be a candidate.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParameter
from .structure import is_d_leveled

STATUS_THEOREM = "theorem"
STATUS_CONJECTURE = "conjecture"


def edge_bound_odd(n, s):
    """Upper bound ((s-1)/2s) n^2 + n for graphs passing the level test at 2s-1."""
    if s < 1 or n < 1:
        raise InvalidParameter("need s >= 1 and n >= 1")
    return Fraction(s - 1, 2 * s) * n * n + n


def edge_lower_bound_odd(n, s):
    """Lower bound (4s-3) n - 8s(s-1); conjectural for s >= 3."""
    if s < 1:
        raise InvalidParameter("need s >= 1")
    return Fraction((4 * s - 3) * n - 8 * s * (s - 1))


def lower_bound_status(s):
    return STATUS_THEOREM if s <= 2 else STATUS_CONJECTURE


def edge_bound_even_conjecture(n, s):
    """Conjectured upper bound ((s-1)/2s) n^2 + (1+2/s) n - (4+2/s) for
    sphere-like instances at even level 2s."""
    if s < 1:
        raise InvalidParameter("need s >= 1")
    return Fraction(s - 1, 2 * s) * n * n + (1 + Fraction(2, s)) * n - (4 + Fraction(2, s))


def gamma_check(f0, f1, s):
    """Closed-form gamma entries and the verdict gamma_2 <= ((s-1)/2s) gamma_1^2.

    gamma_1 = f0 - 4s and gamma_2 = f1 - (4s-3) f0 + 8s(s-1); the verdict
    is compared by cross-multiplication, so everything stays integral.
    The inequality is algebraically the same statement as f1 <=
    edge_bound_odd(f0, s); the test suite pins that equivalence.
    """
    if s < 1:
        raise InvalidParameter("need s >= 1")
    g1 = f0 - 4 * s
    g2 = f1 - (4 * s - 3) * f0 + 8 * s * (s - 1)
    holds = 2 * s * g2 <= (s - 1) * g1 * g1
    return g1, g2, holds


def linear_excess(g, s):
    """(|E| - ((s-1)/2s) n^2) / n: the linear-term coefficient the instance
    exhibits, for corpus-wide aggregation."""
    if g.n < 1:
        raise InvalidParameter("need at least one vertex")
    return (Fraction(g.edge_count) - Fraction(s - 1, 2 * s) * g.n * g.n) / g.n


@dataclass(frozen=True)
class BoundEntry:
    # slack = value - quantity: >= 0 when an upper bound holds, <= 0 when a
    # lower bound does, 0 exactly at equality
    value: Fraction
    holds: bool
    equality: bool
    status: str
    slack: Fraction

    def to_json_dict(self):
        return {
            "value": str(self.value),
            "holds": self.holds,
            "equality": self.equality,
            "status": self.status,
            "slack": str(self.slack),
        }


@dataclass(frozen=True)
class BoundReport:
    """Everything checked about one instance, JSON-serializable."""

    instance: str
    n: int
    s: int
    edges: int
    bounds: dict
    leveled_d: int
    leveled: bool
    gamma: tuple
    notes: tuple
    potential_counterexample: bool

    def to_json_dict(self):
        return {
            "instance": self.instance,
            "n": self.n,
            "s": self.s,
            "edges": self.edges,
            "bounds": {name: entry.to_json_dict() for name, entry in sorted(self.bounds.items())},
            "leveled": {"d": self.leveled_d, "verdict": self.leveled},
            "gamma": {"g1": self.gamma[0], "g2": self.gamma[1], "holds": self.gamma[2]},
            "notes": list(self.notes),
            "potential_counterexample": self.potential_counterexample,
        }


def upper_entry(n, s, edges):
    value = edge_bound_odd(n, s)
    return BoundEntry(value, edges <= value, edges == value, STATUS_THEOREM, value - edges)


def lower_entry(n, s, edges):
    value = edge_lower_bound_odd(n, s)
    return BoundEntry(value, edges >= value, edges == value, lower_bound_status(s), value - edges)


def even_entry(n, s, edges):
    value = edge_bound_even_conjecture(n, s)
    return BoundEntry(value, edges <= value, edges == value, STATUS_CONJECTURE, value - edges)


def verify_theorem_instance(g, s, cap=None, instance="graph"):
    """Full odd-level report: level verdict, clique-count hypothesis, both
    edge bounds, and the gamma quantities.

    cap, when given, is the constant of the clique-count hypothesis
    k_(s+1) <= cap * n^s; the report records whether the instance satisfies
    it.  A level-verified instance exceeding the upper bound sets
    potential_counterexample.  The report never asserts the asymptotic
    statement itself: the bound is proven only for all sufficiently large
    n, with a nonconstructive threshold, so finite instances can only
    corroborate it or surface candidates.
    """
    if s < 1:
        raise InvalidParameter("need s >= 1")
    d = 2 * s - 1
    n, edges = g.n, g.edge_count
    verdict = is_d_leveled(g, d)
    notes = [
        "upper bound proven only for n large (nonconstructive threshold); "
        "verdicts at this n corroborate or contradict the finite-n question only",
    ]
    k = g.clique_count(s + 1)
    if cap is not None:
        cap = Fraction(cap)
        hyp = Fraction(k) <= cap * Fraction(n) ** s
        notes.append(
            f"clique hypothesis k_{s + 1} = {k} {'<=' if hyp else '>'} {cap} * n^{s}"
        )
    else:
        notes.append(f"clique count k_{s + 1} = {k}; no cap supplied")
    if not verdict.is_leveled:
        notes.append(f"level test failed at d={d}; bounds reported for reference only")
    bounds = {
        "thm_odd": upper_entry(n, s, edges),
        "lower_odd": lower_entry(n, s, edges),
    }
    return BoundReport(
        instance=instance,
        n=n,
        s=s,
        edges=edges,
        bounds=bounds,
        leveled_d=d,
        leveled=verdict.is_leveled,
        gamma=gamma_check(n, edges, s),
        notes=tuple(notes),
        potential_counterexample=verdict.is_leveled and not bounds["thm_odd"].holds,
    )
