"""Exhaustive and randomized searches plus corpus checking.

The exhaustive enumerator walks graphs up to isomorphism by vertex
extension: every class on k+1 vertices arises by attaching a new vertex to
the canonical representative of one of its (k-vertex) deleted subgraphs,
so extending every class on k vertices by every neighborhood mask and
deduplicating on the canonical key visits every class exactly once per
key.  A clique-size cap prunes during generation (induced subgraphs never
gain cliques, so capped classes cannot reappear later).  Search output is
deterministic and byte-identical regardless of worker count.
"""

import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import kernels
from .bounds import (
    edge_bound_even_conjecture,
    edge_bound_odd,
    verify_theorem_instance,
)
from .complexes import (
    check_dehn_sommerville,
    check_klee,
    euler_characteristic,
    f_vector,
    gamma_vector,
    graph_f_vector,
    h_vector,
)
from .errors import BudgetExceeded, InvalidParameter, NotPalindromic, ParseError
from .formats import dump_edge_list, load_instances
from .generators import gen_join_of_cycles
from .graphs import Graph
from .structure import LeveledVerdict, is_d_leveled, is_flag, is_weak_pseudomanifold

DEFAULT_CAP_LEVEL_ONE = 10
DEFAULT_CAP = 8


def exhaustive_cap(d):
    """Feasibility cap on n for exhaustive mode; FLAGSTONE_CAP overrides."""
    env = os.environ.get("FLAGSTONE_CAP", "").strip()
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidParameter(f"FLAGSTONE_CAP must be an integer, got {env!r}") from None
    return DEFAULT_CAP_LEVEL_ONE if d == 1 else DEFAULT_CAP


@dataclass(frozen=True)
class SearchConfig:
    mode: str
    d: int
    n_min: int
    n_max: int
    s: int = None
    seed: int = None
    workers: int = 1
    out: str = None
    dedup: bool = True
    budget: int = 1000
    allow_huge: bool = False

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random"):
            raise InvalidParameter(f"unknown search mode {self.mode!r}")
        if self.d < 1:
            raise InvalidParameter("need level d >= 1")
        if not 1 <= self.n_min <= self.n_max:
            raise InvalidParameter("need 1 <= n_min <= n_max")
        if self.mode == "random" and self.seed is None:
            raise InvalidParameter("random mode needs an explicit seed")

    @property
    def s_effective(self):
        if self.s is not None:
            return self.s
        return (self.d + 1) // 2 if self.d % 2 else max(1, self.d // 2)


@dataclass(frozen=True)
class SearchResult:
    """Per-n summaries plus full reports for the extremal instances.

    Serialization excludes the worker count and output path on purpose:
    results must be byte-identical however the work was split.
    """

    mode: str
    d: int
    s: int
    n_min: int
    n_max: int
    seed: int
    budget: int
    per_n: tuple
    reports: tuple
    notes: tuple

    def to_json_dict(self):
        return {
            "mode": self.mode,
            "d": self.d,
            "s": self.s,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "seed": self.seed,
            "budget": self.budget,
            "per_n": list(self.per_n),
            "reports": list(self.reports),
            "notes": list(self.notes),
        }

    def to_json_bytes(self):
        return (json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":")) + "\n").encode("ascii")


def _extend_chunk(args):
    keys, k, clique_cap = args
    out = set()
    for key in keys:
        base = kernels.key_to_masks(key, k)
        for new_mask in range(1 << k):
            if clique_cap is not None and new_mask:
                nbr_rows = [base[v] & new_mask if (new_mask >> v) & 1 else 0 for v in range(k)]
                if 1 + kernels.clique_number(nbr_rows, k, stop_at=clique_cap) > clique_cap:
                    continue
            rows = list(base) + [new_mask]
            for v in range(k):
                if (new_mask >> v) & 1:
                    rows[v] |= 1 << k
            out.add(kernels.canonical_key(rows, k + 1))
    return out


def enumerate_classes(n_max, clique_cap=None, workers=1):
    """Canonical keys of all isomorphism classes, per vertex count.

    Returns {n: sorted key list} for 1 <= n <= n_max, restricted to graphs
    with clique number <= clique_cap when a cap is given.
    """
    levels = {1: [0]}
    for k in range(1, n_max):
        keys = levels[k]
        if workers > 1 and len(keys) > workers:
            chunks = [(keys[i::workers], k, clique_cap) for i in range(workers)]
            merged = set()
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for part in pool.map(_extend_chunk, chunks):
                    merged |= part
        else:
            merged = _extend_chunk((keys, k, clique_cap))
        levels[k + 1] = sorted(merged)
    return levels


def graph_from_key(key, n):
    return Graph(n, tuple(kernels.key_to_masks(key, n)))


def _bound_for(n, d, s):
    return edge_bound_odd(n, s) if d % 2 else edge_bound_even_conjecture(n, s)


def exhaustive_search(cfg):
    """Enumerate all classes up to n_max, filter by the level test, report
    extremes per n.  Raises BudgetExceeded when n_max is over the cap and
    the config does not acknowledge the blowup."""
    if cfg.mode != "exhaustive":
        raise InvalidParameter("config is not in exhaustive mode")
    cap = exhaustive_cap(cfg.d)
    if cfg.n_max > cap and not cfg.allow_huge:
        raise BudgetExceeded(
            f"n_max={cfg.n_max} exceeds the exhaustive cap {cap}; "
            "pass the explicit acknowledgment flag or set FLAGSTONE_CAP to proceed"
        )
    s = cfg.s_effective
    levels = enumerate_classes(cfg.n_max, clique_cap=cfg.d + 1, workers=max(1, cfg.workers))
    per_n = []
    reports = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        found = []
        for key in levels[n]:
            g = graph_from_key(key, n)
            if is_d_leveled(g, cfg.d).is_leveled:
                found.append(key)
        bound = _bound_for(n, cfg.d, s)
        entry = {
            "n": n,
            "classes_enumerated": len(levels[n]),
            "leveled_classes": len(found),
            "max_edges": None,
            "argmax_edges": None,
            "bound": str(bound),
            "bound_holds": None,
        }
        if found:
            best_edges = max(key.bit_count() for key in found)
            best_key = min(key for key in found if key.bit_count() == best_edges)
            best = graph_from_key(best_key, n)
            entry["max_edges"] = best_edges
            entry["argmax_edges"] = [[u, v] for u, v in best.edges()]
            entry["bound_holds"] = best_edges <= bound
            if cfg.d % 2:
                reports.append(
                    verify_theorem_instance(best, s, instance=f"exhaustive:n={n}").to_json_dict()
                )
        per_n.append(entry)
    notes = (
        f"exhaustive over all isomorphism classes with clique number <= {cfg.d + 1}, "
        f"n in [{cfg.n_min}, {cfg.n_max}]; no claim beyond this range",
    )
    return SearchResult(
        mode="exhaustive",
        d=cfg.d,
        s=s,
        n_min=cfg.n_min,
        n_max=cfg.n_max,
        seed=cfg.seed,
        budget=cfg.budget,
        per_n=tuple(per_n),
        reports=tuple(reports),
        notes=notes,
    )


def _random_moves(g, rng, d, budget):
    """Walk by single edge swaps, staying on graphs that pass the level test."""
    found = []
    current = g
    for _ in range(budget):
        edges = current.edges()
        non_edges = [
            (u, v)
            for u in range(current.n)
            for v in range(u + 1, current.n)
            if not current.has_edge(u, v)
        ]
        if not edges or not non_edges:
            break
        drop = edges[rng.randrange(len(edges))]
        add = non_edges[rng.randrange(len(non_edges))]
        candidate = current.without_edge(*drop).with_edge(*add)
        if is_d_leveled(candidate, d).is_leveled:
            found.append(candidate)
            current = candidate
    return found


def random_search(cfg):
    """Seeded local search around balanced cycle joins; reproducible."""
    if cfg.mode != "random":
        raise InvalidParameter("config is not in random mode")
    s = cfg.s_effective
    per_n = []
    reports = []
    notes = [
        f"random local search, seed={cfg.seed}, budget={cfg.budget} moves per n; "
        "findings are samples, not exhaustive claims",
    ]
    if cfg.budget > 0:
        for n in range(cfg.n_min, cfg.n_max + 1):
            if n < 4 * s:
                notes.append(f"n={n} skipped: below the smallest {s}-cycle-join size {4 * s}")
                continue
            rng = random.Random(1000003 * cfg.seed + n)
            base = gen_join_of_cycles(s, n)
            candidates = [base] if is_d_leveled(base, cfg.d).is_leveled else []
            candidates += _random_moves(base, rng, cfg.d, cfg.budget)
            bound = _bound_for(n, cfg.d, s)
            entry = {
                "n": n,
                "candidates_found": len(candidates),
                "max_edges": None,
                "argmax_edges": None,
                "bound": str(bound),
                "bound_holds": None,
            }
            if candidates:
                best = max(candidates, key=lambda g: g.edge_count)
                entry["max_edges"] = best.edge_count
                entry["argmax_edges"] = [[u, v] for u, v in best.edges()]
                entry["bound_holds"] = best.edge_count <= bound
                if cfg.d % 2:
                    reports.append(
                        verify_theorem_instance(best, s, instance=f"random:n={n}").to_json_dict()
                    )
            per_n.append(entry)
    return SearchResult(
        mode="random",
        d=cfg.d,
        s=s,
        n_min=cfg.n_min,
        n_max=cfg.n_max,
        seed=cfg.seed,
        budget=cfg.budget,
        per_n=tuple(per_n),
        reports=tuple(reports),
        notes=tuple(notes),
    )


# -- corpus checking ----------------------------------------------------


def detect_level(g):
    """Candidate level from the maximal clique sizes, with its verdict.

    When all maximal cliques share one size k the only viable level is
    k-1 and the full test runs there; otherwise the verdict is negative
    with the first wrong-size clique as witness.
    """
    if g.n == 0:
        return 0, LeveledVerdict(False, 0, (("empty",),))
    cliques = g.maximal_cliques()
    sizes = sorted({len(c) for c in cliques})
    if len(sizes) == 1:
        d = sizes[0] - 1
        return d, is_d_leveled(g, d)
    d = sizes[-1] - 1
    bad = next(c for c in cliques if len(c) != d + 1)
    return d, LeveledVerdict(False, d, (("maximal-clique", bad),))


def _graph_entry(instance, g, flag_info=None):
    entry = {"instance": instance, "kind": "graph", "n": g.n, "edges": g.edge_count}
    if flag_info is not None:
        entry["flag"] = flag_info
    else:
        entry["flag"] = {"verdict": True, "note": "clique complex of the graph; flag by construction"}
    f = graph_f_vector(g)
    d = len(f) - 2
    h = h_vector(f, d)
    chi = euler_characteristic(f)
    ds_all, ds_per = check_dehn_sommerville(h)
    klee_all, klee_per = check_klee(h, chi, d)
    entry["f"] = list(f)
    entry["h"] = list(h)
    entry["chi"] = chi
    entry["dehn_sommerville"] = {"all": ds_all, "per_index": list(ds_per)}
    entry["klee"] = {"all": klee_all, "per_index": list(klee_per)}
    try:
        entry["gamma"] = list(gamma_vector(h))
    except NotPalindromic:
        entry["gamma"] = None
    level_d, verdict = detect_level(g)
    entry["leveled"] = {"d": level_d, "verdict": verdict.is_leveled}
    entry["pseudomanifold"] = verdict.is_leveled
    entry["potential_counterexample"] = False
    if verdict.is_leveled and level_d % 2 == 1:
        s = (level_d + 1) // 2
        report = verify_theorem_instance(g, s, instance=instance)
        entry["report"] = report.to_json_dict()
        entry["potential_counterexample"] = report.potential_counterexample
    elif verdict.is_leveled and level_d >= 2:
        s = level_d // 2
        bound = edge_bound_even_conjecture(g.n, s)
        holds = g.edge_count <= bound
        note = None
        if not ds_all:
            note = "conjectured bound targets sphere-like instances; this one fails the palindromy test"
        entry["report"] = {
            "instance": instance,
            "n": g.n,
            "s": s,
            "edges": g.edge_count,
            "bounds": {
                "conj_even": {
                    "value": str(bound),
                    "holds": holds,
                    "equality": g.edge_count == bound,
                    "status": "conjecture",
                }
            },
            "leveled": {"d": level_d, "verdict": True},
            "notes": [note] if note else [],
        }
    return entry


def check_instance(instance, obj):
    """Full pipeline for one parsed graph or complex."""
    if isinstance(obj, Graph):
        return _graph_entry(instance, obj)
    entry = {"instance": instance, "kind": "complex", "n": obj.n, "facets": len(obj.facets)}
    flag_ok, witness = is_flag(obj)
    dim = obj.dimension
    pm_ok, pm_witness = is_weak_pseudomanifold(obj, dim)
    entry["pseudomanifold"] = pm_ok
    if not pm_ok:
        entry["pseudomanifold_witness"] = list(map(str, pm_witness))
    if flag_ok:
        sub = _graph_entry(instance, obj.one_skeleton(), flag_info={"verdict": True})
        sub.update({"kind": "complex", "facets": len(obj.facets), "pseudomanifold": pm_ok})
        if not pm_ok:
            sub["pseudomanifold_witness"] = list(map(str, pm_witness))
        return sub
    entry["flag"] = {"verdict": False, "witness": list(witness)}
    f = f_vector(obj)
    entry["f"] = list(f)
    if len(f) == dim + 2:
        h = h_vector(f, dim)
        chi = euler_characteristic(f)
        ds_all, ds_per = check_dehn_sommerville(h)
        entry["h"] = list(h)
        entry["chi"] = chi
        entry["dehn_sommerville"] = {"all": ds_all, "per_index": list(ds_per)}
        klee_all, klee_per = check_klee(h, chi, dim)
        entry["klee"] = {"all": klee_all, "per_index": list(klee_per)}
    entry["leveled"] = None
    entry["notes"] = ["not flag: level and bound checks apply to clique complexes only"]
    entry["potential_counterexample"] = False
    return entry


def run_corpus_checks(paths):
    """Check every file, isolating failures per file.

    Returns a list of entry dicts; parse failures become entries with kind
    "error" carrying the message and position, and never abort the batch.
    """
    entries = []
    for path in paths:
        try:
            instances = load_instances(path)
        except ParseError as exc:
            entries.append(
                {
                    "instance": str(path),
                    "kind": "error",
                    "error": {"message": str(exc), "path": exc.path, "line": exc.line},
                }
            )
            continue
        for instance, obj in instances:
            entries.append(check_instance(instance, obj))
    return entries


def corpus_summary(entries):
    """Aggregate counts for a corpus run."""
    ok = sum(
        1
        for e in entries
        if e["kind"] != "error" and not e.get("potential_counterexample")
    )
    errors = sum(1 for e in entries if e["kind"] == "error")
    counterexamples = sum(1 for e in entries if e.get("potential_counterexample"))
    equalities = 0
    for e in entries:
        report = e.get("report")
        if report:
            equalities += sum(1 for b in report["bounds"].values() if b.get("equality"))
    return {
        "instances": len(entries),
        "ok": ok,
        "parse_errors": errors,
        "potential_counterexamples": counterexamples,
        "equality_cases": equalities,
    }
