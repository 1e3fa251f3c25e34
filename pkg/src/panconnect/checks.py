"""Check runners shared by the verify, sweep, and replay commands."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from . import connectivity as conn
from . import morphisms, pansearch
from .graphs import Graph, build_johnson, build_layer_graph, degree_stats, meta_dict

CHECK_NAMES = (
    "square-iso",
    "connectivity",
    "transitivity",
    "panconnected",
    "pancyclic",
    "hamilton-connected",
)

SCHEMA = "panconnect-report/1"


@dataclass
class CheckOptions:
    budget: float = pansearch.DEFAULT_NODE_BUDGET
    witnesses: bool = False
    symmetry_reduced: bool = False
    seed: int = 0
    spot_check_trials: int = 100


@dataclass
class CheckResult:
    name: str
    verdict: str
    details: dict = field(default_factory=dict)
    counterexample: dict | None = None
    stats: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def to_dict(self, timing: bool = False) -> dict:
        stats = dict(self.stats)
        stats["ms"] = int(self.elapsed_ms) if timing else 0
        out = {
            "name": self.name,
            "verdict": self.verdict,
            "details": self.details,
            "stats": stats,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def build_family_graph(family: str, n: int, m: int) -> Graph:
    if family == "johnson":
        return build_johnson(n, m)
    if family == "layer":
        return build_layer_graph(n, m)
    raise ValueError(f"cannot build family {family!r} from parameters")


def expected_kappa(family: str, n: int, m: int) -> int | None:
    """Minimum-degree value each family is expected to attain as connectivity."""
    if family == "layer":
        return m + 1
    if family == "johnson":
        return m * (n - m)
    return None


def _run_square_iso(family: str, n: int, m: int, opts: CheckOptions) -> CheckResult:
    if family != "layer":
        raise ValueError("square-iso check takes layer-graph parameters")
    try:
        bij = morphisms.layer_square_isomorphism(n, m)
    except morphisms.CertificationError as exc:
        refuted = exc.bijection
        u, v = refuted.refutation if refuted.refutation else (None, None)
        return CheckResult(
            "square-iso",
            pansearch.FAIL,
            details={
                "source": meta_dict(refuted.source),
                "target": meta_dict(refuted.target),
                "certified": False,
            },
            counterexample={"type": "refuted-isomorphism", "u": u, "v": v},
        )
    return CheckResult(
        "square-iso",
        pansearch.PASS,
        details={
            "source": meta_dict(bij.source),
            "target": meta_dict(bij.target),
            "certified": True,
            "edges_matched": bij.source.edge_count,
        },
    )


def _run_connectivity(g: Graph, opts: CheckOptions) -> CheckResult:
    kappa, pair, separator = conn.vertex_connectivity_witness(g)
    stats_row = degree_stats(g)
    expected = expected_kappa(g.meta.family, g.meta.n, g.meta.m)
    spot_ok = conn.deletion_spot_check(
        g, kappa, trials=opts.spot_check_trials, seed=opts.seed
    )
    ok = kappa == stats_row.min_degree and spot_ok
    if expected is not None:
        ok = ok and kappa == expected
    details = {
        "kappa": kappa,
        "delta": stats_row.min_degree,
        "expected": expected,
        "min_cut_pair": list(pair) if pair else None,
        "separator": separator,
        "spot_check": {
            "trials": opts.spot_check_trials,
            "seed": opts.seed,
            "all_connected": spot_ok,
        },
    }
    counterexample = None
    if not ok and separator is not None:
        counterexample = {
            "type": "vertex-separator",
            "separator": separator,
            "kappa": kappa,
        }
    elif not ok:
        counterexample = {"type": "vertex-separator", "separator": [], "kappa": kappa}
    return CheckResult(
        "connectivity",
        pansearch.PASS if ok else pansearch.FAIL,
        details=details,
        counterexample=counterexample,
        stats={"kappa": kappa, "delta": stats_row.min_degree},
    )


def _run_transitivity(g: Graph, opts: CheckOptions) -> CheckResult:
    family, n, m = g.meta.family, g.meta.n, g.meta.m
    if family not in ("johnson", "layer"):
        raise ValueError("transitivity claims exist for johnson and layer families only")
    gens: list[morphisms.Generator] = list(morphisms.adjacent_transpositions(n))
    vertex_gens = list(gens)
    if family == "layer" and n == 2 * m + 1:
        vertex_gens.append(morphisms.LayerSwap(n))
    single_vertex_orbit, parts = morphisms.check_vertex_transitive(g, vertex_gens)
    edge_transitive = morphisms.check_edge_transitive(g, gens)
    stats_row = degree_stats(g)

    if single_vertex_orbit:
        vertex_transitive = True
    elif not stats_row.is_regular:
        vertex_transitive = False
    else:
        vertex_transitive = None  # subgroup inconclusive

    details = {
        "vertex_transitive": vertex_transitive,
        "edge_transitive": edge_transitive,
        "regular": stats_row.is_regular,
        "vertex_orbit_sizes": sorted(len(p) for p in parts),
        "layer_swap_used": family == "layer" and n == 2 * m + 1,
    }
    if vertex_transitive is False:
        lo = next(v for v in range(g.num_vertices) if g.degree(v) == stats_row.min_degree)
        hi = next(v for v in range(g.num_vertices) if g.degree(v) == stats_row.max_degree)
        details["irregularity_witness"] = {
            "u": lo,
            "v": hi,
            "deg_u": stats_row.min_degree,
            "deg_v": stats_row.max_degree,
        }

    if family == "johnson":
        ok = vertex_transitive is True
    else:
        expected_vt = n == 2 * m + 1
        ok = edge_transitive and vertex_transitive is (True if expected_vt else False)
    counterexample = None
    if not ok:
        counterexample = {
            "type": "transitivity-mismatch",
            "vertex_transitive": vertex_transitive,
            "edge_transitive": edge_transitive,
            "orbit_sizes": details["vertex_orbit_sizes"],
        }
    return CheckResult(
        "transitivity",
        pansearch.PASS if ok else pansearch.FAIL,
        details=details,
        counterexample=counterexample,
    )


def _run_pair_sweep(g: Graph, check: str, opts: CheckOptions) -> CheckResult:
    if check == "panconnected":
        if opts.symmetry_reduced:
            report = pansearch.verify_panconnected_symmetry_reduced(
                g, budget=opts.budget, keep_witnesses=opts.witnesses
            )
        else:
            report = pansearch.verify_panconnected(
                g, budget=opts.budget, keep_witnesses=opts.witnesses
            )
    else:
        report = pansearch.verify_hamilton_connected(
            g, budget=opts.budget, keep_witnesses=opts.witnesses
        )
    missing = [[p.u, p.v, l] for p in report.pairs for l in p.missing]
    inconclusive = [[p.u, p.v, l] for p in report.pairs for l in p.inconclusive]
    details = {
        "pairs_checked": report.pairs_checked,
        "lengths_checked": report.lengths_checked,
        "symmetry_reduced": report.symmetry_reduced,
        "witnesses_validated": report.witnesses_validated,
        "all_lengths_achieved": not missing and not inconclusive,
        "missing": missing,
        "inconclusive": inconclusive,
    }
    if opts.witnesses:
        details["pairs"] = [p.to_dict(include_witnesses=True) for p in report.pairs]
    return CheckResult(
        check,
        report.verdict,
        details=details,
        counterexample=report.counterexample,
        stats={
            "pairs": report.pairs_checked,
            "lengths_checked": report.lengths_checked,
            "nodes_expanded": report.nodes_expanded,
        },
        elapsed_ms=report.elapsed_ms,
    )


def _run_pancyclic(g: Graph, opts: CheckOptions) -> CheckResult:
    report = pansearch.verify_pancyclic(
        g, budget=opts.budget, keep_witnesses=opts.witnesses
    )
    details = {
        "lengths_checked": report.lengths_checked,
        "found": sum(1 for r in report.lengths if r.status == pansearch.FOUND),
        "missing": [r.length for r in report.lengths if r.status == pansearch.NOT_FOUND],
        "inconclusive": [
            r.length for r in report.lengths if r.status == pansearch.BUDGET_EXHAUSTED
        ],
    }
    if opts.witnesses:
        details["lengths"] = [r.to_dict(include_witnesses=True) for r in report.lengths]
    return CheckResult(
        "pancyclic",
        report.verdict,
        details=details,
        counterexample=report.counterexample,
        stats={
            "lengths_checked": report.lengths_checked,
            "nodes_expanded": report.nodes_expanded,
        },
        elapsed_ms=report.elapsed_ms,
    )


def run_check(
    family: str, n: int, m: int, check: str, opts: CheckOptions, graph: Graph | None = None
) -> CheckResult:
    """Run one named check against the (family, n, m) instance."""
    if check not in CHECK_NAMES:
        raise ValueError(f"unknown check {check!r}; choose from {', '.join(CHECK_NAMES)}")
    started = time.perf_counter()
    if check == "square-iso":
        result = _run_square_iso(family, n, m, opts)
    else:
        g = graph if graph is not None else build_family_graph(family, n, m)
        if check == "connectivity":
            result = _run_connectivity(g, opts)
        elif check == "transitivity":
            result = _run_transitivity(g, opts)
        elif check == "pancyclic":
            result = _run_pancyclic(g, opts)
        else:
            result = _run_pair_sweep(g, check, opts)
    result.elapsed_ms = (time.perf_counter() - started) * 1000.0
    return result


def replay_counterexample(g: Graph, counterexample: dict) -> tuple[bool, str]:
    """Independently confirm an embedded counterexample against a graph.

    Returns (confirmed, description); unknown counterexample types are not
    confirmable.
    """
    kind = counterexample.get("type")
    if kind == "missing-path":
        u, v, length = (
            int(counterexample["u"]),
            int(counterexample["v"]),
            int(counterexample["length"]),
        )
        result = pansearch.find_path_of_length(g, u, v, length, budget=math.inf)
        ok = result.status == pansearch.NOT_FOUND
        return ok, (
            f"missing-path u={u} v={v} length={length}: "
            f"exhaustive search says {result.status}"
        )
    if kind == "missing-cycle":
        length = int(counterexample["length"])
        result = pansearch.find_cycle_of_length(g, length, budget=math.inf)
        ok = result.status == pansearch.NOT_FOUND
        return ok, f"missing-cycle length={length}: exhaustive search says {result.status}"
    if kind == "vertex-separator":
        separator = [int(x) for x in counterexample["separator"]]
        kappa = int(counterexample["kappa"])
        if len(separator) != kappa:
            return False, f"separator size {len(separator)} disagrees with kappa={kappa}"
        removed = set(separator)
        remaining = [v for v in range(g.num_vertices) if v not in removed]
        if not remaining:
            return False, "separator removes every vertex"
        seen = {remaining[0]}
        stack = [remaining[0]]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if y not in removed and y not in seen:
                    seen.add(y)
                    stack.append(y)
        ok = len(seen) != len(remaining)
        return ok, (
            f"vertex-separator {separator}: removal "
            f"{'disconnects' if ok else 'does not disconnect'} the graph"
        )
    if kind == "irregular-degrees":
        u, v = int(counterexample["u"]), int(counterexample["v"])
        ok = g.degree(u) != g.degree(v)
        return ok, (
            f"irregular-degrees u={u} (deg {g.degree(u)}) vs v={v} (deg {g.degree(v)})"
        )
    return False, f"counterexample type {kind!r} cannot be replayed"


def replay_witnesses(g: Graph, check_entry: dict) -> tuple[int, int]:
    """Revalidate any witnesses embedded in a serialized check entry.

    Returns (validated, failed) counts.
    """
    validated = 0
    failed = 0
    details = check_entry.get("details", {})
    for row in details.get("pairs", []):
        for verts in row.get("witnesses", []):
            witness = pansearch.PathWitness(tuple(verts), len(verts) - 1)
            if pansearch.validate_path_witness(g, witness):
                validated += 1
            else:
                failed += 1
    for row in details.get("lengths", []):
        verts = row.get("witness")
        if verts:
            cycle = pansearch.CycleWitness(tuple(verts))
            if pansearch.validate_cycle_witness(g, cycle):
                validated += 1
            else:
                failed += 1
    return validated, failed


def pan_implications(
    pan: pansearch.PanReport,
    hamilton: pansearch.PanReport,
    pancyclic: pansearch.PancyclicReport,
) -> list[str]:
    """Violations of the report-level monotone-consistency implications.

    A passing panconnected sweep forces a passing Hamilton-connected sweep and
    a passing pancyclic sweep (the graph has edges to close every cycle).
    """
    problems = []
    if pan.verdict == pansearch.PASS:
        if hamilton.verdict != pansearch.PASS:
            problems.append(
                f"panconnected passed but hamilton-connected is {hamilton.verdict}"
            )
        if pancyclic.verdict != pansearch.PASS:
            problems.append(f"panconnected passed but pancyclic is {pancyclic.verdict}")
    return problems


def _mentions(value) -> str:
    return "" if value is None else str(value)


def result_to_csv_row(
    family: str, n: int, m: int, result: CheckResult, timing: bool
) -> list[str]:
    """Flatten one check outcome into the fixed sweep CSV columns."""
    stats = result.stats
    return [
        family,
        str(n),
        str(m),
        result.name,
        result.verdict,
        _mentions(stats.get("kappa")),
        _mentions(stats.get("delta")),
        _mentions(stats.get("pairs")),
        _mentions(stats.get("lengths_checked")),
        _mentions(stats.get("nodes_expanded")),
        str(int(result.elapsed_ms)) if timing else "0",
    ]


CSV_COLUMNS = [
    "family",
    "n",
    "m",
    "check",
    "verdict",
    "kappa",
    "delta",
    "pairs",
    "lengths_checked",
    "nodes_expanded",
    "ms",
]
