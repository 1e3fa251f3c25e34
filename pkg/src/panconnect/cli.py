"""Command-line surface: generate, verify, iso, sweep, and replay."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import __version__, checks, morphisms, pansearch
from .graphs import format_edge_list, meta_dict, read_edge_list

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class RunConfig:
    command: str
    family: str | None = None
    n: int | None = None
    m: int | None = None
    checks: tuple[str, ...] = ()
    budget: int = pansearch.DEFAULT_NODE_BUDGET
    witnesses: bool = False
    symmetry_reduced: bool = False
    seed: int = 0
    jobs: int = 1
    timing: bool = False
    output: str | None = None
    fmt: str = "json"
    n_min: int | None = None
    n_max: int | None = None
    m_min: int = 1
    m_max: int | None = None
    max_vertices: int = 500

    def echo(self) -> dict:
        out = {"command": self.command}
        if self.family is not None:
            out["family"] = self.family
        if self.n is not None:
            out["n"] = self.n
        if self.m is not None:
            out["m"] = self.m
        if self.checks:
            out["checks"] = list(self.checks)
        if self.command in ("verify", "sweep"):
            out.update(
                budget=self.budget,
                witnesses=self.witnesses,
                symmetry_reduced=self.symmetry_reduced,
                seed=self.seed,
                jobs=self.jobs,
            )
        if self.command == "sweep":
            out.update(
                n_min=self.n_min,
                n_max=self.n_max,
                m_min=self.m_min,
                m_max=self.m_max,
                max_vertices=self.max_vertices,
                format=self.fmt,
            )
        return out


def _write_output(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def _parse_checks(raw: str) -> tuple[str, ...]:
    names = tuple(part.strip() for part in raw.split(",") if part.strip())
    if not names:
        raise ValueError("at least one check name is required")
    for name in names:
        if name not in checks.CHECK_NAMES:
            raise ValueError(
                f"unknown check {name!r}; choose from {', '.join(checks.CHECK_NAMES)}"
            )
    return names


def _serialize_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _make_report(config: RunConfig, graph_meta: dict | None, results) -> dict:
    check_dicts = [r.to_dict(timing=config.timing) for r in results]
    verdicts = [r.verdict for r in results]
    if any(v == pansearch.INCONCLUSIVE for v in verdicts):
        overall = pansearch.INCONCLUSIVE
    elif any(v == pansearch.FAIL for v in verdicts):
        overall = pansearch.FAIL
    else:
        overall = pansearch.PASS
    wall_ms = int(sum(r.elapsed_ms for r in results)) if config.timing else 0
    report = {
        "schema": checks.SCHEMA,
        "tool": {"name": "panconnect", "version": __version__},
        "config": config.echo(),
        "checks": check_dicts,
        "verdict": overall,
        "wall_ms": wall_ms,
    }
    if graph_meta is not None:
        report["graph"] = graph_meta
    return report


def cmd_generate(config: RunConfig) -> int:
    g = checks.build_family_graph(config.family, config.n, config.m)
    _write_output(format_edge_list(g), config.output)
    return EXIT_PASS


def cmd_verify(config: RunConfig) -> int:
    g = checks.build_family_graph(config.family, config.n, config.m)
    opts = checks.CheckOptions(
        budget=config.budget,
        witnesses=config.witnesses,
        symmetry_reduced=config.symmetry_reduced,
        seed=config.seed,
    )
    results = [
        checks.run_check(config.family, config.n, config.m, name, opts, graph=g)
        for name in config.checks
    ]
    report = _make_report(config, meta_dict(g), results)
    _write_output(_serialize_report(report), config.output)
    return EXIT_PASS if report["verdict"] == pansearch.PASS else EXIT_FAIL


def cmd_iso(config: RunConfig) -> int:
    try:
        bij = morphisms.layer_square_isomorphism(config.n, config.m)
    except morphisms.CertificationError as exc:
        payload = morphisms.bijection_to_dict(exc.bijection)
        _write_output(json.dumps(payload, indent=2, sort_keys=True) + "\n", config.output)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    payload = morphisms.bijection_to_dict(bij)
    _write_output(json.dumps(payload, indent=2, sort_keys=True) + "\n", config.output)
    return EXIT_PASS


def _family_m_range(family: str, n: int, m_min: int, m_max: int | None) -> range:
    cap = n // 2 if family == "johnson" else (n - 1) // 2
    if m_max is not None:
        cap = min(cap, m_max)
    return range(m_min, cap + 1)


def _sweep_tasks(config: RunConfig) -> list[tuple[str, int, int, str]]:
    from .graphs import expected_vertex_count

    tasks = []
    for n in range(config.n_min, config.n_max + 1):
        for m in _family_m_range(config.family, n, config.m_min, config.m_max):
            size = expected_vertex_count(config.family, n, m)
            if size is not None and size > config.max_vertices:
                continue
            for check in config.checks:
                tasks.append((config.family, n, m, check))
    return tasks


def cmd_sweep(config: RunConfig) -> int:
    if config.n_min is None or config.n_max is None:
        raise ValueError("sweep requires --n-min and --n-max")
    if config.n_min > config.n_max:
        raise ValueError("--n-min must not exceed --n-max")
    tasks = _sweep_tasks(config)
    if not tasks:
        raise ValueError("sweep grid is empty")
    opts = checks.CheckOptions(
        budget=config.budget,
        witnesses=False,
        symmetry_reduced=config.symmetry_reduced,
        seed=config.seed,
    )

    def run(task):
        family, n, m, check = task
        return task, checks.run_check(family, n, m, check, opts)

    if config.jobs > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            outcomes = list(pool.map(run, tasks))
    else:
        outcomes = [run(t) for t in tasks]
    outcomes.sort(key=lambda item: (item[0][0], item[0][1], item[0][2], item[0][3]))

    if config.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(checks.CSV_COLUMNS)
        for (family, n, m, _check), result in outcomes:
            writer.writerow(
                checks.result_to_csv_row(family, n, m, result, config.timing)
            )
        _write_output(buf.getvalue(), config.output)
    else:
        rows = []
        for (family, n, m, _check), result in outcomes:
            row = {"family": family, "n": n, "m": m}
            row.update(result.to_dict(timing=config.timing))
            rows.append(row)
        report = {
            "schema": checks.SCHEMA,
            "tool": {"name": "panconnect", "version": __version__},
            "config": config.echo(),
            "rows": rows,
        }
        _write_output(_serialize_report(report), config.output)
    all_pass = all(r.verdict == pansearch.PASS for _, r in outcomes)
    return EXIT_PASS if all_pass else EXIT_FAIL


def cmd_replay(graph_path: str, report_path: str) -> int:
    g = read_edge_list(graph_path)
    with open(report_path, "r", encoding="ascii") as fh:
        report = json.load(fh)
    entries = report.get("checks", report.get("rows", []))
    if not isinstance(entries, list):
        raise ValueError("report carries no check entries")
    confirmed = 0
    problems = 0
    for entry in entries:
        name = entry.get("name", "?")
        counterexample = entry.get("counterexample")
        if counterexample is not None:
            ok, description = checks.replay_counterexample(g, counterexample)
            print(f"{name}: {'confirmed' if ok else 'NOT CONFIRMED'} — {description}")
            confirmed += ok
            problems += not ok
        validated, failed = checks.replay_witnesses(g, entry)
        if validated or failed:
            print(f"{name}: witnesses revalidated {validated}, failed {failed}")
            problems += failed > 0
    if problems:
        return EXIT_FAIL
    print(f"replay complete: {confirmed} counterexamples confirmed")
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="panconnect",
        description=(
            "Construct Johnson and Boolean-lattice layer graphs, certify their "
            "explicit isomorphisms, and verify connectivity, transitivity, and "
            "path-spectrum properties with machine-checkable witnesses."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family(p):
        p.add_argument("--family", choices=("johnson", "layer"), required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--m", type=int, required=True)

    def add_run_flags(p):
        p.add_argument("--budget", type=int, default=pansearch.DEFAULT_NODE_BUDGET)
        p.add_argument("--witnesses", action="store_true")
        p.add_argument("--symmetry-reduced", action="store_true")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--timing", action="store_true")

    gen = sub.add_parser("generate", help="write a graph in the edge-list format")
    add_family(gen)
    gen.add_argument("-o", "--output")

    ver = sub.add_parser("verify", help="run checks and emit a JSON report")
    add_family(ver)
    ver.add_argument("--check", required=True, help="comma-separated check names")
    add_run_flags(ver)
    ver.add_argument("-o", "--output")

    iso = sub.add_parser(
        "iso", help="certify the squared layer graph against the Johnson graph"
    )
    iso.add_argument("--n", type=int, required=True)
    iso.add_argument("--m", type=int, required=True)
    iso.add_argument("-o", "--output")

    sweep = sub.add_parser("sweep", help="run a check grid and emit CSV or JSON")
    sweep.add_argument("--family", choices=("johnson", "layer"), required=True)
    sweep.add_argument("--check", required=True, help="comma-separated check names")
    sweep.add_argument("--n-min", type=int, required=True)
    sweep.add_argument("--n-max", type=int, required=True)
    sweep.add_argument("--m-min", type=int, default=1)
    sweep.add_argument("--m-max", type=int)
    sweep.add_argument("--max-vertices", type=int, default=500)
    sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    add_run_flags(sweep)
    sweep.add_argument("-o", "--output")

    rep = sub.add_parser(
        "replay", help="re-check a report's counterexamples against an edge-list file"
    )
    rep.add_argument("--graph", required=True)
    rep.add_argument("--report", required=True)
    return parser


def _effective_jobs(cli_jobs: int) -> int:
    env = os.environ.get("PANCONNECT_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"PANCONNECT_JOBS must be an integer, got {env!r}") from None
    return max(1, cli_jobs)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "generate":
            config = RunConfig(
                command="generate",
                family=args.family,
                n=args.n,
                m=args.m,
                output=args.output,
                fmt="edgelist",
            )
            return cmd_generate(config)
        if args.command == "verify":
            if args.budget <= 0:
                raise ValueError("--budget must be positive")
            config = RunConfig(
                command="verify",
                family=args.family,
                n=args.n,
                m=args.m,
                checks=_parse_checks(args.check),
                budget=args.budget,
                witnesses=args.witnesses,
                symmetry_reduced=args.symmetry_reduced,
                seed=args.seed,
                jobs=_effective_jobs(args.jobs),
                timing=args.timing,
                output=args.output,
            )
            return cmd_verify(config)
        if args.command == "iso":
            config = RunConfig(command="iso", n=args.n, m=args.m, output=args.output)
            return cmd_iso(config)
        if args.command == "sweep":
            if args.budget <= 0:
                raise ValueError("--budget must be positive")
            config = RunConfig(
                command="sweep",
                family=args.family,
                checks=_parse_checks(args.check),
                budget=args.budget,
                symmetry_reduced=args.symmetry_reduced,
                seed=args.seed,
                jobs=_effective_jobs(args.jobs),
                timing=args.timing,
                output=args.output,
                fmt=args.format,
                n_min=args.n_min,
                n_max=args.n_max,
                m_min=args.m_min,
                m_max=args.m_max,
                max_vertices=args.max_vertices,
            )
            return cmd_sweep(config)
        if args.command == "replay":
            return cmd_replay(args.graph, args.report)
        raise ValueError(f"unknown command {args.command!r}")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
