"""``satgraph`` command line.

stdout carries one JSON run report (or CSV for ``satnum --format csv``);
progress and PASS/FAIL lines go to stderr.  Exit codes: 0 success or
affirmative verdict, 1 negative verdict, 2 usage or input error, 3 a hunt
found a saturated graph smaller than the construction.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .construct import FIXTURE_PATTERN, CliquePattern, ConstructionError, build_fixture, build_h, h_edge_count, predicted_sat
from .graph import Graph6Error, disjoint_union, empty, encode_graph6, read_graph6_lines
from .saturate import check_saturated
from .search import MAX_EXHAUSTIVE_N, heuristic_hunt, sat_bruteforce
from .verify import SUITES, run_suite

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_ALARM = 0, 1, 2, 3


class UsageError(Exception):
    """Bad input detected after argument parsing; exits with code 2."""


@dataclass
class RunReport:
    command: str
    params: dict
    result: object
    elapsed_ms: float
    version: str = __version__

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "result": self.result,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "version": self.version,
        }


def _pattern(text: str) -> CliquePattern:
    try:
        return CliquePattern.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _n_list(text: str) -> list[int]:
    """``7``, ``4-9`` or ``4,6,8``."""
    try:
        if "-" in text:
            lo, hi = (int(x) for x in text.split("-", 1))
            values = list(range(lo, hi + 1))
        else:
            values = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad n list {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError(f"empty n range {text!r}")
    return values


def resolve_threads(flag: int | None) -> int:
    if flag is not None:
        return max(1, flag)
    env = os.environ.get("SATGRAPH_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"SATGRAPH_THREADS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def _log(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


# commands -------------------------------------------------------------------


def cmd_construct(args: argparse.Namespace) -> tuple[dict, dict, int]:
    if args.fixture is not None:
        try:
            fx = build_fixture(args.fixture)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        g = fx.graph
        if args.pad is not None:
            if args.pad < g.n:
                raise UsageError(f"--pad {args.pad} is below the fixture order {g.n}")
            g = disjoint_union(g, empty(args.pad - g.n))
        params = {"fixture": args.fixture, "pad": args.pad, "out": args.out}
        result = {
            "fixture": fx.index,
            "n": g.n,
            "e": g.edge_count(),
            "pattern": list(FIXTURE_PATTERN.sizes),
            "names": fx.names,
            "probe": list(fx.probe_names()),
        }
    else:
        if args.n is None or args.pattern is None:
            raise UsageError("construct needs --n and --pattern, or --fixture")
        try:
            g = build_h(args.n, args.pattern)
        except ConstructionError as exc:
            raise UsageError(str(exc)) from None
        params = {"n": args.n, "pattern": str(args.pattern), "out": args.out}
        result = {
            "n": g.n,
            "pattern": list(args.pattern.sizes),
            "e": g.edge_count(),
            "h_edge_count": h_edge_count(args.n, args.pattern),
        }
    g6 = encode_graph6(g)
    result["graph6"] = g6.decode()
    if args.out:
        Path(args.out).write_bytes(g6 + b"\n")
    return params, result, EXIT_OK


def _read_graph(source: str):
    data = sys.stdin.buffer.read() if source == "-" else Path(source).read_bytes()
    try:
        graphs = read_graph6_lines(data)
    except Graph6Error as exc:
        raise UsageError(f"graph6 parse error: {exc}") from None
    if len(graphs) != 1:
        raise UsageError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def cmd_check(args: argparse.Namespace) -> tuple[dict, dict, int]:
    try:
        g = _read_graph(args.graph)
    except OSError as exc:
        raise UsageError(str(exc)) from None
    report = check_saturated(g, args.pattern, census=args.census, workers=args.threads)
    params = {"graph": args.graph, "pattern": str(args.pattern), "census": args.census}
    result = {"n": g.n, "e": g.edge_count(), **report.to_json()}
    return params, result, EXIT_OK if report.is_saturated else EXIT_NEGATIVE


SATNUM_CSV_FIELDS = ["n", "pattern", "sat", "extremal_count", "predicted", "agreement", "threshold", "threshold_met"]


def _satnum_row(n: int, pattern: CliquePattern, workers: int, assume_lemmas: bool, out_dir: str | None) -> dict:
    res = sat_bruteforce(n, pattern, workers=workers, assume_lemmas=assume_lemmas)
    verdict = predicted_sat(n, pattern)
    row = res.to_json()
    row["predicted"] = verdict.to_dict()
    row["agreement"] = (verdict.value == res.sat_value) if verdict.covered else None
    if verdict.covered and verdict.threshold_met is None:
        row["caveat"] = "no n-threshold is recorded for this formula"
    elif verdict.covered and not verdict.threshold_met:
        row["caveat"] = f"formula is stated for {verdict.threshold}; n={n} is below that"
    if out_dir:
        path = Path(out_dir) / f"sat_n{n}_p{'-'.join(map(str, pattern.sizes))}.g6"
        path.write_text("".join(g + "\n" for g in res.extremal_canonical))
        row["written"] = str(path)
    return row


def cmd_satnum(args: argparse.Namespace) -> tuple[dict, object, int]:
    for n in args.n:
        if n > MAX_EXHAUSTIVE_N:
            raise UsageError(f"n={n} is beyond exhaustive range (max {MAX_EXHAUSTIVE_N})")
        if n < 1:
            raise UsageError(f"n must be positive, got {n}")
    if args.out:
        Path(args.out).mkdir(parents=True, exist_ok=True)
    workers = args.threads if args.processes else 1
    rows = []
    for n in args.n:
        try:
            rows.append(_satnum_row(n, args.pattern, workers, args.assume_lemmas, args.out))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        _log(f"sat({n}, {args.pattern}) = {rows[-1]['sat_value']}  agreement={rows[-1]['agreement']}")
    params = {
        "n": args.n,
        "pattern": str(args.pattern),
        "out": args.out,
        "format": args.format,
        "assume_lemmas": args.assume_lemmas,
        "processes": args.processes,
    }
    return params, rows[0] if len(rows) == 1 else rows, EXIT_OK


def satnum_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, SATNUM_CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({
            "n": r["n"],
            "pattern": ",".join(map(str, r["pattern"])),
            "sat": r["sat_value"],
            "extremal_count": r["extremal_count"],
            "predicted": r["predicted"]["value"],
            "agreement": "" if r["agreement"] is None else str(r["agreement"]).lower(),
            "threshold": r["predicted"]["valid_n_threshold"],
            "threshold_met": "" if r["predicted"]["threshold_met"] is None else str(r["predicted"]["threshold_met"]).lower(),
        })
    return buf.getvalue()


def cmd_verify_paper(args: argparse.Namespace) -> tuple[dict, dict, int]:
    checks = run_suite(args.suite, args.max_n, args.threads, on_check=lambda c: _log(c.line()))
    failed = sum(not c.passed for c in checks)
    params = {"suite": args.suite, "max_n": args.max_n}
    result = {"checks": [c.to_json() for c in checks], "passed": len(checks) - failed, "failed": failed}
    _log(f"{len(checks) - failed}/{len(checks)} checks passed")
    return params, result, EXIT_OK if failed == 0 else EXIT_NEGATIVE


def cmd_hunt(args: argparse.Namespace) -> tuple[dict, dict, int]:
    try:
        res = heuristic_hunt(args.n, args.pattern, args.budget, args.seed, progress=args.progress)
    except (ValueError, ConstructionError) as exc:
        raise UsageError(str(exc)) from None
    params = {"n": args.n, "pattern": str(args.pattern), "budget": args.budget, "seed": args.seed, "out": args.out}
    result = res.to_json()
    out = args.out
    if res.counterexample and not out:
        out = f"hunt_n{args.n}_p{'-'.join(map(str, args.pattern.sizes))}_seed{args.seed}.g6"
    if out:
        Path(out).write_text(res.best_graph + "\n")
        result["written"] = out
    if res.counterexample:
        _log(f"ALARM: saturated graph with {res.best_edges} < {res.target_edges} edges written to {out}")
        return params, result, EXIT_ALARM
    return params, result, EXIT_OK


# parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None,
                        help="worker count (default: $SATGRAPH_THREADS, else all cores)")

    parser = argparse.ArgumentParser(prog="satgraph", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"satgraph {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="write H(n; pattern) or a fixture as graph6")
    p.add_argument("--n", type=int)
    p.add_argument("--pattern", type=_pattern)
    p.add_argument("--fixture", type=int, metavar="K", help="near-miss fixture F_K, K in 1..5")
    p.add_argument("--pad", type=int, metavar="N", help="pad a fixture with isolated vertices to N")
    p.add_argument("--out", help="graph6 output file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", parents=[common], help="saturation verdict for one graph6 graph")
    p.add_argument("--graph", required=True, help="graph6 file, or - for stdin")
    p.add_argument("--pattern", type=_pattern, required=True)
    p.add_argument("--census", action="store_true", help="list every failing non-edge")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("satnum", parents=[common], help="exact sat(n, pattern) by exhaustive search")
    p.add_argument("--n", type=_n_list, required=True, help="n, a range a-b, or a list a,b,c")
    p.add_argument("--pattern", type=_pattern, required=True)
    p.add_argument("--out", metavar="DIR", help="write extremal graphs here")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--assume-lemmas", action="store_true",
                   help="only test graphs with the large-n minimum-degree shape (not exhaustive)")
    p.add_argument("--processes", action="store_true", help="use --threads worker processes for enumeration")
    p.set_defaults(func=cmd_satnum)

    p = sub.add_parser("verify-paper", parents=[common], help="run the built-in verification grid")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--max-n", type=int, default=70)
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("hunt", parents=[common], help="search for saturated graphs below the construction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern", type=_pattern, required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="graph6 file for the best graph")
    p.add_argument("--progress", action="store_true")
    p.set_defaults(func=cmd_hunt)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        args.threads = resolve_threads(args.threads)
        params, result, code = args.func(args)
    except UsageError as exc:
        _log(f"error: {exc}")
        print(json.dumps({"command": args.command, "error": str(exc), "version": __version__}))
        return EXIT_USAGE
    params["threads"] = args.threads
    elapsed = (time.perf_counter() - start) * 1000
    if args.command == "satnum" and args.format == "csv":
        sys.stdout.write(satnum_csv(result if isinstance(result, list) else [result]))
    else:
        print(json.dumps(RunReport(args.command, params, result, elapsed).to_json()))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
