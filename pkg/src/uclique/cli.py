"""Command-line interface: ``uclique {count,verify,spectrum,dot,enumerate,bench}``.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Sequence

from . import __version__
from .clique_count import (
    clique_count_bruteforce,
    clique_count_formula,
    enumerate_cliques,
)
from .errors import DivisibilityError, DomainError, SizeLimitError
from .graph_core import (
    DEFAULT_DOT_CAP,
    VERTEX_CAP_ENV,
    ProductGraphSpec,
    default_vertex_cap,
    export_dot,
    graph_vertex_count,
    unitary_cayley_spec,
)
from .spectrum import spectrum
from .verify import SUITES

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3

SPEC_HELP = (
    "product spec: comma-separated AxB factors, each K[A,B] with B parts of "
    "A vertices, e.g. '2x3,1x2'; whitespace ignored"
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunReport:
    command: str
    inputs: dict
    results: dict = field(default_factory=dict)
    verdicts: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return any(not v["passed"] for v in self.verdicts)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)


def _graph_from_args(args) -> ProductGraphSpec | int:
    if args.spec is not None:
        return ProductGraphSpec.parse(args.spec)
    if args.n is None:
        raise UsageError("one of --n or --spec is required")
    unitary_cayley_spec(args.n)  # validates n >= 2
    return args.n


def _graph_inputs(graph) -> dict:
    if isinstance(graph, ProductGraphSpec):
        return {"spec": str(graph)}
    return {"n": graph, "spec": str(unitary_cayley_spec(graph))}


def _fmt_clique(clique) -> str:
    return "{" + ", ".join(
        "(" + ",".join(map(str, v)) + ")" if isinstance(v, tuple) else str(v) for v in clique
    ) + "}"


# -- commands ----------------------------------------------------------------


def cmd_count(args) -> tuple[RunReport, list[str]]:
    graph = _graph_from_args(args)
    report = RunReport("count", {**_graph_inputs(graph), "m": args.m})
    t = time.perf_counter()
    count = clique_count_formula(
        graph if isinstance(graph, ProductGraphSpec) else unitary_cayley_spec(graph),
        args.m,
        allow_empty=args.allow_empty,
    )
    report.timings["formula_s"] = time.perf_counter() - t
    report.results["count"] = str(count)
    lines = [str(count)]
    if args.oracle:
        if args.m == 0:
            raise UsageError("--oracle needs m >= 1")
        try:
            t = time.perf_counter()
            brute = clique_count_bruteforce(graph, args.m)
            report.timings["bruteforce_s"] = time.perf_counter() - t
        except SizeLimitError as exc:
            report.results["oracle"] = {"skipped": str(exc)}
            lines.append(f"oracle skipped: {exc}")
        else:
            report.results["oracle"] = str(brute)
            ok = brute == count
            verdict = {"name": "oracle", "passed": ok}
            if not ok:
                verdict["counterexample"] = {**_graph_inputs(graph), "m": args.m,
                                             "expected": str(brute), "actual": str(count)}
            report.verdicts.append(verdict)
            lines.append(f"bruteforce {brute}: {'agree' if ok else 'DISAGREE'}")
    return report, lines


def _suite_kwargs(fn, args) -> dict:
    wanted = {"n_max": args.n_max, "m_max": args.m_max, "r_max": args.r_max,
              "specs": args.specs, "seed": args.seed}
    params = inspect.signature(fn).parameters
    return {k: v for k, v in wanted.items() if v is not None and k in params}


def _run_suite(name: str, kwargs: dict):
    return SUITES[name](**kwargs)


def cmd_verify(args) -> tuple[RunReport, list[str]]:
    names = sorted(SUITES) if "all" in args.suite else sorted(set(args.suite))
    jobs = {name: _suite_kwargs(SUITES[name], args) for name in names}
    report = RunReport("verify", {"suites": names, "params": jobs})
    if args.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = {n: pool.submit(_run_suite, n, kw) for n, kw in jobs.items()}
            results = {n: f.result() for n, f in futures.items()}
    else:
        results = {n: _run_suite(n, kw) for n, kw in jobs.items()}
    lines = []
    for name in names:
        res = results[name]
        verdict = {"name": name, "passed": res.passed, "instances": res.instances}
        if res.counterexample is not None:
            verdict["counterexample"] = res.counterexample
        if res.notes:
            verdict["notes"] = res.notes
        report.verdicts.append(verdict)
        report.timings[name] = res.seconds
        status = "PASS" if res.passed else "FAIL"
        line = f"{status}  {name:<14} {res.instances} instances"
        if not res.passed:
            line += f"  counterexample: {res.counterexample}"
        lines.append(line)
    return report, lines


def cmd_spectrum(args) -> tuple[RunReport, list[str]]:
    table = spectrum(args.n)
    report = RunReport("spectrum", {"n": args.n})
    report.results["eigenvalues"] = list(table.eigenvalues)
    width = max(len(str(ev)) for ev in table.eigenvalues)
    return report, [" ".join(str(ev).rjust(width) for ev in table.eigenvalues)]


def cmd_dot(args) -> tuple[RunReport, list[str]]:
    graph = _graph_from_args(args)
    text = export_dot(graph, cap=args.cap)
    report = RunReport("dot", {**_graph_inputs(graph), "output": args.output})
    nodes = graph_vertex_count(graph)
    edges = text.count(" -- ")
    report.results.update(nodes=nodes, edges=edges)
    if args.output in (None, "-"):
        return report, [text.rstrip("\n")]
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return report, [f"wrote {args.output}: {nodes} nodes, {edges} edges"]


def cmd_enumerate(args) -> tuple[RunReport, list[str]]:
    graph = _graph_from_args(args)
    cliques = list(enumerate_cliques(graph, args.m, limit=args.limit))
    report = RunReport("enumerate", {**_graph_inputs(graph), "m": args.m, "limit": args.limit})
    report.results["cliques"] = [[list(v) if isinstance(v, tuple) else v for v in c]
                                 for c in cliques]
    return report, [_fmt_clique(c) for c in cliques]


def cmd_bench(args) -> tuple[RunReport, list[str]]:
    graph = _graph_from_args(args)
    spec = graph if isinstance(graph, ProductGraphSpec) else unitary_cayley_spec(graph)
    report = RunReport("bench", {**_graph_inputs(graph), "m": args.m,
                                 "repetitions": args.repetitions})
    best = float("inf")
    for _ in range(args.repetitions):
        t = time.perf_counter()
        count = clique_count_formula(spec, args.m)
        best = min(best, time.perf_counter() - t)
    report.results["count"] = str(count)
    report.timings["formula_s"] = best
    lines = [f"count {count}", f"formula     {best * 1e6:12.1f} us"]
    try:
        best_b = float("inf")
        for _ in range(args.repetitions):
            t = time.perf_counter()
            brute = clique_count_bruteforce(graph, args.m)
            best_b = min(best_b, time.perf_counter() - t)
    except SizeLimitError as exc:
        report.results["bruteforce"] = {"skipped": str(exc)}
        lines.append(f"enumeration skipped: {exc}")
    else:
        ok = brute == count
        report.results["bruteforce"] = str(brute)
        report.timings["bruteforce_s"] = best_b
        verdict = {"name": "oracle", "passed": ok}
        if not ok:
            verdict["counterexample"] = {**_graph_inputs(graph), "m": args.m,
                                         "expected": str(brute), "actual": str(count)}
        report.verdicts.append(verdict)
        lines.append(f"enumeration {best_b * 1e6:12.1f} us")
        if best > 0:
            lines.append(f"speedup     {best_b / best:12.1f}x")
    return report, lines


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a machine-readable RunReport")

    graph_args = _Parser(add_help=False)
    g = graph_args.add_mutually_exclusive_group()
    g.add_argument("--n", type=int, help="modulus of the unitary Cayley graph G(Z/nZ), n >= 2")
    g.add_argument("--spec", help=SPEC_HELP)

    parser = _Parser(
        prog="uclique",
        description="Exact clique counts in unitary Cayley graphs and direct products "
                    "of balanced complete multipartite graphs.",
        epilog=f"Spec strings: {SPEC_HELP}. Environment: {VERTEX_CAP_ENV} overrides "
               f"the enumeration vertex cap (default {default_vertex_cap()}).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", parents=[common, graph_args], help="closed-form clique count")
    p.add_argument("--m", type=int, required=True, help="clique order")
    p.add_argument("--oracle", action="store_true", help="also count by enumeration")
    p.add_argument("--allow-empty", action="store_true", help="accept m = 0 (counts 1)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", action="append", choices=sorted(SUITES) + ["all"],
                   default=None, help="suite to run; repeatable (default: all)")
    p.add_argument("--n-max", type=int)
    p.add_argument("--m-max", type=int)
    p.add_argument("--r-max", type=int)
    p.add_argument("--specs", type=int, help="number of random product specs")
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1, help="run suites in parallel processes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spectrum", parents=[common], help="eigenvalues of G(Z/nZ)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("dot", parents=[common, graph_args], help="Graphviz DOT export")
    p.add_argument("-o", "--output", help="output path ('-' or omitted for stdout)")
    p.add_argument("--cap", type=int, default=DEFAULT_DOT_CAP, help="vertex cap")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("enumerate", parents=[common, graph_args], help="list cliques")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("bench", parents=[common, graph_args],
                       help="time closed form against enumeration")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--repetitions", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.suite is None:
        args.suite = ["all"]
    try:
        report, lines = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"uclique: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DivisibilityError as exc:
        print(f"uclique: verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (DomainError, SizeLimitError) as exc:
        print(f"uclique: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.json:
        print(report.to_json())
    else:
        print("\n".join(lines))
    return EXIT_VERIFY if report.failed else EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
