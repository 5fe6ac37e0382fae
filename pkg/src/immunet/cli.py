"""``immunet`` command line: immunize, eval, sis, bench.

Exit codes: 0 success, 1 usage, 2 input, 3 capability guard,
4 eigenvalue non-convergence.
"""
from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import datasets
from .episim import RNG_NAME, SisConfig, sis_simulate
from .errors import CapabilityError, GraphParseError, NonConvergenceError
from .graph import Graph, read_edge_list
from .selection import METHODS, select
from .spectral import DEFAULT_MAX_ITER, DEFAULT_TOL, eigendrop, lambda1

SCHEMA = "# schema=1"
BENCH_COLUMNS = ["dataset", "method", "k", "lambda_before", "lambda_after",
                 "eigendrop_pct", "wall_ms", "picks", "status"]
EXIT_USAGE, EXIT_INPUT, EXIT_GUARD, EXIT_NONCONV = 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _even(text: str) -> int:
    p = int(text)
    if p < 2 or p % 2:
        raise argparse.ArgumentTypeError(f"p must be an even integer >= 2, got {text}")
    return p


def load_graph(spec: str) -> Graph:
    """Read an edge-list file, or a bundled dataset by name (``karate``)."""
    path = Path(spec)
    if path.is_file():
        return read_edge_list(path)
    if spec in datasets.BUILTIN:
        return datasets.BUILTIN[spec]()
    raise FileNotFoundError(f"no such graph file: {spec}")


def dataset_name(spec: str) -> str:
    name = Path(spec).name
    for ext in (".gz", ".txt", ".edges", ".tsv"):
        name = name.removesuffix(ext)
    return name


def _bench_row(name, g, method, k, p, tol, max_iter, lam_before, timing):
    row = {"dataset": name, "method": method, "k": k}
    try:
        sel = select(method, g, k, p=p, tol=tol)
        report = eigendrop(g, sel.picks, tol, max_iter)
    except CapabilityError as exc:
        row["status"] = f"capability: {exc}"
        return row, exc
    except NonConvergenceError as exc:
        row["status"] = f"nonconvergence: {exc}"
        return row, exc
    row.update(
        lambda_before=_fmt(lam_before),
        lambda_after=_fmt(report.lambda_after),
        eigendrop_pct=_fmt(report.drop_pct),
        wall_ms=f"{sel.wall_time * 1e3:.3f}" if timing else "",
        picks=";".join(sel.labels(g)),
        status="ok",
    )
    return row, None


def _write_rows(out, rows):
    out.write(SCHEMA + "\n")
    w = csv.DictWriter(out, BENCH_COLUMNS, restval="", lineterminator="\n")
    w.writeheader()
    w.writerows(rows)


def cmd_immunize(args, out) -> int:
    g = load_graph(args.graph)
    ks = args.k_sweep if args.k_sweep is not None else [args.k]
    if any(k < 0 for k in ks):
        raise UsageError("k must be non-negative")
    lam = lambda1(g, args.tol, args.max_iter).lambda1
    rows = []
    for k in ks:
        row, exc = _bench_row(dataset_name(args.graph), g, args.method, k, args.p, args.tol,
                              args.max_iter, lam, args.timing)
        if exc is not None:
            raise exc
        rows.append(row)
    _write_rows(out, rows)
    return 0


def cmd_eval(args, out) -> int:
    g = load_graph(args.graph)
    labels = [t.strip() for t in args.nodes.split(",") if t.strip()]
    s = []
    for lab in labels:
        try:
            s.append(g.index_of(lab))
        except KeyError:
            raise KeyError(f"unknown vertex label: {lab}") from None
    rep = eigendrop(g, s, args.tol, args.max_iter)
    out.write(SCHEMA + "\n")
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["lambda_before", "lambda_after", "drop", "drop_pct"])
    w.writerow([_fmt(rep.lambda_before), _fmt(rep.lambda_after), _fmt(rep.drop), _fmt(rep.drop_pct)])
    return 0


def cmd_sis(args, out) -> int:
    try:
        cfg = SisConfig(args.beta, args.delta, args.steps, args.trials, args.seed,
                        args.initial_fraction)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    g = load_graph(args.graph)
    immunized = []
    if args.immunize_file:
        for line in Path(args.immunize_file).read_text().splitlines():
            lab = line.strip()
            if not lab:
                continue
            try:
                immunized.append(g.index_of(lab))
            except KeyError:
                raise KeyError(f"unknown vertex label: {lab}") from None
    res = sis_simulate(g, cfg, immunized)
    out.write(SCHEMA + "\n")
    for key, val in [("graph", dataset_name(args.graph)), ("beta", args.beta),
                     ("delta", args.delta), ("steps", args.steps), ("trials", args.trials),
                     ("seed", args.seed), ("initial_fraction", args.initial_fraction),
                     ("immunized", len(immunized)), ("threshold", _fmt(res.threshold)),
                     ("rng", RNG_NAME)]:
        out.write(f"# {key}={val}\n")
    out.write(res.to_csv())
    out.write(f"final,{res.final_mean:.6f},{int(res.final_counts.min())},"
              f"{int(res.final_counts.max())}\n")
    return 0


def cmd_bench(args, out) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    for m in methods:
        if m not in METHODS:
            raise UsageError(f"unknown method {m!r}")
    cells = []
    for spec in args.graph:
        g = load_graph(spec)
        lam = lambda1(g, args.tol, args.max_iter).lambda1
        for m in methods:
            for k in args.k_sweep:
                cells.append((dataset_name(spec), g, m, k, args.p, args.tol, args.max_iter,
                              lam, args.timing))
    threads = max(1, int(os.environ.get("IMMUNET_THREADS", "1") or 1))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        rows = [row for row, _ in pool.map(lambda c: _bench_row(*c), cells)]
    _write_rows(out, rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="immunet", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--graph", required=True, help="edge-list file (.gz ok) or 'karate'")
        p.add_argument("--tol", type=float, default=DEFAULT_TOL)
        p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
        p.add_argument("--output", help="write CSV here instead of stdout")

    p = sub.add_parser("immunize", help="select k vertices and report the eigendrop")
    common(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--k", type=int)
    g.add_argument("--k-sweep", type=_int_list)
    p.add_argument("--method", choices=list(METHODS), default="greedy3")
    p.add_argument("--p", type=_even, default=4, help="walk length for greedy2")
    p.add_argument("--seed", type=int, default=0,
                   help="accepted for reproducible invocations; all methods are deterministic")
    p.add_argument("--timing", action="store_true",
                   help="fill wall_ms (output is then no longer byte-reproducible)")
    p.set_defaults(func=cmd_immunize)

    p = sub.add_parser("eval", help="eigendrop of a given vertex set")
    common(p)
    p.add_argument("--nodes", required=True, help="comma-separated vertex labels")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sis", help="SIS simulation time series")
    common(p)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--initial-fraction", type=float, default=0.1)
    p.add_argument("--immunize-file", help="one vertex label per line")
    p.set_defaults(func=cmd_sis)

    p = sub.add_parser("bench", help="methods x k sweep")
    p.add_argument("--graph", required=True, nargs="+")
    p.add_argument("--methods", default="maxdeg,updmaxdeg,netshield,greedy3")
    p.add_argument("--k-sweep", type=_int_list, required=True)
    p.add_argument("--p", type=_even, default=4)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    p.add_argument("--timing", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except UsageError as exc:
        print(f"immunet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, GraphParseError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"immunet: error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    except CapabilityError as exc:
        print(f"immunet: error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except NonConvergenceError as exc:
        print(f"immunet: error: {exc}", file=sys.stderr)
        return EXIT_NONCONV
    if args.output:
        Path(args.output).write_text(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
