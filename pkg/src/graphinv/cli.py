"""Command-line front end.

Subcommands:

    gen       emit built-in corpora (connected graphs or trees) as graph6
    census    mate counts over a corpus, TSV to stdout
    trees     mate counts over all trees of one order, TSV to stdout
    snf       Smith normal form diagonal of one matrix kind per input graph
    spectrum  eigenvalues (or exact characteristic polynomial) per graph
    sandpile  sandpile group of the cone over each input graph
    verify    run property suites, nonzero exit on any failure

Reports go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 computation or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Iterable

from . import closedforms
from .census import MODES, report_tsv, run_census, tree_census
from .exact import charpoly, determinant, snf
from .generators import generate_connected_graphs, generate_trees
from .graphs import Graph, complete_graph, iter_graph6, star_graph, write_graph6
from .matrices import MatrixKind, build
from .sandpile import cross_check, sandpile_group
from .spectra import (
    THIRD_MOMENT_EXPANSION,
    check_conductance_bracket,
    check_extreme_bounds,
    check_lambda1_bracket,
    check_moments,
    check_weyl_sandwich,
    eigenvalues_symmetric,
)

CLI_KINDS = ("A", "L", "Q", "D", "DL", "DQ", "Atr", "AtrPlus", "Ddeg", "DdegPlus")


def _parse_kinds(spec: str, parser: argparse.ArgumentParser) -> list[MatrixKind]:
    kinds = []
    for name in spec.split(","):
        name = name.strip()
        if name not in CLI_KINDS:
            parser.error(f"unknown matrix kind {name!r}; choose from {', '.join(CLI_KINDS)}")
        kinds.append(MatrixKind[name])
    return kinds


def _parse_modes(spec: str, parser: argparse.ArgumentParser) -> list[str]:
    modes = []
    for name in spec.split(","):
        name = name.strip()
        if name not in MODES:
            parser.error(f"unknown mode {name!r}; choose from {', '.join(MODES)}")
        modes.append(name)
    return modes


def _read_graphs(path: str) -> list[Graph]:
    if path == "-":
        return list(iter_graph6(sys.stdin))
    with open(path, "r", encoding="ascii") as fh:
        return list(iter_graph6(fh))


def _cmd_gen(args, parser) -> int:
    graphs: Iterable[Graph]
    graphs = generate_trees(args.n) if args.trees else generate_connected_graphs(args.n)
    for g in graphs:
        print(write_graph6(g))
    return 0


def _cmd_census(args, parser) -> int:
    kinds = _parse_kinds(args.matrices, parser)
    modes = _parse_modes(args.modes, parser)
    if args.input:
        graphs = _read_graphs(args.input)
        if args.n and any(g.n != args.n for g in graphs):
            print(f"error: input contains graphs not on {args.n} vertices", file=sys.stderr)
            return 1
    elif args.n:
        graphs = generate_connected_graphs(args.n)
    else:
        parser.error("census needs --n (built-in corpus) or --input FILE.g6")
    report = run_census(graphs, kinds, modes, jobs=args.jobs)
    sys.stdout.write(report_tsv(report))
    return 0


def _cmd_trees(args, parser) -> int:
    kinds = _parse_kinds(args.matrices, parser)
    modes = _parse_modes(args.modes, parser)
    report = tree_census(args.n, kinds, modes, jobs=args.jobs)
    sys.stdout.write(report_tsv(report))
    return 0


def _cmd_snf(args, parser) -> int:
    kind = MatrixKind[args.matrix]
    for g in _read_graphs(args.input):
        result = snf(build(g, kind))
        print(" ".join(str(d) for d in result.diagonal()))
    return 0


def _cmd_spectrum(args, parser) -> int:
    kind = MatrixKind[args.matrix]
    for g in _read_graphs(args.input):
        m = build(g, kind)
        if args.exact:
            print(" ".join(str(c) for c in charpoly(m).coeffs))
        else:
            spec = eigenvalues_symmetric(m)
            print(" ".join(f"{x:.10g}" for x in spec.eigenvalues))
    return 0


def _cmd_sandpile(args, parser) -> int:
    for g in _read_graphs(args.input):
        group, tau = sandpile_group(g)
        print(f"{group}, tau={tau}")
    return 0


def _suite_bounds(n_max: int) -> list[str]:
    failures = []
    for n in range(2, n_max + 1):
        for g in generate_connected_graphs(n):
            for report in (
                check_extreme_bounds(g),
                check_lambda1_bracket(g),
                check_weyl_sandwich(g),
                check_conductance_bracket(g),
            ):
                for c in report.checks:
                    if not c.holds:
                        failures.append(
                            f"n={n} {write_graph6(g)}: {c.name} "
                            f"left={c.left!r} right={c.right!r}"
                        )
    return failures


def _suite_closed_forms(n_max: int) -> list[str]:
    failures = []
    minus = (MatrixKind.Atr, MatrixKind.Ddeg, MatrixKind.L)
    plus = (MatrixKind.AtrPlus, MatrixKind.DdegPlus, MatrixKind.Q)
    for n in range(2, n_max + 1):
        kn = complete_graph(n)
        for kind in minus + plus:
            got = snf(build(kn, kind))
            want = closedforms.snf_complete(kind, n)
            if got != want:
                failures.append(f"complete n={n} kind={kind.value}: {got} != {want}")
    for m in range(1, n_max + 1):
        star = star_graph(m)
        for kind in (MatrixKind.Ddeg, MatrixKind.DdegPlus):
            got = snf(build(star, kind))
            want = closedforms.snf_star(kind, m)
            if got != want:
                failures.append(f"star m={m} kind={kind.value}: {got} != {want}")
    for n in range(2, min(n_max, 12) + 1):
        for t in generate_trees(n):
            d = build(t, MatrixKind.D)
            if snf(d) != closedforms.snf_tree_distance(n):
                failures.append(f"tree distance SNF n={n}: {write_graph6(t)}")
            if determinant(d) != closedforms.det_tree_distance(n):
                failures.append(f"tree distance det n={n}: {write_graph6(t)}")
    return failures


def _suite_sandpile(n_max: int) -> list[str]:
    failures = []
    for n in range(2, n_max + 1):
        for g in generate_connected_graphs(n):
            if g.is_complete():
                continue
            if not cross_check(g):
                failures.append(f"cone cross-check failed: {write_graph6(g)}")
    return failures


def _suite_moments(n_max: int) -> list[str]:
    failures = []
    for n in range(1, n_max + 1):
        for g in generate_connected_graphs(n):
            report = check_moments(g)
            first, second = report.checks[0], report.checks[1]
            expansion = report.by_name(THIRD_MOMENT_EXPANSION)
            for c in (first, second, expansion):
                if not c.holds:
                    failures.append(f"{write_graph6(g)}: {c.name} left={c.left} right={c.right}")
    return failures


_SUITES = {
    "bounds": _suite_bounds,
    "closed-forms": _suite_closed_forms,
    "sandpile": _suite_sandpile,
    "moments": _suite_moments,
}


def _cmd_verify(args, parser) -> int:
    names = [args.suite] if args.suite else list(_SUITES)
    failed = False
    for name in names:
        failures = _SUITES[name](args.n_max)
        if failures:
            failed = True
            print(f"FAIL {name}: {len(failures)} failures")
            for line in failures[:20]:
                print(f"  {line}", file=sys.stderr)
        else:
            print(f"ok {name} (n <= {args.n_max})")
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphinv",
        description="Exact graph invariants: Smith normal forms, spectra, censuses, sandpile groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a built-in corpus as graph6 lines")
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--trees", action="store_true", help="generate trees instead of connected graphs")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("census", help="mate counts over connected graphs")
    p.add_argument("--n", type=int, help="vertex count for the built-in corpus")
    p.add_argument("--input", help="graph6 file ('-' for stdin) instead of the built-in corpus")
    p.add_argument("--matrices", required=True, help="comma-separated matrix kinds")
    p.add_argument("--modes", default="spectral,invariant", help="comma-separated modes")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker pool width")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("trees", help="mate counts over all trees of one order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--matrices", required=True)
    p.add_argument("--modes", default="spectral,invariant")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=_cmd_trees)

    p = sub.add_parser("snf", help="invariant factor diagonal per input graph")
    p.add_argument("--input", required=True)
    p.add_argument("--matrix", required=True, choices=CLI_KINDS)
    p.set_defaults(func=_cmd_snf)

    p = sub.add_parser("spectrum", help="eigenvalues or exact charpoly per input graph")
    p.add_argument("--input", required=True)
    p.add_argument("--matrix", required=True, choices=CLI_KINDS)
    p.add_argument("--exact", action="store_true", help="print characteristic polynomial coefficients")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("sandpile", help="sandpile group of the cone over each input graph")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_sandpile)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--suite", choices=sorted(_SUITES), help="run one suite (default: all)")
    p.add_argument("--n-max", type=int, default=6, dest="n_max")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except BrokenPipeError:
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
