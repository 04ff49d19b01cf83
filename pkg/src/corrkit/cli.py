"""Command-line front end.

Standard output carries machine-parseable JSON or CSV only; anything meant
for humans goes to stderr. Exit codes: 0 success, 2 usage or input error,
3 numerical check failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import checks, experiments, formats, gauss, generators, seqcore
from .errors import CorrkitError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CHECK_FAILED = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corrkit",
        description="Sequence correlation toolkit: generators, demerit factors, "
                    "Gauss sums, and convergence studies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate sequences to files")
    gen_sub = p_gen.add_subparsers(dest="kind", required=True)
    p_chu = gen_sub.add_parser("chu", help="single Chu sequence")
    p_chu.add_argument("--n", type=int, required=True, help="sequence length")
    p_chu.add_argument("--a", type=int, required=True, help="Chu parameter")
    p_chu.add_argument("--out", required=True, help="output file")
    p_rs = gen_sub.add_parser("rs", help="Rudin-Shapiro pair of length 2**m")
    p_rs.add_argument("--m", type=int, required=True, help="recursion order")
    p_rs.add_argument("--out", required=True, help="output stem; writes .a and .b")
    for kind, description in (("thm1", "conjugate Chu pair of length n"),
                              ("thm2", "balanced Chu pair of length 2n")):
        p_pair = gen_sub.add_parser(kind, help=description)
        p_pair.add_argument("--n", type=int, required=True)
        p_pair.add_argument("--out", required=True, help="output stem; writes .a and .b")

    p_an = sub.add_parser("analyze", help="demerit report for a sequence pair")
    p_an.add_argument("a_path")
    p_an.add_argument("b_path")
    p_an.add_argument("--json", action="store_true", help="indent the JSON output")
    p_an.add_argument("--method", choices=("fft", "naive"), default="fft")

    p_gs = sub.add_parser("gauss", help="evaluate S_N(x, theta)")
    p_gs.add_argument("--N", type=int, required=True)
    p_gs.add_argument("--x", type=float, required=True)
    p_gs.add_argument("--theta", type=float, required=True)
    p_gs.add_argument("--decompose", action="store_true",
                      help="also print every decomposition term (needs x in (0,1), "
                           "theta in (-1/2,1/2])")
    p_gs.add_argument("--json", action="store_true", help="indent the JSON output")

    p_st = sub.add_parser("study", help="run a convergence study (CSV output)")
    p_st.add_argument("kind", choices=("chu1", "thm1", "thm2", "gauss-ratio", "all"))
    p_st.add_argument("--grid", help="comma-separated grid of n (or m) values")
    p_st.add_argument("--fractions", help="comma-separated offset fractions (gauss-ratio)")
    p_st.add_argument("--big", action="store_true",
                      help="extend the default grid up to 2**20")
    p_st.add_argument("--out", help="CSV file (directory when kind is 'all')")
    p_st.add_argument("--plot", action="store_true",
                      help="render a PNG figure next to each CSV (requires --out)")

    p_vf = sub.add_parser("verify", help="run a self-verification suite")
    p_vf.add_argument("suite", choices=("lemma21", "prop31", "identities", "all"))

    return parser


def _cmd_gen(args) -> int:
    if args.kind == "chu":
        formats.write_sequence(generators.chu(args.n, args.a), args.out)
        print(f"wrote {args.out}", file=sys.stderr)
        return EXIT_OK
    if args.kind == "rs":
        pair = generators.rudin_shapiro_pair(args.m)
    elif args.kind == "thm1":
        pair = generators.conjugate_chu_pair(args.n)
    else:
        pair = generators.balanced_chu_pair(args.n)
    for seq, suffix in zip(pair, (".a", ".b")):
        path = args.out + suffix
        formats.write_sequence(seq, path)
        print(f"wrote {path}", file=sys.stderr)
    return EXIT_OK


def _cmd_analyze(args) -> int:
    a = formats.read_sequence(args.a_path)
    b = formats.read_sequence(args.b_path)
    report = seqcore.psc(a, b, method=args.method)
    print(formats.report_json(report, indent=args.json))
    return EXIT_OK


def _cmd_gauss(args) -> int:
    decomposition = None
    if args.decompose:
        decomposition = gauss.decompose_gauss_sum(args.N, args.x, args.theta)
        total = decomposition.total
    else:
        total = gauss.gauss_sum_direct(args.N, args.x, args.theta)
    print(formats.gauss_json(args.N, args.x, args.theta, total,
                             decomposition, indent=args.json))
    return EXIT_OK


def _parse_int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def _study_rows(kind: str, args):
    if kind == "chu1":
        grid = experiments.BIG_GRID if args.big else experiments.DEFAULT_GRID
        if args.grid:
            grid = _parse_int_list(args.grid)
        return experiments.run_chu_adf_study(grid)
    if kind == "thm1":
        grid = experiments.BIG_GRID if args.big else experiments.DEFAULT_GRID
        if args.grid:
            grid = _parse_int_list(args.grid)
        return experiments.run_conjugate_pair_study(grid)
    if kind == "thm2":
        grid = experiments.BIG_BALANCED_GRID if args.big else experiments.DEFAULT_BALANCED_GRID
        if args.grid:
            grid = _parse_int_list(args.grid)
        return experiments.run_balanced_pair_study(grid)
    grid = experiments.BIG_GAUSS_GRID if args.big else experiments.DEFAULT_GAUSS_GRID
    if args.grid:
        grid = _parse_int_list(args.grid)
    fractions = experiments.DEFAULT_FRACTIONS
    if args.fractions:
        fractions = [float(p) for p in args.fractions.split(",") if p.strip()]
    return experiments.run_gauss_ratio_study(grid, fractions)


def _emit_study(kind: str, rows, args, out_path: Path | None) -> None:
    csv_text = experiments.rows_to_csv(rows)
    if out_path is None:
        sys.stdout.write(csv_text)
    else:
        out_path.write_text(csv_text, encoding="ascii")
        print(f"wrote {out_path}", file=sys.stderr)
        if args.plot:
            from .plotting import render_study_figure

            png = out_path.with_suffix(".png")
            render_study_figure(rows, title=kind, out_path=png)
            print(f"wrote {png}", file=sys.stderr)
    for r in experiments.sort_rows(rows):
        print(f"[{kind}] n={r.n} {r.quantity}: {r.elapsed_s:.3f}s", file=sys.stderr)


def _cmd_study(args) -> int:
    if args.plot and not args.out:
        print("error: --plot requires --out", file=sys.stderr)
        return EXIT_USAGE
    kinds = ("chu1", "thm1", "thm2", "gauss-ratio") if args.kind == "all" else (args.kind,)
    if args.kind == "all":
        if args.grid or args.fractions:
            print("error: 'all' runs the default grids; use per-kind study "
                  "commands for custom grids", file=sys.stderr)
            return EXIT_USAGE
        if args.out:
            out_dir = Path(args.out)
            out_dir.mkdir(parents=True, exist_ok=True)
        for kind in kinds:
            rows = _study_rows(kind, args)
            _emit_study(kind, rows, args, out_dir / f"{kind}.csv" if args.out else None)
    else:
        rows = _study_rows(args.kind, args)
        _emit_study(args.kind, rows, args, Path(args.out) if args.out else None)
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = checks.run_suite(args.suite)
    entries = []
    for res in results:
        status = "pass" if res.passed else "FAIL"
        print(f"[{status}] {res.name}: {res.detail}", file=sys.stderr)
        entries.append(
            f'{{"check": "{res.name}", "passed": {str(res.passed).lower()}, '
            f'"detail": "{res.detail}"}}'
        )
    print("[" + ", ".join(entries) + "]")
    return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK_FAILED


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "gen": _cmd_gen,
        "analyze": _cmd_analyze,
        "gauss": _cmd_gauss,
        "study": _cmd_study,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except CorrkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
