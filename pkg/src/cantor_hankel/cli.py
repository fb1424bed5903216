"""Command-line front end.

Every subcommand is a thin adapter around one library call: parsing,
formatting, exit codes, and nothing else.  Exit status is 0 on success,
1 when a verification-style subcommand found a falsified identity, and
2 on usage errors.  All output is deterministic for fixed arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import checks, engine, kernel, series
from .hankel import det_exact, det_mod3, hankel_matrix
from .pade import (eta_identity_check, irrationality_estimates,
                   pade as pade_approximant, verify_functional_equation,
                   verify_pade_error)
from .sequences import sequence_slice

# Color coding for the PPM grid renderer: blue, green, red for 0, 1, 2.
PPM_COLORS = {0: (0, 0, 255), 1: (0, 200, 0), 2: (255, 0, 0)}
ASCII_GLYPHS = {0: ".", 1: "#", 2: "x"}

VERIFY_ORDER = ("oracle", "structure", "recurrences", "closed-forms",
                "series", "periods", "kernel", "dfao", "pade", "feq")


def _cmd_seq(args: argparse.Namespace) -> int:
    values = sequence_slice(args.kind, args.start, args.count)
    if args.format == "raw":
        print(" ".join(str(v) for v in values))
    elif args.format == "csv":
        print("n,value")
        for i, v in enumerate(values):
            print(f"{args.start + i},{v}")
    else:
        print(json.dumps({"kind": args.kind, "start": args.start,
                          "values": list(values)}, sort_keys=True))
    return 0


def _cmd_det(args: argparse.Namespace) -> int:
    m = hankel_matrix(args.kind, args.p, args.n)
    print(det_mod3(m) if args.mod3 else det_exact(m))
    return 0


def _cmd_cell(args: argparse.Namespace) -> int:
    value = engine.gamma_mod3 if args.kind == "gamma" else engine.delta_mod3
    print(value(args.n, args.p))
    return 0


def _cmd_grid(args: argparse.Namespace) -> int:
    rows = engine.grid(1, args.n_max, 0, args.p_max, args.kind)
    if args.format == "csv":
        for row in rows:
            print(",".join(str(v) for v in row))
    elif args.format == "json":
        print(json.dumps({"kind": args.kind, "n_max": args.n_max,
                          "p_max": args.p_max, "rows": [list(r) for r in rows]},
                         sort_keys=True))
    elif args.format == "ascii":
        for row in rows:
            print("".join(ASCII_GLYPHS[v] for v in row))
    else:
        print("P3")
        print(f"{args.p_max + 1} {args.n_max}")
        print("255")
        for row in rows:
            print(" ".join(" ".join(str(c) for c in PPM_COLORS[v]) for v in row))
    return 0


def _cmd_period(args: argparse.Namespace) -> int:
    print(engine.column_period(args.p, kind=args.kind))
    return 0


def _cmd_series(args: argparse.Namespace) -> int:
    built = series.series_gamma(args.p) if args.kind == "gamma" else series.series_delta(args.p)
    if args.format == "rational":
        print(built.to_rational())
    else:
        print(",".join(str(c) for c in built.coeffs))
    return 0


def _cmd_kernel(args: argparse.Namespace) -> int:
    closure = kernel.kernel_closure(args.start, args.cap)
    print(f"start {args.start}")
    print(f"states {len(closure.states)}")
    return 0


def _cmd_dfao(args: argparse.Namespace) -> int:
    dfao = kernel.build_dfao(args.start)
    print(kernel.export_dfao(dfao, args.export))
    return 0


def _cmd_dfao_eval(args: argparse.Namespace) -> int:
    dfao = kernel.build_dfao(args.start)
    print(dfao.evaluate(args.n, args.p))
    return 0


def _cmd_pade(args: argparse.Namespace) -> int:
    approx = pade_approximant(args.n)
    print(f"order {approx.order}")
    print("numerator " + ",".join(str(c) for c in approx.numerator))
    print("denominator " + ",".join(str(c) for c in approx.denominator))
    if not args.verify:
        return 0
    report = verify_pade_error(args.n)
    if report.ok:
        print(f"error-law ok: first nonzero coefficient {report.leading} "
              f"at degree {2 * args.n}")
        return 0
    print(f"error-law FAIL: first mismatch at degree {report.first_mismatch}, "
          f"leading {report.leading} expected {report.expected_leading}")
    return 1


def _cmd_feq(args: argparse.Namespace) -> int:
    report = verify_functional_equation(args.deg)
    if report.ok:
        print(f"ok functional equation through degree {args.deg}")
        return 0
    print(f"FAIL functional equation at degree {report.first_mismatch}")
    return 1


def _cmd_irr(args: argparse.Namespace) -> int:
    rows = irrationality_estimates(args.b, args.n_max)
    if args.format == "json":
        payload = [{"order": r.order, "p": r.p, "q": r.q,
                    "mu_lo": r.exponent_lo, "mu_hi": r.exponent_hi,
                    "degenerate": r.degenerate, "note": r.note}
                   for r in rows]
        print(json.dumps(payload, sort_keys=True))
        return 0
    print("order p q mu_lo mu_hi note")
    for r in rows:
        lo = "-" if r.exponent_lo is None else f"{r.exponent_lo:.6f}"
        hi = "-" if r.exponent_hi is None else f"{r.exponent_hi:.6f}"
        note = r.note or "-"
        print(f"{r.order} {r.p} {r.q} {lo} {hi} {note}")
    return 0


def _cmd_eta(args: argparse.Namespace) -> int:
    report = eta_identity_check(args.b, args.depth)
    print(f"lhs [{float(report.lhs.lo):.12f}, {float(report.lhs.hi):.12f}]")
    print(f"rhs [{float(report.rhs.lo):.12f}, {float(report.rhs.hi):.12f}]")
    print("ok" if report.ok else "FAIL")
    return 0 if report.ok else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    runners = {
        "oracle": lambda: [checks.oracle_equivalence(args.n_max, args.p_max)],
        "structure": lambda: [checks.structure_identities(4, 4)],
        "recurrences": lambda: [checks.splitting_exact(2, 5, 8),
                                checks.splitting_mod3(2, 5, 8)],
        "closed-forms": lambda: [checks.closed_forms(2000)],
        "series": lambda: [checks.series_identities()],
        "periods": lambda: [checks.period_bounds((0, 1, 2))],
        "kernel": lambda: [checks.kernel_soundness(8)],
        "dfao": lambda: [checks.dfao_grid(96, 127)],
        "pade": lambda: [checks.pade_error_law(8)],
        "feq": lambda: [checks.functional_equation(600)],
    }
    selected = [name for name in VERIFY_ORDER if getattr(args, name.replace("-", "_"))]
    if not selected:
        selected = list(VERIFY_ORDER)
    all_ok = True
    for name in selected:
        for result in runners[name]():
            print(result.line())
            all_ok = all_ok and result.ok
    return 0 if all_ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cantor-hankel",
        description="Hankel determinants of the Cantor sequence: oracles, "
                    "recurrences, automata, and approximation bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print a slice of the sequence c or d")
    p.add_argument("--kind", choices=("c", "d"), required=True)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json", "raw"), default="raw")
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("det", help="one Hankel determinant by elimination")
    p.add_argument("--kind", choices=("gamma", "delta"), default="gamma")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--mod3", action="store_true")
    p.set_defaults(func=_cmd_det)

    p = sub.add_parser("cell", help="one mod-3 determinant from the recurrences")
    p.add_argument("--kind", choices=("gamma", "delta"), default="gamma")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.set_defaults(func=_cmd_cell)

    p = sub.add_parser("grid", help="mod-3 value table (rows n >= 1, columns p >= 0)")
    p.add_argument("--kind", choices=("gamma", "delta"), default="gamma")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--p-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json", "ppm", "ascii"),
                   default="ascii")
    p.set_defaults(func=_cmd_grid)

    p = sub.add_parser("period", help="minimal period of one column, n >= 1")
    p.add_argument("--kind", choices=("gamma", "delta"), default="gamma")
    p.add_argument("-p", type=int, required=True)
    p.set_defaults(func=_cmd_period)

    p = sub.add_parser("series", help="one column as a rational series over GF(3)")
    p.add_argument("--kind", choices=("gamma", "delta"), default="gamma")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--format", choices=("rational", "coeffs"), default="rational")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("kernel", help="size of the digit-step closure")
    p.add_argument("--start", choices=("gamma", "delta"), default="gamma")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=_cmd_kernel)

    p = sub.add_parser("dfao", help="export the two-dimensional automaton")
    p.add_argument("--start", choices=("gamma", "delta"), default="gamma")
    p.add_argument("--export", choices=("dot", "table"), default="table")
    p.set_defaults(func=_cmd_dfao)

    p = sub.add_parser("dfao-eval", help="run the automaton on one (n, p) pair")
    p.add_argument("--start", choices=("gamma", "delta"), default="gamma")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.set_defaults(func=_cmd_dfao_eval)

    p = sub.add_parser("pade", help="the [n-1/n] approximant, optionally verified")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=_cmd_pade)

    p = sub.add_parser("feq", help="check the cube functional equation")
    p.add_argument("--deg", type=int, required=True)
    p.set_defaults(func=_cmd_feq)

    p = sub.add_parser("irr", help="approximation exponents at 1/b")
    p.add_argument("-b", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=_cmd_irr)

    p = sub.add_parser("eta", help="interval certificate for the eta relation")
    p.add_argument("-b", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=_cmd_eta)

    p = sub.add_parser("verify", help="run the identity suite (all by default)")
    for name in VERIFY_ORDER:
        p.add_argument(f"--{name}", action="store_true",
                       help=f"include the {name} checks")
    p.add_argument("--n-max", type=int, default=20,
                   help="oracle sweep row bound (default 20)")
    p.add_argument("--p-max", type=int, default=27,
                   help="oracle sweep column bound (default 27)")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BrokenPipeError:
        # Downstream closed the pipe (head, less); keep the interpreter
        # from tripping on the final stdout flush and call it a success.
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
