"""Command-line driver.

Exit status: 0 all verdicts true, 1 some false, 2 some inconclusive
(a cap or budget was hit), 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import BudgetExceeded, StciError
from .groebner import IdealGens
from .monomial_curve import CurveFixture
from .polyring import FieldSpec, MonomialOrder
from .report import VerificationReport
from .scenarios import CHECKS, EXAMPLES, Bundle, RunConfig, check_toric, run_example, run_file, run_sv
from .schmitt_vogel import SVSystem
from .scroll import BarredMatrix
from .varieties import enumerate_points, parse_ideal_text

EXIT_INPUT = 3


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _order(text: str) -> MonomialOrder:
    try:
        return MonomialOrder.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=FieldSpec.parse("q"), help="q or gf:<p> (default q)")
    common.add_argument("--order", type=_order, default=MonomialOrder.parse("degrevlex"),
                        help="degrevlex or lex (default degrevlex)")
    common.add_argument("--cap-spairs", type=_positive, default=RunConfig.max_spairs, metavar="N")
    common.add_argument("--cap-degree", type=_positive, default=RunConfig.max_degree, metavar="N")
    common.add_argument("--cap-power", type=_positive, default=RunConfig.power_cap, metavar="N")
    common.add_argument("--cap-products", type=_positive, default=RunConfig.product_cap, metavar="N")
    common.add_argument("--points-budget", type=_positive, default=RunConfig.points_budget, metavar="N")
    common.add_argument("--check", action="append", choices=CHECKS, dest="checks",
                        help="run only this check (repeatable)")
    common.add_argument("--json", action="store_true", help="emit the JSON report bundle")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-v", "--verbose", action="store_true", help="list per-generator rows")

    ap = argparse.ArgumentParser(prog="stci", description="Verify set-theoretic complete intersection claims.")
    sub = ap.add_subparsers(dest="command", required=True)
    ex = sub.add_parser("example", parents=[common], help="run a bundled scenario")
    ex.add_argument("name", choices=tuple(EXAMPLES))
    ex.add_argument("--c", type=_positive, default=3, help="block width for scroll-c")
    v = sub.add_parser("verify", parents=[common], help="run the pipeline on a barred-matrix JSON file")
    v.add_argument("matrix")
    s = sub.add_parser("sv", parents=[common], help="check a layered system JSON file")
    s.add_argument("system")
    p = sub.add_parser("points", parents=[common], help="enumerate GF(p) points of an ideal file")
    p.add_argument("ideal")
    p.add_argument("-p", "--prime", type=_positive, required=True)
    p.add_argument("--out", help="write the points, one per line")
    t = sub.add_parser("toric", parents=[common], help="check binomials against a monomial curve")
    t.add_argument("fixture", nargs="?", help="curve JSON (default: the bundled example)")
    return ap


def _config(args) -> RunConfig:
    return RunConfig(field=args.field, order=args.order, max_spairs=args.cap_spairs, max_degree=args.cap_degree,
                     power_cap=args.cap_power, product_cap=args.cap_products, points_budget=args.points_budget,
                     checks=tuple(args.checks) if args.checks else None, seed=args.seed,
                     c=getattr(args, "c", 3))


def _emit(bundle: Bundle, args, out) -> int:
    if args.json:
        json.dump(bundle.to_dict(), out, indent=2, default=str)
        out.write("\n")
        return bundle.exit_status
    out.write(f"== {bundle.scenario}\n")
    for rep in bundle.reports:
        out.write(rep.summary() + "\n")
        show_rows = args.verbose or rep.kind == "validation" or rep.verdict is not True
        if show_rows:
            for row in rep.per_generator:
                if args.verbose or rep.kind == "validation" or row.get("result") is False:
                    power = f"  [power {row['power']}]" if row.get("power") is not None else ""
                    out.write(f"    {row['generator']}{power}\n")
        for key in ("violation", "witness", "witness_side", "violated_generator", "error", "max_power"):
            if key in rep.details:
                out.write(f"    {key}: {rep.details[key]}\n")
    verdict = {True: "PASS", False: "FAIL", None: "INCONCLUSIVE"}[bundle.verdict]
    out.write(f"== overall: {verdict}\n")
    return bundle.exit_status


def _points(args, config: RunConfig, out) -> int:
    ideal = parse_ideal_text(Path(args.ideal).read_text(), "q")
    ideal = IdealGens(ideal.ring, ideal.gens, Path(args.ideal).stem)
    try:
        pts = enumerate_points(ideal, args.prime, config.points_budget)
    except BudgetExceeded as exc:
        rep = VerificationReport(f"enumerate V over GF({args.prime})", None, kind="consistency check",
                                 details={"error": str(exc), "required": exc.required})
        return _emit(Bundle("points", [rep]), args, out)
    if args.out:
        pts.dump(args.out)
    rep = VerificationReport(f"enumerate V over GF({args.prime})", pts.reverify(ideal), kind="consistency check",
                             field=f"GF({args.prime})",
                             details={"count": len(pts), "variables": list(ideal.ring.names),
                                      "evaluated": args.prime ** ideal.ring.nvars})
    if not args.json and not args.out:
        out.write(pts.to_text())
    return _emit(Bundle("points", [rep]), args, out)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    try:
        config = _config(args)
        if args.command == "example":
            bundle = run_example(args.name, config)
        elif args.command == "verify":
            bundle = run_file(BarredMatrix.load(args.matrix), config, name=args.matrix)
        elif args.command == "sv":
            S = SVSystem.load(args.system)
            if args.field != S.ring.field:
                S = SVSystem.from_dict(S.to_dict(), S.ring.with_field(args.field))
            bundle = run_sv(S, config, name=args.system)
        elif args.command == "points":
            return _points(args, config, out)
        else:
            fx = CurveFixture.load(args.fixture) if args.fixture else None
            bundle = Bundle(args.fixture or "toric", [check_toric(fx)])
    except (OSError, StciError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        print(f"stci: error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    return _emit(bundle, args, out)


if __name__ == "__main__":
    sys.exit(main())
