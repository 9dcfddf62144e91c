"""Command-line front end.

Thin adapters only: every command parses flags, calls one library operation,
and serializes the result. Exit codes: 0 success, 2 hypothesis/precondition
failure, 3 result dominated by Undetermined verdicts, 1 usage or internal
error. JSON output is byte-stable (sorted keys, canonical rationals).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checker, divpoly, golden, quadforms, rayclass, reduction, search
from .curves import CurveQ, curve_from_string, curve_invariants, format_rational
from .dirichlet import DirichletPredicate
from .errors import PreconditionError, TwistselError, UnsupportedError
from .polyzq import poly_from_string

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PRECONDITION = 2
EXIT_UNDETERMINED = 3


def _dump(obj, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        _dump_text(obj)


def _dump_text(obj, indent: str = "") -> None:
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)):
                print(f"{indent}{k}:")
                _dump_text(v, indent + "  ")
            else:
                print(f"{indent}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            _dump_text(v, indent)
            if isinstance(v, dict):
                print()
    else:
        print(f"{indent}{obj}")


def _parse_curve(args) -> CurveQ:
    return curve_from_string(args.curve)


def _predicate(args) -> DirichletPredicate | None:
    if getattr(args, "character", None) is None:
        return None
    mod, exps = args.character.split(":")
    return DirichletPredicate(int(mod), args.ell, tuple(int(e) for e in exps.split(",")))


def cmd_invariants(args) -> int:
    inv = curve_invariants(_parse_curve(args))
    _dump({k: format_rational(v) for k, v in inv.items()}, args.format)
    return EXIT_OK


def cmd_local(args) -> int:
    red = reduction.local_reduction(_parse_curve(args), args.p)
    _dump(
        {
            "p": red.p,
            "ord_delta_min": red.ord_delta_min,
            "ord_j": red.ord_j,
            "kind": red.kind.value,
            "kodaira": red.kodaira,
            "conductor_exponent": red.conductor_exponent,
        },
        args.format,
    )
    return EXIT_OK


def cmd_conductor(args) -> int:
    N, exps = reduction.conductor(_parse_curve(args))
    _dump({"N": N, "exponents": {str(p): f for p, f in sorted(exps.items())}}, args.format)
    return EXIT_OK


def cmd_torsion(args) -> int:
    P = divpoly.rational_ell_torsion_point(_parse_curve(args), args.ell)
    _dump({"ell": args.ell, "point": None if P is None else str(P)}, args.format)
    return EXIT_OK if P is not None else EXIT_PRECONDITION


def cmd_divpoly(args) -> int:
    psi = divpoly.division_polynomial(_parse_curve(args), args.n)
    _dump(
        {
            "n": psi.n,
            "coeffs": [format_rational(c) for c in psi.coeffs],
            "even_cofactor": psi.even_cofactor,
        },
        args.format,
    )
    return EXIT_OK


def cmd_factor_shape(args) -> int:
    shape = divpoly.psi_factor_shape(_parse_curve(args), args.ell, args.degree_bound)
    _dump(
        {
            "ell": shape.ell,
            "degree_bound": shape.degree_bound,
            "factors": [{"degree": d, "coeffs": list(g)} for d, g in shape.factors],
            "residual_degree": shape.residual_degree,
        },
        args.format,
    )
    return EXIT_OK


def cmd_torsion_field(args) -> int:
    g = poly_from_string(args.factor)
    K = divpoly.torsion_field_polynomial(_parse_curve(args), args.ell, g)
    _dump({"minpoly": list(K.minpoly), "degree": K.degree}, args.format)
    return EXIT_OK


def cmd_classgroup(args) -> int:
    data = quadforms.class_group_structure(args.D)
    _dump({"D": data.D, "h": data.h, "structure": list(data.structure)}, args.format)
    return EXIT_OK


def cmd_rayclass(args) -> int:
    S = tuple(int(p) for p in args.s.split(",")) if args.s else ()
    data = rayclass.ray_class_data(args.d, S, args.ell)
    _dump(
        {
            "d": data.d,
            "D": data.D,
            "S": list(data.S),
            "h": data.h,
            "ray_class_number": data.ray_class_number,
            "unit_image_order": data.unit_image_order,
            "w_orders": list(data.w_orders),
            "ell": data.ell,
            "ell_rank": data.ell_rank,
        },
        args.format,
    )
    return EXIT_OK


def cmd_check(args) -> int:
    E = _parse_curve(args)
    pred = _predicate(args)
    hyp = checker.hypothesis_check(E, args.ell)
    if not hyp.ok:
        _dump(hyp.to_dict(), args.format)
        return EXIT_UNDETERMINED if hyp.undetermined else EXIT_PRECONDITION
    report = checker.admissibility_check(E, args.ell, args.d, pred)
    payload = report.to_dict()
    if report.overall.value == "Admissible":
        bound = checker.selmer_lower_bound(E, args.ell, args.d, pred)
        sandwich = checker.corollary_sandwich(E, args.ell, args.d, pred)
        payload["selmer_lower_bound"] = bound.bound
        payload["ray_rank"] = bound.rank
        payload["s_used"] = list(bound.s_used)
        payload["verdict"] = sandwich.verdict.value
        if sandwich.lower is not None:
            payload["bounds"] = [sandwich.lower, sandwich.upper]
        if bound.is_undetermined:
            payload["undetermined_reason"] = bound.undetermined_reason
            _dump(payload, args.format)
            return EXIT_UNDETERMINED
    _dump(payload, args.format)
    if report.overall.value == "Undetermined":
        return EXIT_UNDETERMINED
    return EXIT_OK


def cmd_search(args) -> int:
    E = _parse_curve(args)
    lo, hi = (int(x) for x in args.range.split(":"))
    mode = search.SearchMode(args.mode)
    rows = search.search_twists(
        E,
        args.ell,
        lo,
        hi,
        mode=mode,
        predicate=_predicate(args),
        include_inadmissible=args.explain,
        jobs=args.jobs,
    )
    if args.format == "csv":
        print(search.CSV_HEADER)
        for row in rows:
            print(row.to_csv_row())
    else:
        _dump([row.to_dict() for row in rows], args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = golden.run_golden_suite()
    width = max(len(r.name) for r in results) + 2
    ok_all = True
    for r in results:
        tag = "PASS" if r.ok else "FAIL"
        print(f"{tag:<5} {r.name:<{width}} {r.detail}")
        ok_all = ok_all and r.ok
    return EXIT_OK if ok_all else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="twistsel",
        description="Certified Selmer divisibility bounds for quadratic twists over Q",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, curve=True, ell=False, fmt=True):
        if curve:
            p.add_argument("--curve", required=True, help='curve as "[a1,a2,a3,a4,a6]"')
        if ell:
            p.add_argument("--ell", type=int, required=True, help="odd prime torsion order")
        if fmt:
            p.add_argument("--format", choices=("json", "text", "csv"), default="json")

    p = sub.add_parser("invariants", help="b/c invariants, discriminant, j")
    common(p)
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("local", help="reduction data at one prime")
    common(p)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(fn=cmd_local)

    p = sub.add_parser("conductor", help="conductor with factorization")
    common(p)
    p.set_defaults(fn=cmd_conductor)

    p = sub.add_parser("torsion", help="rational point of odd prime order ell")
    common(p, ell=True)
    p.set_defaults(fn=cmd_torsion)

    p = sub.add_parser("divpoly", help="n-th division polynomial")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_divpoly)

    p = sub.add_parser("factor-shape", help="bounded factor shape of psi_ell")
    common(p, ell=True)
    p.add_argument("--degree-bound", type=int, default=6)
    p.set_defaults(fn=cmd_factor_shape)

    p = sub.add_parser("torsion-field", help="field tower above a psi_ell factor")
    common(p, ell=True)
    p.add_argument("--factor", required=True, help="integer coefficient list, lowest first")
    p.set_defaults(fn=cmd_torsion_field)

    p = sub.add_parser("classgroup", help="class group of a negative discriminant")
    common(p, curve=False)
    p.add_argument("--D", type=int, required=True)
    p.set_defaults(fn=cmd_classgroup)

    p = sub.add_parser("rayclass", help="tame ray class data for Q(sqrt(d))")
    common(p, curve=False, ell=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", default="", help="comma-separated modulus primes")
    p.set_defaults(fn=cmd_rayclass)

    p = sub.add_parser("check", help="full admissibility + certified bounds for one d")
    common(p, ell=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--character", help="custom predicate as MODULUS:e1,e2,...")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("search", help="scan twist parameters over a range")
    common(p, ell=True)
    p.add_argument("--range", required=True, help="LO:HI with HI < 0")
    p.add_argument("--mode", choices=[m.value for m in search.SearchMode], default="CorollaryE")
    p.add_argument("--explain", action="store_true", help="include inadmissible rows")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--character", help="custom predicate as MODULUS:e1,e2,...")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("verify-paper-examples", help="run the built-in golden suite")
    p.set_defaults(fn=cmd_verify)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INTERNAL if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except (PreconditionError, UnsupportedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except TwistselError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # pragma: no cover - internal failure surface
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
