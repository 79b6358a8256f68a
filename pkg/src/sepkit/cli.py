"""Command-line interface: exact h* computation with cross-validation, root
and interlacing certificates, Groebner verification, recursion reports, and
the conjecture/corollary scans.

Every numeric payload value is an exact integer or fraction string; nothing
is ever rounded.  Output is byte-stable for fixed arguments and seeds
(timing is only attached on request).  Exit codes: 0 all requested checks
passed, 1 usage error, 2 size bound exceeded, 3 a verification failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .counting import SizeExceeded, hstar_oracle
from .formulas import closed_form_hstar
from .graphs import Signature
from .grobner import (
    basis_to_text,
    build_basis,
    buchberger_verify,
    k222_order_scan,
    leading_term_consistency,
    max_degree,
    reducedness_check,
    toric_membership_check,
)
from .polynomial import HStar, Poly, ehrhart_from_hstar, fraction_str, poly_str
from .recursion import (
    RelationFailed,
    conjecture_scan,
    corollary_scan,
    reproduce_known_relations,
)
from .roots import NotCL, imaginary_bounds, interlaces_on_cl, is_cl
from .triangulation import hstar_triangulation

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BOUND = 2
EXIT_VERIFICATION = 3


def _envelope(command: str, params: dict, result: dict, started: float, timing: bool) -> dict:
    return {
        "command": command,
        "parameters": params,
        "result": result,
        "timing_ms": int((time.monotonic() - started) * 1000) if timing else None,
    }


def _emit(args, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.format == "plain":
        _emit_plain(payload)
    else:
        raise AssertionError(args.format)


def _emit_plain(payload: dict, prefix: str = "") -> None:
    for key, value in payload.items():
        if isinstance(value, dict):
            _emit_plain(value, prefix + key + ".")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, row in enumerate(value):
                _emit_plain(row, prefix + f"{key}[{i}].")
        else:
            print(f"{prefix}{key} = {value}")


def _hstar_by_method(sig: Signature, method: str, bound: int, jobs: int):
    if method == "formula":
        h = closed_form_hstar(sig)
        if h is None:
            raise ValueError(f"no closed form covers signature {sig}")
        return h
    if method == "triangulation":
        return hstar_triangulation(sig, max_total=bound)
    if method == "oracle":
        return hstar_oracle(sig, max_total=bound, jobs=jobs)
    raise AssertionError(method)


def cmd_hstar(args) -> int:
    started = time.monotonic()
    sig = Signature.parse(args.signature)
    methods = ["formula", "triangulation", "oracle"] if args.method == "all" else [args.method]
    rows = []
    values: list[tuple[str, HStar]] = []
    for method in methods:
        try:
            h = _hstar_by_method(sig, method, args.bound, args.jobs)
        except ValueError:
            if args.method == "all":  # not every signature has a closed form
                continue
            raise
        values.append((method, h))
        rows.append({"method": method, "coefficients": list(h.coefficients)})
    agree = len({h.poly for _, h in values}) <= 1
    result = {"signature": str(sig), "rows": rows, "agreement": agree}
    if args.max_dilation is not None and "oracle" in [m for m, _ in values]:
        from .counting import dilation_counts

        result["dilation_counts"] = [
            {"k": dc.k, "count": dc.count}
            for dc in dilation_counts(sig, args.max_dilation, max_total=args.bound, jobs=args.jobs)
        ]
    if args.format == "csv":
        print("method," + ",".join(f"h{i}" for i in range(sig.dim + 1)))
        for method, h in values:
            print(method + "," + ",".join(str(c) for c in h.coefficients))
    else:
        _emit(args, _envelope("hstar", {"signature": str(sig), "method": args.method}, result, started, args.timing))
    return EXIT_OK if agree else EXIT_VERIFICATION


def _ehrhart_of_signature(sig: Signature, bound: int, jobs: int) -> Poly:
    h = closed_form_hstar(sig)
    if h is None:
        h = hstar_triangulation(sig, max_total=bound)
    return ehrhart_from_hstar(h)


def cmd_roots(args) -> int:
    started = time.monotonic()
    sig = Signature.parse(args.signature)
    e = _ehrhart_of_signature(sig, args.bound, args.jobs)
    cert = is_cl(e)
    if args.format == "csv":
        print("re,im_interval_lo,im_interval_hi")
        rows = []
        for r in cert.w_roots:
            if r.exact == 0:
                rows.append((Fraction(0), Fraction(0)))
                continue
            lo, hi = imaginary_bounds(r.lo, r.hi)
            rows.append((lo, hi))
        if cert.parity:
            rows.append((Fraction(0), Fraction(0)))
        for lo, hi in sorted(rows):
            if lo == hi == 0:
                print("-1/2,0,0")
            else:
                print(f"-1/2,{fraction_str(-hi)},{fraction_str(-lo)}")
                print(f"-1/2,{fraction_str(lo)},{fraction_str(hi)}")
    else:
        result = {"signature": str(sig), "ehrhart": poly_str(e), "certificate": cert.as_dict()}
        _emit(args, _envelope("roots", {"signature": str(sig)}, result, started, args.timing))
    return EXIT_OK if cert.on_cl else EXIT_VERIFICATION


def cmd_interlace(args) -> int:
    started = time.monotonic()
    sig_a = Signature.parse(args.a)
    sig_b = Signature.parse(args.b)
    g = _ehrhart_of_signature(sig_a, args.bound, args.jobs)
    f = _ehrhart_of_signature(sig_b, args.bound, args.jobs)
    try:
        cert = interlaces_on_cl(g, f)
    except NotCL as exc:
        _emit(args, _envelope("interlace", {"a": args.a, "b": args.b}, {"error": str(exc)}, started, args.timing))
        return EXIT_VERIFICATION
    result = {"a": str(sig_a), "b": str(sig_b), "certificate": cert.as_dict()}
    _emit(args, _envelope("interlace", {"a": args.a, "b": args.b}, result, started, args.timing))
    return EXIT_OK if cert.interlaces else EXIT_VERIFICATION


def cmd_recursion(args) -> int:
    started = time.monotonic()
    report = reproduce_known_relations(args.n, strict=False)
    if args.relation != "all":
        report["rows"] = [r for r in report["rows"] if r["relation"] == args.relation]
        if not report["rows"]:
            print(f"unknown relation id {args.relation!r}", file=sys.stderr)
            return EXIT_USAGE
    ok = all(r["verified"] for r in report["rows"])
    _emit(args, _envelope("recursion", {"relation": args.relation, "n": args.n}, report, started, args.timing))
    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_gb(args) -> int:
    started = time.monotonic()
    sig = Signature.parse(args.signature)
    checks = args.checks.split(",") if args.checks else ["reduced", "lead", "degree", "membership"]
    basis = build_basis(sig)
    result: dict = {"signature": str(sig), "size": len(basis)}
    ok = True
    for check in checks:
        if check == "reduced":
            result["reduced"] = reducedness_check(basis)
            ok &= result["reduced"]
        elif check == "lead":
            result["lead_consistent"] = leading_term_consistency(sig, basis)
            ok &= result["lead_consistent"]
        elif check == "degree":
            result["max_degree"] = max_degree(basis)
            result["at_most_cubic"] = result["max_degree"] <= 3
            ok &= result["at_most_cubic"]
        elif check == "membership":
            result["toric_membership"] = all(toric_membership_check(sig, e) for e in basis)
            ok &= result["toric_membership"]
        elif check == "buchberger":
            result["buchberger"] = buchberger_verify(sig)
            ok &= result["buchberger"]
        elif check == "k222":
            scan = k222_order_scan(args.orders, args.seed)
            result["k222"] = {
                "all_orders_obstructed": scan["all_orders_obstructed"],
                "num_orders": scan["num_orders"],
                "seed": scan["seed"],
            }
            ok &= scan["all_orders_obstructed"]
        elif check == "export":
            result["basis"] = basis_to_text(sig, basis).splitlines()
        else:
            print(f"unknown check {check!r}", file=sys.stderr)
            return EXIT_USAGE
    _emit(args, _envelope("gb", {"signature": str(sig), "checks": checks}, result, started, args.timing))
    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_scan(args) -> int:
    started = time.monotonic()
    if args.kind == "conjecture":
        report = conjecture_scan(args.max_total, args.max_n)
        ok = report["violations"] == 0
    elif args.kind == "corollary":
        report = corollary_scan(args.m, args.max_n)
        ok = all(r["status"] == "unique" for r in report["rows"])
        if "alpha2_matches" in report:
            ok &= report["alpha2_matches"]
    elif args.kind == "k222":
        report = k222_order_scan(args.orders, args.seed)
        ok = report["all_orders_obstructed"]
    else:
        print(f"unknown scan kind {args.kind!r}", file=sys.stderr)
        return EXIT_USAGE
    _emit(args, _envelope("scan", {"kind": args.kind}, report, started, args.timing))
    return EXIT_OK if ok else EXIT_VERIFICATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sepkit",
        description="Exact Ehrhart invariants of symmetric edge polytopes of complete multipartite graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=("json", "plain", "csv")):
        p.add_argument("--format", choices=fmt, default="json")
        p.add_argument("--jobs", type=int, default=1, help="worker threads for enumeration scans")
        p.add_argument("--bound", type=int, default=None, help="size bound override (total vertices)")
        p.add_argument("--timing", action="store_true", help="attach wall-clock timing to the envelope")

    p = sub.add_parser("hstar", help="h* coefficients by one or all methods")
    p.add_argument("--signature", required=True)
    p.add_argument("--method", choices=["formula", "triangulation", "oracle", "all"], default="all")
    p.add_argument(
        "--max-dilation", type=int, default=None,
        help="with the oracle method, also report lattice-point counts up to this dilation",
    )
    common(p)
    p.set_defaults(func=cmd_hstar)

    p = sub.add_parser("roots", help="canonical-line root certificate")
    p.add_argument("--signature", required=True)
    common(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("interlace", help="certify E_a interlaces E_b on the canonical line")
    p.add_argument("--a", required=True, help="signature of the interlacing (lower-degree) polynomial")
    p.add_argument("--b", required=True, help="signature of the interlaced polynomial")
    common(p, fmt=("json", "plain"))
    p.set_defaults(func=cmd_interlace)

    p = sub.add_parser("recursion", help="solve and verify the catalogued recursions")
    p.add_argument("--relation", default="all", help="relation id a..j, bipartite-1..3, or 'all'")
    p.add_argument("--n", type=int, required=True)
    common(p, fmt=("json", "plain"))
    p.set_defaults(func=cmd_recursion)

    p = sub.add_parser("gb", help="Groebner basis construction and verification")
    p.add_argument("--signature", required=True)
    p.add_argument("--checks", default="", help="comma list: reduced,lead,degree,membership,buchberger,k222,export")
    p.add_argument("--seed", type=int, default=7, help="seed for randomized order scans")
    p.add_argument("--orders", type=int, default=100, help="number of random edge orders")
    common(p, fmt=("json", "plain"))
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("scan", help="conjecture / corollary / K222 order scans")
    p.add_argument("--kind", choices=["conjecture", "corollary", "k222"], required=True)
    p.add_argument("--max-total", type=int, default=6)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--m", type=int, default=4, help="corollary scan row parameter")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--orders", type=int, default=100)
    common(p, fmt=("json", "plain"))
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SizeExceeded as exc:
        print(f"size bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (ValueError, NotCL, RelationFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE if isinstance(exc, ValueError) else EXIT_VERIFICATION


if __name__ == "__main__":
    sys.exit(main())
