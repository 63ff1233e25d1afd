"""Command-line front end: ``qvertex {vertex,limit,tangent,xi,verify,verify-suite}``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import List, Optional

from .algebra import AlgebraError, Cocharacter, RationalFunction, VariableTable
from .algebra.textform import parse_pair, parse_polynomial, variables_in
from .geometry import Partition, SubsetPoint, partitions_of, subsets_of
from .geometry.character import Character
from .geometry.grassmannian import gr_dual_attracting_split
from .geometry.hilbert import hilb_attracting_split
from .mirror import (
    ConjectureReport,
    MirrorCase,
    grassmannian_case,
    hilbert_case,
    nn_note_check,
    pretty_rational,
    series_records,
    verify_case,
)
from .qseries import xi_product
from .quiverfile import QuiverFileError, load_generic_quiver
from .vertex import (
    VertexInstance,
    grassmannian_chamber,
    grassmannian_instance,
    hilbert_chamber,
    hilbert_instance,
    limit_vertex_series,
    vertex_series,
)

ORDER_ENV = "QVERTEX_ORDER"
DEFAULT_ORDER = 6

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ERROR = 0, 1, 2, 3


class UsageError(ValueError):
    pass


@dataclass
class Selected:
    kind: str  # hilbert | grassmannian | quiver
    label: str
    point: str
    inst: VertexInstance
    default_chamber: Optional[Cocharacter]
    lam: Optional[Partition] = None
    subset: Optional[SubsetPoint] = None


def _default_order() -> int:
    raw = os.environ.get(ORDER_ENV)
    if raw is None:
        return DEFAULT_ORDER
    try:
        val = int(raw)
    except ValueError:
        raise UsageError(f"{ORDER_ENV}={raw!r} is not an integer") from None
    return val


def _parse_kn(text: str):
    try:
        k, n = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--grassmannian expects K,N, got {text!r}") from None
    if not 1 <= k <= n:
        raise UsageError(f"need 1 <= k <= n, got k={k}, n={n}")
    return k, n


def select_instance(args, need_point: bool = True) -> Selected:
    chosen = [x for x in (args.hilbert, args.grassmannian, args.quiver) if x is not None]
    if len(chosen) != 1:
        raise UsageError("choose exactly one of --hilbert, --grassmannian, --quiver")
    try:
        if args.hilbert is not None:
            lam = Partition.parse(args.hilbert)
            return Selected("hilbert", f"hilbert n={lam.size}", lam.text(), hilbert_instance(lam), hilbert_chamber(), lam=lam)
        if args.grassmannian is not None:
            k, n = _parse_kn(args.grassmannian)
            if args.point is None:
                raise UsageError("--grassmannian needs --point P1,...,Pk")
            p = SubsetPoint.parse(k, n, args.point)
            return Selected(
                "grassmannian", f"grassmannian k={k} n={n}", p.text(), grassmannian_instance(p), grassmannian_chamber(n), subset=p
            )
    except (AlgebraError, ValueError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(str(exc)) from None
    inst = load_generic_quiver(args.quiver)
    return Selected("quiver", f"quiver {args.quiver}", inst.point.text(), inst, None)


def _chamber(args, sel: Selected) -> Cocharacter:
    if args.chamber:
        if sel.kind == "hilbert" and args.chamber in ("+", "plus", "-", "minus"):
            return hilbert_chamber(args.chamber in ("+", "plus"))
        try:
            return Cocharacter.parse(args.chamber)
        except (AlgebraError, ValueError) as exc:
            raise UsageError(f"bad --chamber: {exc}") from None
    if sel.default_chamber is None:
        raise UsageError("a generic quiver needs --chamber NAME=EXP,...")
    return sel.default_chamber


def _emit(args, payload: dict, text: str) -> None:
    out = json.dumps(payload, sort_keys=True, indent=2) + "\n" if args.output == "json" else text + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _series_text(s, pretty: bool = True) -> str:
    lines = []
    for d in s.degrees():
        c = s.coefficient(d)
        if c.is_zero():
            continue
        mono = "*".join(f"{v}^{e}" if e != 1 else v for v, e in zip(s.series_vars, d) if e) or "1"
        lines.append(f"  [{mono}] {pretty_rational(c) if pretty else c.text()}")
    return "\n".join(lines)


def _series_payload(sel: Selected, order: int, s) -> dict:
    return {"instance": sel.label, "fixed_point": sel.point, "order": order, "series": series_records(s)}


def cmd_vertex(args) -> int:
    sel = select_instance(args)
    s = vertex_series(sel.inst, args.order, jobs=args.jobs, progress=not args.quiet)
    head = f"instance: {sel.label}\nfixed point: {sel.point}\norder: {args.order}\nseries:"
    _emit(args, _series_payload(sel, args.order, s), head + ("\n" + _series_text(s) if s.coeffs else ""))
    return EXIT_OK


def cmd_limit(args) -> int:
    sel = select_instance(args)
    sigma = _chamber(args, sel)
    s = limit_vertex_series(sel.inst, sigma, args.order, method=args.method, jobs=args.jobs, progress=not args.quiet)
    payload = _series_payload(sel, args.order, s)
    payload["chamber"] = str(sigma)
    head = f"instance: {sel.label}\nfixed point: {sel.point}\nchamber: {sigma}\norder: {args.order}\nlimit:"
    _emit(args, payload, head + "\n" + _series_text(s))
    return EXIT_OK


def cmd_tangent(args) -> int:
    sel = select_instance(args)
    if sel.kind == "hilbert":
        plus, minus = hilb_attracting_split(sel.lam)
        side = "chamber C+ on the (t1, t2) torus"
    elif sel.kind == "grassmannian":
        plus, minus = gr_dual_attracting_split(sel.subset)
        side = "dual fixed point, variables (q, hp, ap) with hbar' = hp^2"
    else:
        raise UsageError("tangent is available for --hilbert and --grassmannian")
    T = plus + minus
    payload = {
        "instance": sel.label,
        "fixed_point": sel.point,
        "side": side,
        "T": T.text(),
        "N+": plus.text(),
        "N-": minus.text(),
    }
    text = "\n".join(
        [f"instance: {sel.label}", f"fixed point: {sel.point}", f"({side})", f"T  = {T.text()}", f"N+ = {plus.text()}", f"N- = {minus.text()}"]
    )
    _emit(args, payload, text)
    return EXIT_OK


def cmd_xi(args) -> int:
    sv = args.series_var
    names = set(variables_in(args.base))
    for w in args.weight:
        names.update(variables_in(w))
    names.discard(sv)
    names.add("q")
    coeff = VariableTable(sorted(names, key=lambda n: (n != "q", n)))
    full = coeff.extend(sv)
    try:
        num, den = parse_pair(args.base, coeff)
        b = RationalFunction(num, den)
        weights = {}
        for w in args.weight:
            p = parse_polynomial(w, full)
            if not p.is_monomial() or p.single_term()[1] != 1:
                raise UsageError(f"weight {w!r} must be a monomial with coefficient 1")
            e = p.single_term()[0]
            weights[e] = weights.get(e, 0) + 1
        s = xi_product(b, Character(full, weights), args.order, sv)
    except AlgebraError as exc:
        raise UsageError(str(exc)) from None
    payload = {"base": args.base, "weights": list(args.weight), "order": args.order, "series": series_records(s)}
    head = f"Xi({args.base}; {', '.join(args.weight)}) to order {args.order}:"
    _emit(args, payload, head + "\n" + _series_text(s, pretty=False))
    return EXIT_OK


def _case_for(sel: Selected):
    if sel.kind == "hilbert":
        return hilbert_case(sel.lam)
    if sel.kind == "grassmannian":
        return grassmannian_case(sel.subset)
    raise UsageError("verify is available for --hilbert and --grassmannian")


def cmd_verify(args) -> int:
    if args.order < 1:
        raise UsageError("verify needs --order >= 1")
    sel = select_instance(args)
    case = _case_for(sel)
    if args.chamber:
        case = MirrorCase(case.instance_label, case.point_label, case.inst, _chamber(args, sel), case.mirror, case.dual_minus)
    report = verify_case(case, args.order, perturb=args.perturb, jobs=args.jobs, progress=not args.quiet)
    _emit(args, report.to_json(), report.text())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify_suite(args) -> int:
    if args.order < 1:
        raise UsageError("verify-suite needs --order >= 1")
    cases = []
    if args.hilbert_max is not None:
        cases += [hilbert_case(l) for n in range(1, args.hilbert_max + 1) for l in partitions_of(n)]
    for kn in args.grassmannian or []:
        k, n = _parse_kn(kn)
        cases += [grassmannian_case(p) for p in subsets_of(k, n)]
    if not cases and args.nn_max is None:
        raise UsageError("give --hilbert-max N, --grassmannian K,N (repeatable) and/or --nn-max N")
    reports: List[ConjectureReport] = []
    lines = []
    for case in cases:
        r = verify_case(case, args.order, jobs=args.jobs, progress=False)
        reports.append(r)
        lines.append(f"{r.verdict}  {r.instance}  point {r.fixed_point}")
        if not args.quiet:
            print(f"{r.verdict}: {r.instance} point {r.fixed_point} ({r.seconds:.2f}s)", file=sys.stderr)
    nn = []
    for n in range(1, (args.nn_max or 0) + 1):
        ok, got, want = nn_note_check(n)
        nn.append({"n": n, "verdict": "pass" if ok else "fail", "extracted": got.text(), "expected": want.text()})
        lines.append(f"{'pass' if ok else 'fail'}  grassmannian k={n} n={n}  char(C^{2 * n}) from extracted N-")
    all_ok = all(r.passed for r in reports) and all(x["verdict"] == "pass" for x in nn)
    passed = sum(r.passed for r in reports) + sum(x["verdict"] == "pass" for x in nn)
    total = len(reports) + len(nn)
    lines.append(f"{passed}/{total} passed; verdict: {'pass' if all_ok else 'fail'}")
    payload = {
        "order": args.order,
        "reports": [r.to_json() for r in reports],
        "nn_checks": nn,
        "verdict": "pass" if all_ok else "fail",
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if all_ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qvertex", description="Vertex functions of quiver varieties and their 3d-mirror checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, instance=True):
        if instance:
            p.add_argument("--hilbert", metavar="LAMBDA", help="partition, e.g. 2,1")
            p.add_argument("--grassmannian", metavar="K,N", help="T*Gr(K, N); use with --point")
            p.add_argument("--point", metavar="P1,...,PK", help="fixed point of T*Gr as a k-subset of 1..N")
            p.add_argument("--quiver", metavar="FILE", help="generic quiver file")
            p.add_argument("--chamber", help="cocharacter NAME=EXP,... (Hilbert also accepts plus/minus)")
        p.add_argument("--order", type=int, default=None, help=f"truncation order (default {DEFAULT_ORDER}, or ${ORDER_ENV})")
        p.add_argument("--output", choices=("text", "json"), default="text")
        p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for tuple evaluation")
        p.add_argument("--quiet", action="store_true", help="no progress on stderr")

    p = sub.add_parser("vertex", help="truncated vertex series V_p(a, z)")
    common(p)
    p.set_defaults(func=cmd_vertex)
    p = sub.add_parser("limit", help="chamber limit V_p(0_C, z)")
    common(p)
    p.add_argument("--method", choices=("termwise", "substituted"), default="termwise")
    p.set_defaults(func=cmd_limit)
    p = sub.add_parser("tangent", help="T, N+ and N- at a fixed point")
    common(p)
    p.set_defaults(func=cmd_tangent)
    p = sub.add_parser("xi", help="expand xi(b, w) or a product over several weights")
    common(p, instance=False)
    p.add_argument("--base", required=True, help="b, e.g. h^2 or q*hp^-2")
    p.add_argument("--weight", action="append", required=True, help="monomial weight (repeatable)")
    p.add_argument("--series-var", default="z")
    p.set_defaults(func=cmd_xi)
    p = sub.add_parser("verify", help="compare the mirror-substituted limit with the q-binomial product")
    common(p)
    p.add_argument("--perturb", action="store_true", help="multiply one RHS weight by hbar' (negative control)")
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("verify-suite", help="verify every fixed point of a family")
    common(p, instance=False)
    p.add_argument("--hilbert-max", type=int, metavar="N", help="all partitions of 1..N")
    p.add_argument("--grassmannian", action="append", metavar="K,N", help="all k-subsets of 1..N (repeatable)")
    p.add_argument("--nn-max", type=int, metavar="N", help="also check T*Gr(n, n) for n = 1..N")
    p.set_defaults(func=cmd_verify_suite)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.order is None:
            args.order = _default_order()
        if args.order < 0:
            raise UsageError("--order must be nonnegative")
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        return args.func(args)
    except (UsageError, QuiverFileError) as exc:
        print(f"qvertex: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AlgebraError, ValueError) as exc:
        print(f"qvertex: computation failed: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
