"""``kdiv`` command line interface.

Exit codes: 0 success, 1 usage error, 2 a domain operation rejected its
inputs, 3 ``verify-paper`` found a failing entry.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .curve_ff import (
    CurveFp,
    count_points,
    is_supersingular,
    rational_function_field,
    trace,
    weil_zeta,
    zeta_f_at,
    zeta_x_at,
)
from .divisible import DivisibleOrder, dnl_ff, dnl_q, dnl_ss, moore_quotient
from .errors import KdivError
from .exact_core import LPower
from .obstructions import Verdict, homology_kernel_q, homology_kernel_ss, split_verdict_ff, split_verdict_q
from .report import verify_paper
from .zeta_q import bernoulli, wn_q, wn_ql, zeta_q_neg

EXIT_OK, EXIT_USAGE, EXIT_HYPOTHESIS, EXIT_VERIFY = 0, 1, 2, 3

GRAMMAR = """\
kdiv bernoulli --m M
kdiv zeta-q --n N
kdiv wn --n N [--l L]
kdiv dnl q --n N --l L
kdiv dnl ff (--p P --A A --B B | --p P --rational) --n N --l L
kdiv dnl ss --p P --n N --l L
kdiv curve --p P --A A --B B (count | trace | supersingular | zeta --n N)
kdiv split q --n N --l L
kdiv split ff (--p P --A A --B B | --p P --rational) --n N --l L
kdiv homology q --n N --l L
kdiv homology ss --p P --n N --l L
kdiv moore --local W1,W2,... --global W --l L
kdiv verify-paper
every subcommand accepts --json"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON instead of a table")

    def leaf(sub: Any, name: str, **kw: Any) -> _Parser:
        return sub.add_parser(name, parents=[common], **kw)

    def field_args(p: _Parser) -> None:
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--A", type=int)
        p.add_argument("--B", type=int)
        p.add_argument("--rational", action="store_true", help="use F_p(x) instead of a curve")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--l", type=int, required=True)

    parser = _Parser(prog="kdiv", description="Exact orders of divisible elements in K-theory.",
                     epilog=GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = leaf(sub, "bernoulli")
    p.add_argument("--m", type=int, required=True)
    p = leaf(sub, "zeta-q")
    p.add_argument("--n", type=int, required=True)
    p = leaf(sub, "wn")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int)

    dnl = sub.add_parser("dnl").add_subparsers(dest="kind", required=True, parser_class=_Parser)
    p = leaf(dnl, "q")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    field_args(leaf(dnl, "ff"))
    p = leaf(dnl, "ss")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)

    p = leaf(sub, "curve")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--B", type=int, required=True)
    what = p.add_subparsers(dest="what", required=True, parser_class=_Parser)
    for name in ("count", "trace", "supersingular"):
        leaf(what, name)
    leaf(what, "zeta").add_argument("--n", type=int, required=True)

    split = sub.add_parser("split").add_subparsers(dest="kind", required=True, parser_class=_Parser)
    p = leaf(split, "q")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    field_args(leaf(split, "ff"))

    hom = sub.add_parser("homology").add_subparsers(dest="kind", required=True, parser_class=_Parser)
    p = leaf(hom, "q")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p = leaf(hom, "ss")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)

    p = leaf(sub, "moore")
    p.add_argument("--local", type=_int_list, required=True)
    p.add_argument("--global", dest="global_", type=int, required=True)
    p.add_argument("--l", type=int, required=True)

    leaf(sub, "verify-paper")
    return parser


def _s(x: Any) -> Any:
    """Serialise exact values as decimal strings; booleans and None pass through."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, (int, Fraction, LPower)):
        return str(x if not isinstance(x, LPower) else x.value)
    if isinstance(x, dict):
        return {str(k): _s(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_s(v) for v in x]
    return str(x)


def _order_doc(d: DivisibleOrder) -> dict:
    return {
        "context": d.context,
        "n": d.n,
        "l": d.l,
        "order": d.order.value,
        "exponent": d.order.exponent,
        "inputs": dict(d.inputs_echo),
    }


def _verdict_doc(v: Verdict) -> dict:
    return {
        "status": v.status,
        "holds": v.holds,
        "conclusion": v.conclusion,
        "hypotheses": [
            {"name": h.name, "satisfied": h.satisfied, "structural": h.structural, "witness": h.witness}
            for h in v.hypotheses
        ],
    }


def _field_zeta(args: argparse.Namespace):
    if args.rational:
        return rational_function_field(args.p)
    if args.A is None or args.B is None:
        raise UsageError("kdiv: --A and --B are required unless --rational is given")
    return weil_zeta(CurveFp(args.p, args.A, args.B))


def _dispatch(args: argparse.Namespace) -> dict:
    cmd = args.command
    if cmd == "bernoulli":
        return {"m": args.m, "B_m": bernoulli(args.m)}
    if cmd == "zeta-q":
        return {"n": args.n, "zeta(-n)": zeta_q_neg(args.n)}
    if cmd == "wn":
        w = wn_q(args.n)
        doc: dict = {"n": args.n, "w_n(Q)": w.value, "factors": dict(w.factors)}
        if args.l is not None:
            doc["l"] = args.l
            doc["w_n(Q_l) l-part"] = wn_ql(args.n, args.l)
        return doc
    if cmd == "dnl":
        if args.kind == "q":
            return _order_doc(dnl_q(args.n, args.l))
        if args.kind == "ss":
            return _order_doc(dnl_ss(args.p, args.n, args.l))
        return _order_doc(dnl_ff(_field_zeta(args), args.n, args.l))
    if cmd == "curve":
        c = CurveFp(args.p, args.A, args.B)
        doc = {"curve": str(c)}
        if args.what == "count":
            doc["points"] = count_points(c)
        elif args.what == "trace":
            doc["trace"] = trace(c)
        elif args.what == "supersingular":
            doc["supersingular"] = is_supersingular(c)
        else:
            z = weil_zeta(c)
            doc.update({"q": z.q, "a": z.a, "n": args.n,
                        "zeta_X(-n)": zeta_x_at(z, args.n), "zeta_F(-n)": zeta_f_at(z, args.n)})
        return doc
    if cmd == "split":
        if args.kind == "q":
            return _verdict_doc(split_verdict_q(args.n, args.l))
        return _verdict_doc(split_verdict_ff(_field_zeta(args), args.n, args.l))
    if cmd == "homology":
        if args.kind == "q":
            return _verdict_doc(homology_kernel_q(args.n, args.l))
        return _verdict_doc(homology_kernel_ss(args.p, args.n, args.l))
    if cmd == "moore":
        return {"local": args.local, "global": args.global_, "l": args.l,
                "quotient l-part": moore_quotient(args.local, args.global_, args.l)}
    raise UsageError(f"kdiv: unknown command {cmd!r}")


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)


def _table(doc: dict, indent: str = "") -> list[str]:
    lines = []
    width = max((len(k) for k in doc), default=0)
    for k, v in doc.items():
        if isinstance(v, dict) and v:
            lines.append(f"{indent}{k}:")
            lines.extend(_table(v, indent + "  "))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{indent}{k}:")
            for item in v:
                lines.append(f"{indent}  - " + "; ".join(f"{ik}={iv}" for ik, iv in item.items()))
        else:
            shown = "not applicable" if v is None else v
            lines.append(f"{indent}{k.ljust(width)}  {shown}")
    return lines


def _report_table(doc: dict) -> list[str]:
    rows = [("PASS" if e["pass"] else "FAIL", e["claim_id"], e["computed"]) for e in doc["entries"]]
    width = max(len(r[1]) for r in rows)
    lines = [f"{mark}  {cid.ljust(width)}  {computed}" for mark, cid, computed in rows]
    s = doc["summary"]
    lines.append(f"{s['pass']}/{s['total']} claims reproduced, {s['fail']} failed")
    return lines


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        as_json = getattr(args, "json", False)
        if args.command == "verify-paper":
            report = verify_paper()
            doc = report.to_dict()
            code = EXIT_OK if report.ok else EXIT_VERIFY
            text = dumps(doc) if as_json else "\n".join(_report_table(doc))
        else:
            doc = _s(_dispatch(args))
            code = EXIT_OK
            text = dumps(doc) if as_json else "\n".join(_table(doc))
    except UsageError as exc:
        print(f"{exc}\nexpected one of:\n{GRAMMAR}", file=err)
        return EXIT_USAGE
    except KdivError as exc:
        print(f"kdiv: {type(exc).__name__}: {exc}", file=err)
        return EXIT_HYPOTHESIS
    print(text, file=out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
