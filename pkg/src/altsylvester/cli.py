"""Command-line front end.

    altsylvester expand --alpha 5/7 --cseq const:1
    altsylvester compare --x "0;1,3,21" --y "0;2" --cseq const:1
    altsylvester certify --l 1 --seq sylvester --prefix 10

Exit status: 0 on success, 1 on domain errors (invalid sequence, undecided
comparison, budget exhausted, ...), 2 on usage errors. ``--json`` switches
every verb to JSON output; ``certify`` always prints JSON.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import irrational, realfield
from .canon import check_T, compare, refixpoint
from .cseq import parse as parse_cseq
from .errors import BudgetExceeded, GasError, Undecided
from .expansion import DEFAULT_MAX_TERMS, expand_rational, parse_literal, reconstruct
from .rational import Ordering, format_rational, parse_rational


class _Usage(Exception):
    pass


def _cseq_arg(text):
    try:
        return parse_cseq(text)
    except GasError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_arg(text):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _operand(text, cseq):
    """A rational ``p/q`` or an expansion literal ``q0;a1,...``."""
    if ";" in text or text.strip().startswith("q0="):
        return realfield.from_expansion(parse_literal(text, cseq))
    try:
        return realfield.exact(parse_rational(text), cseq)
    except (ValueError, ZeroDivisionError):
        raise _Usage(f"cannot read operand {text!r}") from None


def _emit(args, text, obj):
    if args.json:
        print(json.dumps(obj))
    else:
        print(text)


def _cmd_expand(args):
    e = expand_rational(args.alpha, args.cseq, args.max_terms)
    _emit(args, e.describe(), e.to_json())
    return 0


def _read_x(args):
    text = args.x if args.x is not None else sys.stdin.read()
    if not text.strip():
        raise _Usage("no expansion given (use --x or standard input)")
    return parse_literal(text, args.cseq)


def _cmd_reconstruct(args):
    e = _read_x(args)
    v = reconstruct(e, args.upto)
    _emit(args, format_rational(v), {"value": format_rational(v),
                                     "exact": e.terminated and (args.upto is None or args.upto >= e.known())})
    return 0


def _cmd_validate(args):
    e = _read_x(args)
    report = check_T(e, args.upto)
    out = report.to_json()
    text = str(report)
    if report.valid and e.terminated:
        fix = refixpoint(e)
        text += f"; refixpoint {'holds' if fix else 'fails'}"
    _emit(args, text, out)
    return 0 if report.valid else 1


def _cmd_compare(args):
    x = parse_literal(args.x, args.cseq)
    y = parse_literal(args.y, args.cseq)
    result = compare(x, y, args.budget)
    _emit(args, str(result), {"ordering": str(result)})
    return 1 if result is Ordering.UNDECIDED else 0


_ARITH = {
    "add": lambda x, y: realfield.add(x, y),
    "sub": lambda x, y: realfield.sub(x, y),
    "mul": lambda x, y: realfield.mul(x, y),
    "div": lambda x, y: realfield.div(x, y),
    "neg": lambda x, y: realfield.neg(x),
    "inv": lambda x, y: realfield.inv(x),
}


def _show_real(args, r):
    if isinstance(r, realfield.Exact):
        e = r.expansion
        text = f"value={format_rational(r.value)} {e.describe()}"
        return _emit(args, text, {"value": format_rational(r.value), "expansion": e.to_json()})
    try:
        enc = realfield.enclose(r, args.precision, args.budget)
    except BudgetExceeded:
        enc = realfield.refine(r, args.budget)
    try:
        e = realfield.digits(r, args.count, args.budget)
    except Undecided as exc:
        _emit(args, f"enclosure=[{format_rational(enc.lower)}, {format_rational(enc.upper)}] "
                    f"undecided_at={exc.index}",
              {"enclosure": enc.to_json(), "undecided_at": exc.index})
        return 1
    _emit(args, f"enclosure=[{format_rational(enc.lower)}, {format_rational(enc.upper)}] "
                f"{e.describe()}",
          {"enclosure": enc.to_json(), "expansion": e.to_json()})
    return 0


def _cmd_arith(args):
    if args.x is None:
        raise _Usage("arith needs --x")
    x = _operand(args.x, args.cseq)
    if args.op in ("neg", "inv"):
        y = None
    elif args.y is None:
        raise _Usage(f"{args.op} needs --y")
    else:
        y = _operand(args.y, args.cseq)
    return _show_real(args, _ARITH[args.op](x, y)) or 0


def _cmd_digits(args):
    x = _operand(args.x, args.cseq)
    try:
        e = realfield.digits(x, args.count, args.budget)
    except Undecided as exc:
        _emit(args, f"undecided at {exc.index}", {"undecided_at": exc.index})
        return 1
    _emit(args, e.describe(), e.to_json())
    return 0


def _cmd_sup(args):
    xs = [_operand(t, args.cseq) for t in args.x]
    pick = realfield.inf_finite if args.inf else realfield.sup_finite
    try:
        r = pick(xs, args.budget)
    except Undecided as exc:
        _emit(args, f"undecided at {exc.index}", {"undecided_at": exc.index})
        return 1
    return _show_real(args, r) or 0


def _cmd_certify(args):
    seq = irrational.parse_growth_seq(args.seq, args.K)
    cert = irrational.certify(seq, args.l, args.prefix)
    out = cert.to_json()
    if args.crosscheck:
        rep = irrational.crosscheck(cert, args.prefix)
        if not rep.ok:
            print(json.dumps({"crosscheck": False, "mismatch": rep.mismatch}))
            return 1
    print(json.dumps(out))
    return 0


def _cmd_eval_series(args):
    seq = irrational.parse_growth_seq(args.seq, args.K)
    v = irrational.eval_f(seq, args.z, args.terms)
    _emit(args, format_rational(v), {"value": format_rational(v)})
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output")

    with_cseq = argparse.ArgumentParser(add_help=False, parents=[common])
    with_cseq.add_argument("--cseq", type=_cseq_arg, required=True,
                           help="multiplier sequence: const:k | pow:l | list:k1,k2,...[;tail:...]")

    budgets = argparse.ArgumentParser(add_help=False)
    budgets.add_argument("--budget", type=_positive, default=realfield.DEFAULT_BUDGET)
    budgets.add_argument("--precision", type=_rational_arg, default=realfield.DEFAULT_PRECISION)
    budgets.add_argument("--count", type=_positive, default=realfield.DEFAULT_DIGITS,
                         help="number of digits to extract")

    p = argparse.ArgumentParser(prog="altsylvester",
                                description="Generalized alternating-Sylvester expansions.")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("expand", parents=[with_cseq], help="expand a rational")
    s.add_argument("--alpha", type=_rational_arg, required=True)
    s.add_argument("--max-terms", type=_positive, default=DEFAULT_MAX_TERMS)
    s.set_defaults(func=_cmd_expand)

    s = sub.add_parser("reconstruct", parents=[with_cseq],
                       help="value of an expansion (reads stdin without --x)")
    s.add_argument("--x")
    s.add_argument("--upto", type=_positive)
    s.set_defaults(func=_cmd_reconstruct)

    s = sub.add_parser("validate", parents=[with_cseq], help="canonical-sequence test")
    s.add_argument("--x")
    s.add_argument("--upto", type=_positive, default=64)
    s.set_defaults(func=_cmd_validate)

    s = sub.add_parser("compare", parents=[with_cseq], help="order two expansions")
    s.add_argument("--x", required=True)
    s.add_argument("--y", required=True)
    s.add_argument("--budget", type=_positive, default=64)
    s.set_defaults(func=_cmd_compare)

    s = sub.add_parser("arith", parents=[with_cseq, budgets], help="field operations")
    s.add_argument("--op", choices=sorted(_ARITH), required=True)
    s.add_argument("--x")
    s.add_argument("--y")
    s.set_defaults(func=_cmd_arith)

    s = sub.add_parser("digits", parents=[with_cseq, budgets], help="certified digit extraction")
    s.add_argument("--x", required=True)
    s.set_defaults(func=_cmd_digits)

    s = sub.add_parser("sup", parents=[with_cseq, budgets], help="supremum of a finite set")
    s.add_argument("--x", action="append", required=True, help="member (repeatable)")
    s.add_argument("--inf", action="store_true", help="infimum instead")
    s.set_defaults(func=_cmd_sup)

    s = sub.add_parser("certify", parents=[common], help="irrationality certificate for f(-l)")
    s.add_argument("--l", type=_positive, required=True)
    s.add_argument("--seq", required=True, help="sylvester | sylvesterK:<k> | list:p1,p2,...")
    s.add_argument("--K", type=_rational_arg, help="growth factor for list: sequences")
    s.add_argument("--prefix", type=_positive, default=10)
    s.add_argument("--crosscheck", action="store_true", help="also re-derive the tail digits")
    s.set_defaults(func=_cmd_certify)

    s = sub.add_parser("eval-series", parents=[common], help="partial sum of z^n / p_n")
    s.add_argument("--seq", required=True)
    s.add_argument("--K", type=_rational_arg)
    s.add_argument("--z", type=int, required=True)
    s.add_argument("--terms", type=_positive, required=True)
    s.set_defaults(func=_cmd_eval_series)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        parser.error(str(exc))
    except (GasError, ZeroDivisionError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())
