"""Command-line front end: divide, expand, verify, compare, digits.

Exit codes: 0 on a successful determination (including a certified
non-terminating expansion), 1 on invalid input, 2 when a run was cut off by
the default term cap or by precision exhaustion.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import report
from .digits import digits_of
from .division import check_scaling_correspondence, pk_divide_rational
from .errors import PadicSylvesterError, PrecisionExhausted
from .expansion import (
    CAP_REACHED,
    DEFAULT_MAX_TERMS,
    adaptive_pk_greedy,
    check_nojump_correspondence,
    fs_greedy,
    knopfmacher_sylvester,
    modified_sylvester,
    pk_greedy,
    value_operands,
    verify_expansion,
)
from .quadratic import QuadElement, quad_digits
from .valuation import PLocal, Prime


class UsageError(Exception):
    pass


def _parse_fraction(text: str, flag: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{flag}: cannot parse {text!r} as a rational ({exc})")


def _prime(ns) -> Prime:
    if ns.p is None:
        raise UsageError("--p is required for this command")
    try:
        return Prime(ns.p)
    except PadicSylvesterError as exc:
        raise UsageError(f"--p: {exc}")


def _need_k(ns) -> int:
    if ns.k is None:
        raise UsageError("--k is required for this algorithm")
    return ns.k


QUAD_FLAGS = ("sqrt", "x", "y", "real_sign", "padic_residue")


def _quad_input(ns, p: Prime) -> "QuadElement | None":
    given = [f for f in QUAD_FLAGS if getattr(ns, f) is not None]
    if not given:
        return None
    if len(given) != len(QUAD_FLAGS):
        missing = sorted(set(QUAD_FLAGS) - set(given))
        raise UsageError(
            "quadratic input needs all of --sqrt --x --y --real-sign --padic-residue; "
            f"missing --{missing[0].replace('_', '-')}"
        )
    try:
        return QuadElement.make(
            _parse_fraction(ns.x, "--x"),
            _parse_fraction(ns.y, "--y"),
            _parse_fraction(ns.sqrt, "--sqrt"),
            ns.real_sign,
            p,
            ns.padic_residue,
        )
    except PadicSylvesterError as exc:
        raise UsageError(f"quadratic input: {exc}")
    except ValueError as exc:
        raise UsageError(f"quadratic input: {exc}")


def _emit(ns, text: str, payload: dict) -> None:
    if ns.output == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _cmd_expand(ns) -> int:
    explicit_cap = ns.max_terms is not None
    max_terms = ns.max_terms if explicit_cap else DEFAULT_MAX_TERMS
    if max_terms <= 0:
        raise UsageError("--max-terms must be positive")
    alg = ns.alg
    if alg == "fs":
        if ns.p is not None or ns.k is not None:
            raise UsageError("--p/--k do not apply to --alg fs")
        if ns.value is None:
            raise UsageError("--value is required for --alg fs")
        a, b = value_operands(_parse_fraction(ns.value, "--value"))
        e = fs_greedy(a, b)
        p = None
        value = e.value
    else:
        p = _prime(ns)
        quad = _quad_input(ns, p)
        if quad is not None and alg != "sylvester":
            raise UsageError(f"quadratic input requires --alg sylvester, not {alg}")
        if quad is None and ns.value is None:
            raise UsageError("--value is required")
        if alg == "knopf":
            if ns.k is not None:
                raise UsageError("--k does not apply to --alg knopf")
            value = _parse_fraction(ns.value, "--value")
            e = knopfmacher_sylvester(p, value, max_terms=max_terms)
        elif alg == "pk":
            k = _need_k(ns)
            value = _parse_fraction(ns.value, "--value")
            a, b = value_operands(value)
            e = pk_greedy(p, k, PLocal(p, a), PLocal(p, b))
        elif alg == "adaptive":
            k = _need_k(ns)
            value = _parse_fraction(ns.value, "--value")
            e = adaptive_pk_greedy(p, k, value)
        else:  # sylvester
            k = _need_k(ns)
            value = quad if quad is not None else _parse_fraction(ns.value, "--value")
            e = modified_sylvester(p, k, value, max_terms=max_terms)
    verification = verify_expansion(p, value, e)
    _emit(ns, report.expansion_text(e, verification), report.expansion_json(e, verification))
    if e.status == CAP_REACHED and not explicit_cap:
        return 2
    return 0


def _cmd_divide(ns) -> int:
    p = _prime(ns)
    k = _need_k(ns)
    if ns.value is None:
        raise UsageError("--value is required (the fraction a/b; the step divides b by a)")
    value = _parse_fraction(ns.value, "--value")
    a, b = value_operands(value)
    step = pk_divide_rational(p, k, Fraction(a), Fraction(b))
    _emit(ns, report.rational_division_text(step), report.rational_division_json(step))
    return 0


def _cmd_digits(ns) -> int:
    p = _prime(ns)
    count = ns.count
    if count <= 0:
        raise UsageError("--count must be positive")
    quad = _quad_input(ns, p)
    if quad is not None:
        d = quad_digits(quad, count)
        shown = str(quad)
    else:
        if ns.value is None:
            raise UsageError("--value is required")
        value = _parse_fraction(ns.value, "--value")
        d = digits_of(p, value, count)
        shown = report.frac_str(value)
    text = f"value: {shown}\nstart: {d.start}\ndigits: {' '.join(str(c) for c in d.digits)}"
    payload = {
        "schema": report.SCHEMA,
        "command": "digits",
        "p": str(int(p)),
        "value": shown,
        "start": str(d.start),
        "digits": [str(c) for c in d.digits],
    }
    _emit(ns, text, payload)
    return 0


def _cmd_compare(ns) -> int:
    p = _prime(ns)
    k = _need_k(ns)
    if ns.which == "scaling":
        if ns.a is None or ns.b is None:
            raise UsageError("--a and --b are required for --which scaling")
        ok = check_scaling_correspondence(p, k, ns.a, ns.b)
        text = f"scaling correspondence: {'holds' if ok else 'FAILS'}"
        payload = {
            "schema": report.SCHEMA,
            "command": "compare",
            "which": "scaling",
            "p": str(int(p)),
            "k": str(k),
            "a": str(ns.a),
            "b": str(ns.b),
            "holds": ok,
        }
        _emit(ns, text, payload)
        return 0
    if ns.value is None:
        raise UsageError("--value is required for --which nojump")
    value = _parse_fraction(ns.value, "--value")
    a, b = value_operands(value)
    res = check_nojump_correspondence(p, k, a, b)
    lines = [
        f"verdict: {res.verdict}",
        f"jumps at steps: {', '.join(map(str, res.jumps)) if res.jumps else 'none'}",
        f"padic terms:     {report.expansion_sum_text(res.padic)}",
        f"classical terms: {report.expansion_sum_text(res.classical)}",
    ]
    payload = {
        "schema": report.SCHEMA,
        "command": "compare",
        "which": "nojump",
        "p": str(int(p)),
        "k": str(k),
        "value": report.frac_str(value),
        "verdict": res.verdict,
        "jumps": [str(i) for i in res.jumps],
        "padic": report.expansion_json(res.padic),
        "classical": report.expansion_json(res.classical),
    }
    _emit(ns, "\n".join(lines), payload)
    return 0


def _cmd_verify(ns) -> int:
    if ns.report == "-":
        raw = sys.stdin.read()
    else:
        try:
            with open(ns.report, "r", encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise UsageError(f"report: {exc}")
    try:
        data = json.loads(raw)
        p, value, e = report.expansion_from_json(data)
    except (ValueError, KeyError, TypeError, PadicSylvesterError) as exc:
        raise UsageError(f"report: not a valid expand report ({exc})")
    v = verify_expansion(p, value, e)
    text = "verification: " + report.verification_text(v)
    payload = {
        "schema": report.SCHEMA,
        "command": "verify",
        "verification": report.verification_json(v),
    }
    _emit(ns, text, payload)
    return 0 if v.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="padic-sylvester",
        description="Finite p-adic Sylvester (Egyptian fraction) expansions "
        "of rationals and real-embeddable quadratic p-adic numbers.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, k_flag=True):
        sp.add_argument("--p", type=int, default=None, help="prime base")
        if k_flag:
            sp.add_argument("--k", type=int, default=None, help="digit window exponent")
        sp.add_argument("--output", choices=("text", "json"), default="text")

    def quad_group(sp):
        sp.add_argument("--sqrt", default=None, help="radicand d of the quadratic field")
        sp.add_argument("--x", default=None, help="rational part")
        sp.add_argument("--y", default=None, help="coefficient of sqrt(d)")
        sp.add_argument("--real-sign", dest="real_sign", choices=("+", "-"), default=None,
                        help="which real root of d the embedding uses")
        sp.add_argument("--padic-residue", dest="padic_residue", type=int, default=None,
                        help="residue of sqrt(d) mod p")

    sp = sub.add_parser("expand", help="expand a value into a sum of reciprocals")
    sp.add_argument("--alg", required=True, choices=("fs", "pk", "knopf", "sylvester", "adaptive"))
    sp.add_argument("--value", default=None, help="rational input, e.g. 473/25")
    sp.add_argument("--max-terms", dest="max_terms", type=int, default=None)
    common(sp)
    quad_group(sp)
    sp.set_defaults(func=_cmd_expand)

    sp = sub.add_parser("divide", help="one p^k division step: divide b by a for --value a/b")
    sp.add_argument("--value", default=None, help="fraction a/b; the step computes b = a*q - r")
    common(sp)
    sp.set_defaults(func=_cmd_divide)

    sp = sub.add_parser("digits", help="base-p digits of a value")
    sp.add_argument("--value", default=None)
    sp.add_argument("--count", type=int, default=8)
    common(sp, k_flag=False)
    quad_group(sp)
    sp.set_defaults(func=_cmd_digits)

    sp = sub.add_parser("compare", help="correspondence checks against the classical algorithm")
    sp.add_argument("--which", choices=("nojump", "scaling"), default="nojump")
    sp.add_argument("--value", default=None, help="fraction a/b for --which nojump")
    sp.add_argument("--a", type=int, default=None, help="divisor for --which scaling")
    sp.add_argument("--b", type=int, default=None, help="dividend for --which scaling")
    common(sp)
    sp.set_defaults(func=_cmd_compare)

    sp = sub.add_parser("verify", help="re-verify an expand --output json report")
    sp.add_argument("report", nargs="?", default="-", help="report path, or - for stdin")
    sp.add_argument("--output", choices=("text", "json"), default="text")
    sp.set_defaults(func=_cmd_verify)

    return ap


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        return ns.func(ns)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PrecisionExhausted as exc:
        print(f"error: precision exhausted: {exc}", file=sys.stderr)
        return 2
    except PadicSylvesterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
