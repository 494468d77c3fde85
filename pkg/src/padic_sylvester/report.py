"""Text and JSON rendering of expansions, division steps and verifications.

JSON reports carry a top-level "schema": 1 and serialize every unbounded
integer as a decimal string so they survive any JSON parser. Serialization
is deterministic: no timestamps, fixed key order.
"""

from __future__ import annotations

from fractions import Fraction

from .division import DivisionStep, RationalDivisionStep
from .expansion import Expansion, StepRecord, VerificationReport
from .quadratic import QuadElement
from .valuation import PLocal, POS_INF, Prime

SCHEMA = 1


def frac_str(f: Fraction) -> str:
    f = Fraction(f)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _ord_str(o):
    if o is None:
        return None
    if o == POS_INF:
        return "+inf"
    return str(o)


def term_display(q, initial: bool = False) -> str:
    """Paper-style rendering of one term: p^j/m when the reciprocal has that
    shape with j >= 0, otherwise the exact rational."""
    if initial:
        f = q.to_fraction() if isinstance(q, PLocal) else Fraction(q)
        return frac_str(f)
    if isinstance(q, PLocal):
        if q.unit > 0 and q.exp <= 0:
            j = -q.exp
            if j == 0:
                return f"1/{q.unit}"
            if j == 1:
                return f"{int(q.p)}/{q.unit}"
            return f"{int(q.p)}^{j}/{q.unit}"
        return frac_str(1 / q.to_fraction())
    return frac_str(Fraction(1) / Fraction(q))


def value_display(value) -> str:
    if isinstance(value, QuadElement):
        return str(value)
    return frac_str(Fraction(value))


def expansion_sum_text(e: Expansion) -> str:
    parts = [
        term_display(q, initial=(e.initial and i == 0))
        for i, q in enumerate(e.terms)
    ]
    return " + ".join(parts)


def expansion_text(e: Expansion, verification: "VerificationReport | None" = None) -> str:
    lines = [f"input: {value_display(e.value)}"]
    head = f"algorithm: {e.algorithm}"
    if e.p is not None:
        head += f"  p: {int(e.p)}"
    if e.k is not None:
        head += f"  k: {e.k}"
    lines.append(head)
    lines.append(f"expansion: {expansion_sum_text(e)}")
    lines.append(f"status: {e.status}")
    if e.certificate is not None:
        lines.append(f"certificate: remainder {frac_str(e.certificate)} is negative")
    if e.trace:
        lines.append("trace:")
        for rec in e.trace:
            lines.append("  " + _step_text(rec, e))
    if verification is not None:
        lines.append("verification: " + verification_text(verification))
    return "\n".join(lines)


def _step_text(rec: StepRecord, e: Expansion) -> str:
    bits = [f"step {rec.index}:"]
    if rec.initial:
        bits.append(f"a0={term_display(rec.q, initial=True)}")
    else:
        bits.append(f"q={rec.q}")
        bits.append(f"term={term_display(rec.q)}")
    if rec.k is not None and not rec.initial:
        bits.append(f"k={rec.k}")
    if rec.division is not None:
        d = rec.division
        bits.append(f"r={frac_str(d.r.to_fraction())}")
        bits.append(f"rbar={d.rbar}")
        bits.append(f"jump={'yes' if d.jumped else 'no'}")
        bits.append(d.case)
    if rec.remainder is not None:
        bits.append(f"r={rec.remainder}")
    if rec.tail_ord is not None:
        bits.append(f"ord(tail)={rec.tail_ord}")
    return " ".join(bits)


def verification_text(v: VerificationReport) -> str:
    bits = ["ok" if v.ok else "FAILED"]
    if v.sum_exact is not None:
        bits.append(f"sum={'exact' if v.sum_exact else 'WRONG'}")
    if v.strictly_increasing is not None:
        bits.append(f"orders={'increasing' if v.strictly_increasing else 'NOT-INCREASING'}")
    if v.growth_ok is not None:
        bits.append(f"growth={'ok' if v.growth_ok else 'VIOLATED'}")
    for prob in v.problems:
        bits.append(f"[{prob}]")
    return " ".join(bits)


# --- JSON ----------------------------------------------------------------


def _plocal_json(x: "PLocal | None"):
    if x is None:
        return None
    return {"unit": str(x.unit), "exp": str(x.exp), "value": frac_str(x.to_fraction())}


def _plocal_from_json(p: Prime, d) -> "PLocal | None":
    if d is None:
        return None
    return PLocal(p, int(d["unit"]), int(d["exp"]))


def _division_json(d: "DivisionStep | None"):
    if d is None:
        return None
    return {
        "a": _plocal_json(d.a),
        "b": _plocal_json(d.b),
        "q": _plocal_json(d.q),
        "r": _plocal_json(d.r),
        "rbar": str(d.rbar),
        "jumped": d.jumped,
        "case": d.case,
    }


def _division_from_json(p: Prime, k: "int | None", d) -> "DivisionStep | None":
    if d is None:
        return None
    return DivisionStep(
        p=p,
        k=k,
        a=_plocal_from_json(p, d["a"]),
        b=_plocal_from_json(p, d["b"]),
        q=_plocal_from_json(p, d["q"]),
        r=_plocal_from_json(p, d["r"]),
        rbar=int(d["rbar"]),
        jumped=bool(d["jumped"]),
        case=d["case"],
    )


def _input_json(value):
    if isinstance(value, QuadElement):
        return {
            "type": "quadratic",
            "x": frac_str(value.x),
            "y": frac_str(value.y),
            "d": str(value.D),
            "real_sign": "+" if value.real_sign > 0 else "-",
            "padic_residue": str(value.residue),
        }
    return {"type": "rational", "value": frac_str(Fraction(value))}


def _input_from_json(p: "Prime | None", d):
    if d["type"] == "quadratic":
        return QuadElement.make(
            Fraction(d["x"]),
            Fraction(d["y"]),
            Fraction(d["d"]),
            d["real_sign"],
            p,
            int(d["padic_residue"]),
        )
    return Fraction(d["value"])


def expansion_json(e: Expansion, verification: "VerificationReport | None" = None) -> dict:
    terms = []
    for i, q in enumerate(e.terms):
        initial = e.initial and i == 0
        entry = {"initial": initial, "display": term_display(q, initial=initial)}
        if isinstance(q, PLocal):
            entry["unit"] = str(q.unit)
            entry["exp"] = str(q.exp)
            entry["value"] = frac_str(q.to_fraction())
        else:
            entry["q"] = str(q)
        terms.append(entry)
    trace = []
    for rec in e.trace:
        entry = {
            "index": str(rec.index),
            "k": None if rec.k is None else str(rec.k),
            "initial": rec.initial,
            "tail_ord": _ord_str(rec.tail_ord),
            "q": _plocal_json(rec.q) if isinstance(rec.q, PLocal) else str(rec.q),
            "division": _division_json(rec.division),
            "lhs": _plocal_json(rec.lhs),
            "remainder": None if rec.remainder is None else str(rec.remainder),
        }
        trace.append(entry)
    out = {
        "schema": SCHEMA,
        "command": "expand",
        "algorithm": e.algorithm,
        "p": None if e.p is None else str(int(e.p)),
        "k": None if e.k is None else str(e.k),
        "input": _input_json(e.value),
        "expansion": expansion_sum_text(e),
        "terms": terms,
        "status": e.status,
        "certificate": None if e.certificate is None else frac_str(e.certificate),
        "trace": trace,
    }
    if verification is not None:
        out["verification"] = verification_json(verification)
    return out


def expansion_from_json(d: dict):
    """Rebuild (p, value, Expansion) from an expand report. Lossless for every
    field the library produced."""
    if d.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {d.get('schema')!r}")
    p = None if d["p"] is None else Prime(int(d["p"]))
    k = None if d["k"] is None else int(d["k"])
    value = _input_from_json(p, d["input"])
    terms = []
    for entry in d["terms"]:
        if "q" in entry:
            terms.append(int(entry["q"]))
        else:
            terms.append(PLocal(p, int(entry["unit"]), int(entry["exp"])))
    trace = []
    for entry in d["trace"]:
        rec_k = None if entry["k"] is None else int(entry["k"])
        q = entry["q"]
        q = int(q) if isinstance(q, str) else _plocal_from_json(p, q)
        trace.append(
            StepRecord(
                index=int(entry["index"]),
                q=q,
                k=rec_k,
                initial=bool(entry["initial"]),
                tail_ord=None if entry["tail_ord"] is None else int(entry["tail_ord"]),
                division=_division_from_json(p, rec_k, entry["division"]),
                lhs=_plocal_from_json(p, entry["lhs"]),
                remainder=None if entry["remainder"] is None else int(entry["remainder"]),
            )
        )
    initial = bool(d["terms"] and d["terms"][0]["initial"])
    certificate = None if d["certificate"] is None else Fraction(d["certificate"])
    e = Expansion(
        algorithm=d["algorithm"],
        value=value,
        p=p,
        k=k,
        terms=tuple(terms),
        status=d["status"],
        trace=tuple(trace),
        initial=initial,
        certificate=certificate,
    )
    return p, value, e


def verification_json(v: VerificationReport) -> dict:
    return {
        "ok": v.ok,
        "sum_exact": v.sum_exact,
        "tail_orders": [_ord_str(o) for o in v.tail_orders],
        "strictly_increasing": v.strictly_increasing,
        "growth_ok": v.growth_ok,
        "problems": list(v.problems),
    }


def rational_division_text(step: RationalDivisionStep) -> str:
    d = step.inner
    lines = [
        "b = a*q - r",
        f"{frac_str(step.b)} = {frac_str(step.a)} * {frac_str(step.q.to_fraction())}"
        f" - {frac_str(step.r)}",
        f"q: {step.q} (term {term_display(step.q)})",
        f"r: {frac_str(step.r)}",
        f"rbar: {d.rbar}  jump: {'yes' if d.jumped else 'no'}  case: {d.case}",
    ]
    return "\n".join(lines)


def rational_division_json(step: RationalDivisionStep) -> dict:
    return {
        "schema": SCHEMA,
        "command": "divide",
        "p": str(int(step.p)),
        "k": str(step.k),
        "a": frac_str(step.a),
        "b": frac_str(step.b),
        "q": _plocal_json(step.q),
        "r": frac_str(step.r),
        "rbar": str(step.inner.rbar),
        "jumped": step.inner.jumped,
        "case": step.inner.case,
    }
