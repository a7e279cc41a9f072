"""Byte-stable text/JSON rendering: floats always carry 10 significant digits."""

from __future__ import annotations

import json
import math
from fractions import Fraction


def fmt_float(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    if x == 0.0:
        return "0"
    return format(x, ".10g")


def dumps(obj) -> str:
    """Compact JSON with fixed float formatting and insertion-ordered keys."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, Fraction):
        return '{"num":%d,"den":%d}' % (obj.numerator, obj.denominator)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ",".join(f"{json.dumps(str(k))}:{dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def fmt_value(v) -> str:
    """Scalar rendering for CSV and text cells."""
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return fmt_float(v)
    if isinstance(v, Fraction):
        return str(v)
    return str(v)


def format_polynomial(coefficients) -> str:
    """Human form of ascending coefficients, e.g. ``x^5 - 19/9 x^3 + 70/81 x``."""
    terms = []
    for k in range(len(coefficients) - 1, -1, -1):
        c = coefficients[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        mag_s = fmt_value(mag)
        power = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if k > 0 and mag == 1:
            body = power
        else:
            body = f"{mag_s} {power}".strip()
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
