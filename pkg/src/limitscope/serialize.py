"""JSON-ready views of analysis results (see ``schema/response.schema.json``)."""

from __future__ import annotations

import math
from fractions import Fraction

from .asympt import CurveSpec, LimitResult, format_curve
from .exactalg import AlgebraicNumber, decimal_string, isolating_interval, minimal_polynomial

__all__ = [
    "scalar_json", "limit_json", "curve_json", "point_json", "interval_json",
    "verdict_json", "minpoly_text",
]


def _integer_minpoly(x) -> list[int]:
    m = minimal_polynomial(x)
    den = math.lcm(*(Fraction(c).denominator for c in m))
    coeffs = [int(Fraction(c) * den) for c in m]
    g = math.gcd(*coeffs)
    return [c // g for c in coeffs]


def minpoly_text(coeffs, var: str = "z") -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        parts.append(("-" if c < 0 else "+") + body)
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


def scalar_json(v) -> dict:
    if isinstance(v, AlgebraicNumber) and len(v.minpoly()) > 2:
        mp = _integer_minpoly(v)
        lo, hi = isolating_interval(v)
        return {
            "type": "algebraic",
            "minpoly": mp,
            "minpoly_text": minpoly_text(mp),
            "interval": [str(lo), str(hi)],
            "decimal": decimal_string(v),
        }
    if isinstance(v, AlgebraicNumber):
        v = -Fraction(v.minpoly()[0])
    v = Fraction(v)
    return {"type": "rational", "value": str(v), "decimal": decimal_string(v)}


def point_json(x, y) -> dict:
    return {"x": scalar_json(x), "y": scalar_json(y)}


def limit_json(r: LimitResult) -> dict:
    out = {"kind": r.kind, "exact": r.exact}
    if r.is_finite:
        out["value"] = scalar_json(r.value)
    return out


def curve_json(c: CurveSpec | None):
    if c is None:
        return None
    return {"curve": format_curve(c), "side": "+" if c.side > 0 else "-"}


def interval_json(iv) -> dict:
    return {
        "lo": scalar_json(iv.lo),
        "hi": scalar_json(iv.hi),
        "lo_witness": curve_json(iv.lo_witness),
        "hi_witness": curve_json(iv.hi_witness),
        "exact": iv.exact,
        "candidates": [
            {
                "source": c.source,
                "curve": curve_json(c.curve),
                "witness": curve_json(c.witness),
                "limit": limit_json(c.result),
            }
            for c in iv.candidates
        ],
    }


def verdict_json(v) -> dict:
    return {
        "exists": v.exists,
        "value": scalar_json(v.value) if v.exists else None,
        "counter_witnesses": [
            {**(curve_json(c) or {"curve": None, "side": None}), "limit": limit_json(r)}
            for c, r in v.counter_witnesses
        ],
    }
