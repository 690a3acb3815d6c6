"""Catalog curves, asymptotic substitution and limits along a curve.

A curve through an anchor ``(x0, y0)`` is described in offsets from the
anchor.  For orientation ``y_of_x`` and side ``+1`` it is::

    x - x0 = s,   y - y0 = base(s) + tail(s),   s -> 0+

and for side ``-1`` the abscissa is ``x - x0 = -s``.  ``base`` is a type (i)
series in ``s = |x - x0|`` whose coefficients already include the side
(``y = x`` on the minus side has base ``-s``).  Orientation ``x_of_y`` swaps
the roles of ``x`` and ``y``.  The optional tail is ``c*s^e`` with ``e``
irrational, ``c*s^e/ln s`` or ``c*s^e*ln s``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .exactalg import Exponent, compare_exponents, sign
from .genseries import (
    GenSeries,
    LogSeries,
    exp_key,
    exp_max,
    format_terms,
    log_add,
    log_leading,
    log_mul,
    parse_terms,
    TermSyntaxError,
)
from .polyfun import BiPoly, ORIGIN, Point, RationalFn, translate, translate_poly

__all__ = [
    "Tail", "CurveSpec", "LimitResult", "CurveSyntaxError",
    "parse_curve", "format_curve", "substitute_poly", "limit_along_curve",
    "leading_nonconstant", "expand_around", "UnresolvedAtBound",
]


class CurveSyntaxError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"{message} at column {column}")
        self.column = column


class UnresolvedAtBound(ArithmeticError):
    """No non-constant term appears below the truncation order."""


TAIL_KINDS = ("power", "power_over_log", "power_times_log")
_LOGPOW = {"power": 0, "power_over_log": -1, "power_times_log": 1}


@dataclass(frozen=True)
class Tail:
    kind: str
    exponent: object
    coeff: object = Fraction(1)

    def __post_init__(self):
        if self.kind not in TAIL_KINDS:
            raise ValueError(f"unknown tail kind {self.kind!r}")
        if self.kind != "power" and isinstance(self.exponent, Exponent):
            raise ValueError("log tails take rational exponents")

    @property
    def logpow(self) -> int:
        return _LOGPOW[self.kind]


@dataclass(frozen=True)
class CurveSpec:
    orientation: str = "y_of_x"
    base: GenSeries = field(default_factory=GenSeries)
    tail: Tail | None = None
    side: int = 1
    anchor: Point = ORIGIN

    def __post_init__(self):
        if self.orientation not in ("y_of_x", "x_of_y"):
            raise ValueError("orientation must be 'y_of_x' or 'x_of_y'")
        if self.side not in (1, -1):
            raise ValueError("side must be +1 or -1")
        if self.base.order_bound is not None:
            raise ValueError("curve base must be an exact type (i) series")
        if self.tail is not None:
            e = self.tail.exponent
            floor = self.base.last_exponent() if self.base.terms else 1
            if compare_exponents(e, floor) < 0:
                raise ValueError("tail exponent must not precede the base exponents")

    @property
    def vars(self):
        return ("x", "y") if self.orientation == "y_of_x" else ("y", "x")

    def terms(self):
        out = [(c, e, 0) for c, e in self.base.terms]
        if self.tail is not None:
            out.append((self.tail.coeff, self.tail.exponent, self.tail.logpow))
        return out

    def offset_series(self) -> LogSeries:
        """Dependent-variable offset as a function of ``s``."""
        d = {}
        for c, e, w in self.terms():
            d[(e, w)] = d.get((e, w), 0) + c
        return LogSeries.make(d)

    def with_side(self, side: int) -> "CurveSpec":
        return CurveSpec(self.orientation, self.base, self.tail, side, self.anchor)

    def with_anchor(self, anchor: Point) -> "CurveSpec":
        return CurveSpec(self.orientation, self.base, self.tail, self.side, anchor)

    def point_at(self, s: float):
        """Float coordinates of the curve point at parameter ``s``."""
        dep = self.offset_series().eval_float(s) if self.terms() else 0.0
        ind = self.side * s
        x0, y0 = float(self.anchor.x0), float(self.anchor.y0)
        if self.orientation == "y_of_x":
            return x0 + ind, y0 + dep
        return x0 + dep, y0 + ind

    def text(self) -> str:
        return format_curve(self)

    def __str__(self):
        return self.text()


# --------------------------------------------------------------------------
# curve text


def parse_curve(text: str, side: int = 1, anchor: Point = ORIGIN) -> CurveSpec:
    """Parse ``y = ...`` or ``x = ...`` (offsets from ``anchor``)."""
    stripped = text.lstrip()
    lead = len(text) - len(stripped)
    if not stripped or stripped[0] not in "xy":
        raise CurveSyntaxError("curve must start with 'y =' or 'x ='", lead + 1)
    dep = stripped[0]
    rest = stripped[1:]
    eq = rest.find("=")
    if eq < 0 or rest[:eq].strip():
        raise CurveSyntaxError("expected '='", lead + 2)
    body_offset = lead + 1 + eq + 1
    var = "x" if dep == "y" else "y"
    try:
        terms = parse_terms(rest[eq + 1:], var, side, body_offset)
    except TermSyntaxError as exc:
        raise CurveSyntaxError(str(exc).rsplit(" at column", 1)[0], exc.column) from None
    terms.sort(key=lambda t: (exp_key(t[1]), -t[2]))
    base, tail = [], None
    for k, (c, e, w) in enumerate(terms):
        special = w != 0 or isinstance(e, Exponent)
        if special:
            if k != len(terms) - 1:
                raise CurveSyntaxError("only the last term may carry a log or irrational exponent", body_offset + 1)
            kind = {0: "power", -1: "power_over_log", 1: "power_times_log"}[w]
            tail = Tail(kind, e, c)
        else:
            base.append((c, e))
    merged: dict = {}
    for c, e in base:
        merged[e] = merged.get(e, 0) + c
    try:
        gs = GenSeries.from_dict(merged)
        return CurveSpec("y_of_x" if dep == "y" else "x_of_y", gs, tail, side, anchor)
    except ValueError as exc:
        raise CurveSyntaxError(str(exc), body_offset + 1) from None


def format_curve(c: CurveSpec, with_side: bool = False) -> str:
    dep, var = ("y", "x") if c.orientation == "y_of_x" else ("x", "y")
    body = format_terms(c.terms(), var, c.side) if c.terms() else "0"
    out = f"{dep}={body}"
    if with_side:
        out += f" (side {'+' if c.side > 0 else '-'})"
    return out


# --------------------------------------------------------------------------
# substitution


def _oriented(P: BiPoly, c: CurveSpec) -> BiPoly:
    """Polynomial in (independent, dependent) with the side folded in."""
    Q = P if c.orientation == "y_of_x" else P.swap()
    return Q if c.side > 0 else Q.reflect_x()


def _max_exponent(Q: BiPoly, Y: LogSeries):
    top = max((k[0] for k in Y.terms), key=exp_key, default=Fraction(0))
    best = Fraction(0)
    for i, j in Q.terms:
        best = exp_max(best, top * j + i)
    return best


def substitute_poly(P: BiPoly, c: CurveSpec, trunc) -> LogSeries:
    """Expansion of ``P`` along the curve, complete up to exponent ``trunc``.

    ``P`` is taken in anchor offsets (already translated).  The result is
    exact (``bound is None``) when ``trunc`` reaches every exponent the
    substitution can produce.
    """
    Q = _oriented(P, c)
    Y = c.offset_series()
    exact = compare_exponents(trunc, _max_exponent(Q, Y)) >= 0
    bound = None if exact else trunc
    dy = Q.deg_y()
    pows = [LogSeries.constant(1)]
    for _ in range(dy):
        pows.append(log_mul(pows[-1], Y, bound))
    out = LogSeries({}, bound)
    acc: dict = {}
    for (i, j), coef in Q.terms.items():
        for (e, w), v in pows[j].terms.items():
            e2 = e + i
            if bound is not None and compare_exponents(e2, bound) > 0:
                continue
            acc[(e2, w)] = acc.get((e2, w), 0) + coef * v
    return log_add(out, LogSeries.make(acc, bound), bound)


def _initial_trunc(P: BiPoly, c: CurveSpec):
    t = Fraction(2 * max(P.total_degree(), 1))
    last = max((e for _, e, _ in c.terms()), key=exp_key, default=Fraction(0))
    cand = last + 2
    return exp_max(t, cand)


def _resolve(P: BiPoly, c: CurveSpec, need_nonconstant: bool = False):
    """Adaptive truncation until the leading term (non-constant if asked) shows."""
    Q = _oriented(P, c)
    top = _max_exponent(Q, c.offset_series())
    trunc = _initial_trunc(P, c)
    while True:
        ser = substitute_poly(P, c, trunc)
        body = ser.without_constant() if need_nonconstant else ser
        if body.terms or ser.bound is None:
            return ser
        trunc = exp_max(trunc * 2, trunc + 1)
        if compare_exponents(trunc, top) > 0:
            trunc = top


def leading_nonconstant(P: BiPoly, c: CurveSpec):
    """``(P(0,0), (u, logpow, coeff))`` with ``P ~ P(0,0) + coeff*s^u*ln^w``.

    The second item is ``None`` when ``P`` is constant along the curve.
    """
    ser = _resolve(P, c, need_nonconstant=True)
    return ser.constant_term(), log_leading(ser.without_constant())


# --------------------------------------------------------------------------
# limits along one curve


@dataclass(frozen=True)
class LimitResult:
    kind: str  # finite | plus_infinity | minus_infinity | divergent
    value: object = None
    witnesses: tuple = ()
    exact: bool = True

    @classmethod
    def finite(cls, v, exact=True):
        return cls("finite", v, (), exact)

    @classmethod
    def infinite(cls, sgn: int):
        return cls("plus_infinity" if sgn > 0 else "minus_infinity")

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_infinite(self) -> bool:
        return self.kind in ("plus_infinity", "minus_infinity")

    def sort_key(self):
        if self.kind == "minus_infinity":
            return -math.inf
        if self.kind == "plus_infinity":
            return math.inf
        return float(self.value)

    def same_as(self, other: "LimitResult") -> bool:
        if self.kind != other.kind:
            return False
        return self.kind != "finite" or self.value == other.value

    def __str__(self):
        if self.kind == "finite":
            from .genseries import scalar_text

            return scalar_text(self.value)
        return {"plus_infinity": "+inf", "minus_infinity": "-inf"}.get(self.kind, "divergent")


def _log_sign(w: int) -> int:
    """Sign of ``(ln s)**w`` for small ``s``."""
    return -1 if w % 2 else 1


def ratio_limit(num: LogSeries, den: LogSeries) -> LimitResult:
    """Limit of ``num/den`` as ``s -> 0+`` from resolved leading terms."""
    ln = log_leading(num)
    ld = log_leading(den)
    if ld is None:
        if ln is None:
            raise ValueError("numerator and denominator both vanish along the curve")
        return LimitResult.infinite(sign(ln[2]) * _log_sign(ln[1]))
    if ln is None:
        return LimitResult.finite(Fraction(0))
    en, wn, cn = ln
    ed, wd, cd = ld
    c = compare_exponents(en, ed)
    if c == 0:
        c = wd - wn  # larger log power dominates
    if c > 0:
        return LimitResult.finite(Fraction(0))
    if c < 0:
        return LimitResult.infinite(sign(cn) * sign(cd) * _log_sign(wn - wd))
    return LimitResult.finite(cn / cd)


def limit_along_curve(f: RationalFn, c: CurveSpec) -> LimitResult:
    """Limit of ``f`` along ``c`` as the curve parameter tends to ``0+``."""
    g = translate(f, c.anchor)
    num = _resolve(g.num, c)
    den = _resolve(g.den, c)
    return ratio_limit(num, den)


# --------------------------------------------------------------------------
# expansion around a base curve


def expand_around(P: BiPoly, base: GenSeries, side: int = 1, orientation: str = "y_of_x") -> dict:
    """``P(side*s, base(s) + w) = sum_k N_k(s) w**k`` as ``{k: LogSeries}``.

    ``P`` is in anchor offsets; all series are exact.
    """
    c = CurveSpec(orientation, base, None, side)
    Q = _oriented(P, c)
    Y = LogSeries.from_genseries(base)
    dy = Q.deg_y()
    pows = [LogSeries.constant(1)]
    for _ in range(dy):
        pows.append(log_mul(pows[-1], Y))
    acc: dict[int, dict] = {}
    for (i, j), coef in Q.terms.items():
        for k in range(j + 1):
            w = coef * comb(j, k)
            d = acc.setdefault(k, {})
            for (e, lp), v in pows[j - k].terms.items():
                key = (e + i, lp)
                d[key] = d.get(key, 0) + w * v
    out = {}
    for k, d in acc.items():
        ser = LogSeries.make(d)
        if ser.terms:
            out[k] = ser
    return out
