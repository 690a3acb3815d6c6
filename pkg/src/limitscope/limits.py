"""Limiting-value intervals, limit existence and point classification.

The interval ``D_f`` at a point is computed from a finite candidate set.
For small ``r`` the extremes of ``f`` on the square ``max(|x|,|y|) = r``
sit at critical points of ``y -> f(+-r, y)`` (zeros of
``H1 = p_y q - p q_y``), at critical points of ``x -> f(x, +-r)`` (zeros of
``H2 = p_x q - p q_x``) or at the corners ``y = +-x``.  So the limits of
``f`` along the real branches of ``H1`` and ``H2`` through the point, along
the two diagonals and along the axes, together with the iterated-limit
point value, contain both endpoints of ``D_f``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key, lru_cache

from .asympt import CurveSpec, LimitResult, expand_around, limit_along_curve, ratio_limit
from .exactalg import compare_exponents, sign
from .genseries import GenSeries, LazySeries, LogSeries
from .polyfun import (
    BiPoly,
    ORIGIN,
    Point,
    RationalFn,
    divides,
    irreducible_factors,
    point_value,
    translate,
)
from .puiseux import Branch, max_terms_default, real_branches

__all__ = [
    "ValueInterval", "ExistenceVerdict", "SequenceResult", "SignCertificate",
    "Candidate", "UnboundedPoint", "Undecided",
    "limiting_value_interval", "limit_exists", "classify_point",
    "sequence_character", "certify_denominator_sign", "branch_limit",
]


class UnboundedPoint(ValueError):
    """The function is unbounded near the point; ``D_f`` is not defined."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class Undecided(RuntimeError):
    """An expansion or subdivision cap was reached before a decision."""


@dataclass(frozen=True)
class Candidate:
    source: str  # H1 | H2 | axis | diagonal | point_value
    curve: CurveSpec | None
    result: LimitResult
    witness: CurveSpec | None = None


@dataclass(frozen=True)
class ValueInterval:
    lo: object
    hi: object
    lo_witness: CurveSpec | None
    hi_witness: CurveSpec | None
    candidates: tuple = ()
    exact: bool = True

    @property
    def degenerate(self) -> bool:
        return self.lo == self.hi


@dataclass(frozen=True)
class ExistenceVerdict:
    exists: bool
    value: object = None
    counter_witnesses: tuple = ()  # ((CurveSpec, LimitResult), ...)


def _cmp(a, b) -> int:
    return sign(a - b)


_scalar_key = cmp_to_key(_cmp)
exp_key = cmp_to_key(compare_exponents)


def _mk_curve(orientation, series, side, anchor=ORIGIN) -> CurveSpec:
    return CurveSpec(orientation, series, None, side, anchor)


# --------------------------------------------------------------------------
# branch limits


def _order(ser: LogSeries):
    return min((k[0] for k in ser.terms), key=exp_key, default=None)


def _dominated(expansion: dict, tau) -> bool:
    """The ``w**0`` term decides the leading behaviour for any tail of order >= tau."""
    n0 = expansion.get(0)
    if n0 is None:
        return False
    r0 = _order(n0)
    if tau is None:
        return True
    for k, ser in expansion.items():
        if k == 0:
            continue
        if compare_exponents(_order(ser) + tau * k, r0) <= 0:
            return False
    return True


def _numeric_branch_limit(g: RationalFn, b: Branch, orientation: str) -> LimitResult:
    # degree-capped coefficient: evaluate along the float continuation
    c, gamma = b.numeric_next
    vals = []
    for s in (1e-6, 1e-7):
        dep = b.series.eval_float(s) + c * s ** float(gamma)
        ind = b.side * s
        x, y = (ind, dep) if orientation == "y_of_x" else (dep, ind)
        vals.append(g.eval_float(x, y))
    return LimitResult.finite(Fraction(vals[-1]).limit_denominator(10**12), exact=False)


def branch_limit(g: RationalFn, b: Branch, orientation: str, vanishes_on_num: bool = False,
                 max_extend: int | None = None):
    """Limit of ``g`` along the true branch ``b`` and a minimal witness.

    Returns ``(LimitResult, witness CurveSpec, possibly extended branch)``.
    The truncation ``Phi_N`` is extended until, for numerator and
    denominator, the ``w**0`` term strictly dominates every term that a tail
    of order ``tail_order`` could add; then the limit along ``Phi_N`` equals
    the limit along the branch.
    """
    if b.numeric_only:
        return _numeric_branch_limit(g, b, orientation), None, b
    max_extend = max_terms_default() if max_extend is None else max_extend
    if vanishes_on_num:
        target = LimitResult.finite(Fraction(0))
    else:
        for _ in range(max_extend):
            if b.complete:
                break
            ep = expand_around(g.num, b.series, b.side, orientation)
            eq = expand_around(g.den, b.series, b.side, orientation)
            if _dominated(ep, b.tail_order) and _dominated(eq, b.tail_order):
                break
            if not b.certified:
                raise Undecided("branch not certified within the term cap")
            b = b.extend(1)
        else:
            raise Undecided("branch limit not resolved within the term cap")
        target = limit_along_curve(g, _mk_curve(orientation, b.series, b.side))
    for _ in range(max_extend + 1):
        for n in range(len(b.series) + 1):
            c = _mk_curve(orientation, b.series.truncate(n), b.side)
            if limit_along_curve(g, c).same_as(target):
                return target, c, b
        if b.complete or not b.certified:
            break
        b = b.extend(1)
    raise Undecided("no witness truncation found within the term cap")


# --------------------------------------------------------------------------
# candidate set


def _critical(g: RationalFn):
    p, q = g.num, g.den
    h1 = p.diff_y() * q - p * q.diff_y()
    h2 = p.diff_x() * q - p * q.diff_x()
    return h1, h2


def _factor_list(h: BiPoly):
    if h.is_rational():
        return [f for f, _ in irreducible_factors(h)]
    return [h]


def _curve_branches(h: BiPoly, orientation: str, side: int):
    """Branches of ``h = 0`` as graphs in the given orientation."""
    hh = h if orientation == "y_of_x" else h.swap()
    return real_branches(hh, side, squarefree=hh.is_rational())


def _axis_curves():
    empty = GenSeries()
    for side in (1, -1):
        yield "axis", _mk_curve("y_of_x", empty, side)
        yield "axis", _mk_curve("x_of_y", empty, side)


def _diagonal_curves():
    for side in (1, -1):
        for slope in (1, -1):
            yield "diagonal", _mk_curve("y_of_x", GenSeries(((Fraction(slope * side), Fraction(1)),)), side)


def _steep(b: Branch) -> bool:
    return bool(b.series.terms) and compare_exponents(b.series.terms[0][1], 1) < 0


def _candidates(g: RationalFn) -> list[Candidate]:
    out: list[Candidate] = []
    h1, h2 = _critical(g)
    for label, h, orientation in (("H1", h1, "y_of_x"), ("H2", h2, "x_of_y")):
        if h.is_zero():
            continue
        for fac in _factor_list(h):
            hh = fac if orientation == "y_of_x" else fac.swap()
            if hh.constant_term() != 0:
                continue
            on_num = fac.is_rational() and g.num.is_rational() and not g.num.is_zero() and divides(fac, g.num)
            for side in (1, -1):
                for b in real_branches(hh, side, squarefree=False if fac.is_rational() else None):
                    if _steep(b):
                        continue  # leaves the square through the other pair of edges
                    res, wit, b2 = branch_limit(g, b, orientation, on_num)
                    curve = _mk_curve(orientation, b2.series, side)
                    out.append(Candidate(label, curve, res, wit))
    for label, c in list(_axis_curves()) + list(_diagonal_curves()):
        res = limit_along_curve(g, c)
        out.append(Candidate(label, c, res, c))
    pv = point_value(g)
    if pv is not None:
        out.append(Candidate("point_value", None, LimitResult.finite(pv)))
    return out


def _witness_rank(c: Candidate):
    w = c.witness
    n = len(w.terms()) if w is not None else 99
    return n


def _with_anchor(c: CurveSpec | None, pt: Point):
    return None if c is None else c.with_anchor(pt)


@lru_cache(maxsize=256)
def _analyze(f: RationalFn, pt: Point):
    """Classification plus interval (bounded) or infinite witness (unbounded)."""
    if f.den(pt.x0, pt.y0) != 0:
        v = f(pt.x0, pt.y0)
        return "continuous", ValueInterval(v, v, None, None, (), True), None
    g = translate(f, pt)
    wit = _q_branch_witness(g)
    if wit is not None:
        curve, res = wit
        return "unbounded", None, (curve.with_anchor(pt), res)
    cands = _candidates(g)
    for c in cands:
        if c.result.is_infinite:
            return "unbounded", None, (_with_anchor(c.witness or c.curve, pt), c.result)
    finite = [c for c in cands if c.result.is_finite]
    exact = all(c.result.exact for c in finite)
    lo = min((c.result.value for c in finite), key=_scalar_key)
    hi = max((c.result.value for c in finite), key=_scalar_key)

    def pick(v):
        hits = [c for c in finite if c.witness is not None and _cmp(c.result.value, v) == 0]
        hits.sort(key=_witness_rank)
        return _with_anchor(hits[0].witness, pt) if hits else None

    cands = tuple(Candidate(c.source, _with_anchor(c.curve, pt), c.result, _with_anchor(c.witness, pt)) for c in cands)
    iv = ValueInterval(lo, hi, pick(lo), pick(hi), cands, exact)
    pv = point_value(g)
    kind = "continuous" if (_cmp(lo, hi) == 0 and pv is not None and _cmp(pv, lo) == 0) else "bounded_discontinuity"
    return kind, iv, None


def _q_branch_witness(g: RationalFn):
    """A curve with infinite limit when the denominator has a real zero germ."""
    q = g.den
    if q.constant_term() != 0:
        return None
    for orientation in ("y_of_x", "x_of_y"):
        qq = q if orientation == "y_of_x" else q.swap()
        for side in (1, -1):
            for b in real_branches(qq, side):
                if b.numeric_only or _steep(b):
                    continue
                last = b.series.last_exponent()
                start = int(Fraction(last)) + 1 if last is not None else 1
                start = max(start, 2)
                for e in range(start, start + 24):
                    base = GenSeries(b.series.terms + ((Fraction(1), Fraction(e)),))
                    c = _mk_curve(orientation, base, side)
                    res = limit_along_curve(g, c)
                    if res.is_infinite:
                        return c, res
    return None


def classify_point(f: RationalFn, pt: Point = ORIGIN) -> str:
    """``continuous``, ``bounded_discontinuity`` or ``unbounded``."""
    return _analyze(f, pt)[0]


def limiting_value_interval(f: RationalFn, pt: Point = ORIGIN) -> ValueInterval:
    """Closed interval of limiting values of ``f`` at ``pt``."""
    kind, iv, wit = _analyze(f, pt)
    if kind == "unbounded":
        raise UnboundedPoint("f is unbounded near the point; use classify_point", wit)
    return iv


def limit_exists(f: RationalFn, pt: Point = ORIGIN) -> ExistenceVerdict:
    kind, iv, wit = _analyze(f, pt)
    if kind == "unbounded":
        return ExistenceVerdict(False, None, (wit,))
    if _cmp(iv.lo, iv.hi) == 0:
        return ExistenceVerdict(True, iv.lo, ())
    lo_res = LimitResult.finite(iv.lo, iv.exact)
    hi_res = LimitResult.finite(iv.hi, iv.exact)
    return ExistenceVerdict(False, None, ((iv.hi_witness, hi_res), (iv.lo_witness, lo_res)))


# --------------------------------------------------------------------------
# sequences of partial-sum curves


@dataclass(frozen=True)
class SequenceResult:
    result: LimitResult | None
    characters: tuple  # chi_1, chi_2, ...
    certified_at: int | None
    confirmed_at: int | None
    status: str  # certified | finite_series | undecided


def _lead_with_tail(expansion: dict, phi_next, e_next):
    """Leading ``(exp, coeff)`` of ``sum_k N_k * (phi s^e)^k`` if the minimum is unique."""
    vals = []
    for k, ser in expansion.items():
        e, w, c = min(((e, w, c) for (e, w), c in ser.terms.items()), key=lambda t: exp_key(t[0]))
        vals.append((e + e_next * k, k, c * phi_next**k))
    vals.sort(key=lambda t: exp_key(t[0]))
    if len(vals) > 1 and compare_exponents(vals[0][0], vals[1][0]) == 0:
        return None
    return vals[0][0], vals[0][2]


def sequence_character(
    f: RationalFn,
    pt: Point,
    series,
    max_terms: int = 32,
    side: int = 1,
    orientation: str = "y_of_x",
) -> SequenceResult:
    """Character of ``f`` along the partial sums of a type (ii) series.

    ``series`` is a :class:`LazySeries` or a callable ``k -> (coeff, exp)``.
    At step ``N`` the expansion ``f(side*s, Phi_N + w)`` is certified when,
    for numerator and denominator, the exponent ``r_k + k*e_{N+1}`` has a
    unique minimiser; every later partial sum (and the full series) then
    has the same character.
    """
    if not isinstance(series, LazySeries):
        series = LazySeries(series)
    g = translate(f, pt)
    chis = []

    def curve(n):
        return CurveSpec(orientation, series.partial(n), None, side)

    if series.term(1) is None:
        res = limit_along_curve(g, curve(0))
        return SequenceResult(res, (res,), 0, 0, "finite_series")
    certified = None
    for n in range(1, max_terms + 1):
        chi = limit_along_curve(g, curve(n))
        chis.append(chi)
        if certified is not None:
            if chi.same_as(certified[1]):
                return SequenceResult(chi, tuple(chis), certified[0], n, "certified")
            raise AssertionError("certificate contradicted by the next character")
        nxt = series.term(n + 1)
        if nxt is None:
            return SequenceResult(chi, tuple(chis), n, n, "finite_series")
        phi, e_next = nxt
        base = series.partial(n)
        lp = _lead_with_tail(expand_around(g.num, base, side, orientation), phi, e_next)
        lq = _lead_with_tail(expand_around(g.den, base, side, orientation), phi, e_next)
        if lp is not None and lq is not None:
            num = LogSeries.make({(lp[0], 0): lp[1]})
            den = LogSeries.make({(lq[0], 0): lq[1]})
            certified = (n, ratio_limit(num, den))
    return SequenceResult(None, tuple(chis), None, None, "undecided")


# --------------------------------------------------------------------------
# sign certification on boxes


@dataclass(frozen=True)
class SignCertificate:
    kind: str  # positive | negative | indefinite | undecided
    witnesses: tuple = ()
    depth: int = 0


def _ipow(lo, hi, n):
    if n == 0:
        return Fraction(1), Fraction(1)
    a, b = lo**n, hi**n
    if n % 2 == 0:
        if lo <= 0 <= hi:
            return Fraction(0), max(a, b)
        return min(a, b), max(a, b)
    return a, b


def _imul(a, b):
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(ps), max(ps)


def _interval_eval(q: BiPoly, box):
    xlo, xhi, ylo, yhi = box
    lo = hi = Fraction(0)
    for (i, j), c in q.terms.items():
        m = _imul(_ipow(xlo, xhi, i), _ipow(ylo, yhi, j))
        t = (c * m[0], c * m[1]) if c > 0 else (c * m[1], c * m[0])
        lo += t[0]
        hi += t[1]
    return lo, hi


def _samples(box):
    xlo, xhi, ylo, yhi = box
    xm, ym = (xlo + xhi) / 2, (ylo + yhi) / 2
    return [
        (xm, ym), (xhi, ym), (xm, yhi), (xlo, ym), (xm, ylo),
        (xlo, ylo), (xhi, ylo), (xhi, yhi), (xlo, yhi),
    ]


def certify_denominator_sign(q: BiPoly, box, max_depth: int | None = None) -> SignCertificate:
    """Certify a strict sign of ``q`` on a rational box by subdivision."""
    import os

    if max_depth is None:
        max_depth = int(os.environ.get("LIMITSCOPE_MAX_DEPTH", "12"))
    if not q.is_rational():
        raise ValueError("sign certification needs rational coefficients")
    box = tuple(Fraction(v) for v in box)
    pos = neg = None
    cells = [(box, 0)]
    undecided_depth = None
    seen_pos_cell = seen_neg_cell = False
    while cells:
        nxt = []
        for cell, depth in cells:
            lo, hi = _interval_eval(q, cell)
            if lo > 0:
                seen_pos_cell = True
                if pos is None:
                    pos = _samples(cell)[0]
            elif hi < 0:
                seen_neg_cell = True
                if neg is None:
                    neg = _samples(cell)[0]
            else:
                for pt in _samples(cell):
                    v = q(*pt)
                    if v > 0 and pos is None:
                        pos = pt
                    elif v < 0 and neg is None:
                        neg = pt
                if pos is not None and neg is not None:
                    first = (pos, neg) if _found_first(pos, neg, cell) else (neg, pos)
                    return SignCertificate("indefinite", first, depth)
                if depth >= max_depth:
                    undecided_depth = depth
                    continue
                xlo, xhi, ylo, yhi = cell
                xm, ym = (xlo + xhi) / 2, (ylo + yhi) / 2
                for sub in ((xlo, xm, ylo, ym), (xm, xhi, ylo, ym), (xlo, xm, ym, yhi), (xm, xhi, ym, yhi)):
                    nxt.append((sub, depth + 1))
            if pos is not None and neg is not None:
                return SignCertificate("indefinite", (pos, neg), depth)
        cells = nxt
    if undecided_depth is not None:
        return SignCertificate("undecided", (), undecided_depth)
    if seen_pos_cell and not seen_neg_cell:
        return SignCertificate("positive", (), 0)
    if seen_neg_cell and not seen_pos_cell:
        return SignCertificate("negative", (), 0)
    return SignCertificate("undecided", (), max_depth)


def _found_first(pos, neg, cell) -> bool:
    order = _samples(cell)
    ip = order.index(pos) if pos in order else -1
    ineg = order.index(neg) if neg in order else -1
    return ip <= ineg
