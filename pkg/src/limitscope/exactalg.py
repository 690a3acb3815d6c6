"""Exact scalars and exponents.

Scalars are ``Fraction`` or :class:`AlgebraicNumber`.  An algebraic number is
an element of a real number field ``Q(theta)`` where ``theta`` is pinned down
by its minimal polynomial and an isolating interval; arithmetic inside one
field is polynomial arithmetic modulo the minimal polynomial, and values that
turn out rational are always returned as ``Fraction``.  Elements of different
fields meet in a compositum built from a primitive element.

Exponents are ``Fraction`` or :class:`Exponent` (``a + b*eps`` for a single
declared irrational ``eps``).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import total_ordering
from typing import Union

from . import upoly

__all__ = [
    "NumberField", "AlgebraicNumber", "Exponent", "Scalar",
    "UnsupportedConfiguration", "FieldDegreeExceeded",
    "as_scalar", "sign", "to_float", "sqrt_rational", "root_of",
    "algebraic_arith", "compositum", "lift", "real_roots_over_field",
    "field_of", "common_field", "compare_exponents", "make_exponent",
    "decimal_string", "minimal_polynomial", "isolating_interval",
    "DEFAULT_DEGREE_CAP",
]

DEFAULT_DEGREE_CAP = 8


class UnsupportedConfiguration(ValueError):
    """Raised for exponent comparisons across distinct irrational tags."""


class FieldDegreeExceeded(ArithmeticError):
    """A required number field exceeds the configured degree cap."""


# --------------------------------------------------------------------------
# Number fields


class NumberField:
    """``Q(theta)`` for a real algebraic ``theta``.

    Instances are interned: constructing a field for a root that already has
    one returns the existing object, so fields compare by identity.
    """

    _registry: dict[tuple, list["NumberField"]] = {}
    _lock = threading.Lock()

    def __init__(self, minpoly, lo, hi):
        self.minpoly = tuple(minpoly)
        self.degree = len(self.minpoly) - 1
        self._iv = (Fraction(lo), Fraction(hi))
        self._lo_sign = upoly.evaluate(self.minpoly, self._iv[0]) > 0

    @classmethod
    def get(cls, minpoly, lo, hi) -> "NumberField":
        minpoly = tuple(upoly.monic([Fraction(c) for c in minpoly]))
        if len(minpoly) < 3:
            raise ValueError("number field generator must have degree >= 2")
        lo, hi = Fraction(lo), Fraction(hi)
        with cls._lock:
            bucket = cls._registry.setdefault(minpoly, [])
            for f in bucket:
                a = max(lo, f._iv[0])
                b = min(hi, f._iv[1])
                if a < b and upoly.count_roots(minpoly, a, b) == 1:
                    return f
            field = cls(minpoly, lo, hi)
            bucket.append(field)
            return field

    def interval(self, width=None):
        """Isolating interval of the generator, refined below ``width``."""
        lo, hi = self._iv
        if width is not None and hi - lo > width:
            flo_pos = self._lo_sign
            while hi - lo > width:
                mid = (lo + hi) / 2
                v = upoly.evaluate(self.minpoly, mid)
                if (v > 0) == flo_pos:
                    lo = mid
                else:
                    hi = mid
            self._iv = (lo, hi)
        return lo, hi

    @property
    def generator(self) -> "AlgebraicNumber":
        coords = [Fraction(0)] * self.degree
        coords[1] = Fraction(1)
        return AlgebraicNumber(self, tuple(coords))

    def element(self, coords) -> "Scalar":
        return _make(self, coords)

    def __repr__(self):
        lo, hi = self._iv
        return f"NumberField({upoly.format_poly(list(self.minpoly), 't')}, ({float(lo):.6g}, {float(hi):.6g}))"


def _reduce_mod(coeffs, m):
    d = len(m) - 1
    c = list(coeffs)
    for k in range(len(c) - 1, d - 1, -1):
        t = c[k]
        if t != 0:
            for i in range(d):
                c[k - d + i] -= t * m[i]
        c[k] = Fraction(0)
    c = c[:d] + [Fraction(0)] * (d - len(c[:d]))
    return c


def _make(field: NumberField, coords) -> "Scalar":
    coords = list(coords)
    if len(coords) != field.degree:
        coords = _reduce_mod(coords, field.minpoly)
    if all(c == 0 for c in coords[1:]):
        return Fraction(coords[0]) if coords else Fraction(0)
    return AlgebraicNumber(field, tuple(Fraction(c) for c in coords))


def _interval_poly(coeffs, lo, hi):
    """Interval Horner evaluation of a rational polynomial on [lo, hi]."""
    alo = ahi = Fraction(0)
    for c in reversed(coeffs):
        cands = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo = min(cands) + c
        ahi = max(cands) + c
    return alo, ahi


@total_ordering
class AlgebraicNumber:
    """An irrational element of a :class:`NumberField`."""

    __slots__ = ("field", "coords", "_minpoly")

    def __init__(self, field: NumberField, coords: tuple):
        self.field = field
        self.coords = coords
        self._minpoly = None

    # ---- arithmetic -------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, AlgebraicNumber):
            if other.field is self.field:
                return self.field, self.coords, other.coords
            return None
        if isinstance(other, (int, Fraction)):
            c = [Fraction(0)] * self.field.degree
            c[0] = Fraction(other)
            return self.field, self.coords, tuple(c)
        return NotImplemented

    def __add__(self, other):
        co = self._coerce(other)
        if co is NotImplemented:
            return NotImplemented
        if co is None:
            return algebraic_arith(self, other, "+")
        f, a, b = co
        return _make(f, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicNumber(self.field, tuple(-c for c in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Fraction(0)
            return AlgebraicNumber(self.field, tuple(c * other for c in self.coords))
        co = self._coerce(other)
        if co is NotImplemented:
            return NotImplemented
        if co is None:
            return algebraic_arith(self, other, "*")
        f, a, b = co
        return _make(f, _reduce_mod(upoly.mul(list(a), list(b)) or [Fraction(0)], f.minpoly))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        m = list(self.field.minpoly)
        a = upoly.trim(list(self.coords))
        # extended Euclid: find s with s*a = 1 mod m
        r0, r1 = m, a
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = upoly.divmod_poly(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, upoly.sub(s0, upoly.mul(q, s1))
        if not r1:
            raise ZeroDivisionError("non-invertible element (minimal polynomial not irreducible?)")
        inv = upoly.scale(s1, 1 / r1[0])
        return _make(self.field, _reduce_mod(inv or [Fraction(0)], self.field.minpoly))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return AlgebraicNumber(self.field, tuple(c / other for c in self.coords))
        if isinstance(other, AlgebraicNumber):
            if other.field is self.field:
                return self * other.inverse()
            return algebraic_arith(self, other, "/")
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result: Scalar = Fraction(1)
        base: Scalar = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __pos__(self):
        return self

    # ---- order ---------------------------------------------------------
    def sign(self) -> int:
        # nonzero by construction, so refinement terminates
        coords = list(self.coords)
        lo, hi = self.field.interval()
        w = hi - lo
        while True:
            a, b = _interval_poly(coords, lo, hi)
            if a > 0:
                return 1
            if b < 0:
                return -1
            w = w / 4
            lo, hi = self.field.interval(w)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return False
        if isinstance(other, AlgebraicNumber):
            if other.field is self.field:
                return self.coords == other.coords
            return sign(self - other) == 0
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.minpoly()))

    def __lt__(self, other):
        if isinstance(other, (int, Fraction, AlgebraicNumber)):
            return sign(self - other) < 0
        return NotImplemented

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        lo, hi = self.enclosure(Fraction(1, 10**18) * (1 + abs(self._rough())))
        return float((lo + hi) / 2)

    def _rough(self) -> Fraction:
        lo, hi = self.field.interval()
        a, b = _interval_poly(list(self.coords), lo, hi)
        return max(abs(a), abs(b))

    def enclosure(self, width) -> tuple[Fraction, Fraction]:
        """Rational interval containing the value, narrower than ``width``."""
        width = Fraction(width)
        lo, hi = self.field.interval()
        w = hi - lo
        while True:
            a, b = _interval_poly(list(self.coords), lo, hi)
            if b - a <= width:
                return a, b
            w = w / 4
            lo, hi = self.field.interval(w)

    def minpoly(self) -> list[Fraction]:
        if self._minpoly is None:
            self._minpoly = _element_minpoly(self)
        return list(self._minpoly)

    def __repr__(self):
        return f"AlgebraicNumber({decimal_string(self, 15)}, minpoly={upoly.format_poly(self.minpoly())})"


Scalar = Union[Fraction, AlgebraicNumber]


def as_scalar(x) -> Scalar:
    if isinstance(x, AlgebraicNumber):
        return x
    return Fraction(x)


def sign(x) -> int:
    if isinstance(x, AlgebraicNumber):
        return x.sign()
    return (x > 0) - (x < 0)


def to_float(x) -> float:
    return float(x)


def field_of(x):
    return x.field if isinstance(x, AlgebraicNumber) else None


def _element_minpoly(a: AlgebraicNumber) -> list[Fraction]:
    m = list(a.field.minpoly)
    c = upoly.trim(list(a.coords))
    d = a.field.degree
    # charpoly(z) = Res_t(m(t), z - c(t)), a power of the minimal polynomial
    xs, ys = [], []
    for k in range(d + 1):
        z = Fraction(k)
        g = upoly.sub([z], c)
        xs.append(z)
        ys.append(upoly.resultant(m, g, d, d - 1))
    char = upoly.interpolate(xs, ys)
    return upoly.squarefree_part(char)


def minimal_polynomial(x) -> list[Fraction]:
    """Monic minimal polynomial over ``Q``."""
    if isinstance(x, AlgebraicNumber):
        return x.minpoly()
    return [-Fraction(x), Fraction(1)]


def isolating_interval(x, width: Fraction = Fraction(1, 2**40)) -> tuple[Fraction, Fraction]:
    """Rational interval containing ``x`` and no other root of its minpoly.

    Depends only on the value of ``x``, not on how far it has been refined.
    """
    if not isinstance(x, AlgebraicNumber):
        return Fraction(x), Fraction(x)
    m = x.minpoly()
    for lo, hi in upoly.isolate_real_roots(m):
        if sign(x - lo) > 0 and sign(x - hi) < 0:
            return upoly.refine_root(m, lo, hi, width)
    raise ArithmeticError("value is not a real root of its minimal polynomial")


def decimal_string(x, digits: int = 12) -> str:
    """Decimal rendering with ``digits`` significant digits."""
    if not isinstance(x, AlgebraicNumber):
        x = Fraction(x)
        with localcontext() as ctx:
            ctx.prec = digits
            return _fmt_decimal(+(Decimal(x.numerator) / Decimal(x.denominator)), digits)
    width = Fraction(1, 10 ** (digits + 2))
    while True:
        lo, hi = x.enclosure(width)
        with localcontext() as ctx:
            ctx.prec = digits
            a = +(Decimal(lo.numerator) / Decimal(lo.denominator))
            b = +(Decimal(hi.numerator) / Decimal(hi.denominator))
        if a == b:
            return _fmt_decimal(a, digits)
        width /= 1024


def _fmt_decimal(d: Decimal, digits: int) -> str:
    if d == 0:
        return "0." + "0" * (digits - 1)
    s = format(d, f".{digits}g")
    if "e" in s or "E" in s:
        return s
    if "." not in s:
        s += "."
    sig = len(s.replace("-", "").replace(".", "").lstrip("0"))
    return s + "0" * max(0, digits - sig)


# --------------------------------------------------------------------------
# Constructors


def root_of(poly, lo, hi) -> Scalar:
    """The unique real root of ``poly`` in the open interval ``(lo, hi)``."""
    poly = [Fraction(c) for c in poly]
    lo, hi = Fraction(lo), Fraction(hi)
    for fac, _ in upoly.factor_rational(poly):
        n = upoly.count_roots(fac, lo, hi)
        if upoly.evaluate(fac, hi) == 0:
            n -= 1
        if n == 1:
            if len(fac) == 2:
                return -fac[0] / fac[1]
            a, b = lo, hi
            if upoly.evaluate(fac, a) == 0 or upoly.evaluate(fac, b) == 0:
                roots = upoly.isolate_real_roots(fac)
                a, b = next(iv for iv in roots if lo <= iv[0] and iv[1] <= hi)
            field = NumberField.get(fac, a, b)
            return field.generator
    raise ValueError("interval does not isolate a real root")


def sqrt_rational(d) -> Scalar:
    """Exact non-negative square root of a non-negative rational."""
    d = Fraction(d)
    if d < 0:
        raise ValueError("square root of a negative number")
    from math import isqrt

    n, m = d.numerator, d.denominator
    rn, rm = isqrt(n), isqrt(m)
    if rn * rn == n and rm * rm == m:
        return Fraction(rn, rm)
    hi = Fraction(rn + 1, max(rm, 1)) if rm else Fraction(rn + 1)
    hi = max(hi, Fraction(1) + d)
    return root_of([-d, 0, 1], 0, hi)


# --------------------------------------------------------------------------
# Composita


_compositum_cache: dict[tuple[int, int], tuple] = {}
_comp_lock = threading.Lock()


def _solve_linear(rows, rhs):
    """Solve a square rational system (Gauss-Jordan)."""
    n = len(rows)
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [v / pv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def _express_in(target: NumberField, value: AlgebraicNumber, via_gen: AlgebraicNumber) -> Scalar:
    """Express ``value`` (living in field L) in ``target`` given target's
    generator as an element ``via_gen`` of L, assuming [L:Q] == [target:Q]."""
    d = target.degree
    powers = [Fraction(1)]
    cur: Scalar = Fraction(1)
    for _ in range(1, d):
        cur = cur * via_gen
        powers.append(cur)
    L = via_gen.field

    def coords_of(x):
        if isinstance(x, AlgebraicNumber):
            return list(x.coords)
        c = [Fraction(0)] * L.degree
        c[0] = Fraction(x)
        return c

    cols = [coords_of(p) for p in powers]
    rows = [[cols[j][i] for j in range(d)] for i in range(L.degree)]
    rhs = coords_of(value)
    sol = _solve_linear(rows, rhs)
    return _make(target, sol)


def _poly_gcd_over(a, b):
    """Monic gcd of polynomials whose coefficients lie in a single field."""
    return upoly.gcd(a, b)


def compositum(f1: NumberField, f2: NumberField, cap: int | None = None):
    """Common field of ``f1`` and ``f2``.

    Returns ``(L, g1, g2)`` where ``g1``, ``g2`` are the images of the two
    generators in ``L``.  ``L`` is ``f1`` or ``f2`` itself when one field
    contains the other.
    """
    if f1 is f2:
        return f1, f1.generator, f2.generator
    key = (id(f1), id(f2))
    hit = _compositum_cache.get(key)
    if hit is not None:
        return hit
    m1, m2 = list(f1.minpoly), list(f2.minpoly)
    d1, d2 = f1.degree, f2.degree
    for k in (1, -1, 2, -2, 3, -3, 5, 7, 11):
        # R(z) = Res_t(m2(t), m1(z - k t)), degree d1*d2
        xs, ys = [], []
        for i in range(d1 * d2 + 1):
            z = Fraction(i)
            g = upoly.compose_linear(m1, Fraction(-k), z)
            xs.append(z)
            ys.append(upoly.resultant(m2, g, d2, d1))
        R = upoly.interpolate(xs, ys)
        if len(upoly.gcd(R, upoly.derivative(R))) > 1:
            continue
        break
    else:  # pragma: no cover - generic k always exists
        raise ArithmeticError("no primitive element found")
    # locate w = theta1 + k*theta2 among the real roots of R
    facs = [f for f, _ in upoly.factor_rational(R)]
    width = Fraction(1)
    while True:
        a1, b1 = f1.interval(width)
        a2, b2 = f2.interval(width)
        lo = a1 + (k * a2 if k > 0 else k * b2)
        hi = b1 + (k * b2 if k > 0 else k * a2)
        hits = []
        for fac in facs:
            if upoly.evaluate(fac, lo) == 0 or upoly.evaluate(fac, hi) == 0:
                hits = None
                break
            n = upoly.count_roots(fac, lo, hi)
            if n:
                hits.append((fac, n))
        if hits is not None and len(hits) == 1 and hits[0][1] == 1:
            h = hits[0][0]
            break
        width /= 8
    if cap is not None and len(h) - 1 > cap:
        raise FieldDegreeExceeded(f"compositum degree {len(h) - 1} exceeds cap {cap}")
    if len(h) == 2:  # pragma: no cover - both generators irrational
        raise ArithmeticError("unexpected rational primitive element")
    L = NumberField.get(h, lo, hi)
    w = L.generator
    # theta2 = common root of m2(t) and m1(w - k t) over L
    A = [Fraction(c) for c in m2]
    B = upoly.compose_linear([Fraction(c) for c in m1], Fraction(-k), w)
    B = [c for c in B]
    g = _poly_gcd_over(A, B)
    if len(g) != 2:
        raise ArithmeticError("primitive element gcd is not linear")
    t2 = -g[0]
    t1 = w - k * t2
    result = (L, t1, t2)
    if L.degree == d1:
        g2 = _express_in(f1, t2, t1)
        result = (f1, f1.generator, g2)
    elif L.degree == d2:
        g1 = _express_in(f2, t1, t2)
        result = (f2, g1, f2.generator)
    with _comp_lock:
        _compositum_cache[key] = result
        _compositum_cache[(id(f2), id(f1))] = (result[0], result[2], result[1])
    return result


def lift(x, L: NumberField | None):
    """Express scalar ``x`` in field ``L`` (which must contain it)."""
    if not isinstance(x, AlgebraicNumber) or L is None or x.field is L:
        return x
    F, g_x, _ = compositum(x.field, L)
    if F is not L:
        raise ValueError("target field does not contain the element")
    return upoly.evaluate(list(x.coords), g_x)


def common_field(values, cap: int | None = None):
    """Smallest field (by successive composita) containing all ``values``."""
    L = None
    for v in values:
        f = field_of(v)
        if f is None or f is L:
            continue
        if L is None:
            L = f
        else:
            L, _, _ = compositum(L, f, cap)
    return L


def algebraic_arith(a, b, op: str) -> Scalar:
    """Exact ``a op b`` for scalars in possibly different fields."""
    if op == "/" and b == 0:
        raise ZeroDivisionError("division by zero")
    fa, fb = field_of(a), field_of(b)
    if fa is not None and fb is not None and fa is not fb:
        L, ga, gb = compositum(fa, fb)
        a = upoly.evaluate(list(a.coords), ga)
        b = upoly.evaluate(list(b.coords), gb)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    raise ValueError(f"unknown operator {op!r}")


# --------------------------------------------------------------------------
# Real roots of polynomials with number-field coefficients


def _norm_poly(chi, K: NumberField):
    """Norm of ``chi`` (coefficients in K) down to Q[z]."""
    m = list(K.minpoly)
    d = K.degree
    n = len(chi) - 1

    def coeff_poly(c):
        if isinstance(c, AlgebraicNumber):
            return upoly.trim(list(c.coords))
        return upoly.trim([Fraction(c)])

    cps = [coeff_poly(c) for c in chi]
    xs, ys = [], []
    for i in range(d * n + 1):
        z = Fraction(i)
        acc = []
        zp = Fraction(1)
        for cp in cps:
            acc = upoly.add(acc, upoly.scale(cp, zp))
            zp *= z
        xs.append(z)
        ys.append(upoly.resultant(m, acc, d, d - 1))
    return upoly.interpolate(xs, ys)


def _root_multiplicity(chi, r) -> int:
    mult = 0
    p = list(chi)
    while p and upoly.evaluate(p, r) == 0:
        mult += 1
        p = upoly.derivative(p)
    return mult


def real_roots_over_field(chi, cap: int = DEFAULT_DEGREE_CAP):
    """Real roots of a polynomial with exact scalar coefficients.

    Returns ``(roots, skipped)`` where ``roots`` is a list of
    ``(root, multiplicity)`` sorted by value and ``skipped`` counts real roots
    whose field would exceed ``cap`` (reported as ``(approx_float, mult)``
    pairs).
    """
    chi = upoly.trim(chi)
    if len(chi) <= 1:
        return [], []
    K = common_field(chi)
    if K is None:
        base = [Fraction(c) for c in chi]
        cands = []
        for fac, mult in upoly.factor_rational(base):
            for lo, hi in upoly.isolate_real_roots(fac):
                if lo == hi:
                    cands.append((lo, mult))
                else:
                    cands.append((NumberField.get(fac, lo, hi).generator, mult))
        cands.sort(key=lambda t: _sort_key(t[0]))
        return cands, []
    chi = [lift(c, K) for c in chi]
    N = _norm_poly(chi, K)
    roots, skipped = [], []
    for fac, _ in upoly.factor_rational(N):
        for lo, hi in upoly.isolate_real_roots(fac):
            if lo == hi:
                r = lo
                mult = _root_multiplicity(chi, r)
                if mult:
                    roots.append((r, mult))
                continue
            F = NumberField.get(fac, lo, hi)
            if K.degree * F.degree > cap:
                # degree of the compositum is unknown until built; try with cap
                try:
                    L, gK, gF = compositum(K, F, cap)
                except FieldDegreeExceeded:
                    if _approx_is_root(chi, F):
                        skipped.append((float(F.generator), 1))
                    continue
            else:
                L, gK, gF = compositum(K, F)
            chiL = [upoly.evaluate(list(c.coords), gK) if isinstance(c, AlgebraicNumber) else c for c in chi]
            mult = _root_multiplicity(chiL, gF)
            if mult:
                roots.append((gF, mult))
    roots.sort(key=lambda t: _sort_key(t[0]))
    return roots, skipped


def _approx_is_root(chi, F: NumberField) -> bool:
    r = float(F.generator)
    v = 0.0
    for c in reversed(chi):
        v = v * r + float(c)
    scale = sum(abs(float(c)) * abs(r) ** i for i, c in enumerate(chi)) or 1.0
    return abs(v) <= 1e-9 * scale


def _sort_key(x):
    return float(x)


# --------------------------------------------------------------------------
# Exponents


@total_ordering
@dataclass(frozen=True)
class Exponent:
    """``rat + irr * tag`` with ``tag`` an irrational algebraic number."""

    rat: Fraction
    irr: Fraction
    tag: AlgebraicNumber

    def _parts(self, other):
        if isinstance(other, Exponent):
            if not _same_tag(self.tag, other.tag):
                raise UnsupportedConfiguration("exponents carry distinct irrational tags")
            return other.rat, other.irr
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return make_exponent(self.rat + p[0], self.irr + p[1], self.tag)

    __radd__ = __add__

    def __neg__(self):
        return Exponent(-self.rat, -self.irr, self.tag)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return make_exponent(self.rat * other, self.irr * other, self.tag)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Exponent):
            return self.rat == other.rat and self.irr == other.irr and _same_tag(self.tag, other.tag)
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.rat, self.irr, float(self.tag)))

    def __lt__(self, other):
        if isinstance(other, (int, Fraction, Exponent)):
            return compare_exponents(self, other) < 0
        return NotImplemented

    def __float__(self):
        return float(self.rat) + float(self.irr) * float(self.tag)

    def __repr__(self):
        return f"Exponent({self.rat} + {self.irr}*{float(self.tag):.6g})"


def _same_tag(a, b) -> bool:
    return a is b or a == b


def make_exponent(rat, irr=0, tag=None):
    rat, irr = Fraction(rat), Fraction(irr)
    if irr == 0:
        return rat
    if not isinstance(tag, AlgebraicNumber):
        raise ValueError("irrational exponent part needs an irrational tag")
    return Exponent(rat, irr, tag)


def compare_exponents(a, b) -> int:
    """Exact three-way comparison of two exponent values."""
    ra, ia, ta = _split(a)
    rb, ib, tb = _split(b)
    if ta is not None and tb is not None and not _same_tag(ta, tb):
        raise UnsupportedConfiguration("exponents carry distinct irrational tags")
    tag = ta if ta is not None else tb
    dr, di = ra - rb, ia - ib
    if di == 0:
        return (dr > 0) - (dr < 0)
    # sign(dr + di * tag)
    return sign(tag * di + dr)


def _split(e):
    if isinstance(e, Exponent):
        return e.rat, e.irr, e.tag
    return Fraction(e), Fraction(0), None
