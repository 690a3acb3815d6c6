"""Bivariate polynomials and reduced rational functions.

``BiPoly`` is a sparse map ``{(i, j): coeff}`` for ``coeff * x**i * y**j``.
Coefficients are exact scalars (``Fraction`` or
:class:`~limitscope.exactalg.AlgebraicNumber`).  Multivariate gcd,
squarefree decomposition and factorisation are delegated to sympy and are
only available for rational coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd as igcd, lcm

from . import upoly
from .exactalg import (
    AlgebraicNumber,
    DEFAULT_DEGREE_CAP,
    FieldDegreeExceeded,
    NumberField,
    common_field,
    lift,
    real_roots_over_field,
    sign,
)

__all__ = [
    "BiPoly", "RationalFn", "Point", "DiscontinuityReport", "ParseError",
    "parse_rational_function", "parse_polynomial", "reduce", "translate",
    "resultant_y", "resultant_x", "bounded_discontinuity_points",
    "point_value", "common_real_zeros", "squarefree_factors", "irreducible_factors", "X", "Y",
]


def _is_rational(c) -> bool:
    return not isinstance(c, AlgebraicNumber)


class BiPoly:
    """Immutable sparse polynomial in ``x`` and ``y``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for k, c in (terms or {}).items():
            if c != 0:
                clean[(int(k[0]), int(k[1]))] = Fraction(c) if isinstance(c, int) else c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    # construction helpers
    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "BiPoly":
        return cls({(i, j): c})

    # structure
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def deg_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def deg_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def coeff(self, i: int, j: int):
        return self.terms.get((i, j), Fraction(0))

    def constant_term(self):
        return self.coeff(0, 0)

    def is_rational(self) -> bool:
        return all(_is_rational(c) for c in self.terms.values())

    def leading_term(self):
        """Graded-lex leading ``((i, j), coeff)`` with ``x > y``."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        k = max(self.terms, key=lambda ij: (ij[0] + ij[1], ij[0]))
        return k, self.terms[k]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0]))

    # arithmetic
    def __add__(self, other):
        other = _as_poly(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "BiPoly":
        return BiPoly({k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self.terms.items())))
        return self._hash

    # calculus and substitution
    def diff_x(self) -> "BiPoly":
        return BiPoly({(i - 1, j): c * i for (i, j), c in self.terms.items() if i})

    def diff_y(self) -> "BiPoly":
        return BiPoly({(i, j - 1): c * j for (i, j), c in self.terms.items() if j})

    def swap(self) -> "BiPoly":
        """``P(y, x)``."""
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    def reflect_x(self) -> "BiPoly":
        """``P(-x, y)``."""
        return BiPoly({(i, j): (-c if i % 2 else c) for (i, j), c in self.terms.items()})

    def __call__(self, x, y):
        acc = Fraction(0)
        for (i, j), c in self.terms.items():
            acc = acc + c * x**i * y**j
        return acc

    def eval_float(self, x, y):
        """Evaluate with float coefficients; works on numpy arrays."""
        acc = 0.0
        for (i, j), c in self.terms.items():
            acc = acc + float(c) * x**i * y**j
        return acc

    def as_poly_in_y(self):
        """Coefficient lists in ``x`` (ascending) indexed by power of ``y``."""
        cols: dict[int, dict[int, object]] = {}
        for (i, j), c in self.terms.items():
            cols.setdefault(j, {})[i] = c
        out = []
        for j in range(self.deg_y() + 1):
            col = cols.get(j, {})
            n = max(col, default=-1) + 1
            out.append(upoly.trim([col.get(i, Fraction(0)) for i in range(n)]))
        return out

    def specialize_x(self, a):
        """Univariate polynomial in ``y`` for ``x = a``."""
        out = [Fraction(0)] * (self.deg_y() + 1)
        for (i, j), c in self.terms.items():
            out[j] = out[j] + c * a**i
        return upoly.trim(out)

    def specialize_y(self, b):
        return self.swap().specialize_x(b)

    def x_adic_valuation(self) -> int:
        return min((i for i, _ in self.terms), default=0)

    def divide_x_power(self, m: int) -> "BiPoly":
        return BiPoly({(i - m, j): c for (i, j), c in self.terms.items()})

    # text
    def to_canonical(self) -> str:
        """Term list ``coeff*x^i*y^j`` joined by ``+`` in graded-lex order."""
        if not self.terms:
            return "0"
        return "+".join(f"{_scalar_text(c)}*x^{i}*y^{j}" for (i, j), c in self.sorted_terms())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("x", i), ("y", j)) if e
            )
            neg = sign(c) < 0
            mag = -c if neg else c
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{_scalar_text(mag)}*{mono}"
            else:
                body = _scalar_text(mag)
            parts.append(("-" if neg else "+", body))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {b}" for s, b in parts[1:])

    def __repr__(self):
        return f"BiPoly({self})"


def _scalar_text(c) -> str:
    if isinstance(c, AlgebraicNumber):
        return f"{float(c):.12g}"
    return str(Fraction(c))


def _as_poly(v) -> BiPoly:
    if isinstance(v, BiPoly):
        return v
    return BiPoly.const(v)


X = BiPoly.monomial(1, 0)
Y = BiPoly.monomial(0, 1)


# --------------------------------------------------------------------------
# sympy bridge (rational coefficients only)


def _sym():
    import sympy

    x, y = sympy.symbols("x y")
    return sympy, x, y


def _to_sympy(p: BiPoly):
    sympy, x, y = _sym()
    data = {k: sympy.Rational(c.numerator, c.denominator) for k, c in p.terms.items()}
    return sympy.Poly.from_dict(data or {(0, 0): 0}, x, y, domain="QQ")


def _from_sympy(sp) -> BiPoly:
    out = {}
    for (i, j), c in sp.terms():
        c = sp.domain.to_sympy(c) if hasattr(sp.domain, "to_sympy") else c
        out[(i, j)] = Fraction(int(c.p), int(c.q))
    return BiPoly(out)


def _require_rational(*polys):
    for p in polys:
        if not p.is_rational():
            raise ValueError("operation requires rational coefficients")


def poly_gcd(p: BiPoly, q: BiPoly) -> BiPoly:
    _require_rational(p, q)
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    return _from_sympy(_to_sympy(p).gcd(_to_sympy(q)))


def poly_exact_div(p: BiPoly, q: BiPoly) -> BiPoly:
    _require_rational(p, q)
    quo, rem = _to_sympy(p).div(_to_sympy(q))
    if not rem.is_zero:
        raise ArithmeticError("inexact bivariate division")
    return _from_sympy(quo)


def divides(g: BiPoly, p: BiPoly) -> bool:
    _require_rational(g, p)
    _, rem = _to_sympy(p).div(_to_sympy(g))
    return rem.is_zero


def squarefree_factors(p: BiPoly) -> list[tuple[BiPoly, int]]:
    """Squarefree decomposition ``[(factor, multiplicity)]`` (constants dropped)."""
    _require_rational(p)
    _, facs = _to_sympy(p).sqf_list()
    return [(_from_sympy(f), m) for f, m in facs if f.total_degree() > 0]


def irreducible_factors(p: BiPoly) -> list[tuple[BiPoly, int]]:
    _require_rational(p)
    _, facs = _to_sympy(p).factor_list()
    return [(_from_sympy(f), m) for f, m in facs if f.total_degree() > 0]


# --------------------------------------------------------------------------
# rational functions


@dataclass(frozen=True)
class Point:
    x0: object = Fraction(0)
    y0: object = Fraction(0)

    def __iter__(self):
        yield self.x0
        yield self.y0

    def is_origin(self) -> bool:
        return self.x0 == 0 and self.y0 == 0

    def __neg__(self):
        return Point(-self.x0, -self.y0)


ORIGIN = Point()


@dataclass(frozen=True)
class RationalFn:
    """Reduced fraction ``num / den``; build with :func:`reduce`."""

    num: BiPoly
    den: BiPoly

    def __call__(self, x, y):
        d = self.den(x, y)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes")
        return self.num(x, y) / d

    def eval_float(self, x, y):
        return self.num.eval_float(x, y) / self.den.eval_float(x, y)

    def swap(self) -> "RationalFn":
        return RationalFn(self.num.swap(), self.den.swap())

    def scale(self, c) -> "RationalFn":
        if c == 0:
            return RationalFn(BiPoly(), BiPoly.const(1))
        return RationalFn(self.num.scale(c), self.den)

    def __str__(self):
        if self.den == BiPoly.const(1):
            return str(self.num)
        return f"({self.num})/({self.den})"


def _normalize(p: BiPoly, q: BiPoly) -> RationalFn:
    """Scale so the denominator is integer-primitive with positive lead."""
    (_, lead) = q.leading_term()
    if q.is_rational() and p.is_rational():
        den_l = 1
        for c in q.terms.values():
            den_l = lcm(den_l, c.denominator)
        g = 0
        for c in q.terms.values():
            g = igcd(g, (c * den_l).numerator)
        factor = Fraction(den_l, g)
        if lead < 0:
            factor = -factor
    else:
        factor = 1 / lead
    return RationalFn(p.scale(factor), q.scale(factor))


def reduce(p: BiPoly, q: BiPoly) -> RationalFn:
    """Cancel the gcd of ``p`` and ``q`` and normalise the denominator."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return RationalFn(BiPoly(), BiPoly.const(1))
    if p.is_rational() and q.is_rational():
        g = poly_gcd(p, q)
        if g.total_degree() > 0:
            p, q = poly_exact_div(p, g), poly_exact_div(q, g)
    return _normalize(p, q)


def _binomial_power(c, n: int):
    """Coefficients of ``(t + c)**n`` ascending in ``t``."""
    return [comb(n, k) * c ** (n - k) for k in range(n + 1)]


def translate_poly(p: BiPoly, pt: Point) -> BiPoly:
    """``p(x + x0, y + y0)``."""
    x0, y0 = pt
    if x0 == 0 and y0 == 0:
        return p
    out: dict = {}
    for (i, j), c in p.terms.items():
        bx = _binomial_power(x0, i)
        by = _binomial_power(y0, j)
        for a, ca in enumerate(bx):
            if ca == 0:
                continue
            for b, cb in enumerate(by):
                if cb == 0:
                    continue
                out[(a, b)] = out.get((a, b), 0) + c * ca * cb
    return BiPoly(out)


def translate(f: RationalFn, pt: Point) -> RationalFn:
    """``g(x, y) = f(x + x0, y + y0)``; coprimality is preserved."""
    if pt.is_origin():
        return f
    return _normalize(translate_poly(f.num, pt), translate_poly(f.den, pt))


# --------------------------------------------------------------------------
# parser


class ParseError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"{message} at column {column}")
        self.message = message
        self.column = column


def _tokenize(text: str):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        col = i + 1
        if ch.isdigit() or (ch == "." and i + 1 < n and text[i + 1].isdigit()):
            j = i
            while j < n and (text[j].isdigit() or text[j] == "."):
                j += 1
            lit = text[i:j]
            try:
                val = Fraction(lit)
            except ValueError:
                raise ParseError(f"malformed number {lit!r}", col) from None
            toks.append(("num", val, col))
            i = j
        elif ch in "xy":
            toks.append(("var", ch, col))
            i += 1
        elif ch in "+-*/^()":
            toks.append((ch, ch, col))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", col)
    toks.append(("end", None, n + 1))
    return toks


class _Parser:
    # values are (num, den) pairs of BiPoly, reduced only at the end

    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None, what=None):
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {what or kind}", tok[2])
        self.pos += 1
        return tok

    def parse(self):
        val = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return val

    def expr(self):
        val = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.term()
            n1, d1 = val
            n2, d2 = rhs
            if d1 == d2:
                val = (n1 + n2 if op == "+" else n1 - n2, d1)
            else:
                val = (n1 * d2 + n2 * d1 if op == "+" else n1 * d2 - n2 * d1, d1 * d2)
        return val

    def term(self):
        val = self.unary()
        while self.peek()[0] in "*/":
            tok = self.take()
            rhs = self.unary()
            if tok[0] == "*":
                val = (val[0] * rhs[0], val[1] * rhs[1])
            else:
                if rhs[0].is_zero():
                    raise ParseError("division by the zero polynomial", tok[2])
                val = (val[0] * rhs[1], val[1] * rhs[0])
        return val

    def unary(self):
        if self.peek()[0] == "-":
            self.take()
            n, d = self.unary()
            return (-n, d)
        if self.peek()[0] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            paren = tok[0] == "("
            if paren:
                self.take()
            tok = self.take("num", "nonnegative integer exponent")
            e = tok[1]
            if e.denominator != 1 or e < 0:
                raise ParseError("exponent must be a nonnegative integer", tok[2])
            if paren:
                self.take(")", "')'")
            e = int(e)
            base = (base[0] ** e, base[1] ** e)
        return base

    def atom(self):
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            return (BiPoly.const(tok[1]), BiPoly.const(1))
        if tok[0] == "var":
            self.take()
            return (X if tok[1] == "x" else Y, BiPoly.const(1))
        if tok[0] == "(":
            self.take()
            val = self.expr()
            self.take(")", "')'")
            return val
        if tok[0] == "end":
            raise ParseError("unexpected end of input", tok[2])
        raise ParseError(f"unexpected {tok[1]!r}", tok[2])


def parse_rational_function(text: str) -> RationalFn:
    """Parse an expression in ``x``, ``y`` into a reduced :class:`RationalFn`."""
    num, den = _Parser(text).parse()
    return reduce(num, den)


def parse_polynomial(text: str) -> BiPoly:
    f = parse_rational_function(text)
    if f.den.total_degree() > 0:
        raise ValueError("expression is not a polynomial")
    return f.num.scale(1 / f.den.constant_term())


# --------------------------------------------------------------------------
# resultants


def resultant_y(p: BiPoly, q: BiPoly) -> list:
    """``Res_y(p, q)`` as an ascending coefficient list in ``x``.

    Computed by evaluation at ``tdeg(p)*tdeg(q) + 1`` integer abscissae with
    the formal ``y``-degrees kept, then interpolation.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial")
    dp, dq = p.deg_y(), q.deg_y()
    bound = max(p.total_degree(), 0) * max(q.total_degree(), 0)
    xs, ys = [], []
    for k in range(bound + 1):
        a = Fraction(k)
        xs.append(a)
        ys.append(upoly.resultant(p.specialize_x(a), q.specialize_x(a), dp, dq))
    return upoly.interpolate(xs, ys)


def resultant_x(p: BiPoly, q: BiPoly) -> list:
    """``Res_x(p, q)`` as an ascending coefficient list in ``y``."""
    return resultant_y(p.swap(), q.swap())


# --------------------------------------------------------------------------
# point value


def _low_y(p: BiPoly):
    """Lowest power of ``y`` present and its ``x``-coefficient list."""
    cols = p.as_poly_in_y()
    for j, col in enumerate(cols):
        if col:
            return j, col
    return None, []


def _ord(col) -> int:
    return next(i for i, c in enumerate(col) if c != 0)


def point_value(f: RationalFn, pt: Point = ORIGIN):
    """Iterated limit ``lim_{x->x0} lim_{y->y0} f``; ``None`` when infinite."""
    g = translate(f, pt)
    if g.num.is_zero():
        return Fraction(0)
    jp, cp = _low_y(g.num)
    jq, cq = _low_y(g.den)
    if jp > jq:
        return Fraction(0)
    if jp < jq:
        return None
    a, b = _ord(cp), _ord(cq)
    if a > b:
        return Fraction(0)
    if a < b:
        return None
    return cp[a] / cq[b]


# --------------------------------------------------------------------------
# discontinuity points


@dataclass(frozen=True)
class DiscontinuityReport:
    kind: str
    point: Point | None = None
    box: tuple | None = None  # ((xlo, xhi), (ylo, yhi)) for unresolved candidates


def _real_roots(coeffs):
    roots, skipped = real_roots_over_field(coeffs)
    return [r for r, _ in roots], skipped


def _in_range(v, lo, hi) -> bool:
    return (lo is None or v >= lo) and (hi is None or v <= hi)


def _enclosure(v):
    if isinstance(v, AlgebraicNumber):
        return v.enclosure(Fraction(1, 2**20))
    return (v, v)


def common_real_zeros(p: BiPoly, q: BiPoly, box=None, cap: int = DEFAULT_DEGREE_CAP):
    """Exact common real zeros of ``p`` and ``q``.

    Returns ``(points, unresolved)``; unresolved entries are isolating boxes
    whose exact verification would need a field beyond ``cap``.
    """
    if p.total_degree() <= 0 or q.total_degree() <= 0:
        return [], []
    rx = resultant_y(p, q)
    ry = resultant_x(p, q)
    if not rx or not ry:
        raise ValueError("polynomials share a common factor")
    xlo, xhi, ylo, yhi = box if box is not None else (None, None, None, None)
    xs, skx = _real_roots(rx)
    ys, sky = _real_roots(ry)
    xs = [a for a in xs if _in_range(a, xlo, xhi)]
    ys = [b for b in ys if _in_range(b, ylo, yhi)]
    points, unresolved = [], []
    for a in xs:
        pa = p.specialize_x(a)
        qa = q.specialize_x(a)
        for b in ys:
            try:
                if upoly.evaluate(pa, b) == 0 and upoly.evaluate(qa, b) == 0:
                    points.append(Point(a, b))
            except FieldDegreeExceeded:
                unresolved.append((_enclosure(a), _enclosure(b)))
    if skx or sky:
        for v, _ in skx:
            unresolved.append(((v, v), (ylo, yhi)))
        for v, _ in sky:
            unresolved.append(((xlo, xhi), (v, v)))
    return points, unresolved


def bounded_discontinuity_points(f: RationalFn, box=None) -> list[DiscontinuityReport]:
    """Common zeros of numerator and denominator, classified.

    ``box`` is ``(xlo, xhi, ylo, yhi)`` with rational entries, or ``None`` for
    the whole plane.
    """
    from .limits import classify_point

    pts, unresolved = common_real_zeros(f.num, f.den, box)
    out = []
    for pt in pts:
        try:
            kind = classify_point(f, pt)
        except FieldDegreeExceeded:
            out.append(DiscontinuityReport("candidate_unresolved", box=(_enclosure(pt.x0), _enclosure(pt.y0))))
            continue
        out.append(DiscontinuityReport("removable_continuous" if kind == "continuous" else kind, point=pt))
    for bx in unresolved:
        out.append(DiscontinuityReport("candidate_unresolved", box=bx))
    return out
