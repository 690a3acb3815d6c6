"""Generalised power series in ``|t|`` and their log-graded extension.

A :class:`GenSeries` is a finite sorted list of ``(coeff, exponent)`` terms,
optionally truncated (every omitted term has exponent above
``order_bound``).  :class:`LazySeries` produces terms of an infinite series
on demand and is the only representation of a genuinely infinite series.
:class:`LogSeries` adds integer powers of ``ln|t|`` and is closed under the
products generated by substituting a curve into a polynomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations_with_replacement
from math import factorial
from typing import Callable, Iterable

from .exactalg import (
    AlgebraicNumber,
    Exponent,
    compare_exponents,
    make_exponent,
    sign,
    sqrt_rational,
)

__all__ = [
    "GenSeries", "LazySeries", "LogSeries", "UnsupportedOperation",
    "series_add", "series_mul", "series_pow", "series_scale",
    "multiset_exponent_enumerator", "power_coefficient",
    "log_mul", "log_add", "log_leading", "exp_key", "exp_min", "exp_max",
    "parse_terms", "format_terms", "scalar_text", "parse_scalar", "exponent_text",
]


class UnsupportedOperation(ValueError):
    """Operation outside the algebra where it is defined."""


exp_key = cmp_to_key(compare_exponents)


def exp_min(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a if compare_exponents(a, b) <= 0 else b


def exp_max(a, b):
    return a if compare_exponents(a, b) >= 0 else b


def _le(a, b) -> bool:
    """``a <= b`` with ``b = None`` meaning +infinity."""
    return b is None or compare_exponents(a, b) <= 0


# --------------------------------------------------------------------------
# GenSeries


@dataclass(frozen=True)
class GenSeries:
    terms: tuple = ()
    order_bound: object = None
    relaxed: bool = False

    def __post_init__(self):
        prev = None
        for c, e in self.terms:
            if c == 0:
                raise ValueError("zero coefficient in series")
            if prev is not None and compare_exponents(prev, e) >= 0:
                raise ValueError("exponents must be strictly increasing")
            prev = e
        if self.terms and not self.relaxed and compare_exponents(self.terms[0][1], 1) < 0:
            raise ValueError("first exponent must be >= 1")
        if self.order_bound is not None and prev is not None and compare_exponents(prev, self.order_bound) > 0:
            raise ValueError("term beyond the order bound of a truncated series")

    @property
    def kind(self) -> str:
        return "type_i" if self.order_bound is None else "type_ii_truncated"

    @classmethod
    def from_dict(cls, d: dict, order_bound=None, relaxed=False) -> "GenSeries":
        items = [(c, e) for e, c in d.items() if c != 0 and _le(e, order_bound)]
        items.sort(key=lambda t: exp_key(t[1]))
        return cls(tuple(items), order_bound, relaxed)

    @classmethod
    def single(cls, c, e, relaxed=False) -> "GenSeries":
        return cls(((c, e),), None, relaxed) if c != 0 else cls((), None, relaxed)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def exponents(self):
        return [e for _, e in self.terms]

    def first_exponent(self):
        return self.terms[0][1] if self.terms else None

    def last_exponent(self):
        return self.terms[-1][1] if self.terms else None

    def truncate(self, n: int) -> "GenSeries":
        """First ``n`` terms as an exact type (i) object."""
        return GenSeries(self.terms[:n], None, self.relaxed)

    def as_dict(self) -> dict:
        return {e: c for c, e in self.terms}

    def evaluate(self, t):
        """Exact value at ``|t| = t`` (rational exponents, ``t`` a perfect power)."""
        acc = 0
        for c, e in self.terms:
            acc += c * _rational_power(t, e)
        return acc

    def eval_float(self, s: float) -> float:
        return sum(float(c) * s ** float(e) for c, e in self.terms)

    def __add__(self, other):
        return series_add(self, other)

    def __mul__(self, other):
        return series_mul(self, other)

    def __pow__(self, n):
        return series_pow(self, n)

    def __str__(self):
        return format_terms([(c, e, 0) for c, e in self.terms], "t", 1) if self.terms else "0"


def _rational_power(t, e):
    e = Fraction(e)
    t = Fraction(t)
    if e.denominator == 1:
        return t ** e.numerator
    num = _iroot(t.numerator, e.denominator)
    den = _iroot(t.denominator, e.denominator)
    if num is None or den is None:
        raise ValueError("exact evaluation needs a perfect power")
    return Fraction(num, den) ** e.numerator


def _iroot(n: int, k: int):
    if n < 0:
        return None
    r = round(n ** (1.0 / k))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**k == n:
            return c
    return None


def series_scale(a: GenSeries, c) -> GenSeries:
    if c == 0:
        return GenSeries((), a.order_bound, a.relaxed)
    return GenSeries(tuple((x * c, e) for x, e in a.terms), a.order_bound, a.relaxed)


def series_add(a: GenSeries, b: GenSeries) -> GenSeries:
    """Termwise sum; coefficients that cancel are dropped."""
    _reject_lazy(a, b)
    bound = exp_min(a.order_bound, b.order_bound)
    d = a.as_dict()
    for c, e in b.terms:
        d[e] = d.get(e, 0) + c
    return GenSeries.from_dict(d, bound, a.relaxed or b.relaxed)


def _product_bound(a: GenSeries, b: GenSeries):
    bound = None
    if a.order_bound is not None and b.terms:
        bound = exp_min(bound, a.order_bound + b.terms[0][1])
    if b.order_bound is not None and a.terms:
        bound = exp_min(bound, b.order_bound + a.terms[0][1])
    if a.order_bound is not None and b.order_bound is not None and not (a.terms and b.terms):
        bound = exp_min(bound, a.order_bound + b.order_bound)
    return bound


def series_mul(a: GenSeries, b: GenSeries) -> GenSeries:
    """Convolution product; truncation propagates to the product."""
    _reject_lazy(a, b)
    if (a.is_zero() and a.order_bound is None) or (b.is_zero() and b.order_bound is None):
        return GenSeries((), None, a.relaxed or b.relaxed)
    bound = _product_bound(a, b)
    d: dict = {}
    for c1, e1 in a.terms:
        for c2, e2 in b.terms:
            e = e1 + e2
            d[e] = d.get(e, 0) + c1 * c2
    return GenSeries.from_dict(d, bound, a.relaxed or b.relaxed)


def _multinomial(idx: tuple) -> int:
    out = factorial(len(idx))
    run = 1
    for k in range(1, len(idx) + 1):
        if k < len(idx) and idx[k] == idx[k - 1]:
            run += 1
        else:
            out //= factorial(run)
            run = 1
    return out


def series_pow(a: GenSeries, n: int) -> GenSeries:
    """``a**n`` by multiset enumeration.

    Each multiset of term indices contributes the product of its
    coefficients times the number of orderings, so the result equals
    ``n - 1`` repeated products.
    """
    _reject_lazy(a)
    if not isinstance(n, int) or n < 1:
        raise ValueError("series_pow needs a positive integer power")
    if n == 1:
        return a
    if a.is_zero():
        bound = None if a.order_bound is None else a.order_bound * n
        return GenSeries((), bound, a.relaxed)
    bound = None
    if a.order_bound is not None:
        bound = a.order_bound + a.terms[0][1] * (n - 1)
    d: dict = {}
    for idx in combinations_with_replacement(range(len(a.terms)), n):
        e = sum((a.terms[k][1] for k in idx[1:]), a.terms[idx[0]][1])
        if not _le(e, bound):
            continue
        c = _multinomial(idx)
        for k in idx:
            c = c * a.terms[k][0]
        d[e] = d.get(e, 0) + c
    return GenSeries.from_dict(d, bound, a.relaxed)


# --------------------------------------------------------------------------
# lazy series and the multiset enumerator


@dataclass
class LazySeries:
    """Terms ``(coeff, exponent)`` indexed from 1, produced on demand.

    ``source(k)`` returns the ``k``-th term or ``None`` when the series is
    finite and exhausted.  ``limit`` is the limit of the exponents (``None``
    for +infinity).
    """

    source: Callable[[int], tuple | None]
    limit: object = None
    _cache: list = field(default_factory=list, repr=False)
    _done: bool = field(default=False, repr=False)

    @classmethod
    def from_terms(cls, terms: Iterable) -> "LazySeries":
        items = list(terms)
        return cls(lambda k: items[k - 1] if k <= len(items) else None, None)

    def term(self, k: int):
        while len(self._cache) < k and not self._done:
            t = self.source(len(self._cache) + 1)
            if t is None:
                self._done = True
                break
            if self._cache and compare_exponents(self._cache[-1][1], t[1]) >= 0:
                raise ValueError("lazy series exponents must increase")
            self._cache.append(t)
        return self._cache[k - 1] if k <= len(self._cache) else None

    def exponent(self, k: int):
        t = self.term(k)
        return None if t is None else t[1]

    def partial(self, n: int) -> GenSeries:
        terms = [self.term(k) for k in range(1, n + 1)]
        return GenSeries(tuple(t for t in terms if t is not None))

    def is_finite_at(self, n: int) -> bool:
        """True once it is known that fewer than ``n`` terms exist."""
        return self.term(n) is None


def _reject_lazy(*xs):
    for x in xs:
        if isinstance(x, LazySeries):
            if x.limit is not None:
                raise UnsupportedOperation(
                    "ring operations are undefined for series whose exponents have a finite limit"
                )
            raise UnsupportedOperation("truncate a lazy series before arithmetic")


def multiset_exponent_enumerator(exponents, n: int, s, limit=None) -> list[tuple]:
    """Index multisets ``k1 <= ... <= kn`` (1-based) with ``sum e_k = s``.

    ``exponents`` is a finite increasing sequence or a callable ``k -> e_k``
    (returning ``None`` past the end).  ``limit`` bounds the exponents from
    above (``None`` for +infinity); it is what makes the search finite.
    """
    if callable(exponents):
        get = exponents
    else:
        seq = list(exponents)
        get = lambda k: seq[k - 1] if k <= len(seq) else None  # noqa: E731

    def rec(kmin: int, m: int, target):
        if limit is not None and compare_exponents(target, limit * m) >= 0:
            return
        k = kmin
        while True:
            e = get(k)
            if e is None:
                return
            if m == 1:
                c = compare_exponents(e, target)
                if c == 0:
                    yield (k,)
                if c >= 0:
                    return
            else:
                if compare_exponents(e * m, target) > 0:
                    return
                for rest in rec(k, m - 1, target - e):
                    yield (k,) + rest
            k += 1

    if n < 1:
        raise ValueError("n must be a positive integer")
    e1 = get(1)
    if e1 is None or compare_exponents(s, e1 * n) < 0:
        return []
    return list(rec(1, n, s))


def power_coefficient(series, n: int, s):
    """Coefficient of ``|t|^s`` in ``series**n`` (series may be lazy)."""
    if isinstance(series, GenSeries):
        get = lambda k: series.terms[k - 1] if k <= len(series.terms) else None  # noqa: E731
        limit = None
    else:
        get = series.term
        limit = series.limit
    total = 0
    for idx in multiset_exponent_enumerator(lambda k: (get(k) or (None, None))[1], n, s, limit):
        c = _multinomial(idx)
        for k in idx:
            c = c * get(k)[0]
        total += c
    return total


# --------------------------------------------------------------------------
# LogSeries


@dataclass(frozen=True)
class LogSeries:
    """Sum of ``coeff * |t|^exp * (ln|t|)^logpow``.

    ``bound`` marks completeness: every term with exponent ``<= bound`` is
    present (``None`` means the series is exact).
    """

    terms: dict = field(default_factory=dict)
    bound: object = None

    @classmethod
    def make(cls, terms: dict, bound=None) -> "LogSeries":
        return cls({k: c for k, c in terms.items() if c != 0 and _le(k[0], bound)}, bound)

    @classmethod
    def constant(cls, c) -> "LogSeries":
        return cls.make({(Fraction(0), 0): c})

    @classmethod
    def from_genseries(cls, g: GenSeries) -> "LogSeries":
        return cls.make({(e, 0): c for c, e in g.terms}, g.order_bound)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(
            ((e, w, c) for (e, w), c in self.terms.items()),
            key=lambda t: (exp_key(t[0]), -t[1]),
        )

    def constant_term(self):
        return self.terms.get((Fraction(0), 0), Fraction(0))

    def without_constant(self) -> "LogSeries":
        return LogSeries({k: c for k, c in self.terms.items() if k != (Fraction(0), 0)}, self.bound)

    def scale(self, c) -> "LogSeries":
        return LogSeries.make({k: v * c for k, v in self.terms.items()}, self.bound)

    def shift(self, e) -> "LogSeries":
        """Multiply by ``|t|^e``."""
        bound = None if self.bound is None else self.bound + e
        return LogSeries({(k[0] + e, k[1]): c for k, c in self.terms.items()}, bound)

    def __add__(self, other):
        return log_add(self, other)

    def __mul__(self, other):
        return log_mul(self, other)

    def eval_float(self, s: float) -> float:
        import math

        ln = math.log(s)
        return sum(float(c) * s ** float(e) * ln**w for (e, w), c in self.terms.items())


def log_add(a: LogSeries, b: LogSeries, trunc=None) -> LogSeries:
    bound = exp_min(exp_min(a.bound, b.bound), trunc)
    d = dict(a.terms)
    for k, c in b.terms.items():
        d[k] = d.get(k, 0) + c
    return LogSeries.make(d, bound)


def _min_exp(a: LogSeries):
    return min((k[0] for k in a.terms), key=exp_key, default=None)


def log_mul(a: LogSeries, b: LogSeries, trunc=None) -> LogSeries:
    """Product with exponents and log powers added; optional truncation.

    Exponents are assumed nonnegative, so terms above ``trunc`` can be
    dropped early without affecting lower ones.
    """
    bound = trunc
    ma, mb = _min_exp(a), _min_exp(b)
    if a.bound is not None:
        bound = exp_min(bound, a.bound + mb if mb is not None else (a.bound + b.bound if b.bound is not None else None))
    if b.bound is not None:
        bound = exp_min(bound, b.bound + ma if ma is not None else (a.bound + b.bound if a.bound is not None else None))
    if (a.is_zero() and a.bound is None) or (b.is_zero() and b.bound is None):
        return LogSeries({}, None if trunc is None else trunc)
    d: dict = {}
    for (e1, w1), c1 in a.terms.items():
        for (e2, w2), c2 in b.terms.items():
            e = e1 + e2
            if not _le(e, bound):
                continue
            k = (e, w1 + w2)
            d[k] = d.get(k, 0) + c1 * c2
    return LogSeries.make(d, bound)


def log_leading(a: LogSeries):
    """Dominant term ``(exp, logpow, coeff)`` as ``|t| -> 0``.

    Minimal exponent first; among equal exponents the largest log power
    dominates because ``|ln|t||`` grows without bound.
    """
    if not a.terms:
        return None
    return a.sorted_terms()[0]


# --------------------------------------------------------------------------
# text form of terms
#
# A term is  [coeff*] V [^exp] [(*|/) ln|v|]  where V is ``v`` (signed) or
# ``|v|``; ``coeff`` is a rational, ``sqrt(D)``, ``m*sqrt(D)`` or a
# parenthesised ``(a+b*sqrt(D))``; ``exp`` is an integer, ``(p/q)``,
# ``sqrt(D)`` or ``(a+b*sqrt(D))``.

_NUM = r"\d+(?:\.\d+)?(?:/\d+)?"


class TermSyntaxError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"{message} at column {column}")
        self.column = column


class _TermLexer:
    def __init__(self, text: str, offset: int = 0):
        self.text = text
        self.i = 0
        self.offset = offset

    def ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self, s: str) -> bool:
        self.ws()
        return self.text.startswith(s, self.i)

    def eat(self, s: str) -> bool:
        if self.peek(s):
            self.i += len(s)
            return True
        return False

    def expect(self, s: str):
        if not self.eat(s):
            self.fail(f"expected {s!r}")

    def number(self, integer: bool = False):
        self.ws()
        m = re.match(r"\d+" if integer else _NUM, self.text[self.i:])
        if not m:
            return None
        self.i += m.end()
        return Fraction(m.group(0))

    def fail(self, msg: str):
        raise TermSyntaxError(msg, self.offset + self.i + 1)

    def at_end(self) -> bool:
        self.ws()
        return self.i >= len(self.text)


def _sqrt_tag(lx: _TermLexer):
    lx.expect("(")
    d = lx.number()
    if d is None:
        lx.fail("expected radicand")
    lx.expect(")")
    r = sqrt_rational(d)
    return r


def _parse_surd(lx: _TermLexer):
    """``a``, ``sqrt(D)``, ``m*sqrt(D)``, ``a+m*sqrt(D)`` (inside parens)."""
    total = Fraction(0)
    first = True
    while True:
        neg = False
        if lx.eat("-"):
            neg = True
        elif not first and not lx.eat("+"):
            break
        elif first:
            lx.eat("+")
        first = False
        if lx.eat("sqrt"):
            v = _sqrt_tag(lx)
        else:
            v = lx.number()
            if v is None:
                lx.fail("expected number")
            if lx.eat("*"):
                lx.expect("sqrt")
                v = v * _sqrt_tag(lx)
        total = total + (-v if neg else v)
    return total


def parse_scalar(text: str):
    lx = _TermLexer(text)
    v = _parse_surd(lx)
    if not lx.at_end():
        lx.fail("trailing input")
    return v


def _as_exponent(v):
    if isinstance(v, AlgebraicNumber):
        # a + b*sqrt(D) with a single quadratic tag
        if v.field.degree != 2:
            raise ValueError("irrational exponents must be quadratic surds")
        a, b = v.coords
        tag = v.field.generator
        return make_exponent(a, b, tag)
    return Fraction(v)


def _parse_exponent(lx: _TermLexer):
    if lx.eat("("):
        v = _parse_surd(lx)
        if lx.eat("/"):
            d = lx.number()
            if d is None or d == 0:
                lx.fail("expected nonzero denominator")
            v = v / d
        lx.expect(")")
        return _as_exponent(v)
    if lx.eat("sqrt"):
        return _as_exponent(_sqrt_tag(lx))
    n = lx.number(integer=True)
    if n is None:
        lx.fail("expected exponent")
    return n


def _coeff_factor(lx: _TermLexer):
    if lx.eat("("):
        v = _parse_surd(lx)
        lx.expect(")")
        return v
    if lx.eat("sqrt"):
        return _sqrt_tag(lx)
    return lx.number()


def _parse_coefficient(lx: _TermLexer, var: str):
    """Product/quotient of numeric factors before the variable.

    Returns ``None`` for a literal zero term.
    """
    if lx.peek("|") or lx.peek(var):
        return Fraction(1)
    coeff = _coeff_factor(lx)
    if coeff is None:
        lx.fail(f"expected coefficient, {var!r} or |{var}|")
    while True:
        if lx.eat("/"):
            d = _coeff_factor(lx)
            if d is None or d == 0:
                lx.fail("expected nonzero divisor")
            coeff = coeff / d
        elif lx.eat("*"):
            if lx.peek("|") or lx.peek(var):
                return coeff
            f = _coeff_factor(lx)
            if f is None:
                lx.fail("expected factor")
            coeff = coeff * f
        elif lx.at_end() or lx.peek("+") or lx.peek("-"):
            if coeff == 0:
                return None
            lx.fail("constant terms are not allowed in a curve")
        else:
            lx.fail("expected '*'")


def parse_terms(text: str, var: str, side: int, offset: int = 0):
    """Parse a signed sum of terms into ``[(coeff, exp, logpow)]`` in ``s = |v|``.

    A signed integer power ``v^n`` becomes ``side**n * s**n``; a fractional
    power of the bare variable is only accepted for ``side = +1``.
    """
    lx = _TermLexer(text, offset)
    out = []
    first = True
    while not lx.at_end():
        neg = False
        if lx.eat("-"):
            neg = True
        elif lx.eat("+"):
            pass
        elif not first:
            lx.fail("expected '+' or '-'")
        first = False
        coeff = _parse_coefficient(lx, var)
        if coeff is None:
            continue
        col = lx.i
        if lx.eat("|"):
            lx.expect(var)
            lx.expect("|")
            absolute = True
        elif lx.eat(var):
            absolute = False
        else:
            lx.fail(f"expected {var!r} or |{var}|")
        e = Fraction(1)
        if lx.eat("^"):
            e = _parse_exponent(lx)
        if not absolute:
            if isinstance(e, Fraction) and e.denominator == 1:
                coeff = coeff * side ** int(e)
            elif side < 0:
                raise TermSyntaxError(
                    f"{var}^{exponent_text(e)} is not real for negative {var}; write |{var}|^...",
                    offset + col + 1,
                )
        logpow = 0
        save = lx.i
        op = "*" if lx.eat("*") else ("/" if lx.eat("/") else None)
        if op and not lx.peek("ln"):
            lx.i = save
            op = None
        if op:
            logpow = 1 if op == "*" else -1
            lx.expect("ln")
            if lx.eat("|"):
                lx.expect(var)
                lx.expect("|")
            elif lx.eat("("):
                lx.expect("|")
                lx.expect(var)
                lx.expect("|")
                lx.expect(")")
        if compare_exponents(e, 0) <= 0:
            lx.fail("exponents must be positive")
        out.append((-coeff if neg else coeff, e, logpow))
    return out


def _squarefree_split(n: int):
    """``n = k**2 * d`` with ``d`` squarefree."""
    from sympy import factorint

    k, d = 1, 1
    for p, m in factorint(n).items():
        k *= p ** (m // 2)
        if m % 2:
            d *= p
    return k, d


def _quadratic_parts(x: AlgebraicNumber):
    """``(a, m, D)`` with ``x = a + m*sqrt(D)`` for a quadratic ``x``."""
    mp = x.minpoly()
    if len(mp) != 3:
        return None
    c0, c1, c2 = mp
    b, c = c1 / c2, c0 / c2
    a = -b / 2
    r = b * b / 4 - c
    num, den = r.numerator, r.denominator
    k, d = _squarefree_split(num * den)
    m = Fraction(k, den)
    if x < a:
        m = -m
    return a, m, d


def scalar_text(c) -> str:
    """Exact text for rationals and quadratic surds, ``~decimal`` otherwise."""
    if not isinstance(c, AlgebraicNumber):
        return str(Fraction(c))
    parts = _quadratic_parts(c)
    if parts is None:
        return f"~{float(c):.12g}"
    a, m, d = parts
    surd = "sqrt(%d)" % d if m == 1 else ("-sqrt(%d)" % d if m == -1 else f"{m}*sqrt({d})")
    if a == 0:
        return surd
    return f"({a}{'' if surd.startswith('-') else '+'}{surd})"


def exponent_text(e) -> str:
    if isinstance(e, Exponent):
        tag = scalar_text(e.tag)
        body = f"{e.irr}*{tag}" if e.irr != 1 else tag
        if e.rat != 0:
            body = f"{e.rat}+{body}"
        return f"({body})"
    e = Fraction(e)
    if e.denominator == 1:
        return str(e.numerator)
    return f"({e})"


def format_terms(terms, var: str, side: int) -> str:
    """Inverse of :func:`parse_terms` using signed powers where possible."""
    if not terms:
        return "0"
    parts = []
    for c, e, w in terms:
        integral = isinstance(e, Fraction) and e.denominator == 1 or isinstance(e, int)
        if integral:
            n = int(e)
            c = c * side**n
            mono = var if n == 1 else f"{var}^{n}"
        else:
            mono = f"|{var}|^{exponent_text(e)}"
        if w == 1:
            mono += f"*ln|{var}|"
        elif w == -1:
            mono += f"/ln|{var}|"
        elif w:
            raise ValueError("only single log factors have a text form")
        neg = sign(c) < 0 and not scalar_text(c).startswith("(")
        mag = -c if neg else c
        if mag == 1:
            body = mono
        else:
            body = f"{scalar_text(mag)}*{mono}"
        parts.append(("-" if neg else "+", body))
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(f"{s}{b}" for s, b in parts[1:])
