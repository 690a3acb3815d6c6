"""Dense univariate polynomials over an exact field.

A polynomial is a list of coefficients in ascending degree order with no
trailing zeros; the zero polynomial is ``[]``.  Coefficients may be any exact
field elements supporting ``+ - * /`` and comparison with ``0`` (``Fraction``
or :class:`~limitscope.exactalg.AlgebraicNumber`).  Real root isolation and
factorisation are only defined over ``Q``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, lcm

__all__ = [
    "trim", "degree", "add", "sub", "mul", "scale", "neg", "divmod_poly",
    "exact_div", "gcd", "monic", "derivative", "evaluate", "compose_linear",
    "squarefree_part", "resultant", "determinant", "interpolate",
    "to_primitive_int", "sturm_sequence", "count_roots", "isolate_real_roots",
    "refine_root", "factor_rational", "format_poly",
]


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p) -> int:
    return len(p) - 1


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(out)


def neg(a):
    return [-c for c in a]


def sub(a, b):
    return add(a, neg(b))


def scale(a, c):
    if c == 0:
        return []
    return [c * x for x in a]


def mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def divmod_poly(a, b):
    """Euclidean division over a field."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = trim(a)
    if len(a) < len(b):
        return [], a
    lead = b[-1]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    r = list(a)
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1] / lead
        q[k] = c
        if c != 0:
            for i, y in enumerate(b):
                r[k + i] = r[k + i] - c * y
    return trim(q), trim(r[: len(b) - 1])


def exact_div(a, b):
    q, r = divmod_poly(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def monic(p):
    p = trim(p)
    if not p:
        return []
    lead = p[-1]
    if lead == 1:
        return p
    return [c / lead for c in p]


def gcd(a, b):
    """Monic gcd; ``gcd([], []) == []``."""
    a, b = trim(a), trim(b)
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    return monic(a)


def derivative(p):
    return trim([i * p[i] for i in range(1, len(p))])


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def compose_linear(p, a, b):
    """Return ``p(a*z + b)``."""
    out = []
    for c in reversed(p):
        out = add(mul(out, [b, a]), [c]) if out else trim([c])
    return out


def squarefree_part(p):
    p = trim(p)
    if len(p) <= 2:
        return monic(p)
    g = gcd(p, derivative(p))
    return monic(exact_div(p, g)) if len(g) > 1 else monic(p)


def determinant(rows):
    """Determinant over a field by Gaussian elimination (copies input)."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return Fraction(1)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        pv = m[col][col]
        det = det * pv
        for r in range(col + 1, n):
            f = m[r][col]
            if f == 0:
                continue
            f = f / pv
            row, prow = m[r], m[col]
            for c in range(col + 1, n):
                if prow[c] != 0:
                    row[c] = row[c] - f * prow[c]
    return det


def resultant(a, b, deg_a: int | None = None, deg_b: int | None = None):
    """Sylvester resultant with optional formal degrees.

    Leading zero coefficients implied by a formal degree larger than the
    actual one are kept in the Sylvester matrix, so specialising a bivariate
    resultant commutes with evaluation.
    """
    da = degree(a) if deg_a is None else deg_a
    db = degree(b) if deg_b is None else deg_b
    if da < 0 or db < 0:
        return Fraction(0)
    if da == 0:
        return (a[0] if a else Fraction(0)) ** db
    if db == 0:
        return (b[0] if b else Fraction(0)) ** da
    a = list(a) + [Fraction(0)] * (da + 1 - len(a))
    b = list(b) + [Fraction(0)] * (db + 1 - len(b))
    n = da + db
    rows = []
    ra = list(reversed(a))
    rb = list(reversed(b))
    zero = Fraction(0)
    for i in range(db):
        rows.append([zero] * i + ra + [zero] * (n - i - da - 1))
    for i in range(da):
        rows.append([zero] * i + rb + [zero] * (n - i - db - 1))
    return determinant(rows)


def interpolate(xs, ys):
    """Newton interpolation through the points (xs[i], ys[i])."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = []
    for i in range(n - 1, -1, -1):
        out = add(mul(out, [-xs[i], Fraction(1)]), [coef[i]]) if out else trim([coef[i]])
    return out


# --------------------------------------------------------------------------
# Q-only utilities


def to_primitive_int(p):
    """Scale a rational polynomial to coprime integers with positive lead."""
    p = trim(p)
    if not p:
        return []
    den = 1
    for c in p:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p]
    from math import gcd as igcd

    g = 0
    for c in ints:
        g = igcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def sturm_sequence(p):
    p = trim(p)
    seq = [p, derivative(p)]
    while seq[-1]:
        _, r = divmod_poly(seq[-2], seq[-1])
        seq.append(neg(r))
    seq.pop()
    return seq


def _sign_changes(seq, x) -> int:
    last = 0
    changes = 0
    for p in seq:
        v = evaluate(p, x)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if last and s != last:
            changes += 1
        last = s
    return changes


def count_roots(p, lo, hi, seq=None) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    seq = seq if seq is not None else sturm_sequence(p)
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def _root_bound(p) -> Fraction:
    lead = abs(Fraction(p[-1]))
    return 1 + max(abs(Fraction(c)) for c in p[:-1]) / lead if len(p) > 1 else Fraction(1)


def isolate_real_roots(p):
    """Isolate the distinct real roots of a rational polynomial.

    Returns a sorted list of ``(lo, hi)`` pairs.  ``lo == hi`` marks an exact
    rational root; otherwise the open interval contains exactly one root and
    the polynomial does not vanish at either endpoint.
    """
    p = squarefree_part([Fraction(c) for c in trim(p)])
    if len(p) <= 1:
        return []
    if len(p) == 2:
        r = -p[0] / p[1]
        return [(r, r)]
    seq = sturm_sequence(p)
    bound = _root_bound(p)
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = count_roots(p, lo, hi, seq)
        if n == 0:
            continue
        if n == 1:
            if evaluate(p, hi) == 0:
                out.append((hi, hi))
            else:
                out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    # shrink open intervals so no endpoint is a root
    fixed = []
    for lo, hi in out:
        if lo != hi and evaluate(p, lo) == 0:
            mid = (lo + hi) / 2
            while count_roots(p, mid, hi, seq) != 1 or evaluate(p, mid) == 0:
                mid = (mid + hi) / 2
            lo = mid
        fixed.append((lo, hi))
    fixed.sort()
    return fixed


def refine_root(p, lo, hi, width):
    """Bisect an isolating interval of a sign-changing simple root."""
    if lo == hi:
        return lo, hi
    flo = evaluate(p, lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        fm = evaluate(p, mid)
        if fm == 0:
            return mid, mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return lo, hi


def factor_rational(p):
    """Factor over ``Q`` into monic irreducibles with multiplicities."""
    import sympy

    p = trim([Fraction(c) for c in p])
    if len(p) <= 1:
        return []
    z = sympy.Symbol("z")
    expr = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p)], z, domain="QQ")
    _, facs = expr.factor_list()
    out = []
    for f, mult in facs:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(f.all_coeffs())]
        out.append((monic(coeffs), mult))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out


def format_poly(p, var: str = "z") -> str:
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = f"{mag}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return head + "".join(f" {s} {b}" for s, b in terms[1:])


def binomial_shift(p, a):
    """Return ``p(z + a)``."""
    out = [Fraction(0)] * len(p)
    for i, c in enumerate(p):
        if c == 0:
            continue
        for k in range(i + 1):
            out[k] = out[k] + c * comb(i, k) * a ** (i - k)
    return trim(out)
