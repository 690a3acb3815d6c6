import random
from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from helpers import random_bipoly, residual_ok, strip_vertical
from limitscope.exactalg import sqrt_rational
from limitscope.polyfun import X, Y, parse_polynomial
from limitscope.puiseux import newton_polygon, real_branches


def lead(branches):
    return sorted((float(b.series.terms[0][0]), b.series.terms[0][1]) for b in branches)


def test_newton_polygon_examples():
    (e,) = newton_polygon(Y**2 - X**3)
    assert e.slope == F(3, 2) and list(e.char_poly) == [-1, 0, 1]
    (e,) = newton_polygon(Y**2 - X**2)
    assert e.slope == 1 and list(e.char_poly) == [-1, 0, 1]
    (e,) = newton_polygon(X**2 + Y**2)
    assert e.slope == 1 and list(e.char_poly) == [1, 0, 1]
    assert newton_polygon(X + 1) == []


def test_cusp_branches_by_side():
    P = Y**2 - X**3
    plus = real_branches(P, 1)
    assert lead(plus) == [(-1.0, F(3, 2)), (1.0, F(3, 2))]
    assert all(b.complete and b.ramification == 2 for b in plus)
    assert real_branches(P, -1) == []


def test_linear_branches_both_sides():
    for side in (1, -1):
        bs = real_branches(Y**2 - X**2, side)
        assert sorted(b.series.terms for b in bs) == [((F(-1), F(1)),), ((F(1), F(1)),)]
        assert all(b.complete for b in bs)


def test_vertical_component_reported():
    bs = real_branches(X**3 - X * Y**2, 1)
    assert bs.vertical == 1
    assert lead(bs) == [(-1.0, 1), (1.0, 1)]


def test_algebraic_directions():
    # critical curve of (x^2-y^2-xy)/(x^2+y^2): directions 2 +- sqrt5
    P = parse_polynomial("-x^3-4*x^2*y+x*y^2")
    bs = real_branches(P, 1)
    r5 = sqrt_rational(5)
    assert sorted(b.series.terms[0][0] for b in bs) == [2 - r5, 2 + r5]
    assert bs.vertical == 1


def test_multiplicity_recorded():
    bs = real_branches((Y - X) ** 2 * (Y + X), 1)
    mult = {b.series.terms[0][0]: b.multiplicity for b in bs}
    assert mult == {F(1): 2, F(-1): 1}


def test_extension_keeps_residual_invariant():
    P = Y**2 - 2 * X**2 * Y + X**4 - X**5
    for b in real_branches(P, 1):
        assert residual_ok(P, b)
        if not b.complete:
            longer = b.extend(3)
            assert len(longer.series) == len(b.series) + 3
            assert residual_ok(P, longer)


def _numeric_roots(P, x):
    coeffs = [mpmath.mpf(0)] * (P.deg_y() + 1)
    for (i, j), c in P.terms.items():
        coeffs[j] += mpmath.mpf(c.numerator) / c.denominator * x**i
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        return []
    return mpmath.polyroots(list(reversed(coeffs)), maxsteps=200, extraprec=400)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**9))
def test_branches_against_numeric_roots(seed):
    rng = random.Random(seed)
    P = strip_vertical(random_bipoly(rng))
    if P.is_zero() or P.deg_y() == 0 or P.constant_term() != 0:
        return
    mpmath.mp.dps = 60
    s = mpmath.mpf(10) ** -3
    for side in (1, -1):
        roots = _numeric_roots(P, side * s)
        for b in real_branches(P, side, depth=F(12)):
            if b.numeric_only:
                continue
            v = sum(mpmath.mpf(float(c)) * s ** mpmath.mpf(float(e)) for c, e in b.series.terms)
            if not b.series.terms:
                v = mpmath.mpf(0)
            err = min(abs(r - v) for r in roots)
            assert err <= mpmath.mpf(10) ** -4 * max(abs(v), s**12)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_residual_and_count(seed):
    rng = random.Random(seed)
    P = random_bipoly(rng)
    if P.is_zero():
        return
    core = strip_vertical(P)
    for side in (1, -1):
        bs = real_branches(P, side)
        assert sum(b.multiplicity for b in bs) <= core.deg_y()
        for b in bs:
            assert b.numeric_only or residual_ok(P, b)
            # even ramification comes with its sign conjugate
            if b.ramification % 2 == 0 and not b.numeric_only:
                r = b.ramification
                conj = [(-c if (e * r).numerator % 2 else c, e) for c, e in b.series.terms]
                assert any(
                    list(o.series.terms[: len(conj)]) == conj[: len(o.series.terms)] and o is not b
                    for o in bs
                )
