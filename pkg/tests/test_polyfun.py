import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from limitscope.exactalg import sqrt_rational
from limitscope.polyfun import (
    BiPoly,
    ParseError,
    Point,
    RationalFn,
    X,
    Y,
    bounded_discontinuity_points,
    common_real_zeros,
    parse_polynomial,
    parse_rational_function as parse,
    point_value,
    reduce,
    resultant_x,
    resultant_y,
    translate,
)

O = Point(F(0), F(0))


def poly_eq(P, text):
    return P == parse_polynomial(text)


def test_parse_examples():
    f = parse("((x)^2 - y^2 - x*y)/(x^2 + y^2)")
    assert poly_eq(f.num, "x^2-y^2-x*y") and poly_eq(f.den, "x^2+y^2")
    g = parse("x*y/(x^2+y^2) + 0")
    assert poly_eq(g.num, "x*y") and poly_eq(g.den, "x^2+y^2")
    h = parse("(x^2-y^2)/(x-y)")
    assert poly_eq(h.num, "x+y") and h.den == BiPoly.const(1)


def test_gcd_cancellation_pointwise():
    h = parse("(x^2-y^2)/(x-y)")
    rng = random.Random(3)
    for _ in range(5):
        a, b = F(rng.randint(-9, 9), 7), F(rng.randint(-9, 9), 5)
        if a != b:
            assert h(a, b) == (a * a - b * b) / (a - b)


@pytest.mark.parametrize(
    "text,column",
    [("x/(y", 5), ("x+*y", 3), ("x^-1", 3), ("2x", 2), ("x^(1/2)", 5)],
)
def test_parse_errors_report_columns(text, column):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.column == column


def test_division_by_zero_polynomial():
    with pytest.raises(ParseError, match="zero polynomial"):
        parse("x/(y-y)")


def test_reduce_examples():
    assert reduce(X**2 * Y, X * Y) == RationalFn(X, BiPoly.const(1))
    assert reduce(X**2 - Y**2, X - Y) == RationalFn(X + Y, BiPoly.const(1))
    r = reduce(X * Y, X**2 + Y**2)
    assert r.num == X * Y and r.den == X**2 + Y**2


def test_denominator_normalised():
    f = parse("x/(-2*y)")
    assert f.den == Y and f.num == X.scale(F(-1, 2))


def test_translate_examples():
    f = parse("(x-1)*y/((x-1)^2+y^2)")
    assert translate(f, Point(F(1), F(0))) == parse("x*y/(x^2+y^2)")
    assert translate(f, O) == f
    g = parse("1/(x+y)")
    assert translate(g, Point(F(1), F(-1))) == g


def test_resultant_examples():
    assert resultant_y(X * Y, Y**2 + X**2) == [0, 0, 0, 0, 1]
    # Sylvester convention: Res_y(y, y-1) = -1 (the swapped order gives 1)
    assert resultant_y(Y, Y - 1) == [-1]
    assert resultant_y(Y, Y - 1) == [-v for v in resultant_y(Y - 1, Y)]
    assert resultant_y(Y - X, Y - X) == []
    assert resultant_x(X * Y, X**2 + Y**2) == [0, 0, 0, 0, 1]


def test_point_value_examples():
    assert point_value(parse("x*y/(x^2+y^2)"), O) == 0
    assert point_value(parse("(x^2-y^2-x*y)/(x^2+y^2)"), O) == 1
    assert point_value(parse("(x+y)/(1+x^2)"), O) == 0
    assert point_value(parse("1/x"), O) is None


def test_discontinuity_examples():
    box = (F(-1), F(1), F(-1), F(1))
    r = bounded_discontinuity_points(parse("x*y/(x^2+y^2)"), box)
    assert [(d.kind, d.point) for d in r] == [("bounded_discontinuity", O)]
    r = bounded_discontinuity_points(parse("x/y"), box)
    assert [(d.kind, d.point) for d in r] == [("unbounded", O)]
    assert bounded_discontinuity_points(parse("(x+y)/(1+x^2+y^2)"), box) == []


def test_algebraic_common_zero():
    # x^2 = 2 and y = 0 on both: points (+-sqrt2, 0)
    pts, unresolved = common_real_zeros(X**2 - 2, Y * (X**2 - 2) + Y**3)
    assert not unresolved
    r2 = sqrt_rational(2)
    assert sorted(float(p.x0) for p in pts) == pytest.approx([-float(r2), float(r2)])


small = st.integers(-3, 3)


def random_poly(rng, deg=3):
    return BiPoly({(i, j): F(rng.randint(-3, 3)) for i in range(deg) for j in range(deg - i) if rng.random() < 0.5})


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_reduce_matches_quotient(seed):
    rng = random.Random(seed)
    p, q, g = random_poly(rng), random_poly(rng), random_poly(rng, 2)
    if q.is_zero() or g.is_zero():
        return
    f = reduce(p * g, q * g)
    for _ in range(20):
        a, b = F(rng.randint(-20, 20), rng.randint(1, 9)), F(rng.randint(-20, 20), rng.randint(1, 9))
        if (q * g)(a, b) != 0 and f.den(a, b) != 0:
            assert f(a, b) == p(a, b) / q(a, b)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), small, small)
def test_translate_round_trip(seed, a, b):
    rng = random.Random(seed)
    p, q = random_poly(rng), random_poly(rng)
    if q.is_zero():
        return
    f = reduce(p, q)
    pt = Point(F(a, 2), F(b, 3))
    assert translate(translate(f, pt), Point(-pt.x0, -pt.y0)) == f


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_resultant_vanishing(seed):
    from limitscope import upoly

    rng = random.Random(seed)
    p, q = random_poly(rng), random_poly(rng)
    if p.deg_y() < 1 or q.deg_y() < 1:
        return
    res = resultant_y(p, q)
    for a in (F(k, 2) for k in range(-6, 7)):
        pa = upoly.trim(p.specialize_x(a))
        qa = upoly.trim(q.specialize_x(a))
        lead_gone = len(pa) < p.deg_y() + 1 and len(qa) < q.deg_y() + 1
        shared = upoly.degree(upoly.gcd(pa, qa)) > 0 if pa and qa else True
        vanishes = upoly.evaluate(res, a) == 0 if res else True
        if shared or lead_gone:
            assert vanishes
        elif len(pa) == p.deg_y() + 1 and len(qa) == q.deg_y() + 1:
            assert not vanishes


def test_discontinuity_count_bound():
    f = parse("x*y*(x-1)/((x^2+y^2)*((x-1)^2+y^2))")
    pts = bounded_discontinuity_points(f)
    assert len(pts) <= f.num.total_degree() * f.den.total_degree()
