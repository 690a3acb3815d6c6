from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from limitscope import upoly
from limitscope.exactalg import (
    UnsupportedConfiguration,
    algebraic_arith,
    compare_exponents,
    decimal_string,
    make_exponent,
    minimal_polynomial,
    real_roots_over_field,
    root_of,
    sign,
    sqrt_rational,
)

R2, R3, R5 = sqrt_rational(2), sqrt_rational(3), sqrt_rational(5)
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)


def test_compare_exponents_examples():
    assert compare_exponents(F(3, 2), F(2)) == -1
    # sqrt(2) = 1.414... sits below 3/2
    assert compare_exponents(make_exponent(0, 1, R2), F(3, 2)) == -1
    assert compare_exponents(make_exponent(0, 1, R2), F(7, 5)) == 1
    e = make_exponent(1, 1, R2)
    assert compare_exponents(e, make_exponent(1, 1, R2)) == 0


def test_distinct_tags_rejected():
    with pytest.raises(UnsupportedConfiguration):
        compare_exponents(make_exponent(0, 1, R2), make_exponent(0, 1, R3))


def test_algebraic_arith_examples():
    assert algebraic_arith(R5, R5, "*") == 5
    assert algebraic_arith(2 + R5, 2 - R5, "+") == 4
    s = algebraic_arith(R2, R3, "+")
    assert minimal_polynomial(s) == [1, 0, -10, 0, 1]
    assert abs(float(s) - 3.1462643699) < 1e-9


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        algebraic_arith(R2, F(0), "/")


def test_root_of_and_decimal():
    r = root_of([-2, 0, 1], 1, 2)
    assert r == R2
    assert decimal_string(r) == "1.41421356237"
    assert decimal_string(F(-1, 2)) == "-0.500000000000"


@given(rationals, rationals, rationals)
def test_field_axioms_in_quadratic_field(a, b, c):
    x, y, z = a + b * R2, b + c * R2, c + a * R2
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    if x != 0:
        assert x * (1 / x) == 1


@settings(max_examples=200)
@given(rationals, rationals, rationals, rationals)
def test_compare_exponents_matches_floats(a, b, c, d):
    ea, eb = make_exponent(a, b, R2), make_exponent(c, d, R2)
    gap = float(ea) - float(eb)
    if abs(gap) > 1e-9:
        assert compare_exponents(ea, eb) == (1 if gap > 0 else -1)


@settings(max_examples=60)
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=6))
def test_sturm_isolation_against_numpy(coeffs):
    import numpy as np

    p = upoly.trim([F(c) for c in coeffs])
    if upoly.degree(p) < 1:
        return
    sq = upoly.squarefree_part(p)
    ivs = upoly.isolate_real_roots(sq)
    roots = np.roots([float(c) for c in reversed(sq)])
    real = sorted(r.real for r in roots if abs(r.imag) < 1e-7)
    assert len(ivs) == len(real)
    for (lo, hi), r in zip(sorted(ivs), real):
        assert float(lo) - 1e-6 <= r <= float(hi) + 1e-6


def test_real_roots_over_extension():
    # z^2 - (2+sqrt5)^2 over Q(sqrt5): roots +-(2+sqrt5)
    a = 2 + R5
    roots, skipped = real_roots_over_field([-(a * a), F(0), F(1)])
    assert not skipped
    assert sorted(sign(r - a) == 0 or sign(r + a) == 0 for r, _ in roots) == [True, True]


def test_isolating_interval_ignores_refinement_history():
    from limitscope.exactalg import isolating_interval

    a, b = sqrt_rational(5) / 2, sqrt_rational(5) / 2
    b.enclosure(F(1, 10**40))
    assert isolating_interval(a) == isolating_interval(b)
    lo, hi = isolating_interval(-a)
    assert lo < -a < hi and hi - lo <= F(1, 2**40)
