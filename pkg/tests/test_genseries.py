import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from helpers import random_type_i
from limitscope.genseries import (
    GenSeries,
    LazySeries,
    LogSeries,
    UnsupportedOperation,
    log_leading,
    log_mul,
    multiset_exponent_enumerator,
    power_coefficient,
    series_add,
    series_mul,
    series_pow,
)


def S(*terms):
    return GenSeries(tuple((F(c), F(e)) for c, e in terms))


ZERO = GenSeries()


def test_add_examples():
    assert series_add(S((1, 1), (2, 2)), S((1, F(3, 2)), (-2, 2))) == S((1, 1), (1, F(3, 2)))
    phi = S((3, 1), (-1, F(5, 2)))
    assert series_add(phi, ZERO) == phi
    assert series_add(S((1, 1)), S((1, 1))) == S((2, 1))


def test_mul_examples():
    assert series_mul(S((1, 1)), S((1, F(3, 2)))) == S((1, F(5, 2)))
    assert series_mul(S((1, 1), (1, 2)), S((1, 1), (-1, 2))) == S((1, 2), (-1, 4))
    assert series_mul(S((3, 1), (1, 2)), ZERO) == ZERO


def test_pow_examples():
    a = S((1, 1), (1, F(3, 2)))
    assert series_pow(a, 2) == S((1, 2), (2, F(5, 2)), (1, 3))
    assert series_pow(a, 2) == series_mul(a, a)
    assert series_pow(a, 1) == a
    with pytest.raises(ValueError):
        series_pow(a, 0)


def test_bounded_limit_square_coefficient():
    lazy = LazySeries(lambda k: (F(1), 2 - F(1, k)), limit=F(2))
    assert multiset_exponent_enumerator(lambda k: 2 - F(1, k), 2, F(3), F(2)) == [(2, 2)]
    assert power_coefficient(lazy, 2, F(3)) == 1


def test_enumerator_examples():
    ints = lambda k: F(k)  # noqa: E731
    assert multiset_exponent_enumerator(ints, 2, F(4)) == [(1, 3), (2, 2)]
    assert multiset_exponent_enumerator(ints, 3, F(2)) == []


def test_bounded_exponent_series_reject_ring_ops():
    lazy = LazySeries(lambda k: (F(1), 2 - F(1, k)), limit=F(2))
    with pytest.raises(UnsupportedOperation):
        series_mul(lazy, lazy)


def test_truncated_mul_propagates_bound():
    a = GenSeries(((F(1), F(1)), (F(1), F(2))), order_bound=F(2))
    b = GenSeries(((F(1), F(1)),), order_bound=F(3))
    c = series_mul(a, b)
    assert c.order_bound == F(3)
    assert c.terms == ((F(1), F(2)), (F(1), F(3)))


def test_constructor_invariants():
    with pytest.raises(ValueError):
        S((1, F(1, 2)))
    with pytest.raises(ValueError):
        S((1, 2), (1, 1))
    with pytest.raises(ValueError):
        S((0, 1))


def L(d):
    return LogSeries.make({(F(e), w): F(c) for (e, w), c in d.items()})


def test_log_examples():
    assert log_mul(L({(2, 1): 1}), L({(1, -1): 1})) == L({(3, 0): 1})
    assert log_leading(L({(2, 0): 1, (2, 1): 1}))[:2] == (F(2), 1)
    assert log_mul(L({(1, 0): 1, (2, 0): 1}), L({(1, 1): 1})) == L({(2, 1): 1, (3, 1): 1})


seeds = st.integers(0, 10**9)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_ring_laws(seed):
    rng = random.Random(seed)
    a, b, c = (random_type_i(rng, 4, 6) for _ in range(3))
    assert series_add(a, b) == series_add(b, a)
    assert series_add(series_add(a, b), c) == series_add(a, series_add(b, c))
    assert series_mul(a, b) == series_mul(b, a)
    assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))
    assert series_mul(a, series_add(b, c)) == series_add(series_mul(a, b), series_mul(a, c))


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(1, 5))
def test_pow_is_repeated_mul(seed, n):
    rng = random.Random(seed)
    a = random_type_i(rng, 4, 6)
    acc = a
    for _ in range(n - 1):
        acc = series_mul(acc, a)
    assert series_pow(a, n) == acc


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(1, 5))
def test_evaluation_homomorphism(seed, r):
    rng = random.Random(seed)
    a, b = random_type_i(rng, 4, 6), random_type_i(rng, 4, 6)
    d = 12  # common denominator of every exponent the generator produces
    t = F(1, r + 3) ** d
    assert series_mul(a, b).evaluate(t) == a.evaluate(t) * b.evaluate(t)
