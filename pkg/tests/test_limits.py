import math
import random
from fractions import Fraction as F

import pytest

from corpus import CORPUS, FAMILY
from helpers import random_type_i
from limitscope.asympt import CurveSpec, LimitResult, Tail, limit_along_curve
from limitscope.exactalg import make_exponent, minimal_polynomial, sign, sqrt_rational
from limitscope.genseries import GenSeries, LazySeries, series_add
from limitscope.limits import (
    UnboundedPoint,
    certify_denominator_sign,
    classify_point,
    limit_exists,
    limiting_value_interval,
    sequence_character,
)
from limitscope.oracle import SampleConfig, sample_limit_set
from limitscope.polyfun import BiPoly, Point, RationalFn, X, Y, parse_rational_function as parse, point_value

O = Point(F(0), F(0))
HALF = F(1, 2)


def interval(text, pt=O):
    return limiting_value_interval(parse(text), pt)


def test_interval_examples():
    iv = interval("x*y/(x^2+y^2)")
    assert (iv.lo, iv.hi) == (-HALF, HALF)
    assert (iv.lo_witness.text(), iv.hi_witness.text()) == ("y=-x", "y=x")
    iv = interval("(x^2-y^2-x*y)/(x^2+y^2)")
    r = sqrt_rational(5) / 2
    assert iv.lo == -r and iv.hi == r
    assert minimal_polynomial(iv.hi) == [F(-5, 4), 0, 1]
    iv = interval("(x+y)/(1+x^2)")
    assert (iv.lo, iv.hi) == (0, 0)


def test_interval_at_translated_point():
    iv = interval("(x-1)*(y+2)/((x-1)^2+(y+2)^2)", Point(F(1), F(-2)))
    assert (iv.lo, iv.hi) == (-HALF, HALF)
    assert iv.hi_witness.anchor == Point(F(1), F(-2))


def test_unbounded_interval_is_an_error():
    with pytest.raises(UnboundedPoint):
        interval("x/y")


def test_exists_examples():
    v = limit_exists(parse("x^2*y/(x^2+y^2)"), O)
    assert v.exists and v.value == 0
    v = limit_exists(parse("x*y/(x^2+y^2)"), O)
    assert not v.exists
    assert {(c.text(), r.value) for c, r in v.counter_witnesses} == {("y=x", HALF), ("y=-x", -HALF)}
    v = limit_exists(parse("x/y"), O)
    (curve, res), = v.counter_witnesses
    assert not v.exists and curve.text() == "y=x^2" and curve.side == 1
    assert res.kind == "plus_infinity"


def test_classify_examples():
    assert classify_point(parse("x*y/(x^2+y^2)"), O) == "bounded_discontinuity"
    assert classify_point(parse("y^2/(x^2+y^4)"), O) == "unbounded"
    assert classify_point(parse("(x+y)/(1+x^2)"), O) == "continuous"
    assert classify_point(parse("x/(x^2+y^2)"), O) == "unbounded"


def test_sequence_examples():
    f = parse("x^2*(y-x)/((y-x)^2+x^4)")
    r = sequence_character(f, O, LazySeries(lambda k: (F(1), F(k))))
    assert [c.value for c in r.characters] == [0, HALF, HALF]
    assert r.result.value == HALF and (r.certified_at, r.confirmed_at) == (2, 3)
    zero = sequence_character(f, O, LazySeries(lambda k: None))
    assert zero.result.same_as(limit_along_curve(f, CurveSpec()))
    g = parse("x*y/(x^2+y^2)")
    # starts at k = 2: the k = 1 term is y = x itself, where the limit is 1/2
    r = sequence_character(g, O, LazySeries(lambda k: (F(1), 2 - F(1, k + 1)), limit=F(2)))
    assert r.status == "certified" and all(c.value == 0 for c in r.characters)


def test_sequence_undecided_when_budget_runs_out():
    f = parse("x^2*(y-x)/((y-x)^2+x^4)")
    r = sequence_character(f, O, LazySeries(lambda k: (F(1), F(k))), max_terms=1)
    assert r.status == "undecided" and r.result is None


def test_sign_certificate_examples():
    assert certify_denominator_sign(1 + X**2 + Y**2, (-1, 1, -1, 1)).kind == "positive"
    assert certify_denominator_sign(X**2 + Y**2, (1, 2, 1, 2)).kind == "positive"
    c = certify_denominator_sign(X**2 - Y**2, (-1, 1, -1, 1))
    assert c.kind == "indefinite" and c.witnesses == ((1, 0), (0, 1))
    assert certify_denominator_sign(-(X**2) - 1, (-1, 1, -1, 1)).kind == "negative"
    c = certify_denominator_sign(X**2 + Y**2, (-1, 1, -1, 1), max_depth=4)
    assert c.kind == "undecided" and c.depth == 4


# --------------------------------------------------------------------------
# properties over the corpus

BOUNDED = [t for t in CORPUS if classify_point(parse(t), O) != "unbounded"]


def _catalog_curves(iv, rng, n):
    """Random catalog curves, many of them hugging the witness branches."""
    seeds = [c.curve or c.witness for c in iv.candidates if (c.curve or c.witness) is not None]
    r2 = sqrt_rational(2)
    for _ in range(n):
        orient = rng.choice(["y_of_x", "x_of_y"])
        side = rng.choice([1, -1])
        base = random_type_i(rng, 3, 5)
        if seeds and rng.random() < 0.6:
            s = rng.choice(seeds)
            orient = s.orientation
            extra = GenSeries(tuple((c, e) for c, e in base.terms if e > (s.base.last_exponent() or 0)))
            base = series_add(s.base, extra)
        last = base.last_exponent() if base.terms else F(1)
        kind = rng.choice([None, "power", "power_over_log", "power_times_log", "irrational"])
        tail = None
        if kind == "irrational":
            tail = Tail("power", make_exponent(math.ceil(last), 1, r2), F(rng.choice([-2, 1, 3])))
        elif kind:
            tail = Tail(kind, last + rng.choice([0, F(1, 2), 1]) if base.terms else F(rng.randint(1, 3)), F(rng.choice([-1, 2])))
            if tail.exponent == last and base.terms:
                tail = None
        try:
            yield CurveSpec(orient, base, tail, side)
        except ValueError:
            continue


@pytest.mark.parametrize("text", BOUNDED[:12])
def test_interval_soundness_and_witnesses(text):
    f = parse(text)
    iv = limiting_value_interval(f, O)
    assert sign(iv.hi - iv.lo) >= 0
    for c in iv.candidates:
        if c.result.is_finite:
            assert sign(c.result.value - iv.lo) >= 0 and sign(iv.hi - c.result.value) >= 0
    for w, v in ((iv.lo_witness, iv.lo), (iv.hi_witness, iv.hi)):
        if w is not None:
            assert limit_along_curve(f, w).same_as(LimitResult.finite(v))
    rng = random.Random(text)
    for c in _catalog_curves(iv, rng, 50):
        res = limit_along_curve(f, c)
        assert res.is_finite, (text, c)
        assert sign(res.value - iv.lo) >= 0 and sign(iv.hi - res.value) >= 0, (text, c.text())


@pytest.mark.parametrize("text", BOUNDED)
def test_point_value_inside_interval(text):
    f = parse(text)
    iv = limiting_value_interval(f, O)
    pv = point_value(f, O)
    if pv is not None:
        assert sign(pv - iv.lo) >= 0 and sign(iv.hi - pv) >= 0


@pytest.mark.parametrize("text", FAMILY + BOUNDED[4:10])
@pytest.mark.parametrize("c", [F(3), F(-2, 5)])
def test_scaling_equivariance(text, c):
    f = parse(text)
    iv = limiting_value_interval(f, O)
    ivc = limiting_value_interval(f.scale(c), O)
    expect = (c * iv.lo, c * iv.hi) if c > 0 else (c * iv.hi, c * iv.lo)
    assert (ivc.lo, ivc.hi) == expect


@pytest.mark.parametrize("text", BOUNDED[:16])
def test_orientation_consistency(text):
    f = parse(text)
    iv = limiting_value_interval(f, O)
    sw = limiting_value_interval(f.swap(), O)
    assert (sw.lo, sw.hi) == (iv.lo, iv.hi)


@pytest.mark.parametrize("text", BOUNDED)
def test_existence_matches_numeric_probe(text):
    f = parse(text)
    v = limit_exists(f, O)
    iv = limiting_value_interval(f, O)
    assert v.exists == (iv.lo == iv.hi)
    if v.exists:
        est = sample_limit_set(f, O, SampleConfig(radii=(F(1, 10**5),), samples_per_radius=512, refine=False))
        assert max(abs(est.min_estimate - float(v.value)), abs(est.max_estimate - float(v.value))) < 1e-2
