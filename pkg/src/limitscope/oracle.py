"""Brute-force numeric estimates used to cross-check the symbolic results.

Nothing here is consulted by the symbolic code.  Points are generated in
floating point, snapped to dyadic rationals and evaluated exactly with
integer arithmetic, so expanded polynomials with heavy cancellation near the
point (``(y-x)^2 + x^4`` close to the diagonal, say) are still evaluated
correctly.  Only the final quotient is rounded to a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .asympt import CurveSpec
from .polyfun import BiPoly, ORIGIN, Point, RationalFn, translate

__all__ = [
    "SampleConfig", "OracleEstimate", "CurveSamples", "DegenerateSampling",
    "sample_limit_set", "sample_along_curve", "relative_hausdorff",
]

_BITS = 64


class DegenerateSampling(ValueError):
    pass


@dataclass(frozen=True)
class SampleConfig:
    radii: tuple = (Fraction(1, 100), Fraction(1, 1000), Fraction(1, 10000))
    samples_per_radius: int = 4096
    jitter_seed: int = 0
    refine: bool = True

    def __post_init__(self):
        rs = [Fraction(r) for r in self.radii]
        if not rs or any(r <= 0 for r in rs) or any(a <= b for a, b in zip(rs, rs[1:])):
            raise ValueError("radii must be positive and strictly decreasing")
        if self.samples_per_radius < 64:
            raise ValueError("samples_per_radius must be at least 64")
        object.__setattr__(self, "radii", tuple(rs))


@dataclass(frozen=True)
class OracleEstimate:
    min_estimate: float
    max_estimate: float
    trend: tuple  # ((radius, min, max), ...)
    argmin: tuple = ()
    argmax: tuple = ()


class _ExactEvaluator:
    """Exact evaluation of ``p/q`` at dyadic points ``(X, Y) / 2**K``."""

    def __init__(self, f: RationalFn):
        if not (f.num.is_rational() and f.den.is_rational()):
            raise ValueError("the numeric oracle needs rational coefficients")
        self.num = self._integerize(f.num)
        self.den = self._integerize(f.den)

    @staticmethod
    def _integerize(P: BiPoly):
        den = math.lcm(*(Fraction(c).denominator for c in P.terms.values())) if P.terms else 1
        d = P.total_degree() if P.terms else 0
        terms = [(i, j, int(Fraction(c) * den)) for (i, j), c in P.terms.items()]
        return terms, den, d

    @staticmethod
    def _hom(poly, X: int, Y: int, K: int) -> int:
        terms, _, d = poly
        return sum(c * X**i * Y**j << (K * (d - i - j)) for i, j, c in terms)

    def __call__(self, X: int, Y: int, K: int):
        qv = self._hom(self.den, X, Y, K)
        if qv == 0:
            return None
        pv = self._hom(self.num, X, Y, K)
        (_, dp, degp), (_, dq, degq) = self.num, self.den
        # p/q = (pv / 2^(K degp) / dp) / (qv / 2^(K degq) / dq)
        shift = K * (degq - degp)
        a, b = pv * dq, qv * dp
        if shift >= 0:
            a <<= shift
        else:
            b <<= -shift
        return a / b


def _snap(v: float, K: int) -> int:
    return int(round(math.ldexp(v, K)))


def _circle_values(ev: _ExactEvaluator, r: float, K: int, thetas):
    xs = np.cos(thetas) * r
    ys = np.sin(thetas) * r
    out = np.full(len(thetas), np.nan)
    for idx, (x, y) in enumerate(zip(xs, ys)):
        v = ev(_snap(float(x), K), _snap(float(y), K), K)
        if v is not None:
            out[idx] = v
    return out


def _refine(ev, r, K, theta, width, sense, rounds=40, m=24):
    """Zoom in on a local extreme; ``sense`` is +1 for max, -1 for min."""
    best_t = theta
    best_v = _circle_values(ev, r, K, np.array([theta]))[0]
    if np.isnan(best_v):
        best_v = -math.inf * sense
    for _ in range(rounds):
        ts = np.linspace(best_t - width, best_t + width, m)
        vs = _circle_values(ev, r, K, ts)
        if np.all(np.isnan(vs)):
            break
        i = int(np.nanargmax(vs) if sense > 0 else np.nanargmin(vs))
        if sense * (vs[i] - best_v) >= 0:
            best_t, best_v = float(ts[i]), float(vs[i])
        width *= 4.0 / m
        if width < 1e-17:
            break
    return best_t, best_v


def _local_extremes(vals, sense, k):
    v = np.where(np.isnan(vals), -np.inf if sense > 0 else np.inf, vals) * sense
    left, right = np.roll(v, 1), np.roll(v, -1)
    idx = np.nonzero((v >= left) & (v >= right) & np.isfinite(v))[0]
    idx = idx[np.argsort(-v[idx])]
    return list(idx[:k])


def sample_limit_set(f: RationalFn, p: Point = ORIGIN, cfg: SampleConfig | None = None) -> OracleEstimate:
    """Extremes of ``f`` on circles about ``p`` (one row of ``trend`` per radius)."""
    cfg = cfg or SampleConfig()
    ev = _ExactEvaluator(translate(f, p))
    rng = np.random.default_rng(cfg.jitter_seed)
    n = cfg.samples_per_radius
    trend = []
    arg = None
    for radius in cfg.radii:
        r = float(radius)
        K = _BITS - math.frexp(r)[1]
        step = 2 * math.pi / n
        thetas = np.arange(n) * step + rng.uniform(-0.25, 0.25, n) * step
        vals = _circle_values(ev, r, K, thetas)
        if np.all(np.isnan(vals)):
            raise DegenerateSampling("every sample hit a zero of the denominator")
        lo_t = float(thetas[int(np.nanargmin(vals))])
        hi_t = float(thetas[int(np.nanargmax(vals))])
        lo, hi = float(np.nanmin(vals)), float(np.nanmax(vals))
        if cfg.refine:
            for sense in (1, -1):
                for i in _local_extremes(vals, sense, 6):
                    t, v = _refine(ev, r, K, float(thetas[i]), 2 * step, sense)
                    if sense > 0 and v > hi:
                        hi, hi_t = v, t
                    if sense < 0 and v < lo:
                        lo, lo_t = v, t
        trend.append((radius, lo, hi))
        arg = (lo_t, hi_t, r)
    lo_t, hi_t, r = arg
    pt = lambda t: (float(p.x0) + r * math.cos(t), float(p.y0) + r * math.sin(t))
    return OracleEstimate(trend[-1][1], trend[-1][2], tuple(trend), pt(lo_t), pt(hi_t))


def relative_hausdorff(a: tuple, b: tuple) -> float:
    """Hausdorff distance of two intervals relative to ``max(1, |endpoints|)``."""
    d = max(abs(a[0] - b[0]), abs(a[1] - b[1]))
    scale = max(1.0, *(abs(v) for v in (*a, *b)))
    return d / scale


@dataclass(frozen=True)
class CurveSamples:
    params: tuple
    values: tuple  # None where the denominator vanished
    skipped: tuple
    limit: float | None
    order: float | None


def sample_along_curve(f: RationalFn, c: CurveSpec, params) -> CurveSamples:
    """Values of ``f`` along ``c`` with a Richardson estimate of the limit."""
    params = tuple(float(s) for s in params)
    if any(not 0 < s <= 0.5 for s in params) or any(a <= b for a, b in zip(params, params[1:])):
        raise ValueError("parameters must be decreasing values in (0, 1/2]")
    g = translate(f, c.anchor)
    values, skipped = [], []
    for s in params:
        x, y = c.with_anchor(ORIGIN).point_at(s)
        qv = g.den(Fraction(x), Fraction(y))
        if qv == 0:
            values.append(None)
            skipped.append(s)
            continue
        values.append(float(g.num(Fraction(x), Fraction(y)) / qv))
    pts = [(s, v) for s, v in zip(params, values) if v is not None]
    limit, order = _richardson(pts)
    return CurveSamples(params, tuple(values), tuple(skipped), limit, order)


def _richardson(pts):
    if not pts:
        return None, None
    if len(pts) < 3:
        return pts[-1][1], None
    (s0, v0), (s1, v1), (s2, v2) = pts[-3:]
    d1, d2 = v0 - v1, v1 - v2
    scale = max(1.0, abs(v2))
    if abs(d1) <= 1e-14 * scale or abs(d2) <= 1e-14 * scale:
        return v2, None
    ratio = d1 / d2
    if ratio <= 0:
        return v2, None
    order = math.log(ratio) / math.log(s1 / s2)
    if order <= 0:
        return (math.copysign(math.inf, v2 - v1), order)
    w1, w2 = s1**order, s2**order
    return (v2 * w1 - v1 * w2) / (w1 - w2), order
