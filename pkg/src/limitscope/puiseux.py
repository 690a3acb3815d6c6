"""Real Newton-Puiseux expansion of a plane curve germ at the origin.

Work happens in the absolute formulation: after ``N`` terms the state is
``Q_N(s, w) = P(side*s, Phi_N(s) + w)``, stored as ``{(a, j): coeff}`` for
``coeff * s^a * w^j``.  The next exponent is the slope ``gamma`` of a lower
Newton-polygon edge of ``Q_N`` with ``gamma > e_N``; the next coefficient is
a nonzero real root of the edge's characteristic polynomial.  Once a simple
root has been used the branch is certified: it is the unique solution germ
extending ``Phi_N`` and later terms follow one linear step at a time.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import comb, lcm

from .exactalg import DEFAULT_DEGREE_CAP, real_roots_over_field
from .genseries import GenSeries
from .polyfun import BiPoly, squarefree_factors

__all__ = ["NewtonEdge", "Branch", "Branches", "newton_polygon", "real_branches", "max_terms_default"]


def max_terms_default() -> int:
    return int(os.environ.get("LIMITSCOPE_MAX_DEPTH", "48"))


@dataclass(frozen=True)
class NewtonEdge:
    slope: Fraction
    support: tuple
    char_poly: tuple  # ascending coefficients in z


def _lower_edges(points: dict):
    """Lower hull edges of ``{(j, a): coeff}`` with negative slope in (j, a).

    Yields ``(gamma, value, support)`` where ``value = a + j*gamma`` on the
    edge and ``support`` lists the ``(j, a)`` points on it, left to right.
    """
    best: dict[int, Fraction] = {}
    for (a, j) in points:
        if j not in best or a < best[j]:
            best[j] = a
    js = sorted(best)
    if not js:
        return []
    edges = []
    cur = js[0]
    while True:
        a0 = best[cur]
        slope, nxt = None, None
        for j in js:
            if j <= cur:
                continue
            sl = (best[j] - a0) / (j - cur)
            if slope is None or sl < slope or (sl == slope and j > nxt):
                slope, nxt = sl, j
        if slope is None or slope >= 0:
            break
        gamma = -slope
        value = a0 + cur * gamma
        support = tuple(
            sorted((j, a) for (a, j) in points if a + j * gamma == value and cur <= j <= nxt)
        )
        edges.append((gamma, value, support))
        cur = nxt
    return edges


def _char_poly(points: dict, support) -> list:
    j0 = support[0][0]
    out = [Fraction(0)] * (support[-1][0] - j0 + 1)
    for j, a in support:
        out[j - j0] = points[(a, j)]
    return out


def newton_polygon(P: BiPoly) -> list[NewtonEdge]:
    """Edges of the lower-left Newton polygon of ``P`` (slope = y-exponent)."""
    if P.is_zero() or P.constant_term() != 0:
        return []
    pts = {(Fraction(i), j): c for (i, j), c in P.terms.items()}
    out = []
    for gamma, _, support in _lower_edges(pts):
        chi = _char_poly(pts, support)
        out.append(NewtonEdge(gamma, tuple((int(a), j) for j, a in support), tuple(chi)))
    return out


def _substitute(Q: dict, c, gamma: Fraction) -> dict:
    """``Q(s, c*s^gamma + w)``."""
    out: dict = {}
    cpow = [Fraction(1)]
    maxj = max(j for _, j in Q)
    for _ in range(maxj):
        cpow.append(cpow[-1] * c)
    for (a, j), v in Q.items():
        for k in range(j + 1):
            t = v * comb(j, k) * cpow[j - k]
            if t == 0:
                continue
            key = (a + gamma * (j - k), k)
            out[key] = out.get(key, 0) + t
    return {k: v for k, v in out.items() if v != 0}


def _divide_w(Q: dict):
    """Strip the largest power of ``w`` dividing ``Q``."""
    k = min(j for _, j in Q)
    if k == 0:
        return Q, 0
    return {(a, j - k): v for (a, j), v in Q.items()}, k


@dataclass(frozen=True)
class Branch:
    """A real solution germ ``y = series(s)`` on one side.

    ``residual_order``: substituting ``series`` leaves only exponents above
    it (``None`` for an exact solution).  ``tail_order``: every further term
    of the true branch has exponent at least this (``None`` when the branch
    is complete).
    """

    series: GenSeries
    side: int
    ramification: int
    residual_order: object
    complete: bool
    certified: bool
    tail_order: object
    multiplicity: int = 1
    numeric_only: bool = False
    numeric_next: tuple | None = None
    _state: dict | None = field(default=None, repr=False, compare=False)

    def leading(self):
        return self.series.terms[0] if self.series.terms else None

    def extend(self, n: int = 1) -> "Branch":
        """Append ``n`` more terms to a certified, incomplete branch."""
        if self.complete or n <= 0:
            return self
        if not self.certified or self._state is None:
            raise ValueError("only certified branches extend uniquely")
        terms = list(self.series.terms)
        Q = self._state
        residual = self.residual_order
        for _ in range(n):
            step = _simple_step(Q)
            if step is None:
                break
            c, gamma, value = step
            Q = _substitute(Q, c, gamma)
            terms.append((c, gamma))
            residual = value
            if not any(j == 0 for _, j in Q):
                return replace(
                    self, series=_gs(terms), ramification=_ram(terms),
                    residual_order=None, complete=True, tail_order=None, _state=None,
                )
        return replace(
            self, series=_gs(terms), ramification=_ram(terms),
            residual_order=residual, tail_order=_simple_tail(Q), _state=Q,
        )


class Branches(list):
    """List of branches; ``vertical`` is the multiplicity of ``x = 0``."""

    def __init__(self, items=(), vertical: int = 0):
        super().__init__(items)
        self.vertical = vertical


def _gs(terms) -> GenSeries:
    # germs tangent to the vertical axis have a first exponent below 1
    terms = tuple(terms)
    return GenSeries(terms, relaxed=bool(terms) and terms[0][1] < 1)


def _ram(terms) -> int:
    r = 1
    for _, e in terms:
        r = lcm(r, Fraction(e).denominator)
    return r


def _simple_step(Q: dict):
    """Next term of a certified branch: ``(coeff, gamma, edge_value)``."""
    a0 = min((a for a, j in Q if j == 0), default=None)
    a1 = min((a for a, j in Q if j == 1), default=None)
    if a0 is None or a1 is None:
        return None
    gamma = a0 - a1
    c = -Q[(a0, 0)] / Q[(a1, 1)]
    return c, gamma, a0


def _simple_tail(Q: dict):
    a0 = min((a for a, j in Q if j == 0), default=None)
    a1 = min((a for a, j in Q if j == 1), default=None)
    if a0 is None:
        return None
    return a0 - a1


def _open_tail(Q: dict, e_last):
    gam = [g for g, _, _ in _lower_edges(Q) if g > e_last]
    return min(gam) if gam else None


def _expand(Q0: dict, side: int, depth, cap: int, max_terms: int, mult: int) -> list[Branch]:
    out: list[Branch] = []
    stack = [((), Q0, Fraction(0), False, None)]
    while stack:
        terms, Q, e_last, certified, residual = stack.pop()
        Q, k = _divide_w(Q)
        if k:
            out.append(Branch(_gs(terms), side, _ram(terms), None, True, True, None, mult))
            if certified:
                continue
        if certified:
            if e_last > depth or len(terms) >= max_terms:
                out.append(Branch(_gs(terms), side, _ram(terms), residual, False, True,
                                  _simple_tail(Q), mult, _state=Q))
                continue
            step = _simple_step(Q)
            if step is None:
                continue
            c, gamma, value = step
            stack.append((terms + ((c, gamma),), _substitute(Q, c, gamma), gamma, True, value))
            continue
        if len(terms) >= max_terms:
            out.append(Branch(_gs(terms), side, _ram(terms), residual, False, False,
                              _open_tail(Q, e_last), mult))
            continue
        for gamma, value, support in _lower_edges(Q):
            if gamma <= e_last:
                continue
            chi = _char_poly(Q, support)
            roots, skipped = real_roots_over_field(chi, cap)
            for c, mu in roots:
                stack.append((terms + ((c, gamma),), _substitute(Q, c, gamma), gamma, mu == 1, value))
            for approx, _ in skipped:
                out.append(Branch(_gs(terms), side, _ram(terms), residual, False, False,
                                  gamma, mult, numeric_only=True, numeric_next=(approx, gamma)))
    return out


def _branch_key(b: Branch):
    lead = b.series.terms[0] if b.series.terms else (0, 0)
    return (float(lead[0]), float(lead[1]), tuple((float(c), float(e)) for c, e in b.series.terms))


def real_branches(
    P: BiPoly,
    side: int = 1,
    depth=Fraction(0),
    cap: int = DEFAULT_DEGREE_CAP,
    max_terms: int | None = None,
    squarefree: bool | None = None,
) -> Branches:
    """Real germs ``y = Phi(s)`` of ``P = 0`` through the origin on one side.

    ``s = |x|`` with ``x = side*s``.  Expansion continues past ``depth`` and
    until the branch is certified, exact, or ``max_terms`` is reached.  Rational
    input is split into squarefree factors first (``squarefree=False`` skips
    that); the vertical axis ``x = 0`` is reported in ``.vertical``.
    """
    if side not in (1, -1):
        raise ValueError("side must be +1 or -1")
    if P.is_zero():
        raise ValueError("zero polynomial")
    max_terms = max_terms_default() if max_terms is None else max_terms
    depth = Fraction(depth)
    if squarefree is None:
        squarefree = P.is_rational()
    factors = squarefree_factors(P) if squarefree else [(P, 1)]
    vertical = 0
    out: list[Branch] = []
    for F, mult in factors:
        m = F.x_adic_valuation()
        if m:
            vertical += m * mult
            F = F.divide_x_power(m)
        if F.total_degree() <= 0 or F.constant_term() != 0:
            continue
        G = F if side > 0 else F.reflect_x()
        Q0 = {(Fraction(i), j): c for (i, j), c in G.terms.items()}
        out.extend(_expand(Q0, side, depth, cap, max_terms, mult))
    out.sort(key=_branch_key)
    return Branches(out, vertical)
