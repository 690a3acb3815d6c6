"""Random instance generators shared by the property tests and the acceptance suite."""

import random
from fractions import Fraction as F

from limitscope.genseries import GenSeries
from limitscope.polyfun import BiPoly


def random_type_i(rng: random.Random, max_terms=6, max_exp=10, denominators=(1, 2, 3, 4)):
    """Type (i) series with rational exponents in [1, max_exp]."""
    k = rng.randint(1, max_terms)
    exps = set()
    while len(exps) < k:
        d = rng.choice(denominators)
        exps.add(F(rng.randint(d, max_exp * d), d))
    terms = []
    for e in sorted(exps):
        c = F(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 4))
        terms.append((c, e))
    return GenSeries(tuple(terms))


def random_bipoly(rng: random.Random, deg_x=3, deg_y=3, density=0.5, origin_zero=True):
    terms = {}
    for i in range(deg_x + 1):
        for j in range(deg_y + 1):
            if (i, j) == (0, 0) and origin_zero:
                continue
            if rng.random() < density:
                v = rng.randint(-5, 5)
                if v:
                    terms[(i, j)] = F(v)
    return BiPoly(terms)


def residual_ok(P, branch) -> bool:
    """Substituting the branch leaves no term of exponent <= residual_order."""
    from limitscope.asympt import CurveSpec, substitute_poly
    from limitscope.exactalg import compare_exponents

    c = CurveSpec("y_of_x", branch.series, None, branch.side)
    if branch.complete:
        return not substitute_poly(P, c, F(10**6)).terms
    r = branch.residual_order
    ser = substitute_poly(P, c, r)
    return all(compare_exponents(e, r) > 0 for (e, _) in ser.terms)


def strip_vertical(P):
    m = P.x_adic_valuation()
    return P.divide_x_power(m) if m else P
