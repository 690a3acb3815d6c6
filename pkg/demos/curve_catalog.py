"""Limits of one function along curves that differ only in their tails.

f = x^2 (y-x) / ((y-x)^2 + x^4) tends to 1/2 along y = x + x^2 but to 0
along nearby curves whose tail carries a logarithm or an irrational power,
and the partial sums of the series x + x^2 + x^3 + ... settle on 1/2.
"""

from fractions import Fraction

from limitscope import limit_along_curve, parse_curve, parse_rational_function, sequence_character
from limitscope.genseries import LazySeries
from limitscope.polyfun import ORIGIN

f = parse_rational_function("x^2*(y-x)/((y-x)^2+x^4)")
for text in ["y=x+x^2", "y=x+x^2*ln|x|", "y=x+x^2/ln|x|", "y=x+|x|^sqrt(2)", "y=x+2*x^2"]:
    for side in (1, -1):
        r = limit_along_curve(f, parse_curve(text, side))
        print(f"{text:18s} side {'+' if side > 0 else '-'}: {r.value if r.is_finite else r.kind}")

seq = sequence_character(f, ORIGIN, LazySeries(lambda k: (Fraction(1), Fraction(k))))
print("\npartial sums of x + x^2 + x^3 + ...:")
for n, c in enumerate(seq.characters, 1):
    print(f"  N={n}: {c.value}")
print(f"  {seq.status}: value {seq.result.value} from N={seq.certified_at}")

g = parse_rational_function("x^3*y/(x^6+y^2)")
print("\nside matters for x^3*y/(x^6+y^2) on y=|x|^3:")
for side in (1, -1):
    print(f"  side {'+' if side > 0 else '-'}: {limit_along_curve(g, parse_curve('y=|x|^3', side)).value}")
