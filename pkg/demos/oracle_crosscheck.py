"""Compare exact intervals with brute-force sampling on shrinking circles."""

from fractions import Fraction

from limitscope import SampleConfig, limiting_value_interval, parse_rational_function, sample_limit_set
from limitscope.oracle import relative_hausdorff
from limitscope.polyfun import ORIGIN

cfg = SampleConfig(radii=(Fraction(1, 100), Fraction(1, 1000), Fraction(1, 10000)))
for text in ["x*y/(x^2+y^2)", "x^3*y/(x^6+y^2)", "x^2*(y-x)/((y-x)^2+x^4)", "(x^2-y^3)/(x^2+y^2)"]:
    f = parse_rational_function(text)
    iv = limiting_value_interval(f, ORIGIN)
    est = sample_limit_set(f, ORIGIN, cfg)
    print(f"{text}\n  exact: [{float(iv.lo):+.6f}, {float(iv.hi):+.6f}]")
    for r, lo, hi in est.trend:
        print(f"  r={float(r):.0e}: [{lo:+.6f}, {hi:+.6f}]")
    d = relative_hausdorff((est.min_estimate, est.max_estimate), (float(iv.lo), float(iv.hi)))
    print(f"  relative Hausdorff distance at the smallest radius: {d:.1e}\n")
