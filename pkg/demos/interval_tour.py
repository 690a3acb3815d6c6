"""Limiting-value intervals, witness curves and existence verdicts at the origin."""

from limitscope import classify_point, limit_exists, limiting_value_interval, parse_rational_function
from limitscope.polyfun import ORIGIN
from limitscope.serialize import scalar_json


def show(v):
    j = scalar_json(v)
    return j["value"] if j["type"] == "rational" else f"root of {j['minpoly_text']} near {j['decimal']}"

EXAMPLES = [
    "x*y/(x^2+y^2)",
    "(x^2-y^2-x*y)/(x^2+y^2)",
    "x^3*y/(x^6+y^2)",
    "x^2*y/(x^2+y^2)",
    "y^2/(x^2+y^4)",
]

for text in EXAMPLES:
    f = parse_rational_function(text)
    kind = classify_point(f, ORIGIN)
    print(f"{text}\n  classification: {kind}")
    if kind == "unbounded":
        v = limit_exists(f, ORIGIN)
        (curve, res), = v.counter_witnesses
        print(f"  blows up along {curve} (side {'+' if curve.side > 0 else '-'}): {res.kind}\n")
        continue
    iv = limiting_value_interval(f, ORIGIN)
    print(f"  limiting values: [{show(iv.lo)}, {show(iv.hi)}]")
    print(f"  low end along {iv.lo_witness}, high end along {iv.hi_witness}")
    v = limit_exists(f, ORIGIN)
    print(f"  limit exists: {v.exists}" + (f" (value {show(v.value)})" if v.exists else "") + "\n")
