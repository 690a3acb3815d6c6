"""Rational functions bounded near the origin, used by the oracle containment checks."""

# the family y^m x^n / (y^(2m) + x^(2n)) for (m, n) in {1, 2}^2
FAMILY = [
    "y*x/(y^2+x^2)",
    "y*x^2/(y^2+x^4)",
    "y^2*x/(y^4+x^2)",
    "y^2*x^2/(y^4+x^4)",
]

OTHERS = [
    "(x^2-y^2-x*y)/(x^2+y^2)",
    "x^3*y/(x^6+y^2)",
    "x^2*(y-x)/((y-x)^2+x^4)",
    "(x^4-y^2)/(x^4+y^2)",
    "x^2*y/(x^2+y^2)",
    "(x+y)/(1+x^2)",
    "(x^2-y^2)/(x^2+y^2)",
    "(x^3+y^3)/(x^2+y^2)",
    "(2*x^2+3*x*y-y^2)/(x^2+y^2)",
    "x^2*y^2/(x^2*y^2+(x-y)^2)",
    "x^4*y^4/(x^2+y^4)^3",
    "(x^2+y^2)/(2*x^2-2*x*y+2*y^2)",
    "x*y/(x^2+x*y+y^2)",
    "x*(x^3-3*x*y^2)/(x^2+y^2)^2",
    "x^4/(x^4+y^2)",
    "y^4/(x^6+y^4)",
    "x*y^3/(x^2+y^6)",
    "(x^2-y^3)/(x^2+y^2)",
    "(x*y+y^3)/(x^2+y^2)",
    "(y-x^2)^2/(y^2+x^4)",
    "x^3/(x^2+y^2)+y",
    "x^5*y/(x^6+y^2)",
    "(3*x^2*y^2-x^4)/(x^4+y^4)",
    "(y^2-x^3)^2/((y^2-x^3)^2+x^6)",
    "((y-x)^2-x^4)/((y-x)^2+x^4)",
    "x*y*(x+y)/(x^2+y^2)",
    "x^2*y^2/(x^2+y^2)^2",
    "(5*x*y-x^2)/(3*x^2+y^2)",
    "x^2*y/(x^4+x^2*y+y^2)",
    "(x+2*y)^2/(x^2+4*y^2)",
    "x*y^2*(x-y)/(x^2+y^2)^2",
]

CORPUS = FAMILY + OTHERS
