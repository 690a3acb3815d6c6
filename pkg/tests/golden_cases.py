"""CLI invocations with committed golden outputs (tests/golden/<name>.json)."""

CASES = {
    "discont_xy": ["discont", "x*y/(x^2+y^2)"],
    "discont_empty": ["discont", "(x+y)/(1+x^2+y^2)"],
    "discont_syntax": ["discont", "x/(y"],
    "range_xy": ["range", "x*y/(x^2+y^2)", "--at", "0,0"],
    "range_sqrt5": ["range", "((x)^2-y^2-x*y)/(x^2+y^2)", "--at", "0,0"],
    "range_continuous": ["range", "(x+y)/(1+x^2)", "--at", "0,0"],
    "limit_side_minus": ["limit", "x^3*y/(x^6+y^2)", "--at", "0,0", "--curve", "y=|x|^3", "--side", "-"],
    "exists_true": ["exists", "x^2*y/(x^2+y^2)", "--at", "0,0"],
    "exists_false": ["exists", "x*y/(x^2+y^2)", "--at", "0,0"],
    "exists_unbounded": ["exists", "x/y", "--at", "0,0"],
    "signcert_indefinite": ["signcert", "x^2-y^2", "--box", "-1,1,-1,1"],
    "oracle_circle": ["oracle", "circle", "x*y/(x^2+y^2)", "--at", "0,0", "--samples", "256", "--seed", "3"],
}

EXIT = {"discont_syntax": 2}


if __name__ == "__main__":
    # regenerate: python3 tests/golden_cases.py (review the diff before committing)
    import contextlib
    import io
    from pathlib import Path

    from limitscope.cli import main

    out_dir = Path(__file__).parent / "golden"
    for name, argv in CASES.items():
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            main(argv)
        (out_dir / f"{name}.json").write_text(buf.getvalue())
