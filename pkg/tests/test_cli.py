import contextlib
import csv
import io
import json
import shutil
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from golden_cases import CASES, EXIT
from limitscope.cli import main

GOLDEN = Path(__file__).parent / "golden"
SCHEMA = json.loads(resources.files("limitscope").joinpath("schema/response.schema.json").read_text())


def run(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    code, out = run(CASES[name])
    assert code == EXIT.get(name, 0)
    assert out == (GOLDEN / f"{name}.json").read_text()
    jsonschema.validate(json.loads(out), SCHEMA)


EXTRA = [
    (["range", "x/y", "--at", "0,0"], 2),
    (["range", "(x-1)*y/((x-1)^2+y^2)", "--at", "1,0", "--timing"], 0),
    (["range", "x*y/(x^2+y^2)", "--at", "-1,0", "--json"], 0),
    (["limit", "x^2*(y-x)/((y-x)^2+x^4)", "--at", "0,0", "--curve", "y=x+x^2*ln|x|"], 0),
    (["limit", "x/y", "--at", "0,0", "--curve", "y=x^2", "--side", "-"], 0),
    (["limit", "x/y", "--at", "0,0", "--curve", "y=x^(1/2)", "--side", "-"], 2),
    (["exists", "y^2/(x^2+y^4)", "--at", "0,0"], 0),
    (["signcert", "1/(x^2+y^2)", "--box", "-1,1,-1,1", "--max-depth", "3"], 1),
    (["signcert", "1+x^2+y^2", "--box", "-1,1,-1,1"], 0),
    (["signcert", "x", "--box", "1,0,0,1"], 2),
    (["oracle", "curve", "x*y/(x^2+y^2)", "--at", "0,0", "--curve", "y=|x|^(3/2)"], 0),
    (["discont", "x*y/((x^2+y^2)*((x-1)^2+y^2))", "--box", "-2,2,-2,2"], 0),
    (["discont", "x+", "--box", "0,1,0,1"], 2),
]


@pytest.mark.parametrize("argv,code", EXTRA)
def test_responses_follow_schema(argv, code):
    got, out = run(argv)
    assert got == code
    jsonschema.validate(json.loads(out), SCHEMA)


def test_timing_only_when_asked():
    _, out = run(["exists", "x*y/(x^2+y^2)", "--at", "0,0"])
    assert "timing" not in json.loads(out)
    _, out = run(["exists", "x*y/(x^2+y^2)", "--at", "0,0", "--timing"])
    assert json.loads(out)["timing"]["seconds"] >= 0


def test_plot_data_csv():
    code, out = run(["range", "x*y/(x^2+y^2)", "--at", "0,0", "--plot-data", "--samples", "128"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["record", "label", "side", "param", "x", "y", "value"]
    kinds = {r[0] for r in rows[1:]}
    assert kinds == {"curve", "oracle_min", "oracle_max"}
    diag = [float(r[6]) for r in rows if r[0] == "curve" and r[1] == "y=x" and r[2] == "+"]
    assert diag and all(v == pytest.approx(0.5) for v in diag)


def test_seed_gives_identical_output():
    argv = ["oracle", "circle", "x^3*y/(x^6+y^2)", "--at", "0,0", "--samples", "128", "--seed", "11"]
    assert run(argv) == run(argv)


def test_text_summary():
    code, out = run(["range", "((x)^2-y^2-x*y)/(x^2+y^2)", "--at", "0,0", "--text"])
    assert code == 0 and "4*z^2-5 = 0" in out and "1.11803398875" in out


@pytest.mark.skipif(shutil.which("limitscope") is None, reason="console script not installed")
def test_console_script():
    p = subprocess.run(["limitscope", "discont", "x/(y"], capture_output=True, text=True)
    assert p.returncode == 2 and json.loads(p.stdout)["error"]["column"] == 5


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "limitscope", "exists", "x^2*y/(x^2+y^2)", "--at", "0,0"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and json.loads(p.stdout)["result"]["exists"] is True
