import json
import math
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

import invmetrics

SCHEMA_DIR = Path(os.environ.get("INVMETRICS_SCHEMA_DIR", Path(__file__).parents[2] / "schemas"))
CLI = os.environ.get("INVMETRICS_CLI")


@pytest.fixture(scope="module")
def schema():
    return json.loads((SCHEMA_DIR / "domain.schema.json").read_text())


def test_reinhardt_green():
    v = invmetrics.evaluate({"type": "reinhardt", "alpha": [1, 2, 2]}, "green", [0, 0, 0], [0.5, 0.5, 0.5])
    assert v["status"] == "Exact"
    assert v["lower"] == pytest.approx(0.5, abs=1e-15)


def test_disc_normalization():
    for i in range(10):
        t = 0.1 * i
        v = invmetrics.evaluate({"type": "disc"}, "mobius", [0], [t])
        assert v["upper"] == pytest.approx(t, abs=1e-15)


def test_hartogs_proven_value():
    v = invmetrics.evaluate({"type": "hartogs", "variant": "exam1"}, "caratheodory", [0, 0, 0], [1, 0, 0])
    assert v["status"] == "ProvenExact"
    assert v["upper"] == 0.0
    assert "citation" in v


def test_errors_are_raised():
    with pytest.raises(invmetrics.Error, match="DomainViolation"):
        invmetrics.evaluate({"type": "disc"}, "green", [0], [1.5])
    with pytest.raises(invmetrics.Error):
        invmetrics.evaluate({"type": "disc", "extra": 1}, "green", [0], [0.1])


def test_phi_series():
    value, err = invmetrics.phi("exam3", [0])
    assert value == pytest.approx(-0.93754825431584375, abs=max(err, 1e-12))
    value, err = invmetrics.phi("exam1", [0, 0])
    assert math.isfinite(value) and err <= 1e-8


def test_contains():
    assert invmetrics.contains({"type": "reinhardt", "alpha": [1, 1]}, [0.5, 1.5])
    assert not invmetrics.contains({"type": "reinhardt", "alpha": [1, 1]}, [1.5, 1.5])


def test_demos_reproduce():
    for name in invmetrics.demo_names():
        table = invmetrics.demo(name)
        assert table["holds"], name
        assert all(len(r) == len(table["columns"]) for r in table["rows"])


def test_verify_report_is_deterministic():
    a = invmetrics.verify("chain", seed=42, samples=200)
    b = invmetrics.verify("chain", seed=42, samples=200)
    assert a == b
    assert a["passed"]


@pytest.mark.parametrize(
    "doc",
    [
        {"type": "disc"},
        {"type": "reinhardt", "alpha": [1, 2, 2]},
        {"type": "reinhardt", "alpha": [1.4142135623730951, 1], "class": "generic"},
        {"type": "balanced", "h": {"kind": "monomial", "theta": [0.5, 0.5]}},
        {
            "type": "balanced",
            "h": {
                "kind": "max_of",
                "terms": [
                    {"kind": "weighted_norm", "weights": [1, 0], "exponent": "inf"},
                    {"kind": "monomial", "theta": [0.5, 0.5], "scale": 2},
                ],
            },
        },
        {"type": "hartogs", "variant": "exam3", "k": 4},
    ],
)
def test_schema_accepts_what_the_parser_accepts(schema, doc):
    jsonschema.validate(doc, schema)
    invmetrics.contains(doc, [0.0] * {"disc": 1}.get(doc["type"], len(doc.get("alpha", [0, 0]))))


@pytest.mark.parametrize(
    "doc",
    [
        {"type": "disc", "extra": 1},
        {"type": "annulus"},
        {"type": "reinhardt"},
        {"type": "hartogs", "variant": "exam2"},
    ],
)
def test_schema_rejects_what_the_parser_rejects(schema, doc):
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(doc, schema)
    with pytest.raises(invmetrics.Error):
        invmetrics.contains(doc, [0.0])


@pytest.mark.skipif(CLI is None, reason="CLI path not provided")
def test_cli_eval_json(tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"type": "reinhardt", "alpha": [1, 1]}))
    out = subprocess.run(
        [CLI, "eval", str(spec), "--metric", "sibony-metric", "--order", "6", "--base", "0,0", "--dir", "1,1"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 3
    assert json.loads(out.stdout)["status"] == "Unknown"
