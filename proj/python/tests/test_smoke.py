import json
from fractions import Fraction

import pytest

import renormlab


def test_day_norm():
    assert renormlab.day_norm_sq([1, -1]) == Fraction(5, 16)
    assert renormlab.day_norm_sq([Fraction(1, 2)]) == Fraction(1, 16)


def test_adequate_norm_identities():
    x = [Fraction(3), Fraction(-4), Fraction(1, 2)]
    assert renormlab.adequate_norm([[0], [1], [2]], x) == 4
    assert renormlab.adequate_norm([[0, 1, 2]], x) == Fraction(15, 2)


def test_evaluate_json():
    v = json.dumps({"gamma": ["a", "b"], "entries": {"a": "1", "b": "-1"}})
    assert renormlab.evaluate(json.dumps({"kind": "lp", "p": "inf"}), v) == 1
    assert renormlab.evaluate(json.dumps({"kind": "lp", "p": "1"}), v) == 2
    assert isinstance(renormlab.evaluate(json.dumps({"kind": "lp", "p": 2}), v), float)
    with pytest.raises(ValueError):
        renormlab.evaluate("{", v)


def test_generate_and_verify_roundtrip():
    text = renormlab.generate("tree", seed=7, nodes=6)
    assert text == renormlab.generate("tree", seed=7, nodes=6)
    ok, report, artifacts = renormlab.verify(text, suites=["rho", "fragment"], samples=20)
    assert ok and report["pass"]
    assert {s["suite"] for s in report["suites"]} == {"rho", "fragment"}
    valid, errors = renormlab.validate_certificate(json.dumps(artifacts["fragment"]))
    assert valid and errors == []


def test_linf_negative_control():
    inst = {
        "kind": "family",
        "instance": {"gamma": ["a", "b"], "members": [[], ["a"], ["b"]], "provenance": "explicit"},
    }
    ok, report, _ = renormlab.verify(inst, suites=["adequate"], samples=20)
    assert ok
    with pytest.raises(ValueError):
        renormlab.verify(inst, suites=["unknown"])


def test_sigmaq_accepts_fractions():
    text = renormlab.generate("sigmaq", q=[0, Fraction(1, 2), 1])
    nodes = json.loads(text)["instance"]["nodes"]
    assert len(nodes) == 7
    assert "{0,1/2}" in nodes
