import json
import os
from fractions import Fraction

import pytest

import kappamu


def fixture(name):
    return os.path.join(os.environ["KAPPAMU_FIXTURES"], name)


def test_expression_algebra():
    x = kappamu.parse("x")
    y = kappamu.parse("y")
    assert str((x + y) * (x - y)) == "x^2 - y^2"
    assert ((x + y) * (x - y) - x * x).is_zero is False
    assert (x * x - y * y) == (x + y) * (x - y)

    e = kappamu.parse("2*x*z^-6")
    assert e.diff("z") == kappamu.parse("-12*x*z^-7")
    assert e.eval({"x": 3, "y": 1, "z": 2}) == Fraction(3, 32)
    assert e.eval({"x": Fraction(1, 2), "y": 0, "z": "1/2"}) == Fraction(64)

    q = (x * x - y * y).divide_exact(x - y)
    assert q == x + y
    assert x.divide_exact(x + y) is None


def test_errors():
    with pytest.raises(kappamu.ParseError):
        kappamu.parse("x + # z")
    with pytest.raises(kappamu.DomainError):
        kappamu.parse("x", coords=["x", "y"]).diff("q")
    with pytest.raises(kappamu.EvalError):
        kappamu.parse("z^-1").eval({"x": 1, "y": 1, "z": 0})


def test_verify_generalized_fixture():
    code, out = kappamu.verify_file(fixture("r3_generalized_kmu_plus.cpm"))
    assert code == 0
    report = json.loads(out)
    assert report["nullity"]["detected"] is True
    assert report["nullity"]["kappa"] == "1 - z^-8"
    assert report["nullity"]["mu"] == "2 + 2*z^-4"
    assert report["summary"]["fail"] == 0


def test_verify_sasakian_fixture():
    code, out = kappamu.verify_file(
        fixture("heisenberg_sasakian.cpm"), numeric_fallback=True, seed=7
    )
    assert code == 0
    report = json.loads(out)
    assert report["sasakian"] is True
    assert report["nullity"]["mu_indeterminate"] is True
    assert all(c["ok"] for c in report["numeric_checks"])


def test_deform():
    code, out = kappamu.deform_file(
        fixture("r3_generalized_kmu_plus.cpm"), Fraction(1, 2)
    )
    assert code == 0
    report = json.loads(out)
    assert report["deformed"]["kappa"] == "1 - 4*z^-8"
    assert report["deformed"]["kappa"] == report["predicted"]["kappa"]
    assert report["deformed"]["mu"] == report["predicted"]["mu"]


def test_catalog():
    entries = kappamu.catalog()
    ids = {e["id"] for e in entries}
    assert {"62", "089", "022", "contact"} <= ids
    assert all(e["statement"] for e in entries)
