"""Smoke tests for the Python surface of the toolkit.

These do not re-prove the algebra (the C++ suites do that); they check that
the bindings are importable, that values cross the boundary intact, and that
the in-process CLI is byte-identical to the installed executable.
"""

import json
import os
import subprocess

import pytest

import ahx


def test_artin_hasse_prefix():
    assert ahx.artin_hasse_modp(2, 4) == [1, 1, 1, 0, 0]
    coeffs = ahx.artin_hasse_modp(7, 30)
    assert len(coeffs) == 31
    assert coeffs[0] == 1 and coeffs[1] == 1
    assert all(0 <= a < 7 for a in coeffs)


def test_check_defect_support_verdicts():
    good = ahx.check_defect_support(2, ahx.artin_hasse_modp(2, 12))
    assert good["pass"] is True
    assert good["trunc"] == 12
    assert good["first_violation"] is None

    bad = ahx.check_defect_support(2, [1, 1, 0, 0])
    assert bad["pass"] is False
    assert bad["first_violation"]["index"] == [2, 1]
    assert bad["first_violation"]["coeff"] == "1"


def test_synthesize_decompose_round_trip():
    f = ahx.synthesize(5, 2, [1, 1, 0], 10)
    assert f[0] == 1 and f[1] == 2
    assert ahx.check_defect_support(5, f)["pass"] is True

    direct = ahx.decompose(5, f, via="direct")
    padic = ahx.decompose(5, f, via="padic")
    assert direct["residual_ok"] is True
    assert direct["c"] == 2
    assert direct["g"] == [1, 1, 0]
    assert direct == padic  # both routes, same structured result

    failing = ahx.decompose(2, [1, 1, 0, 0, 0])
    assert failing["residual_ok"] is False
    assert failing["report"]["pass"] is False


def test_logderiv_constant():
    assert ahx.logderiv_constant(2, ahx.artin_hasse_modp(2, 8))["c"] == 1
    assert ahx.logderiv_constant(2, [1, 1, 0, 0])["c"] is None


def test_enumerate_small():
    s_property, s_form = ahx.enumerate_small(2, 2)
    assert sorted(s_property) == sorted(s_form)
    assert sorted(s_property) == [[1, 0, 0], [1, 0, 1], [1, 1, 0], [1, 1, 1]]


def test_usage_errors_raise_value_error():
    with pytest.raises(ValueError):
        ahx.artin_hasse_modp(4, 5)  # 4 is not prime
    with pytest.raises(ValueError):
        ahx.check_defect_support(3, [1, 5, 0])  # coefficient out of range
    with pytest.raises(ValueError):
        ahx.synthesize(2, 1, [], 4)  # empty inner series


def test_run_in_process():
    code, out, err = ahx.run(["ep", "--p", "3", "--deg", "6"])
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["p"] == 3 and doc["trunc"] == 6 and doc["ring"] == "fp"
    assert doc["coeffs"] == ahx.artin_hasse_modp(3, 6)

    # pipe the document through a check, still in-process
    code2, out2, err2 = ahx.run(["check", "--mode", "theorem"], stdin_text=out)
    assert code2 == 0 and err2 == ""
    assert json.loads(out2)["report"]["pass"] is True

    # usage errors surface as exit code 2, not exceptions
    code3, _, err3 = ahx.run(["ep", "--p", "9", "--deg", "4"])
    assert code3 == 2 and "not a valid prime" in err3


def test_run_matches_subprocess():
    cli = os.environ.get("AHX_CLI_PATH")
    if not cli:
        pytest.skip("AHX_CLI_PATH not set")

    cases = [
        (["ep", "--p", "2", "--deg", "8"], ""),
        (["enumerate", "--p", "2", "--deg", "3"], ""),
        (["random", "--kind", "property", "--p", "5", "--deg", "15", "--seed", "77"], ""),
    ]
    gen = ahx.run(cases[2][0])[1]
    cases.append((["decompose", "--via", "padic"], gen))
    cases.append((["check", "--mode", "theorem", "--format", "text"], gen))

    for args, stdin_text in cases:
        code, out, err = ahx.run(args, stdin_text=stdin_text)
        proc = subprocess.run(
            [cli] + args, input=stdin_text, capture_output=True, text=True
        )
        assert proc.returncode == code, args
        assert proc.stdout == out, args
        assert proc.stderr == err, args
