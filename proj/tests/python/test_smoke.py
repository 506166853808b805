import cmath
import json
import math
import os

import pytest

import quintic


def close(z, w, tol=5e-10):
    return abs(z.real - w.real) <= tol and abs(z.imag - w.imag) <= tol


def test_branch_root_seam():
    w = quintic.branch_root(-1, 5)
    assert abs(w - cmath.exp(-1j * math.pi / 5)) < 1e-15


def test_form3_parameters_example_two():
    xi, theta, conjugated = quintic.form3_parameters(3.08 + 1.68j)
    assert xi == pytest.approx(75.75327872, abs=5e-9)
    assert theta == pytest.approx(0.228841153, abs=5e-10)
    assert not conjugated


def test_solve_form1_example_one():
    sol = quintic.solve_form1(0.01)
    assert close(sol["root"], 0.7095957339 + 0.7071176748j)
    assert close(sol["iterates"][3], 0.7095957376 + 0.7071176682j)
    assert sol["residual"] < 1e-12


def test_all_roots_match_oracle():
    a = 3.08 + 1.68j
    roots = [r["value"] for r in quintic.all_roots_form1(a)]
    assert [r["k"] for r in quintic.all_roots_form1(a)] == [-2, -1, 0, 1, 2]
    for z in quintic.oracle_roots_form1(a):
        assert min(abs(z - r) for r in roots) < 1e-12


def test_vieta_root_at_endpoint():
    roots = quintic.all_roots_form3(1.0, 0.0)
    assert roots[2]["via"] == "vieta"
    assert abs(roots[2]["value"] - 1) < 1e-14


def test_solve_report_matches_golden():
    report = quintic.solve("form1", a=0.01, verify=True, timing=False)
    with open(os.path.join(os.environ["QUINTIC_GOLDEN_DIR"], "example1.json")) as f:
        assert report == json.load(f)


def test_errors():
    with pytest.raises(ValueError, match="a must be nonzero"):
        quintic.solve("form1", a=0)
    with pytest.raises(quintic.SolverError, match="InvalidInput"):
        quintic.solve_form3(-1.0, 0.0)
    with pytest.raises(quintic.SolverError, match="MaxIterExceeded"):
        quintic.solve_form1(0.01, tol=1e-15, max_iter=2)
