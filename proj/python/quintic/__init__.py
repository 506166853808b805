"""Radical and trigonometric solvers for the quintic.

Complex arguments accept Python complex numbers. Roots of x^5 + x + a = 0
come back in interval order k = -2..2 from the ``all_roots_*`` functions.
"""

import json

from ._quintic import (
    SolverError,
    all_roots_form1,
    all_roots_form2,
    all_roots_form3,
    branch_root,
    bring_radical,
    form3_parameters,
    g_map,
    oracle_roots_bring_jerrard,
    oracle_roots_form1,
    principal_arg,
    solve_form1,
    solve_form2,
    solve_form3,
    solve_json,
    starting_point,
)


def _encode(z):
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def solve(form, method="both", verify=False, timing=True, **coefficients):
    """Run the full solve pipeline and return the report as a dict.

    ``coefficients`` are d1/d0, a, lambda_ or xi/theta depending on ``form``.
    """
    request = {"form": form, "method": method, "verify": verify}
    for key, value in coefficients.items():
        key = key.rstrip("_")
        request[key] = value if key in ("xi", "theta", "tol", "max_iter") else _encode(value)
    return json.loads(solve_json(json.dumps(request), timing))


__all__ = [
    "SolverError",
    "all_roots_form1",
    "all_roots_form2",
    "all_roots_form3",
    "branch_root",
    "bring_radical",
    "form3_parameters",
    "g_map",
    "oracle_roots_bring_jerrard",
    "oracle_roots_form1",
    "principal_arg",
    "solve",
    "solve_form1",
    "solve_form2",
    "solve_form3",
    "solve_json",
    "starting_point",
]
