"""Intersection Alexander polynomials of knots with singularities.

Thin wrappers over the C++ core. Polynomials are strings such as
"t^2 - t + 1"; structured inputs use the same JSON payloads as the
``ialex`` command line tool.
"""

import json

from ._core import DEFAULT_DEGREE_CAP, IalexError, factor, gcd, normalize, similar
from ._core import run_case as _run_case

__all__ = [
    "DEFAULT_DEGREE_CAP",
    "IalexError",
    "factor",
    "gcd",
    "normalize",
    "similar",
    "run",
    "snf",
    "ia_point",
    "ia_product",
    "ia_dual",
    "twisted_homology",
]


def run(kind, payload, degree_cap=DEFAULT_DEGREE_CAP, assume_zero_kernel=False):
    """Run one case and return the full report as a dict."""
    text = _run_case(json.dumps({"kind": kind, "payload": payload}), degree_cap, assume_zero_kernel)
    return json.loads(text)


def _values(kind, payload, **options):
    report = run(kind, payload, **options)
    if report["status"] == "error":
        err = report["error"]
        exc = IalexError(f"{err['code']}: {err['message']}")
        exc.code = err["code"]
        exc.path = err.get("path", "")
        raise exc
    return report["values"]


def snf(matrix, cols=None):
    """Smith normal form of a matrix of polynomial strings."""
    payload = {"matrix": matrix}
    if cols is not None:
        payload["cols"] = cols
    return _values("snf", payload)


def ia_point(n, perversity, a, b, c, **extra):
    """Intersection Alexander polynomials for an isolated point singularity."""
    return _values("ia-point", dict(n=n, perversity=perversity, a=a, b=b, c=c, **extra))


def ia_product(payload, assume_zero_kernel=False):
    """Intersection Alexander polynomials for a product singularity."""
    return _values("ia-product", payload, assume_zero_kernel=assume_zero_kernel)


def ia_dual(ia, n):
    return _values("ia-dual", {"ia": ia, "n": n})["dual"]


def twisted_homology(simplices, monodromy=None, stalk=None):
    """Homology with local coefficients; monodromy maps "u,v" to a unit."""
    payload = {"simplices": simplices}
    if monodromy is not None:
        payload["monodromy"] = monodromy
    if stalk is not None:
        payload["stalk"] = stalk
    return _values("homology", payload)["homology"]
