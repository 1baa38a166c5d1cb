import json
import os
import subprocess

import pytest

import ialex


def test_factor_and_normalize():
    assert ialex.factor("t^2 - 1") == [("t - 1", 1), ("t + 1", 1)]
    assert ialex.factor("7") == []
    assert ialex.normalize("-2*t^3 + 2*t^2") == "t - 1"
    assert ialex.similar("t^-1 - 1", "1 - t")
    assert ialex.gcd("t^2 - 1", "t^2 + 2*t + 1") == "t + 1"


def test_errors_carry_codes():
    with pytest.raises(ialex.IalexError) as info:
        ialex.factor("t^10 - 1", degree_cap=5)
    assert info.value.code == "DegreeCapExceeded"
    with pytest.raises(ialex.IalexError) as info:
        ialex.ia_point(5, [0, 0, 1, 1], a=["1"], b=["t - 1"], c=["1"], **{"lambda": ["t + 1"]})
    assert info.value.code in {"InadmissibleData", "SchemaError"}


def test_snf():
    out = ialex.snf([["t - 1", "1"], ["0", "t + 1"]])
    assert out["factors"] == ["1", "t^2 - 1"]
    assert out["rank"] == 2


def test_twisted_circle():
    h = ialex.twisted_homology([[0, 1], [1, 2], [0, 2]], monodromy={"0,2": "t"})
    assert h == [{"free": 0, "torsion": ["t - 1"]}, {"free": 0, "torsion": []}]


def test_point_case_and_duality():
    values = ialex.ia_point(
        5,
        [0, 0, 1, 1],
        a=["1", "2*t - 1", "t^2 - t + 1"],
        b=["t - 1", "3*t - 2", "1"],
        c=["1", "t^2 + t - 1", "t - 2", "t^2 - 3*t + 1"],
    )
    assert values["threshold"] == 3
    assert values["ia"][3] == "t^2 - 3*t + 1"
    dual = ialex.ia_dual(values["ia"], 5)
    assert ialex.ia_dual(dual, 5) == values["ia"]


def test_product_matches_point():
    payload = {
        "n": 4,
        "k": 3,
        "perversity": [0, 0, 0],
        "sigma": [{"free": 1}],
        "link": [{"torsion": ["t - 1"]}, {"torsion": ["t^2 - t + 1"]}],
        "c": ["1", "2*t - 1"],
        "a": ["1", "t^2 - t + 1"],
    }
    values = ialex.ia_product(payload, assume_zero_kernel=True)
    assert values["ia"][:3] == ["t - 1", "2*t - 1", "1"]


def test_run_report_shape():
    report = ialex.run("factor", {"poly": "t^2 - 1"})
    assert report["status"] == "pass"
    assert set(report) == {"kind", "status", "values"}


@pytest.mark.skipif("IALEX_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_agrees_with_module(tmp_path):
    case = tmp_path / "case.json"
    case.write_text(json.dumps({"kind": "factor", "payload": {"poly": "t^4 - 1"}}))
    out = subprocess.run([os.environ["IALEX_CLI"], "run", "--input", str(case), "--json"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout) == ialex.run("factor", {"poly": "t^4 - 1"})
