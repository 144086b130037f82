import json

import pytest

from qasc.algebra import MPoly
from qasc.cli import (
    EXIT_FAILED,
    EXIT_OK,
    EXIT_RESONANCE,
    EXIT_USAGE,
    canonical_json,
    main,
)
from qasc.verify import CheckReport, ImplementedSuites


def _run(capsys, *argv: str) -> tuple[int, object]:
    code = main(list(argv))
    out = capsys.readouterr().out
    assert out.endswith("\n")
    assert out.count("\n") == 1
    return code, json.loads(out)


def test_canonical_json():
    assert canonical_json({"b": 1, "a": [1, "x"]}) == '{"a":[1,"x"],"b":1}'


def test_macdonald_empty_partition(capsys):
    code, payload = _run(
        capsys, "macdonald", "--partition", "0", "--n", "2", "--q", "1/2", "--t", "1/3"
    )
    assert code == EXIT_OK
    assert payload["kappa"] == []
    assert MPoly.from_json(payload["poly"]) == MPoly.one(2)


def test_macdonald_two(capsys):
    code, payload = _run(
        capsys, "macdonald", "--partition", "2", "--n", "2", "--q", "1/2", "--t", "1/3"
    )
    assert code == EXIT_OK
    poly = MPoly.from_json(payload["poly"])
    # m2 + (1+q)(1-t)/(1-qt) m11 at q=1/2, t=1/3
    assert poly == MPoly(2, {(2, 0): 1, (0, 2): 1, (1, 1): "6/5"})
    exps = [term["exp"] for term in payload["poly"]["terms"]]
    assert exps == [[0, 2], [1, 1], [2, 0]]
    assert payload["poly"]["terms"][1]["coef"] == "6/5"


def test_asc_all_routes(capsys):
    code, payload = _run(
        capsys,
        "asc",
        "--family",
        "U",
        "--partition",
        "1",
        "--n",
        "2",
        "--q",
        "1/2",
        "--t",
        "1/3",
        "--a",
        "-1",
        "--route",
        "all",
    )
    assert code == EXIT_OK
    assert payload["agree"] is True
    assert payload["family"] == "U"
    expected = MPoly.variable(2, 0) + MPoly.variable(2, 1)
    assert MPoly.from_json(payload["poly"]) == expected
    assert sorted(payload["routes"]) == ["eigen", "expop", "genfun"]


@pytest.mark.parametrize("route", ["eigen", "genfun", "expop"])
def test_asc_v_single_route(capsys, route):
    argv = ["asc", "--family", "V", "--partition", "1", "--n", "2"]
    argv += ["--q", "1/2", "--t", "1/3", "--a", "-1", "--route", route]
    code, payload = _run(capsys, *argv)
    assert code == EXIT_OK
    assert payload["route"] == route
    assert payload["params"]["a"] == "-1"


def test_det(capsys):
    argv = ["det", "--partition", "1", "--n", "2", "--q", "1/2", "--a", "-1"]
    code, payload = _run(capsys, *argv)
    assert code == EXIT_OK
    assert payload["route"] == "det"
    assert payload["params"]["t"] == "1/2"


@pytest.mark.parametrize(
    "argv",
    [
        ["macdonald", "--partition", "2", "--n", "2", "--q", "1/2"],
        ["macdonald", "--partition", "1,2", "--n", "2", "--q", "1/2", "--t", "1/3"],
        ["macdonald", "--partition", "2", "--n", "2", "--q", "0.5", "--t", "1/3"],
        ["macdonald", "--partition", "2,1,1", "--n", "2", "--q", "1/2", "--t", "1/3"],
        ["verify", "--suite", "nonsense"],
        ["frobnicate"],
    ],
)
def test_usage_errors(capsys, argv):
    code, payload = _run(capsys, *argv)
    assert code == EXIT_USAGE
    assert set(payload) >= {"error", "message"}


def test_resonance_exit_code(capsys):
    argv = ["asc", "--partition", "2", "--n", "1", "--q", "-1", "--t", "1/3"]
    argv += ["--a", "-1"]
    code, payload = _run(capsys, *argv)
    assert code == EXIT_RESONANCE
    assert payload["error"] == "resonance"
    assert payload["pair"] == ["(2)", "()"]


def test_verify_column_partitions(capsys):
    argv = ["verify", "--suite", "appendixA", "--n", "3", "--seed", "7"]
    code, payload = _run(capsys, *argv)
    assert code == EXIT_OK
    assert payload
    assert all(r["pass"] for r in payload)


def test_verify_orthogonality(capsys):
    argv = ["verify", "--suite", "orthogonality", "--n", "2", "--k", "1"]
    argv += ["--q", "1/2", "--a", "-1", "--degmax", "3"]
    code, payload = _run(capsys, *argv)
    assert code == EXIT_OK
    assert all(r["pass"] for r in payload)


def test_verify_all(capsys):
    code, payload = _run(capsys, "verify", "--suite", "all", "--degmax", "0")
    assert code == EXIT_OK
    assert all(r["pass"] for r in payload)
    assert {r["check"] for r in payload} >= {"norm0-U", "integral-representations"}


def test_verify_is_reproducible(capsys):
    argv = ["verify", "--suite", "identities", "--degmax", "1", "--seed", "3"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


def test_verify_failure_exit_code(capsys):
    suites = ImplementedSuites()
    suites.add_suite(
        "failing", lambda opts: [CheckReport(check="x", passed=False)], overwrite=True
    )
    try:
        code, payload = _run(capsys, "verify", "--suite", "failing")
    finally:
        suites._implemented_suites.pop("failing", None)
    assert code == EXIT_FAILED
    assert payload[0]["pass"] is False
