import json

import pytest

from qtree.cli import Config, main
from qtree.errors import ParseError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines() if line.strip()]


def test_node(capsys):
    code, (obj,) = run(capsys, "node", "[0, inf]")
    assert code == 0 and (obj["phi"], obj["psi"]) == ("x*y", "x*y^2")
    code, (obj,) = run(capsys, "node", "[]")
    assert (obj["phi"], obj["psi"], obj["level"]) == ("x", "y", 0)
    code, (obj,) = run(capsys, "node", "[0]")
    assert (obj["phi"], obj["psi"]) == ("x", "x*y")


def test_compute(capsys):
    assert run(capsys, "compute", "ord", "--elem", "x^2+y^3")[1][0]["result"] == 2
    assert run(capsys, "compute", "member", "--path", "[inf]", "--elem", "y/x")[1][0]["result"] is False
    res = run(capsys, "compute", "directions", "--elem", "y^2-x^3")[1][0]["result"]
    assert res == [{"direction": {"finite": "0"}, "form": "y", "multiplicity": 2}]
    res = run(capsys, "compute", "transform", "--path", "[0, inf]", "--elem", "y^2-x^3")[1][0]["result"]
    assert [lv["r"] for lv in res["levels"]] == [2, 1, 1] and res["passes"]
    assert run(capsys, "compute", "value", "--elem", "1/y", "--prime", "y")[1][0]["result"] == -1
    assert run(capsys, "compute", "inform", "--elem", "x^2-y^2+x^3")[1][0]["result"] == "y^2 - x^2"


def test_every_object_is_versioned(capsys):
    _, objs = run(capsys, "suite", "approx", "--count", "3", "--field", "3")
    assert len(objs) == 3
    assert all(o["schema_version"] == 1 and o["status"] == "verified" for o in objs)


@pytest.mark.parametrize("argv,code", [
    (["compute", "ord", "--elem", "x+*"], 2),
    (["compute", "ord", "--elem", "x", "--field", "6"], 2),
    (["compute", "ord", "--elem", "x", "--seed", "-1"], 2),
    (["compute", "ord", "--elem", "x", "--path", "0, 1"], 2),
    (["compute", "ord", "--elem", "0"], 3),
    (["compute", "directions", "--elem", "1+x"], 3),
    (["compute", "value", "--elem", "x", "--prime", "x*y"], 3),
    (["approx", "--elem", "x*y", "--g-form", "x", "--h-form", "x", "--order", "3"], 3),
    (["prime-lemma", "--path", "[inf, 1, 1]", "--budget", "1"], 4),
    (["suite", "prime-lemma", "--field", "Q", "--count", "1"], 3),
])
def test_exit_codes(capsys, argv, code):
    assert main(argv) == code


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["suite", "nonsense"])
    assert exc.value.code == 2


def test_prime_lemma_command(capsys):
    code, (obj,) = run(capsys, "prime-lemma", "--path", "[0, inf]", "--seed", "3", "--depth-check", "3")
    assert code == 0
    assert obj["comparability"]["counterexamples"] == []
    assert all(lv["prime_power"] for lv in obj["trace"][-1]["levels"][:-1])


def test_env_defaults_are_overridden(monkeypatch, capsys):
    monkeypatch.setenv("QTREE_FIELD", "3")
    _, (obj,) = run(capsys, "suite", "approx", "--count", "1")
    assert obj["field"] == "3"
    _, (obj,) = run(capsys, "suite", "approx", "--count", "1", "--field", "7")
    assert obj["field"] == "7"


def test_output_is_deterministic(capsys):
    argv = ["check", "unique-essential", "--field", "3", "--seed", "11", "--count", "4"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


def test_config_validation():
    from qtree.coeffs import GF
    with pytest.raises(ParseError):
        Config(GF(5), budget=0)
    with pytest.raises(ParseError):
        Config(GF(5), seed=2**64)
