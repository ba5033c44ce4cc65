import io
import json
from pathlib import Path

import pytest

from hankel_inertia.cli import run

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def ok(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


@pytest.mark.parametrize(
    "name, counts",
    [("exp", [1, 0]), ("texp", [1, 1]), ("t2exp", [2, 1]), ("neg_t2exp", [1, 2]), ("pair", [1, 1])],
)
def test_inertia(name, counts):
    report = ok("inertia", "--kernel", FIXTURES / f"{name}.json")
    assert report["command"] == "inertia"
    assert [report["n_plus"], report["n_minus"]] == counts


def test_inertia_from_other_representations():
    assert ok("inertia", "--line", FIXTURES / "alpha2.json")["n_plus"] == 1
    assert ok("inertia", "--circle", FIXTURES / "circle_gamma3.json")["n_plus"] == 1
    report = ok("inertia", "--sequence", FIXTURES / "sequence_delta.json")
    assert report["n_plus"] + report["n_minus"] == report["rank"]


def test_sign_matrix():
    report = ok("sign-matrix", "--kernel", FIXTURES / "texp.json")
    assert report["numeric_check"]["agrees"]
    assert report["blocks"][0]["kind"] == "real"
    assert report["atoms"] == [{"alpha": "1", "beta": [0.0, 0.0], "q": ["1", "-1"]}]


def test_convert_round_trip(tmp_path):
    seq = ok("convert", "--from", "kernel", "--to", "sequence", FIXTURES / "t2exp.json")
    path = tmp_path / "seq.json"
    path.write_text(json.dumps({k: v for k, v in seq.items() if k not in ("command", "input_digest")}))
    back = ok("convert", "--from", "sequence", "--to", "kernel", path)
    assert back["terms"] == json.loads((FIXTURES / "t2exp.json").read_text())["terms"]


def test_oracle_check():
    report = ok("oracle-check", "--instances", 20, "--seed", 3)
    assert report["failed"] == 0 and report["checked"] == 20 + 10


def test_carleman():
    report = ok("carleman", "--kernel", FIXTURES / "neg_two_exp.json", "--sizes", "32,64")
    assert report["predicted"] == 2 and report["counts"][-1] == 2
    assert report["bounded"] and report["monotone"]


def test_transform():
    report = ok("transform", "--op", "dilate:2", "--kernel", FIXTURES / "exp.json")
    assert report["output"]["terms"] == [{"alpha": "1/2", "poly": ["1"]}]
    assert report["inertia_before"] == report["inertia_after"]


def test_output_is_deterministic():
    argv = ("oracle-check", "--instances", 5, "--seed", 1)
    assert call(*argv)[1] == call(*argv)[1]
    assert "wall_time" in call(*argv)[2]


def test_malformed_input(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert call("inertia", "--kernel", bad)[0] == 1
    assert call("inertia", "--kernel", tmp_path / "missing.json")[0] == 1
    assert call("inertia")[0] == 1
    assert call("carleman", "--kernel", FIXTURES / "exp.json", "--sizes", "a,b")[0] == 1
    assert call("transform", "--op", "rotate", "--kernel", FIXTURES / "exp.json")[0] == 1
    bad.write_text(json.dumps({"type": "kernel", "terms": [{"alpha": 1.5, "poly": ["1"]}]}))
    code, out, err = call("inertia", "--kernel", bad)
    assert code == 1 and out == "" and json.loads(err)["error"] == "MalformedSpec"


def test_not_self_adjoint(tmp_path):
    path = tmp_path / "k.json"
    path.write_text(json.dumps({"type": "kernel", "terms": [{"alpha": "1+i", "poly": ["1"]}]}))
    assert call("inertia", "--kernel", path)[0] == 2


def test_domain_violation(tmp_path):
    path = tmp_path / "k.json"
    path.write_text(json.dumps({"type": "kernel", "terms": [{"alpha": "-1", "poly": ["1"]}]}))
    assert call("inertia", "--kernel", path)[0] == 3
