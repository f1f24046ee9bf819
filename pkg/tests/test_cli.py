import io
import json
import subprocess
import sys

import pytest

from hecke_transfer.cli import GroupSpec, run
from hecke_transfer.weights import WeightFunction


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_dim_trivial():
    code, out = call("dim", "--group", "a1.json", "--mu", "[0]")
    assert code == 0 and json.loads(out)["dim"] == 1


def test_weights_table():
    code, out = call("weights", "--group", "a2sc.json", "--mu", "[1,1]", "--format", "tsv")
    rows = [line.split("\t") for line in out.splitlines()]
    assert code == 0 and len(rows) == 7
    assert sum(int(m) for _, m in rows) == 8


def test_weights_round_trip():
    code, out = call("weights", "--group", "g2", "--mu", "[1,0]")
    payload = json.loads(out)
    wf = WeightFunction.from_json(payload["weights"])
    assert wf.to_json() == payload["weights"]
    assert wf.mass == payload["mass"]


def test_kernel_round_trip():
    code, out = call("kernel", "--group", "gl2.json", "--mu", "[1,0]", "--torus", "s1")
    payload = json.loads(out)
    assert code == 0
    assert payload["kernel"] == [{"nu": [1], "m": 2}]
    assert payload["elliptic"] is True
    assert json.loads(json.dumps(payload, sort_keys=True)) == payload


def test_output_byte_stable():
    args = ("transfer", "--group", "gl3.json", "--mu", "[1,0,0]", "--direction", "GtoJ",
            "--fn", '[{"torus":"s1s2","label":"g","value":"3/4"},{"torus":"s1","label":"h","value":"-1"}]')
    a, b = call(*args), call(*args)
    assert a == b and a[0] == 0
    values = {(r["torus"], r["label"]): r["value"] for r in json.loads(a[1])["result"]}
    assert values[("s1s2", "g")] == "9/4"


def test_transfer_back_and_forth(tmp_path):
    fn = tmp_path / "f.json"
    fn.write_text('[{"torus":"s1","label":"g","nu":[1],"value":"1/2"}]')
    code, out = call("transfer", "--group", "gl2", "--mu", "[1,0]", "--direction", "JtoG", "--fn", str(fn))
    assert code == 0
    assert json.loads(out)["result"] == [{"torus": "s1", "label": "g", "value": "1"}]


def test_gl2_scenario_suite():
    code, out = call("check", "--suite", "gl2-paper", "--group", "gl2.json")
    report = json.loads(out)
    assert code == 0 and report["status"] == "pass"
    by_id = {r["id"]: r for r in report["results"]}
    assert by_id["gl2.rhs"]["status"] == "pass"
    assert by_id["gl2.kernel"]["lhs"] == by_id["gl2.kernel"]["rhs"]


def test_check_seed_variation():
    for seed in ("1", "7"):
        code, out = call("check", "--suite", "transfer", "--seed", seed, "--format", "tsv")
        assert code == 0
        assert all(line.endswith("\tpass") for line in out.splitlines())


def test_describe_and_pi1():
    code, out = call("describe", "--group", "u3")
    d = json.loads(out)
    assert d["weyl_order"] == 6 and d["pi1"] == {"free_rank": 1, "torsion": []}
    assert d["pi1_coinvariants"] == {"free_rank": 0, "torsion": [2]}
    code, out = call("pi1", "--group", '{"family":"PGL","rank":3}')
    assert json.loads(out)["pi1"]["torsion"] == [3]


def test_misc_commands():
    assert json.loads(call("classify", "--group", "gl3", "--mu", "[1,0,0]")[1])["kind"] == "minuscule"
    tensor = json.loads(call("tensor", "--group", "a2sc", "--mu", "[1,0]", "--nu", "[0,1]")[1])
    assert sorted(s["dim"] for s in tensor["summands"]) == [1, 8]
    assert json.loads(call("dimension", "--group", "gl3", "--mu", "[1,0,0]")[1])["dimension"] == 2
    sign = json.loads(call("sign", "--group", "gl3", "--mu", "[1,0,0]")[1])
    assert sign["lhs"] == sign["rhs"] == 1
    kappa = json.loads(call("kappa", "--group", "gl2", "--mu", "[1,0]", "--lam", "[1,0]")[1])
    assert kappa["basic_class"]["value"] == [1] and kappa["modified"] == [0]
    euler = json.loads(call("euler", "--group", '{"type":"A","rank":4}', "--parabolic", "1,3,4")[1])
    assert euler["euler_characteristic"] == 10
    char = json.loads(call("char", "--group", "gl2", "--mu", "[1,0]", "--order", "3", "--point", '["1/3", 0]', "--oracle")[1])
    assert char["value"] == char["oracle"]


def test_fixed_point_commands():
    code, out = call("lefschetz", "--group", "sp4", "--mu", "[1,0]")
    assert code == 0 and json.loads(out)["global_sum"] == 5
    code, out = call("convolve-fp", "--group", "gl2", "--mu1", "[1,0]", "--mu2", "[1,0]")
    assert code == 0 and json.loads(out)["global_sum"] == 4


def test_spectral_commands():
    S = '{"order":2,"generators":[["1/2","1/2"]]}'
    code, out = call("hom", "--group", "gl2", "--mu", "[1,0]", "--centralizer", S, "--delta", "[1]", "--average")
    h = json.loads(out)
    assert h["hom"] == 2 and h["averaged"] == "2"
    code, out = call("rhs", "--group", "gl2", "--mu", "[1,0]", "--centralizer", S,
                     "--packet", '{"pi":[0]}', "--delta-rho", "[1]")
    assert json.loads(out)["rhs"] == {"pi": -2}


@pytest.mark.parametrize("argv, code", [
    (["bogus"], 1),
    (["dim", "--group", "gl2", "--mu", "[0,1]"], 1),
    (["dim", "--mu", "[0]"], 1),
    (["dim", "--group", "nosuch.json", "--mu", "[0]"], 1),
    (["weights", "--group", '{"type":"F","rank":4}', "--mu", "[9,9,9,9]"], 3),
])
def test_exit_codes(argv, code, capsys):
    with pytest.raises(SystemExit) as exc:
        sys.exit(run(argv, out=io.StringIO()))
    assert exc.value.code == code


def test_group_spec_forms():
    a = GroupSpec.from_dict({"cartan": [[2, -1], [-3, 2]], "lattice": "sc"})
    b = GroupSpec.load("g2")
    # the same G2 with its two nodes labelled the other way round
    assert a.datum.cartan == tuple(zip(*b.datum.cartan))
    assert len(a.datum.positive_roots) == len(b.datum.positive_roots) == 6
    assert set(GroupSpec.load("gl2").tori) == {"1", "s1"}


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "hecke_transfer", "dim", "--group", "gl3", "--mu", "[2,1,0]"],
                         capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["dim"] == 8
