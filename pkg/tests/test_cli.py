import io
import json
import os

import pytest

from crepant.cli import run

CONFIGS = os.path.join(os.path.dirname(__file__), "..", "configs")
A1 = os.path.join(CONFIGS, "a1_p1.json")
A2 = os.path.join(CONFIGS, "a2_p1.json")
A2_POINT = os.path.join(CONFIGS, "a2_point.json")


def invoke(argv):
    out = io.StringIO()
    code = run(argv, stdout=out)
    return code, out.getvalue()


def test_unknown_command_exits_1():
    code, _ = invoke(["no-such-command"])
    assert code == 1
    code, _ = invoke([])
    assert code == 1


def test_bad_config_exits_2():
    code, text = invoke(["orb-table", "--config", "/no/such/file.json"])
    assert code == 2
    assert "error" in json.loads(text)


def test_decimal_q_rejected():
    code, text = invoke(["qc-table", "--config", A2, "--q", "0.5"])
    assert code == 2
    assert "decimal" in json.loads(text)["error"]


def test_pole_exits_3_with_span():
    code, text = invoke(["qc-table", "--config", A2, "--q=-1,-1"])
    assert code == 3
    data = json.loads(text)
    assert data["error"] == "pole"
    assert data["span"] == [1, 2]


def test_deterministic_output():
    argv = ["qc-table", "--config", A2, "--q", "zeta3"]
    first = invoke(argv)
    second = invoke(argv)
    assert first == second and first[0] == 0


def test_cartan_golden():
    code, text = invoke(["cartan", "--n", "2"])
    assert code == 0
    data = json.loads(text)
    assert data["matrix"] == [["-2", "1"], ["1", "-2"]]
    assert data["inverse"] == [["-2/3", "-1/3"], ["-1/3", "-2/3"]]


def test_age_golden():
    code, text = invoke(["age", "--order", "3", "--exponents", "1,2"])
    assert code == 0
    assert json.loads(text)["age"] == "1"
    code, text = invoke(["age", "--order", "4", "--exponents", "1,1"])
    assert json.loads(text)["age"] == "1/2"
    code, _ = invoke(["age", "--order", "0", "--exponents", "1"])
    assert code == 2


def test_gw_golden():
    code, text = invoke(["gw", "--config", A1, "--span", "1,1",
                         "--insert", "E1,E1,E1"])
    assert code == 0
    assert json.loads(text)["value"] == "-8"
    code, text = invoke(["gw", "--config", A2, "--span", "1,2",
                         "--insert", "E1,E1,E2", "--multiple", "3"])
    assert json.loads(text)["value"] == "-1"
    code, _ = invoke(["gw", "--config", A2, "--span", "1,1",
                      "--insert", "E1,E1"])
    assert code == 2


def test_verify_a1_accepts_half_i():
    code, text = invoke(["verify-a1", "--config", A1, "--q", "-1",
                         "--scalar", "i/2"])
    assert code == 0
    assert json.loads(text)["report"]["passed"]
    code, text = invoke(["verify-a1", "--config", A1, "--q", "-1",
                         "--scalar", "1"])
    assert code == 0
    assert not json.loads(text)["report"]["passed"]


def test_solve_a2_golden():
    code, text = invoke(["solve-a2", "--config", A2, "--max-order", "6"])
    assert code == 0
    data = json.loads(text)
    assert len(data["result"]["solutions"]) == 2
    assert any(ex["span"] == [1, 2] for ex in data["result"]["excluded"])


def test_check_assoc_all_rings():
    for extra in (["--ring", "orb"], ["--ring", "classical"],
                  ["--ring", "quantum", "--q", "zeta3"]):
        code, text = invoke(["check-assoc", "--config", A2] + extra)
        assert code == 0
        assert json.loads(text)["report"]["passed"]
    code, _ = invoke(["check-assoc", "--config", A2, "--ring", "quantum"])
    assert code == 2


def test_mckay_command():
    code, text = invoke(["mckay", "--group", "D4"])
    assert code == 0
    data = json.loads(text)
    assert data["dynkin"] == "affine D4"
    assert data["dimension_vector_in_kernel"]
    code, _ = invoke(["mckay", "--group", "E9"])
    assert code == 2


def test_reconcile_command():
    code, text = invoke(["reconcile-6-2"])
    assert code == 0
    data = json.loads(text)
    assert data["report"]["best"]["transformation"] == "scale_3_swap_LM"


def test_orb_table_over_point():
    code, text = invoke(["orb-table", "--config", A2_POINT])
    assert code == 0
    table = json.loads(text)["table"]
    # e_1 e_2 = (1/3) sigma over a point base
    assert table["e_1 * e_2"]["untwisted"]["sigma"] == ["1/3"]


def test_text_output_mode():
    code, text = invoke(["--output", "text", "cartan", "--n", "1"])
    assert code == 0
    assert "matrix[0][0]" in text and "{" not in text


def test_config_round_trip():
    from crepant.geometry import Geometry
    with open(A2) as fh:
        data = json.load(fh)
    geom = Geometry.from_json(data)
    assert Geometry.from_json(geom.to_json()) == geom
