"""End-to-end tests of the command-line interface.

Every happy path is validated against the declared output schema, exit codes
follow the 0 / 2 (vacuous) / 1 (input error) contract, and identical
invocations must produce byte-identical output.
"""

import json
import math

import jsonschema
import pytest

from hoffman.cli import OUTPUT_SCHEMA, _round_floats, run

C5_TEXT = "0 1\n1 2\n2 3\n3 4\n4 0\n"
EDGELESS_TEXT = "p edge 3 0\n"


def _payload(capsys):
    out = capsys.readouterr().out
    obj = json.loads(out)
    jsonschema.validate(obj, OUTPUT_SCHEMA)
    return obj


@pytest.fixture()
def c5_path(tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text(C5_TEXT)
    return str(path)


def test_no_subcommand_is_an_input_error(capsys):
    assert run([]) == 1
    assert "subcommand" in capsys.readouterr().err


def test_unknown_subcommand_is_an_input_error(capsys):
    assert run(["frobnicate"]) == 1
    assert capsys.readouterr().err.startswith("hoffman:")


def test_finite_bounds_for_cycle(capsys, c5_path):
    assert run(["finite", c5_path]) == 0
    obj = _payload(capsys)
    assert obj["status"] == "ok" and obj["command"] == "finite"
    assert obj["graph"]["vertices"] == 5 and obj["graph"]["edges"] == 5
    assert abs(obj["bounds"]["chi_lb"]["value"] - math.sqrt(5.0)) < 1e-9
    assert abs(obj["bounds"]["alpha_ratio_ub"]["value"] - 1.0 / math.sqrt(5.0)) < 1e-9
    assert obj["bounds"]["chi_frac_lb"]["kind"] == "chi_frac_lb"


def test_finite_vacuous_graph_exits_2(capsys, tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text(EDGELESS_TEXT)
    assert run(["finite", str(path)]) == 2
    obj = _payload(capsys)
    assert obj["status"] == "vacuous" and "detail" in obj


def test_finite_missing_file_exits_1(capsys, tmp_path):
    assert run(["finite", str(tmp_path / "nope.txt")]) == 1
    assert capsys.readouterr().err


def test_unit_distance_plane(capsys):
    assert run(["unit-distance", "-n", "2"]) == 0
    obj = _payload(capsys)
    assert abs(obj["bounds"]["chi_lb"]["value"] - 3.482871935) < 1e-8
    assert obj["provenance"]["bessel_first_zero"] == pytest.approx(
        3.831705970, abs=1e-8
    )


def test_euclidean_measure_file(capsys, tmp_path):
    path = tmp_path / "unit.json"
    path.write_text(json.dumps({"dim": 2, "atoms": [[1.0, 1.0]]}))
    assert run(["euclidean", str(path)]) == 0
    obj = _payload(capsys)
    chi = obj["bounds"]["chi_lb"]["value"]
    alpha = obj["bounds"]["alpha_ratio_ub"]["value"]
    assert abs(chi - 3.482871935) < 1e-7
    assert abs(chi * alpha - 1.0) < 1e-7
    assert obj["provenance"]["cutoff"] > 0


def test_euclidean_signed_measure_has_no_density_bound(capsys, tmp_path):
    path = tmp_path / "signed.json"
    path.write_text(json.dumps({"dim": 2, "atoms": [[1.0, 1.0], [2.0, -0.2]]}))
    assert run(["euclidean", str(path)]) == 0
    obj = _payload(capsys)
    assert "alpha_ratio_ub" not in obj["bounds"]


def test_euclidean_malformed_measure_exits_1(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"dim": 2, "atoms": [[1.0, 1.0]], "junk": 0}))
    assert run(["euclidean", str(path)]) == 1
    assert capsys.readouterr().err


def test_odd_distance_measure(capsys):
    assert run(["odd-distance", "--beta", "1.3", "-N", "10"]) == 0
    obj = _payload(capsys)
    assert obj["bounds"]["chi_lb"]["value"] > 4.0
    assert abs(obj["measure_mass"] - (1.0 - 1.3**-11)) < 1e-9


def test_sphere_single_inner_product(capsys):
    assert run(["sphere", "-t", "-0.3333333333333333", "-n", "3"]) == 0
    obj = _payload(capsys)
    assert abs(obj["bounds"]["chi_lb"]["value"] - 4.0) < 1e-8
    assert abs(obj["bounds"]["alpha_ratio_ub"]["value"] - 0.25) < 1e-9


def test_sphere_measure_file(capsys, tmp_path):
    path = tmp_path / "sph.json"
    path.write_text(json.dumps({"dim": 3, "atoms": [[-0.5, 1.0]]}))
    assert run(["sphere", str(path)]) == 0
    obj = _payload(capsys)
    assert obj["bounds"]["chi_lb"]["value"] > 1.0
    assert "tail_bound" in obj["provenance"]


def test_sphere_needs_exactly_one_input(capsys, tmp_path):
    assert run(["sphere"]) == 1
    path = tmp_path / "sph.json"
    path.write_text(json.dumps({"dim": 3, "atoms": [[-0.5, 1.0]]}))
    assert run(["sphere", str(path), "-t", "0.2"]) == 1


def test_sphere_zero_measure_is_vacuous(capsys, tmp_path):
    path = tmp_path / "zero.json"
    path.write_text(json.dumps({"dim": 3, "atoms": [[0.0, 0.0]]}))
    assert run(["sphere", str(path)]) == 2
    obj = _payload(capsys)
    assert obj["status"] == "vacuous"


def test_optimize_radial_single_shell(capsys):
    code = run(["optimize", "--mode", "radial", "--support", "1", "-n", "2"])
    assert code == 0
    obj = _payload(capsys)
    assert abs(obj["bounds"]["chi_lb"]["value"] - 3.482871935) < 1e-6
    assert obj["measure"]["atoms"] == [[1.0, 1.0]]


def test_optimize_sphere_mode(capsys):
    code = run(
        ["optimize", "--mode", "sphere", "--support", "-0.3333333333333333", "-n", "3"]
    )
    assert code == 0
    obj = _payload(capsys)
    assert abs(obj["bounds"]["chi_lb"]["value"] - 4.0) < 1e-8


def test_torus_defaults_to_csv(capsys):
    assert run(["torus", "--radii", "1", "--moduli", "8", "16", "-n", "1"]) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0] == (
        "m,discrete_chi_lb,discrete_alpha_ub,continuous_chi_lb,continuous_alpha_ub"
    )
    assert len(lines) == 3
    assert lines[1].split(",")[0] == "8"


def test_torus_json_format(capsys):
    code = run(
        ["torus", "--radii", "1", "--moduli", "8", "16", "-n", "1", "--format", "json"]
    )
    assert code == 0
    obj = _payload(capsys)
    assert len(obj["rows"]) == 2 and len(obj["rows"][0]) == 5
    assert obj["columns"][0] == "m"


def test_output_flag_writes_file(capsys, tmp_path, c5_path):
    out_path = tmp_path / "report.json"
    assert run(["finite", c5_path, "-o", str(out_path)]) == 0
    assert capsys.readouterr().out == ""
    assert run(["finite", c5_path]) == 0
    assert out_path.read_text() == capsys.readouterr().out


def test_identical_runs_are_byte_identical(capsys):
    assert run(["unit-distance", "-n", "4"]) == 0
    first = capsys.readouterr().out
    assert run(["unit-distance", "-n", "4"]) == 0
    assert capsys.readouterr().out == first


def test_all_floats_carry_ten_significant_digits(capsys, c5_path):
    assert run(["finite", c5_path]) == 0
    obj = json.loads(capsys.readouterr().out)

    def walk(node):
        if isinstance(node, float):
            assert float(f"{node:.10g}") == node
        elif isinstance(node, dict):
            for v in node.values():
                walk(v)
        elif isinstance(node, list):
            for v in node:
                walk(v)

    walk(obj)


def test_dimension_validation(capsys):
    assert run(["unit-distance", "-n", "1"]) == 1
    assert run(["unit-distance", "-n", "33"]) == 1
    assert capsys.readouterr().err


def test_numeric_flag_validation(capsys):
    assert run(["unit-distance", "--tol", "0.01"]) == 1
    assert run(["unit-distance", "--kmax", "0"]) == 1
    assert run(["unit-distance", "--grid", "8"]) == 1


def test_threads_env_validation(capsys, monkeypatch):
    monkeypatch.setenv("HOFFMAN_THREADS", "zebra")
    assert run(["unit-distance"]) == 1
    monkeypatch.setenv("HOFFMAN_THREADS", "0")
    assert run(["unit-distance"]) == 1
    capsys.readouterr()
    monkeypatch.setenv("HOFFMAN_THREADS", "2")
    assert run(["unit-distance"]) == 0
    assert _payload(capsys)["threads"] == 2


def test_round_floats_rejects_nonfinite():
    with pytest.raises(ValueError):
        _round_floats({"x": float("nan")})
    with pytest.raises(ValueError):
        _round_floats([float("inf")])
