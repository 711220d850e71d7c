#!/usr/bin/env python3
"""
Command-line surface and SVG rendering
"""
import json

import pytest

from hexanet.main import EXIT_INVALID, EXIT_NON_GENERIC, EXIT_OK, main
from hexanet.schemas.matrix import MatrixSchema
from hexanet.schemas.network import NetworkSchema
from hexanet.services.hermitian import is_positive_network, sylvester_posdef
from hexanet.services.minors import ExactMatrix
from hexanet.services.networks import matrix_to_network
from hexanet.services.render import layout, render_svg
from hexanet.services.scalars import Ring, Scalar
from hexanet.services.tilings import standard_tiling


def write_matrix(path, m):
    path.write_text(MatrixSchema.from_matrix(m).model_dump_json())
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_counts(capsys):
    cases = [
        {"argv": ["tilings", "--n", "3", "--count-only"], "out": "2"},
        {"argv": ["tilings", "--n", "4", "--count-only"], "out": "8"},
        {"argv": ["laurent", "--n", "4", "--entry", "1,4", "--count-only"], "out": "22"},
        {"argv": ["laurent", "--n", "4", "--entry", "2,1", "--count-only"], "out": "1"},
    ]
    for case in cases:
        code, out = run(capsys, *case["argv"])
        assert code == EXIT_OK
        assert out.strip() == case["out"]


def test_laurent_entry(capsys):
    code, out = run(capsys, "laurent", "--n", "4", "--entry", "1,2", "--letters", "--aztec")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["polynomial"] == "a*c/b + h/b"
    assert payload["terms"] == 2
    assert payload["tilings"] == 2


def test_laurent_entry_out_of_range(capsys):
    code, _ = run(capsys, "laurent", "--n", "3", "--entry", "1,4")
    assert code == EXIT_INVALID


def test_round_trip_through_files(capsys, tmp_path):
    code, generated = run(capsys, "gen", "--n", "4", "--ring", "C", "--seed", "7")
    assert code == EXIT_OK
    matrix_file = tmp_path / "m.json"
    matrix_file.write_text(generated)

    code, network = run(capsys, "to-network", "--input", str(matrix_file))
    assert code == EXIT_OK
    network_file = tmp_path / "net.json"
    network_file.write_text(network)

    code, flipped = run(capsys, "flip", "--input", str(network_file), "--random", "5", "--seed", "3")
    assert code == EXIT_OK
    flipped_file = tmp_path / "flipped.json"
    flipped_file.write_text(flipped)

    code, rebuilt = run(capsys, "reconstruct", "--input", str(flipped_file))
    assert code == EXIT_OK
    assert json.loads(rebuilt) == json.loads(generated)


def test_to_network_small(capsys, tmp_path, small_matrix):
    code, out = run(capsys, "to-network", "-i", write_matrix(tmp_path / "m.json", small_matrix))
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["vertices"]["{1,2}"] == "1/1"
    assert payload["faces"]["{1,2}"] == "5/1"


def test_non_generic_exit_code(capsys, tmp_path):
    path = write_matrix(tmp_path / "m.json", ExactMatrix.from_rows([[1, 1], [1, 1]]))
    code, _ = run(capsys, "to-network", "--input", path)
    assert code == EXIT_NON_GENERIC


def test_missing_input_file(capsys, tmp_path):
    code, out = run(capsys, "reconstruct", "--input", str(tmp_path / "absent.json"))
    assert code == EXIT_INVALID
    assert out == ""


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["tilings", "--n", "3", "--bogus"])
    assert info.value.code == 64
    with pytest.raises(SystemExit) as info:
        main(["flip", "--hexagon", "0", "--random", "2"])
    assert info.value.code == 64


def test_verify(capsys, tmp_path, sample_matrix):
    code, out = run(capsys, "verify", "--input", write_matrix(tmp_path / "m.json", sample_matrix), "--flips", "3")
    assert code == EXIT_OK
    assert json.loads(out)["passed"] is True


def test_qdet_command(capsys, tmp_path):
    q = [Scalar.quat(1), Scalar.quat(0, 1)], [Scalar.quat(0, -1), Scalar.quat(2)]
    path = write_matrix(tmp_path / "q.json", ExactMatrix.from_rows(list(q), Ring.QUAT))
    code, out = run(capsys, "qdet", "--input", path)
    assert code == EXIT_OK
    assert json.loads(out) == {"n": 2, "qdet": "1/1", "pfaffian": "1/1", "agree": True}

    code, out = run(capsys, "qdet", "--input", path, "--no-pfaffian")
    assert code == EXIT_OK
    assert json.loads(out) == {"n": 2, "qdet": "1/1"}


def test_qdet_command_on_random_input(capsys, tmp_path):
    code, generated = run(capsys, "gen", "--n", "3", "--ring", "H", "--seed", "11")
    assert code == EXIT_OK
    path = tmp_path / "q.json"
    path.write_text(generated)
    code, out = run(capsys, "qdet", "--input", str(path))
    payload = json.loads(out)
    assert code == EXIT_OK
    assert payload["qdet"] == payload["pfaffian"]
    assert payload["agree"] is True


def test_sample_posdef(capsys):
    code, out = run(capsys, "sample-posdef", "--n", "4", "--ring", "C", "--seed", "7")
    assert code == EXIT_OK
    payload = json.loads(out)
    m = MatrixSchema.model_validate(payload["matrix"]).to_matrix()
    net = NetworkSchema.model_validate(payload["network"]).to_network()
    assert payload["network"]["vertices"]["{}"] == "1/1+0/1 i"
    assert m.is_hermitian()
    assert sylvester_posdef(m)
    assert is_positive_network(net)
    assert matrix_to_network(m) == net

    code, out = run(capsys, "sample-posdef", "--n", "1", "--ring", "Q")
    assert code == EXIT_OK
    assert json.loads(out)["matrix"]["n"] == 1


def test_layout_of_standard_tiling():
    shape = layout(standard_tiling(4))
    assert len(shape.rhombi) == 6
    assert len(shape.vertex_labels) == 11
    assert sorted(shape.face_labels.values()) == ["R12", "R13", "R14", "R23", "R24", "R34"]


def test_layout_of_network(small_matrix):
    shape = layout(matrix_to_network(small_matrix))
    assert sorted(shape.vertex_labels.values()) == ["1/1", "1/1", "2/1", "7/1"]
    assert list(shape.face_labels.values()) == ["5/1"]


def test_render_is_deterministic(capsys, small_matrix):
    net = matrix_to_network(small_matrix)
    first = render_svg(net)
    assert first == render_svg(net)
    assert first.lstrip().startswith("<?xml")
    assert "<svg" in first

    code, out = run(capsys, "render", "--n", "3")
    assert code == EXIT_OK
    assert out == render_svg(standard_tiling(3))
