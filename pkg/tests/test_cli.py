"""Command line interface: subcommands, exit codes, output formats."""

import json

import pytest

from conftest import clasped_wire_diagram, hopf_pair_beside_unknot
from cyclink import (
    TwoChain,
    build_cover,
    normalize_writhe,
    save_diagram,
    verify_boundary,
)
from cyclink.cli import main
from cyclink.fixtures import fixture_diagram_path


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def clasp_file(tmp_path):
    path = tmp_path / "clasp.json"
    save_diagram(normalize_writhe(clasped_wire_diagram(), 6), path)
    return str(path)


def test_validate_ok(capsys):
    code, out, _ = run(capsys, "validate", str(fixture_diagram_path("cable_n3_k0")))
    assert code == 0
    assert out.strip() == "ok"


def test_validate_json(capsys):
    code, out, _ = run(
        capsys, "validate", str(fixture_diagram_path("cable_n3_k0")), "--json"
    )
    assert code == 0
    assert json.loads(out) == {"valid": True, "violations": []}


def test_validate_reports_violations(capsys, tmp_path):
    path = tmp_path / "bad.json"
    data = json.loads(fixture_diagram_path("cable_n3_k0").read_text())
    data["branch"] = 9
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 2
    assert "branch" in out


def test_missing_file_is_a_usage_error(capsys):
    code, _, err = run(capsys, "validate", "/no/such/file.json")
    assert code == 2
    assert "error:" in err


def test_malformed_json_is_a_usage_error(capsys, tmp_path):
    path = tmp_path / "garbage.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "chain", str(path), "-q", "2", "--curve", "eta", "--coset", "1")
    assert code == 2


def test_unknown_subcommand_is_a_usage_error(capsys):
    assert run(capsys, "frobnicate", "x.json")[0] == 2


def test_missing_required_option_is_a_usage_error(capsys):
    code, _, _ = run(capsys, "lk", str(fixture_diagram_path("cable_n3_k0")), "-q", "3")
    assert code == 2


def test_lk_prints_a_bare_rational(capsys):
    code, out, _ = run(
        capsys,
        "lk",
        str(fixture_diagram_path("cable_n3_k0")),
        "-q", "3",
        "--a", "eta", "--i", "1",
        "--b", "eta", "--j", "2",
    )
    assert code == 0
    assert out.strip() == "1"


def test_lk_json(capsys):
    code, out, _ = run(
        capsys,
        "lk",
        str(fixture_diagram_path("stevedore_w0")),
        "-q", "2",
        "--a", "eta", "--i", "1",
        "--b", "eta", "--j", "2",
    )
    assert (code, out.strip()) == (0, "2/9")
    code, out, _ = run(
        capsys,
        "lk",
        str(fixture_diagram_path("stevedore_w0")),
        "-q", "2",
        "--a", "eta", "--i", "1",
        "--b", "eta", "--j", "2",
        "--json",
    )
    assert code == 0
    assert json.loads(out) == {"lk": "2/9"}


def test_order_prints_the_multiple(capsys):
    code, out, _ = run(
        capsys,
        "order",
        str(fixture_diagram_path("stevedore_w0")),
        "-q", "5",
        "--curve", "eta", "--coset", "1",
    )
    assert code == 0
    assert out.strip() == "31"


def test_order_json(capsys):
    code, out, _ = run(
        capsys,
        "order",
        str(fixture_diagram_path("stevedore_w0")),
        "-q", "2",
        "--curve", "eta", "--coset", "1",
        "--json",
    )
    assert code == 0
    assert json.loads(out) == {"order": 9}


def test_degree_one_lk_is_classical(capsys, tmp_path):
    path = tmp_path / "pair.json"
    save_diagram(hopf_pair_beside_unknot(), path)
    code, out, _ = run(
        capsys,
        "lk", str(path),
        "-q", "1",
        "--a", "eta1", "--i", "1",
        "--b", "eta2", "--j", "1",
    )
    assert (code, out.strip()) == (0, "1")


def test_chain_text_groups_by_arc(capsys):
    code, out, _ = run(
        capsys,
        "chain",
        str(fixture_diagram_path("cable_n3_k0")),
        "-q", "3",
        "--curve", "eta", "--coset", "2",
    )
    assert code == 0
    text = out.strip()
    assert text.startswith("(") and text.endswith(")")
    diagram_arcs = 6
    assert text.count("|") == diagram_arcs - 1
    groups = text[1:-1].split("|")
    assert all(len(g.split(",")) == 3 for g in groups)


def test_chain_json_round_trips_and_verifies(capsys):
    code, out, _ = run(
        capsys,
        "chain",
        str(fixture_diagram_path("stevedore_w0")),
        "-q", "4",
        "--curve", "eta", "--coset", "3",
        "--json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["curve_name"] == "eta"
    chain = TwoChain.from_dict(data)
    from conftest import fixture

    cover = build_cover(fixture("stevedore_w0").diagram, 4)
    assert chain.coset == (3,)
    assert verify_boundary(cover, chain)


def test_matrix_text_and_json_agree(capsys):
    args = (
        "matrix",
        str(fixture_diagram_path("stevedore_w0")),
        "-q", "3",
        "--a", "eta", "--b", "eta",
    )
    code, text_out, _ = run(capsys, *args)
    assert code == 0
    code, json_out, _ = run(capsys, *args, "--json")
    assert code == 0
    data = json.loads(json_out)
    lines = text_out.strip().splitlines()[1:]
    for row_line, row in zip(lines, data["entries"]):
        cells = row_line.split("\t")[1:]
        for cell, entry in zip(cells, row):
            if isinstance(entry, dict):
                assert cell == f"undefined ({entry['undefined']})"
            else:
                assert cell == entry


def test_obstruct_text_and_json(capsys):
    args = (
        "obstruct",
        str(fixture_diagram_path("stevedore_w0")),
        "-q", "2",
    )
    code, out, _ = run(capsys, *args)
    assert code == 0
    assert "verdict: obstructed" in out
    assert "winding=0" in out
    code, out, _ = run(capsys, *args, "--json")
    data = json.loads(out)
    assert data["verdict"] == "obstructed"
    assert data["q"] == 2


def test_info_lists_lifts(capsys):
    code, out, _ = run(
        capsys, "info", str(fixture_diagram_path("stevedore_w2")), "-q", "4", "--json"
    )
    assert code == 0
    data = json.loads(out)
    eta = next(c for c in data["components"] if c["name"] == "eta")
    assert eta["lbar"] == 2
    assert eta["lifts"] == [[1, 3], [2, 4]]
    k = next(c for c in data["components"] if c["name"] == "K")
    assert k.get("branch") is True


def test_undefined_values_are_in_band_success(capsys, clasp_file):
    code, out, _ = run(
        capsys,
        "lk", clasp_file,
        "-q", "6",
        "--a", "eta", "--i", "1",
        "--b", "eta", "--j", "2",
    )
    assert code == 0
    assert out.strip() == "undefined (not rationally null-homologous)"

    code, out, _ = run(
        capsys, "order", clasp_file, "-q", "6", "--curve", "eta", "--coset", "1"
    )
    assert code == 0
    assert out.strip() == "undefined (not rationally null-homologous)"

    code, out, _ = run(
        capsys, "chain", clasp_file, "-q", "6",
        "--curve", "eta", "--coset", "1", "--json",
    )
    assert code == 0
    assert json.loads(out) == {"undefined": "not rationally null-homologous"}


def test_undivisible_writhe_is_a_usage_error_with_hint(capsys, tmp_path):
    path = tmp_path / "raw.json"
    save_diagram(clasped_wire_diagram(), path)  # writhe 3, not 0 mod 6
    code, _, err = run(
        capsys, "chain", str(path), "-q", "6", "--curve", "eta", "--coset", "1"
    )
    assert code == 2
    assert "normalize_writhe" in err


def test_output_is_deterministic(capsys):
    args = (
        "matrix",
        str(fixture_diagram_path("twobridge_m0")),
        "-q", "3",
        "--a", "eta", "--b", "eta",
        "--json",
    )
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second
