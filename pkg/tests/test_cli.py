import json

import pytest

from pipgeom.cli import main
from pipgeom.constructions import fibonacci_triangle, octagon_empty_boundary
from pipgeom.polygon import RationalPolygon


def write_polygon(tmp_path, P, name="poly.json"):
    path = tmp_path / name
    path.write_text(json.dumps(P.to_json_dict()))
    return str(path)


def test_certify_pip_exit_zero(tmp_path, capsys):
    path = write_polygon(tmp_path, fibonacci_triangle(1))
    assert main(["certify", path]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["results"]["is_pip"] is True
    assert payload["results"]["i"] == 1 and payload["results"]["b"] == 9


def test_certify_non_pip_exit_one(tmp_path, capsys):
    path = write_polygon(tmp_path, octagon_empty_boundary())
    assert main(["certify", path]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["results"]["is_pip"] is False


def test_certify_bad_input_exit_two(tmp_path, capsys):
    empty = tmp_path / "empty.json"
    empty.write_text("")
    assert main(["certify", str(empty)]) == 2
    collinear = tmp_path / "collinear.json"
    collinear.write_text(json.dumps({"vertices": [["0", "0"], ["1", "1"], ["2", "2"]]}))
    assert main(["certify", str(collinear)]) == 2
    assert main(["certify", str(tmp_path / "missing.json")]) == 2


def test_vieta_reduced(capsys):
    assert main(["vieta", "--b", "1", "--reduced"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["results"]["reduced"] == [
        [5, 20, 25, 1],
        [6, 12, 18, 1],
        [8, 8, 16, 1],
        [9, 9, 9, 1],
    ]


def test_vieta_reduced_b7_empty_table(capsys):
    assert main(["vieta", "--b", "7", "--reduced"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["results"]["reduced"] == []


def test_vieta_family(capsys):
    assert main(["vieta", "--b", "9", "--family", "1,1,1", "--depth", "4"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert [row["z"] for row in payload["results"]["family"]] == [1, 4, 25, 169, 1156]


def test_vieta_forest(capsys):
    assert main(["vieta", "--b", "9", "--forest", "--max-z", "30"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["results"]["forest"] == {
        "1,1,1": ["1,1,4"],
        "1,1,4": ["1,1,1", "1,4,25"],
        "1,4,25": ["1,1,4"],
    }


def test_vieta_usage_errors(capsys):
    assert main(["vieta", "--b", "10", "--reduced"]) == 2
    assert main(["vieta", "--b", "3"]) == 2
    assert main(["vieta", "--b", "3", "--reduced", "--forest", "--max-z", "5"]) == 2
    assert main(["vieta", "--b", "9", "--family", "1,1,4"]) == 2  # not reduced
    assert main(["vieta", "--b", "8", "--family", "1,1,1"]) == 2  # wrong b


def test_construct_and_certify_roundtrip(tmp_path, capsys):
    assert main(["construct", "--family", "p10", "--params", "2,14"]) == 0
    polygon_json = capsys.readouterr().out
    path = tmp_path / "p10.json"
    path.write_text(polygon_json)
    assert main(["certify", str(path)]) == 0
    cert = json.loads(capsys.readouterr().out)
    assert cert["results"]["i"] == 2 and cert["results"]["b"] == 14


def test_construct_errors_name_the_violated_inequality(capsys):
    assert main(["construct", "--family", "p10", "--params", "1,10"]) == 2
    assert "5*i + 4" in capsys.readouterr().err
    assert main(["construct", "--family", "t-xyz", "--params", "4,5,81"]) == 2
    assert "divisibility" in capsys.readouterr().err
    assert main(["construct", "--family", "nope", "--params", "1"]) == 2


def test_construct_all_reflexive_entries(capsys):
    for idx in range(16):
        assert main(["construct", "--family", "reflexive", "--params", str(idx)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert len(payload["vertices"]) >= 3


def test_construct_svg(tmp_path, capsys):
    svg_path = tmp_path / "t1.svg"
    assert main(["construct", "--family", "fibonacci", "--params", "1", "--svg", str(svg_path)]) == 0
    capsys.readouterr()
    text = svg_path.read_text()
    assert text.startswith("<svg")
    assert '<path d="M' in text
    assert text.count("<circle") > 9  # lattice dots plus highlighted boundary points


def test_reports_are_deterministic(capsys):
    assert main(["vieta", "--b", "2", "--reduced"]) == 0
    first = capsys.readouterr().out
    assert main(["vieta", "--b", "2", "--reduced"]) == 0
    assert capsys.readouterr().out == first
    assert main(["construct", "--family", "p3", "--params", "3,14"]) == 0
    first = capsys.readouterr().out
    assert main(["construct", "--family", "p3", "--params", "3,14"]) == 0
    assert capsys.readouterr().out == first


def test_verify_known_and_unknown_suites(capsys):
    assert main(["verify", "--suite", "reduced-table"]) == 0
    out = capsys.readouterr().out
    assert "suite reduced-table: pass" in out
    assert out.count("ok") >= 4
    assert main(["verify", "--suite", "no-such-suite"]) == 2


def test_verify_counterexamples_suite(capsys):
    assert main(["verify", "--suite", "counterexamples"]) == 0
    assert "FAIL" not in capsys.readouterr().out


def test_certify_output_parses_as_polygon(tmp_path, capsys):
    assert main(["construct", "--family", "scott-grid", "--params", "2,10"]) == 0
    payload = json.loads(capsys.readouterr().out)
    P = RationalPolygon.from_json_dict(payload)
    assert len(P.vertices) == 4
