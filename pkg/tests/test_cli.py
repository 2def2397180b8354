import json

import pytest

from simplexbounds import empty_simplices
from simplexbounds.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    doc = json.loads(out)
    assert json.loads(json.dumps(doc)) == doc
    return doc


def test_convert_f(capsys):
    code, out, _ = run(capsys, "convert", "--f", "6,12,8", "--d", "3")
    assert code == 0
    assert "h = 1,3,3,1" in out and "g = 1,2" in out
    doc = run_json(capsys, "convert", "--f", "6,12,8", "--d", "3")
    assert doc["h"]["entries"] == [1, 3, 3, 1]
    assert doc["g"]["entries"] == [1, 2]


def test_convert_g(capsys):
    doc = run_json(capsys, "convert", "--g", "1,2,3", "--d", "4")
    assert doc["h"]["entries"] == [1, 3, 6, 3, 1]
    assert doc["f"]["entries"][1:] == [7, 21, 28, 14]


def test_convert_rejects_non_si(capsys):
    code, _, err = run(capsys, "convert", "--h", "1,3,2,3,1")
    assert code == 2
    assert "not an SI-sequence" in err


def test_convert_rejects_garbage(capsys):
    code, _, err = run(capsys, "convert", "--h", "1,x,3")
    assert code == 2


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("bound", "--g", "1,2,3", "--d", "4", "--total"), 7),
        (("bound", "--g1", "2", "--k", "1", "--dimension-free"), 5),
        (("bound", "--g", "1,2,3", "--d", "4", "--cumulative", "2"), 7),
        (("bound", "--g1", "2", "--d", "4", "--k", "2", "--vertex-count"), 7),
        (("bound", "--gk", "3", "--k", "2", "--j", "2", "--d", "4"), 7),
    ],
)
def test_bound_values(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip() == str(expected)
    assert run_json(capsys, *argv)["value"] == expected


def test_bound_per_degree_json(capsys):
    doc = run_json(capsys, "bound", "--g", "1,2,3", "--d", "4", "--per-degree")
    assert doc == {"2": 0, "3": 7, "4": 0, "5": 0}


def test_bound_gk_precondition(capsys):
    code, _, err = run(capsys, "bound", "--gk", "3", "--k", "2", "--j", "2", "--d", "3")
    assert code == 3
    assert "d >= j + k" in err


def test_bound_betti_table(capsys):
    doc = run_json(capsys, "bound", "--hilbert", "1,2,1", "--n", "2", "--betti")
    entries = {(e["i"], e["j"]): e["value"] for e in doc["entries"]}
    assert entries == {(0, 0): 1, (1, 2): 2, (1, 3): 1, (2, 3): 1, (2, 4): 1}


def test_oracle_nonfaces(capsys):
    code, out, _ = run(capsys, "oracle", "--cyclic", "7", "4", "--nonfaces")
    assert code == 0
    assert "7 minimal non-faces" in out
    assert out.count("{") == 7


def test_oracle_betti(capsys):
    doc = run_json(capsys, "oracle", "--cyclic", "7", "4", "--betti")
    entries = {(e["i"], e["j"]): e["value"] for e in doc["betti"]["entries"]}
    assert entries[(1, 3)] == 7


def test_oracle_file(capsys, tmp_path):
    square = tmp_path / "square.json"
    square.write_text(json.dumps({"n": 4, "facets": [[1, 2], [2, 3], [3, 4], [1, 4]]}), encoding="utf-8")
    doc = run_json(capsys, "oracle", "--file", str(square), "--betti")
    entries = {(e["i"], e["j"]): e["value"] for e in doc["betti"]["entries"]}
    assert entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}


def test_oracle_size_limit(capsys, monkeypatch):
    code, _, err = run(capsys, "oracle", "--polygon", "13", "--betti")
    assert code == 4
    assert run(capsys, "oracle", "--polygon", "13", "--betti", "--vertex-limit", "13")[0] == 0
    monkeypatch.setenv("EMPTY_SIMPLEX_VERTEX_LIMIT", "5")
    assert run(capsys, "oracle", "--polygon", "6", "--betti")[0] == 4


def test_oracle_bad_characteristic(capsys):
    assert run(capsys, "oracle", "--polygon", "5", "--betti", "--characteristic", "6")[0] == 2


@pytest.mark.parametrize("argv", [("--cyclic", "7", "4"), ("--cyclic", "9", "6"), ("--octahedron",)])
def test_compare_satisfied(capsys, argv):
    code, out, _ = run(capsys, "compare", *argv)
    assert code == 0
    assert "all bounds satisfied" in out
    doc = run_json(capsys, "compare", *argv)
    assert doc["violations"] == []


def test_compare_octahedron_detail(capsys):
    doc = run_json(capsys, "compare", "--octahedron")
    rows = {r["degree"]: r for r in doc["per_degree"]}
    assert rows[2]["actual"] == rows[2]["bound"] == 3 and rows[2]["attained"]
    assert rows[3]["bound"] == 2 and rows[3]["actual"] == 0 and not rows[3]["attained"]


def test_compare_cyclic_attains_total(capsys):
    doc = run_json(capsys, "compare", "--cyclic", "7", "4")
    assert doc["total"] == {"actual": 7, "bound": 7, "attained": True}


def test_compare_violation_exit(capsys, monkeypatch):
    monkeypatch.setattr(empty_simplices, "generator_degree_bound", lambda g, d, j: 0)
    code, _, err = run(capsys, "compare", "--octahedron")
    assert code == 5


def test_threads_give_identical_output(capsys):
    one = run(capsys, "oracle", "--cyclic", "9", "5", "--betti", "--threads", "1")
    four = run(capsys, "oracle", "--cyclic", "9", "5", "--betti", "--threads", "4")
    assert one == four


def test_output_is_deterministic(capsys):
    first = run(capsys, "compare", "--cyclic", "8", "5", "--format", "json")
    second = run(capsys, "compare", "--cyclic", "8", "5", "--format", "json")
    assert first == second


def test_missing_complex_is_validation_error(capsys):
    assert run(capsys, "oracle", "--betti")[0] == 2
