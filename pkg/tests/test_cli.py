import json

import pytest

from addact.cli import main
from addact.monomial import quotient_from_generators
from addact.spair import monomial_spair


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_json(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_sections_table(capsys):
    code, out, _ = run(capsys, "sections", "--n", "2", "--a", "2", "--b", "5")
    assert code == 0
    assert out.strip().endswith("count: 12")


def test_sections_json(capsys):
    code, out, _ = run(capsys, "sections", "--n", "1", "--a", "1", "--b", "2", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["dim"] == 5
    assert doc["sections"] == [[0, 0], [1, 0], [2, 0], [0, 1], [1, 1]]

def test_spair_normalized_to_file(capsys, tmp_path):
    path = tmp_path / "pair.json"
    code, _, _ = run(capsys, "spair", "--n", "1", "--a", "1", "--b", "2", "--variant", "normalized", "-o", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["ideal"] == [[3, 0], [2, 1], [0, 2]]


def test_spair_twisted_summary(capsys):
    code, out, _ = run(capsys, "spair", "--n", "1", "--a", "1", "--b", "3", "--variant", "twisted")
    assert code == 0
    assert "dim: 7" in out and "Hilbert-Samuel: [1, 2, 2, 1, 1]" in out


def test_spair_errors(capsys):
    code, _, err = run(capsys, "spair", "--n", "0", "--a", "1", "--b", "1", "--variant", "twisted")
    assert code == 9 and "error" in err
    code, _, _ = run(capsys, "spair", "--n", "1", "--a", "1", "--b", "1", "--variant", "normalized")
    assert code == 8


def test_algebra_queries(capsys, tmp_path):
    q = quotient_from_generators(2, [(3, 0), (1, 1), (0, 3)], ("t", "s"))
    path = write_json(tmp_path, "ts.json", q.to_dict())
    assert run(capsys, "algebra", "hs", path)[1].strip() == "(1, 2, 2)"
    code, out, _ = run(capsys, "algebra", "socle", path, "--json")
    assert code == 0 and json.loads(out)["socle"]["dim"] == 2
    assert run(capsys, "algebra", "gorenstein", path)[1].strip() == "not gorenstein"


def test_bad_json_reports_position(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"dim": 2,\n  oops}')
    code, _, err = run(capsys, "algebra", "hs", str(path))
    assert code == 3
    assert f"{path}:2:" in err


def test_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "algebra", "hs", str(tmp_path / "nope.json"))
    assert code == 3


def test_relations_report(capsys):
    code, out, _ = run(capsys, "relations", "--a", "1", "--b", "2")
    doc = json.loads(out)
    assert code == 0 and doc["quotient_dim"] == 5
    assert {"poly": "u^3 - 3*u*w"} in doc["generators"]


def test_implicitize(capsys, tmp_path):
    pair = tmp_path / "ts.json"
    q = quotient_from_generators(2, [(3, 0), (1, 1), (0, 3)], ("t", "s"))
    pair.write_text(json.dumps(monomial_spair(q).to_dict()))
    code, out, _ = run(capsys, "implicitize", str(pair), "--degree", "2", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["dim"] == 2
    assert set(doc["forms"]) == {"-2*z0*z3 + z1^2", "-2*z0*z4 + z2^2"}


def test_monomiality(capsys, tmp_path):
    path = tmp_path / "pair.json"
    run(capsys, "spair", "--n", "1", "--a", "1", "--b", "2", "--variant", "twisted", "-o", str(path))
    code, out, _ = run(capsys, "monomiality", str(path))
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "monomial"
    assert doc["candidate"] == "K[z,w]/(z^4, z*w, w^2)"


def test_monomiality_needs_two_generators(capsys, tmp_path):
    q = quotient_from_generators(1, [(4,)])
    path = write_json(tmp_path, "x4.json", q.to_dict())
    code, _, _ = run(capsys, "monomiality", path)
    assert code == 17


def test_verify_paper_filter(capsys):
    code, out, _ = run(capsys, "verify-paper", "--filter", "sections", "--filter", "bch")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "2/2 criteria passed"
    assert all(line.startswith("[PASS]") for line in lines[:-1])


def test_verify_paper_unknown_key(capsys):
    code, _, err = run(capsys, "verify-paper", "--filter", "nonsense")
    assert code == 3 and "unknown criterion" in err


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["sections", "--n", "1"])
    assert exc.value.code == 2
