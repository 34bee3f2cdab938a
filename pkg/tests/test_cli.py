import json

from gen23.cli import main
from gen23.constructions import Dim3Params, build_dim3
from gen23.fields import make_field


def test_verify_single_claim_exit_zero(capsys):
    assert main(["verify", "eq-3-charpoly"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "eq-3-charpoly" in out


def test_verify_unknown_claim_exit_two(capsys):
    assert main(["verify", "no-such-claim"]) == 2


def test_verify_list(capsys):
    assert main(["verify", "--list"]) == 0
    out = capsys.readouterr().out
    assert "lemma-2.1" in out and "thm-3.6-psu3-25" in out and "[slow]" in out


def test_verify_json_report_deterministic(tmp_path, capsys):
    p1 = tmp_path / "r1.json"
    p2 = tmp_path / "r2.json"
    assert main(["verify", "lemma-3.3-res-z5", "table-b", "--json", str(p1)]) == 0
    assert main(["verify", "lemma-3.3-res-z5", "table-b", "--json", str(p2)]) == 0

    def strip_timing(path):
        data = json.loads(path.read_text())
        for claim in data["claims"]:
            claim.pop("elapsed", None)
        return json.dumps(data, sort_keys=True)

    assert strip_timing(p1) == strip_timing(p2)


def test_verify_markdown_report(tmp_path, capsys):
    md = tmp_path / "report.md"
    assert main(["verify", "lemma-3.3-r-factors", "--md", str(md)]) == 0
    text = md.read_text()
    assert "| `lemma-3.3-r-factors` | PASS |" in text


def test_search_none_for_excluded_group(capsys):
    assert main(["search", "--target", "sl3", "--q", "4"]) == 0
    assert "none" in capsys.readouterr().out


def test_search_emits_witness_and_matrices(tmp_path, capsys):
    out = tmp_path / "wit.json"
    assert main(["search", "--target", "su3", "--q", "4", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["target"] == "SU3"
    assert data["result"]["found"]
    assert data["x"]["n"] == 3 and data["y"]["n"] == 3


def test_search_explicit_field_flag(capsys):
    assert main(["search", "--target", "su3", "--field", "3^2/2,2,1"]) == 0
    assert "none" in capsys.readouterr().out  # q^2 = 9 is an excluded case


def test_search_usage_errors(capsys):
    assert main(["search", "--target", "sl9", "--q", "4"]) == 2
    assert main(["search", "--target", "sl3", "--q", "6"]) == 2
    assert main(["search", "--target", "sl3"]) == 2


def test_closure_command(tmp_path, capsys):
    F2 = make_field(2, 1)
    pr = build_dim3(Dim3Params(F2, 1, 0))
    fx = tmp_path / "x.json"
    fy = tmp_path / "y.json"
    fx.write_text(json.dumps(pr.x.to_json()))
    fy.write_text(json.dumps(pr.y.to_json()))
    assert main(["closure", str(fx), str(fy)]) == 0
    out = capsys.readouterr().out
    assert "order: 168" in out


def test_closure_command_identity(tmp_path, capsys):
    F5 = make_field(5, 1)
    from gen23.matgroup import Matrix

    f = tmp_path / "i.json"
    f.write_text(json.dumps(Matrix.identity(F5, 3).to_json()))
    assert main(["closure", str(f)]) == 0
    assert "order: 1" in capsys.readouterr().out


def test_closure_command_cap_exit_three(tmp_path, capsys):
    F5 = make_field(5, 1)
    pr = build_dim3(Dim3Params(F5, 0, 2))
    fx = tmp_path / "x.json"
    fy = tmp_path / "y.json"
    fx.write_text(json.dumps(pr.x.to_json()))
    fy.write_text(json.dumps(pr.y.to_json()))
    assert main(["--cap", "1000", "closure", str(fx), str(fy)]) == 3


def test_closure_command_bad_file(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text("{not json")
    assert main(["closure", str(f)]) == 2


def test_closure_field_mismatch(tmp_path):
    from gen23.matgroup import Matrix

    f1 = tmp_path / "a.json"
    f2 = tmp_path / "b.json"
    f1.write_text(json.dumps(Matrix.identity(make_field(5, 1), 3).to_json()))
    f2.write_text(json.dumps(Matrix.identity(make_field(7, 1), 3).to_json()))
    assert main(["closure", str(f1), str(f2)]) == 2
