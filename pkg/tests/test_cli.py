import json

import pytest

from mostar import complete, cycle, write_graph6
from mostar.cli import main
from mostar.families import builtin_registry


def run(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_compute_json(tmp_path, capsys):
    f = tmp_path / "in.g6"
    f.write_text(write_graph6(cycle(6)) + "\n" + write_graph6(builtin_registry()["A0"].build(12)) + "\n")
    rc, out, err = run(capsys, ["compute", str(f)])
    assert rc == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[0]["edge_mostar"] == 0
    assert rows[1]["edge_mostar"] == 96
    assert all(
        r["mu"] + r["mv"] + r["eq"] + 1 == len(rows[1]["edges"])
        for r in rows[1]["edges"]
    )


def test_compute_s104(capsys, tmp_path):
    from mostar.families import s_mr

    f = tmp_path / "in.g6"
    f.write_text(write_graph6(s_mr(10, 4)) + "\n")
    rc, out, _ = run(capsys, ["compute", str(f), "--format", "csv"])
    assert rc == 0
    assert out.splitlines()[1].endswith(",78")


def test_compute_partial_failures(tmp_path, capsys):
    f = tmp_path / "in.g6"
    f.write_text("!!notgraph6\n" + write_graph6(cycle(4)) + "\nB?\n")  # B? = 2 isolated vertices
    rc, out, err = run(capsys, ["compute", str(f)])
    assert rc == 3
    assert ":1: parse error" in err
    assert ":3: disconnected" in err
    assert len(out.splitlines()) == 1


def test_compute_missing_file(capsys):
    rc, _, err = run(capsys, ["compute", "/nonexistent/x.g6"])
    assert rc == 2
    assert "cannot read" in err


def test_verify_theorem2_pass(tmp_path, capsys):
    out_file = tmp_path / "rows.json"
    rc, _, _ = run(capsys, [
        "verify-theorem2", "--range", "5-8", "--threads", "2",
        "--output", str(out_file),
    ])
    assert rc == 0
    rows = json.loads(out_file.read_text())
    assert [r["m"] for r in rows] == [5, 6, 7, 8]
    assert [r["observed_max"] for r in rows] == [4, 12, 22, 34]
    assert all(r["status"] == "PASS" for r in rows)


def test_verify_theorem1_single_size(capsys):
    rc, out, _ = run(capsys, ["verify-theorem1", "--size", "7", "--threads", "1"])
    assert rc == 0
    rows = json.loads(out)
    assert rows[0]["observed_max"] == 12
    assert rows[0]["observed_maximizer_count"] == 2


def test_verify_theorem1_m6_informational(capsys):
    rc, out, _ = run(capsys, ["verify-theorem1", "--size", "6"])
    assert rc == 0
    rows = json.loads(out)
    assert rows[0]["status"] == "INFO"
    assert rows[0]["observed_max"] == 0


def test_verify_range_guard(capsys):
    with pytest.raises(SystemExit):
        main(["verify-theorem1", "--size", "13"])  # needs --deep


def test_atlas_partial_on_small_range(tmp_path, capsys):
    reg_path = tmp_path / "fam.json"
    rep_path = tmp_path / "rep.json"
    rc, _, err = run(capsys, [
        "atlas", "--max-size", "9", "--threads", "2",
        "--output", str(reg_path), "--report", str(rep_path),
    ])
    assert rc == 3  # A1 needs size 11, A2 size 10, H4 never resolves
    report = json.loads(rep_path.read_text())
    assert "A1" in report["unresolved"]
    assert "A2" in report["unresolved"]
    entries = {e["id"] for e in json.loads(reg_path.read_text())}
    assert {"F1", "H1", "A3", "B0", "B1", "B3"} <= entries


def test_lemmas_report(tmp_path, capsys):
    out_file = tmp_path / "lemmas.json"
    rc, _, _ = run(capsys, [
        "lemmas", "--count", "3", "--seed", "7", "--output", str(out_file),
    ])
    report = json.loads(out_file.read_text())
    assert set(report["statuses"]) == set(report["loaded_statuses"])
    assert len(report["statuses"]) == 20
    # strict exit contract: 0 only when every rule matched or was skipped
    strict_ok = all(s in ("MATCH", "SKIPPED") for s in report["statuses"].values())
    assert rc == (0 if strict_ok else 1)
    for rule, status in report["statuses"].items():
        if status == "DISCREPANT":
            assert rule in report["interpolations"]


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["verify-theorem1", "--format", "xml"])
    assert exc.value.code == 2
