import io
import json
import sys

from gapcover.cli import main
from gapcover.instances import parse_document


def _no_floats(payload: str) -> dict:
    def boom(_):
        raise AssertionError("float leaked into a report")

    return json.loads(payload, parse_float=boom)


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generate_writes_deterministic_file_and_report(tmp_path, capsys):
    target = tmp_path / "a.json"
    argv = ["generate", "yes-set-cover", "--n", "8", "--m", "8", "--d", "5",
            "--eta", "3/2", "--seed", "7", "--out", str(target)]
    code, out, _ = _run(capsys, argv)
    assert code == 0
    report = _no_floats(out)
    assert report["expected_class"] == "YES"
    first = target.read_bytes()
    inst, params = parse_document(first)
    assert len(inst.sets) == 8 and params.d == 5

    again = tmp_path / "b.json"
    argv[-1] = str(again)
    code, out2, _ = _run(capsys, argv)
    assert code == 0
    assert again.read_bytes() == first
    r1, r2 = report, _no_floats(out2)
    r1.pop("wall_time_ms"), r2.pop("wall_time_ms")
    r1.pop("path"), r2.pop("path")
    assert r1 == r2


def test_generate_without_out_prints_instance(capsys):
    code, out, _ = _run(capsys, ["generate", "no-hypergraph", "--n", "5", "--m", "10",
                                 "--k", "2", "--d", "2", "--eta", "3/2", "--seed", "2"])
    assert code == 0
    doc = _no_floats(out)
    assert doc["type"] == "hypergraph_vc" and len(doc["edges"]) == 10


def test_solve_with_verify_agrees(tmp_path, capsys):
    target = tmp_path / "inst.json"
    _run(capsys, ["generate", "no-set-cover", "--n", "9", "--m", "9", "--d", "4",
                  "--eta", "2", "--seed", "3", "--out", str(target)])
    code, out, _ = _run(capsys, ["solve", str(target), "--verify"])
    assert code == 0
    report = _no_floats(out)
    assert report["verdict"]["answer"] == "NO"
    assert report["oracle_class"] == "NO"
    assert report["agreement"] is True
    assert isinstance(report["wall_time_ms"], int)
    assert len(report["instance_digest"]) == 64


def test_solve_reads_stdin(tmp_path, capsys, monkeypatch):
    target = tmp_path / "inst.json"
    _run(capsys, ["generate", "yes-set-cover", "--n", "6", "--m", "6", "--d", "4",
                  "--eta", "3/2", "--seed", "1", "--out", str(target)])
    fake = io.TextIOWrapper(io.BytesIO(target.read_bytes()))
    monkeypatch.setattr(sys, "stdin", fake)
    code, out, _ = _run(capsys, ["solve", "-"])
    assert code == 0
    assert _no_floats(out)["verdict"]["answer"] == "YES"


def test_solve_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"type":"set_cover"')
    code, _, err = _run(capsys, ["solve", str(bad)])
    assert code == 3 and _no_floats(err)["exit_code"] == 3

    missing = tmp_path / "nope.json"
    code, _, _ = _run(capsys, ["solve", str(missing)])
    assert code == 3

    out_of_range = tmp_path / "range.json"
    out_of_range.write_text(
        '{"type":"set_cover","universe_size":4,"sets":[[0,1],[2,3],[0,2],[1,3]],'
        '"d":1,"eta":{"num":2,"den":1}}\n'
    )
    code, _, err = _run(capsys, ["solve", str(out_of_range)])
    assert code == 2 and "need d >" in err


def test_zero_kernel_shortcut_flag(tmp_path, capsys):
    inst = tmp_path / "singletons.json"
    sets = json.dumps([[i] for i in range(13)], separators=(",", ":"))
    inst.write_text(
        '{"type":"set_cover","universe_size":13,"sets":' + sets +
        ',"d":4,"eta":{"num":3,"den":1}}\n'
    )
    code, out, _ = _run(capsys, ["solve", str(inst), "--zero-kernel-shortcut"])
    assert code == 0
    report = _no_floats(out)
    assert report["verdict"]["answer"] == "NO"
    assert report["verdict"]["decided_at"] == "weight"
    assert report["verdict"]["witness"]["hamming_weight"] == 13


def test_oracle_subcommand_and_type_mismatch(tmp_path, capsys):
    inst = tmp_path / "inst.json"
    _run(capsys, ["generate", "no-set-cover", "--n", "9", "--m", "9", "--d", "4",
                  "--eta", "2", "--seed", "3", "--out", str(inst)])
    code, out, _ = _run(capsys, ["oracle", str(inst), "--question", "min-cover"])
    assert code == 0
    report = _no_floats(out)
    assert report["optimum"] == 9
    assert report["witness"] == list(range(9))

    code, _, err = _run(capsys, ["oracle", str(inst), "--question", "min-vertex-cover"])
    assert code == 3 and "hypergraph" in err


def test_oracle_budget_exit_code(tmp_path, capsys):
    inst = tmp_path / "k5ish.json"
    _run(capsys, ["generate", "no-hypergraph", "--n", "5", "--m", "10", "--k", "2",
                  "--d", "2", "--eta", "3/2", "--seed", "2", "--out", str(inst)])
    code, _, err = _run(capsys, ["oracle", str(inst), "--question", "min-vertex-cover",
                                 "--budget", "2"])
    assert code == 4 and _no_floats(err)["exit_code"] == 4


def test_oracle_reports_infeasible(tmp_path, capsys):
    inst = tmp_path / "overlap.json"
    inst.write_text(
        '{"type":"set_cover","universe_size":3,"sets":[[0,1],[1,2]],'
        '"d":1,"eta":{"num":2,"den":1}}\n'
    )
    code, out, _ = _run(capsys, ["oracle", str(inst), "--question", "exact-cover"])
    assert code == 0
    assert _no_floats(out)["optimum"] == "infeasible"


def test_check_lemmas_random_batch(capsys):
    code, out, _ = _run(capsys, ["check-lemmas", "--random", "24", "--seed", "5"])
    assert code == 0
    report = _no_floats(out)
    assert report["instances"] == 24
    assert report["violations"] == []
    assert report["evaluated"]["verdict-oracle-agreement"] == 24


def test_check_lemmas_single_file(tmp_path, capsys):
    inst = tmp_path / "inst.json"
    _run(capsys, ["generate", "yes-hypergraph", "--n", "9", "--m", "8", "--k", "3",
                  "--d", "4", "--eta", "3/2", "--seed", "5", "--out", str(inst)])
    code, out, _ = _run(capsys, ["check-lemmas", str(inst)])
    assert code == 0
    assert _no_floats(out)["instances"] == 1


def test_bench_emits_integer_csv(capsys):
    code, out, _ = _run(capsys, ["bench", "--sizes", "10,20", "--seed", "4"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,m,digest,kernel_us,total_us"
    assert len(lines) == 3
    for line in lines[1:]:
        n, m, digest, kernel_us, total_us = line.split(",")
        assert n.isdigit() and m.isdigit() and kernel_us.isdigit() and total_us.isdigit()
        assert len(digest) == 64


def test_bench_json_format(capsys):
    code, out, _ = _run(capsys, ["bench", "--sizes", "10,20", "--seed", "4",
                                 "--format", "json"])
    assert code == 0
    rows = _no_floats(out)["rows"]
    assert [r["n"] for r in rows] == [10, 20]
