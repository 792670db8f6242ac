import json

from cyclekit.cli import main
from cyclekit.families import complete
from cyclekit.formats import to_graph6


def test_analyze(capsys, tmp_path):
    assert main(["analyze", "--gen", "complete:6", "--k", "4"]) == 0
    out = capsys.readouterr().out
    assert "lengths=[3, 4, 5, 6]" in out and "ce=2" in out
    report = tmp_path / "r.json"
    assert main(["analyze", "--gen", "complete:6", "--json",
                 "--out", str(report)]) == 0
    payload = json.loads(report.read_text())
    assert payload["lengths"] == [3, 4, 5, 6] and payload["c"] == 4


def test_analyze_from_file(tmp_path):
    path = tmp_path / "k5.g6"
    path.write_text(to_graph6(complete(5)) + "\n")
    assert main(["analyze", "--in", str(path)]) == 0
    assert main(["analyze", "--in", str(tmp_path / "missing.g6")]) == 1


def test_paths_command(capsys):
    assert main(["paths", "--gen", "kbip:4,4", "--x", "0", "--y", "1",
                 "--k", "3"]) == 0
    assert "lengths [2, 4, 6]" in capsys.readouterr().out
    # hypothesis violation surfaces as exit 2
    assert main(["paths", "--gen", "kbip:4,4", "--x", "0", "--y", "1",
                 "--k", "9"]) == 2


def test_cycles_command(capsys):
    assert main(["cycles", "--gen", "complete:6", "--k", "4",
                 "--kind", "even"]) == 0
    assert "lengths [4, 6]" in capsys.readouterr().out
    assert main(["cycles", "--gen", "complete:10", "--k", "5"]) == 0


def test_verify_command(capsys):
    assert main(["verify", "--claim", "T8", "--gen", "complete:6",
                 "--k", "4"]) == 0
    assert "PASS" in capsys.readouterr().out
    assert main(["verify", "--claim", "T5", "--gen", "kttchain:2,3",
                 "--k", "4"]) == 2


def test_sweep_command(capsys, tmp_path):
    out = tmp_path / "verdicts.jsonl"
    code = main(["sweep", "--claim", "T5", "--gen", "catalog:4",
                 "--kmin", "1", "--kmax", "3", "--out", str(out)])
    assert code == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["violations"] == 0 and summary["gated"] > 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == summary["gated"]
    assert all(json.loads(l)["hypothesis_met"] for l in lines)


def test_sweep_determinism_bytes(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    for target in (a, b):
        main(["sweep", "--claim", "T4", "--gen", "catalog:4",
              "--kmin", "1", "--kmax", "2", "--out", str(target)])
    assert a.read_bytes() == b.read_bytes()


def test_hunt_command(capsys):
    code = main(["hunt", "--claim", "C1", "--gen", "rand:n=8,d=3,seed=9",
                 "--k", "2", "--count", "10"])
    assert code == 0
    assert "violations=0" in capsys.readouterr().out


def test_gen_command(capsys):
    assert main(["gen", "--gen", "complete:4"]) == 0
    assert capsys.readouterr().out.strip() == "C~"
    assert main(["gen", "--gen", "catalog:3", "--count", "3"]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 3
