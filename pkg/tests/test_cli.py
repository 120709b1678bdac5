import json
import re

import pytest

from entstruct import StabilizerTableau, build_diagram
from entstruct import diagram_io
from entstruct.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_ghz(capsys):
    code, out, err = run_cli(capsys, "gen", "ghz", "8")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 8
    assert lines[-1] == "X1 X2 X3 X4 X5 X6 X7 X8"
    StabilizerTableau.from_text(out).validate()


def test_gen_cluster_obc(capsys):
    code, out, err = run_cli(capsys, "gen", "cluster1d", "8", "--boundary", "obc")
    assert code == 0
    assert "X1 Z2" in out.splitlines()


def test_gen_fig2_warns(capsys):
    code, out, err = run_cli(capsys, "gen", "fig2")
    assert code == 0
    assert len(out.strip().splitlines()) == 10
    assert "9 independent" in err


def test_gen_usage_errors(capsys):
    assert run_cli(capsys, "gen", "ghz")[0] == 2  # missing n
    assert run_cli(capsys, "gen", "ghz", "1")[0] == 2  # bad n
    assert run_cli(capsys, "gen", "fig1", "8")[0] == 2  # stray n
    with pytest.raises(SystemExit) as exc:
        main(["gen", "wstate", "4"])
    assert exc.value.code == 2


def write_state(tmp_path, capsys, *argv):
    code, out, _ = run_cli(capsys, *argv)
    assert code == 0
    path = tmp_path / "state.txt"
    path.write_text(out)
    return path


def test_analyze_text_ghz(tmp_path, capsys):
    path = write_state(tmp_path, capsys, "gen", "ghz", "8")
    code, out, _ = run_cli(capsys, "analyze", "--in", str(path))
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("cluster w=2")
    assert sum(1 for l in lines if l.strip().startswith("qubit ")) == 8
    assert sum(1 for l in lines if "cluster" in l) == 1


def test_analyze_metrics_block(tmp_path, capsys):
    path = write_state(tmp_path, capsys, "gen", "fig1")
    code, out, _ = run_cli(capsys, "analyze", "--in", str(path), "--metrics")
    assert code == 0
    assert "depth: 4" in out
    assert "layers: 2" in out
    assert "min_weight: 2" in out


def test_analyze_json_round_trip(tmp_path, capsys):
    path = write_state(tmp_path, capsys, "gen", "fig1")
    code, out, _ = run_cli(capsys, "analyze", "--in", str(path), "--format", "json")
    assert code == 0
    doc = diagram_io.from_json(out)
    t = StabilizerTableau.from_text(path.read_text())
    assert doc == diagram_io.document(build_diagram(t))
    assert doc.metrics.depth == 4 and doc.metrics.layers == 2
    payload = json.loads(out)
    assert payload["schema"] == "1"
    assert payload["metrics"]["min_weight"] == 2


def test_json_rejects_unknown_fields():
    t = StabilizerTableau.from_text("Z1 Z2\nX1 X2\n")
    text = diagram_io.to_json(diagram_io.document(build_diagram(t)))
    payload = json.loads(text)
    payload["extra"] = 1
    with pytest.raises(diagram_io.DocumentError, match="unknown fields"):
        diagram_io.from_json(json.dumps(payload))
    payload = json.loads(text)
    payload["roots"][0]["color"] = "red"
    with pytest.raises(diagram_io.DocumentError, match="unknown fields"):
        diagram_io.from_json(json.dumps(payload))


def check_dot_structure(text):
    assert text.startswith("graph ")
    depth = 0
    for ch in text:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            assert depth >= 0
    assert depth == 0
    body = text.splitlines()[1:-1]
    for line in body:
        s = line.strip()
        assert (
            s == "}"
            or s.startswith("subgraph cluster_")
            or s.startswith("label=")
            or s.startswith("node ")
            or re.fullmatch(r'q\d+ \[label="\d+"\];', s)
        ), f"unexpected DOT line: {s!r}"


def test_analyze_dot(tmp_path, capsys):
    path = write_state(tmp_path, capsys, "gen", "cluster1d", "8", "--boundary", "obc")
    code, out, _ = run_cli(capsys, "analyze", "--in", str(path), "--format", "dot")
    assert code == 0
    check_dot_structure(out)
    t = StabilizerTableau.from_text(path.read_text())
    n_clusters = sum(1 for _ in build_diagram(t).cluster_nodes())
    assert out.count("subgraph cluster_") == n_clusters
    for q in range(1, 9):
        assert f'q{q} [label="{q}"];' in out


def test_analyze_invalid_tableau(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("X1\nZ1 Z2\n")  # anticommuting pair
    code, out, err = run_cli(capsys, "analyze", "--in", str(bad))
    assert code == 1
    assert "anticommute" in err


def test_verify_named_states(tmp_path, capsys):
    for argv in (("gen", "fig1"), ("gen", "ghz", "8")):
        path = write_state(tmp_path, capsys, *argv)
        code, out, _ = run_cli(capsys, "verify", "--in", str(path))
        assert code == 0
        assert "all checks passed" in out


def test_verify_rejects_corrupt_tableau(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("X1\nZ1 Z2\n")
    code, _, err = run_cli(capsys, "verify", "--in", str(bad))
    assert code == 1
    assert "anticommute" in err


def test_verify_size_cap(tmp_path, capsys):
    path = write_state(tmp_path, capsys, "gen", "ghz", "16")
    code, _, err = run_cli(capsys, "verify", "--in", str(path))
    assert code == 2
    assert "capped" in err


def test_ensemble_writes_deterministic_files(tmp_path, capsys):
    base = tmp_path / "run"
    argv = (
        "ensemble", "--kind", "measurement", "--L", "8", "--samples", "5",
        "--seed", "7", "--out", str(base),
    )
    code, out1, _ = run_cli(capsys, *argv)
    assert code == 0
    csv1 = (tmp_path / "run.csv").read_bytes()
    json1 = (tmp_path / "run.json").read_bytes()
    code, out2, _ = run_cli(capsys, *argv)
    assert code == 0
    assert (tmp_path / "run.csv").read_bytes() == csv1
    assert (tmp_path / "run.json").read_bytes() == json1
    assert out1 == out2
    rows = csv1.decode().strip().splitlines()
    assert len(rows) == 6  # header + 5 records
    payload = json.loads(json1)
    assert payload[0]["spec"]["kind"] == "measurement_only"


def test_ensemble_multiple_l_values(tmp_path, capsys):
    base = tmp_path / "multi"
    code, out, _ = run_cli(
        capsys,
        "ensemble", "--kind", "measurement", "--L", "8..12..4", "--samples", "3",
        "--seed", "1", "--out", str(base),
    )
    assert code == 0
    rows = (tmp_path / "multi.csv").read_text().strip().splitlines()
    assert len(rows) == 7  # header + 2 sizes x 3 samples
    assert len(json.loads((tmp_path / "multi.json").read_text())) == 2


def test_ensemble_bad_l_spec(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["ensemble", "--kind", "unitary", "--L", "8..x"])
    assert exc.value.code == 2


def test_ensemble_unwritable_output(tmp_path, capsys):
    code, _, err = run_cli(
        capsys,
        "ensemble", "--kind", "measurement", "--L", "8", "--samples", "2",
        "--seed", "1", "--out", str(tmp_path / "missing_dir" / "base"),
    )
    assert code == 1
    assert "cannot write" in err


def test_analyze_reads_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("Z1 Z2\nX1 X2\n"))
    code, out, _ = run_cli(capsys, "analyze")
    assert code == 0
    assert out.startswith("cluster w=2")
