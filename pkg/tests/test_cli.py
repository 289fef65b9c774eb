import json
import subprocess
import sys

import pytest

from laddermap.cli import main
from laddermap.demo import demo_paths

from helpers import DotParser

LEX, LAD = (str(p) for p in demo_paths())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_demo(capsys):
    code, out, err = run(capsys, "validate", LEX, LAD)
    assert code == 0
    assert out == "ok: 34 elements, 84 ladders\n"
    assert err == ""


def test_validate_json(capsys):
    code, out, _ = run(capsys, "validate", LEX, LAD, "--format", "json")
    assert json.loads(out) == {"elements": 34, "ladders": 84, "status": "ok"}


def test_validate_strict_reports_same_category_steps(capsys):
    code, _, err = run(capsys, "validate", LEX, LAD, "--strict")
    assert code == 1
    assert "does not end at a value" in err


def test_hvm_dot(capsys):
    code, out, _ = run(capsys, "hvm", LEX, LAD, "--cutoff", "4", "--format", "dot")
    assert code == 0
    parsed = DotParser(out).parse()
    assert ("n21", "n29") in parsed.edges
    assert '  n21 -> n29 [label="18"];' in out.splitlines()


def test_dot_only_for_hvm(capsys):
    code, _, err = run(capsys, "matrix", LEX, LAD, "--format", "dot")
    assert code == 2
    assert "invalid choice" in err


@pytest.mark.parametrize("argv", [["hvm", LEX, LAD, "--cutoff", "0"], ["chains", LEX], ["bogus"], []])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_unknown_id_diagnostic(tmp_path, capsys):
    bad = tmp_path / "ladders.txt"
    bad.write_text("R01;1>21>29\n# comment\nR02;3>99\n", encoding="utf-8")
    code, out, err = run(capsys, "matrix", LEX, str(bad))
    assert code == 1
    assert out == ""
    assert err.strip() == f"{bad}:3: unknown element id 99"


def test_all_diagnostics_reported(tmp_path, capsys):
    bad = tmp_path / "ladders.txt"
    bad.write_text("R01;3\nR02;1>21\nR03;29>1\n", encoding="utf-8")
    code, _, err = run(capsys, "summarize", LEX, str(bad))
    assert code == 1
    assert [line.split(":")[-2] for line in err.strip().splitlines()] == ["1", "3"]


def test_missing_file(capsys):
    code, _, err = run(capsys, "validate", LEX, "/nonexistent/ladders.txt")
    assert code == 1
    assert "cannot read" in err


def test_out_file(tmp_path, capsys):
    target = tmp_path / "m.csv"
    code, out, _ = run(capsys, "matrix", LEX, LAD, "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert "17:01" in target.read_text(encoding="utf-8")


def test_no_partial_output_on_failure(tmp_path, capsys):
    bad = tmp_path / "ladders.txt"
    bad.write_text("R;3>99\n", encoding="utf-8")
    target = tmp_path / "out.txt"
    code, _, _ = run(capsys, "chains", LEX, str(bad), "--out", str(target))
    assert code == 1
    assert not target.exists()
    assert list(tmp_path.iterdir()) == [bad]


def test_summarize_labels_rule(capsys):
    code, out, _ = run(capsys, "summarize", LEX, LAD, "--score-rule", "subgraph")
    assert code == 0
    assert "score rule: subgraph" in out
    assert "21 -> 29" in out


def test_summarize_json(capsys):
    code, out, _ = run(capsys, "summarize", LEX, LAD, "--format", "json", "--top", "1")
    data = json.loads(out)
    assert data["top_links"] == [{"direct": 18, "from": 21, "indirect": 0, "to": 29}]
    counts = {e["id"]: e["count"] for e in data["elements"]}
    assert counts[3] == 11


def test_chains_text_names_rule(capsys):
    code, out, _ = run(capsys, "chains", LEX, LAD)
    assert code == 0
    assert "path_score" in out.splitlines()[0]


def test_sensitivity(capsys):
    code, out, _ = run(capsys, "sensitivity", LEX, LAD, "--format", "csv", "--max-cutoff", "3")
    lines = out.splitlines()
    assert lines[0] == "cutoff,edge_count,percent_direct_retained"
    assert lines[1].endswith(",100.0")
    assert len(lines) == 4


@pytest.mark.parametrize("command", ["validate", "summarize", "matrix", "hvm", "chains", "sensitivity"])
def test_help_documents_defaults(capsys, command):
    code, out, _ = run(capsys, command, "--help")
    assert code == 0
    assert "--format" in out and "default: text" in out
    if command in ("summarize", "hvm", "chains"):
        text = " ".join(out.split())
        assert "default: 4" in text
        assert "at least four direct relations" in text


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "laddermap", "validate", LEX, LAD], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout == "ok: 34 elements, 84 ladders\n"
