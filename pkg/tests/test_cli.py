"""
Tests for the command-line surface: outputs, persistence and exit status
"""

import io
import json

import pytest

import main as cli
from config import Settings, settings
from schemas.records import ClaimVerdict
from services.extremal_service import extremal_service
from services.graph6 import graph6_decode


def run(*argv, stdin=""):
    out = io.StringIO()
    code = cli.main(list(argv), stdout=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


# ----------------------------------------------------------------------
# Single-graph commands
# ----------------------------------------------------------------------

def test_construct_complete_graph():
    assert run("construct", "--family", "complete", "--n", "4") == (0, "C~\n")


def test_construct_outside_domain_is_a_domain_error():
    code, out = run("construct", "--family", "snk", "--n", "3", "--k", "5")
    assert code == cli.EXIT_DOMAIN_ERROR
    assert out == ""


def test_mu_json():
    code, out = run("--format", "json", "mu", "--g6", "C~")
    assert code == 0
    data = json.loads(out)
    assert data["mu"] == 3.0
    assert data["vector"] == [0.5, 0.5, 0.5, 0.5]


def test_mu_table_from_stdin():
    code, out = run("mu", "--stdin", stdin="C~\n\nBw\n")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].split() == ["graph6", "mu", "residual", "iterations"]
    assert [line.split()[0] for line in lines[2:]] == ["C~", "Bw"]
    assert lines[3].split()[1] == "2"


def test_bounds_json_lines():
    code, out = run("--format", "json", "bounds", "--g6", "C~")
    assert code == 0
    names = [json.loads(line)["name"] for line in out.splitlines()]
    assert "edges" in names
    assert "nikiforov" in names


def test_detect_csv():
    code, out = run("--format", "csv", "detect", "--g6", "C~", "--forbid", "C4,P5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "graph6,pattern,contains"
    assert sorted(lines[1:]) == ["C~,C4,true", "C~,P5,false"]


def test_malformed_graph6_is_a_domain_error():
    code, out = run("--format", "json", "mu", "--g6", "A")
    assert code == cli.EXIT_DOMAIN_ERROR
    report = json.loads(out)
    assert report["error"].startswith("Graph6")


# ----------------------------------------------------------------------
# Usage errors
# ----------------------------------------------------------------------

@pytest.mark.parametrize("argv", [
    [],
    ["mu"],
    ["extremal", "--n", "x"],
    ["detect", "--g6", "C~", "--forbid", "Q7"],
    ["--tol", "-1", "mu", "--g6", "C~"],
    ["--threads", "0", "trees", "--t", "4"],
    ["verify", "--claim", "conj1a", "--k", "2", "--n-from", "5", "--n-to", "6"],
])
def test_usage_errors(argv):
    code, out = run(*argv)
    assert code == cli.EXIT_USAGE
    assert out == ""


def test_help_exits_cleanly():
    assert run("--help")[0] == cli.EXIT_OK


# ----------------------------------------------------------------------
# Enumeration and extremal commands
# ----------------------------------------------------------------------

def test_trees_and_enumerate():
    assert len(run("trees", "--t", "6")[1].splitlines()) == 6
    assert len(run("enumerate", "--n", "4")[1].splitlines()) == 11
    assert len(run("enumerate", "--n", "4", "--connected")[1].splitlines()) == 6
    assert len(run("enumerate", "--n", "5", "--forbid", "P4")[1].splitlines()) == 9


def test_extremal_json_records():
    code, out = run("--format", "json", "extremal", "--n", "4..5", "--forbid", "P4", "--forbid", "C4")
    records = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert [(r["n"], r["spec"]["patterns"][0]["kind"]) for r in records] == [
        (4, "path"), (4, "cycle"), (5, "path"), (5, "cycle")
    ]
    assert records[0]["max_mu"] == pytest.approx(2.0, abs=1e-9)


def test_extremal_table_names_reference():
    code, out = run("extremal", "--n", "6", "--forbid", "P4")
    assert code == 0
    assert "S(6,1)" in out


def test_extremal_persists_and_resumes(tmp_path, monkeypatch):
    target = str(tmp_path / "run")
    code, first = run("--format", "json", "--output", target, "extremal", "--n", "4", "--forbid", "P4")
    assert code == 0

    def refuse(*args, **kwargs):
        raise AssertionError("completed cell was recomputed")

    monkeypatch.setattr(extremal_service, "extremal_mu", refuse)
    code, again = run("--format", "json", "--output", target, "--resume", "extremal", "--n", "4", "--forbid", "P4")
    assert code == 0
    assert again == first
    records = (tmp_path / "run" / "records.jsonl").read_text().splitlines()
    assert len(records) == 1


def test_gvariants_table():
    code, out = run("gvariants", "--n", "5", "--l", "3")
    assert code == 0
    assert out.splitlines()[2].split()[-1] == "yes"


def test_sandwich_json():
    code, out = run("--format", "json", "sandwich", "--n", "500", "1000", "--k", "1")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert len(rows) == 4
    assert rows[1]["shrinking"] is True


# ----------------------------------------------------------------------
# Claim commands
# ----------------------------------------------------------------------

def test_verify_table():
    code, out = run("verify", "--claim", "th3", "--k", "2", "--n-from", "5", "--n-to", "6")
    assert code == 0
    assert out.startswith("th3 k=2 n=5..6: verified-on-range")


def test_verify_precondition_failure():
    code, _ = run("verify", "--claim", "th1a", "--k", "3", "--n-from", "2", "--n-to", "4")
    assert code == cli.EXIT_DOMAIN_ERROR


def test_counterexample_exit_status(monkeypatch):
    verdict = ClaimVerdict.model_validate({
        "claim": "th2", "k": 1, "n_from": 5, "n_to": 5, "outcome": "counterexample",
        "points": [{
            "n": 5, "threshold": 2.5, "applicable": True, "candidates": 1, "above_threshold": 1,
            "exceptions": 1, "outcome": "counterexample",
            "witness": {"graph6": "D~{", "n": 5, "mu": 4.0, "threshold": 2.5, "missing": ["C4"]},
        }],
    })
    monkeypatch.setattr(extremal_service, "verify_claim", lambda *args, **kwargs: verdict)
    code, out = run("--format", "json", "verify", "--claim", "th2", "--k", "1", "--n-from", "5", "--n-to", "5")
    assert code == cli.EXIT_COUNTEREXAMPLE
    assert json.loads(out)["points"][0]["witness"]["graph6"] == "D~{"


def test_scan_never_signals_counterexample():
    code, out = run("--format", "json", "scan", "--conjecture", "1", "--k", "2", "--n-from", "5", "--n-to", "6")
    assert code == 0
    assert json.loads(out)["claim"] == "conj1a"


# ----------------------------------------------------------------------
# Configuration
# ----------------------------------------------------------------------

def test_tolerance_overrides_are_restored():
    eigen, compare = settings.EIGEN_TOLERANCE, settings.COMPARE_TOLERANCE
    code, _ = run("--tol", "1e-6", "--compare-tol", "1e-4", "mu", "--g6", "C~")
    assert code == 0
    assert (settings.EIGEN_TOLERANCE, settings.COMPARE_TOLERANCE) == (eigen, compare)


def test_subcommand_flags_are_never_abbreviations_of_global_flags():
    code, out = run("trees", "--t", "4")
    assert code == 0
    assert len(out.splitlines()) == 2

    code, out = run("construct", "--family", "friendship", "--t", "2")
    assert code == 0
    assert graph6_decode(out).order == 5

    assert run("construct", "--family", "friendship", "--n", "6")[0] == cli.EXIT_DOMAIN_ERROR
    assert run("gvariants", "--n", "4", "--l", "3")[0] == 0


@pytest.mark.slow
@pytest.mark.parametrize("conjecture", ["1", "2"])
def test_conjecture_scans_to_order_10_exit_cleanly(conjecture):
    code, out = run("--format", "json", "scan", "--conjecture", conjecture, "--k", "2",
                    "--n-from", "5", "--n-to", "10")
    assert code == cli.EXIT_OK
    verdict = json.loads(out)
    assert len(verdict["points"]) == 6
    assert verdict["outcome"] != "counterexample"


def test_verify_connected_flag():
    code, out = run("--format", "json", "verify", "--claim", "th1b", "--k", "1",
                    "--n-from", "6", "--n-to", "6", "--connected")
    assert code == 0
    verdict = json.loads(out)
    assert verdict["connected_only"] is True
    assert verdict["points"][0]["escaped"] == 1


def test_resume_without_output_uses_configured_directory(tmp_path, monkeypatch):
    monkeypatch.setattr(Settings, "RESULTS_DIR", str(tmp_path / "default"))
    code, first = run("--format", "json", "--resume", "extremal", "--n", "4", "--forbid", "P4")
    assert code == 0
    assert (tmp_path / "default" / "records.jsonl").read_text().strip() == first.strip()

    def refuse(*args, **kwargs):
        raise AssertionError("completed cell was recomputed")

    monkeypatch.setattr(extremal_service, "extremal_mu", refuse)
    code, again = run("--format", "json", "--resume", "extremal", "--n", "4", "--forbid", "P4")
    assert code == 0
    assert again == first
