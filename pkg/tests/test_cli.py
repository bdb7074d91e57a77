"""Command-line contract: output lines and exit codes."""

import json

import pandas as pd
import pytest

import main
from src.exact_core import binom2


@pytest.fixture
def run(isolated_config, capsys):
    """Run main.main with the isolated config and return (code, stdout, stderr)."""

    def invoke(*argv):
        code = main.main(["--config", str(isolated_config), *argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke


def test_exact(run):
    code, out, _ = run("exact", "5", "4")
    assert code == 0
    assert out.splitlines() == ["n=5 m=4", "r=3 q=1", "s=4 t=0", "C=18 S=20 f=20 winner=S"]


def test_exact_tie(run):
    code, out, _ = run("exact", "4", "6")
    assert code == 0
    assert "C=36 S=36 f=36 winner=tie" in out


def test_exact_out_of_range(run):
    code, out, err = run("exact", "5", "11")
    assert code == 1
    assert out == ""
    assert "edge count exceeds binom(n,2)" in err


@pytest.mark.parametrize("argv", [["exact", "5"], ["exact", "five", "4"], ["frobnicate"],
                                  ["construct", "5", "4"], ["verify", "--m", "3", "--stride", "2"]])
def test_usage_errors_exit_one(run, argv):
    code, _, err = run(*argv)
    assert code == 1
    assert "usage" in err


def test_bounds(run):
    code, out, _ = run("bounds", "5", "6")
    assert code == 0
    assert "C=36 S=34 f=36 winner=C subtle=1" in out
    assert "D=36 ~ 36" in out
    assert "F=-5 + sqrt(2197) ~ 41.8722 branch=sparse" in out
    assert "radical_upper=36 ~ 36" in out
    assert "radical_applies=yes" in out


def test_bounds_json(run):
    code, out, _ = run("bounds", "5", "0", "--json")
    assert code == 0
    data = json.loads(out)
    assert (data['f'], data['D'], data['F']) == (0, {'num': 0, 'den': 1}, {'p': 0, 'c': 0, 'k': 0})


def test_bounds_single_vertex(run):
    code, out, err = run("bounds", "1", "0")
    assert code == 0
    assert "f=0" in out
    assert "D=undefined" in out
    assert "de Caen bound undefined" in err


def test_construct_to_file(run, tmp_path, golden_dir):
    path = tmp_path / "star.txt"
    code, out, _ = run("construct", "5", "4", "--kind", "qs", "--out", str(path))
    assert code == 0
    assert out.strip() == "sumsq=20 S=20 match"
    assert path.read_text() == (golden_dir / "quasi_star_5_4.txt").read_text()


def test_construct_extremal_matches_quasi_star(run, tmp_path):
    qs, extremal = tmp_path / "qs.txt", tmp_path / "extremal.txt"
    run("construct", "5", "4", "--kind", "qs", "--out", str(qs))
    code, out, _ = run("construct", "5", "4", "--kind", "extremal", "--out", str(extremal))
    assert code == 0
    assert out.strip() == "sumsq=20 f=20 match"
    assert extremal.read_text() == qs.read_text()


def test_construct_to_stdout(run, golden_dir):
    code, out, _ = run("construct", "4", "6", "--kind", "qc")
    assert code == 0
    expected = (golden_dir / "quasi_complete_4_6.txt").read_text() + "sumsq=36 C=36 match\n"
    assert out == expected


def test_construct_infeasible(run):
    code, _, err = run("construct", "3", "4", "--kind", "qc")
    assert code == 1
    assert "n < required vertex count" in err


def test_construct_io_error(run, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    code, _, _ = run("construct", "5", "4", "--kind", "qs", "--out", str(blocker / "g.txt"))
    assert code == 3


def test_oracle_full_sweep(run):
    code, out, _ = run("oracle", "5")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 11
    assert all(line.endswith(" match") for line in lines)
    assert lines[4] == "n=5 m=4 oracle=20 f=20 match"


def test_oracle_single_m(run):
    code, out, _ = run("oracle", "7", "--m", "10")
    assert code == 0
    assert out.splitlines() == ["n=7 m=10 oracle=80 f=80 match"]


def test_oracle_cap(run):
    code, _, err = run("oracle", "9")
    assert code == 1
    assert "oracle cap exceeded" in err


def test_verify_all_checks(run, tmp_path, golden_dir):
    out_path = tmp_path / "grid.csv"
    code, out, _ = run("verify", "--n-max", "12", "--checks", "all", "--oracle-cap", "5", "--out", str(out_path))
    assert code == 0
    visited = sum(binom2(n) + 1 for n in range(1, 13))
    assert f"rows={visited} violations=0" in out
    assert "counterexamples=0" not in out
    frame = pd.read_csv(out_path)
    assert len(frame) == visited
    header = out_path.read_text().splitlines()[0]
    assert header == (golden_dir / "sweep_header.csv").read_text().strip()
    assert (tmp_path / "results" / "verification_report.txt").exists()


def test_verify_ratio(run, tmp_path):
    out_path = tmp_path / "ratio.csv"
    code, out, _ = run("verify", "--n-min", "1000", "--n-max", "1000", "--m", "250000",
                       "--checks", "de_caen_ratio", "--out", str(out_path))
    assert code == 0
    assert "n=1000 m=250000 D/f=1.06067" in out
    frame = pd.read_csv(out_path)
    assert frame.loc[0, 'de_caen_ratio'] == 'holds'
    assert 106.0 <= frame.loc[0, 'ratio_x100_display'] <= 106.2


def test_verify_violation_exit_code(run, tmp_path):
    code, out, _ = run("verify", "--n-min", "3", "--n-max", "3", "--m", "3", "--checks", "de_caen_ratio",
                       "--out", str(tmp_path / "v.csv"))
    assert code == 2
    assert "VIOLATION de_caen_ratio n=3 m=3" in out
    assert (tmp_path / "v_violations.csv").exists()


def test_verify_json(run, tmp_path):
    out_path = tmp_path / "grid.json"
    code, _, _ = run("verify", "--n-max", "6", "--format", "json", "--checks", "chain,oracle",
                     "--root-gap-r-max", "100", "--out", str(out_path))
    assert code == 0
    data = json.loads(out_path.read_text())
    assert data['summary']['rows_visited'] == sum(binom2(n) + 1 for n in range(1, 7))
    assert data['summary']['root_gap_r_max'] == 100


def test_verify_stride_above_full_limit(run, tmp_path):
    out_path = tmp_path / "wide.csv"
    code, out, _ = run("verify", "--n-min", "301", "--n-max", "301", "--stride", "500",
                       "--checks", "sharp_sandwich,monotone", "--out", str(out_path))
    assert code == 0
    assert len(pd.read_csv(out_path)) == binom2(301) // 500 + 1


@pytest.mark.parametrize("argv", [
    ["verify", "--n-max", "0"],
    ["verify", "--n-max", "400"],
    ["verify", "--checks", "bo9"],
    ["verify", "--n-max", "5", "--oracle-cap", "9"],
])
def test_verify_config_errors(run, argv):
    code, _, err = run(*argv)
    assert code == 1
    assert "error" in err


def test_verify_accepts_short_check_names(run, tmp_path):
    out_path = tmp_path / "short.csv"
    code, out, _ = run("verify", "--n-max", "8", "--checks", "bo1,bo2,bo3,bo4,p1,pro1,in5,pr0,sc,complement",
                       "--out", str(out_path))
    assert code == 0
    assert "violations=0" in out
    header = out_path.read_text().splitlines()[0].split(",")
    assert header[11:21] == [
        'radical_sandwich', 'radical_below_de_caen', 'sharp_sandwich', 'sharp_below_de_caen',
        'clique_lower', 'clique_upper', 'star_upper', 'root_gap', 'star_clique_identity',
        'complement_identity',
    ]


def test_verify_ratio106(run, tmp_path):
    out_path = tmp_path / "ratio106.csv"
    code, out, _ = run("verify", "--n-min", "1000", "--n-max", "1000", "--m", "250000",
                       "--checks", "ratio106", "--out", str(out_path))
    assert code == 0
    assert "n=1000 m=250000 D/f=1.06067" in out
    assert pd.read_csv(out_path).loc[0, 'de_caen_ratio'] == 'holds'
