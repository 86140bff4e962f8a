import csv
import io
from pathlib import Path

import pytest

from conscheck.cli import BENCH_HEADER, main
from conscheck.core import is_consistent
from conscheck.io import parse_instance, parse_verdict
from conscheck.oracle import oracle_solve
from conscheck.reductions import brute_force_sat, parse_dimacs

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_fig1(capsys):
    code, out, _ = run(capsys, "solve", CORPUS / "fig1.cc")
    assert code == 0 and out.startswith("SOLUTION VSET")
    inst = parse_instance((CORPUS / "fig1.cc").read_text())
    assert is_consistent(inst, parse_verdict(out))


def test_oracle_contradiction(capsys):
    code, out, _ = run(capsys, "oracle", CORPUS / "contradiction.cc")
    assert (code, out) == (1, "NO-SOLUTION\n")


def test_gen_sat_then_solve(tmp_path, capsys):
    target = tmp_path / "fig1.cc"
    assert run(capsys, "gen", "sat2col", "--dimacs", CORPUS / "fig1.cnf", "-o", target)[0] == 0
    code, out, _ = run(capsys, "solve", target)
    sat = brute_force_sat(parse_dimacs((CORPUS / "fig1.cnf").read_text()))
    assert (code == 0) == sat
    verdict = tmp_path / "fig1.sol"
    verdict.write_text(out)
    code, out, _ = run(capsys, "check", target, verdict)
    assert (code, out) == (0, "consistent: true\n")


def test_check_rejects_wrong_verdict(tmp_path, capsys):
    verdict = tmp_path / "bad.sol"
    verdict.write_text("SOLUTION PSET 0-1\n")
    code, out, _ = run(capsys, "check", CORPUS / "matching_example.cc", verdict)
    assert (code, out) == (1, "consistent: false\n")


@pytest.mark.parametrize(
    "argv,problem",
    [
        (["sc2match", "--universe", "2", "--set", "1", "--set", "2", "--k", "2"], "matching"),
        (["sc2path", "--universe", "2", "--set", "1,2", "--k", "1"], "path"),
        (["sc2path", "--universe", "2", "--set", "1,2", "--k", "1", "--no-anchor"], "path"),
        (["sc2is", "--universe", "1", "--set", "1", "--k", "1"], "independent-set-deg"),
        (["is2is", "--n", "3", "--edges", "0-1,1-2", "--k", "2"], "independent-set-deg"),
    ],
)
def test_gen_kinds(capsys, argv, problem):
    code, out, _ = run(capsys, "gen", *argv)
    assert code == 0
    inst = parse_instance(out)
    assert inst.problem.value == problem
    assert oracle_solve(inst, within_positives=True) is not None


def test_gen_no_anchor_drops_two_negatives(capsys):
    base = ["gen", "sc2path", "--universe", "2", "--set", "1", "--set", "2", "--k", "1"]
    anchored = parse_instance(run(capsys, *base)[1])
    literal = parse_instance(run(capsys, *base, "--no-anchor")[1])
    assert anchored.t_minus == literal.t_minus + 2


def test_pac_bundled(capsys):
    code, out, _ = run(capsys, "pac", "matching", "--eps", "0.2", "--delta", "0.2", "--runs", "5", "--seed", "3")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("# problem=matching")
    assert lines[1] == "run,m,err,tneg" and len(lines) == 8


def test_pac_writes_csv_file(tmp_path, capsys):
    target = tmp_path / "pac.csv"
    code, out, err = run(capsys, "pac", "split-graph", "--eps", "0.2", "--delta", "0.2", "--runs", "4", "--csv", target)
    assert code == 0 and out == "" and "fraction_err_le_eps=" in err
    assert target.read_text().splitlines()[1] == "run,m,err,tneg"


def test_bench_csv(tmp_path, capsys):
    for name in ("path_triangle.cc", "fig1.cc", "contradiction.cc"):
        (tmp_path / name).write_text((CORPUS / name).read_text())
    code, out, _ = run(capsys, "bench", tmp_path, "--seed", "4")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == BENCH_HEADER
    assert [r[0] for r in rows[1:]] == ["two-coloring", "two-coloring", "path"]
    assert rows[1][-1] == "no-solution" and rows[2][-1] == "found"
    assert rows[3][6] == "path_cc:random:seed=4"
    assert all(int(r[7]) >= 0 for r in rows[1:])


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["solve"],
        ["solve", "x.cc", "--mode", "fancy"],
        ["gen", "sc2match", "--universe", "2"],
        ["gen", "sat2col"],
        ["pac", "matching", "--eps", "0.2"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_input_errors_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.cc"
    bad.write_text("CONSCHECK 1\nPROBLEM two-coloring\nN 2\nT 1\nS 1 1\n0 0\n")
    code, _, err = run(capsys, "solve", bad)
    assert code == 2 and "self-loop at line 6" in err
    assert run(capsys, "solve", tmp_path / "missing.cc")[0] == 2
    assert run(capsys, "pac", "no-such-scenario", "--eps", "0.2", "--delta", "0.2", "--runs", "1")[0] == 2


@pytest.mark.parametrize("path", sorted(CORPUS.glob("*.cc")), ids=lambda p: p.stem)
def test_solve_and_oracle_agree_on_corpus(capsys, path):
    solve_code, solve_out, _ = run(capsys, "solve", path)
    oracle_code, _, _ = run(capsys, "oracle", path)
    assert solve_code == oracle_code
    if solve_code == 0:
        assert is_consistent(parse_instance(path.read_text()), parse_verdict(solve_out))
