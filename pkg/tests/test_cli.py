import json

import pytest

from rainbowmatch.cli import EXIT_GUARANTEE, EXIT_INPUT, EXIT_OK, main


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


K4_TEXT = "0 1 0\n2 3 0\n0 2 1\n1 3 1\n0 3 2\n1 2 2\n"


def test_find_single_edge(write, capsys):
    assert main(["find", write("g.txt", "0 1 5\n")]) == EXIT_OK
    assert capsys.readouterr().out == "0 1 5\n"


def test_find_rejects_self_loop(write, capsys):
    assert main(["find", write("g.txt", "0 0 1\n")]) == EXIT_INPUT
    assert "loop" in capsys.readouterr().err


def test_find_rejects_improper_coloring(write, capsys):
    assert main(["find", write("g.txt", "0 1 0\n1 2 0\n")]) == EXIT_INPUT


def test_find_missing_file(capsys, tmp_path):
    assert main(["find", str(tmp_path / "nope.txt")]) == EXIT_INPUT


def test_find_json_report(write, capsys):
    path = write("k.txt", "")
    assert main(["gen", "kab", "4", "36", "--out", path]) == EXIT_OK
    assert main(["find", "--json", path]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert {"n", "m", "delta", "Delta", "threshold", "matching", "reduction_steps",
            "trace_summary", "guarantee_met", "elapsed_ns"} <= report.keys()
    assert report["delta"] == 4 and len(report["matching"]) == 4
    assert report["guarantee_met"] and report["trace_summary"]["violations"] == []


def test_find_then_verify(write, capsys):
    g = write("g.txt", "")
    main(["gen", "random", "27", "4", "--seed", "3", "--out", g])
    capsys.readouterr()
    assert main(["find", g]) == EXIT_OK
    m = write("m.txt", capsys.readouterr().out)
    assert main(["verify", g, m]) == EXIT_OK
    assert capsys.readouterr().out == "ok: rainbow matching of size 4\n"


def test_verify_reports_problems(write, capsys):
    g = write("g.txt", "0 1 0\n2 3 1\n4 5 0\n")
    assert main(["verify", g, write("m1.txt", "0 1 0\n4 5 0\n")]) == EXIT_INPUT
    assert "duplicate color" in capsys.readouterr().err
    assert main(["verify", g, write("m2.txt", "0 2 1\n")]) == EXIT_INPUT
    assert "unknown edge" in capsys.readouterr().err


def test_oracle_commands(write, capsys):
    assert main(["oracle", write("k4.txt", K4_TEXT)]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == "max 1"
    sq4 = write("sq4.txt", "4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n")
    assert main(["oracle", "--square", sq4]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == "max 3"
    sq3 = write("sq3.txt", "3\n0 1 2\n1 2 0\n2 0 1\n")
    assert main(["oracle", "--square", "--k", "3", sq3]) == EXIT_OK
    assert capsys.readouterr().out == "yes\n"
    assert main(["oracle", "--cap", "5", write("k4b.txt", K4_TEXT)]) == EXIT_INPUT
    assert "cap" in capsys.readouterr().err


def test_gen_outputs(capsys):
    assert main(["gen", "latin-cyclic", "3", "--square"]) == EXIT_OK
    assert capsys.readouterr().out == "3\n0 1 2\n1 2 0\n2 0 1\n"
    assert main(["gen", "kab", "2", "3"]) == EXIT_OK
    assert len(capsys.readouterr().out.splitlines()) == 6
    assert main(["gen", "kab", "2"]) == EXIT_INPUT
    assert main(["gen", "random", "4", "4"]) == EXIT_INPUT


def test_bench_csv(write, capsys):
    out = write("b.csv", "")
    assert main(["bench", "--deltas", "2", "--sizes", "6,12", "--reps", "3",
                 "--csv-out", out]) == EXIT_OK
    lines = open(out).read().splitlines()
    assert lines[0] == "delta,n,m,reps,median_ns,matching_size"
    assert len(lines) == 3
    assert "ratio" in capsys.readouterr().err
    assert main(["bench", "--deltas", "", "--sizes", "6"]) == EXIT_INPUT


def test_trace_violation_exit_code(write, capsys, monkeypatch):
    from rainbowmatch import cli
    from rainbowmatch.greedy import Violation

    monkeypatch.setattr(cli, "check_trace", lambda trace, m: [Violation("mu-bound", 1, "x")])
    assert main(["find", write("k4.txt", K4_TEXT)]) == EXIT_GUARANTEE
    assert "mu-bound" in capsys.readouterr().err
    assert main(["find", "--no-trace-check", write("k4.txt", K4_TEXT)]) == EXIT_OK
