from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from toricgraph import corpus, gb
from toricgraph.algebra import parse_binomial, parse_monomial
from toricgraph.cli import main

DATA = Path(__file__).resolve().parent.parent / "data" / "graphs"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--format", "json", *argv)
    return code, json.loads(out)


def test_ideal(capsys):
    code, out, _ = run(capsys, "ideal", str(DATA / "glued-squares.graph"))
    assert code == 0
    names = corpus.GLUED_SQUARES.names
    got = {parse_binomial(line, names) for line in out.splitlines()}
    want = {parse_binomial(s, names) for s in ("e1*e5 - e6*e7", "e2*e4 - e3*e7")}
    assert {frozenset(b.terms()) for b in got} == {frozenset(b.terms()) for b in want}
    code, out, _ = run(capsys, "ideal", str(DATA / "triangle.graph"))
    assert code == 0 and out.strip() == "zero ideal"
    code, data = run_json(capsys, "ideal", "@extended-bowtie")
    assert len(data["generators"]) == 1
    assert sum(parse_binomial(data["generators"][0], corpus.EXTENDED_BOWTIE.names).plus) == 5


def test_init_partial_order(capsys):
    code, data = run_json(capsys, "init", "@glued-squares", "--partial", "--order", "lex:e6,e3")
    assert code == 0
    assert data["order"] == "lex:e6,e3,e1,e2,e4,e5,e7"
    assert set(data["generators"]) == {"e6*e7", "e3*e7", "e2*e4*e6"}
    code, data = run_json(capsys, "init", "@glued-squares", "--partial", "--order", "lex:e6,e3",
                          "--method", "graver")
    assert set(data["generators"]) == {"e6*e7", "e3*e7", "e2*e4*e6"}
    # a partial order without --partial is refused
    code, _, err = run(capsys, "init", "@glued-squares", "--order", "lex:e6,e3")
    assert code == 2 and "order" in err


def test_init_k4_and_tree(capsys, tmp_path):
    code, data = run_json(capsys, "init", "@k4", "--order", "lex:e1,e2,e3,e4,e5,e6")
    assert set(data["generators"]) == {"e1*e5", "e2*e4"}
    tree = tmp_path / "path.graph"
    tree.write_text("4\n1 2\n2 3\n3 4\n")
    code, data = run_json(capsys, "init", str(tree))
    assert code == 0 and data["generators"] == []


def test_gb(capsys):
    code, out, _ = run(capsys, "gb", "@k4", "--order", "lex:e1,e2,e3,e4,e5,e6")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("vars=6 order=lex:")
    assert len(lines) == 3


def test_kmy(capsys):
    code, data = run_json(capsys, "kmy", "@k4", "--edge", "e1", "--order", "lex:e1,e2,e3,e4,e5,e6")
    assert code == 0
    assert set(data["C"]) == {"e5", "e2*e4 - e3*e6"}
    assert data["N"] == ["e2*e4 - e3*e6"] and data["degenerate"] is False
    code, out, _ = run(capsys, "kmy", "@glued-squares", "--edge", "e6")
    assert code == 0 and "degenerate: no" in out
    code, _, err = run(capsys, "kmy", "@k4", "--edge", "e9")
    assert code == 2 and "e9" in err


def test_height(capsys):
    code, data = run_json(capsys, "height", "@glued-squares", "--edges", "e6,e3")
    assert code == 0
    assert data["formula"] == data["initial_ideal"] == data["nondegenerate_steps"] == 2
    assert [s["edge"] for s in data["deletion_sequence"]] == ["e6", "e3"]
    code, data = run_json(capsys, "height", "@k4")
    assert (data["formula"], data["initial_ideal"]) == (2, 2)
    code, _, err = run(capsys, "height", "@k4", "--edges", "e6,x")
    assert code == 2


def test_chroma(capsys):
    code, data = run_json(capsys, "chroma", "@extended-bowtie")
    assert code == 0
    assert (data["bound"], data["exact_chromatic_number"], data["delta_plus_one"]) == (4, 3, 4)
    assert data["cover"] == ["e1"] and data["principal_shortcut"] == 4
    code, data = run_json(capsys, "chroma", "@k4")
    assert (data["bound"], data["exact_chromatic_number"], data["delta_plus_one"]) == (5, 4, 4)
    assert data["principal_shortcut"] is None
    code, data = run_json(capsys, "chroma", "@bowtie")
    assert (data["bound"], data["exact_chromatic_number"], data["delta_plus_one"]) == (4, 3, 5)
    code, data = run_json(capsys, "chroma", "@glued-squares", "--partial", "--order", "lex:e6,e3")
    assert data["bound"] == 5 and len(data["cover"]) == 2
    names = corpus.GLUED_SQUARES.names
    for m, v in data["divisibility_witness"].items():
        assert parse_monomial(m, names)[names.index(v)] > 0
    code, out, _ = run(capsys, "chroma", "@glued-squares", "--search", "6")
    assert code == 0 and "bound |E|+3" in out


def test_graver(capsys):
    code, data = run_json(capsys, "graver", "@glued-squares", "--walks")
    assert code == 0 and len(data["elements"]) == 3
    for row in data["elements"]:
        assert row["walk"][0] == row["walk"][-1]
    code, law = run_json(capsys, "graver", "@glued-squares", "--method", "lawrence")
    assert {r["binomial"] for r in law["elements"]} == {r["binomial"] for r in data["elements"]}
    code, out, _ = run(capsys, "graver", "@triangle")
    assert out.strip() == "(empty)"


def test_export_m2(capsys):
    code, out, _ = run(capsys, "export-m2", "@k4")
    assert code == 0 and "ker phi" in out and "QQ[e1,e2,e3,e4,e5,e6]" in out


def test_verify_single_and_exhaustive(capsys):
    code, data = run_json(capsys, "verify", "@glued-squares")
    assert code == 0 and data["ok"] and data["graphs"] == 1
    code, data = run_json(capsys, "verify", "--exhaustive", "4", "--orders", "2")
    assert code == 0 and data["graphs"] == 1 + 1 + 2 + 6
    assert all(v["failed"] == 0 for v in data["properties"].values())
    code, _, err = run(capsys, "verify")
    assert code == 2


def test_parse_error_reports_line(capsys):
    code, out, err = run(capsys, "ideal", str(DATA / "broken.graph"))
    assert code == 2 and out == ""
    assert "line 3" in err and err.count("line 3") == 1


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "ideal", str(tmp_path / "missing.graph"))[0] == 2
    assert run(capsys, "ideal", "@nonesuch")[0] == 2
    assert run(capsys, "--max-edges", "3", "ideal", "@k4")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_budget_exhaustion_is_a_capability_failure(capsys, tmp_path):
    # K5 with a pendant edge: not seen elsewhere, so nothing is cached
    k5 = tmp_path / "k5.graph"
    k5.write_text("6\n" + "".join(f"{u} {v}\n" for u in range(1, 6) for v in range(u + 1, 6)) + "5 6\n")
    code, _, err = run(capsys, "--budget", "3", "gb", str(k5), "--order", "grevlex")
    assert code == 1 and "capability" in err
    assert gb._default_budget == gb.DEFAULT_GENERATOR_BUDGET
    assert run(capsys, "--budget", "0", "ideal", "@k4")[0] == 2


def test_outputs_are_deterministic(capsys):
    argv = ("--seed", "11", "--format", "json", "chroma", "@glued-squares", "--search", "5")
    a = run(capsys, *argv)[1]
    b = run(capsys, *argv)[1]
    assert a == b
    assert json.loads(a) == json.loads(b)


def test_module_entry_point_and_logging(tmp_path):
    env = {"TORICGRAPH_LOG": "DEBUG", "PATH": "/usr/bin:/bin"}
    r = subprocess.run([sys.executable, "-m", "toricgraph", "ideal", "@square"],
                       capture_output=True, text=True, env=env, check=False)
    assert r.returncode == 0 and r.stdout.strip() == "e1*e3 - e2*e4"
