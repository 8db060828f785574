import json

import pytest

from braidrep.cli import parse_rep_spec, run
from braidrep.errors import SpecParseError
from braidrep.zoo import character_rep, direct_sum, tym_standard


def capture(capsys, argv):
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_spec_parser_atoms():
    rep, meta = parse_rep_spec("tym:n=6,u=2")
    assert rep == tym_standard(6, 2)
    assert meta == {"family": "tym", "n": 6, "u": 2}
    rep, _ = parse_rep_spec("char:n=4,y=1/2")
    assert rep == character_rep(4, "1/2")


def test_spec_parser_combinators():
    rep, meta = parse_rep_spec("tensor(char:n=4,y=2,y=3)")
    assert rep == character_rep(4, 6)
    assert meta["family"] == "tensor"
    rep, _ = parse_rep_spec("dsum(char:n=5,y=2,char:n=5,y=3)")
    assert rep == direct_sum(character_rep(5, 2), character_rep(5, 3))
    rep, meta = parse_rep_spec("conj(tym:n=5,u=2,seed=3)")
    assert meta == {"family": "conj", "seed": 3}
    assert rep.r == 5 and rep != tym_standard(5, 2)


def test_spec_parser_rejections():
    for bad in ("nope:n=3", "tym:n=6", "tym:n=6,u=2,extra=1", "dsum(char:n=5,y=2)",
                "tym:n=6,u=0/1", "conj(tym:n=5,u=2,seed=x)"):
        with pytest.raises((SpecParseError, ValueError)):
            parse_rep_spec(bad)


def test_graph_verb_emits_dot_path(capsys):
    code, out, _ = capture(capsys, ["graph", "tym:n=6,u=2", "--format", "dot"])
    assert code == 0
    assert out.startswith("graph friendship {")
    assert 'label="ContainsChain";' in out
    for edge in ("s1 -- s2;", "s2 -- s3;", "s3 -- s4;", "s4 -- s5;"):
        assert edge in out
    assert "s0" not in out


def test_graph_verb_full_includes_wraparound(capsys):
    code, out, _ = capture(capsys, ["graph", "tym:n=6,u=2", "--format", "dot", "--full"])
    assert code == 0
    assert "s0 -- s1;" in out and "s0 -- s5;" in out


def test_analyze_verb_reports_recovered_parameter(capsys):
    code, out, _ = capture(capsys, ["analyze", "conj(tym:n=7,u=4,seed=9)", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["standard_form"]["u"] == "4"
    assert data["corank"] == 2
    assert data["irreducibility"]["tag"] == "AbsolutelyIrreducible"


def test_irreducible_verb_at_degenerate_parameter(capsys):
    code, out, _ = capture(capsys, ["irreducible", "tym:n=6,u=1"])
    assert code == 0
    data = json.loads(out)
    assert data["tag"] == "Reducible"
    assert data["witness"] == [["1"]] * 6


def test_irreducible_verb_generic_path(capsys):
    code, out, _ = capture(capsys, ["irreducible", "burau:n=5,t=2"])
    assert code == 0
    data = json.loads(out)
    assert data["tag"] == "AbsolutelyIrreducible"
    assert data["algebra_dim"] == 16


def test_verify_verb_text(capsys):
    code, out, _ = capture(capsys, ["verify", "tym:n=5,u=3", "--format", "text"])
    assert code == 0
    assert "braid relations: ok" in out
    assert "far commutation: ok" in out


def test_output_is_deterministic(capsys):
    argv = ["analyze", "conj(tym:n=6,u=2,seed=5)", "--seed", "5"]
    _, first, _ = capture(capsys, argv)
    _, second, _ = capture(capsys, argv)
    assert first == second


def test_make_then_analyze_file_matches_builtin(tmp_path, capsys):
    path = tmp_path / "rep.json"
    code, _, _ = capture(capsys, ["make", "tym:n=6,u=2", "--out", str(path)])
    assert code == 0
    _, from_file, _ = capture(capsys, ["analyze", str(path), "--seed", "1"])
    _, from_spec, _ = capture(capsys, ["analyze", "tym:n=6,u=2", "--seed", "1"])
    assert from_file == from_spec


def test_make_writes_wire_format(tmp_path, capsys):
    path = tmp_path / "rep.json"
    capture(capsys, ["make", "char:n=4,y=5/3", "--out", str(path)])
    data = json.loads(path.read_text())
    assert data["generators"] == [[["5/3"]]] * 3
    assert data["label"] == "char(n=4,y=5/3)"


def test_bad_rational_exits_two(capsys):
    code, _, err = capture(capsys, ["make", "tym:n=6,u=2/0"])
    assert code == 2
    assert "error" in err


def test_missing_file_exits_two(capsys):
    code, _, err = capture(capsys, ["analyze", "/nonexistent/rep.json"])
    assert code == 2
    assert "error" in err


def test_bad_matrix_shape_in_file_exits_two(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 3, "r": 2, "generators": [[["1"]]], "label": ""}))
    code, _, err = capture(capsys, ["analyze", str(path)])
    assert code == 2
    assert "error" in err


def test_zero_parameter_exits_two(capsys):
    code, _, _ = capture(capsys, ["make", "char:n=4,y=0"])
    assert code == 2


def test_sweep_emits_grid_rows(capsys):
    code, out, _ = capture(capsys, ["sweep", "--n", "6..7", "--u", "2,1"])
    assert code == 0
    rows = json.loads(out)
    assert [(row["n"], row["u"]) for row in rows] == [(6, "2"), (6, "1"), (7, "2"), (7, "1")]
    by_key = {(row["n"], row["u"]): row for row in rows}
    assert by_key[(6, "2")]["corank"] == 2
    assert by_key[(6, "2")]["standard_form_u"] == "2"
    assert by_key[(6, "1")]["corank"] == 1
    assert by_key[(6, "1")]["irreducibility"] == "Reducible"


def test_sweep_text_table(capsys):
    code, out, _ = capture(capsys, ["sweep", "--n", "6", "--u", "2", "--format", "text"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert "corank" in lines[0]


def test_seed_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("BRAIDREP_SEED", "77")
    _, with_env, _ = capture(capsys, ["analyze", "tym:n=6,u=2"])
    monkeypatch.delenv("BRAIDREP_SEED")
    _, with_flag, _ = capture(capsys, ["analyze", "tym:n=6,u=2", "--seed", "77"])
    assert with_env == with_flag
    assert json.loads(with_env)["seed"] == 77
