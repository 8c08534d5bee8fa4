"""
Test coverage for the CLI module.
"""

import json
import logging

import pytest

from isoformula.cli import main


def run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out.splitlines()


def test_cli_help():
    """Test that CLI help works"""
    with pytest.raises(SystemExit) as exc_info:
        main(["--help"])
    assert exc_info.value.code == 0


def test_cli_version():
    """Test --version"""
    with pytest.raises(SystemExit) as exc_info:
        main(["--version"])
    assert exc_info.value.code == 0


def test_cli_invalid_subcommand():
    """Test CLI with invalid subcommand"""
    with pytest.raises(SystemExit) as exc_info:
        main(["invalid"])
    assert exc_info.value.code != 0


@pytest.mark.parametrize(
    "command", ["taut", "nnf", "canon", "derive", "iso", "generalize", "lemma", "oracle", "config", "schema"]
)
def test_cli_subcommand_help(command):
    """Every subcommand has help"""
    with pytest.raises(SystemExit) as exc_info:
        main([command, "--help"])
    assert exc_info.value.code == 0


def test_taut(capsys):
    """Exit code 0 for tautologies, 1 otherwise"""
    assert run(capsys, ["taut", "~p | p"]) == (0, ["~p | p: tautology"])
    assert run(capsys, ["taut", "p"]) == (1, ["p: not a tautology"])


def test_taut_letter_cap(capsys, caplog):
    """--max-letters turns large truth tables into an error"""
    with caplog.at_level(logging.ERROR, logger="isoformula"):
        code, _ = run(capsys, ["--max-letters", "1", "taut", "p & q"])
    assert code == 2
    assert "exceed the cap" in caplog.text


@pytest.mark.parametrize(
    "argv",
    [
        ["lemma", "--which", "4", "p | q", "p"],
        ["lemma", "--which", "5", "q", "q@0", "p"],
        ["lemma", "--which", "6", "p & q", "q & p", "p@0", "p@1"],
        ["iso", "p & q", "q & p"],
    ],
)
def test_constructions_letter_cap(capsys, caplog, argv):
    """--max-letters also bounds the truth tables inside the constructions"""
    with caplog.at_level(logging.ERROR, logger="isoformula"):
        code, out = run(capsys, ["--max-letters", "1", *argv])
    assert code == 2
    assert out == []
    assert "exceed the cap" in caplog.text


def test_syntax_error(capsys, caplog):
    """Malformed formulas exit with 2"""
    with caplog.at_level(logging.ERROR, logger="isoformula"):
        code, out = run(capsys, ["taut", "p &"])
    assert code == 2
    assert out == []
    assert "position" in caplog.text


def test_deep_nesting_is_an_error(capsys, caplog):
    """Nesting past the interpreter's recursion limit exits with 2, not a verdict"""
    deep = "~" * 5000 + "p | p"
    with caplog.at_level(logging.ERROR, logger="isoformula"):
        code, out = run(capsys, ["taut", deep])
    assert code == 2
    assert out == []
    assert "nested too deeply" in caplog.text


def test_nnf(capsys):
    """nnf prints the reduced formula and the trace length"""
    assert run(capsys, ["nnf", "~~p"]) == (0, ["p", "trace: 1 steps"])
    code, out = run(capsys, ["nnf", "~(p & q)", "--trace"])
    assert code == 0
    assert out == ["~p | ~q", "trace: 1 steps", "  de_morgan_and@root L->R"]


def test_canon(capsys):
    """canon prints the rendered canonical form"""
    assert run(capsys, ["canon", "q & p & p"]) == (0, ["AND[p, p, q]"])


def test_json_after_subcommand(capsys):
    """Global options work after the subcommand too"""
    code, out = run(capsys, ["canon", "q & p", "--json"])
    assert code == 0
    payload = json.loads("\n".join(out))
    assert payload["command"] == "canon"
    assert payload["canonical"] == "AND[p, q]"
    assert "witness" not in payload


def test_derive(capsys):
    """derive lists the steps of the trace"""
    code, out = run(capsys, ["derive", "~(p & q)", "~p | ~q"])
    assert code == 0
    assert out == ["~(p & q)  =>  ~p | ~q  (1 steps)", "  0: de_morgan_and@root L->R"]


def test_derive_not_a_theorem(capsys):
    """Non-theorems exit with 1"""
    code, out = run(capsys, ["derive", "p & p", "p"])
    assert code == 1
    assert out == ["not a theorem: AND[p, p] vs p"]


def test_derive_json(capsys):
    """The JSON trace replays to the target"""
    code, out = run(capsys, ["--json", "derive", "p & q", "q & p"])
    payload = json.loads("\n".join(out))
    assert payload["verdict"] == "yes"
    assert payload["verified"] is True
    assert payload["trace"] == [{"axiom": "comm_and", "path": [], "direction": "R->L"}]


def test_iso_boolean(capsys):
    """Boolean iso with and without a witness"""
    assert run(capsys, ["iso", "p & T", "p"]) == (0, ["iso"])
    code, out = run(capsys, ["iso", "p & T", "p", "--witness"])
    assert code == 0
    assert out == ["iso", "f: {(0,0)}", "g: {(0,0)}", "g.f = 1: true", "f.g = 1: true"]


def test_iso_not_iso(capsys):
    """Failed homogeneity is reported with exit 1"""
    code, out = run(capsys, ["iso", "p & (~p | p)", "p"])
    assert code == 1
    assert out == ["not iso: letter-homogeneity fails (3 vs 1 occurrences)"]


def test_iso_generality(capsys):
    """The generality notion names the system and the derivation length"""
    code, out = run(capsys, ["iso", "--notion", "generality", "~(p & q)", "~p | ~q"])
    assert code == 0
    assert out == ["iso", "system: S_neg_and_or", "derivation: 1 steps"]
    code, out = run(capsys, ["iso", "--notion", "generality", "p | p & q", "p & (p | q)"])
    assert code == 1
    assert out[0].startswith("not iso: not a theorem of S_and_or")


def test_iso_generality_constants(capsys):
    """Constants are an error under the generality notion"""
    code, _ = run(capsys, ["iso", "--notion", "generality", "p & T", "p"])
    assert code == 2


def test_iso_json_witness(capsys):
    """--json --witness carries both relations"""
    code, out = run(capsys, ["--json", "iso", "p & q", "q & p", "--witness"])
    assert code == 0
    payload = json.loads("\n".join(out))
    assert payload["verdict"] == "iso"
    assert payload["witness"]["f"] == [[0, 1], [1, 0]]
    assert payload["witness"]["gf_is_identity"] is True
    assert payload["verified"] is True


def test_generalize(capsys):
    """generalize prints both generalized formulas and the substitution"""
    code, out = run(capsys, ["generalize", "p & (~p | p)", "p", "--links", "s0 s1 | s2 t0"])
    assert code == 0
    assert out == ["q1 & (~q1 | q2)", "q2", "q1=p, q2=p"]


def test_generalize_bad_links(capsys):
    """Mixed-letter blocks are an error"""
    code, _ = run(capsys, ["generalize", "p & q", "p", "--links", "s0 s1 t0"])
    assert code == 2


def test_lemma1(capsys):
    """Subformulas are given by path or by text"""
    expected = ["p=T, r=F", "substituted: T & (q | F)", "verified: true"]
    assert run(capsys, ["lemma", "--which", "1", "p & (q | r)", "1.0"]) == (0, expected)
    assert run(capsys, ["lemma", "--which", "1", "p & (q | r)", "q"]) == (0, expected)


def test_lemma4(capsys):
    """Extraction shows the split and tau"""
    code, out = run(capsys, ["lemma", "--which", "4", "p & q", "p"])
    assert code == 0
    assert out == [
        "(p & (T & q)) | (F & q)",
        "A1 = T & q",
        "A2 = F & q",
        "tau: {(0,0), (1,1), (1,2)}",
        "verified: true",
    ]
    code, out = run(capsys, ["lemma", "--which", "4", "p | q", "p"])
    assert out[0] == "(p & T) | (F | q)"


def test_lemma5(capsys):
    """Implanting shows B' and eta"""
    code, out = run(capsys, ["lemma", "--which", "5", "q | r", "q@0", "p"])
    assert code == 0
    assert out == ["p & q | r", "eta: {(0,0), (1,1), (2,2)}", "verified: true"]


def test_lemma6(capsys):
    """A single link across a commutation"""
    code, out = run(capsys, ["lemma", "--which", "6", "p & q", "q & p", "p@0", "p@1"])
    assert code == 0
    assert out == ["{(0,1)}", "verified: true"]


@pytest.mark.parametrize(
    "argv",
    [
        ["lemma", "--which", "6", "p"],
        ["lemma", "--which", "5", "q | r", "r@0", "p"],
        ["lemma", "--which", "1", "p & q", "r"],
        ["lemma", "--which", "6", "q", "p", "0", "0"],
    ],
)
def test_lemma_errors(capsys, argv):
    """Wrong arity, mismatched occurrences and failed preconditions exit with 2"""
    code, _ = run(capsys, argv)
    assert code == 2


def test_oracle_closure(capsys):
    """closure lists the reachable formulas"""
    code, out = run(capsys, ["oracle", "closure", "p & q", "--depth", "1"])
    assert code == 0
    assert out == ["2 formulas within 1 steps", "p & q", "q & p"]


def test_oracle_theorem(capsys):
    """theorem answers yes or unknown"""
    assert run(capsys, ["oracle", "theorem", "p & q", "q & p", "--depth", "1"]) == (0, ["yes"])
    assert run(capsys, ["oracle", "theorem", "p & p", "p", "--depth", "1"]) == (1, ["unknown"])
    code, _ = run(capsys, ["oracle", "theorem", "p"])
    assert code == 2


def test_oracle_witness(capsys):
    """witness prints the bijection or absent"""
    assert run(capsys, ["oracle", "witness", "p & q", "q & p"]) == (0, ["found: {(0,1), (1,0)}"])
    assert run(capsys, ["oracle", "witness", "p & p", "p"]) == (1, ["absent"])


def test_oracle_guard(capsys):
    """Depth beyond the guard is an error"""
    code, _ = run(capsys, ["oracle", "closure", "p", "--depth", "99"])
    assert code == 2


def test_schema(capsys):
    """schema prints the JSON schema of --json output"""
    code, out = run(capsys, ["schema"])
    assert code == 0
    schema = json.loads("\n".join(out))
    assert "verdict" in schema["properties"]
    assert "WitnessPayload" in schema["$defs"]


def test_config(capsys, tmp_path):
    """config writes once and refuses to overwrite without --force"""
    target = tmp_path / "config.yml"
    code, out = run(capsys, ["config", "--output", str(target)])
    assert code == 0
    assert target.exists()
    assert "max_letters" in target.read_text()
    assert run(capsys, ["config", "--output", str(target)])[0] == 2
    assert run(capsys, ["config", "--output", str(target), "--force"])[0] == 0
