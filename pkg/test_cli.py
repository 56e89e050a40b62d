"""
Tests for the ideal loader, reports and the simiscalc command line
"""
import json
from pathlib import Path
import pytest
from algebra.ideal import render_ideal
from algebra.monomial import RingContext, render
from main import EXIT_ERROR, EXIT_FAILURE_FOUND, EXIT_NOT_MEMBER, EXIT_OK, main, run
from tools.ideal_loader import IdealLoader
from tools.reports import Report, digest, render_pretty
from utils.config import get_settings
from utils.errors import ConfigError, ParseError

IDEALS = Path(__file__).parent / "ideals"


def ideal_file(name):
    return str(IDEALS / name)


def run_json(*argv):
    output, code = run(list(argv))
    return json.loads(output), code


# ---------------------------------------------------------------- loader

def test_parse_error_reports_line_and_column():
    with pytest.raises(ParseError) as err:
        IdealLoader.parse_text("x1*x2,\n  x0^2", "bad.ideal")
    assert err.value.line == 2
    assert err.value.column == 3
    assert str(err.value).startswith("bad.ideal:2:3:")


def test_parse_syntax_errors():
    for text in ("x1*", "x1,, x2", "y1", "x1 x2", "x1^"):
        with pytest.raises(ParseError):
            IdealLoader.parse_text(text)


def test_header_fixes_the_ring():
    doc = IdealLoader.parse_text("vars: 5;\nx1*x2")
    assert doc.n == 5
    assert doc.generators == [[1, 1, 0, 0, 0]]
    with pytest.raises(ParseError):
        IdealLoader.parse_text("vars: 2; x3")


def test_comments_and_whitespace():
    doc = IdealLoader.parse_text("# a path\n x1 * x2 ^ 2 ,\n\tx2*x3  # trailing\n")
    assert render_ideal(doc.to_ideal()) == "x2*x3, x1*x2^2"


def test_repeated_factors_accumulate():
    doc = IdealLoader.parse_text("x1*x1^2*x2")
    assert doc.generators == [[3, 1]]


def test_json_documents():
    doc = IdealLoader.load_file(ideal_file("c4_edge.json"))
    assert doc.source == "json"
    assert doc.n == 4
    assert render_ideal(doc.to_ideal()) == "x1*x2, x1*x4, x2*x3, x3*x4"
    with pytest.raises(ParseError):
        IdealLoader.parse_json('{"vars": 2, "generators": [[1, 0, 0]]}')
    with pytest.raises(ParseError):
        IdealLoader.parse_json('{"generators": [[1]]}')
    with pytest.raises(ParseError):
        IdealLoader.parse_json('{"vars": 2, "generators": [[1, -1]]}')
    with pytest.raises(ParseError):
        IdealLoader.parse_json("{not json")


def test_parse_monomial():
    R = RingContext(3)
    assert render(IdealLoader.parse_monomial("x2^4*x3", R)) == "x2^4*x3"
    assert render(IdealLoader.parse_monomial("x1^0", R)) == "1"
    assert render(IdealLoader.parse_monomial("1", R)) == "1"
    with pytest.raises(ParseError):
        IdealLoader.parse_monomial("x4", R)


def test_to_text_reparses_to_the_same_ideal():
    doc = IdealLoader.parse_text("x2*x3, x1, x1*x3")
    text = doc.to_text()
    assert text == "vars: 3;\nx1, x2*x3\n"
    assert IdealLoader.parse_text(text).to_ideal() == doc.to_ideal()


def test_every_shipped_ideal_loads():
    for path in sorted(IDEALS.iterdir()):
        I = IdealLoader.load_file(str(path)).to_ideal()
        assert I.is_proper_nonzero(), path.name


# ---------------------------------------------------------------- reports

def test_report_json_round_trip():
    output, _ = run(["simis", ideal_file("path_two_gens.ideal"), "--max-degree", "2"])
    report = Report.model_validate_json(output)
    assert Report.model_validate_json(report.to_json()) == report
    text = (IDEALS / "path_two_gens.ideal").read_text(encoding="utf-8")
    assert report.input_digest == digest(text)


def test_pretty_rendering():
    output, code = run(["classify", ideal_file("path_two_gens.ideal"), "--max-degree", "2", "--pretty"])
    assert "simiscalc classify" in output
    assert "verdicts:" in output
    assert "thm_support2_simis" in output
    plain = render_pretty(Report(command="power", result={"generators": []}))
    assert "generators: (none)" in plain


# ---------------------------------------------------------------- commands

def test_decompose_path_p4():
    report, code = run_json("decompose", ideal_file("path_p4.ideal"))
    assert code == EXIT_OK
    assert report["command"] == "decompose"
    result = report["result"]
    assert result["primary"] == ["x1, x3", "x2^2, x2*x3, x3^2", "x2, x4"]
    assert result["minimal_decomposition"] is False
    assert result["embedded_primes"] == []
    assert result["unmixed"] is True


def test_power_and_symbolic_power():
    report, code = run_json("power", ideal_file("path_two_gens.ideal"), "-s", "2")
    assert code == EXIT_OK
    assert "x2^4*x3^4" not in report["result"]["generators"]
    report, _ = run_json("symbolic", ideal_file("path_two_gens.ideal"), "-s", "2")
    assert report["command"] == "symbolic"
    assert "x2^4*x3^4" in report["result"]["generators"]
    again, _ = run_json("power", ideal_file("path_two_gens.ideal"), "-s", "2", "--symbolic")
    assert again["result"]["generators"] == report["result"]["generators"]


def test_simis_finds_the_degree_two_failure():
    report, code = run_json("simis", ideal_file("path_two_gens.ideal"), "--max-degree", "2")
    assert code == EXIT_FAILURE_FOUND
    result = report["result"]
    assert result["simis_up_to_max"] is False
    assert [d["holds"] for d in result["degrees"]] == [True, False]
    assert result["degrees"][1]["witness"] == "x2^4*x3^4"
    [certificate] = report["certificates"]
    assert certificate["monomial"] == "x2^4*x3^4"
    assert certificate["verified"] is True


def test_simis_passes_below_the_failure():
    report, code = run_json("simis", ideal_file("path_two_gens.ideal"), "--max-degree", "1")
    assert code == EXIT_OK
    assert report["result"]["simis_up_to_max"] is True
    assert report["certificates"] == []


def test_member_exit_codes():
    path = ideal_file("path_two_gens.ideal")
    report, code = run_json("member", path, "x2^4*x3^4", "-s", "2", "--symbolic")
    assert code == EXIT_OK
    assert report["result"] == {"monomial": "x2^4*x3^4", "target": "I^(2)", "member": True}
    report, code = run_json("member", path, "x2^4*x3^4", "-s", "2")
    assert code == EXIT_NOT_MEMBER
    assert report["result"]["member"] is False


def test_classify_path_p4():
    report, code = run_json("classify", ideal_file("path_p4.ideal"), "--max-degree", "3")
    assert code == EXIT_OK
    result = report["result"]
    assert result["graph"]["shape"] == "path P4"
    assert result["graph"]["bipartite"] is True
    assert result["graph"]["girth"] is None
    assert result["graph"]["leaves"] == [1, 4]
    assert result["graph"]["whiskered"] is True
    assert result["weighting"] is None
    assert result["weighting_defaulted"] == []
    assert result["minimal_decomposition"] is False
    assert [e["edge"] for e in result["profile"]] == ["x1-x2", "x2-x3", "x3-x4"]
    names = [v["predicate"] for v in result["verdicts"]]
    assert "thm_whisker_cm" in names


def test_classify_without_checks_has_no_cross_checks():
    report, _ = run_json("classify", ideal_file("path_p4.ideal"), "--no-check")
    assert all(v["cross_checks"] == [] for v in report["result"]["verdicts"])


def test_classify_rejects_non_support2(tmp_path, capsys):
    path = tmp_path / "wide.ideal"
    path.write_text("x1*x2*x3", encoding="utf-8")
    with pytest.raises(SystemExit) as exit_info:
        main(["classify", str(path)])
    assert exit_info.value.code == 1
    assert "support-2" in capsys.readouterr().err


def test_polarize():
    report, code = run_json("polarize", ideal_file("path_p4.ideal"))
    assert code == EXIT_OK
    polarized = report["result"]["polarized"]
    assert "^" not in polarized
    assert len(report["result"]["variables"]) == 6


def test_parse_error_exits_with_one(tmp_path, capsys):
    path = tmp_path / "bad.ideal"
    path.write_text("x1*x0", encoding="utf-8")
    with pytest.raises(SystemExit) as exit_info:
        main(["decompose", str(path)])
    assert exit_info.value.code == 1
    assert "bad.ideal:1:4" in capsys.readouterr().err


def test_missing_file_exits_with_one():
    with pytest.raises(SystemExit) as exit_info:
        main(["decompose", "does-not-exist.ideal"])
    assert exit_info.value.code == 1


def test_main_prints_and_exits_with_the_command_code(capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["member", ideal_file("path_two_gens.ideal"), "x2^4*x3^4", "-s", "2"])
    assert exit_info.value.code == EXIT_NOT_MEMBER
    assert json.loads(capsys.readouterr().out)["result"]["member"] is False


def test_timings_only_on_request():
    report, _ = run_json("decompose", ideal_file("path_p4.ideal"))
    assert report["timings"] == {}
    report, _ = run_json("decompose", ideal_file("path_p4.ideal"), "--timings")
    assert set(report["timings"]) == {"parse", "decompose"}


def test_output_is_deterministic():
    argv = ["classify", ideal_file("triangle_two_gens.ideal"), "--max-degree", "2"]
    assert run(argv) == run(argv)


def test_fuzz_command(tmp_path):
    report, code = run_json(
        "fuzz", "--family", "cycle", "--trials", "5", "--seed", "7", "--n", "6",
        "--max-exponent", "3", "--max-alpha", "1", "--dump-dir", str(tmp_path),
    )
    assert code == EXIT_OK
    assert report["result"]["trials"] == 5
    assert report["result"]["discrepancies"] == 0
    assert list(tmp_path.iterdir()) == []


@pytest.mark.slow
def test_fuzz_cycle_acceptance_run(tmp_path):
    report, code = run_json(
        "fuzz", "--family", "cycle", "--trials", "200", "--seed", "7", "--n", "6",
        "--max-exponent", "3", "--max-alpha", "1", "--dump-dir", str(tmp_path),
    )
    assert code == EXIT_OK
    assert report["result"]["discrepancies"] == 0


# ---------------------------------------------------------------- usage errors

@pytest.mark.parametrize("command", ["simis", "classify"])
def test_non_positive_max_degree_exits_with_one(command, capsys):
    for bound in ("0", "-1"):
        with pytest.raises(SystemExit) as exit_info:
            main([command, ideal_file("path_two_gens.ideal"), "--max-degree", bound])
        assert exit_info.value.code == EXIT_ERROR
        assert "--max-degree must be >= 1" in capsys.readouterr().err


def test_classify_without_checks_ignores_the_degree_bound():
    _, code = run_json("classify", ideal_file("path_p4.ideal"), "--no-check", "--max-degree", "0")
    assert code == EXIT_OK


@pytest.mark.parametrize("argv", [
    ["simis", ideal_file("path_two_gens.ideal"), "--max-degree", "abc"],
    ["fuzz", "--trials", "5"],
    ["fuzz", "--family", "tree"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_with_one(argv, capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(argv)
    assert exit_info.value.code == EXIT_ERROR
    assert "usage:" in capsys.readouterr().err


def test_help_still_exits_with_zero(capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["--help"])
    assert exit_info.value.code == 0
    assert "simiscalc" in capsys.readouterr().out


# ---------------------------------------------------------------- configuration

@pytest.mark.parametrize("name, value", [
    ("SIMISCALC_GEN_LIMIT", "lots"),
    ("SIMISCALC_MAX_DEGREE", "2.5"),
    ("SIMISCALC_COVER_BOUND", "0"),
    ("SIMISCALC_FUZZ_WORKERS", "-3"),
])
def test_malformed_settings_raise_config_error(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError) as err:
        get_settings()
    assert err.value.name == name
    assert name in str(err.value)


def test_settings_read_from_the_environment(monkeypatch):
    monkeypatch.setenv("SIMISCALC_MAX_DEGREE", " 7 ")
    assert get_settings().max_degree == 7


def test_malformed_setting_exits_with_one(monkeypatch, capsys):
    monkeypatch.setenv("SIMISCALC_MAX_DEGREE", "abc")
    with pytest.raises(SystemExit) as exit_info:
        main(["simis", ideal_file("path_two_gens.ideal")])
    assert exit_info.value.code == EXIT_ERROR
    assert "SIMISCALC_MAX_DEGREE" in capsys.readouterr().err
