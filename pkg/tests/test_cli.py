import json
import math
import subprocess
import sys

import pytest

from machin.cli import (
    EXIT_BAD_INPUT,
    EXIT_CUTOFF,
    EXIT_IDENTITY_FAILED,
    EXIT_OK,
    EXIT_PARTIAL_NOT_VERIFIABLE,
    EXIT_PRECISION,
    document_to_formula,
    formula_to_document,
    main,
)
from machin.exactint import log10_approx
from machin.generator import generate
from machin.measure import lehmer_measure

from reference_runs import REFERENCE_RUNS


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def check_listing(text, q0, ref, lg_rel=1e-9):
    """Structural golden comparison; float-bearing lines compare numerically."""
    lines = text.strip("\n").split("\n")
    assert lines[0] == f"M {ref['m']} Q {q0}"
    idx = 1
    for sign, q in ref["terms"]:
        glyph = "(+)" if sign > 0 else "(-)"
        assert lines[idx] == f"{glyph} Q {q}"
        idx += 1
    for sign, lg in ref["lg_terms"]:
        glyph = "(+)" if sign > 0 else "(-)"
        head, value = lines[idx].rsplit(" ", 1)
        assert head == f"{glyph} lg Q"
        assert abs(float(value) - lg) <= lg_rel * lg
        idx += 1
    if not ref["complete"]:
        assert lines[idx] == "(brk)"
        idx += 1
    assert lines[idx] == "---"
    idx += 1
    lehm_prefix = "Lehm < " if ref["lehmer_is_bound"] else "Lehm "
    assert lines[idx].startswith(lehm_prefix)
    assert abs(float(lines[idx][len(lehm_prefix):]) - ref["lehmer"]) <= 1e-9
    idx += 1
    assert lines[idx].startswith("Pi ")
    sanity = float(lines[idx][3:])
    assert abs(sanity - ref["pi_sanity"]) <= 2 * math.ulp(ref["pi_sanity"])
    assert idx + 1 == len(lines)


class TestGenerateCommand:
    @pytest.mark.parametrize("q0", [5, 7, 8, 9, 10])
    def test_text_matches_reference_listing(self, capsys, q0):
        code, out, err = run_cli(capsys, "generate", str(q0))
        assert code == EXIT_OK and err == ""
        check_listing(out, q0, REFERENCE_RUNS[q0])

    def test_json_q7(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "7", "--format", "json")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["schema_version"] == 1
        assert (doc["q0"], doc["m"], doc["mode"], doc["complete"]) == ("7", "6", "signed", True)
        assert [t["q"] for t in doc["terms"]] == ["15", "1712", "8886139", "2526830931360443"]
        assert [t["sign"] for t in doc["terms"]] == ["-", "+", "-", "+"]
        for t in doc["terms"]:
            assert abs(t["lg_q"] - log10_approx(int(t["q"]))) < 1e-12

    def test_json_round_trip_is_fixed_point(self, capsys):
        _, out, _ = run_cli(capsys, "generate", "9", "--format", "json")
        doc = json.loads(out)
        formula = document_to_formula(doc)
        assert formula == generate(9)
        again = formula_to_document(formula, lehmer_measure(formula))
        assert json.dumps(again) == json.dumps(doc)

    def test_invalid_q0(self, capsys):
        for bad in ("1", "0", "-4", "seven", "2.5"):
            code, out, err = run_cli(capsys, "generate", bad)
            assert code == EXIT_BAD_INPUT
            assert out == "" and "q0" in err

    def test_cutoff_without_partial(self, capsys):
        code, out, err = run_cli(capsys, "generate", "7", "--max-digits", "3")
        assert code == EXIT_CUTOFF
        assert out == "" and "--partial" in err

    def test_partial_prints_brk_and_bound(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "7", "--partial", "--max-digits", "3")
        assert code == EXIT_OK
        lines = out.strip().split("\n")
        assert lines[0] == "M 6 Q 7"
        assert "(brk)" in lines
        assert any(line.startswith("Lehm < ") for line in lines)

    def test_display_digit_limit_switches_to_lg(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "7", "--display-digit-limit", "10")
        assert code == EXIT_OK
        lines = out.strip().split("\n")
        assert lines[3] == "(-) Q 8886139"  # 7 digits, still printed in full
        assert lines[4] == f"(+) lg Q {log10_approx(2526830931360443)}"

    def test_positive_mode(self, capsys):
        code, out, _ = run_cli(capsys, "generate", "2", "--mode", "positive")
        assert code == EXIT_OK
        assert out.startswith("M 1 Q 2\n(+) Q 3\n---\n")

    def test_partial_document_round_trips(self, capsys):
        _, out, _ = run_cli(capsys, "generate", "10", "--partial", "--max-digits", "20",
                            "--format", "json")
        doc = json.loads(out)
        assert doc["complete"] is False
        assert doc["lehmer"]["is_upper_bound"] is True
        formula = document_to_formula(doc)
        assert not formula.complete
        again = formula_to_document(formula, lehmer_measure(formula))
        assert json.dumps(again) == json.dumps(doc)

    @pytest.mark.long
    def test_deep_complete_listing_q28(self, capsys):
        ref = REFERENCE_RUNS[28]
        code, out, err = run_cli(capsys, "generate", "28", "--max-digits", "12000000")
        assert code == EXIT_OK and err == ""
        check_listing(out, 28, ref, lg_rel=1e-6)

    @pytest.mark.long
    def test_partial_listing_q100000(self, capsys):
        ref = REFERENCE_RUNS[100000]
        code, out, err = run_cli(capsys, "generate", "100000", "--partial")
        assert code == EXIT_OK and err == ""
        check_listing(out, 100000, ref, lg_rel=1e-6)


class TestPiCommand:
    def test_digits_from_q0(self, capsys):
        code, out, _ = run_cli(capsys, "pi", "--q0", "10", "--digits", "1")
        assert code == EXIT_OK
        assert out == "3.1\n"

    def test_cross_formula_agreement(self, capsys):
        _, a, _ = run_cli(capsys, "pi", "--q0", "5", "--digits", "50")
        _, b, _ = run_cli(capsys, "pi", "--q0", "10", "--digits", "50")
        assert a == b

    def test_formula_file_source(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "generate", "9", "--format", "json")
        path = tmp_path / "f.json"
        path.write_text(out, encoding="utf-8")
        _, from_file, _ = run_cli(capsys, "pi", "--formula", str(path), "--digits", "100")
        _, from_q0, _ = run_cli(capsys, "pi", "--q0", "5", "--digits", "100")
        assert from_file == from_q0

    def test_precision_unachievable(self, capsys, tmp_path):
        _, out, _ = run_cli(capsys, "generate", "7", "--partial", "--max-digits", "3",
                            "--format", "json")
        path = tmp_path / "partial.json"
        path.write_text(out, encoding="utf-8")
        code, out, err = run_cli(capsys, "pi", "--formula", str(path), "--digits", "50")
        assert code == EXIT_PRECISION
        assert out == "" and err != ""

    def test_bad_inputs(self, capsys):
        assert run_cli(capsys, "pi", "--q0", "5", "--digits", "0")[0] == EXIT_BAD_INPUT
        assert run_cli(capsys, "pi", "--q0", "1", "--digits", "5")[0] == EXIT_BAD_INPUT
        assert run_cli(capsys, "pi", "--formula", "/no/such/file.json",
                       "--digits", "5")[0] == EXIT_BAD_INPUT


class TestVerifyCommand:
    @pytest.mark.parametrize("q0", ["5", "9"])
    def test_identity_ok(self, capsys, q0):
        code, out, _ = run_cli(capsys, "verify", q0)
        assert code == EXIT_OK
        assert out == "IDENTITY OK\n"

    def test_formula_file(self, capsys, tmp_path):
        _, out, _ = run_cli(capsys, "generate", "8", "--format", "json")
        path = tmp_path / "f.json"
        path.write_text(out, encoding="utf-8")
        code, out, _ = run_cli(capsys, "verify", "--formula", str(path))
        assert code == EXIT_OK

    def test_tampered_document_fails(self, capsys, tmp_path):
        _, out, _ = run_cli(capsys, "generate", "5", "--format", "json")
        doc = json.loads(out)
        doc["terms"][0]["q"] = "240"  # was 239
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc), encoding="utf-8")
        code, out, err = run_cli(capsys, "verify", "--formula", str(path))
        assert code == EXIT_IDENTITY_FAILED
        assert out == "" and "identity" in err

    def test_partial_not_verifiable(self, capsys, tmp_path):
        _, out, _ = run_cli(capsys, "generate", "7", "--partial", "--max-digits", "3",
                            "--format", "json")
        path = tmp_path / "partial.json"
        path.write_text(out, encoding="utf-8")
        code, _, err = run_cli(capsys, "verify", "--formula", str(path))
        assert code == EXIT_PARTIAL_NOT_VERIFIABLE
        assert "partial" in err

    def test_requires_exactly_one_source(self, capsys, tmp_path):
        assert run_cli(capsys, "verify")[0] == EXIT_BAD_INPUT
        path = tmp_path / "f.json"
        _, out, _ = run_cli(capsys, "generate", "5", "--format", "json")
        path.write_text(out, encoding="utf-8")
        assert run_cli(capsys, "verify", "5", "--formula", str(path))[0] == EXIT_BAD_INPUT

    def test_bad_q0(self, capsys):
        assert run_cli(capsys, "verify", "1")[0] == EXIT_BAD_INPUT


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "machin", "generate", "5"],
        capture_output=True, text=True, timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("M 4 Q 5\n(-) Q 239\n---\n")
