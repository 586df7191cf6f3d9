"""CLI behavior: flags, exit codes, JSON/CSV rendering, golden table."""

import json
import pathlib

import pytest

from toeplitz_bounds.cli import main, render_json, render_table_csv, table_rows

GOLDEN = pathlib.Path(__file__).parent / "data" / "golden_table.csv"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestBounds:
    def test_sine_starlike(self, capsys):
        code, out, _ = run(capsys, "bounds", "--class", "sine", "--kind", "starlike")
        assert code == 0
        assert "1.25" in out
        assert "3.75" in out

    def test_parabolic_convex_flags_t31(self, capsys):
        code, out, _ = run(
            capsys, "bounds", "--class", "parabolic", "--kind", "convex",
            "--output", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["t22"]["value"] == pytest.approx(0.204083, abs=1e-5)
        assert doc["t22"]["sharp"] is True
        assert doc["t31"]["hypothesis_ok"] is False
        assert doc["t31"]["sharp"] is False

    def test_strict_open_case_exits_2(self, capsys):
        code, _, _ = run(
            capsys, "bounds", "--class", "custom", "--b1", "1", "--b2", "-0.9",
            "--kind", "starlike", "--strict",
        )
        assert code == 2

    def test_both_kinds(self, capsys):
        code, out, _ = run(
            capsys, "bounds", "--class", "sine", "--kind", "both",
            "--output", "json",
        )
        assert code == 0
        docs = json.loads(out)
        assert [d["kind"] for d in docs] == ["starlike", "convex"]

    def test_invalid_spec_exits_1(self, capsys):
        code, _, err = run(capsys, "bounds", "--class", "janowski",
                           "--A", "0.2", "--B", "0.8")
        assert code == 1
        assert "error" in err

    def test_missing_params_exit_1(self, capsys):
        code, _, _ = run(capsys, "bounds", "--class", "janowski")
        assert code == 1


class TestJsonRendering:
    def test_roundtrip_byte_identical(self, capsys):
        _, out, _ = run(
            capsys, "bounds", "--class", "limacon", "--kind", "convex",
            "--output", "json",
        )
        assert render_json(json.loads(out)) + "\n" == out

    def test_float_precision(self):
        assert render_json(1 / 3) == "0.33333333333333331"
        assert render_json({"a": True, "b": None}) == (
            '{\n  "a": true,\n  "b": null\n}'
        )


class TestTable:
    def test_matches_golden_file(self, capsys):
        code, out, _ = run(capsys, "table")
        assert code == 0
        assert out == GOLDEN.read_text()

    def test_json_row_count(self, capsys):
        code, out, _ = run(capsys, "table", "--output", "json")
        assert code == 0
        assert len(json.loads(out)) == 16

    def test_rows_deterministic(self):
        assert render_table_csv(table_rows()) == render_table_csv(table_rows())

    def test_known_rows(self):
        rows = {(r["class"], r["kind"]): r for r in table_rows()}
        card = rows[("cardioid", "starlike")]
        assert card["T22"] == pytest.approx(265 / 81)
        assert card["T31"] == pytest.approx(200 / 27)
        lim = rows[("limacon", "convex")]
        assert lim["T22"] == pytest.approx(97 / 144)
        assert lim["T31"] == pytest.approx(323 / 144)
        sp = rows[("parabolic", "starlike")]
        assert sp["T22"] == pytest.approx(1.01547, abs=1e-5)
        assert sp["T31"] == pytest.approx(2.74232, abs=1e-5)


class TestExtremalCommand:
    def test_json(self, capsys):
        code, out, _ = run(
            capsys, "extremal", "--class", "sine", "--kind", "starlike",
            "--output", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["t22_abs"] == pytest.approx(1.25)
        assert doc["residual"] <= 1e-12

    def test_order_floor(self, capsys):
        with pytest.raises(SystemExit):
            main(["extremal", "--class", "sine", "--order", "2"])


class TestFsCommand:
    def test_value(self, capsys):
        code, out, _ = run(
            capsys, "fs", "--class", "custom", "--b1", "2", "--b2", "2",
            "--kind", "starlike", "--mu", "1", "--output", "json",
        )
        assert code == 0
        assert json.loads(out)["bound"] == pytest.approx(1.0)


class TestVerifyCommand:
    def test_pass(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--class", "exp", "--alpha", "0",
            "--kind", "starlike", "--samples", "20000", "--seed", "7",
        )
        assert code == 0
        assert out.count("PASS") == 3
        assert "FAIL" not in out

    def test_open_case_labeled(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--class", "custom", "--b1", "1", "--b2", "-0.9",
            "--kind", "starlike", "--samples", "20000",
        )
        assert code == 0
        assert "estimate only (open case)" in out

    def test_seed_env_default(self, capsys, monkeypatch):
        monkeypatch.setenv("TOEPLITZ_BOUNDS_SEED", "12345")
        code, out, _ = run(
            capsys, "verify", "--class", "sine", "--kind", "convex",
            "--samples", "5000", "--output", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["oracle"]["t22"]["seed"] == 12345
