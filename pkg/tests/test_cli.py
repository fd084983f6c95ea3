import json
import subprocess
import sys

import jsonschema
import pytest

from legcable import cli
from legcable.report import (
    CLASSIFICATION_SCHEMA,
    NOT_COVERED_SCHEMA,
    RANGE_SCHEMA,
    ascii_plot,
    render,
)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


class TestClassify:
    @pytest.mark.parametrize("text", ["U", "T(2,3)", "T(-9,4)", "T(3,5)", "T(2,3).cable(2,3)",
                                      "(T(-5,2) # T(2,3))", "T(-5,2).cable(-19,2)"])
    def test_schema(self, capsys, text):
        code, model = run_json(capsys, "classify", text)
        assert code == 0
        jsonschema.validate(model, CLASSIFICATION_SCHEMA)

    def test_kprime_record(self, capsys):
        _, model = run_json(capsys, "classify", "T(2,3).cable(2,3)")
        b = model["shape"]["branched"]
        assert model["utp"] == "unknown" and model["parity"] == 1
        assert ["S+(K-)", "S-(K+)"] in b["identifications"]
        assert {"left": "S+^2(L-)", "right": "S-^2(L+)", "scope": "single"} in b["non_identifications"]

    def test_interval_width(self, capsys):
        _, model = run_json(capsys, "classify", "T(3,4)")
        assert model["width"] == {"interval": [5, 6]}
        assert model["peaks_source"] == "assumed-EH1"

    def test_not_covered(self, capsys):
        code, model = run_json(capsys, "classify", "T(2,3).cable(1,2)")
        assert code == cli.EXIT_NOT_COVERED
        jsonschema.validate(model, NOT_COVERED_SCHEMA)
        assert "UTP" in model["hypothesis"]

    def test_not_covered_table(self, capsys):
        code, out, _ = run(capsys, "classify", "T(2,3).cable(3,2)")
        assert code == 3 and out.startswith("not covered:")

    @pytest.mark.parametrize("text", ["T(2,4)", "T(2,3", "Q"])
    def test_bad_input(self, capsys, text):
        code, out, err = run(capsys, "classify", text)
        assert code == cli.EXIT_INPUT and out == "" and "error" in err


class TestRange:
    def test_minus9_4_ascii(self, capsys):
        code, out, _ = run(capsys, "range", "T(-9,4)", "--tb-floor", "-40", "--format", "ascii")
        assert code == 0
        top = next(line for line in out.splitlines() if line.startswith("-36 |"))
        cells = top.split("|")[1].split()
        lo = -9
        assert [lo + i for i, c in enumerate(cells) if c != "."] == [-5, -3, 3, 5]

    def test_schema_and_default_floor(self, capsys):
        code, model = run_json(capsys, "range", "T(-5,2)")
        assert code == 0
        jsonschema.validate(model, RANGE_SCHEMA)
        assert model["floor"] == -20

    def test_kprime_digits(self, capsys):
        code, out, _ = run(capsys, "range", "T(2,3).cable(2,3)", "--tb-floor", "3", "--format", "ascii")
        row = next(line for line in out.splitlines() if line.startswith("3 |"))
        assert "3" in row.split("|")[1]

    def test_floor_above_top(self, capsys):
        code, _, err = run(capsys, "range", "U", "--tb-floor", "0")
        assert code == 2 and "above" in err


class TestTransverseCommand:
    def test_kprime(self, capsys):
        code, model = run_json(capsys, "transverse", "T(2,3).cable(2,3)", "--floor", "-4")
        assert code == 0
        counts = {c["sl"]: c["count"] for c in model["classes"]}
        assert counts[3] == 2 and counts[7] == 1

    def test_simple(self, capsys):
        code, model = run_json(capsys, "transverse", "T(-9,4)")
        assert code == 0
        assert {c["count"] for c in model["classes"]} == {1}

    def test_ascii(self, capsys):
        code, out, _ = run(capsys, "transverse", "T(2,3).cable(2,3)", "--floor", "0", "--format", "ascii")
        assert "sl  3 | ## 2" in out


class TestFareyAndNonthick:
    def test_farey_negative_slopes(self, capsys):
        code, model = run_json(capsys, "farey", "-3/16", "-1/6")
        assert code == 0
        assert model["path"] == ["-3/16", "-1/5", "-1/6"] and model["det"] == -2
        assert model["neighbors"] is False

    def test_farey_bad_slope(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main(["farey", "1/0/2", "0"])
        assert info.value.code == 2

    def test_nonthick(self, capsys):
        code, model = run_json(capsys, "nonthick", "--max-k", "3")
        assert code == 0
        assert [r["slope"] for r in model["slopes"]] == ["-1/5", "-2/11", "-3/17", "-4/23"]

    def test_nonthick_table(self, capsys):
        _, out, _ = run(capsys, "nonthick", "--max-k", "1")
        assert out.splitlines()[2].split() == ["0", "-1/5", "1", "1"]


class TestRendering:
    @pytest.mark.parametrize("argv", [
        ["classify", "T(2,3).cable(2,3)"],
        ["range", "T(-9,4)", "--tb-floor", "-42"],
        ["transverse", "T(2,3).cable(2,3)"],
        ["farey", "2/7", "inf"],
        ["nonthick", "--max-k", "5"],
    ])
    @pytest.mark.parametrize("fmt", ["json", "table", "ascii"])
    def test_renderings_are_functions_of_the_model(self, capsys, argv, fmt):
        _, model = run_json(capsys, *argv)
        _, out, _ = run(capsys, *argv, "--format", fmt)
        assert out == render(argv[0], model, fmt) + "\n"

    def test_json_keys_sorted(self, capsys):
        _, out, _ = run(capsys, "classify", "T(-5,2)", "--format", "json")
        model = json.loads(out)
        assert list(model) == sorted(model)

    def test_plot_glyphs(self):
        plot = ascii_plot([{"r": 0, "tb": 0, "mult": 12}, {"r": 1, "tb": -1, "mult": 3}])
        assert "+" in plot.splitlines()[0] and "3" in plot.splitlines()[1]
        assert ascii_plot([]) == "(empty)"


def test_module_entry_point_is_deterministic():
    argv = [sys.executable, "-m", "legcable", "classify", "T(2,3).cable(2,3)", "--format", "json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and json.loads(first)["tb_bar"] == 6
