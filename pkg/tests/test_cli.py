"""Command-line surface: grammar, exit codes, output formats, determinism."""

import json
from importlib import resources as importlib_resources

import jsonschema

from lucasaps.cli import main

SCHEMA = json.loads(
    importlib_resources.files("lucasaps.resources").joinpath("cli_schema.json").read_text()
)


def schema_for(name):
    doc = dict(SCHEMA["$defs"][name])
    doc["$defs"] = SCHEMA["$defs"]
    return doc


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassify:
    def test_valid(self, capsys):
        code, out, _ = run(capsys, "classify", "--A", "1", "--B", "2")
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, schema_for("classify"))
        assert doc["classification"] == "real_dominant"
        assert doc["discriminant"] == "9"

    def test_degenerate_reports_order(self, capsys):
        code, _, err = run(capsys, "classify", "--A", "1", "--B", "-1")
        assert code == 1
        assert "order 3" in err

    def test_zero_coefficient(self, capsys):
        code, _, err = run(capsys, "classify", "--A", "0", "--B", "5")
        assert code == 1
        assert "nonzero" in err


class TestEnumerate:
    def test_json(self, capsys):
        code, out, _ = run(
            capsys, "enumerate", "--A", "1", "--B", "1", "--kind", "first",
            "--max-index", "6",
        )
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, schema_for("enumerate"))
        assert {tuple((t["k"], t["l"], t["m"])) for t in doc["aps"]} >= {(0, 1, 3), (2, 3, 4)}

    def test_csv(self, capsys):
        code, out, _ = run(
            capsys, "enumerate", "--A", "2", "--B", "1", "--kind", "first",
            "--max-index", "10", "--format", "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "k,l,m,value_k,value_l,value_m"
        assert lines[1] == "0,1,2,0,1,2"

    def test_bad_window(self, capsys):
        code, _, err = run(
            capsys, "enumerate", "--A", "2", "--B", "1", "--kind", "first",
            "--max-index", "1",
        )
        assert code == 1


class TestCertify:
    def test_worked_pair(self, capsys):
        code, out, _ = run(capsys, "certify", "--A", "2", "--B", "1", "--kind", "first")
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, schema_for("certify"))
        assert doc["status"] == "complete"
        assert [(t["k"], t["l"], t["m"]) for t in doc["aps"]] == [(0, 1, 2)]
        assert doc["certificate"]["method"] == "gap_pattern"
        assert doc["certificate"]["complete"] is True
        margins = [p.get("margin", {}).get("text") for p in doc["certificate"]["patterns"]]
        assert "4+3*sqrt(2)" in margins

    def test_family_pair(self, capsys):
        code, out, _ = run(capsys, "certify", "--A", "1", "--B", "2", "--kind", "first")
        assert code == 0
        doc = json.loads(out)
        assert doc["status"] == "has_families"
        assert doc["certificate"] is None
        assert len(doc["families"]) == 2

    def test_complex_pair_inconclusive(self, capsys):
        code, out, _ = run(capsys, "certify", "--A", "-1", "--B", "-2", "--kind", "first")
        assert code == 2
        assert json.loads(out)["status"] == "inconclusive"


class TestFamilies:
    def test_complex_pair(self, capsys):
        code, out, _ = run(
            capsys, "families", "--A", "-1", "--B", "-2", "--kind", "second",
            "--max-exponent", "10",
        )
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, schema_for("families"))
        assert doc["families"][0]["pattern"] == "(t+1, t, t+3), t>=0"


class TestSmallcases:
    def test_json_and_grid_check(self, capsys):
        code, out, _ = run(
            capsys, "smallcases", "--kind", "second", "--max-index", "6",
            "--grid-check", "8",
        )
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, schema_for("smallcases"))
        assert doc["gridCheck"]["equal"] is True
        assert {tuple(s["triple"]) for s in doc["sporadic"]} >= {(1, 0, 2), (1, 4, 5)}

    def test_cap_seven_complete_under_dominant_filter(self, capsys):
        code, out, _ = run(capsys, "smallcases", "--kind", "first", "--max-index", "7")
        assert code == 0
        doc = json.loads(out)
        assert doc["equationCount"] == 168

    def test_cap_seven_unfiltered_is_inconclusive(self, capsys):
        code, _, err = run(
            capsys, "smallcases", "--kind", "first", "--max-index", "7",
            "--no-dominant-filter",
        )
        assert code == 2
        assert "inconclusive" in err


class TestVerifyTables:
    def test_passes(self, capsys):
        code, out, _ = run(capsys, "verify-tables", "--b-cap", "12")
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, schema_for("verifyTables"))
        assert doc["ok"] is True
        assert len(doc["completionsUsed"]) == 2


class TestScan:
    def test_csv_schema_and_determinism(self, capsys, tmp_path):
        out1 = tmp_path / "scan1.csv"
        out2 = tmp_path / "scan2.csv"
        base = [
            "scan", "--a-range=-3..3", "--b-range=-3..3",
            "--kind", "both", "--max-index", "20",
        ]
        assert run(capsys, *base, "--out", str(out1), "--jobs", "1")[0] == 0
        assert run(capsys, *base, "--out", str(out2), "--jobs", "2")[0] == 0
        assert out1.read_bytes() == out2.read_bytes()
        lines = out1.read_text().splitlines()
        assert lines[0] == "A,B,kind,classification,ap_count_window,family_count,certified,n0"
        assert any("degenerate_order_3" in line for line in lines)  # (1, -1)
        assert any("zero_coefficient" in line for line in lines)

    def test_json_rows_validate(self, capsys, tmp_path):
        out = tmp_path / "scan.json"
        code, _, _ = run(
            capsys, "scan", "--a-range", "1..2", "--b-range", "1..2",
            "--kind", "first", "--max-index", "15", "--out", str(out),
            "--format", "json",
        )
        assert code == 0
        doc = json.loads(out.read_text())
        jsonschema.validate(doc, schema_for("scan"))
        certified = {(r["A"], r["B"]): r["certified"] for r in doc["rows"]}
        assert certified[(2, 1)] == "true"
        assert certified[(1, 1)] == "false"  # families, no finite certificate


class TestFactorTrinomial:
    def test_known_factor(self, capsys):
        code, out, _ = run(
            capsys, "factor-trinomial", "--shape", "x^a+x^b-2", "--a", "3", "--b", "1"
        )
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, schema_for("factorTrinomial"))
        assert doc["factors"] == [
            {"p": 1, "q": 2, "poly": "X^2+X+2", "discriminant": -7}
        ]


class TestSUnitBound:
    def test_output(self, capsys):
        code, out, _ = run(capsys, "sunit-bound")
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, schema_for("sunitBound"))
        assert doc["digitCount"] == 2341
        assert doc["belowStatedBound"] is True
        assert doc["decimal"].startswith(doc["leadingDigits"])


class TestGrammar:
    def test_unknown_range_format(self, capsys):
        code, _, err = run(
            capsys, "scan", "--a-range", "nope", "--b-range", "1..2", "--out", "x"
        )
        assert code == 1

    def test_missing_required(self, capsys):
        code, _, _ = run(capsys, "classify", "--A", "1")
        assert code == 1
