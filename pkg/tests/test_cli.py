import json

import pytest

from afftl.cli import main, parse_word


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParseWord:
    def test_forms(self):
        assert parse_word("1 3 2 4") == (1, 3, 2, 4)
        assert parse_word("1,3,2") == (1, 3, 2)
        assert parse_word("") == ()
        with pytest.raises(ValueError):
            parse_word("1 x")


class TestEval:
    def test_square(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "--n", "4", "--word", "1 1")
        assert code == 0
        obj = json.loads(out)
        assert obj["exponent"] == 1 and obj["word"] == [1]
        assert obj["diagram"]["n"] == 4

    def test_domain_error(self, capsys):
        code, _, err = run_cli(capsys, "eval", "--n", "4", "--word", "9")
        assert code == 1
        assert json.loads(err)["error"] == "ValueError"

    def test_usage_error(self, capsys):
        assert run_cli(capsys, "eval", "--word", "1")[0] == 2
        assert run_cli(capsys)[0] == 2


class TestAfn:
    def test_example(self, capsys):
        code, out, _ = run_cli(capsys, "afn", "--n", "5", "--word", "1 3 2 4")
        assert code == 0 and out.strip() == "2"


class TestDiagramAndStraighten:
    def test_roundtrip(self, capsys):
        code, out, _ = run_cli(capsys, "diagram", "--n", "4", "--word", "2 1 3 2")
        assert code == 0
        diagram_json = json.dumps(json.loads(out)["diagram"])
        code, out, _ = run_cli(capsys, "straighten", "--diagram", diagram_json)
        assert code == 0
        obj = json.loads(out)
        assert obj["word"] == [2, 1, 3, 2]
        assert obj["straight_core"] == [1, 3]

    def test_loop_core(self, capsys):
        code, out, _ = run_cli(capsys, "diagram", "--n", "4", "--word", "1 3 2 4")
        diagram_json = json.dumps(json.loads(out)["diagram"])
        code, out, _ = run_cli(capsys, "straighten", "--diagram", diagram_json)
        assert code == 0
        assert json.loads(out)["straight_core"] == [2, 4]

    def test_ascii_and_svg(self, capsys):
        code, out, _ = run_cli(capsys, "diagram", "--n", "4", "--word", "1", "--format", "ascii")
        assert code == 0 and "T1-T2" in out
        code, out, _ = run_cli(capsys, "diagram", "--n", "4", "--word", "1", "--format", "svg")
        assert code == 0 and out.startswith("<svg")

    def test_invalid_diagram_json(self, capsys):
        code, _, err = run_cli(capsys, "straighten", "--diagram", '{"n": 4}')
        assert code == 1 and "error" in json.loads(err)

    def test_file_input(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "diagram", "--n", "4", "--word", "2 1")
        path = tmp_path / "d.json"
        path.write_text(json.dumps(json.loads(out)["diagram"]))
        code, out, _ = run_cli(capsys, "straighten", "--diagram", f"@{path}")
        assert code == 0 and json.loads(out)["word"] == [2, 1]


class TestMul:
    def test_square_relation(self, capsys):
        elt = json.dumps({"n": 4, "terms": [{"coeff": [{"exp": 0, "c": 1}], "word": [1]}]})
        code, out, _ = run_cli(capsys, "mul", "--n", "4", "--a", elt, "--b", elt)
        assert code == 0
        obj = json.loads(out)
        assert obj == {
            "n": 4,
            "terms": [{"coeff": [{"exp": -1, "c": 1}, {"exp": 1, "c": 1}], "word": [1]}],
        }

    def test_size_mismatch(self, capsys):
        elt = json.dumps({"n": 5, "terms": [{"coeff": [{"exp": 0, "c": 1}], "word": [1]}]})
        code, _, err = run_cli(capsys, "mul", "--n", "4", "--a", elt, "--b", elt)
        assert code == 1


class TestCells:
    def test_label(self, capsys):
        code, out, _ = run_cli(capsys, "cells", "label", "--n", "4", "--word", "1 2")
        assert code == 0
        obj = json.loads(out)
        assert obj["two_sided"] == {"kind": "small", "k": 1}
        assert obj["right_pattern"] == [[1, 2]]
        assert obj["left_pattern"] == [[2, 3]]

    def test_census_json(self, capsys):
        code, out, _ = run_cli(capsys, "cells", "census", "--n", "4", "--max-len", "6")
        assert code == 0
        rows = json.loads(out)
        by_label = {json.dumps(r["two_sided"], sort_keys=True): r for r in rows}
        small1 = by_label[json.dumps({"kind": "small", "k": 1}, sort_keys=True)]
        assert small1["left_cells"] == 4 and small1["right_cells"] == 4

    def test_census_md(self, capsys):
        code, out, _ = run_cli(
            capsys, "cells", "census", "--n", "4", "--max-len", "4", "--format", "md"
        )
        assert code == 0
        assert out.splitlines()[0].startswith("| two_sided |")
        assert any("Small(1)" in line for line in out.splitlines())


class TestInvolution:
    def test_example(self, capsys):
        code, out, _ = run_cli(capsys, "involution", "--n", "4", "--word", "2 1 3 2")
        assert code == 0
        assert json.loads(out) == {"x": [2], "T": [1, 3]}

    def test_non_involution(self, capsys):
        code, _, err = run_cli(capsys, "involution", "--n", "4", "--word", "1 2")
        assert code == 1


class TestEnumerate:
    def test_stream(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--n", "3", "--max-len", "2", "--no-labels")
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert len(lines) == 10  # 1 + 3 + 6
        assert lines[0]["word"] == []

    def test_labels_included(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--n", "3", "--max-len", "1")
        recs = [json.loads(line) for line in out.splitlines()]
        assert all(r["labels"] is not None for r in recs)


class TestVerify:
    def test_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n", "4", "--max-len", "4", "--seed", "7")
        assert code == 0
        assert all(line.startswith("PASS") for line in out.strip().splitlines())
