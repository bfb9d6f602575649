"""Unit tests for the smartenv subcommands, driven through main()."""

from __future__ import annotations

import importlib
import json
from pathlib import Path

import pytest

from src.cli.main import build_parser, main
from src.specification.store import load_specification, read_specification
from tests.conftest import MINED_O5

# Resolve the submodule explicitly: on Python < 3.11 a dotted mock target
# "src.cli.main" resolves to the re-exported main() function instead.
cli_main_module = importlib.import_module("src.cli.main")


@pytest.fixture(autouse=True)
def plain_console(mocker):
    """Keep colorama from wrapping the captured streams."""
    mocker.patch.object(cli_main_module, "init")


def texts(document: str) -> list[str]:
    return [str(item.formula) for item in load_specification(document)]


class TestMine:
    """mine --graph --events"""

    def test_prints_mined_specification(self, example_files, capsys):
        code = main(["mine", "--graph", str(example_files["graph"]), "--events", str(example_files["events"])])

        captured = capsys.readouterr()
        assert code == 0
        assert texts(captured.out) == MINED_O5
        assert "Mined 3 formula(s)" in captured.err

    def test_literal_mode(self, example_files, capsys):
        code = main(
            [
                "mine",
                "--graph",
                str(example_files["graph"]),
                "--events",
                str(example_files["events"]),
                "--mode",
                "literal",
            ]
        )

        assert code == 0
        assert texts(capsys.readouterr().out) == [*MINED_O5, "F s07"]

    def test_output_is_reproducible(self, example_files, capsys):
        argv = ["mine", "--graph", str(example_files["graph"]), "--events", str(example_files["events"])]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        assert capsys.readouterr().out == first

    def test_writes_output_file(self, example_files, tmp_path, capsys):
        out = tmp_path / "out" / "mined.json"
        code = main(
            [
                "mine",
                "--graph",
                str(example_files["graph"]),
                "--events",
                str(example_files["events"]),
                "--out",
                str(out),
            ]
        )

        assert code == 0
        assert capsys.readouterr().out == ""
        assert [str(item.formula) for item in read_specification(out)] == MINED_O5

    def test_empty_log_is_an_error(self, example_files, capsys):
        example_files["events"].write_text("# object,node,timestamp\n", encoding="utf-8")

        code = main(["mine", "--graph", str(example_files["graph"]), "--events", str(example_files["events"])])

        assert code == 2
        assert "Mining failed" in capsys.readouterr().err

    def test_missing_file(self, example_files, tmp_path, capsys):
        code = main(["mine", "--graph", str(example_files["graph"]), "--events", str(tmp_path / "none.csv")])

        assert code == 1
        assert "Cannot read input" in capsys.readouterr().err

    def test_unknown_node(self, example_files, capsys):
        example_files["events"].write_text("o5,s99,t2015.02.12.09.30.15\n", encoding="utf-8")

        code = main(["mine", "--graph", str(example_files["graph"]), "--events", str(example_files["events"])])

        assert code == 2
        assert "s99" in capsys.readouterr().err

    def test_malformed_timestamp(self, example_files):
        example_files["events"].write_text("o5,s03,yesterday\n", encoding="utf-8")

        code = main(["mine", "--graph", str(example_files["graph"]), "--events", str(example_files["events"])])

        assert code == 1


class TestDecide:
    """decide {sat,unsat,valid} FORMULA"""

    @pytest.mark.parametrize(
        ("query", "formula", "answer", "code"),
        [
            ("sat", "G (s03 -> F s08) & s03", "yes", 0),
            ("sat", "F p & G !p", "no", 1),
            ("unsat", "F p & G !p", "yes", 0),
            ("unsat", "p", "no", 1),
            ("valid", "p | !p", "yes", 0),
            ("valid", "F p", "no", 1),
        ],
    )
    def test_answers(self, query, formula, answer, code, capsys):
        assert main(["decide", query, formula]) == code
        assert capsys.readouterr().out == f"{answer}\n"

    def test_tree_is_printed(self, capsys):
        assert main(["decide", "sat", "p & !p", "--tree"]) == 1

        out = capsys.readouterr().out
        assert out.startswith("no\n")
        assert "CLOSED" in out

    @pytest.mark.parametrize("formula", ["G F G p", "G (p", "p &", "G", "p & F", "F -> p"])
    def test_errors(self, formula, capsys):
        assert main(["decide", "sat", formula]) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert captured.err


class TestReact:
    """react --spec --object --trigger"""

    def test_visit_proposes_both_actions(self, example_files, capsys):
        code = main(["react", "--spec", str(example_files["spec"]), "--object", "o", "--trigger", "v11"])

        assert code == 0
        assert capsys.readouterr().out == "p115\np116\n"

    def test_exclusion_writes_repaired_specification(self, example_files, tmp_path, capsys):
        out = tmp_path / "updated.json"
        code = main(
            [
                "react",
                "--spec",
                str(example_files["spec"]),
                "--object",
                "o",
                "--trigger",
                "G !p115",
                "--out",
                str(out),
            ]
        )

        assert code == 0
        assert capsys.readouterr().out == "p116\n"
        assert {str(item.formula) for item in read_specification(out)} == {
            "G !p115",
            "v11",
            "v11 -> F p116",
        }

    def test_json_output(self, example_files, capsys):
        code = main(
            [
                "react",
                "--spec",
                str(example_files["spec"]),
                "--object",
                "o",
                "--trigger",
                "G !p115",
                "--json",
            ]
        )

        data = json.loads(capsys.readouterr().out)
        assert code == 0
        assert data["actions"] == ["p116"]
        assert "tree" not in data

    def test_tree_follows_actions(self, example_files, capsys):
        main(["react", "--spec", str(example_files["spec"]), "--object", "o", "--trigger", "v11", "--tree"])

        lines = capsys.readouterr().out.splitlines()
        assert lines[:2] == ["p115", "p116"]
        assert any(line.strip() == "OPEN" for line in lines)

    def test_trigger_outside_fragment(self, example_files, capsys):
        code = main(["react", "--spec", str(example_files["spec"]), "--object", "o", "--trigger", "G F G p"])

        assert code == 2
        assert capsys.readouterr().out == ""

    def test_missing_specification(self, tmp_path):
        code = main(["react", "--spec", str(tmp_path / "none.json"), "--object", "o", "--trigger", "v11"])
        assert code == 2


class TestReplay:
    """replay, from flags or a YAML file"""

    @pytest.mark.parametrize("window", ["6", "3"])
    def test_matches_batch_mining(self, example_files, window, capsys):
        files = ["--graph", str(example_files["graph"]), "--events", str(example_files["events"])]
        main(["mine", *files])
        mined = capsys.readouterr().out

        code = main(["replay", *files, "--window", window, "--no-progress"])

        assert code == 0
        assert capsys.readouterr().out == mined

    def test_from_yaml(self, example_files, tmp_path, capsys):
        config = tmp_path / "replay.yaml"
        config.write_text(
            "graph_path: graph.json\nevents_path: events.csv\nwindow: 3\nshow_progress: false\n",
            encoding="utf-8",
        )

        code = main(["replay", "--config", str(config)])

        assert code == 0
        assert texts(capsys.readouterr().out) == MINED_O5

    def test_every_event_prints_proposals(self, example_files, capsys):
        code = main(
            [
                "replay",
                "--graph",
                str(example_files["graph"]),
                "--events",
                str(example_files["events"]),
                "--trigger-policy",
                "every-event",
                "--no-progress",
            ]
        )

        out = capsys.readouterr().out
        proposals = [line for line in out.splitlines() if line.startswith("o5 ")]
        assert code == 0
        assert len(proposals) == 6
        assert proposals[0] == "o5 s03 t2015.02.12.09.30.15: -"

    def test_empty_log(self, example_files, capsys):
        example_files["events"].write_text("", encoding="utf-8")

        code = main(
            [
                "replay",
                "--graph",
                str(example_files["graph"]),
                "--events",
                str(example_files["events"]),
                "--no-progress",
            ]
        )

        assert code == 2
        assert "Replay failed" in capsys.readouterr().err

    def test_malformed_initial_specification(self, example_files, capsys):
        example_files["spec"].write_text(
            '{"formulas": [{"object": "o5", "formula": "G (p"}]}', encoding="utf-8"
        )

        code = main(
            [
                "replay",
                "--graph",
                str(example_files["graph"]),
                "--events",
                str(example_files["events"]),
                "--spec",
                str(example_files["spec"]),
                "--no-progress",
            ]
        )

        assert code == 1
        assert "formula #0" in capsys.readouterr().err

    def test_needs_inputs(self, capsys):
        assert main(["replay", "--window", "3"]) == 2
        assert "Configuration error" in capsys.readouterr().err

    def test_invalid_window(self, example_files, capsys):
        code = main(
            [
                "replay",
                "--graph",
                str(example_files["graph"]),
                "--events",
                str(example_files["events"]),
                "--window",
                "0",
            ]
        )

        assert code == 2
        assert "window" in capsys.readouterr().err


def test_parser_requires_a_subcommand():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_log_level_is_applied(mocker):
    basic_config = mocker.patch.object(cli_main_module.logging, "basicConfig")

    main(["--log-level", "DEBUG", "decide", "sat", "p"])

    assert basic_config.call_args.kwargs["level"] == 10


def test_path_arguments_are_paths():
    args = build_parser().parse_args(["mine", "--graph", "g.json", "--events", "e.csv"])
    assert args.graph == Path("g.json")
    assert args.out is None
