import io
import json

import pytest

from pyrankone.cli.main import (
    EXIT_ERROR,
    EXIT_EXOTIC,
    EXIT_OK,
    EXIT_USAGE,
    HANDLERS,
    build_parser,
    configure_logging,
    main,
    parse_config,
    run,
)
from pyrankone.cli.manifest import MANIFEST
from pyrankone.cli.rendering import SCHEMA, render_text
from pyrankone.config.models import RunConfig
from pyrankone.tower.schedule import preset
from pyrankone.tower.words import word_bits


def _run(argv):
    stream = io.StringIO()
    status = run(parse_config(argv), stream)
    return status, stream.getvalue()


class TestParser:
    def test_every_command_has_a_handler(self):
        assert set(HANDLERS) == set(MANIFEST)

    def test_point_commands(self):
        args = build_parser().parse_args(["point", "zwindow", "--preset", "chacon", "--address", "3:20",
                                          "--radius", "10"])
        assert args.command_path == "point zwindow"

    def test_usage_error_exit_code(self):
        with pytest.raises(SystemExit) as e:
            parse_config(["word", "--preset", "chacon", "--stage", "-1"])
        assert e.value.code == EXIT_USAGE

    def test_unknown_command(self):
        with pytest.raises(SystemExit) as e:
            parse_config(["fly"])
        assert e.value.code == EXIT_USAGE

    def test_budget_flags(self, data_folder_path):
        config = parse_config(["word", "--preset", "chacon", "--stage", "2", "--max-word-length", "50",
                               "--config", str(data_folder_path / "budgets.toml")])
        assert config.budgets.max_word_length == 50
        assert config.budgets.max_enumeration_nodes == 1000
        assert config.parameters == {"stage": 2}

    def test_bad_config_file(self, data_folder_path):
        with pytest.raises(SystemExit) as e:
            parse_config(["word", "--preset", "chacon", "--stage", "2",
                          "--config", str(data_folder_path / "bad_budgets.toml")])
        assert e.value.code == EXIT_USAGE


class TestRun:
    def test_word_text(self):
        assert _run(["word", "--preset", "chacon", "--stage", "2"]) == (EXIT_OK, "0010001010010\n")

    def test_prefix_text(self):
        assert _run(["prefix", "--preset", "staircase", "--length", "8"]) == (EXIT_OK, "01011010\n")

    def test_schedule_file(self, data_folder_path):
        status, output = _run(["height", "--schedule", str(data_folder_path / "mixed_cycle.json"),
                               "--stage", "3"])
        assert status == EXIT_OK
        assert "height: 35" in output.splitlines()

    def test_json_document(self):
        status, output = _run(["expected", "--preset", "chacon", "--m", "2", "--n", "1", "--json"])
        document = json.loads(output)
        assert status == EXIT_OK
        assert document["schema"] == SCHEMA
        assert document["command"] == "expected"
        assert document["result"]["positions"] == [0, 4, 9]

    def test_json_is_deterministic(self):
        argv = ["classify", "--preset", "staircase", "--max-stage", "5", "--json"]
        assert _run(argv) == _run(argv)

    def test_point_zwindow(self):
        status, output = _run(["point", "zwindow", "--preset", "chacon", "--address", "3:20", "--radius", "10"])
        assert status == EXIT_OK
        assert "returns: -7 -3 2 7" in output.splitlines()

    def test_recognize(self):
        w = word_bits(preset("paper-4copy"), 3)
        status, output = _run(["recognize", "--preset", "paper-4copy", "--word", w, "--position", "8",
                               "--stage", "5"])
        assert status == EXIT_OK
        assert "verdict: Unexpected" in output.splitlines()

    @pytest.mark.parametrize("name", ["paper-4copy", "four-copy"])
    def test_four_copy_preset_names(self, name):
        assert _run(["word", "--preset", name, "--stage", "2"]) == (EXIT_OK, "001000010010010000100\n")

    def test_context_bound_kind(self):
        status, output = _run(["context-bound", "--preset", "chacon", "--n", "1", "--json"])
        assert status == EXIT_OK
        assert json.loads(output)["result"]["kind"] == "paper-bound"

    def test_odometer_is_out_of_scope(self):
        status, output = _run(["probe", "--preset", "odometer2", "--radius", "0", "--json"])
        assert status == EXIT_OK
        assert json.loads(output)["result"]["out_of_theorem_scope"] is True

    def test_missing_schedule(self):
        assert _run(["word", "--stage", "2"])[0] == EXIT_USAGE

    def test_unknown_preset(self):
        assert _run(["word", "--preset", "nope", "--stage", "2"])[0] == EXIT_USAGE

    def test_computation_error(self):
        assert _run(["context-bound", "--preset", "odometer2"])[0] == EXIT_ERROR

    def test_exotic_exit_code(self):
        status, output = _run(["probe", "--preset", "alternating", "--radius", "0"])
        assert status == EXIT_EXOTIC
        assert "exotic_count: 1" in output.splitlines()

    def test_point_sample_uses_seed(self):
        argv = ["point", "sample", "--preset", "chacon", "--depth", "4", "--k", "10", "--count", "5",
                "--seed", "5", "--json"]
        first, second = _run(argv), _run(argv)
        assert first == second
        assert len(json.loads(first[1])["result"]) == 5

    def test_manifest(self):
        status, output = _run(["manifest"])
        assert status == EXIT_OK
        assert len(output.splitlines()) == len(MANIFEST)

    def test_run_with_config_object(self):
        stream = io.StringIO()
        config = RunConfig(command="height", schedule_source="chacon", parameters={"stage": 2})
        assert run(config, stream) == EXIT_OK
        assert "height: 13" in stream.getvalue().splitlines()


def test_main(capsys):
    assert main(["word", "--preset", "odometer2", "--stage", "3"]) == EXIT_OK
    assert capsys.readouterr().out == "00000000\n"


def test_render_text_nested():
    assert render_text({"b": {"c": 1}, "a": [1, 2]}) == "a: 1 2\nb.c: 1"


def test_configure_logging_rotates_file(mocker, tmp_path):
    fake_logger = mocker.patch("pyrankone.cli.main.logger")
    configure_logging("info", str(tmp_path / "rank1.log"))
    fake_logger.remove.assert_called_once_with()
    assert fake_logger.add.call_count == 2
    assert fake_logger.add.call_args.kwargs == {"rotation": "1 MB", "level": "INFO"}
