"""
This module provides the `rank1` command-line entry point.

Every library operation is exposed as a subcommand; point operations live under `rank1 point`.
Arguments are parsed with argparse into a validated `RunConfig`, which `run` dispatches to the
handler of the subcommand. Output goes to stdout, either as stable `key: value` lines or as one
JSON document (`--json`); log records go to stderr and, with `--log-file`, to a rotating file.

Exit status: 0 on success, 1 when a computation fails, 2 when the probe finds an EXOTIC code and
64 for usage errors (bad arguments, unreadable configuration or schedule).

Usage:
    rank1 word --preset chacon --stage 2
    rank1 probe --preset chacon --radius 2 --test-len 24 --json
    rank1 point zwindow --preset chacon --address 3:20 --radius 10
"""
import argparse
import sys
from functools import cached_property
from typing import Any, Callable, Dict, List, Optional, TextIO

from loguru import logger

from pyrankone.centralizer.codes import search_codes, shift_power_code
from pyrankone.centralizer.exceptions import CentralizerError
from pyrankone.centralizer.language import language
from pyrankone.centralizer.models import LanguageWindow
from pyrankone.centralizer.phi import normalized_phi_map, psi_conjugation_check, recover_offset
from pyrankone.centralizer.probe import centralizer_probe
from pyrankone.cli.manifest import MANIFEST
from pyrankone.cli.rendering import render_json, render_text
from pyrankone.config.exceptions import ConfigError
from pyrankone.config.loader import load_budgets
from pyrankone.config.models import DEFAULT_SEED, RunConfig
from pyrankone.points.addresses import extend, interior_margin, locate, parse_address, sample_interior_addresses
from pyrankone.points.congruence import congruence_stage_search, psi_congruence_report
from pyrankone.points.exceptions import PointError
from pyrankone.points.returns import psi, return_word, z_window, z_window_two_sided_check
from pyrankone.points.separation import separation_check
from pyrankone.recognizer.context import context_bound, is_expected_start, minimal_context
from pyrankone.recognizer.exceptions import RecognizerError
from pyrankone.recognizer.lemma import lemma_gap_check, lemma_suite
from pyrankone.recognizer.occurrences import occurrences, unexpected_occurrences
from pyrankone.tower.classification import classify, nonconstant_gap_witness
from pyrankone.tower.exceptions import ScheduleError, TowerError
from pyrankone.tower.models import CuttingSchedule
from pyrankone.tower.schedule import heights, load_schedule
from pyrankone.tower.words import expected_positions, infinite_word_prefix, word, word_bits

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_EXOTIC = 2
EXIT_USAGE = 64


class UsageError(Exception):
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = _non_negative(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer, got 0")
    return value


class _Session:
    """Lazily resolved inputs shared by the handlers of one run."""

    def __init__(self, config: RunConfig) -> None:
        self.config = config
        self.budgets = config.budgets
        self.params = config.parameters

    @cached_property
    def schedule(self) -> CuttingSchedule:
        if self.config.schedule_source is None:
            raise UsageError(f"'{self.config.command}' needs --preset or --schedule")
        return load_schedule(self.config.schedule_source)

    def address(self, key: str = "address"):
        return parse_address(self.schedule, self.params[key], self.budgets)


def _validate(s: _Session) -> Any:
    return s.schedule


def _height(s: _Session) -> Any:
    values = heights(s.schedule, s.params["stage"], s.budgets)
    return {"stage": s.params["stage"], "height": values[-1], "heights": list(values)}


def _word(s: _Session) -> Any:
    return word(s.schedule, s.params["stage"], s.budgets)


def _expected(s: _Session) -> Any:
    return expected_positions(s.schedule, s.params["m"], s.params["n"], s.budgets)


def _prefix(s: _Session) -> Any:
    return {"length": s.params["length"], "prefix": infinite_word_prefix(s.schedule, s.params["length"], s.budgets)}


def _classify(s: _Session) -> Any:
    return classify(s.schedule, s.params["max_stage"], s.budgets)


def _witness(s: _Session) -> Any:
    return {"witness": nonconstant_gap_witness(s.schedule, s.params["n"], s.params["max_stage"], s.budgets)}


def _occurrences(s: _Session) -> Any:
    return {"positions": occurrences(s.params["haystack"], s.params["needle"])}


def _unexpected(s: _Session) -> Any:
    return unexpected_occurrences(s.schedule, s.params["m"], s.params["n"], s.budgets)


def _context_bound(s: _Session) -> Any:
    return context_bound(s.schedule, s.params["n"], s.params["max_stage"], s.budgets)


def _minimal_context(s: _Session) -> Any:
    return minimal_context(s.schedule, s.params["n"], s.params["max_stage"], s.budgets)


def _recognize(s: _Session) -> Any:
    verdict = is_expected_start(s.schedule, s.params["word"], s.params["position"], s.params["n"],
                                s.params["stage"], budgets=s.budgets)
    return {"position": s.params["position"], "verdict": verdict}


def _lemma(s: _Session) -> Any:
    if s.params["suite"]:
        return lemma_suite(s.schedule, s.params["max_stage"], s.budgets)
    return lemma_gap_check(s.schedule, s.params["m"], s.params["n"], s.budgets)


def _language(s: _Session) -> Any:
    return language(s.schedule, s.params["max_len"], s.params["allow_repeating"], s.budgets)


def _shift_code(s: _Session) -> Any:
    radius = s.params["radius"]
    lang = language(s.schedule, 2 * radius + 1, allow_repeating=True, budgets=s.budgets)
    code = shift_power_code(s.params["k"], radius, lang)
    result = {"code": code}
    if s.params["apply"]:
        result["applied"] = code.apply(s.params["apply"])
    return result


def _codes(s: _Session) -> Any:
    lang = language(s.schedule, s.params["test_len"], s.params["allow_repeating"], s.budgets)
    return search_codes(lang, s.params["radius"], s.params["test_len"], s.budgets, s.params["workers"])


def _probe(s: _Session) -> Any:
    return centralizer_probe(s.schedule, s.params["radius"], s.params["test_len"], s.params["inverse_radius"],
                             s.budgets, s.params["workers"])


def _phi(s: _Session) -> Any:
    radius = s.params["radius"]
    bits = word_bits(s.schedule, s.params["stage"], s.budgets)
    start, length = s.params["start"], s.params["length"]
    if start + length > len(bits):
        raise UsageError(f"Window [{start}, {start + length}) exceeds W_{s.params['stage']} of length {len(bits)}")
    window = LanguageWindow(word=bits[start:start + length], origin=length // 2)
    lang = language(s.schedule, 2 * radius + 1, allow_repeating=True, budgets=s.budgets)
    matching = normalized_phi_map(s.schedule, window, shift_power_code(s.params["k"], radius, lang),
                                  budgets=s.budgets)
    return {"matching": matching, "psi_violations": psi_conjugation_check(matching),
            "recovered_offset": recover_offset(matching)}


def _manifest(s: _Session) -> Any:
    return MANIFEST


def _point_locate(s: _Session) -> Any:
    return locate(s.schedule, s.address(), s.params["n"], s.budgets)


def _point_extend(s: _Session) -> Any:
    return extend(s.schedule, s.address(), s.params["copy"], s.budgets)


def _point_margins(s: _Session) -> Any:
    return interior_margin(s.schedule, s.address(), s.budgets)


def _point_zwindow(s: _Session) -> Any:
    return z_window(s.schedule, s.address(), s.params["radius"], s.budgets)


def _point_two_sided(s: _Session) -> Any:
    address = s.address()
    return {"address": str(address), "two_sided": z_window_two_sided_check(s.schedule, address, s.params["k"],
                                                                           s.budgets)}


def _point_psi(s: _Session) -> Any:
    return psi(z_window(s.schedule, s.address(), s.params["radius"], s.budgets))


def _point_return_word(s: _Session) -> Any:
    return return_word(s.schedule, s.params["n"], s.budgets)


def _point_congruence(s: _Session) -> Any:
    address = s.address()
    if s.params["search"]:
        return congruence_stage_search(s.schedule, address, s.params["radius"], s.budgets)
    return psi_congruence_report(s.schedule, address, s.params["radius"], s.params["n"], s.budgets)


def _point_separate(s: _Session) -> Any:
    return separation_check(s.schedule, s.address("first"), s.address("second"), s.params["radius"], s.budgets)


def _point_sample(s: _Session) -> Any:
    return sample_interior_addresses(s.schedule, s.params["depth"], s.params["k"], s.params["count"],
                                     s.config.seed, s.budgets)


HANDLERS: Dict[str, Callable[[_Session], Any]] = {
    "validate": _validate,
    "height": _height,
    "word": _word,
    "expected": _expected,
    "prefix": _prefix,
    "classify": _classify,
    "witness": _witness,
    "occurrences": _occurrences,
    "unexpected": _unexpected,
    "context-bound": _context_bound,
    "minimal-context": _minimal_context,
    "recognize": _recognize,
    "lemma": _lemma,
    "language": _language,
    "shift-code": _shift_code,
    "codes": _codes,
    "probe": _probe,
    "phi": _phi,
    "manifest": _manifest,
    "point locate": _point_locate,
    "point extend": _point_extend,
    "point margins": _point_margins,
    "point zwindow": _point_zwindow,
    "point two-sided": _point_two_sided,
    "point psi": _point_psi,
    "point return-word": _point_return_word,
    "point congruence": _point_congruence,
    "point separate": _point_separate,
    "point sample": _point_sample,
}

TEXT_RENDERERS: Dict[str, Callable[[Any], str]] = {
    "word": lambda result: result.bits,
    "prefix": lambda result: result["prefix"],
}


def run(config: RunConfig, stream: Optional[TextIO] = None) -> int:
    """
    Execute one validated invocation.

    Args:
        config (RunConfig): The invocation.
        stream (TextIO, optional): Destination of the report; stdout by default.

    Returns:
        int: The exit status.
    """
    stream = stream or sys.stdout
    session = _Session(config)
    try:
        result = HANDLERS[config.command](session)
    except (UsageError, ScheduleError, ConfigError) as e:
        logger.error(f"{config.command}: {e.message}")
        return EXIT_USAGE
    except (TowerError, RecognizerError, PointError, CentralizerError) as e:
        logger.error(f"{config.command}: {e.message}")
        return EXIT_ERROR
    if config.output == "json":
        stream.write(render_json(config.command, result) + "\n")
    else:
        stream.write(TEXT_RENDERERS.get(config.command, render_text)(result) + "\n")
    if config.command == "probe" and result.exotic_count:
        return EXIT_EXOTIC
    return EXIT_OK


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument("--preset", help="Preset schedule name")
    source.add_argument("--schedule", help="Schedule JSON file or preset name")
    common.add_argument("--json", action="store_true", help="Emit one JSON document")
    common.add_argument("--config", help="TOML file with a [budgets] table")
    common.add_argument("--max-word-length", type=_positive, help="Override the word-length budget")
    common.add_argument("--max-nodes", type=_positive, help="Override the enumeration node budget")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed for sampled sweeps")
    common.add_argument("--log-level", default="WARNING", help="Log level for stderr")
    common.add_argument("--log-file", help="Also log to this file, rotated at 1 MB")
    return common


COMMON_KEYS = {"preset", "schedule", "json", "config", "max_word_length", "max_nodes", "seed", "log_level",
               "log_file", "command"}

# subcommand -> list of (flags, keyword arguments for add_argument)
ARGUMENTS: Dict[str, List[tuple]] = {
    "validate": [],
    "height": [(("--stage",), dict(type=_non_negative, required=True))],
    "word": [(("--stage",), dict(type=_non_negative, required=True))],
    "expected": [(("--m",), dict(type=_non_negative, required=True)),
                 (("--n",), dict(type=_non_negative, required=True))],
    "prefix": [(("--length",), dict(type=_positive, required=True))],
    "classify": [(("--max-stage",), dict(type=_positive, default=6))],
    "witness": [(("--n",), dict(type=_non_negative, default=1)),
                (("--max-stage",), dict(type=_positive, default=8))],
    "occurrences": [(("--haystack",), dict(required=True)), (("--needle",), dict(required=True))],
    "unexpected": [(("--m",), dict(type=_non_negative, required=True)),
                   (("--n",), dict(type=_non_negative, required=True))],
    "context-bound": [(("--n",), dict(type=_non_negative, default=1)),
                      (("--max-stage",), dict(type=_positive, default=8))],
    "minimal-context": [(("--n",), dict(type=_non_negative, default=1)),
                        (("--max-stage",), dict(type=_positive, default=4))],
    "recognize": [(("--word",), dict(required=True)), (("--position",), dict(type=_non_negative, required=True)),
                  (("--n",), dict(type=_non_negative, default=1)),
                  (("--stage",), dict(type=_non_negative, required=True))],
    "lemma": [(("--m",), dict(type=_non_negative, default=3)), (("--n",), dict(type=_non_negative, default=1)),
              (("--suite",), dict(action="store_true")), (("--max-stage",), dict(type=_positive, default=6))],
    "language": [(("--max-len",), dict(type=_positive, required=True)),
                 (("--allow-repeating",), dict(action="store_true"))],
    "shift-code": [(("--k",), dict(type=int, required=True)), (("--radius",), dict(type=_non_negative, required=True)),
                   (("--apply",), dict(default=None))],
    "codes": [(("--radius",), dict(type=_non_negative, required=True)),
              (("--test-len",), dict(type=_positive, required=True)),
              (("--allow-repeating",), dict(action="store_true")), (("--workers",), dict(type=_positive, default=1))],
    "probe": [(("--radius",), dict(type=_non_negative, required=True)),
              (("--test-len",), dict(type=_positive, default=None)),
              (("--inverse-radius",), dict(type=_non_negative, default=None)),
              (("--allow-repeating",), dict(action="store_true",
                                            help="Accepted for symmetry; repeating schedules are always probed "
                                                 "and marked out of theorem scope")),
              (("--workers",), dict(type=_positive, default=1))],
    "phi": [(("--k",), dict(type=int, required=True)), (("--radius",), dict(type=_non_negative, default=2)),
            (("--stage",), dict(type=_non_negative, default=6)), (("--start",), dict(type=_non_negative, default=200)),
            (("--length",), dict(type=_positive, default=300))],
    "manifest": [],
    "point locate": [(("--address",), dict(required=True)), (("--n",), dict(type=_non_negative, required=True))],
    "point extend": [(("--address",), dict(required=True)), (("--copy",), dict(type=_non_negative, required=True))],
    "point margins": [(("--address",), dict(required=True))],
    "point zwindow": [(("--address",), dict(required=True)), (("--radius",), dict(type=_non_negative, required=True))],
    "point two-sided": [(("--address",), dict(required=True)), (("--k",), dict(type=_positive, required=True))],
    "point psi": [(("--address",), dict(required=True)), (("--radius",), dict(type=_non_negative, required=True))],
    "point return-word": [(("--n",), dict(type=_positive, required=True))],
    "point congruence": [(("--address",), dict(required=True)),
                         (("--radius",), dict(type=_non_negative, required=True)),
                         (("--n",), dict(type=_positive, default=2)), (("--search",), dict(action="store_true"))],
    "point separate": [(("--first",), dict(required=True)), (("--second",), dict(required=True)),
                       (("--radius",), dict(type=_non_negative, default=None))],
    "point sample": [(("--depth",), dict(type=_non_negative, required=True)),
                     (("--k",), dict(type=_non_negative, required=True)),
                     (("--count",), dict(type=_positive, default=10))],
}


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _Parser(prog="rank1", description="Rank-1 tower words, recognition, points and centralizer probes")
    commands = parser.add_subparsers(dest="command", required=True)
    point_commands = None
    for command, arguments in ARGUMENTS.items():
        group, _, name = command.rpartition(" ")
        if group:
            if point_commands is None:
                point = commands.add_parser("point", help="Point-address operations")
                point_commands = point.add_subparsers(dest="point_command", required=True)
            target = point_commands
        else:
            target = commands
        sub = target.add_parser(name, parents=[common], help=MANIFEST[command], description=MANIFEST[command])
        for flags, kwargs in arguments:
            sub.add_argument(*flags, **kwargs)
        sub.set_defaults(command_path=command)
    return parser


def configure_logging(level: str, log_file: Optional[str] = None) -> None:
    logger.remove()
    logger.add(sys.stderr, level=level.upper())
    if log_file:
        logger.add(log_file, rotation="1 MB", level=level.upper())


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    """
    Parse command-line arguments into a `RunConfig`.

    Raises:
        SystemExit: With status 64 on invalid arguments.
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level, args.log_file)
    try:
        budgets = load_budgets(args.config, overrides={"max_word_length": args.max_word_length,
                                                       "max_enumeration_nodes": args.max_nodes})
    except ConfigError as e:
        logger.error(e.message)
        raise SystemExit(EXIT_USAGE) from None
    parameters = {key: value for key, value in vars(args).items()
                  if key not in COMMON_KEYS | {"command_path", "point_command"}}
    return RunConfig(command=args.command_path, schedule_source=args.preset or args.schedule,
                     parameters=parameters, seed=args.seed, output="json" if args.json else "text",
                     budgets=budgets)


def main(argv: Optional[List[str]] = None) -> int:
    return run(parse_config(argv))


if __name__ == "__main__":
    sys.exit(main())
