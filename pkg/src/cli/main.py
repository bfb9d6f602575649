"""Argument parsing and dispatch for the ``smartenv`` command."""

from __future__ import annotations

import argparse
import logging
from collections.abc import Sequence
from pathlib import Path

from colorama import init  # type: ignore[import-untyped]

from src.specification.miner import DEFAULT_MINING_MODE, MiningMode
from src.specification.pipeline import TriggerPolicy

from .commands import EXIT_ERROR, DecideQuery, cmd_decide, cmd_mine, cmd_react, cmd_replay
from .config import ReplayConfig
from .console import print_error
from .exceptions import ConfigurationError

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
DEFAULT_LOG_LEVEL = "WARNING"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smartenv",
        description="Mine, decide and react on temporal specifications of smart-environment objects.",
    )
    parser.add_argument(
        "--log-level",
        choices=LOG_LEVELS,
        default=DEFAULT_LOG_LEVEL,
        help="Logging verbosity on standard error (default: %(default)s)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    mine_parser = subparsers.add_parser("mine", help="Mine specifications from an event log")
    mine_parser.add_argument("--graph", type=Path, required=True, help="Environment graph (JSON)")
    mine_parser.add_argument("--events", type=Path, required=True, help="Event log (CSV)")
    mine_parser.add_argument(
        "--mode",
        choices=[mode.value for mode in MiningMode],
        default=DEFAULT_MINING_MODE.value,
        help="Existence-formula policy (default: %(default)s)",
    )
    mine_parser.add_argument("--out", type=Path, help="Output specification (default: stdout)")

    decide_parser = subparsers.add_parser("decide", help="Decide a satisfiability question")
    decide_parser.add_argument("query", choices=[query.value for query in DecideQuery])
    decide_parser.add_argument("formula", help='Formula text, e.g. "G (s03 -> F s08)"')
    decide_parser.add_argument("--tree", action="store_true", help="Print the truth tree")

    react_parser = subparsers.add_parser("react", help="React to a trigger for one object")
    react_parser.add_argument("--spec", type=Path, required=True, help="Specification (JSON)")
    react_parser.add_argument("--object", required=True, dest="object_id", help="Object id")
    react_parser.add_argument("--trigger", required=True, help="Trigger formula text")
    react_parser.add_argument("--out", type=Path, help="Where to write the updated specification")
    react_parser.add_argument("--tree", action="store_true", help="Print the reaction tree")
    react_parser.add_argument("--json", action="store_true", help="Print the full result as JSON")

    replay_parser = subparsers.add_parser("replay", help="Replay an event log end to end")
    replay_parser.add_argument("--config", type=Path, help="YAML replay configuration")
    replay_parser.add_argument("--graph", type=Path, help="Environment graph (JSON)")
    replay_parser.add_argument("--events", type=Path, help="Event log (CSV)")
    replay_parser.add_argument("--spec", type=Path, help="Initial specification (JSON)")
    replay_parser.add_argument("--out", type=Path, help="Output specification (default: stdout)")
    replay_parser.add_argument("--mode", choices=[mode.value for mode in MiningMode])
    replay_parser.add_argument("--window", type=int, help="Events per mining round")
    replay_parser.add_argument(
        "--trigger-policy", choices=[policy.value for policy in TriggerPolicy]
    )
    replay_parser.add_argument(
        "--no-progress", action="store_true", help="Hide the progress bar"
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    init()
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    if args.command == "mine":
        return cmd_mine(args.graph, args.events, MiningMode(args.mode), args.out)
    if args.command == "decide":
        return cmd_decide(args.formula, DecideQuery(args.query), show_tree=args.tree)
    if args.command == "react":
        return cmd_react(
            args.spec,
            args.object_id,
            args.trigger,
            args.out,
            show_tree=args.tree,
            as_json=args.json,
        )
    try:
        config = _replay_config(args)
    except ConfigurationError as exc:
        print_error(f"Configuration error: {exc}")
        return EXIT_ERROR
    return cmd_replay(config)


def _replay_config(args: argparse.Namespace) -> ReplayConfig:
    overrides = {
        "graph_path": args.graph,
        "events_path": args.events,
        "spec_path": args.spec,
        "out_path": args.out,
        "mode": args.mode,
        "window": args.window,
        "trigger_policy": args.trigger_policy,
        "show_progress": False if args.no_progress else None,
    }
    if args.config is not None:
        return ReplayConfig.from_yaml(args.config).with_overrides(**overrides)
    if args.graph is None or args.events is None:
        raise ConfigurationError("replay requires --config or both --graph and --events")
    return ReplayConfig.from_mapping(
        {key: value for key, value in overrides.items() if value is not None}
    )
