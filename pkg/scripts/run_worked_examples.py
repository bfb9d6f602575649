"""Walk through the worked examples shipped in data/examples.

This script checks, end to end:
1. Mining the o5 event log against the four-node environment
2. The truth trees of the small visit/response formulas
3. The repair after imposing ``G !p115`` on object o

Run it after changing the reasoning code; it exits non-zero when any result diverges.
"""

from __future__ import annotations

import sys
from pathlib import Path

from colorama import Fore, Style, init  # type: ignore[import-untyped]

from src.cli.console import print_error, print_header, print_info, print_success
from src.environment.loaders import load_events, load_graph
from src.logic.parser import parse
from src.logic.tableau import build_tree
from src.specification.miner import MiningMode, mine
from src.specification.models import merge
from src.specification.reactor import react
from src.specification.store import read_specification

_DATA_DIR = Path(__file__).resolve().parent.parent / "data" / "examples"

EXPECTED_MINED = {"G !e2", "G (s03 -> F s08)", "G (s08 -> F s07)"}


def check_mining() -> bool:
    """Mine the o5 log in both modes."""
    print_header("Mining the o5 event log")
    graph = load_graph((_DATA_DIR / "graph.json").read_text(encoding="utf-8"))
    behavior = load_events((_DATA_DIR / "events.csv").read_text(encoding="utf-8"), graph)
    print_info(f"Loaded {len(graph)} nodes and {len(behavior)} events")

    passed = True
    for mode, expected in (
        (MiningMode.PAPER_EXAMPLE, EXPECTED_MINED),
        (MiningMode.LITERAL, EXPECTED_MINED | {"F s07"}),
    ):
        sigma = merge(mine(behavior, graph, mode))
        found = {str(formula) for formula in sigma.formulas()}
        for formula in sorted(found):
            print(f"  {formula}")
        if found == expected:
            print_success(f"{mode.value} mode produced the expected {len(found)} formulas")
        else:
            print_error(f"{mode.value} mode produced {sorted(found)}, expected {sorted(expected)}")
            passed = False
    return passed


def check_trees() -> bool:
    """Build the sample trees and compare their open branches."""
    print_header("Truth trees")
    cases = [
        ("v10 & (v10 -> F p110)", [{"v10", "p110@1.[a]"}]),
        (
            "v11 & ((v11 -> F p115) | (v11 -> F p116))",
            [{"v11", "p115@1.[a]"}, {"v11", "p116@1.[b]"}],
        ),
        (
            "v11 & ((v11 -> F p115) | (v11 -> F p116)) & G !p115",
            [{"v11", "p116@1.[b]"}],
        ),
    ]
    passed = True
    for text, expected in cases:
        tree = build_tree(parse(text))
        found = [
            {
                str(literal).removesuffix("@Now")
                for literal in branch.literals()
                if literal.positive
            }
            for branch in tree.open_branches
        ]
        print(f"{Fore.CYAN}{text}{Style.RESET_ALL}")
        print(tree.dump())
        if found == expected:
            print_success(f"{len(tree.branches)} branch(es), {len(found)} open as expected")
        else:
            print_error(f"Open branches {found}, expected {expected}")
            passed = False

    mined = build_tree(parse("G !e2 & G (s03 -> F s08) & G (s08 -> F s07)"))
    if all(branch.is_open for branch in mined.branches):
        print_success(f"Mined specification tree: all {len(mined.branches)} branches open")
    else:
        print_error("Mined specification tree has a closed branch")
        passed = False
    return passed


def check_repair() -> bool:
    """Impose G !p115 on object o and check the repaired specification."""
    print_header("Repair after G !p115")
    sigma = read_specification(_DATA_DIR / "spec.json")
    result = react(sigma, parse("G !p115"), "o")
    updated = {str(formula) for formula in result.updated_spec.formulas()}
    expected = {"G !p115", "v11", "v11 -> F p116"}
    for formula in sorted(updated):
        print(f"  {formula}")
    if updated == expected and result.actions == ("p116",):
        print_success("Specification repaired, proposed action p116")
        return True
    print_error(f"Got {sorted(updated)} with actions {list(result.actions)}")
    return False


def main() -> int:
    init(autoreset=True)
    checks = [check_mining, check_trees, check_repair]
    outcomes = []
    for check in checks:
        try:
            outcomes.append(check())
        except Exception as e:
            print_error(f"{check.__name__} failed: {e}")
            outcomes.append(False)

    print_header("Summary")
    if all(outcomes):
        print_success("All worked examples reproduced")
        return 0
    print_error(f"{outcomes.count(False)} of {len(outcomes)} checks diverged")
    return 1


if __name__ == "__main__":
    sys.exit(main())
