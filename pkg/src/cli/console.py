"""Colored status lines on standard error."""

from __future__ import annotations

import sys

from colorama import Fore, Style  # type: ignore[import-untyped]


def print_header(text: str) -> None:
    """Print a banner line."""
    print(f"\n{Fore.CYAN}{'=' * 80}{Style.RESET_ALL}", file=sys.stderr)
    print(f"{Fore.CYAN}{text.center(80)}{Style.RESET_ALL}", file=sys.stderr)
    print(f"{Fore.CYAN}{'=' * 80}{Style.RESET_ALL}\n", file=sys.stderr)


def print_success(text: str) -> None:
    print(f"{Fore.GREEN}✓ {text}{Style.RESET_ALL}", file=sys.stderr)


def print_error(text: str) -> None:
    print(f"{Fore.RED}✗ {text}{Style.RESET_ALL}", file=sys.stderr)


def print_info(text: str) -> None:
    print(f"{Fore.YELLOW}→ {text}{Style.RESET_ALL}", file=sys.stderr)
