"""Configuration for the replay command."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any

import yaml

from src.specification.miner import DEFAULT_MINING_MODE, MiningMode
from src.specification.pipeline import DEFAULT_WINDOW, TriggerPolicy

from .exceptions import ConfigurationError

DEFAULT_TRIGGER_POLICY = TriggerPolicy.ON_DEMAND

_PATH_KEYS = ("graph_path", "events_path", "spec_path", "out_path")


@dataclass(frozen=True, slots=True)
class ReplayConfig:
    """Typed settings for one replay run."""

    graph_path: Path
    events_path: Path
    spec_path: Path | None = None
    out_path: Path | None = None
    mode: MiningMode = DEFAULT_MINING_MODE
    window: int = DEFAULT_WINDOW
    trigger_policy: TriggerPolicy = DEFAULT_TRIGGER_POLICY
    show_progress: bool = True

    def __post_init__(self) -> None:
        if isinstance(self.window, bool) or not isinstance(self.window, int):
            raise ConfigurationError("window must be an integer")
        if self.window < 1:
            raise ConfigurationError(f"window must be at least 1, got {self.window}")

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any], base_dir: Path | None = None) -> ReplayConfig:
        """Build a configuration from plain values.

        Args:
            data: Keys named after the fields; enum fields take their string values
            base_dir: Directory that relative paths resolve against

        Raises:
            ConfigurationError: On unknown keys, missing paths or invalid values
        """
        allowed = {item.name for item in fields(cls)}
        unknown = sorted(set(data) - allowed)
        if unknown:
            raise ConfigurationError(f"Unknown configuration key(s): {', '.join(unknown)}")

        values: dict[str, Any] = {}
        for key in _PATH_KEYS:
            raw = data.get(key)
            if raw is None:
                continue
            if not isinstance(raw, str | Path) or not str(raw).strip():
                raise ConfigurationError(f"{key} must be a non-empty path")
            values[key] = _resolve(Path(raw).expanduser(), base_dir)
        for key in ("graph_path", "events_path"):
            if key not in values:
                raise ConfigurationError(f"Missing required configuration key: {key}")

        if "mode" in data:
            values["mode"] = _enum_value(MiningMode, data["mode"], "mode")
        if "trigger_policy" in data:
            values["trigger_policy"] = _enum_value(
                TriggerPolicy, data["trigger_policy"], "trigger_policy"
            )
        if "window" in data:
            values["window"] = data["window"]
        if "show_progress" in data:
            if not isinstance(data["show_progress"], bool):
                raise ConfigurationError("show_progress must be true or false")
            values["show_progress"] = data["show_progress"]
        return cls(**values)

    @classmethod
    def from_yaml(cls, path: Path) -> ReplayConfig:
        """Load a YAML file; relative paths resolve against its directory."""
        try:
            data = yaml.safe_load(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise ConfigurationError(f"Cannot read configuration {path}: {exc}") from exc
        except yaml.YAMLError as exc:
            raise ConfigurationError(f"Invalid YAML in {path}: {exc}") from exc
        if data is None:
            data = {}
        if not isinstance(data, Mapping):
            raise ConfigurationError(f"Configuration {path} must be a mapping")
        return cls.from_mapping(data, base_dir=path.parent)

    def with_overrides(self, **changes: Any) -> ReplayConfig:
        """Return a validated copy; ``None`` values leave a field unchanged."""
        allowed = {item.name for item in fields(self)}
        unknown = sorted(set(changes) - allowed)
        if unknown:
            raise ConfigurationError(f"Unknown configuration key(s): {', '.join(unknown)}")
        current = {item.name: getattr(self, item.name) for item in fields(self)}
        current.update({key: value for key, value in changes.items() if value is not None})
        if isinstance(current["mode"], str) and not isinstance(current["mode"], MiningMode):
            current["mode"] = _enum_value(MiningMode, current["mode"], "mode")
        if isinstance(current["trigger_policy"], str) and not isinstance(
            current["trigger_policy"], TriggerPolicy
        ):
            current["trigger_policy"] = _enum_value(
                TriggerPolicy, current["trigger_policy"], "trigger_policy"
            )
        for key in _PATH_KEYS:
            if current[key] is not None:
                current[key] = Path(current[key])
        return ReplayConfig(**current)


def _resolve(path: Path, base_dir: Path | None) -> Path:
    if path.is_absolute() or base_dir is None:
        return path
    return base_dir / path


def _enum_value(enum_type: Any, raw: Any, key: str) -> Any:
    try:
        return enum_type(raw)
    except ValueError as exc:
        choices = ", ".join(member.value for member in enum_type)
        raise ConfigurationError(f"{key} must be one of: {choices}; got {raw!r}") from exc
