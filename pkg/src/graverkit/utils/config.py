"""Configuration management for graverkit."""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from ..errors import GraverkitError

APP_ID = "graverkit"
CONFIG_DIR = Path.home() / ".config" / "graverkit"
CONFIG_FILE = CONFIG_DIR / "config.json"
THREADS_ENV = "GRAVERKIT_THREADS"


class Limits(BaseModel):
    """Resource caps; exceeding one raises ResourceLimitExceeded naming it."""

    model_config = ConfigDict(frozen=True)

    max_elements: int = Field(default=10**6, ge=1)
    max_norm: int = Field(default=10**4, ge=1)
    max_fiber: int = Field(default=10**6, ge=1)
    max_states: int = Field(default=10**6, ge=1)

    def raised(self, factor: int) -> Limits:
        """Copy with every cap multiplied by factor."""
        return Limits(
            max_elements=self.max_elements * factor,
            max_norm=self.max_norm * factor,
            max_fiber=self.max_fiber * factor,
            max_states=self.max_states * factor,
        )


DEFAULT_LIMITS = Limits()


def threads_from_env(default: int = 1) -> int:
    """Read GRAVERKIT_THREADS; must be a positive integer when set."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise GraverkitError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise GraverkitError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return value


class Config:
    """Manages graverkit configuration stored as JSON."""

    def __init__(self, path: Path | None = None) -> None:
        self.path = path or CONFIG_FILE
        self._config: dict[str, Any] = {}
        self._load()

    def _load(self) -> None:
        """Load configuration from disk."""
        if self.path.exists():
            try:
                loaded = json.loads(self.path.read_text())
                self._config = loaded if isinstance(loaded, dict) else {}
            except json.JSONDecodeError:
                self._config = {}
        else:
            self._config = {}

    def _save(self) -> None:
        """Save configuration to disk."""
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self.path.write_text(json.dumps(self._config, indent=2))

    def limits(self, **overrides: int | None) -> Limits:
        """Effective caps: file values, then non-None overrides."""
        values = {
            name: self._config[name]
            for name in Limits.model_fields
            if isinstance(self._config.get(name), int)
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return Limits(**values)

    @property
    def threads(self) -> int:
        """Parallelism bound; the environment wins over the file."""
        stored = self._config.get("threads", 1)
        return threads_from_env(default=stored if isinstance(stored, int) and stored > 0 else 1)

    @property
    def cache_enabled(self) -> bool:
        return bool(self._config.get("cache_enabled", True))

    @property
    def cache_path(self) -> Path:
        stored = self._config.get("cache_path")
        return Path(stored) if stored else self.path.parent / "cache.db"

    def get(self, key: str, default: Any = None) -> Any:
        """Get a configuration value."""
        return self._config.get(key, default)

    def set(self, key: str, value: Any) -> None:
        """Set a configuration value."""
        self._config[key] = value
        self._save()
