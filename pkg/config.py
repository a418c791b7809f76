"""Process-wide settings read from the environment (and an optional .env file)."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from functools import lru_cache
from pathlib import Path

from dotenv import load_dotenv

_DEFAULT_CACHE_DIR = Path(__file__).parent / "cache_store"
_DEFAULT_ORDER_CAP = 4096
RANDOM_SEED = 42


@dataclass(frozen=True)
class Settings:
    """Read-only knobs shared by builders, the harness and the CLI."""
    order_cap: int = _DEFAULT_ORDER_CAP
    cache_dir: Path = _DEFAULT_CACHE_DIR
    cache_enabled: bool = True
    exhaustive_limit: int = 256          # validate every triple up to this order
    validation_sample: int = 100_000     # sampled triples above it
    seed: int = RANDOM_SEED
    ideal_lattice_limit: int = 64
    principal_ideal_limit: int = 256
    principal_ideal_sample: int = 64
    log_level: str = "INFO"


_override: Settings | None = None


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


@lru_cache(maxsize=1)
def _settings_from_env() -> Settings:
    load_dotenv()
    log_level = os.getenv("LOG_LEVEL", "DEBUG" if os.getenv("DEBUG") else "INFO")
    return Settings(
        order_cap=_int_env("ANELO_ORDER_CAP", _DEFAULT_ORDER_CAP),
        cache_dir=Path(os.getenv("ANELO_CACHE_DIR") or _DEFAULT_CACHE_DIR),
        cache_enabled=not os.getenv("ANELO_NO_CACHE"),
        exhaustive_limit=_int_env("ANELO_EXHAUSTIVE_LIMIT", 256),
        validation_sample=_int_env("ANELO_VALIDATION_SAMPLE", 100_000),
        seed=_int_env("ANELO_SEED", RANDOM_SEED),
        log_level=log_level.upper(),
    )


def get_settings() -> Settings:
    return _override if _override is not None else _settings_from_env()


def configure(**overrides) -> Settings:
    """Replace selected fields for the rest of the process and return the result."""
    global _override
    _override = replace(get_settings(), **overrides)
    return _override


def reset_settings() -> None:
    global _override
    _override = None
