from __future__ import annotations

import configparser
import logging
import os
from functools import lru_cache
from pathlib import Path
from typing import Any, Callable

from dotenv import load_dotenv

APP_ID = "cluster-poset"
CONFIG_ENV = "CLUSTER_POSET_CONFIG"

logger = logging.getLogger(__name__)


# ------------------------------------------------------------
# Config file location
# ------------------------------------------------------------

def get_config_path() -> Path:
    """
    Returns the absolute path to the config.ini file.

    Uses:
      - $CLUSTER_POSET_CONFIG (also read from a .env file)
      - or $XDG_CONFIG_HOME/cluster-poset/config.ini
      - or ~/.config/cluster-poset/config.ini
    """
    load_dotenv()

    explicit = os.environ.get(CONFIG_ENV)
    if explicit:
        return Path(os.path.expandvars(explicit)).expanduser()

    base = Path(os.environ.get("XDG_CONFIG_HOME", Path.home() / ".config"))
    return base / APP_ID / "config.ini"


# ------------------------------------------------------------
# Load & cache config
# ------------------------------------------------------------

@lru_cache(maxsize=1)
def load_config() -> configparser.ConfigParser:
    """
    Load and cache the configuration file.

    The config is cached for the lifetime of the process. A missing
    default file yields an empty config; a file named explicitly through
    $CLUSTER_POSET_CONFIG must exist.
    """
    config_path = get_config_path()
    parser = configparser.ConfigParser()

    if not config_path.exists():
        if os.environ.get(CONFIG_ENV):
            raise FileNotFoundError(
                f"Config file not found:\n\n"
                f"  {config_path}\n\n"
                f"Unset {CONFIG_ENV} or create the file."
            )
        return parser

    parser.read(config_path)
    return parser


def reset_config() -> None:
    """
    Drop the cached config so the next access re-reads the file.
    """
    load_config.cache_clear()


# ------------------------------------------------------------
# Typed accessors
# ------------------------------------------------------------

def _lookup(section: str, key: str, default: Any, convert: Callable[[str], Any]) -> Any:
    raw = load_config().get(section, key, fallback=None)
    if raw is None:
        return default
    try:
        return convert(raw)
    except ValueError:
        logger.warning("Invalid value %r for [%s].%s, using %s", raw, section, key, default)
        return default


def get_str(section: str, key: str, default: str | None = None) -> str | None:
    return _lookup(section, key, default, str)


def get_int(section: str, key: str, default: int) -> int:
    return _lookup(section, key, default, int)


def get_bool(section: str, key: str, default: bool = False) -> bool:
    return _lookup(section, key, default, _as_bool)


def _as_bool(raw: str) -> bool:
    value = raw.strip().lower()
    if value not in configparser.ConfigParser.BOOLEAN_STATES:
        raise ValueError(raw)
    return configparser.ConfigParser.BOOLEAN_STATES[value]


def get_path(section: str, key: str, default: str | Path) -> Path:
    """
    Returns a Path, expanding ~ and environment variables.

    If the value is relative, it is resolved relative to the config file.
    """
    raw = get_str(section, key, None)
    if raw is None:
        return Path(default).expanduser().resolve()

    raw = os.path.expandvars(os.path.expanduser(raw))
    path = Path(raw)

    if not path.is_absolute():
        path = get_config_path().parent / path

    return path.resolve()


def get_quivers_dir() -> Path:
    """
    Return the directory holding the bundled example quivers.
    """
    bundled = Path(__file__).resolve().parent / "quivers"
    return get_path("paths", "quivers_dir", default=bundled)


__all__ = [
    "load_config",
    "reset_config",
    "get_str",
    "get_bool",
    "get_int",
    "get_path",
    "get_quivers_dir",
]
