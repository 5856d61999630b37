"""
Quiver Store Module

Loads quivers from JSON files and from the bundled example directory
(looked up by name), caching parsed quivers until their file changes.
"""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Dict, List, Tuple

from clusterposet.config import get_quivers_dir
from clusterposet.jsonfile import JSONFileHandler
from clusterposet.quiver import Quiver, quiver_from_dict

logger = logging.getLogger(__name__)

SUFFIX = ".json"


class QuiverStore:
    """
    Static utility class for locating and loading quiver files.

    Parsed quivers are cached per resolved path and reloaded when the
    file's mtime changes.
    """

    _cache: Dict[Path, Tuple[float, Quiver]] = {}

    # --------------------------------------------------------

    @classmethod
    def resolve(cls, name_or_path: str | Path) -> Path:
        """
        A path to an existing file, or the bundled quiver of that name
        (with or without '.json', relative to the quivers directory).

        Raises:
            FileNotFoundError: Neither exists.
        """
        path = Path(name_or_path).expanduser()
        if path.is_file():
            return path.resolve()

        base = get_quivers_dir()
        for candidate in (base / str(name_or_path), base / f"{name_or_path}{SUFFIX}"):
            if candidate.is_file():
                return candidate.resolve()

        raise FileNotFoundError(
            f"No quiver file or bundled quiver named {str(name_or_path)!r} (searched {base})"
        )

    # --------------------------------------------------------

    @classmethod
    def load(cls, name_or_path: str | Path) -> Quiver:
        path = cls.resolve(name_or_path)
        mtime = os.path.getmtime(path)

        cached = cls._cache.get(path)
        if cached and cached[0] == mtime:
            return cached[1]

        if cached:
            logger.info("Quiver file changed (mtime %s → %s): %s", cached[0], mtime, path)

        quiver = quiver_from_dict(JSONFileHandler(path).load())
        cls._cache[path] = (mtime, quiver)
        logger.debug("Loaded %s from %s", quiver, path)
        return quiver

    @classmethod
    def load_dir(cls, directory: str | Path) -> List[Tuple[str, Quiver]]:
        """
        Every quiver file in directory (not recursive), sorted by file name.
        """
        directory = Path(directory).expanduser()
        if not directory.is_dir():
            directory = cls.resolve_dir(directory)
        return [
            (path.stem, cls.load(path))
            for path in sorted(directory.glob(f"*{SUFFIX}"))
        ]

    @classmethod
    def resolve_dir(cls, name: str | Path) -> Path:
        candidate = get_quivers_dir() / str(name)
        if candidate.is_dir():
            return candidate
        raise FileNotFoundError(f"No quiver directory named {str(name)!r}")

    # --------------------------------------------------------

    @classmethod
    def bundled_names(cls) -> List[str]:
        """
        Names of the bundled quivers, including 'orientations/<type>/<name>'.
        """
        base = get_quivers_dir()
        return sorted(
            path.relative_to(base).with_suffix("").as_posix()
            for path in base.rglob(f"*{SUFFIX}")
        )

    # --------------------------------------------------------

    @classmethod
    def force_reload(cls) -> None:
        """
        Force reload on next access.
        """
        cls._cache.clear()
