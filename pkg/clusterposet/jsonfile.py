"""
JSON File Handler Module

Safe JSON read/write with file locking, for quiver inputs, exports and
reports.
"""

from __future__ import annotations

import json
import logging
import os
from contextlib import nullcontext
from pathlib import Path
from typing import Any

from filelock import FileLock

from clusterposet.config import get_int
from clusterposet.errors import QuiverError

logger = logging.getLogger(__name__)


class JSONFileHandler:
    """
    Handles JSON and text file operations with file locking.
    """

    def __init__(self, path: str | Path):
        """
        Args:
            path: File to read or write. A sibling '<name>.lock' guards it.
        """
        self.file_path: Path = Path(path).expanduser()
        self.lock = FileLock(str(self.file_path) + ".lock")

    # ------------------------------------------------------------
    # Read
    # ------------------------------------------------------------

    def _read_lock(self):
        # Bundled inputs may live in a read-only install.
        if os.access(self.file_path.parent, os.W_OK):
            return self.lock
        return nullcontext()

    def read_text(self) -> str:
        with self._read_lock():
            return self.file_path.read_text(encoding="utf-8")

    def load(self) -> Any:
        """
        Load JSON data from disk.

        Raises:
            FileNotFoundError: The file does not exist.
            QuiverError: The file is not valid JSON.
        """
        with self._read_lock():
            if not self.file_path.exists():
                logger.error("JSON file not found: %s", self.file_path)
                raise FileNotFoundError(f"No such file: {self.file_path}")

            try:
                with self.file_path.open("r", encoding="utf-8") as f:
                    return json.load(f)
            except json.JSONDecodeError as e:
                logger.error("Invalid JSON in %s: %s", self.file_path, e)
                raise QuiverError(f"invalid JSON in {self.file_path}: {e}") from e

    # ------------------------------------------------------------
    # Write
    # ------------------------------------------------------------

    def save(self, data: Any) -> None:
        """
        Save JSON data to disk, indented per [output] indent.

        Raises on write failure.
        """
        self.save_text(dump_json(data))

    def save_text(self, text: str) -> None:
        self.file_path.parent.mkdir(parents=True, exist_ok=True)
        with self.lock:
            try:
                with self.file_path.open("w", encoding="utf-8") as f:
                    f.write(text)
            except Exception as e:
                logger.error("Error writing %s: %s", self.file_path, e)
                raise
        logger.info("Wrote %s", self.file_path)


def dump_json(data: Any) -> str:
    indent = get_int("output", "indent", 2)
    return json.dumps(data, indent=indent, ensure_ascii=False) + "\n"
