"""
Command Package

One module per sub-command; each exposes register(subparsers), which adds
its parser and sets ``handler`` to a function taking the parsed arguments
and returning the exit code.
"""

from __future__ import annotations

import argparse
import hashlib
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Iterable

from clusterposet import __version__
from clusterposet.jsonfile import JSONFileHandler, dump_json
from clusterposet.quiver import Quiver
from clusterposet.quiverstore import QuiverStore

logger = logging.getLogger(__name__)

TOOL = "cluster-poset"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


# ------------------------------------------------------------
# Shared arguments
# ------------------------------------------------------------

def add_quiver_argument(parser: argparse.ArgumentParser, repeat: bool = False) -> None:
    parser.add_argument(
        "--quiver",
        action="append" if repeat else "store",
        required=not repeat,
        metavar="PATH_OR_NAME",
        help="quiver JSON file, or the name of a bundled quiver (e.g. a3-linear)",
    )


def add_output_arguments(parser: argparse.ArgumentParser, formats: Iterable[str]) -> None:
    formats = list(formats)
    parser.add_argument("--format", choices=formats, default=formats[0])
    parser.add_argument("--out", metavar="PATH", help="write the result here instead of stdout")


def add_vertex_argument(parser: argparse.ArgumentParser, required: bool = False) -> None:
    parser.add_argument("--vertex", required=required, metavar="LABEL")


# ------------------------------------------------------------
# Inputs
# ------------------------------------------------------------

def load_quiver(name_or_path: str) -> Quiver:
    return QuiverStore.load(name_or_path)


def input_digest(paths: Iterable[Path]) -> str:
    digest = hashlib.sha256()
    for path in paths:
        digest.update(Path(path).read_bytes())
    return digest.hexdigest()


def report_header(names: Iterable[str]) -> Dict[str, Any]:
    """
    Tool name, version and the SHA-256 of the input file(s), in order.
    """
    paths = [QuiverStore.resolve(name) for name in names]
    return {
        "tool": TOOL,
        "version": __version__,
        "input_sha256": input_digest(paths),
    }


# ------------------------------------------------------------
# Outputs
# ------------------------------------------------------------

def emit(text: str, out: str | None) -> None:
    """
    Write text to --out, or to stdout.
    """
    if out:
        JSONFileHandler(out).save_text(text)
        return
    sys.stdout.write(text)
    sys.stdout.flush()


def emit_json(data: Any, out: str | None) -> None:
    emit(dump_json(data), out)
