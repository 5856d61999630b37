"""
invariants: Coxeter polynomials of the incidence algebras of the cluster
tilting posets of several quivers, one row per quiver, with an equality
flag against the first row.
"""

from __future__ import annotations

import argparse
import logging
from pathlib import Path
from typing import Any, Dict, List

from clusterposet.cluster import tilting_poset
from clusterposet.commands import (
    EXIT_FAILED,
    EXIT_OK,
    add_output_arguments,
    add_quiver_argument,
    emit,
    emit_json,
    load_quiver,
    report_header,
)
from clusterposet.errors import QuiverError
from clusterposet.helpers.render import polynomial_to_dict, rows_to_csv
from clusterposet.poset import coxeter_polynomial
from clusterposet.quiver import Quiver, reflection_path, require_dynkin
from clusterposet.quiverstore import QuiverStore

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "invariants",
        help="tabulate Coxeter polynomials of the cluster tilting posets",
    )
    add_quiver_argument(parser, repeat=True)
    parser.add_argument(
        "--set",
        action="append",
        metavar="DIR",
        help="directory of quiver files, or a bundled one (e.g. orientations/a3)",
    )
    add_output_arguments(parser, ("json", "csv"))
    parser.set_defaults(handler=run)


def collect_inputs(args: argparse.Namespace) -> List[str]:
    names: List[str] = list(args.quiver or [])
    for directory in args.set or []:
        path = Path(directory).expanduser()
        if not path.is_dir():
            path = QuiverStore.resolve_dir(directory)
        names.extend(str(p) for p in sorted(path.glob("*.json")))
    if not names:
        raise QuiverError("invariants needs at least one --quiver or --set")
    return names


def _path_from(first: Quiver, q: Quiver) -> List[str] | None:
    try:
        return reflection_path(first, q)
    except QuiverError:
        return None


def build_rows(names: List[str]) -> List[Dict[str, Any]]:
    rows: List[Dict[str, Any]] = []
    first: Quiver | None = None
    first_poly = None

    for name in names:
        q = load_quiver(name)
        kind = require_dynkin(q)
        poly = coxeter_polynomial(tilting_poset(q))

        if first is None:
            first, first_poly = q, poly

        rows.append({
            "input": Path(name).stem if name.endswith(".json") else name,
            "quiver": q.to_dict(),
            "dynkin_type": str(kind),
            "objects": len(tilting_poset(q)),
            "polynomial": polynomial_to_dict(poly),
            "reflection_path": _path_from(first, q),
            "equal_to_first": poly == first_poly,
        })
        logger.info("%s: %s", name, rows[-1]["polynomial"]["text"])

    return rows


def run(args: argparse.Namespace) -> int:
    names = collect_inputs(args)
    rows = build_rows(names)
    all_equal = all(row["equal_to_first"] for row in rows)

    if args.format == "csv":
        table = [[
            "input", "dynkin_type", "objects", "polynomial", "reflection_path", "equal_to_first",
        ]]
        for row in rows:
            path = row["reflection_path"]
            table.append([
                row["input"],
                row["dynkin_type"],
                str(row["objects"]),
                row["polynomial"]["text"],
                "" if path is None else " ".join(path),
                "yes" if row["equal_to_first"] else "no",
            ])
        emit(rows_to_csv(table), args.out)
    else:
        emit_json({
            **report_header(names),
            "rows": rows,
            "all_equal": all_equal,
        }, args.out)

    if not all_equal:
        logger.warning("Coxeter polynomials differ across the inputs")
        return EXIT_FAILED
    return EXIT_OK
