"""
poset: export the cluster tilting poset as JSON relations, a DOT Hasse
diagram or a CSV list of covers.
"""

from __future__ import annotations

import argparse
import logging
from typing import List

from clusterposet.cluster import PX, PX_SHIFT, ClusterTilting, subset_containing, tilting_poset
from clusterposet.commands import (
    EXIT_OK,
    add_output_arguments,
    add_quiver_argument,
    add_vertex_argument,
    emit,
    emit_json,
    load_quiver,
    report_header,
)
from clusterposet.errors import PreconditionError
from clusterposet.helpers.render import poset_to_csv, poset_to_dict, poset_to_dot
from clusterposet.quiver import Quiver, require_dynkin

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "poset",
        help="export the poset of cluster tilting objects",
        description="Export the poset. With --vertex, objects containing P_x "
        "(x a sink) or P_x[1] (x a source) are highlighted.",
    )
    add_quiver_argument(parser)
    add_vertex_argument(parser)
    add_output_arguments(parser, ("json", "dot", "csv"))
    parser.set_defaults(handler=run)


def highlighted(q: Quiver, x: str | None) -> List[ClusterTilting]:
    if x is None:
        return []
    if q.is_sink(x):
        return subset_containing(q, PX, x)
    if q.is_source(x):
        return subset_containing(q, PX_SHIFT, x)
    raise PreconditionError(f"vertex {x!r} is neither a sink nor a source of {q}")


def run(args: argparse.Namespace) -> int:
    q = load_quiver(args.quiver)
    kind = require_dynkin(q)
    poset = tilting_poset(q)
    marked = highlighted(q, args.vertex)

    if args.format == "dot":
        emit(poset_to_dot(poset, name=f"{kind}", highlight=marked), args.out)
    elif args.format == "csv":
        emit(poset_to_csv(poset), args.out)
    else:
        emit_json({
            **report_header([args.quiver]),
            "quiver": q.to_dict(),
            "dynkin_type": str(kind),
            "poset": poset_to_dict(poset, highlight=marked),
        }, args.out)

    logger.info("Exported %d-element poset as %s", len(poset), args.format)
    return EXIT_OK
