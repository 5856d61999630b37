"""
Rendering helpers: JSON-ready dicts, CSV and DOT text for posets,
cluster tilting objects and polynomials.
"""

from __future__ import annotations

import csv
import io
import json
from functools import lru_cache
from typing import Any, Collection, Dict, Hashable, Iterable, List

from jinja2 import Environment, PackageLoader
from sympy import Poly

from clusterposet.cluster import ClusterTilting
from clusterposet.exact_linalg import poly_coefficients, poly_text
from clusterposet.poset import FinitePoset, hasse


def element_json(key: Hashable) -> Any:
    """
    JSON value for a poset element: root lists for cluster tilting objects,
    the string itself for string keys, str() otherwise.
    """
    if isinstance(key, ClusterTilting):
        return key.to_json()
    if isinstance(key, str):
        return key
    return str(key)


def element_label(key: Hashable) -> str:
    value = element_json(key)
    if isinstance(value, str):
        return value
    return json.dumps(value, separators=(",", ":"))


def dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


@lru_cache(maxsize=1)
def _environment() -> Environment:
    env = Environment(
        loader=PackageLoader("clusterposet", "templates"),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
        autoescape=False,
    )
    env.filters["dot_quote"] = dot_quote
    return env


# ------------------------------------------------------------
# Posets
# ------------------------------------------------------------

def poset_to_dict(P: FinitePoset, highlight: Collection[Hashable] = ()) -> Dict[str, Any]:
    """
    Elements in poset order; relations and covers as index pairs
    (smaller, larger).
    """
    index = P.index
    minimum, maximum = P.minimum(), P.maximum()
    data: Dict[str, Any] = {
        "size": len(P),
        "elements": [element_json(e) for e in P.elements],
        "relations": [[index(a), index(b)] for a, b in P.strict_pairs()],
        "covers": [[index(a), index(b)] for a, b in hasse(P)],
        "minimum": None if minimum is None else index(minimum),
        "maximum": None if maximum is None else index(maximum),
    }
    if highlight:
        data["highlighted"] = sorted(index(e) for e in highlight)
    return data


def poset_to_dot(
    P: FinitePoset,
    name: str = "poset",
    highlight: Collection[Hashable] = (),
) -> str:
    """
    Hasse diagram as DOT, edges from smaller to larger; highlighted nodes
    are drawn bold.
    """
    marked = set(highlight)
    nodes = [
        {"id": i, "label": element_label(e), "bold": e in marked}
        for i, e in enumerate(P.elements)
    ]
    edges = [(P.index(a), P.index(b)) for a, b in hasse(P)]
    template = _environment().get_template("hasse.dot.j2")
    return template.render(name=_dot_id(name), nodes=nodes, edges=edges)


def _dot_id(name: str) -> str:
    cleaned = "".join(c if c.isalnum() else "_" for c in name)
    return cleaned if cleaned and not cleaned[0].isdigit() else f"g_{cleaned}"


def poset_to_csv(P: FinitePoset) -> str:
    """
    One row per Hasse edge: smaller, larger.
    """
    return rows_to_csv([["smaller", "larger"]] + [
        [element_label(a), element_label(b)] for a, b in hasse(P)
    ])


def tiltings_to_csv(objects: Iterable[ClusterTilting]) -> str:
    return rows_to_csv([["index", "summands"]] + [
        [str(i), element_label(t)] for i, t in enumerate(objects)
    ])


def rows_to_csv(rows: List[List[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


# ------------------------------------------------------------
# Polynomials
# ------------------------------------------------------------

def polynomial_to_dict(p: Poly) -> Dict[str, Any]:
    return {"coefficients": poly_coefficients(p), "text": poly_text(p)}
