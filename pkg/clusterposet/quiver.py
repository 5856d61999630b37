"""
Quiver Module

Quivers without oriented cycles, their Dynkin classification, the Euler
form, simple reflections and positive roots.

Dimension vectors are tuples of integers in the quiver's vertex order;
the vertex order of the input file is the canonical order everywhere.
"""

from __future__ import annotations

import json
import logging
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from clusterposet.errors import NotRepresentationFinite, QuiverError

logger = logging.getLogger(__name__)

DimensionVector = Tuple[int, ...]

SINK = "sink"
SOURCE = "source"

_EXCEPTIONAL = {
    (1, 2, 2): 6,
    (1, 2, 3): 7,
    (1, 2, 4): 8,
}

_EXPONENTS_E = {
    6: (1, 4, 5, 7, 8, 11),
    7: (1, 5, 7, 9, 11, 13, 17),
    8: (1, 7, 11, 13, 17, 19, 23, 29),
}


# ------------------------------------------------------------
# Dynkin types
# ------------------------------------------------------------

@dataclass(frozen=True)
class DynkinType:
    """
    A simply-laced Dynkin diagram: family A, D or E and a rank.
    """

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in ("A", "D", "E"):
            raise ValueError(f"unknown Dynkin family: {self.family!r}")
        if not isinstance(self.rank, int) or self.rank <= 0:
            raise ValueError("rank must be a positive integer")
        if self.family == "D" and self.rank < 4:
            raise ValueError("D-family rank must be at least 4")
        if self.family == "E" and self.rank not in (6, 7, 8):
            raise ValueError("E-family rank must be 6, 7 or 8")

    @property
    def coxeter_number(self) -> int:
        if self.family == "A":
            return self.rank + 1
        if self.family == "D":
            return 2 * self.rank - 2
        return {6: 12, 7: 18, 8: 30}[self.rank]

    @property
    def exponents(self) -> Tuple[int, ...]:
        if self.family == "A":
            return tuple(range(1, self.rank + 1))
        if self.family == "D":
            return tuple(range(1, 2 * self.rank - 2, 2)) + (self.rank - 1,)
        return _EXPONENTS_E[self.rank]

    def positive_root_count(self) -> int:
        return self.rank * self.coxeter_number // 2

    def cluster_number(self) -> int:
        """
        Number of clusters: the product of (e + h + 1) / (e + 1) over exponents e.
        """
        h = self.coxeter_number
        total = Fraction(1)
        for e in self.exponents:
            total *= Fraction(e + h + 1, e + 1)
        return int(total)

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


# ------------------------------------------------------------
# Quiver
# ------------------------------------------------------------

@dataclass(frozen=True)
class Quiver:
    """
    A finite quiver without oriented cycles.

    Arrows are (source, target) label pairs; parallel arrows are allowed.
    """

    vertices: Tuple[str, ...]
    arrows: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        vertices = tuple(self.vertices)
        arrows = tuple((a[0], a[1]) for a in self.arrows)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "arrows", arrows)

        for label in vertices:
            if not isinstance(label, str) or not label:
                raise QuiverError(f"vertex labels must be non-empty strings, got {label!r}")

        if len(set(vertices)) != len(vertices):
            dupes = sorted(v for v, count in Counter(vertices).items() if count > 1)
            raise QuiverError(f"duplicate vertex label(s): {', '.join(dupes)}")

        known = set(vertices)
        for src, tgt in arrows:
            for end in (src, tgt):
                if not isinstance(end, str) or end not in known:
                    raise QuiverError(f"arrow {src!r}->{tgt!r} references unknown vertex {end!r}")

        graph = nx.MultiDiGraph()
        graph.add_nodes_from(vertices)
        graph.add_edges_from(arrows)
        if not nx.is_directed_acyclic_graph(graph):
            cycle = nx.find_cycle(graph)
            path = " -> ".join(str(edge[0]) for edge in cycle)
            raise QuiverError(f"quiver has an oriented cycle: {path} -> {cycle[0][0]}")

    # --------------------------------------------------------
    # Indexing
    # --------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, x: str) -> int:
        try:
            return self.vertices.index(x)
        except ValueError:
            raise QuiverError(f"unknown vertex {x!r}") from None

    def arrows_into(self, x: str) -> List[int]:
        return [k for k, (_, tgt) in enumerate(self.arrows) if tgt == x]

    def arrows_out_of(self, x: str) -> List[int]:
        return [k for k, (src, _) in enumerate(self.arrows) if src == x]

    def neighbours(self, x: str) -> List[str]:
        """
        Vertices joined to x by an arrow, one entry per arrow.
        """
        result = []
        for src, tgt in self.arrows:
            if src == x:
                result.append(tgt)
            elif tgt == x:
                result.append(src)
        return result

    # --------------------------------------------------------
    # Sinks and sources
    # --------------------------------------------------------

    def is_sink(self, x: str) -> bool:
        self.index(x)
        return not self.arrows_out_of(x)

    def is_source(self, x: str) -> bool:
        self.index(x)
        return not self.arrows_into(x)

    def sinks(self) -> List[str]:
        return [v for v in self.vertices if self.is_sink(v)]

    def sources(self) -> List[str]:
        return [v for v in self.vertices if self.is_source(v)]

    # --------------------------------------------------------
    # Derived quivers
    # --------------------------------------------------------

    def reflect(self, x: str) -> "Quiver":
        """
        BGP reflection: reverse every arrow incident to the sink or source x.

        Arrow positions are kept, so arrow k of the result is arrow k of
        this quiver (possibly reversed).
        """
        if not (self.is_sink(x) or self.is_source(x)):
            raise QuiverError(f"vertex {x!r} is neither a sink nor a source")

        arrows = tuple(
            (tgt, src) if x in (src, tgt) else (src, tgt)
            for src, tgt in self.arrows
        )
        return Quiver(self.vertices, arrows)

    def full_subquiver(self, keep: Sequence[str]) -> "Quiver":
        """
        Full subquiver on the given vertices, in this quiver's vertex order.
        """
        wanted = set(keep)
        for v in wanted:
            self.index(v)
        vertices = tuple(v for v in self.vertices if v in wanted)
        arrows = tuple(a for a in self.arrows if a[0] in wanted and a[1] in wanted)
        return Quiver(vertices, arrows)

    def delete_vertex(self, x: str) -> "Quiver":
        self.index(x)
        return self.full_subquiver([v for v in self.vertices if v != x])

    def underlying_graph(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.arrows)
        return graph

    # --------------------------------------------------------
    # Paths
    # --------------------------------------------------------

    def paths_from(self, x: str) -> List[Tuple[str, Tuple[int, ...]]]:
        """
        All paths starting at x as (end vertex, arrow indices), the
        trivial path first, then depth-first in arrow order.
        """
        self.index(x)
        found: List[Tuple[str, Tuple[int, ...]]] = []

        def walk(vertex: str, path: Tuple[int, ...]) -> None:
            found.append((vertex, path))
            for k in self.arrows_out_of(vertex):
                walk(self.arrows[k][1], path + (k,))

        walk(x, ())
        return found

    # --------------------------------------------------------
    # Vectors
    # --------------------------------------------------------

    def zero_vector(self) -> DimensionVector:
        return (0,) * self.n

    def unit_vector(self, x: str, sign: int = 1) -> DimensionVector:
        i = self.index(x)
        return tuple(sign if j == i else 0 for j in range(self.n))

    def check_vector(self, d: Sequence[int]) -> DimensionVector:
        if len(d) != self.n:
            raise QuiverError(f"dimension vector {tuple(d)} does not have {self.n} entries")
        return tuple(int(value) for value in d)

    # --------------------------------------------------------
    # Serialisation
    # --------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [[src, tgt] for src, tgt in self.arrows],
        }

    def __str__(self) -> str:
        arrows = ", ".join(f"{s}->{t}" for s, t in self.arrows) or "no arrows"
        return f"Quiver({', '.join(self.vertices)}; {arrows})"


# ------------------------------------------------------------
# Parsing
# ------------------------------------------------------------

def quiver_from_dict(data: object) -> Quiver:
    """
    Validate the decoded JSON quiver format and build a Quiver.
    """
    if not isinstance(data, dict):
        raise QuiverError("quiver JSON must be an object")

    vertices = data.get("vertices")
    arrows = data.get("arrows", [])

    if not isinstance(vertices, list) or not vertices:
        raise QuiverError("'vertices' must be a non-empty list of strings")
    if not isinstance(arrows, list):
        raise QuiverError("'arrows' must be a list of [source, target] pairs")

    pairs = []
    for item in arrows:
        if not isinstance(item, list) or len(item) != 2:
            raise QuiverError(f"invalid arrow entry: {item!r}")
        pairs.append((item[0], item[1]))

    return Quiver(tuple(vertices), tuple(pairs))


def parse_quiver(text: str) -> Quiver:
    """
    Parse the JSON quiver format {"vertices": [...], "arrows": [[s, t], ...]}.

    Raises:
        QuiverError: Malformed JSON, cycle, dangling endpoint or duplicate label.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise QuiverError(f"invalid quiver JSON: {exc}") from exc
    return quiver_from_dict(data)


# ------------------------------------------------------------
# Operations
# ------------------------------------------------------------

def terminal_vertices(q: Quiver, kind: str) -> frozenset:
    if kind == SINK:
        return frozenset(q.sinks())
    if kind == SOURCE:
        return frozenset(q.sources())
    raise ValueError(f"kind must be {SINK!r} or {SOURCE!r}, got {kind!r}")


def reflect(q: Quiver, x: str) -> Quiver:
    return q.reflect(x)


def classify_dynkin(q: Quiver) -> Optional[DynkinType]:
    """
    Classify the underlying graph of q.

    Returns:
        DynkinType, or None when the underlying graph is not a connected
        simply-laced Dynkin diagram (the quiver is then not enumerable).
    """
    if q.n == 0:
        return None

    # Parallel or antiparallel arrows collapse in a simple graph.
    graph = nx.Graph(q.underlying_graph())
    if graph.number_of_edges() != len(q.arrows):
        return None
    if not nx.is_connected(graph) or graph.number_of_edges() != q.n - 1:
        return None

    degrees = dict(graph.degree())
    branch = [v for v, deg in degrees.items() if deg >= 3]

    if not branch:
        return DynkinType("A", q.n)
    if len(branch) > 1 or degrees[branch[0]] > 3:
        return None

    centre = branch[0]
    rest = graph.copy()
    rest.remove_node(centre)
    arms = tuple(sorted(len(c) for c in nx.connected_components(rest)))

    if arms[0] != 1:
        return None
    if arms[1] == 1:
        return DynkinType("D", q.n)
    if arms in _EXCEPTIONAL:
        return DynkinType("E", _EXCEPTIONAL[arms])
    return None


def require_dynkin(q: Quiver) -> DynkinType:
    kind = classify_dynkin(q)
    if kind is None:
        raise NotRepresentationFinite(f"{q} is not a connected Dynkin quiver")
    return kind


def euler_form(q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """
    <d, e> = sum_i d_i e_i - sum over arrows i->j of d_i e_j.
    """
    d = q.check_vector(d)
    e = q.check_vector(e)
    value = sum(a * b for a, b in zip(d, e))
    for src, tgt in q.arrows:
        value -= d[q.index(src)] * e[q.index(tgt)]
    return value


def simple_reflection(q: Quiver, x: str, d: Sequence[int]) -> DimensionVector:
    """
    s_x(d): the entry at x becomes (sum of d over the neighbours of x) - d_x.
    """
    d = q.check_vector(d)
    i = q.index(x)
    new_entry = sum(d[q.index(y)] for y in q.neighbours(x)) - d[i]
    return d[:i] + (new_entry,) + d[i + 1:]


def root_sort_key(d: Sequence[int]) -> tuple:
    """
    Total degree first, then e_1 before e_2 before ... within a degree.
    """
    return (sum(d), tuple(-value for value in d))


@lru_cache(maxsize=None)
def positive_roots(q: Quiver) -> Tuple[DimensionVector, ...]:
    """
    Positive roots of the root system of q's Dynkin diagram.

    Closure of the simple roots under all simple reflections, keeping
    only nonnegative vectors.

    Raises:
        NotRepresentationFinite: q is not Dynkin.
    """
    require_dynkin(q)

    roots = {q.unit_vector(x) for x in q.vertices}
    queue = deque(sorted(roots, key=root_sort_key))
    while queue:
        root = queue.popleft()
        for x in q.vertices:
            image = simple_reflection(q, x, root)
            if min(image) >= 0 and any(image) and image not in roots:
                roots.add(image)
                queue.append(image)

    result = tuple(sorted(roots, key=root_sort_key))
    logger.debug("%s has %d positive roots", q, len(result))
    return result


def is_simple_root(d: Sequence[int]) -> bool:
    return min(d) >= 0 and sum(d) == 1


# ------------------------------------------------------------
# Orientations and reflection sequences
# ------------------------------------------------------------

def orientations(q: Quiver) -> Iterator[Quiver]:
    """
    Every acyclic orientation of q's underlying graph, q itself first.
    """
    for flips in product((False, True), repeat=len(q.arrows)):
        arrows = tuple(
            (tgt, src) if flip else (src, tgt)
            for (src, tgt), flip in zip(q.arrows, flips)
        )
        try:
            yield Quiver(q.vertices, arrows)
        except QuiverError:
            continue


def is_linear_orientation(q: Quiver) -> bool:
    """
    True for an A_n quiver whose arrows all run the same way along the path.
    """
    kind = classify_dynkin(q)
    if kind is None or kind.family != "A":
        return False
    return all(
        len(q.arrows_into(v)) <= 1 and len(q.arrows_out_of(v)) <= 1
        for v in q.vertices
    )


def _orientation_key(q: Quiver) -> frozenset:
    return frozenset(q.arrows)


def reflection_path(q: Quiver, target: Quiver) -> List[str]:
    """
    Shortest sequence of sink reflections turning q into target.

    Raises:
        QuiverError: The quivers do not orient the same graph, or target
            cannot be reached by reflections at sinks.
    """
    if q.vertices != target.vertices:
        raise QuiverError("quivers have different vertex lists")

    unordered = lambda quiver: sorted(tuple(sorted(a)) for a in quiver.arrows)
    if unordered(q) != unordered(target):
        raise QuiverError("quivers do not orient the same underlying graph")

    goal = _orientation_key(target)
    start = _orientation_key(q)
    previous: Dict[frozenset, Tuple[frozenset, str]] = {}
    seen = {start}
    queue = deque([q])

    while queue:
        current = queue.popleft()
        key = _orientation_key(current)
        if key == goal:
            path = []
            while key != start:
                key, vertex = previous[key]
                path.append(vertex)
            return list(reversed(path))
        for x in current.sinks():
            nxt = current.reflect(x)
            nkey = _orientation_key(nxt)
            if nkey not in seen:
                seen.add(nkey)
                previous[nkey] = (key, x)
                queue.append(nxt)

    raise QuiverError(f"{target} is not reachable from {q} by sink reflections")
