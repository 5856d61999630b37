"""
Cluster Module

Indecomposables of the cluster category, cluster tilting objects, their
enumeration and mutation, the torsion-class order, the subsets of objects
containing P_x or P_x[1], and the maps f and g obtained by mutating there.

Indecomposables are encoded as almost positive roots: a positive root for
a module, the negative simple root -e_y for the shifted projective P_y[1].
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple

import networkx as nx

from clusterposet.checks import parallel_map
from clusterposet.config import get_int
from clusterposet.errors import (
    EnumerationTooLarge,
    InvariantViolation,
    PreconditionError,
    QuiverError,
)
from clusterposet.poset import FinitePoset
from clusterposet.quiver import (
    DimensionVector,
    Quiver,
    positive_roots,
    require_dynkin,
)
from clusterposet.representation import (
    ext1_dim,
    in_fac_of_sum,
    indecomposable_of_root,
    projective_root,
)

logger = logging.getLogger(__name__)

PX = "Px"
PX_SHIFT = "PxShift"


# ------------------------------------------------------------
# Data model
# ------------------------------------------------------------

@dataclass(frozen=True, order=True)
class ClusterIndec:
    """
    An indecomposable object of the cluster category, as an almost positive root.
    """

    root: DimensionVector

    def __post_init__(self) -> None:
        root = tuple(int(v) for v in self.root)
        object.__setattr__(self, "root", root)
        if not any(root):
            raise ValueError("the zero vector is not an almost positive root")
        if min(root) < 0 and (sorted(root)[0] != -1 or sum(map(abs, root)) != 1):
            raise ValueError(f"{root} is neither nonnegative nor a negative simple root")

    @classmethod
    def module(cls, d: Sequence[int]) -> "ClusterIndec":
        return cls(tuple(d))

    @classmethod
    def shifted(cls, q: Quiver, y: str) -> "ClusterIndec":
        return cls(q.unit_vector(y, -1))

    @property
    def is_shifted(self) -> bool:
        return min(self.root) < 0

    def vertex(self, q: Quiver) -> str:
        """
        The vertex y of a shifted projective P_y[1].
        """
        if not self.is_shifted:
            raise ValueError(f"{self.root} is a module, not a shifted projective")
        return q.vertices[self.root.index(-1)]

    def to_json(self) -> List[int]:
        return list(self.root)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.root) + ")"


@dataclass(frozen=True)
class ClusterTilting:
    """
    A basic cluster tilting object, as the set of its indecomposable summands.
    """

    summands: FrozenSet[ClusterIndec]

    def __post_init__(self) -> None:
        summands = frozenset(self.summands)
        for s in summands:
            if not isinstance(s, ClusterIndec):
                raise TypeError(f"summands must be ClusterIndec, got {type(s).__name__}")
        object.__setattr__(self, "summands", summands)

    @classmethod
    def of_roots(cls, roots: Iterable[Sequence[int]]) -> "ClusterTilting":
        return cls(frozenset(ClusterIndec(tuple(r)) for r in roots))

    def __contains__(self, item: object) -> bool:
        return item in self.summands

    def __iter__(self) -> Iterator[ClusterIndec]:
        return iter(sorted(self.summands))

    def __len__(self) -> int:
        return len(self.summands)

    def roots(self) -> List[DimensionVector]:
        return sorted(s.root for s in self.summands)

    def module_part(self) -> List[DimensionVector]:
        """
        Roots of the summands that are not shifted projectives.
        """
        return [r for r in self.roots() if min(r) >= 0]

    def sort_key(self) -> Tuple[DimensionVector, ...]:
        return tuple(self.roots())

    def replace(self, old: ClusterIndec, new: ClusterIndec) -> "ClusterTilting":
        return ClusterTilting((self.summands - {old}) | {new})

    def to_json(self) -> List[List[int]]:
        return [list(r) for r in self.roots()]

    def __str__(self) -> str:
        return "{" + ", ".join(str(s) for s in self) + "}"


@dataclass(frozen=True)
class TorsionFingerprint:
    """
    The indecomposables of fac T, as positive roots.
    """

    roots: FrozenSet[DimensionVector]

    def __contains__(self, d: object) -> bool:
        return d in self.roots

    def __len__(self) -> int:
        return len(self.roots)

    def __ge__(self, other: "TorsionFingerprint") -> bool:
        return self.roots >= other.roots

    def __le__(self, other: "TorsionFingerprint") -> bool:
        return self.roots <= other.roots


# ------------------------------------------------------------
# Almost positive roots and compatibility
# ------------------------------------------------------------

@lru_cache(maxsize=None)
def almost_positive_roots(q: Quiver) -> Tuple[ClusterIndec, ...]:
    """
    All indecomposables: positive roots in root order, then -e_y in vertex order.
    """
    modules = [ClusterIndec(d) for d in positive_roots(q)]
    shifted = [ClusterIndec.shifted(q, y) for y in q.vertices]
    return tuple(modules + shifted)


def check_indec(q: Quiver, c: ClusterIndec) -> ClusterIndec:
    if len(c.root) != q.n:
        raise QuiverError(f"{c.root} does not have {q.n} entries")
    if not c.is_shifted and c.root not in positive_roots(q):
        raise PreconditionError(f"{c.root} is not a positive root of {q}")
    return c


@lru_cache(maxsize=None)
def module_ext(q: Quiver, d: DimensionVector, e: DimensionVector) -> int:
    """
    dim Ext^1(M_d, M_e) for the indecomposables with roots d and e.
    """
    return ext1_dim(indecomposable_of_root(q, d), indecomposable_of_root(q, e))


def ext1_cluster(q: Quiver, a: ClusterIndec, b: ClusterIndec) -> int:
    """
    dim Ext^1 in the cluster category; symmetric in a and b.
    """
    if a.is_shifted and b.is_shifted:
        return 0
    if a.is_shifted:
        return b.root[q.index(a.vertex(q))]
    if b.is_shifted:
        return a.root[q.index(b.vertex(q))]
    return module_ext(q, a.root, b.root) + module_ext(q, b.root, a.root)


def compatible(q: Quiver, a: ClusterIndec, b: ClusterIndec) -> bool:
    return ext1_cluster(q, a, b) == 0


def is_cluster_tilting(q: Quiver, t: ClusterTilting) -> bool:
    if len(t) != q.n:
        return False
    for s in t.summands:
        check_indec(q, s)
    return all(compatible(q, a, b) for a, b in combinations(sorted(t.summands), 2))


@lru_cache(maxsize=None)
def compatibility_graph(q: Quiver) -> nx.Graph:
    """
    Graph on the almost positive roots, with an edge between every
    compatible pair.
    """
    nodes = almost_positive_roots(q)
    pairs = list(combinations(nodes, 2))
    flags = parallel_map(lambda pair: compatible(q, *pair), pairs)

    graph = nx.Graph()
    graph.add_nodes_from(nodes)
    graph.add_edges_from(pair for pair, ok in zip(pairs, flags) if ok)
    return graph


# ------------------------------------------------------------
# Enumeration and mutation
# ------------------------------------------------------------

@lru_cache(maxsize=None)
def _enumerate(q: Quiver) -> Tuple[ClusterTilting, ...]:
    kind = require_dynkin(q)

    objects = []
    for clique in nx.find_cliques(compatibility_graph(q)):
        if len(clique) != q.n:
            raise InvariantViolation(
                f"maximal compatible set of size {len(clique)} on {q}: "
                + ", ".join(str(c) for c in sorted(clique))
            )
        objects.append(ClusterTilting(frozenset(clique)))

    objects.sort(key=ClusterTilting.sort_key)
    logger.info("%s (%s): %d cluster tilting objects", q, kind, len(objects))
    return tuple(objects)


def enumerate_cluster_tilting(q: Quiver) -> List[ClusterTilting]:
    """
    All cluster tilting objects of a Dynkin quiver, sorted by their roots.

    Raises:
        NotRepresentationFinite: q is not Dynkin.
        EnumerationTooLarge: q's rank exceeds [enumeration] max_rank.
        InvariantViolation: A maximal compatible set is not of size n.
    """
    kind = require_dynkin(q)
    max_rank = get_int("enumeration", "max_rank", 8)
    if q.n > max_rank:
        raise EnumerationTooLarge(f"{kind} has rank {q.n}, above the limit of {max_rank}")
    return list(_enumerate(q))


def mutate(q: Quiver, t: ClusterTilting, m: ClusterIndec) -> ClusterTilting:
    """
    Exchange the summand m for the unique other completion of t without m.

    Raises:
        PreconditionError: m is not a summand of t.
        InvariantViolation: The completion is not unique.
    """
    if m not in t:
        raise PreconditionError(f"{m} is not a summand of {t}")

    rest = t.summands - {m}
    candidates = [
        c for c in almost_positive_roots(q)
        if c not in t.summands and all(compatible(q, c, u) for u in rest)
    ]
    if len(candidates) != 1:
        raise InvariantViolation(
            f"mutation of {t} at {m} has {len(candidates)} candidates"
        )
    return ClusterTilting(rest | {candidates[0]})


# ------------------------------------------------------------
# Torsion classes and the order
# ------------------------------------------------------------

@lru_cache(maxsize=None)
def fac_fingerprint(q: Quiver, t: ClusterTilting) -> TorsionFingerprint:
    """
    ind fac T: the positive roots whose indecomposable is a quotient of a
    sum of copies of the module part of T.
    """
    return module_fingerprint(q, tuple(t.module_part()))


@lru_cache(maxsize=None)
def module_fingerprint(q: Quiver, roots: Tuple[DimensionVector, ...]) -> TorsionFingerprint:
    """
    ind fac of the direct sum of the indecomposables with the given roots.
    """
    if not roots:
        return TorsionFingerprint(frozenset())

    summands = [indecomposable_of_root(q, d) for d in roots]
    found = frozenset(
        d for d in positive_roots(q)
        if in_fac_of_sum(indecomposable_of_root(q, d), summands)
    )
    return TorsionFingerprint(found)


def leq(q: Quiver, t: ClusterTilting, u: ClusterTilting) -> bool:
    """
    T <= T' iff fac T contains fac T'.
    """
    return fac_fingerprint(q, t) >= fac_fingerprint(q, u)


@lru_cache(maxsize=None)
def tilting_poset(q: Quiver) -> FinitePoset:
    """
    The poset of cluster tilting objects of a Dynkin quiver.

    Raises:
        InvariantViolation: Two objects share a fingerprint.
    """
    objects = enumerate_cluster_tilting(q)
    fingerprints = {fac_fingerprint(q, t): t for t in objects}
    if len(fingerprints) != len(objects):
        raise InvariantViolation(f"torsion fingerprints on {q} are not injective")

    return FinitePoset.from_relation(objects, lambda a, b: leq(q, a, b))


# ------------------------------------------------------------
# Subsets and the maps f, g
# ------------------------------------------------------------

def projective_indec(q: Quiver, x: str) -> ClusterIndec:
    return ClusterIndec(projective_root(q, x))


def subset_containing(q: Quiver, which: str, x: str) -> List[ClusterTilting]:
    """
    Objects containing P_x (which="Px") or P_x[1] (which="PxShift"), in
    enumeration order.
    """
    if which == PX:
        target = projective_indec(q, x)
    elif which == PX_SHIFT:
        target = ClusterIndec.shifted(q, x)
    else:
        raise ValueError(f"which must be {PX!r} or {PX_SHIFT!r}, got {which!r}")
    return [t for t in enumerate_cluster_tilting(q) if target in t]


def mutate_at_projective(q: Quiver, x: str, t: ClusterTilting) -> ClusterTilting:
    m = projective_indec(q, x)
    if m not in t:
        raise PreconditionError(f"{t} does not contain P_{x} = {m}")
    return mutate(q, t, m)


def mutate_at_shifted(q: Quiver, x: str, t: ClusterTilting) -> ClusterTilting:
    m = ClusterIndec.shifted(q, x)
    if m not in t:
        raise PreconditionError(f"{t} does not contain P_{x}[1]")
    return mutate(q, t, m)


def f_map(q: Quiver, x: str, t: ClusterTilting) -> ClusterTilting:
    """
    f(T): mutate T at the simple projective S_x = P_x of the sink x.
    """
    if not q.is_sink(x):
        raise PreconditionError(f"vertex {x!r} is not a sink of {q}")
    return mutate_at_projective(q, x, t)


def g_map(q: Quiver, x: str, t: ClusterTilting) -> ClusterTilting:
    """
    g(T): mutate T at P_x[1] for the source x.
    """
    if not q.is_source(x):
        raise PreconditionError(f"vertex {x!r} is not a source of {q}")
    return mutate_at_shifted(q, x, t)


# ------------------------------------------------------------
# Almost complete tilting modules
# ------------------------------------------------------------

def is_sincere(q: Quiver, roots: Iterable[DimensionVector]) -> bool:
    total = [0] * q.n
    for d in roots:
        for i, v in enumerate(d):
            total[i] += v
    return all(total)


def module_complements(q: Quiver, roots: Sequence[DimensionVector]) -> List[DimensionVector]:
    """
    Positive roots completing the rigid module with the given summands to a
    cluster tilting object of modules.
    """
    present = [ClusterIndec(d) for d in roots]
    return [
        d for d in positive_roots(q)
        if d not in roots and all(compatible(q, ClusterIndec(d), u) for u in present)
    ]


def almost_complete_modules(q: Quiver) -> List[Tuple[DimensionVector, ...]]:
    """
    Every (n-1)-summand subset of a cluster tilting object made of modules only.
    """
    found = set()
    for t in enumerate_cluster_tilting(q):
        modules = t.module_part()
        if len(modules) != q.n:
            continue
        for subset in combinations(modules, q.n - 1):
            found.add(tuple(subset))
    return sorted(found)
