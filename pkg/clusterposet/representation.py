"""
Representation Module

Explicit quiver representations over the rationals, morphism spaces,
Ext^1, fac-membership through the trace, and the indecomposable
representation attached to a positive root.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

from clusterposet import exact_linalg as la
from clusterposet.errors import PreconditionError, QuiverError
from clusterposet.exact_linalg import Matrix
from clusterposet.quiver import (
    DimensionVector,
    Quiver,
    euler_form,
    is_simple_root,
    positive_roots,
    simple_reflection,
)

logger = logging.getLogger(__name__)

SIMPLE = "simple"
PROJECTIVE = "projective"


# ------------------------------------------------------------
# Data model
# ------------------------------------------------------------

@dataclass(frozen=True)
class Representation:
    """
    A representation of a quiver: a dimension per vertex and a matrix per
    arrow (rows = dimension at the target, cols = dimension at the source).
    """

    quiver: Quiver
    dims: Tuple[int, ...]
    maps: Tuple[Matrix, ...]

    def __post_init__(self) -> None:
        q = self.quiver
        dims = tuple(int(d) for d in self.dims)
        maps = tuple(Matrix(m) for m in self.maps)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "maps", maps)

        if len(dims) != q.n:
            raise ValueError(f"expected {q.n} dimensions, got {len(dims)}")
        if any(d < 0 for d in dims):
            raise ValueError("dimensions must be nonnegative")
        if len(maps) != len(q.arrows):
            raise ValueError(f"expected {len(q.arrows)} arrow maps, got {len(maps)}")

        for k, (src, tgt) in enumerate(q.arrows):
            expected = (dims[q.index(tgt)], dims[q.index(src)])
            if maps[k].shape != expected:
                raise ValueError(
                    f"map on arrow {src}->{tgt} has shape {maps[k].shape}, expected {expected}"
                )

    # --------------------------------------------------------

    @classmethod
    def zero(cls, q: Quiver) -> "Representation":
        return cls(q, q.zero_vector(), tuple(la.zeros(0, 0) for _ in q.arrows))

    def dim_at(self, x: str) -> int:
        return self.dims[self.quiver.index(x)]

    def map_of(self, k: int) -> Matrix:
        return self.maps[k]

    def is_zero(self) -> bool:
        return not any(self.dims)

    def direct_sum(self, other: "Representation") -> "Representation":
        """
        Block-diagonal direct sum, this representation's basis first.
        """
        if other.quiver != self.quiver:
            raise QuiverError("direct sum of representations of different quivers")

        maps = []
        for A, B in zip(self.maps, other.maps):
            top = la.hstack([A, la.zeros(A.rows, B.cols)], A.rows)
            bottom = la.hstack([la.zeros(B.rows, A.cols), B], B.rows)
            maps.append(la.vstack([top, bottom], A.cols + B.cols))

        dims = tuple(a + b for a, b in zip(self.dims, other.dims))
        return Representation(self.quiver, dims, tuple(maps))

    def __repr__(self) -> str:
        return f"Representation(dims={self.dims}, quiver={self.quiver})"


def direct_sum(reps: Sequence[Representation], q: Quiver) -> Representation:
    total = Representation.zero(q)
    for rep in reps:
        total = total.direct_sum(rep)
    return total


@dataclass(frozen=True)
class Morphism:
    """
    A morphism of representations: one matrix per vertex satisfying the
    intertwining equations N(a) phi_i = phi_j M(a) for every arrow a: i -> j.
    """

    source: Representation
    target: Representation
    components: Tuple[Matrix, ...]

    def __post_init__(self) -> None:
        M, N = self.source, self.target
        q = M.quiver
        if N.quiver != q:
            raise QuiverError("morphism between representations of different quivers")
        if len(self.components) != q.n:
            raise ValueError("a morphism needs one component per vertex")

        for i, phi in enumerate(self.components):
            if phi.shape != (N.dims[i], M.dims[i]):
                raise ValueError(f"component at {q.vertices[i]} has shape {phi.shape}")

        for k, (src, tgt) in enumerate(q.arrows):
            i, j = q.index(src), q.index(tgt)
            lhs = N.maps[k] * self.components[i]
            rhs = self.components[j] * M.maps[k]
            if lhs != rhs:
                raise ValueError(f"components do not intertwine along arrow {src}->{tgt}")

    def is_surjective(self) -> bool:
        return all(la.rank(phi) == d for phi, d in zip(self.components, self.target.dims))


# ------------------------------------------------------------
# Standard representations
# ------------------------------------------------------------

def simple_rep(q: Quiver, x: str) -> Representation:
    dims = q.unit_vector(x)
    maps = tuple(
        la.zeros(dims[q.index(tgt)], dims[q.index(src)]) for src, tgt in q.arrows
    )
    return Representation(q, dims, maps)


def projective_rep(q: Quiver, x: str) -> Representation:
    """
    P_x: basis of P_x(y) is the set of paths from x to y; arrows act by
    extending paths.
    """
    paths_to: Dict[str, List[Tuple[int, ...]]] = {v: [] for v in q.vertices}
    for end, path in q.paths_from(x):
        paths_to[end].append(path)

    dims = tuple(len(paths_to[v]) for v in q.vertices)
    maps = []
    for k, (src, tgt) in enumerate(q.arrows):
        rows = [[0] * len(paths_to[src]) for _ in paths_to[tgt]]
        for col, path in enumerate(paths_to[src]):
            rows[paths_to[tgt].index(path + (k,))][col] = 1
        maps.append(la.matrix(len(paths_to[tgt]), len(paths_to[src]), rows))

    return Representation(q, dims, tuple(maps))


def standard_rep(q: Quiver, kind: str, x: str) -> Representation:
    q.index(x)
    if kind == SIMPLE:
        return simple_rep(q, x)
    if kind == PROJECTIVE:
        return projective_rep(q, x)
    raise ValueError(f"kind must be {SIMPLE!r} or {PROJECTIVE!r}, got {kind!r}")


@lru_cache(maxsize=None)
def projective_root(q: Quiver, x: str) -> DimensionVector:
    return projective_rep(q, x).dims


# ------------------------------------------------------------
# Indecomposables
# ------------------------------------------------------------

@lru_cache(maxsize=None)
def indecomposable_of_root(q: Quiver, d: DimensionVector) -> Representation:
    """
    The indecomposable representation with dimension vector d.

    Reflect at the first sink (in vertex order) until d becomes a simple
    root, then pull the simple back with F^- along the same sinks.

    Raises:
        PreconditionError: d is not a positive root of q.
    """
    d = q.check_vector(d)
    if d not in positive_roots(q):
        raise PreconditionError(f"{d} is not a positive root of {q}")

    if is_simple_root(d):
        return simple_rep(q, q.vertices[d.index(1)])

    # Imported here: functors builds on this module.
    from clusterposet.functors import reflect_minus

    x = q.sinks()[0]
    reflected = indecomposable_of_root(q.reflect(x), simple_reflection(q, x, d))
    rep = reflect_minus(reflected, x)

    if rep.dims != d or rep.quiver != q:
        raise PreconditionError(f"reflection construction of {d} produced {rep.dims}")

    logger.debug("Built indecomposable %s over %s", d, q)
    return rep


# ------------------------------------------------------------
# Hom and Ext
# ------------------------------------------------------------

def _offsets(M: Representation, N: Representation) -> List[int]:
    offsets, total = [], 0
    for m, n in zip(M.dims, N.dims):
        offsets.append(total)
        total += m * n
    offsets.append(total)
    return offsets


def intertwiner_matrix(M: Representation, N: Representation) -> Matrix:
    """
    Matrix of phi -> (N(a) phi_i - phi_j M(a)) over all arrows a: i -> j.

    Its kernel is Hom(M, N); its cokernel is Ext^1(M, N) (the standard
    two-term projective resolution of a hereditary path algebra).
    """
    q = M.quiver
    if N.quiver != q:
        raise QuiverError("Hom between representations of different quivers")

    offsets = _offsets(M, N)
    unknowns = offsets[-1]
    rows: List[List[int]] = []

    for k, (src, tgt) in enumerate(q.arrows):
        i, j = q.index(src), q.index(tgt)
        Ma, Na = M.maps[k], N.maps[k]
        mi, mj = M.dims[i], M.dims[j]
        nj, ni = N.dims[j], N.dims[i]

        for r in range(nj):
            for c in range(mi):
                row = [0] * unknowns
                for t in range(ni):
                    row[offsets[i] + t * mi + c] += Na[r, t]
                for t in range(mj):
                    row[offsets[j] + r * mj + t] -= Ma[t, c]
                rows.append(row)

    return la.matrix(len(rows), unknowns, rows)


@lru_cache(maxsize=None)
def hom_basis(M: Representation, N: Representation) -> Tuple[Morphism, ...]:
    """
    Basis of Hom(M, N), solved from the intertwining equations.
    """
    system = intertwiner_matrix(M, N)
    offsets = _offsets(M, N)
    q = M.quiver

    basis = []
    for vector in la.kernel_basis(system):
        components = []
        for i in range(q.n):
            m, n = M.dims[i], N.dims[i]
            block = [vector[offsets[i] + p * m + c] for p in range(n) for c in range(m)]
            components.append(Matrix(n, m, block))
        basis.append(Morphism(M, N, tuple(components)))
    return tuple(basis)


def hom_dim(M: Representation, N: Representation) -> int:
    system = intertwiner_matrix(M, N)
    return system.cols - la.rank(system)


def ext1_dim(M: Representation, N: Representation) -> int:
    """
    dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N>.
    """
    value = hom_dim(M, N) - euler_form(M.quiver, M.dims, N.dims)
    if value < 0:
        raise PreconditionError(f"negative Ext dimension between {M.dims} and {N.dims}")
    return value


def ext1_dim_from_resolution(M: Representation, N: Representation) -> int:
    """
    dim Ext^1(M, N) as the cokernel of the intertwiner map.
    """
    system = intertwiner_matrix(M, N)
    return system.rows - la.rank(system)


# ------------------------------------------------------------
# Trace and fac
# ------------------------------------------------------------

@lru_cache(maxsize=None)
def trace_spaces(X: Representation, N: Representation) -> Tuple[Matrix, ...]:
    """
    Per vertex, a column basis of the trace of X in N (the sum of the
    images of all morphisms X -> N).
    """
    basis = hom_basis(X, N)
    spaces = []
    for i, n in enumerate(N.dims):
        images = la.hstack([phi.components[i] for phi in basis], n)
        spaces.append(la.image_basis(images))
    return tuple(spaces)


def fac_witness(N: Representation, X: Representation) -> Morphism:
    """
    The evaluation map X^m -> N over a basis of Hom(X, N), m the size of
    that basis. N lies in fac X exactly when this map is surjective.
    """
    basis = hom_basis(X, N)
    source = direct_sum([X] * len(basis), X.quiver)
    components = tuple(
        la.hstack([phi.components[i] for phi in basis], n) for i, n in enumerate(N.dims)
    )
    return Morphism(source, N, components)


def in_fac_of_sum(N: Representation, summands: Sequence[Representation]) -> bool:
    """
    True iff N is a quotient of a finite sum of copies of the direct sum
    of the given representations.
    """
    if N.is_zero():
        return True
    traces = [trace_spaces(X, N) for X in summands]
    for i, n in enumerate(N.dims):
        if not n:
            continue
        span = la.hstack([t[i] for t in traces], n)
        if la.rank(span) != n:
            return False
    return True


def in_fac(N: Representation, X: Representation) -> bool:
    return fac_witness(N, X).is_surjective()


# ------------------------------------------------------------
# Support, restriction, extension by zero
# ------------------------------------------------------------

def support(M: Representation) -> FrozenSet[str]:
    return frozenset(v for v, d in zip(M.quiver.vertices, M.dims) if d)


def restrict(M: Representation, sub: Quiver) -> Representation:
    """
    Restriction of M to a full subquiver.
    """
    q = M.quiver
    if sub != q.full_subquiver(sub.vertices):
        raise QuiverError(f"{sub} is not a full subquiver of {q}")

    keep = set(sub.vertices)
    dims = tuple(M.dims[q.index(v)] for v in sub.vertices)
    # Parallel arrows keep their relative order in a full subquiver.
    maps = tuple(
        M.maps[k] for k, (src, tgt) in enumerate(q.arrows) if src in keep and tgt in keep
    )
    return Representation(sub, dims, maps)


def restrict_delete(M: Representation, x: str) -> Representation:
    """
    j^{-1}: drop vertex x and its arrows.
    """
    return restrict(M, M.quiver.delete_vertex(x))


def extend_by_zero(M: Representation, q: Quiver, x: str) -> Representation:
    """
    j_!: place the zero space at x.

    Raises:
        QuiverError: M is not a representation of q with x deleted.
    """
    if q.delete_vertex(x) != M.quiver:
        raise QuiverError(f"{M.quiver} is not {q} with vertex {x!r} deleted")

    small = M.quiver
    dims = tuple(0 if v == x else M.dims[small.index(v)] for v in q.vertices)

    maps = []
    position = 0
    for src, tgt in q.arrows:
        if x in (src, tgt):
            maps.append(la.zeros(dims[q.index(tgt)], dims[q.index(src)]))
        else:
            maps.append(M.maps[position])
            position += 1

    return Representation(q, dims, tuple(maps))
