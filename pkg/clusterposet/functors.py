"""
Functors Module

BGP reflection functors F+ (at a sink) and F- (at a source) on explicit
representations, the bijection rho they induce on cluster tilting objects,
and the check that rho intertwines the maps f and g.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List

from clusterposet import exact_linalg as la
from clusterposet.checks import CheckResult, Report, parallel_map
from clusterposet.cluster import (
    PX,
    PX_SHIFT,
    ClusterIndec,
    ClusterTilting,
    enumerate_cluster_tilting,
    f_map,
    g_map,
    is_cluster_tilting,
    leq,
    subset_containing,
)
from clusterposet.errors import InvariantViolation, PreconditionError
from clusterposet.exact_linalg import Matrix
from clusterposet.quiver import Quiver, require_dynkin, simple_reflection
from clusterposet.representation import Morphism, Representation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReflectionResult:
    """
    F+ M over the reflected quiver, and the multiplicity of the simple S'_x
    in R^1 F+ M.
    """

    image: Representation
    r1_part: int = 0


def _row_block(A: Matrix, start: int, height: int) -> Matrix:
    if height == 0 or A.cols == 0:
        return la.zeros(height, A.cols)
    return Matrix(A[start:start + height, :])


def _column_block(A: Matrix, start: int, width: int) -> Matrix:
    if width == 0 or A.rows == 0:
        return la.zeros(A.rows, width)
    return Matrix(A[:, start:start + width])


# ------------------------------------------------------------
# Reflection functors
# ------------------------------------------------------------

def reflect_plus(M: Representation, x: str) -> ReflectionResult:
    """
    F+ at the sink x.

    The space at x becomes the kernel of the map from the sum of the
    neighbouring spaces into M(x); each reversed arrow carries the kernel
    inclusion followed by the projection onto its summand. The cokernel
    of the same map is R^1 F+ M, a multiple of S'_x.

    Raises:
        PreconditionError: x is not a sink.
    """
    q = M.quiver
    if not q.is_sink(x):
        raise PreconditionError(f"vertex {x!r} is not a sink of {q}")

    incoming = q.arrows_into(x)
    sizes = [M.dims[q.index(q.arrows[k][0])] for k in incoming]
    dim_x = M.dim_at(x)

    combined = la.hstack([M.maps[k] for k in incoming], dim_x)
    kernel = la.hstack(la.kernel_basis(combined), sum(sizes))
    r1_part = dim_x - la.rank(combined)

    maps = list(M.maps)
    offset = 0
    for k, size in zip(incoming, sizes):
        maps[k] = _row_block(kernel, offset, size)
        offset += size

    dims = list(M.dims)
    dims[q.index(x)] = kernel.cols

    image = Representation(q.reflect(x), tuple(dims), tuple(maps))
    logger.debug("F+ at %s: %s -> %s (R1 part %d)", x, M.dims, image.dims, r1_part)
    return ReflectionResult(image, r1_part)


def reflect_minus(M: Representation, x: str) -> Representation:
    """
    F- at the source x: the space at x becomes the cokernel of M(x) into
    the sum of the neighbouring spaces.

    Raises:
        PreconditionError: x is not a source.
    """
    q = M.quiver
    if not q.is_source(x):
        raise PreconditionError(f"vertex {x!r} is not a source of {q}")

    outgoing = q.arrows_out_of(x)
    sizes = [M.dims[q.index(q.arrows[k][1])] for k in outgoing]

    projection = _source_projection(M, x)
    new_dim = projection.rows

    maps = list(M.maps)
    offset = 0
    for k, size in zip(outgoing, sizes):
        maps[k] = _column_block(projection, offset, size)
        offset += size

    dims = list(M.dims)
    dims[q.index(x)] = new_dim

    image = Representation(q.reflect(x), tuple(dims), tuple(maps))
    logger.debug("F- at %s: %s -> %s", x, M.dims, image.dims)
    return image


def _source_projection(M: Representation, x: str) -> Matrix:
    q = M.quiver
    combined = la.vstack([M.maps[k] for k in q.arrows_out_of(x)], M.dim_at(x))
    return la.cokernel_projection(combined)


def reflect_minus_morphism(phi: Morphism, x: str) -> Morphism:
    """
    F- on a morphism phi: M -> N at the source x.

    Away from x the components are unchanged. At x the block-diagonal map
    on the neighbouring spaces descends to the cokernels; it is read off
    through a right inverse of M's cokernel projection.

    Raises:
        PreconditionError: x is not a source.
    """
    M, N = phi.source, phi.target
    q = M.quiver
    image_m, image_n = reflect_minus(M, x), reflect_minus(N, x)

    neighbours = [q.index(q.arrows[k][1]) for k in q.arrows_out_of(x)]
    on_neighbours = la.block_diagonal([phi.components[i] for i in neighbours])
    at_x = (
        _source_projection(N, x)
        * on_neighbours
        * la.right_inverse(_source_projection(M, x))
    )

    components = list(phi.components)
    components[q.index(x)] = at_x
    return Morphism(image_m, image_n, tuple(components))


# ------------------------------------------------------------
# The bijection rho
# ------------------------------------------------------------

def rho_indec(q: Quiver, x: str, c: ClusterIndec) -> ClusterIndec:
    """
    rho on one indecomposable, for x a sink of q.

    S_x -> P'_x[1], P_x[1] -> S'_x, P_y[1] -> P'_y[1], other M -> F+ M.
    """
    simple = q.unit_vector(x)
    if c.is_shifted:
        if c.vertex(q) == x:
            return ClusterIndec(simple)
        return c
    if c.root == simple:
        return ClusterIndec.shifted(q, x)
    return ClusterIndec(simple_reflection(q, x, c.root))


def rho_inv_indec(q2: Quiver, x: str, c: ClusterIndec) -> ClusterIndec:
    """
    Inverse of rho_indec, for x a source of q2.
    """
    simple = q2.unit_vector(x)
    if c.is_shifted:
        if c.vertex(q2) == x:
            return ClusterIndec(simple)
        return c
    if c.root == simple:
        return ClusterIndec.shifted(q2, x)
    return ClusterIndec(simple_reflection(q2, x, c.root))


def rho(q: Quiver, x: str, t: ClusterTilting) -> ClusterTilting:
    """
    The cluster tilting object of the reflected quiver corresponding to t.

    Raises:
        PreconditionError: x is not a sink.
        InvariantViolation: The image is not cluster tilting.
    """
    if not q.is_sink(x):
        raise PreconditionError(f"vertex {x!r} is not a sink of {q}")

    image = ClusterTilting(frozenset(rho_indec(q, x, c) for c in t.summands))
    q2 = q.reflect(x)
    if not is_cluster_tilting(q2, image):
        raise InvariantViolation(f"rho({t}) = {image} is not cluster tilting over {q2}")
    return image


def rho_inv(q2: Quiver, x: str, t: ClusterTilting) -> ClusterTilting:
    if not q2.is_source(x):
        raise PreconditionError(f"vertex {x!r} is not a source of {q2}")

    image = ClusterTilting(frozenset(rho_inv_indec(q2, x, c) for c in t.summands))
    q = q2.reflect(x)
    if not is_cluster_tilting(q, image):
        raise InvariantViolation(f"rho^-1({t}) = {image} is not cluster tilting over {q}")
    return image


# ------------------------------------------------------------
# Commutative square
# ------------------------------------------------------------

def _pair(a: ClusterTilting, b: ClusterTilting) -> Dict[str, Any]:
    return {"T": a.to_json(), "T_prime": b.to_json()}


def reflection_covers(image: ClusterTilting, other: ClusterTilting, shift: ClusterIndec) -> bool:
    """
    Whether rho(T) <= rho(T') is known to give T <= T' for the images
    rho(T) = image and rho(T') = other: false exactly when P'_x[1] (shift)
    is a summand of other but not of image.
    """
    return shift in image or shift not in other


def _check_order_iso(
    name: str,
    q: Quiver,
    q2: Quiver,
    x: str,
    objects: List[ClusterTilting],
) -> CheckResult:
    result = CheckResult(name)
    images = {t: rho(q, x, t) for t in objects}
    for a in objects:
        for b in objects:
            if leq(q, a, b) != leq(q2, images[a], images[b]):
                return result.fail(_pair(a, b), "rho does not preserve and reflect the order")
    return result


def verify_square(q: Quiver, x: str) -> Report:
    """
    Check that rho restricts to order isomorphisms between the objects
    containing P_x and those containing P'_x[1] (and between their
    complements), that rho f = g rho, and that rho(T) <= rho(T') implies
    T <= T' whenever P'_x[1] lies in rho(T) or not in rho(T'). Pairs with
    P'_x[1] in rho(T') only are left out: there rho(T) may lie below
    rho(T') while T does not lie below T' (the maximum and any object
    containing S_x, say).

    Raises:
        PreconditionError: x is not a sink.
        NotRepresentationFinite: q is not Dynkin.
    """
    kind = require_dynkin(q)
    if not q.is_sink(x):
        raise PreconditionError(f"vertex {x!r} is not a sink of {q}")

    q2 = q.reflect(x)
    objects = enumerate_cluster_tilting(q)
    objects2 = enumerate_cluster_tilting(q2)

    with_px = subset_containing(q, PX, x)
    px_set = set(with_px)
    without_px = [t for t in objects if t not in px_set]
    with_shift = set(subset_containing(q2, PX_SHIFT, x))
    without_shift = set(objects2) - with_shift

    report = Report(subject={
        "quiver": q.to_dict(),
        "dynkin_type": str(kind),
        "vertex": x,
        "objects": len(objects),
        "objects_with_px": len(with_px),
    })

    images = dict(zip(objects, parallel_map(lambda t: rho(q, x, t), objects)))

    bijection = CheckResult("rho_restricts_to_bijections")
    if {images[t] for t in with_px} != with_shift:
        bijection.fail({"part": "with P_x"}, "rho does not map onto the objects containing P'_x[1]")
    elif {images[t] for t in without_px} != without_shift:
        bijection.fail({"part": "without P_x"}, "rho does not map the complements onto each other")
    elif len(set(images.values())) != len(objects):
        bijection.fail({"part": "all"}, "rho is not injective")
    report.add(bijection)

    report.add(_check_order_iso("rho_order_iso_on_px", q, q2, x, with_px))
    report.add(_check_order_iso("rho_order_iso_on_complement", q, q2, x, without_px))

    def commutes(t: ClusterTilting) -> Dict[str, Any] | None:
        lhs = rho(q, x, f_map(q, x, t))
        rhs = g_map(q2, x, images[t])
        if lhs != rhs:
            return {"T": t.to_json(), "rho_f": lhs.to_json(), "g_rho": rhs.to_json()}
        return None

    square = CheckResult("rho_f_equals_g_rho")
    for failure in parallel_map(commutes, with_px):
        if failure is not None:
            square.fail(failure)
            break
    square.detail = square.detail or f"{len(with_px)} squares checked"
    report.add(square)

    shift = ClusterIndec.shifted(q2, x)

    def reflects_order(t: ClusterTilting) -> Dict[str, Any] | None:
        for u in objects:
            if not reflection_covers(images[t], images[u], shift):
                continue
            if leq(q2, images[t], images[u]) and not leq(q, t, u):
                return _pair(t, u)
        return None

    one_way = CheckResult("rho_reflects_order")
    for failure in parallel_map(reflects_order, objects):
        if failure is not None:
            one_way.fail(failure)
            break
    if one_way.passed:
        skipped = sum(1 for t in objects for u in objects
                      if not reflection_covers(images[t], images[u], shift))
        one_way.detail = f"{len(objects) ** 2 - skipped} pairs checked, {skipped} left out"
    report.add(one_way)

    logger.info("verify_square(%s, %s): %s", q, x, "pass" if report.passed else "fail")
    return report
