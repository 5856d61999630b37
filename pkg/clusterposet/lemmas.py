"""
Lemmas Module

Exhaustive checks of the structural facts relating the cluster tilting
poset to reflections: closure of the subsets containing P_x or P_x[1],
the behaviour of the maps f and g, the torsion-class property of
almost complete tilting modules, and the flip-flop descriptions of the
poset at a sink and at a source.

Each check runs over every object (and pair of objects) of one quiver
and returns a CheckResult carrying the first counterexample found.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Any, Callable, Dict, List

from clusterposet.checks import CheckResult, Report, parallel_map
from clusterposet.cluster import (
    PX,
    PX_SHIFT,
    ClusterTilting,
    almost_complete_modules,
    enumerate_cluster_tilting,
    f_map,
    fac_fingerprint,
    g_map,
    is_sincere,
    leq,
    module_complements,
    module_fingerprint,
    mutate_at_projective,
    mutate_at_shifted,
    projective_indec,
    subset_containing,
    tilting_poset,
)
from clusterposet.errors import PreconditionError
from clusterposet.functors import reflect_plus, rho, rho_inv, verify_square
from clusterposet.poset import MINUS, PLUS, FinitePoset, OrderMap, are_isomorphic, flip_flop
from clusterposet.quiver import Quiver, positive_roots, require_dynkin, simple_reflection
from clusterposet.representation import (
    ext1_dim,
    extend_by_zero,
    indecomposable_of_root,
    restrict,
    restrict_delete,
    support,
)

logger = logging.getLogger(__name__)


def _t(t: ClusterTilting) -> List[List[int]]:
    return t.to_json()


def _split(q: Quiver, which: str, x: str):
    objects = enumerate_cluster_tilting(q)
    inside = subset_containing(q, which, x)
    members = set(inside)
    outside = [t for t in objects if t not in members]
    return objects, inside, outside


# ------------------------------------------------------------
# Any vertex
# ------------------------------------------------------------

def check_projective_summand(q: Quiver, x: str) -> CheckResult:
    """
    T contains P_x iff P_x lies in fac T.
    """
    result = CheckResult(f"projective_summand[{x}]")
    p = projective_indec(q, x)
    for t in enumerate_cluster_tilting(q):
        if (p in t) != (p.root in fac_fingerprint(q, t)):
            return result.fail({"T": _t(t), "P_x": p.to_json()})
    return result


def check_mutation_at_projective_increases(q: Quiver, x: str) -> CheckResult:
    result = CheckResult(f"mutation_at_projective_increases[{x}]")
    for t in subset_containing(q, PX, x):
        u = mutate_at_projective(q, x, t)
        if not (leq(q, t, u) and t != u):
            return result.fail({"T": _t(t), "mutated": _t(u)})
    return result


def check_mutation_at_shifted_decreases(q: Quiver, x: str) -> CheckResult:
    result = CheckResult(f"mutation_at_shifted_decreases[{x}]")
    for t in subset_containing(q, PX_SHIFT, x):
        u = mutate_at_shifted(q, x, t)
        if not (leq(q, u, t) and t != u):
            return result.fail({"T": _t(t), "mutated": _t(u)})
    return result


# ------------------------------------------------------------
# Sink
# ------------------------------------------------------------

def check_down_closed(q: Quiver, x: str) -> CheckResult:
    result = CheckResult(f"px_subset_down_closed[{x}]")
    objects, inside, _ = _split(q, PX, x)
    members = set(inside)
    for t in inside:
        for u in objects:
            if leq(q, u, t) and u not in members:
                return result.fail({"T": _t(t), "T_prime": _t(u)})
    return result


def check_sink_fingerprint_drop(q: Quiver, x: str) -> CheckResult:
    """
    ind fac f(T) = ind fac T without S_x.
    """
    result = CheckResult(f"f_removes_simple[{x}]")
    simple = q.unit_vector(x)
    for t in subset_containing(q, PX, x):
        before = fac_fingerprint(q, t).roots
        after = fac_fingerprint(q, f_map(q, x, t)).roots
        if simple not in before or after != before - {simple}:
            return result.fail({"T": _t(t)})
    return result


def check_f_sandwich(q: Quiver, x: str) -> CheckResult:
    """
    T containing P_x, T' not containing it and T' > T give T' >= f(T).
    """
    result = CheckResult(f"f_sandwich[{x}]")
    _, inside, outside = _split(q, PX, x)
    for t in inside:
        ft = f_map(q, x, t)
        for u in outside:
            if leq(q, t, u) and not leq(q, ft, u):
                return result.fail({"T": _t(t), "T_prime": _t(u), "f_T": _t(ft)})
    return result


def _order_preserving(
    name: str,
    q: Quiver,
    objects: List[ClusterTilting],
    fn: Callable[[ClusterTilting], ClusterTilting],
) -> CheckResult:
    result = CheckResult(name)
    images = {t: fn(t) for t in objects}
    for a in objects:
        for b in objects:
            if leq(q, a, b) and not leq(q, images[a], images[b]):
                return result.fail({"T": _t(a), "T_prime": _t(b)})
    return result


def check_f_order_preserving(q: Quiver, x: str) -> CheckResult:
    return _order_preserving(
        f"f_order_preserving[{x}]", q, subset_containing(q, PX, x), lambda t: f_map(q, x, t)
    )


def check_reflection_functor(q: Quiver, x: str) -> CheckResult:
    """
    F+ at the sink x acts on dimension vectors by s_x, has no R^1 part
    away from S_x, and commutes with restriction to supp M + {x}.
    """
    result = CheckResult(f"reflection_functor[{x}]")
    simple = q.unit_vector(x)
    for d in positive_roots(q):
        M = indecomposable_of_root(q, d)
        reflected = reflect_plus(M, x)

        if d == simple:
            if not reflected.image.is_zero() or reflected.r1_part != 1:
                return result.fail({"root": list(d)}, "F+ S_x must vanish with R1 part 1")
            continue

        if reflected.image.dims != simple_reflection(q, x, d) or reflected.r1_part:
            return result.fail({"root": list(d)}, "dim F+ M differs from s_x(dim M)")

        sub = q.full_subquiver(sorted(support(M) | {x}, key=q.index))
        lhs = restrict(reflected.image, sub.reflect(x))
        rhs = reflect_plus(restrict(M, sub), x).image
        if lhs != rhs:
            return result.fail({"root": list(d)}, "F+ does not commute with restriction")
    return result


# ------------------------------------------------------------
# Source
# ------------------------------------------------------------

def check_up_closed(q: Quiver, x: str) -> CheckResult:
    result = CheckResult(f"shifted_subset_up_closed[{x}]")
    objects, inside, _ = _split(q, PX_SHIFT, x)
    members = set(inside)
    for t in inside:
        for u in objects:
            if leq(q, t, u) and u not in members:
                return result.fail({"T": _t(t), "T_prime": _t(u)})
    return result


def check_source_simple(q: Quiver, x: str) -> CheckResult:
    """
    S_x lies in fac T iff the module part of T is supported at x, iff T
    does not contain P_x[1].
    """
    result = CheckResult(f"source_simple[{x}]")
    simple = q.unit_vector(x)
    i = q.index(x)
    shifted = set(subset_containing(q, PX_SHIFT, x))
    for t in enumerate_cluster_tilting(q):
        in_fac = simple in fac_fingerprint(q, t)
        supported = any(d[i] for d in t.module_part())
        if in_fac != supported or in_fac == (t in shifted):
            return result.fail({"T": _t(t)})
    return result


def check_g_sandwich(q: Quiver, x: str) -> CheckResult:
    """
    T containing P_x[1], T' not containing it and T' < T give T' <= g(T).
    """
    result = CheckResult(f"g_sandwich[{x}]")
    _, inside, outside = _split(q, PX_SHIFT, x)
    for t in inside:
        gt = g_map(q, x, t)
        for u in outside:
            if leq(q, u, t) and not leq(q, u, gt):
                return result.fail({"T": _t(t), "T_prime": _t(u), "g_T": _t(gt)})
    return result


def check_g_order_preserving(q: Quiver, x: str) -> CheckResult:
    return _order_preserving(
        f"g_order_preserving[{x}]", q, subset_containing(q, PX_SHIFT, x), lambda t: g_map(q, x, t)
    )


def check_torsion_closure(q: Quiver, x: str) -> CheckResult:
    """
    For an almost complete tilting module U not supported on the source x,
    with unique complement M: every fac T' containing fac U and S_x
    contains M. Also checks that U restricted away from x is tilting and
    that extending the restriction by zero gives U back.
    """
    result = CheckResult(f"torsion_closure[{x}]")
    i = q.index(x)
    simple = q.unit_vector(x)
    objects = enumerate_cluster_tilting(q)

    for u_roots in almost_complete_modules(q):
        if any(d[i] for d in u_roots):
            continue

        payload: Dict[str, Any] = {"U": [list(d) for d in u_roots]}
        complements = module_complements(q, u_roots)
        if len(complements) != 1:
            return result.fail(payload, f"{len(complements)} complements")
        m = complements[0]

        restricted = [restrict_delete(indecomposable_of_root(q, d), x) for d in u_roots]
        for a, b in combinations(restricted, 2):
            if ext1_dim(a, b) or ext1_dim(b, a):
                return result.fail(payload, "restriction of U is not rigid")
        for d, r in zip(u_roots, restricted):
            if extend_by_zero(r, q, x) != indecomposable_of_root(q, d):
                return result.fail(payload, "extension by zero does not recover U")

        u_fac = module_fingerprint(q, tuple(u_roots)).roots
        for t in objects:
            fp = fac_fingerprint(q, t).roots
            if simple in fp and fp >= u_fac and m not in fp:
                payload.update({"M": list(m), "T_prime": _t(t)})
                return result.fail(payload)

    return result


# ------------------------------------------------------------
# Global
# ------------------------------------------------------------

def check_sincere_complements(q: Quiver) -> CheckResult:
    """
    An almost complete tilting module has two complements iff it is sincere.
    """
    result = CheckResult("sincere_complements")
    for u_roots in almost_complete_modules(q):
        expected = 2 if is_sincere(q, u_roots) else 1
        found = module_complements(q, u_roots)
        if len(found) != expected:
            return result.fail({
                "U": [list(d) for d in u_roots],
                "complements": [list(d) for d in found],
            })
    return result


def check_antisymmetry(q: Quiver) -> CheckResult:
    result = CheckResult("fingerprints_injective")
    seen: Dict[frozenset, ClusterTilting] = {}
    for t in enumerate_cluster_tilting(q):
        fp = fac_fingerprint(q, t).roots
        if fp in seen:
            return result.fail({"T": _t(t), "T_prime": _t(seen[fp])})
        seen[fp] = t
    return result


def check_rho_inverse(q: Quiver, x: str) -> CheckResult:
    result = CheckResult(f"rho_inverse[{x}]")
    q2 = q.reflect(x)
    for t in enumerate_cluster_tilting(q):
        back = rho_inv(q2, x, rho(q, x, t))
        if back != t:
            return result.fail({"T": _t(t), "round_trip": _t(back)})
    return result


# ------------------------------------------------------------
# Flip-flops
# ------------------------------------------------------------

def flip_flop_rebuild(q: Quiver, which: str, x: str, sign: str) -> FinitePoset:
    """
    Glue the objects containing P_x (which="Px", along f) or P_x[1]
    (which="PxShift", along g) to the remaining objects.
    """
    poset = tilting_poset(q)
    _, inside, outside = _split(q, which, x)
    X = poset.restrict(inside)
    Y = poset.restrict(outside)
    step = mutate_at_projective if which == PX else mutate_at_shifted
    f = OrderMap(X, Y, {t: step(q, x, t) for t in inside})
    return flip_flop(X, Y, f, sign)


def _iso_check(name: str, rebuilt: FinitePoset, target: FinitePoset, witness) -> CheckResult:
    result = CheckResult(name)
    if are_isomorphic(rebuilt, target, witness=witness):
        result.detail = f"{len(target)} elements, natural bijection"
        return result
    found = are_isomorphic(rebuilt, target)
    return result.fail(
        {"elements": len(target)},
        "isomorphic by search only" if found else "not isomorphic",
    )


def verify_flip_flop(q: Quiver, x: str) -> Report:
    """
    At the sink x of q, with q2 = q reflected at x:

    - the f-glued plus order on q's objects is q's poset;
    - the g-glued minus order on q2's objects is q2's poset;
    - the f-glued minus order on q's objects is q2's poset under rho.

    Raises:
        PreconditionError: x is not a sink.
    """
    kind = require_dynkin(q)
    if not q.is_sink(x):
        raise PreconditionError(f"vertex {x!r} is not a sink of {q}")

    q2 = q.reflect(x)
    poset = tilting_poset(q)
    poset2 = tilting_poset(q2)
    report = Report(subject={
        "quiver": q.to_dict(),
        "dynkin_type": str(kind),
        "vertex": x,
        "objects": len(poset),
    })

    plus = flip_flop_rebuild(q, PX, x, PLUS)
    report.add(_iso_check("sink_flip_flop_plus", plus, poset, {t: t for t in poset}))

    minus2 = flip_flop_rebuild(q2, PX_SHIFT, x, MINUS)
    report.add(_iso_check("source_flip_flop_minus", minus2, poset2, {t: t for t in poset2}))

    minus = flip_flop_rebuild(q, PX, x, MINUS)
    report.add(_iso_check(
        "sink_flip_flop_minus_is_reflected_poset",
        minus,
        poset2,
        {t: rho(q, x, t) for t in poset},
    ))

    report.add(check_f_order_preserving(q, x))
    report.add(check_g_order_preserving(q2, x))
    return report


# ------------------------------------------------------------
# Full suite
# ------------------------------------------------------------

def _suffixed(report: Report, x: str) -> List[CheckResult]:
    for result in report.checks:
        if not result.check.endswith("]"):
            result.check = f"{result.check}[{x}]"
    return report.checks


def _vertex_checks(q: Quiver, x: str) -> List[CheckResult]:
    results = [
        check_projective_summand(q, x),
        check_mutation_at_projective_increases(q, x),
        check_mutation_at_shifted_decreases(q, x),
    ]

    if q.is_sink(x):
        results += [
            check_down_closed(q, x),
            check_sink_fingerprint_drop(q, x),
            check_f_sandwich(q, x),
            check_f_order_preserving(q, x),
            check_reflection_functor(q, x),
            check_rho_inverse(q, x),
        ]
        results += _suffixed(verify_square(q, x), x)
        results += _suffixed(verify_flip_flop(q, x), x)

    if q.is_source(x):
        results += [
            check_up_closed(q, x),
            check_source_simple(q, x),
            check_g_sandwich(q, x),
            check_g_order_preserving(q, x),
            check_torsion_closure(q, x),
        ]
        glued = flip_flop_rebuild(q, PX_SHIFT, x, MINUS)
        poset = tilting_poset(q)
        results.append(
            _iso_check(f"source_flip_flop[{x}]", glued, poset, {t: t for t in poset})
        )

    return results


def run_lemmas(q: Quiver) -> Report:
    """
    Run every check at every vertex of q (sink and source checks where
    they apply) plus the global ones.
    """
    kind = require_dynkin(q)
    objects = enumerate_cluster_tilting(q)
    report = Report(subject={
        "quiver": q.to_dict(),
        "dynkin_type": str(kind),
        "objects": len(objects),
        "sinks": q.sinks(),
        "sources": q.sources(),
    })

    # Warm the shared caches before fanning out.
    tilting_poset(q)

    for results in parallel_map(lambda x: _vertex_checks(q, x), q.vertices):
        for result in results:
            report.add(result)

    report.add(check_sincere_complements(q))
    report.add(check_antisymmetry(q))

    logger.info(
        "Lemma suite on %s: %d checks, %d failed",
        q, len(report.checks), len(report.failures()),
    )
    return report
