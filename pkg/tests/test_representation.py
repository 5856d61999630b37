from __future__ import annotations

import pytest

from clusterposet import exact_linalg as la
from clusterposet.errors import PreconditionError, QuiverError
from clusterposet.quiver import euler_form, positive_roots
from clusterposet.quiverstore import QuiverStore
from clusterposet.representation import (
    PROJECTIVE,
    SIMPLE,
    Morphism,
    Representation,
    ext1_dim,
    ext1_dim_from_resolution,
    extend_by_zero,
    fac_witness,
    hom_basis,
    hom_dim,
    in_fac,
    in_fac_of_sum,
    indecomposable_of_root,
    projective_rep,
    projective_root,
    restrict_delete,
    simple_rep,
    standard_rep,
    support,
)


# ------------------------------------------------------------
# Construction
# ------------------------------------------------------------

def test_representation_rejects_wrong_shapes(linear_a3):
    with pytest.raises(ValueError):
        Representation(linear_a3, (1, 1, 0), (la.zeros(1, 1), la.zeros(0, 0)))
    with pytest.raises(ValueError):
        Representation(linear_a3, (1, 1), ())


def test_projectives_of_linear_a3(linear_a3):
    assert projective_rep(linear_a3, "1").dims == (1, 1, 1)
    assert projective_rep(linear_a3, "2").dims == (0, 1, 1)
    assert projective_rep(linear_a3, "3").dims == (0, 0, 1)
    assert projective_root(linear_a3, "1") == (1, 1, 1)


def test_projective_at_d4_centre(d4):
    assert projective_rep(d4, "2").dims == (0, 1, 1, 1)
    assert projective_rep(d4, "1").dims == (1, 1, 1, 1)


def test_standard_rep(linear_a3):
    assert standard_rep(linear_a3, SIMPLE, "2").dims == (0, 1, 0)
    assert standard_rep(linear_a3, PROJECTIVE, "2").dims == (0, 1, 1)
    with pytest.raises(ValueError):
        standard_rep(linear_a3, "injective", "2")
    with pytest.raises(QuiverError):
        standard_rep(linear_a3, SIMPLE, "9")


def test_direct_sum_adds_dimensions(linear_a3):
    total = simple_rep(linear_a3, "1").direct_sum(projective_rep(linear_a3, "1"))
    assert total.dims == (2, 1, 1)
    assert total.maps[0].shape == (1, 2)


def test_morphism_must_intertwine(linear_a3):
    P2 = projective_rep(linear_a3, "2")
    S2 = simple_rep(linear_a3, "2")
    Morphism(P2, S2, (la.zeros(0, 0), la.identity(1), la.zeros(0, 1)))
    with pytest.raises(ValueError):
        Morphism(S2, P2, (la.zeros(0, 0), la.identity(1), la.zeros(1, 0)))


# ------------------------------------------------------------
# Hom and Ext
# ------------------------------------------------------------

def test_hom_between_projectives(linear_a3):
    P1 = projective_rep(linear_a3, "1")
    P3 = projective_rep(linear_a3, "3")
    assert hom_dim(P3, P1) == 1
    assert hom_dim(P1, P3) == 0
    assert len(hom_basis(P3, P1)) == 1


def test_ext_between_simples(linear_a3):
    S2 = simple_rep(linear_a3, "2")
    S3 = simple_rep(linear_a3, "3")
    assert ext1_dim(S2, S3) == 1
    assert ext1_dim(S3, S2) == 0


def test_ext_from_projectives_vanishes(linear_a3):
    for x in linear_a3.vertices:
        P = projective_rep(linear_a3, x)
        for d in positive_roots(linear_a3):
            assert ext1_dim(P, indecomposable_of_root(linear_a3, d)) == 0


SMALL_DYNKIN = ["a1", "d4"] + [
    f"orientations/{family}/{family}-{code}"
    for family, codes in (("a2", ["0", "1"]), ("a3", ["00", "01", "10", "11"]))
    for code in codes
]


@pytest.mark.parametrize("name", SMALL_DYNKIN)
def test_ext_two_ways_agree(name):
    q = QuiverStore.load(name)
    reps = [indecomposable_of_root(q, d) for d in positive_roots(q)]
    for M in reps:
        for N in reps:
            assert ext1_dim(M, N) == ext1_dim_from_resolution(M, N)
            assert hom_dim(M, N) - ext1_dim(M, N) == euler_form(q, M.dims, N.dims)


# ------------------------------------------------------------
# Indecomposables
# ------------------------------------------------------------

@pytest.mark.parametrize("fixture", ["linear_a3", "alternating_a3", "d4"])
def test_indecomposables_are_bricks(fixture, request):
    q = request.getfixturevalue(fixture)
    for d in positive_roots(q):
        M = indecomposable_of_root(q, d)
        assert M.dims == d
        assert M.quiver == q
        assert hom_dim(M, M) == 1


def test_indecomposable_rejects_non_root(linear_a3):
    with pytest.raises(PreconditionError):
        indecomposable_of_root(linear_a3, (1, 0, 1))


def test_d4_maximal_root(d4):
    M = indecomposable_of_root(d4, (1, 2, 1, 1))
    assert hom_dim(M, M) == 1


# ------------------------------------------------------------
# fac
# ------------------------------------------------------------

def test_in_fac(linear_a3):
    P1 = projective_rep(linear_a3, "1")
    assert in_fac(simple_rep(linear_a3, "1"), P1)
    assert not in_fac(simple_rep(linear_a3, "3"), P1)


def test_in_fac_needs_a_covering_summand(linear_a3):
    P2 = projective_rep(linear_a3, "2")
    S1 = simple_rep(linear_a3, "1")
    M110 = indecomposable_of_root(linear_a3, (1, 1, 0))
    assert not in_fac(M110, P2)
    assert not in_fac(M110, S1)
    assert in_fac_of_sum(M110, [indecomposable_of_root(linear_a3, (1, 1, 1))])


def test_zero_is_in_every_fac(linear_a3):
    assert in_fac_of_sum(Representation.zero(linear_a3), [])


def test_fac_witness_is_the_evaluation_map(linear_a3):
    P1 = projective_rep(linear_a3, "1")
    S1 = simple_rep(linear_a3, "1")
    witness = fac_witness(S1, P1)
    assert witness.source.dims == P1.dims
    assert witness.is_surjective()
    assert not fac_witness(simple_rep(linear_a3, "3"), P1).is_surjective()


@pytest.mark.parametrize("fixture", ["linear_a3", "alternating_a3"])
def test_in_fac_is_transitive(fixture, request):
    q = request.getfixturevalue(fixture)
    reps = [indecomposable_of_root(q, d) for d in positive_roots(q)]
    below = {(N, X): in_fac(N, X) for N in reps for X in reps}
    for N in reps:
        for X in reps:
            for Y in reps:
                if below[N, X] and below[X, Y]:
                    assert below[N, Y]


@pytest.mark.parametrize("fixture", ["linear_a3", "alternating_a3"])
def test_in_fac_through_a_sum_of_quotients(fixture, request):
    q = request.getfixturevalue(fixture)
    reps = [indecomposable_of_root(q, d) for d in positive_roots(q)]
    for Y in reps:
        quotients = [X for X in reps if in_fac(X, Y)]
        for N in reps:
            if in_fac_of_sum(N, quotients):
                assert in_fac(N, Y)
            if in_fac(N, Y):
                assert in_fac_of_sum(N, [Y, *reps])


# ------------------------------------------------------------
# Restriction and extension by zero
# ------------------------------------------------------------

def test_support(linear_a3):
    assert support(indecomposable_of_root(linear_a3, (0, 1, 1))) == {"2", "3"}


def test_restrict_then_extend(linear_a3):
    M = indecomposable_of_root(linear_a3, (1, 1, 0))
    small = restrict_delete(M, "3")
    assert small.dims == (1, 1)
    assert small.quiver == linear_a3.delete_vertex("3")
    assert extend_by_zero(small, linear_a3, "3") == M


def test_extend_by_zero_checks_quiver(linear_a3):
    small = restrict_delete(simple_rep(linear_a3, "1"), "3")
    with pytest.raises(QuiverError):
        extend_by_zero(small, linear_a3, "1")


@pytest.mark.parametrize("fixture", ["linear_a3", "alternating_a3", "d4"])
def test_hom_from_projective_reads_off_dimension(fixture, request):
    q = request.getfixturevalue(fixture)
    for x in q.vertices:
        P = projective_rep(q, x)
        for d in positive_roots(q):
            N = indecomposable_of_root(q, d)
            assert hom_dim(P, N) == N.dim_at(x)
