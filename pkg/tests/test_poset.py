from __future__ import annotations

import pytest

from clusterposet.cluster import tilting_poset
from clusterposet.errors import PreconditionError
from clusterposet.exact_linalg import poly_coefficients
from clusterposet.poset import (
    MINUS,
    PLUS,
    FinitePoset,
    OrderMap,
    are_isomorphic,
    coxeter_matrix,
    coxeter_polynomial,
    flip_flop,
    hasse,
)
from clusterposet.quiverstore import QuiverStore
from clusterposet.tamari import binary_trees, right_rotations, tamari, tree_text


def chain(*names) -> FinitePoset:
    return FinitePoset.from_covers(names, zip(names, names[1:]))


def antichain(*names) -> FinitePoset:
    return FinitePoset.from_covers(names, [])


# ------------------------------------------------------------
# Construction
# ------------------------------------------------------------

def test_from_covers_takes_the_closure():
    P = chain("a", "b", "c")
    assert P.leq("a", "c")
    assert not P.leq("c", "a")
    assert hasse(P) == [("a", "b"), ("b", "c")]
    assert len(P.strict_pairs()) == 3


def test_axioms_are_checked():
    with pytest.raises(ValueError):
        FinitePoset(["a", "b"], [[True, True], [True, True]])
    with pytest.raises(ValueError):
        FinitePoset(["a"], [[False]])
    with pytest.raises(ValueError):
        FinitePoset(
            ["a", "b", "c"],
            [[True, True, False], [False, True, True], [False, False, True]],
        )
    with pytest.raises(ValueError):
        FinitePoset(["a", "a"], [[True, False], [False, True]])


def test_extremal_elements_and_lattice():
    P = FinitePoset.from_covers("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
    assert P.minimum() == "a"
    assert P.maximum() == "d"
    assert P.meet("b", "c") == "a"
    assert P.join("b", "c") == "d"
    assert P.is_lattice()
    assert not antichain("x", "y").is_lattice()
    assert antichain("x", "y").minimum() is None


def test_restrict_and_dual():
    P = chain("a", "b", "c")
    assert P.restrict(["c", "a"]).elements == ("a", "c")
    assert P.restrict(["c", "a"]).leq("a", "c")
    assert P.dual().leq("c", "a")


def test_linear_extension_breaks_ties_by_position():
    P = FinitePoset.from_covers("zyx", [("x", "y")])
    assert P.linear_extension() == ["z", "x", "y"]


def test_mobius_inverts_incidence():
    P = chain("a", "b", "c")
    assert P.incidence_matrix() * P.mobius() == P.incidence_matrix().eye(3)


# ------------------------------------------------------------
# Order maps and flip-flops
# ------------------------------------------------------------

def test_order_map_checks_domain_and_order():
    X, Y = chain("x1", "x2"), chain("y1", "y2")
    with pytest.raises(ValueError):
        OrderMap(X, Y, {"x1": "y1"})
    backwards = OrderMap(X, Y, {"x1": "y2", "x2": "y1"})
    assert backwards.violation() == ("x1", "x2")
    assert not backwards.is_order_preserving()


def test_flip_flop_plus():
    X, Y = chain("x1", "x2"), chain("y1", "y2")
    f = OrderMap(X, Y, {"x1": "y1", "x2": "y2"})
    P = flip_flop(X, Y, f, PLUS)
    assert P.elements == ("x1", "x2", "y1", "y2")
    assert P.leq("x1", "y1")
    assert P.leq("x2", "y2")
    assert not P.leq("x2", "y1")
    assert not P.leq("y1", "x2")
    assert set(hasse(P)) == {("x1", "x2"), ("y1", "y2"), ("x1", "y1"), ("x2", "y2")}


def test_flip_flop_minus():
    X, Y = chain("x1", "x2"), chain("y1", "y2")
    f = OrderMap(X, Y, {"x1": "y1", "x2": "y2"})
    P = flip_flop(X, Y, f, MINUS)
    assert P.leq("y1", "x1")
    assert P.leq("y1", "x2")
    assert not P.leq("y2", "x1")
    assert not P.leq("x1", "y2")


def test_flip_flop_of_constant_map():
    X, Y = antichain("x1", "x2"), chain("y1", "y2")
    f = OrderMap(X, Y, {"x1": "y2", "x2": "y2"})
    P = flip_flop(X, Y, f, PLUS)
    assert P.up_set("x1") == ["x1", "y2"]
    assert P.maximum() == "y2"


def test_flip_flop_preconditions():
    X, Y = chain("x1", "x2"), chain("y1", "y2")
    backwards = OrderMap(X, Y, {"x1": "y2", "x2": "y1"})
    with pytest.raises(PreconditionError):
        flip_flop(X, Y, backwards, PLUS)

    shared = chain("x1", "y2")
    f = OrderMap(X, shared, {"x1": "x1", "x2": "y2"})
    with pytest.raises(PreconditionError):
        flip_flop(X, shared, f, PLUS)

    with pytest.raises(ValueError):
        flip_flop(X, Y, OrderMap(X, Y, {"x1": "y1", "x2": "y2"}), "sideways")


# ------------------------------------------------------------
# Isomorphism
# ------------------------------------------------------------

def test_isomorphic_relabelling():
    P = FinitePoset.from_covers("abcd", [("a", "b"), ("a", "c"), ("b", "d")])
    Q = FinitePoset.from_covers("1234", [("1", "3"), ("1", "2"), ("2", "4")])
    result = are_isomorphic(P, Q)
    assert result
    assert result.witness == {"a": "1", "b": "2", "c": "3", "d": "4"}


def test_not_isomorphic():
    assert not are_isomorphic(chain("a", "b", "c"), antichain("a", "b", "c"))
    assert not are_isomorphic(chain("a", "b"), chain("a", "b", "c"))
    # Same size and number of relations, different shape.
    vee = FinitePoset.from_covers("abc", [("a", "b"), ("a", "c")])
    wedge = FinitePoset.from_covers("abc", [("a", "c"), ("b", "c")])
    assert not are_isomorphic(vee, wedge)


def test_witness_is_checked_not_searched():
    P, Q = chain("a", "b"), chain("c", "d")
    assert are_isomorphic(P, Q, {"a": "c", "b": "d"})
    assert not are_isomorphic(P, Q, {"a": "d", "b": "c"})


# ------------------------------------------------------------
# Coxeter polynomial
# ------------------------------------------------------------

def test_coxeter_polynomials_of_small_posets():
    assert poly_coefficients(coxeter_polynomial(chain("a", "b"))) == [1, 1, 1]
    assert poly_coefficients(coxeter_polynomial(antichain("a"))) == [1, 1]
    assert poly_coefficients(coxeter_polynomial(antichain("a", "b"))) == [1, 2, 1]


def test_coxeter_matrix_of_chain():
    assert coxeter_matrix(chain("a", "b")).tolist() == [[-1, -1], [1, 0]]


def test_coxeter_polynomial_is_an_isomorphism_invariant():
    P = FinitePoset.from_covers("abc", [("a", "b"), ("a", "c")])
    Q = FinitePoset.from_covers("xyz", [("z", "y"), ("z", "x")])
    assert coxeter_polynomial(P) == coxeter_polynomial(Q)


def test_coxeter_polynomial_agrees_across_orientations(linear_a3, alternating_a3):
    p = coxeter_polynomial(tilting_poset(linear_a3))
    assert p == coxeter_polynomial(tilting_poset(alternating_a3))
    assert p.degree() == 14


# ------------------------------------------------------------
# Tamari
# ------------------------------------------------------------

def test_binary_tree_counts():
    assert [len(binary_trees(k)) for k in range(6)] == [1, 1, 2, 5, 14, 42]


def test_right_rotation():
    left_comb = ((None, None), None)
    assert right_rotations(left_comb) == [(None, (None, None))]
    assert tree_text(left_comb) == "((..).)"


@pytest.mark.parametrize("n, size", [(1, 2), (2, 5), (3, 14), (4, 42)])
def test_tamari_sizes(n, size):
    T = tamari(n)
    assert len(T) == size
    assert T.is_lattice()


def test_tamari_rejects_bad_size():
    with pytest.raises(ValueError):
        tamari(0)


@pytest.mark.parametrize("fixture", ["linear_a2", "linear_a3"])
def test_tamari_matches_linear_tilting_poset(fixture, request):
    q = request.getfixturevalue(fixture)
    assert are_isomorphic(tilting_poset(q), tamari(q.n))


def test_tamari_matches_linear_a4_tilting_poset():
    q = QuiverStore.load("a4-linear")
    P = tilting_poset(q)
    assert len(P) == 42
    assert are_isomorphic(P, tamari(4))
