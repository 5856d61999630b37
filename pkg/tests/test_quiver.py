from __future__ import annotations

import itertools

import pytest

from clusterposet.errors import NotRepresentationFinite, QuiverError
from clusterposet.quiver import (
    SINK,
    SOURCE,
    DynkinType,
    Quiver,
    classify_dynkin,
    euler_form,
    is_linear_orientation,
    orientations,
    parse_quiver,
    positive_roots,
    reflect,
    reflection_path,
    require_dynkin,
    simple_reflection,
    terminal_vertices,
)


def linear(n: int) -> Quiver:
    labels = tuple(str(i) for i in range(1, n + 1))
    return Quiver(labels, tuple(zip(labels, labels[1:])))


# ------------------------------------------------------------
# Parsing
# ------------------------------------------------------------

def test_parse_linear_a3(linear_a3):
    q = parse_quiver('{"vertices":["1","2","3"],"arrows":[["1","2"],["2","3"]]}')
    assert q == linear_a3
    assert q.vertices == ("1", "2", "3")


def test_parse_single_vertex():
    q = parse_quiver('{"vertices":["1"],"arrows":[]}')
    assert q.n == 1
    assert q.arrows == ()


@pytest.mark.parametrize(
    "text",
    [
        '{"vertices":["1","2"],"arrows":[["1","2"],["2","1"]]}',
        '{"vertices":["1","2"],"arrows":[["1","3"]]}',
        '{"vertices":["1","1"],"arrows":[]}',
        '{"vertices":[],"arrows":[]}',
        '{"vertices":["1"],"arrows":[["1"]]}',
        '{"vertices":["1","2"],"arrows":[[["1"],"2"]]}',
        '{"vertices":["1","2"],"arrows":[[1,"2"]]}',
        '{"vertices":[["1"]],"arrows":[]}',
        "not json",
        "[1, 2]",
    ],
)
def test_parse_rejects_bad_input(text):
    with pytest.raises(QuiverError):
        parse_quiver(text)


def test_cycle_message_names_the_cycle():
    with pytest.raises(QuiverError, match="oriented cycle"):
        Quiver(("a", "b", "c"), (("a", "b"), ("b", "c"), ("c", "a")))


# ------------------------------------------------------------
# Sinks, sources, reflections
# ------------------------------------------------------------

def test_terminal_vertices(linear_a3, alternating_a3):
    assert terminal_vertices(linear_a3, SINK) == {"3"}
    assert terminal_vertices(linear_a3, SOURCE) == {"1"}
    assert terminal_vertices(alternating_a3, SOURCE) == {"1", "3"}
    assert terminal_vertices(alternating_a3, SINK) == {"2"}


def test_reflect_at_sink_gives_alternating(linear_a3, alternating_a3):
    assert reflect(linear_a3, "3") == alternating_a3
    assert reflect(alternating_a3, "3") == linear_a3


def test_reflect_rejects_inner_vertex(linear_a3):
    with pytest.raises(QuiverError):
        reflect(linear_a3, "2")


def test_reflect_is_an_involution_everywhere(d4):
    for q in orientations(d4):
        for x in q.sinks() + q.sources():
            assert q.reflect(x).reflect(x) == q


def test_reflect_keeps_arrow_positions(linear_a3):
    q2 = linear_a3.reflect("3")
    assert q2.arrows[0] == ("1", "2")
    assert q2.arrows[1] == ("3", "2")


def test_delete_vertex_and_full_subquiver(linear_a3):
    assert linear_a3.delete_vertex("3") == Quiver(("1", "2"), (("1", "2"),))
    assert linear_a3.delete_vertex("2").arrows == ()
    assert linear_a3.full_subquiver(["3", "2"]) == Quiver(("2", "3"), (("2", "3"),))


def test_paths_from(linear_a3):
    ends = [end for end, _ in linear_a3.paths_from("1")]
    assert ends == ["1", "2", "3"]
    assert linear_a3.paths_from("3") == [("3", ())]


# ------------------------------------------------------------
# Dynkin classification
# ------------------------------------------------------------

def test_classify_linear_a3(linear_a3):
    assert classify_dynkin(linear_a3) == DynkinType("A", 3)


def test_classify_four_cycle_is_not_dynkin():
    square = Quiver(("1", "2", "3", "4"), (("1", "2"), ("2", "3"), ("1", "4"), ("4", "3")))
    assert classify_dynkin(square) is None
    with pytest.raises(NotRepresentationFinite):
        require_dynkin(square)


def test_classify_star_is_d4(d4):
    assert classify_dynkin(d4) == DynkinType("D", 4)


def test_classify_e6():
    labels = tuple("abcdef")
    arrows = (("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("c", "f"))
    assert classify_dynkin(Quiver(labels, arrows)) == DynkinType("E", 6)


def test_classify_rejects_parallel_arrows_and_disconnected():
    kronecker = Quiver(("1", "2"), (("1", "2"), ("1", "2")))
    assert classify_dynkin(kronecker) is None
    assert classify_dynkin(Quiver(("1", "2"))) is None


def test_dynkin_type_validation():
    with pytest.raises(ValueError):
        DynkinType("E", 9)
    with pytest.raises(ValueError):
        DynkinType("B", 2)
    with pytest.raises(ValueError):
        DynkinType("D", 3)


@pytest.mark.parametrize(
    "kind, count",
    [(DynkinType("A", 1), 2), (DynkinType("A", 2), 5), (DynkinType("A", 3), 14),
     (DynkinType("A", 4), 42), (DynkinType("D", 4), 50), (DynkinType("E", 6), 833)],
)
def test_cluster_number(kind, count):
    assert kind.cluster_number() == count


# ------------------------------------------------------------
# Euler form and reflections
# ------------------------------------------------------------

def test_euler_form_examples(linear_a3):
    assert euler_form(linear_a3, (0, 1, 0), (0, 0, 1)) == -1
    assert euler_form(linear_a3, (1, 2, 0), (0, 0, 0)) == 0
    assert euler_form(linear_a3, (1, 1, 1), (0, 1, 0)) == 0


def test_euler_form_is_bilinear(linear_a3):
    box = list(itertools.product(range(2), repeat=3))
    for d, d2, e in itertools.product(box[:4], box[4:], box[::3]):
        total = tuple(a + b for a, b in zip(d, d2))
        assert euler_form(linear_a3, total, e) == (
            euler_form(linear_a3, d, e) + euler_form(linear_a3, d2, e)
        )


def test_simple_reflection_examples(linear_a3):
    assert simple_reflection(linear_a3, "3", (0, 1, 1)) == (0, 1, 0)
    assert simple_reflection(linear_a3, "3", (1, 1, 1)) == (1, 1, 0)
    assert simple_reflection(linear_a3, "2", (0, 1, 0)) == (0, -1, 0)


def test_simple_reflection_is_an_involution(d4):
    for x in d4.vertices:
        for d in itertools.product(range(-1, 3), repeat=4):
            assert simple_reflection(d4, x, simple_reflection(d4, x, d)) == d


# ------------------------------------------------------------
# Positive roots
# ------------------------------------------------------------

def test_positive_roots_a3(linear_a3):
    assert positive_roots(linear_a3) == (
        (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1),
    )


def test_positive_roots_a1(a1):
    assert positive_roots(a1) == ((1,),)


def test_positive_roots_d4_match_tits_form(d4):
    # Positive roots are the nonnegative vectors with Tits form 1.
    brute = {
        d for d in itertools.product(range(3), repeat=4)
        if any(d) and euler_form(d4, d, d) == 1
    }
    assert set(positive_roots(d4)) == brute
    assert len(positive_roots(d4)) == 12


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_positive_root_count_type_a(n):
    assert len(positive_roots(linear(n))) == n * (n + 1) // 2


def test_positive_roots_closed_under_reflection(d4):
    roots = set(positive_roots(d4))
    for r in roots:
        for x in d4.vertices:
            image = simple_reflection(d4, x, r)
            if min(image) >= 0 and any(image):
                assert image in roots


def test_positive_roots_refuse_non_dynkin():
    with pytest.raises(NotRepresentationFinite):
        positive_roots(Quiver(("1", "2"), (("1", "2"), ("1", "2"))))


# ------------------------------------------------------------
# Orientations
# ------------------------------------------------------------

def test_orientations_count(linear_a3, d4):
    assert len(list(orientations(linear_a3))) == 4
    assert len(list(orientations(d4))) == 8
    assert next(orientations(linear_a3)) == linear_a3


def test_linear_orientation(linear_a3, alternating_a3):
    assert is_linear_orientation(linear_a3)
    assert is_linear_orientation(Quiver(("1", "2", "3"), (("2", "1"), ("3", "2"))))
    assert not is_linear_orientation(alternating_a3)


def test_reflection_path(linear_a3, alternating_a3):
    assert reflection_path(linear_a3, linear_a3) == []
    assert reflection_path(linear_a3, alternating_a3) == ["3"]

    q = linear_a3
    target = Quiver(("1", "2", "3"), (("2", "1"), ("3", "2")))
    for x in reflection_path(q, target):
        q = q.reflect(x)
    assert frozenset(q.arrows) == frozenset(target.arrows)


def test_reflection_path_rejects_other_graph(linear_a3):
    with pytest.raises(QuiverError):
        reflection_path(linear_a3, Quiver(("1", "2", "3"), (("1", "3"), ("2", "3"))))
