from __future__ import annotations

from itertools import product
from typing import List

import pytest

from clusterposet.cluster import PX, PX_SHIFT, tilting_poset
from clusterposet.errors import PreconditionError
from clusterposet.functors import rho
from clusterposet.lemmas import (
    check_down_closed,
    check_f_sandwich,
    check_reflection_functor,
    check_sincere_complements,
    check_source_simple,
    check_torsion_closure,
    check_up_closed,
    flip_flop_rebuild,
    run_lemmas,
    verify_flip_flop,
)
from clusterposet.poset import MINUS, PLUS, are_isomorphic
from clusterposet.quiverstore import QuiverStore


def test_sink_checks_on_linear_a3(linear_a3):
    for check in (check_down_closed, check_f_sandwich, check_reflection_functor):
        result = check(linear_a3, "3")
        assert result.passed, result.to_dict()


def test_source_checks_on_alternating_a3(alternating_a3):
    for x in ("1", "3"):
        for check in (check_up_closed, check_source_simple, check_torsion_closure):
            result = check(alternating_a3, x)
            assert result.passed, result.to_dict()


def test_sincere_complements(d4):
    assert check_sincere_complements(d4).passed


def test_flip_flop_rebuild_recovers_the_poset(linear_a3, alternating_a3):
    poset = tilting_poset(linear_a3)
    rebuilt = flip_flop_rebuild(linear_a3, PX, "3", PLUS)
    assert rebuilt == poset

    poset2 = tilting_poset(alternating_a3)
    assert flip_flop_rebuild(alternating_a3, PX_SHIFT, "3", MINUS) == poset2


def test_minus_rebuild_is_the_reflected_poset(linear_a3, alternating_a3):
    rebuilt = flip_flop_rebuild(linear_a3, PX, "3", MINUS)
    witness = {t: rho(linear_a3, "3", t) for t in rebuilt}
    assert are_isomorphic(rebuilt, tilting_poset(alternating_a3), witness)


def test_verify_flip_flop_report(linear_a3):
    report = verify_flip_flop(linear_a3, "3")
    assert report.passed, report.to_dict()
    data = report.to_dict()
    assert data["status"] == "pass"
    assert data["objects"] == 14
    assert [c["check"] for c in data["checks"]][:3] == [
        "sink_flip_flop_plus",
        "source_flip_flop_minus",
        "sink_flip_flop_minus_is_reflected_poset",
    ]


def test_verify_flip_flop_needs_a_sink(linear_a3):
    with pytest.raises(PreconditionError):
        verify_flip_flop(linear_a3, "2")


def orientation_names(family: str, bits: int) -> List[str]:
    return [
        f"orientations/{family}/{family}-{''.join(code)}"
        for code in product("01", repeat=bits)
    ]


def test_lemma_suite_on_a1(a1):
    report = run_lemmas(a1)
    assert report.passed, [c.to_dict() for c in report.failures()]


@pytest.mark.parametrize("name", orientation_names("a2", 1) + orientation_names("a3", 2))
def test_lemma_suite_every_small_orientation(name):
    q = QuiverStore.load(name)
    report = run_lemmas(q)
    assert report.passed, [c.to_dict() for c in report.failures()]
    for x in q.sinks():
        assert f"rho_reflects_order[{x}]" in [c.check for c in report.checks]


@pytest.mark.slow
@pytest.mark.parametrize("name", orientation_names("a4", 3) + orientation_names("d4", 3))
def test_lemma_suite_every_rank_four_orientation(name):
    report = run_lemmas(QuiverStore.load(name))
    assert report.passed, [c.to_dict() for c in report.failures()]


def test_every_bundled_orientation_is_covered():
    for family, bits in (("a2", 1), ("a3", 2), ("a4", 3), ("d4", 3)):
        loaded = [name for name, _ in QuiverStore.load_dir(f"orientations/{family}")]
        assert [n.rsplit("/", 1)[-1] for n in orientation_names(family, bits)] == loaded
