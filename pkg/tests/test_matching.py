"""Equation building, screening, and matching-configuration enumeration."""

from hypothesis import given
from hypothesis import strategies as st

from copycup.matching import (
    build_equations,
    conditions_consistent,
    count_raw_matchings,
    enumerate_configurations,
    screen,
)
from copycup.orientation import CupVariant

NA = CupVariant.NON_ASSOCIATIVE
SYM = CupVariant.SYMMETRIC


def test_weight4_112_equation_terms():
    eqs = build_equations(4, (1, 1, 2), 2, NA)
    live = [eq for eq in eqs if not eq.is_empty]
    assert len(live) == 1
    assert {"".join(str(i) for i in t) for t in live[0].terms} == {"31", "41", "23", "24"}


def test_weight4_130_equation_terms():
    eqs = build_equations(4, (1, 3, 0), 2, NA)
    live = [eq for eq in eqs if not eq.is_empty]
    assert len(live) == 1
    assert {"".join(str(i) for i in t) for t in live[0].terms} == {
        "23", "24", "32", "34", "42", "43"
    }


def test_weight4_220_nonassoc_triple_terms():
    eqs = build_equations(4, (2, 2, 0), 3, NA)
    triple = [eq for eq in eqs if eq.terms and len(eq.terms[0]) == 3]
    assert len(triple) == 1
    assert {"".join(str(i) for i in t) for t in triple[0].terms} == {
        "341", "342", "431", "432"
    }


def test_screen_rejects_odd_and_singular():
    res = screen(build_equations(3, (1, 1, 1), 3, NA))
    assert not res.viable
    res5 = screen(build_equations(5, (1, 1, 3), 3, NA))
    assert not res5.viable
    assert screen(build_equations(4, (1, 1, 2), 2, NA)).viable


def test_configuration_counts_weight4():
    eqs = build_equations(4, (1, 1, 2), 2, NA)
    assert count_raw_matchings(eqs) == 3
    assert len(enumerate_configurations(eqs)) == 2
    eqs130 = build_equations(4, (1, 3, 0), 2, NA)
    assert len(enumerate_configurations(eqs130)) == 4
    eqs220 = build_equations(4, (2, 2, 0), 3, NA)
    assert len(enumerate_configurations(eqs220)) == 1
    assert len(enumerate_configurations(build_equations(4, (2, 2, 0), 3, SYM))) == 3


def test_conditions_consistent_examples():
    assert conditions_consistent(set())
    assert not conditions_consistent({((1, 2), (4, 5)), ((1, 2), (4, 6))})
    assert conditions_consistent({((3, 1), (2, 4)), ((4, 1), (2, 3))})


relations = st.sets(
    st.tuples(
        st.tuples(st.integers(1, 5), st.integers(1, 5)),
        st.tuples(st.integers(1, 5), st.integers(1, 5)),
    ),
    max_size=6,
)


@given(relations, st.tuples(st.tuples(st.integers(1, 5), st.integers(1, 5)),
                            st.tuples(st.integers(1, 5), st.integers(1, 5))))
def test_consistency_is_monotone_under_removal(rels, extra):
    # adding a relation can only break consistency, never restore it
    if not conditions_consistent(rels):
        assert not conditions_consistent(rels | {extra})


@given(relations)
def test_consistency_invariant_under_symmetric_closure(rels):
    flipped = {(u, t) for t, u in rels}
    assert conditions_consistent(rels) == conditions_consistent(rels | flipped)


def test_every_configuration_is_consistent():
    for sig, lam, variant in [
        ((1, 1, 2), 2, NA),
        ((1, 3, 0), 2, NA),
        ((2, 2, 0), 3, NA),
        ((2, 2, 0), 3, SYM),
    ]:
        weight = sum(sig)
        for conf in enumerate_configurations(build_equations(weight, sig, lam, variant)):
            assert conditions_consistent(conf.conditions.relations)
