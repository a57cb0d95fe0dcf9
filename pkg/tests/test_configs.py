import pytest
from hypothesis import given, strategies as st

from admchar import (
    Composition,
    Configuration,
    ResourceLimitError,
    compositions,
    degree,
    enumerate_admissible,
    enumerate_all_configurations,
    enumerate_by_grade,
    is_admissible,
    satisfies_difference,
    satisfies_initial,
    weight,
    weight_vectors,
)
from oracles import naive_admissible

EMPTY = Configuration(())

entry_lists = st.lists(st.integers(min_value=0, max_value=3), max_size=8)
small_compositions = st.builds(
    Composition,
    st.lists(st.integers(min_value=0, max_value=3), min_size=2, max_size=4).map(tuple),
)


def test_canonical_form_trims_trailing_zeros():
    assert Configuration((1, 0, 2, 0, 0)).entries == (1, 0, 2)
    assert Configuration((0, 0)).entries == ()
    assert Configuration(()).entries == ()


def test_negative_entries_rejected():
    with pytest.raises(ValueError):
        Configuration((1, -1))


@given(entry_lists)
def test_canonicalization_idempotent(raw):
    once = Configuration(tuple(raw))
    twice = Configuration(once.entries)
    assert once == twice


def test_degree_examples():
    assert degree(EMPTY, 2) == 0
    assert degree(Configuration((1, 0, 2)), 2) == 5
    assert degree(Configuration((0, 1, 0, 1)), 1) == 6


def test_weight_examples():
    assert weight(EMPTY, 3) == (0, 0, 0)
    assert weight(Configuration((1, 0, 2)), 2) == (3, 0)
    assert weight(Configuration((0, 1)), 2) == (0, 1)


def test_difference_examples():
    assert satisfies_difference(EMPTY, 1, 0)
    assert not satisfies_difference(Configuration((1, 1)), 1, 1)
    assert satisfies_difference(Configuration((1, 0, 1)), 1, 1)


def test_initial_examples():
    K = Composition((1, 0))
    assert satisfies_initial(EMPTY, K)
    assert satisfies_initial(Configuration((1,)), K)
    assert not satisfies_initial(Configuration((2,)), K)
    assert not satisfies_initial(Configuration((1,)), Composition((0, 1)))


def test_admissibility_examples():
    assert is_admissible(EMPTY, Composition((0, 0, 2)))
    assert is_admissible(Configuration((1, 0, 1)), Composition((1, 0)))
    assert not is_admissible(Configuration((2, 1)), Composition((2, 0, 0)))


@given(entry_lists, st.integers(min_value=1, max_value=3))
def test_degree_dominates_particle_count(raw, rank):
    cfg = Configuration(tuple(raw))
    assert degree(cfg, rank) >= sum(weight(cfg, rank))


@given(entry_lists, small_compositions, st.integers(min_value=0, max_value=4))
def test_zero_padding_never_changes_predicates(raw, K, pad):
    cfg = Configuration(tuple(raw))
    padded = Configuration(cfg.entries + (0,) * pad)
    assert cfg == padded
    assert satisfies_initial(cfg, K) == satisfies_initial(padded, K)
    assert satisfies_difference(cfg, K.rank, K.level()) == satisfies_difference(
        padded, K.rank, K.level()
    )


def test_enumerate_matches_spec_counts():
    got = enumerate_admissible(Composition((1, 0)), 4)
    assert [c.entries for c in got] == [
        (),
        (1,),
        (0, 1),
        (0, 0, 1),
        (0, 0, 0, 1),
        (1, 0, 1),
    ]
    assert enumerate_admissible(Composition((1, 0)), 0) == [EMPTY]
    assert [c.entries for c in enumerate_admissible(Composition((0, 1)), 2)] == [
        (),
        (0, 1),
    ]


@pytest.mark.parametrize(
    "parts,max_degree",
    [
        ((1, 0), 4),
        ((0, 1), 4),
        ((2, 0), 4),
        ((1, 1), 4),
        ((1, 0, 1), 3),
        ((2, 0, 0), 3),
        ((0, 1, 1), 3),
        ((1, 1, 1), 3),
    ],
)
def test_enumeration_agrees_with_exhaustive_oracle(parts, max_degree):
    K = Composition(parts)
    got = enumerate_admissible(K, max_degree)
    assert len(set(got)) == len(got)
    assert {c.entries for c in got} == naive_admissible(K, max_degree)
    for cfg in got:
        assert is_admissible(cfg, K)
        assert degree(cfg, K.rank) <= max_degree


@given(
    st.sampled_from([(1, 0), (0, 1), (1, 1), (2, 0, 0), (1, 1, 0)]),
    st.integers(min_value=0, max_value=5),
    st.integers(min_value=0, max_value=5),
)
def test_enumeration_prefix_closed(parts, m1, m2):
    if m1 > m2:
        m1, m2 = m2, m1
    K = Composition(parts)
    small = enumerate_admissible(K, m1)
    large = enumerate_admissible(K, m2)
    assert large[: len(small)] == small


def test_enumeration_is_sorted_by_degree_then_entries():
    K = Composition((1, 1, 0))
    got = enumerate_admissible(K, 5)
    keys = [(degree(c, K.rank), c.entries) for c in got]
    assert keys == sorted(keys)


def test_enumeration_cap():
    with pytest.raises(ResourceLimitError):
        enumerate_admissible(Composition((1, 0)), 10, cap=3)


def test_enumerate_by_grade_examples():
    table = enumerate_by_grade(Composition((1, 0)), 4)
    assert [c.entries for c in table[(3, (1,))]] == [(0, 0, 1)]
    assert table[(0, (0,))] == [EMPTY]

    table = enumerate_by_grade(Composition((2, 0, 0)), 4)
    # a_0 = 2 is admissible since k_0 = 2, and two degree-1 particles make degree 2
    assert [c.entries for c in table[(2, (2, 0))]] == [(2,)]
    assert (1, (2, 0)) not in table


def test_enumerate_by_grade_partitions_the_enumeration():
    K = Composition((1, 1, 0))
    flat = enumerate_admissible(K, 5)
    table = enumerate_by_grade(K, 5)
    regrouped = [c for grade in table for c in table[grade]]
    assert sorted(regrouped, key=lambda c: (degree(c, K.rank), c.entries)) == flat
    for (d, n), cfgs in table.items():
        for c in cfgs:
            assert degree(c, K.rank) == d and weight(c, K.rank) == n


def test_enumerate_all_configurations_counts():
    # three-colored partitions of total degree <= 3: 1 + 3 + 9 + 22
    got = enumerate_all_configurations(3, 3)
    assert len(got) == 35
    assert len(set(got)) == 35


def test_compositions_and_weight_vectors():
    assert [K.parts for K in compositions(1, 2)] == [(0, 2), (1, 1), (2, 0)]
    assert len(compositions(2, 2)) == 6
    assert weight_vectors(2, 2) == [
        (0, 0),
        (0, 1),
        (1, 0),
        (0, 2),
        (1, 1),
        (2, 0),
    ]


def test_composition_validation():
    with pytest.raises(ValueError):
        Composition((3,))
    with pytest.raises(ValueError):
        Composition((1, -1))
    K = Composition((2, 0, 1))
    assert K.rank == 2
    assert K.level() == 3
    assert K.initial_bounds() == (2, 2)
    assert K.first_block() == (2, 0)
