import pytest

from admchar import (
    CoefficientSolver,
    Composition,
    OracleStore,
    QPolynomial,
    block_cancellation_count,
    block_composition,
    block_satisfies_initial,
    compositions,
    compute_character,
    enumerate_first_blocks,
    first_mismatch,
    recurrence_lhs,
    recurrence_rhs,
    solve_character,
    solve_coefficient,
    verify_equality_identity,
    verify_recurrence,
)
from oracles import gap_partitions


def qp(coeffs, trunc):
    return QPolynomial.from_coeffs(coeffs, trunc)


def test_character_of_single_particle_column():
    ch = compute_character(Composition((1, 0)), 5)
    assert ch.get((0,)) == QPolynomial.one(5)
    assert ch.get((1,)) == qp([0, 1, 1, 1, 1, 1], 5)

    ch = compute_character(Composition((0, 1)), 5)
    assert ch.get((1,)) == qp([0, 0, 1, 1, 1, 1], 5)


def test_zero_weight_is_always_one():
    for parts in [(1, 0), (0, 3), (2, 1, 0), (0, 0, 2)]:
        ch = compute_character(Composition(parts), 6)
        zero = (0,) * ch.composition.rank
        assert ch.get(zero) == QPolynomial.one(6)


def test_recurrence_lhs_structure():
    store = OracleStore(8)
    # a single-index family: the sum is the character itself
    K = Composition((0, 0, 2))
    assert first_mismatch(recurrence_lhs(K, 8, store), store.get(K)) is None

    # one nonzero movable part: chi(K) - chi(K with the unit moved)
    K = Composition((2, 0, 0))
    expected = store.get(K) - store.get(Composition((1, 1, 0)))
    assert first_mismatch(recurrence_lhs(K, 8, store), expected) is None

    # two movable parts: four signed terms
    K = Composition((1, 1, 0))
    expected = (
        store.get(K)
        - store.get(Composition((0, 2, 0)))
        - store.get(Composition((1, 0, 1)))
        + store.get(Composition((0, 1, 1)))
    )
    assert first_mismatch(recurrence_lhs(K, 8, store), expected) is None


def test_recurrence_holds_rank1_level1():
    report = verify_recurrence(1, 1, 10)
    assert report.all_ok
    assert [c.composition for c in report.checks] == [(0, 1), (1, 0)]


def test_recurrence_holds_rank2_level2():
    report = verify_recurrence(2, 2, 10)
    assert report.all_ok
    assert len(report.checks) == 6


def test_recurrence_mismatch_is_pinpointed():
    store = OracleStore(6)
    K = Composition((1, 0))
    lhs = recurrence_lhs(K, 6, store)
    rhs = recurrence_rhs(K, 6, store)
    coeffs = list(rhs.table[(1,)].coeffs)
    coeffs[2] += 1
    rhs.table[(1,)] = QPolynomial(6, tuple(coeffs))
    n, d, left, right = first_mismatch(lhs, rhs)
    assert (n, d) == ((1,), 2)
    assert right == left + 1


def test_report_serialization_shape():
    payload = verify_recurrence(1, 1, 6).to_jsonable()
    assert payload["ell"] == 1 and payload["k"] == 1 and payload["M"] == 6
    assert payload["all_ok"] is True
    for check in payload["checks"]:
        assert check["mismatch"] is None
        assert check["index_sets"][0] == []


def test_first_blocks_examples():
    assert enumerate_first_blocks(Composition((0, 0, 3))) == [(0, 0)]
    assert enumerate_first_blocks(Composition((1, 0))) == [(0,), (1,)]
    got = enumerate_first_blocks(Composition((1, 1, 0)))
    assert set(got) == {(0, 0), (1, 0), (0, 1), (1, 1), (0, 2)}
    assert got == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1)]  # (total, lex) order


def test_block_helpers():
    K = Composition((1, 1, 0))
    assert block_satisfies_initial((0, 2), K)
    assert not block_satisfies_initial((2, 0), K)
    assert block_composition(K, (0, 2)).parts == (0, 0, 2)
    assert block_composition(K, (0, 0)).parts == (2, 0, 0)


def test_solver_base_case_and_frozen_values():
    assert solve_coefficient(Composition((2, 1, 0)), (0, 0), 7) == QPolynomial.one(7)
    assert solve_coefficient(Composition((1, 0)), (1,), 5) == qp([0, 1, 1, 1, 1, 1], 5)
    # pairs of parts differing by at least two: 1+3, 1+4, then 1+5 and 2+4
    assert solve_coefficient(Composition((1, 0)), (2,), 6) == qp(
        [0, 0, 0, 0, 1, 1, 2], 6
    )


def test_solver_zero_for_negative_weight():
    solver = CoefficientSolver(5)
    assert solver.coefficient(Composition((1, 0)), (-1,)).is_zero()


def test_solver_matches_oracle_on_mixed_compositions():
    for parts in [(1, 0), (0, 2), (2, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1, 1)]:
        K = Composition(parts)
        assert (
            first_mismatch(solve_character(K, 8), compute_character(K, 8)) is None
        ), parts


def test_solver_memo_is_shared_across_calls():
    solver = CoefficientSolver(8)
    for K in compositions(2, 2):
        solver.character(K)
    K = Composition((1, 1, 0))
    again = solver.coefficient(K, (2, 1))
    assert again == compute_character(K, 8).get((2, 1))


def test_solver_output_valuation():
    solver = CoefficientSolver(8)
    for K in compositions(2, 2):
        ch = solver.character(K)
        for n, p in ch.table.items():
            assert p.valuation() >= sum(n)


def test_solve_character_truncation_zero():
    ch = solve_character(Composition((1, 1, 0)), 0)
    assert set(ch.table) == {(0, 0)}
    assert ch.get((0, 0)) == QPolynomial.one(0)


def test_equality_identity_examples():
    store = OracleStore(8)
    assert verify_equality_identity(Composition((0, 1)), (1,), 8, store)
    assert verify_equality_identity(Composition((1, 0)), (0,), 8, store)
    for K in compositions(2, 2):
        for n in [(0, 0), (1, 0), (2, 1), (3, 1), (2, 2)]:
            assert verify_equality_identity(K, n, 8, store), (K.parts, n)


def test_block_cancellation_count_examples():
    K = Composition((1, 1, 0))
    for block in enumerate_first_blocks(K):
        expected = 0 if block == K.first_block() else 1
        assert block_cancellation_count(K, block) == expected, block


@pytest.mark.parametrize("parts", [(1, 0), (0, 1)])
def test_rogers_ramanujan_specialization(parts):
    min_part = 1 if parts == (1, 0) else 2
    ch = compute_character(Composition(parts), 20)
    series = ch.specialize_ones()
    for d in range(21):
        assert series.coeffs[d] == len(gap_partitions(d, min_part)), d
