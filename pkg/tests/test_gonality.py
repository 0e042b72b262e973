from __future__ import annotations

import pytest

from conftest import FIXTURE_D_PRIME
from gonq import (
    CapExceededError,
    Divisor,
    complete_graph,
    divisor_degree,
    enumerate_positive_rank_classes,
    equivalent,
    gonality_exact_small,
    gonality_upper_bound,
    has_positive_rank,
    indep_divisor,
    is_effective,
    max_independent_sets,
    poorest_row_chips,
    q_reduce,
    queen_alpha_formula,
    queen_gonality_formula,
    queen_graph,
    row_equitable_representative,
    toroidal_alpha_formula,
    toroidal_gonality_formula,
    toroidal_queen_graph,
    verify_correspondence,
)


# -- indep_divisor -----------------------------------------------------------------


def test_indep_divisor_q22():
    g = queen_graph(2, 2)
    d = indep_divisor(g, {0})
    assert d == Divisor([0, 1, 1, 1]) and divisor_degree(d) == 3


def test_indep_divisor_empty_set_gives_all_ones():
    g = queen_graph(3, 3)
    assert indep_divisor(g, set()) == Divisor([1] * 9)


def test_indep_divisor_rejects_attacking_queens():
    g = queen_graph(3, 3)
    with pytest.raises(ValueError):
        indep_divisor(g, {0, 1})


# -- upper bound --------------------------------------------------------------------


def test_upper_bound_values():
    assert gonality_upper_bound(queen_graph(3, 3)).value == 7
    assert gonality_upper_bound(toroidal_queen_graph(5, 5)).value == 20
    assert gonality_upper_bound(complete_graph(4)).value == 3


def test_upper_bound_witness_is_sound():
    report = gonality_upper_bound(queen_graph(4, 3))
    assert report.method == "upper-bound-only"
    assert divisor_degree(report.witness) == report.value
    assert has_positive_rank(queen_graph(4, 3), report.witness)


# -- formulas -----------------------------------------------------------------------


def test_queen_gonality_values():
    assert queen_gonality_formula(2, 2) == 3
    assert queen_gonality_formula(3, 3) == 7
    assert queen_gonality_formula(8, 8) == 56
    assert queen_gonality_formula(5, 4) == 16
    assert queen_gonality_formula(4, 5) == 16


def test_toroidal_gonality_values():
    assert toroidal_gonality_formula(5, 5) == 20
    assert toroidal_gonality_formula(4, 4) == 14
    assert toroidal_gonality_formula(4, 6) == 22
    assert toroidal_gonality_formula(2, 2) == 3


def test_gonality_formula_identities():
    for n in range(2, 13):
        for m in range(n, 13):
            assert queen_gonality_formula(m, n) == m * n - queen_alpha_formula(m, n)
            assert toroidal_gonality_formula(m, n) == m * n - toroidal_alpha_formula(m, n)


def test_formula_domain_errors():
    with pytest.raises(ValueError):
        queen_gonality_formula(1, 4)
    with pytest.raises(ValueError):
        toroidal_gonality_formula(4, 1)


# -- class enumeration ----------------------------------------------------------------


def test_q33_classes_match_placement_count():
    g = queen_graph(3, 3)
    classes = enumerate_positive_rank_classes(g, 7)
    _, sets = max_independent_sets(g)
    assert len(classes) == len(sets) == 8


def test_no_classes_below_gonality():
    assert enumerate_positive_rank_classes(queen_graph(2, 2), 2) == []


def test_fixture_has_no_positive_rank_degree_one(fixture_graph):
    assert enumerate_positive_rank_classes(fixture_graph, 1) == []


def test_class_reps_are_reduced_effective_and_sorted(fixture_graph):
    classes = enumerate_positive_rank_classes(fixture_graph, 2)
    assert classes
    values = [tuple(d.values.tolist()) for d in classes]
    assert values == sorted(values)
    for d in classes:
        assert is_effective(d)
        reduced, _ = q_reduce(fixture_graph, d, 0)
        assert reduced == d
        assert has_positive_rank(fixture_graph, d)


def test_class_enumeration_threads_match_serial(fixture_graph):
    a = enumerate_positive_rank_classes(fixture_graph, 2, threads=1)
    b = enumerate_positive_rank_classes(fixture_graph, 2, threads=4)
    assert a == b


def test_class_enumeration_cap():
    with pytest.raises(CapExceededError):
        enumerate_positive_rank_classes(queen_graph(3, 3), 7, max_compositions=100)


# -- exact search ----------------------------------------------------------------------


def test_exact_gonality_small_boards(fixture_graph):
    assert gonality_exact_small(queen_graph(2, 2)).value == 3
    assert gonality_exact_small(toroidal_queen_graph(2, 2)).value == 3
    report = gonality_exact_small(fixture_graph)
    assert report.value == 2 and report.method == "exact-search"
    assert has_positive_rank(fixture_graph, report.witness)
    assert equivalent(fixture_graph, report.witness, FIXTURE_D_PRIME) or is_effective(
        report.witness
    )


def test_exact_gonality_degrades_to_bound_under_tiny_cap():
    report = gonality_exact_small(queen_graph(3, 3), max_compositions=5)
    assert report.method == "upper-bound-only" and report.value == 7


# -- correspondence ----------------------------------------------------------------------


def test_correspondence_q33():
    rep = verify_correspondence(queen_graph(3, 3))
    assert rep.matched and rep.degree == 7
    assert len(rep.mis_list) == len(rep.class_reps) == 8


def test_correspondence_tq33_singleton_classes():
    rep = verify_correspondence(toroidal_queen_graph(3, 3))
    assert rep.matched and rep.degree == 8
    assert len(rep.class_reps) == 9


def test_correspondence_injective_only_mode():
    g = queen_graph(4, 4)
    rep = verify_correspondence(g, full=False)
    assert rep.matched and len(rep.class_reps) == 2


def test_correspondence_injective_only_q88():
    rep = verify_correspondence(queen_graph(8, 8), full=False)
    assert rep.matched and rep.degree == 56
    assert len(rep.class_reps) == 92


def test_correspondence_detects_wrong_degree(fixture_graph):
    rep = verify_correspondence(fixture_graph, degree=3)
    assert not rep.matched


# -- row equitability ----------------------------------------------------------------------


def test_poorest_row_examples():
    g = queen_graph(8, 8)
    _, sets = max_independent_sets(g)
    assert poorest_row_chips(g, indep_divisor(g, sets[0])) == 7
    assert poorest_row_chips(g, Divisor.zero(64)) == 0
    heap = Divisor([5] + [0] * 63)
    assert poorest_row_chips(g, heap) == 0
    with pytest.raises(ValueError):
        poorest_row_chips(complete_graph(4), Divisor.zero(4))


def test_all_ones_q33_already_row_equitable():
    g = queen_graph(3, 3)
    ones = Divisor([1] * 9)
    assert row_equitable_representative(g, ones) == ones


def test_zero_divisor_row_equitable_unchanged():
    g = queen_graph(3, 2)
    assert row_equitable_representative(g, Divisor.zero(6)) == Divisor.zero(6)


def test_row_equitable_spreads_a_heap():
    # Three chips on one vertex of the 2x2 board: the class contains
    # (0,1,1,1)-type divisors whose poorest row holds one chip.
    g = queen_graph(2, 2)
    heap = Divisor([3, 0, 0, 0])
    balanced = row_equitable_representative(g, heap)
    assert poorest_row_chips(g, balanced) == 1
    assert equivalent(g, heap, balanced)
    assert poorest_row_chips(g, heap) == 0


def test_q44_gonality_divisor_is_row_equitable_by_pigeonhole():
    # Degree 12 over 4 rows caps any row profile at min <= 3; the
    # placement divisor achieves 3 on every row, so it is row-equitable.
    g = queen_graph(4, 4)
    _, sets = max_independent_sets(g)
    d = indep_divisor(g, sets[0])
    assert divisor_degree(d) == 12
    assert poorest_row_chips(g, d) == 3 == divisor_degree(d) // 4


def test_row_equitable_requires_effective_class():
    g = queen_graph(2, 2)
    with pytest.raises(ValueError):
        row_equitable_representative(g, Divisor([-1, 0, 0, 0]))


def test_row_equitable_respects_cap():
    g = queen_graph(3, 3)
    with pytest.raises(CapExceededError):
        row_equitable_representative(g, Divisor([1] * 9), max_compositions=3)
