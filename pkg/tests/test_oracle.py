import itertools

import pytest

from idemzeros.digit_tables import PivotSet
from idemzeros.errors import GuardExceededError
from idemzeros.fourier import idempotent_from_spectrum, zero_set
from idemzeros.oracle import brute_force_solutions, compare_with_theorem
from idemzeros.zn_core import IndexSet, ModulusContext


def test_n4_vanish_at_index_2():
    sols = brute_force_solutions(4, IndexSet.of(4, [2]))
    assert {s.members for s in sols} == {
        (),
        (0, 1),
        (0, 3),
        (1, 2),
        (2, 3),
        (0, 1, 2, 3),
    }


def test_n6_exact_nonexistence():
    assert brute_force_solutions(6, IndexSet.of(6, [2, 3, 4]), "exact-zero-set") == []


def test_n6_vanish_at_least():
    sols = brute_force_solutions(6, IndexSet.of(6, [2, 3, 4]))
    assert {s.members for s in sols} == {(), tuple(range(6))}


def test_exact_mode_is_filtered_vanish_mode():
    N = 8
    target = IndexSet.of(N, [2, 6])
    exact = {s.members for s in brute_force_solutions(N, target, "exact-zero-set")}
    vanish = brute_force_solutions(N, target)
    refiltered = {
        s.members
        for s in vanish
        if zero_set(idempotent_from_spectrum(s)).zero_set == target
    }
    assert exact == refiltered


def test_oracle_solutions_have_structured_zero_sets():
    for s in brute_force_solutions(9, IndexSet.of(9, [3])):
        assert zero_set(idempotent_from_spectrum(s)).structure_ok


def test_combination_mode_agrees_with_mask_mode():
    N, zeros = 8, IndexSet.of(8, [4])
    capped = brute_force_solutions(N, zeros, max_cardinality=3)
    full = [s for s in brute_force_solutions(N, zeros) if len(s) <= 3]
    assert capped == full


def test_guard_raises():
    with pytest.raises(GuardExceededError):
        brute_force_solutions(25, IndexSet.of(25, [5]))


def test_compare_with_theorem_small():
    for N, mc in ((4, (0,)), (8, (2,)), (9, (1,)), (16, (0, 2))):
        report = compare_with_theorem(ModulusContext.of(N), PivotSet.of(mc))
        assert report.passed, (N, mc, report.only_oracle, report.only_theorem)


def test_compare_with_theorem_capped():
    report = compare_with_theorem(ModulusContext.of(25), PivotSet.of([1]), max_cardinality=5)
    assert report.passed
    assert report.oracle_count == report.theorem_count > 0
