import itertools
import random

import pytest

from idemzeros.digit_tables import (
    ConformingTable,
    DigitTable,
    PivotSet,
    decompose,
    enumerate_solutions,
    from_index_set,
    generate_conforming,
    is_conforming,
    is_solution,
    mc_star,
    pivot_columns,
    to_index_set,
)
from idemzeros.errors import DigitChoiceError, NonPrimePowerError, PreconditionError
from idemzeros.fourier import idempotent_from_spectrum, zero_set
from idemzeros.zn_core import (
    DivisorSpec,
    IndexSet,
    ModulusContext,
    bracelet,
    expand_zero_spec,
)
from idemzeros.digit_tables import singleton_multiset_check


def test_digit_round_trip():
    ctx = ModulusContext.of(27)
    J = IndexSet.of(27, [0, 5, 13, 26])
    assert to_index_set(from_index_set(ctx, J)) == J
    with pytest.raises(NonPrimePowerError):
        from_index_set(ModulusContext.of(12), IndexSet.of(12, [0]))


def test_digit_order_is_little_endian():
    ctx = ModulusContext.of(8)
    table = from_index_set(ctx, IndexSet.of(8, [6]))
    assert table.rows == ((0, 1, 1),)


def test_pivot_columns_examples():
    t = DigitTable(2, 3, ((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)))
    assert pivot_columns(t).columns == (0, 1)
    t2 = DigitTable(2, 3, ((0, 0, 0), (0, 1, 1)))
    assert pivot_columns(t2).columns == (1,)
    t3 = DigitTable(2, 3, ((0, 0, 0), (1, 1, 0)))
    assert pivot_columns(t3).columns == (0,)


def test_conforming_validation():
    ConformingTable(2, 2, ((0, 0), (1, 1)))
    with pytest.raises(ValueError):
        ConformingTable(2, 2, ((0, 0), (1, 1), (0, 1)))


def test_mc_star_involution():
    for M in range(1, 6):
        cols = list(range(M))
        for r in range(M + 1):
            for sub in itertools.combinations(cols, r):
                mc = PivotSet.of(sub)
                assert mc_star(M, mc_star(M, mc)) == mc


def test_decompose_round_trip():
    rng = random.Random(41)
    for N in (8, 9, 16, 27):
        ctx = ModulusContext.of(N)
        for _ in range(25):
            size = ctx.p ** rng.randint(1, ctx.M)
            J = IndexSet.of(N, rng.sample(range(N), size))
            table = from_index_set(ctx, J)
            if not is_conforming(table) or not pivot_columns(table).columns:
                continue
            prefix, blocks = decompose(table)
            rows = sorted(r for b in blocks for r in b.rows)
            assert tuple(rows) == table.rows
            assert all(r[: len(prefix)] == prefix for r in rows)
            assert all(is_conforming(b) for b in blocks)


def test_generate_conforming_examples():
    ctx8 = ModulusContext.of(8)
    t = generate_conforming(ctx8, PivotSet.of([0]), (0, 2))
    assert to_index_set(t).members == (0, 3)
    ctx4 = ModulusContext.of(4)
    t = generate_conforming(ctx4, PivotSet.of([1]), (0, 0))
    assert to_index_set(t).members == (0, 2)
    t = generate_conforming(ctx8, PivotSet.of([0, 1]), ((0, (0, 0)), (0, (0, 0))))
    assert to_index_set(t).members == (0, 1, 2, 3)
    with pytest.raises(DigitChoiceError):
        generate_conforming(ctx8, PivotSet.of([0]), (0, 1))


def test_pivot_invariance_on_bracelets():
    rng = random.Random(43)
    for N in (8, 9, 16, 27):
        ctx = ModulusContext.of(N)
        for _ in range(25):
            J = IndexSet.of(N, rng.sample(range(N), rng.randint(2, min(N, 6))))
            base = pivot_columns(from_index_set(ctx, J))
            for K in bracelet(J):
                assert pivot_columns(from_index_set(ctx, K)) == base


def test_is_solution_certificate():
    ctx = ModulusContext.of(8)
    check = is_solution(ctx, IndexSet.of(8, [0, 1, 4, 7]), PivotSet.of([2]))
    assert check.ok
    union: set[int] = set()
    for block in check.certificate:
        assert not union & set(block.members)
        union.update(block.members)
        table = from_index_set(ctx, block)
        assert is_conforming(table)
        assert pivot_columns(table) == mc_star(3, PivotSet.of([2]))
    assert union == {0, 1, 4, 7}
    assert not is_solution(ctx, IndexSet.of(8, [0, 1, 2]), PivotSet.of([2])).ok
    assert is_solution(ctx, IndexSet.of(8, []), PivotSet.of([2])).ok


def test_enumeration_n4_worked_example():
    ctx = ModulusContext.of(4)
    by_mc = {
        (1,): {(), (0, 1), (0, 3), (1, 2), (2, 3), (0, 1, 2, 3)},
        (0,): {(), (0, 2), (1, 3), (0, 1, 2, 3)},
        (0, 1): {(), (0, 1, 2, 3)},
    }
    for mc, expected in by_mc.items():
        got = {J.members for J in enumerate_solutions(ctx, PivotSet.of(mc))}
        assert got == expected


def test_enumeration_soundness():
    for N, mc in ((8, (1,)), (9, (0,)), (16, (1, 3)), (27, (0, 2))):
        ctx = ModulusContext.of(N)
        spec = DivisorSpec.of(N, (ctx.p**l for l in mc))
        required = set(expand_zero_spec(spec).members)
        for J in enumerate_solutions(ctx, PivotSet.of(mc), max_cardinality=9):
            zeros = set(zero_set(idempotent_from_spectrum(J)).zero_set.members)
            assert required <= zeros
            assert len(J) % ctx.p ** len(mc) == 0


def test_enumeration_matches_membership_test():
    ctx = ModulusContext.of(9)
    mc = PivotSet.of([1])
    enumerated = {J.members for J in enumerate_solutions(ctx, mc)}
    for members in map(tuple, itertools.chain.from_iterable(
        itertools.combinations(range(9), k) for k in range(10)
    )):
        J = IndexSet(9, members)
        assert (members in enumerated) == is_solution(ctx, J, mc).ok


def test_singleton_multiset_check():
    assert singleton_multiset_check(ModulusContext.of(8), IndexSet.of(8, [0, 4]), 0)
    assert singleton_multiset_check(ModulusContext.of(4), IndexSet.of(4, [0, 2]), 0)
    with pytest.raises(PreconditionError):
        singleton_multiset_check(ModulusContext.of(8), IndexSet.of(8, [0, 3]), 0)
    with pytest.raises(PreconditionError):
        singleton_multiset_check(ModulusContext.of(8), IndexSet.of(8, [4]), 0)
