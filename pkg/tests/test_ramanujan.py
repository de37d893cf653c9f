import pytest

from idemzeros.digit_tables import PivotSet, enumerate_solutions
from idemzeros.errors import InvalidDivisorError
from idemzeros.ramanujan import (
    annihilation_check,
    euler_phi,
    gcd_class_exponential_sum,
    mobius,
    ramanujan_direct,
    ramanujan_mobius,
    ramanujan_prime_power,
)
from idemzeros.zn_core import IndexSet, ModulusContext, proper_divisors, translate


def test_euler_phi_small():
    assert [euler_phi(n) for n in (1, 2, 4, 9, 12, 27)] == [1, 1, 2, 6, 4, 18]


def test_prime_power_cases():
    assert ramanujan_prime_power(2, 2, 1) == 0
    assert ramanujan_prime_power(2, 2, 2) == -2
    assert ramanujan_prime_power(2, 2, 4) == 2
    with pytest.raises(ValueError):
        ramanujan_prime_power(6, 1, 0)


def test_q4_values():
    assert [ramanujan_direct(4, k) for k in range(5)] == [2, 0, -2, 0, 2]


def test_closed_form_matches_direct():
    for p in (2, 3, 5):
        for m in range(1, 5):
            if p**m > 64:
                continue
            for k in range(0, 2 * p**m + 1):
                assert ramanujan_prime_power(p, m, k) == ramanujan_direct(p**m, k)


def test_mobius_identity_matches_direct():
    for q in range(1, 49):
        for k in range(0, q + 1):
            assert ramanujan_mobius(q, k) == ramanujan_direct(q, k)


def test_gcd_class_sum_reduces_to_lower_order():
    for q in range(1, 49):
        for d in (d for d in range(1, q + 1) if q % d == 0):
            for k in range(0, q + 1, max(1, q // 7)):
                assert gcd_class_exponential_sum(q, d, k) == ramanujan_direct(q // d, k)
    with pytest.raises(InvalidDivisorError):
        gcd_class_exponential_sum(12, 5, 0)


def test_even_and_periodic():
    for q in (5, 8, 9, 12, 48):
        for k in range(-2 * q, 2 * q + 1):
            assert ramanujan_direct(q, k) == ramanujan_direct(q, -k)
            assert ramanujan_direct(q, k) == ramanujan_direct(q, k + q)


def test_mobius_squarefree():
    assert [mobius(n) for n in (1, 2, 3, 4, 6, 30)] == [1, -1, -1, 0, 1, -1]


def test_annihilation_on_enumerated_solutions():
    for N, l in ((8, 1), (9, 0), (16, 2)):
        ctx = ModulusContext.of(N)
        dprime = ctx.p ** (ctx.M - l)
        for J in enumerate_solutions(ctx, PivotSet.of([l])):
            if not J.members:
                continue
            for shift in range(N):
                assert annihilation_check(J, dprime, shift)
