import math
import random

import pytest
from hypothesis import given, strategies as st

from idemzeros.errors import InvalidDivisorError, ModulusMismatchError
from idemzeros.zn_core import (
    DivisorSpec,
    IndexSet,
    ModulusContext,
    bracelet,
    canonical_bracelet_rep,
    expand_zero_spec,
    factorize,
    gcd_class,
    proper_divisors,
    reverse,
    same_modulus,
    translate,
)


def random_index_set(rng: random.Random, N: int) -> IndexSet:
    size = rng.randint(0, N)
    return IndexSet.of(N, rng.sample(range(N), size))


def test_factorize_reconstructs():
    for n in range(1, 200):
        prod = 1
        for p, e in factorize(n):
            prod *= p**e
        assert prod == n


def test_modulus_context_prime_power():
    ctx = ModulusContext.of(27)
    assert ctx.is_prime_power and ctx.p == 3 and ctx.M == 3
    assert not ModulusContext.of(12).is_prime_power


def test_index_set_dedup_and_order():
    s = IndexSet.of(8, [5, 1, 1, 13])
    assert s.members == (1, 5)
    assert s.mask == 0b100010
    assert IndexSet.from_mask(8, s.mask) == s
    assert IndexSet.from_json(s.to_json()) == s


def test_index_set_rejects_bad_members():
    with pytest.raises(ValueError):
        IndexSet(4, (0, 4))
    with pytest.raises(ValueError):
        IndexSet(4, (2, 1))


def test_divisor_spec_validation():
    DivisorSpec.of(12, [1, 2, 6])
    with pytest.raises(InvalidDivisorError):
        DivisorSpec.of(12, [5])
    with pytest.raises(InvalidDivisorError):
        DivisorSpec.of(12, [12])


def test_gcd_classes_partition():
    for N in range(1, 65):
        ctx = ModulusContext.of(N)
        seen: set[int] = set()
        for k in proper_divisors(N) + (N,):
            cls = gcd_class(ctx, k).members
            assert all(math.gcd(i, N) == k for i in cls)
            assert not seen & set(cls)
            seen.update(cls)
        assert seen == set(range(N))


def test_expand_zero_spec_n4():
    assert expand_zero_spec(DivisorSpec.of(4, [2])).members == (2,)
    assert expand_zero_spec(DivisorSpec.of(4, [1])).members == (1, 3)
    assert expand_zero_spec(DivisorSpec.of(4, [1, 2])).members == (1, 2, 3)


@given(st.integers(2, 32), st.data())
def test_translate_composes_and_reverse_involutes(N, data):
    members = data.draw(st.sets(st.integers(0, N - 1)))
    a = data.draw(st.integers(-N, N))
    b = data.draw(st.integers(-N, N))
    s = IndexSet.of(N, members)
    assert translate(translate(s, a), b) == translate(s, a + b)
    assert reverse(reverse(s)) == s


def test_bracelet_size_divides_2n():
    rng = random.Random(7)
    for _ in range(200):
        N = rng.randint(2, 16)
        s = random_index_set(rng, N)
        assert (2 * N) % len(bracelet(s)) == 0


def test_canonical_rep_constant_on_bracelet():
    rng = random.Random(11)
    for _ in range(200):
        N = rng.randint(2, 12)
        s = random_index_set(rng, N)
        rep = canonical_bracelet_rep(s)
        assert canonical_bracelet_rep(rep) == rep
        for member in bracelet(s):
            assert canonical_bracelet_rep(member) == rep


def test_bracelet_examples_n8():
    b = bracelet(IndexSet.of(8, [0, 1]))
    assert IndexSet.of(8, [0, 7]) in b
    assert all(IndexSet.of(8, [k, k + 1]) in b for k in range(7))
    assert not b & bracelet(IndexSet.of(8, [0, 3]))
    assert canonical_bracelet_rep(IndexSet.of(8, [0, 5])) == IndexSet.of(8, [0, 3])


def test_same_modulus():
    assert same_modulus(IndexSet.of(6, [1]), IndexSet.of(6, [2])) == 6
    with pytest.raises(ModulusMismatchError):
        same_modulus(IndexSet.of(6, [1]), IndexSet.of(7, [1]))
