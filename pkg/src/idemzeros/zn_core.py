"""Arithmetic and combinatorics on Z_N: gcd classes, divisor specs, bracelets.

All values here are immutable; an ``IndexSet`` stores its members as a strictly
sorted tuple so that set equality is plain sequence equality and output is
deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import InvalidDivisorError, ModulusMismatchError, NonPrimePowerError


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n as ((prime, exponent), ...), ascending primes."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def proper_divisors(n: int) -> tuple[int, ...]:
    """Divisors of n below n itself (includes 1 for n > 1), ascending."""
    return tuple(d for d in range(1, n) if n % d == 0)


@dataclass(frozen=True)
class ModulusContext:
    N: int
    factorization: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, N: int) -> "ModulusContext":
        if N < 1:
            raise ValueError(f"modulus must be positive, got {N}")
        return cls(N, factorize(N))

    @property
    def is_prime_power(self) -> bool:
        return len(self.factorization) == 1

    @property
    def p(self) -> int:
        if not self.is_prime_power:
            raise NonPrimePowerError(f"N={self.N} is not a prime power")
        return self.factorization[0][0]

    @property
    def M(self) -> int:
        if not self.is_prime_power:
            raise NonPrimePowerError(f"N={self.N} is not a prime power")
        return self.factorization[0][1]


@dataclass(frozen=True, order=True)
class IndexSet:
    """A finite subset of Z_N, stored as a strictly sorted member tuple."""

    modulus: int
    members: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        prev = -1
        for m in self.members:
            if not prev < m < self.modulus:
                raise ValueError(
                    f"members must be strictly sorted residues mod {self.modulus}: {self.members}"
                )
            prev = m

    @classmethod
    def of(cls, modulus: int, members: Iterable[int]) -> "IndexSet":
        return cls(modulus, tuple(sorted({m % modulus for m in members})))

    @classmethod
    def from_mask(cls, modulus: int, mask: int) -> "IndexSet":
        return cls(modulus, tuple(i for i in range(modulus) if mask >> i & 1))

    @property
    def mask(self) -> int:
        return sum(1 << m for m in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, item: int) -> bool:
        return item in self.members

    def to_json(self) -> dict:
        return {"N": self.modulus, "members": list(self.members)}

    @classmethod
    def from_json(cls, obj: dict) -> "IndexSet":
        return cls.of(int(obj["N"]), obj["members"])


@dataclass(frozen=True)
class DivisorSpec:
    """A set of proper divisors of N, selecting the zero classes to impose."""

    modulus: int
    divisors: tuple[int, ...]

    def __post_init__(self):
        prev = 0
        for d in self.divisors:
            if not prev < d < self.modulus or self.modulus % d != 0:
                raise InvalidDivisorError(
                    f"{d} is not a proper divisor of {self.modulus}"
                )
            prev = d

    @classmethod
    def of(cls, modulus: int, divisors: Iterable[int]) -> "DivisorSpec":
        return cls(modulus, tuple(sorted(set(divisors))))


def gcd_class(ctx: ModulusContext, k: int) -> IndexSet:
    """Residues i in Z_N with gcd(i, N) = k.  k = N is allowed and yields {0}."""
    if k < 1 or ctx.N % k != 0:
        raise InvalidDivisorError(f"{k} does not divide N={ctx.N}")
    return IndexSet(ctx.N, tuple(i for i in range(ctx.N) if math.gcd(i, ctx.N) == k))


def expand_zero_spec(spec: DivisorSpec) -> IndexSet:
    """Disjoint union of the gcd classes of all divisors in the spec."""
    ctx = ModulusContext.of(spec.modulus)
    members: set[int] = set()
    for d in spec.divisors:
        members.update(gcd_class(ctx, d).members)
    return IndexSet.of(spec.modulus, members)


def translate(s: IndexSet, k: int) -> IndexSet:
    """Shift every member by -k mod N."""
    return IndexSet.of(s.modulus, ((i - k) % s.modulus for i in s.members))


def reverse(s: IndexSet) -> IndexSet:
    """Negate every member mod N."""
    return IndexSet.of(s.modulus, ((-i) % s.modulus for i in s.members))


def bracelet(s: IndexSet) -> frozenset[IndexSet]:
    """Orbit of s under all translations and the reversal map."""
    rev = reverse(s)
    orbit = set()
    for k in range(s.modulus):
        orbit.add(translate(s, k))
        orbit.add(translate(rev, k))
    return frozenset(orbit)


def canonical_bracelet_rep(s: IndexSet) -> IndexSet:
    """Lexicographically smallest member sequence over the bracelet of s."""
    return min(bracelet(s), key=lambda t: t.members)


def same_modulus(*sets: IndexSet) -> int:
    moduli = {s.modulus for s in sets}
    if len(moduli) != 1:
        raise ModulusMismatchError(f"mixed moduli: {sorted(moduli)}")
    return moduli.pop()
