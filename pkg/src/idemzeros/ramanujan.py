"""Ramanujan sums c_q(k) and the annihilation condition they induce.

Two independent exact routes are provided: the authoritative one sums roots of
unity through the cyclotomic backend; a Moebius divisor-sum identity serves as
an internal cross-check.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .cyclotomic import root_sum
from .errors import InvalidDivisorError
from .zn_core import IndexSet, factorize


def euler_phi(q: int) -> int:
    out = q
    for p, _ in factorize(q):
        out -= out // p
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def _constant_value(N: int, exponents) -> int:
    """Exact integer value of a root-of-unity sum known to be rational."""
    el = root_sum(N, exponents)
    coeffs = el.residue.coeffs
    if len(coeffs) > 1:
        raise AssertionError(f"sum over Z_{N} is not an integer: {coeffs}")
    return coeffs[0] if coeffs else 0


@lru_cache(maxsize=None)
def ramanujan_direct(q: int, k: int) -> int:
    """c_q(k) = sum of w_q^{nk} over n in Z_q coprime to q, evaluated exactly."""
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    k %= q
    return _constant_value(q, (n * k % q for n in range(q) if math.gcd(n, q) == 1))


def ramanujan_prime_power(p: int, m: int, k: int) -> int:
    """Closed form of c_{p^m}(k): 0, -p^{m-1}, or phi(p^m) by divisibility of k."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if k % p ** (m - 1) != 0:
        return 0
    if k % p**m != 0:
        return -(p ** (m - 1))
    return euler_phi(p**m)


def ramanujan_mobius(q: int, k: int) -> int:
    """Cross-check identity: c_q(k) = sum over d | gcd(k, q) of d * mu(q/d)."""
    g = math.gcd(k % q, q) or q
    return sum(d * mobius(q // d) for d in range(1, g + 1) if g % d == 0)


def mobius(n: int) -> int:
    fact = factorize(n)
    if any(e > 1 for _, e in fact):
        return 0
    return -1 if len(fact) % 2 else 1


def gcd_class_exponential_sum(q: int, d: int, k: int) -> int:
    """Sum of w_q^{nk} over n in Z_q with gcd(n, q) = d; equals c_{q/d}(k)."""
    if d < 1 or q % d != 0:
        raise InvalidDivisorError(f"{d} does not divide q={q}")
    k %= q
    return _constant_value(q, (n * k % q for n in range(q) if math.gcd(n, q) == d))


def annihilation_check(J: IndexSet, dprime: int, n_shift: int) -> bool:
    """True iff sum over j in J of c_{dprime}(n_shift + j) vanishes exactly."""
    if dprime < 1:
        raise ValueError(f"dprime must be positive, got {dprime}")
    return sum(ramanujan_direct(dprime, n_shift + j) for j in J) == 0
