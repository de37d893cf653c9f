"""DFT conventions, idempotent construction and zero-set computation.

Convention: the forward transform carries no 1/N factor, the inverse does.
An idempotent built from a spectrum indicator set J therefore satisfies
h(0) = |J|/N.  Zero sets are computed exactly through the cyclotomic backend
by default; float mode exists for speed and cross-checking.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .cyclotomic import is_zero, root_sum
from .errors import ModulusMismatchError
from .zn_core import DivisorSpec, IndexSet, expand_zero_spec, proper_divisors


@dataclass(frozen=True)
class Signal:
    modulus: int
    values: tuple[complex, ...]

    def __post_init__(self):
        if len(self.values) != self.modulus:
            raise ModulusMismatchError(
                f"signal length {len(self.values)} != modulus {self.modulus}"
            )

    @classmethod
    def of(cls, values) -> "Signal":
        vals = tuple(complex(v) for v in values)
        return cls(len(vals), vals)

    def to_numpy(self) -> np.ndarray:
        return np.array(self.values, dtype=complex)


@dataclass(frozen=True)
class Idempotent:
    """The idempotent whose DFT is the 0/1 indicator of ``spectrum``."""

    spectrum: IndexSet

    @property
    def modulus(self) -> int:
        return self.spectrum.modulus

    def evaluate(self, n: int) -> complex:
        N = self.modulus
        return sum(
            (cmath.exp(2j * cmath.pi * j * n / N) for j in self.spectrum), 0j
        ) / N

    def time_domain(self) -> Signal:
        return Signal.of([self.evaluate(n) for n in range(self.modulus)])


@dataclass(frozen=True)
class ZeroSetReport:
    zero_set: IndexSet
    zero_divisors: DivisorSpec
    structure_ok: bool


def _dft_matrix(N: int, sign: int) -> np.ndarray:
    k = np.arange(N)
    return np.exp(sign * 2j * np.pi * np.outer(k, k) / N)


def dft(x: Signal) -> Signal:
    out = _dft_matrix(x.modulus, -1) @ x.to_numpy()
    return Signal(x.modulus, tuple(out))


def idft(x: Signal) -> Signal:
    out = _dft_matrix(x.modulus, +1) @ x.to_numpy() / x.modulus
    return Signal(x.modulus, tuple(out))


def idempotent_from_spectrum(J: IndexSet) -> Idempotent:
    return Idempotent(J)


def is_idempotent(x: Signal, tol: float = 1e-9) -> bool:
    """True iff every DFT value of x is within tol of 0 or 1."""
    spec = dft(x).to_numpy()
    return bool(np.all(np.minimum(np.abs(spec), np.abs(spec - 1)) < tol))


def circular_convolution(x: Signal, y: Signal) -> Signal:
    if x.modulus != y.modulus:
        raise ModulusMismatchError(f"moduli differ: {x.modulus} != {y.modulus}")
    N = x.modulus
    a, b = x.to_numpy(), y.to_numpy()
    out = np.array([np.sum(a * b[(n - np.arange(N)) % N]) for n in range(N)])
    return Signal(N, tuple(out))


def zero_set(h: Idempotent, mode: str = "exact", tol: float = 1e-9) -> ZeroSetReport:
    """Zero set of h, its divisor part, and the gcd-class structure check.

    The zero set of a nonzero idempotent is a disjoint union of gcd classes;
    the zero idempotent (empty spectrum) additionally vanishes at 0, which has
    no class below N, so 0 is accounted for separately in the structure check.
    """
    N = h.modulus
    J = h.spectrum.members
    zeros = []
    if mode == "exact":
        for n in range(N):
            if is_zero(root_sum(N, (j * n % N for j in J))):
                zeros.append(n)
    elif mode == "float":
        for n in range(N):
            if abs(h.evaluate(n)) < tol:
                zeros.append(n)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    zset = IndexSet(N, tuple(zeros))
    divs = DivisorSpec.of(N, (d for d in proper_divisors(N) if d in zset.members))
    expected = set(expand_zero_spec(divs).members)
    if not J:
        expected.add(0)
    structure_ok = set(zset.members) == expected
    return ZeroSetReport(zset, divs, structure_ok)
