"""Multicoset sampling-pattern design and an exact discrete alias simulation.

A signal with unit-width spectral fragments at integer offsets F is sampled
with offsets J inside a period of length N.  Aliases cancel exactly when the
idempotent built from J vanishes on all pairwise fragment differences; the
simulation discretizes the spectrum to R bins per unit and checks this on a
circular grid of N*R bins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .digit_tables import PivotSet, enumerate_solutions
from .errors import ModulusMismatchError, PreconditionError
from .fourier import Idempotent, idempotent_from_spectrum
from .oracle import brute_force_solutions
from .zn_core import IndexSet, ModulusContext


@dataclass(frozen=True)
class FragmentSet:
    fragments: tuple[int, ...]

    def __post_init__(self):
        prev = -1
        for f in self.fragments:
            if not prev < f or f < 0:
                raise ValueError(f"fragments must be sorted non-negative: {self.fragments}")
            prev = f

    @classmethod
    def of(cls, fragments: Iterable[int]) -> "FragmentSet":
        return cls(tuple(sorted(set(fragments))))


@dataclass(frozen=True)
class SamplingPattern:
    modulus: int
    offsets: IndexSet

    def __post_init__(self):
        if self.offsets.modulus != self.modulus:
            raise ModulusMismatchError(
                f"offset modulus {self.offsets.modulus} != {self.modulus}"
            )


@dataclass(frozen=True)
class DiscreteSimulation:
    oversampling: int = 16
    seed: int = 0


@dataclass(frozen=True)
class DesignResult:
    pattern: SamplingPattern
    idempotent: Idempotent
    rate: int  # samples per unit time


@dataclass(frozen=True)
class SimulationReport:
    max_error: float
    alias_energy: dict[int, float] = field(compare=False)

    @property
    def alias_free(self) -> bool:
        return all(e < 1e-18 for e in self.alias_energy.values())


def required_zero_set(F: FragmentSet, N: int) -> IndexSet:
    """Pairwise fragment differences mod N; the zeros the pattern must realize."""
    if not F.fragments:
        raise PreconditionError("fragment set must be nonempty")
    if N <= max(F.fragments) + 1:
        raise PreconditionError(f"period N={N} must exceed max fragment + 1")
    diffs = {
        (a - b) % N for a in F.fragments for b in F.fragments if a != b
    }
    return IndexSet.of(N, diffs)


def design_pattern(F: FragmentSet, N: int, strategy: str = "auto") -> DesignResult:
    """Smallest nonempty J whose idempotent vanishes on all fragment differences.

    Ties break lexicographically.  Prime-power periods go through the
    digit-table enumeration; other periods fall back to the exhaustive oracle.
    """
    if strategy not in ("auto", "digit-tables", "oracle"):
        raise ValueError(f"unknown strategy {strategy!r}")
    required = required_zero_set(F, N)
    ctx = ModulusContext.of(N)
    use_tables = strategy == "digit-tables" or (strategy == "auto" and ctx.is_prime_power)
    if use_tables:
        divisors = {math.gcd(i, N) for i in required.members}
        mc = PivotSet.of(_prime_exponent(ctx, d) for d in divisors)
        candidates = [J for J in enumerate_solutions(ctx, mc) if J.members]
    else:
        candidates = [
            J for J in brute_force_solutions(N, required, "vanish-at-least") if J.members
        ]
    if not candidates:
        raise PreconditionError(f"no nonempty pattern vanishes on {required.members}")
    best = min(candidates, key=lambda J: (len(J), J.members))
    return DesignResult(SamplingPattern(N, best), idempotent_from_spectrum(best), len(best))


def _prime_exponent(ctx: ModulusContext, d: int) -> int:
    l = 0
    while d > 1:
        d //= ctx.p
        l += 1
    return l


def _fragment_bins(F: FragmentSet, R: int) -> np.ndarray:
    return np.concatenate([np.arange(k * R, (k + 1) * R) for k in F.fragments])


def simulate(
    F: FragmentSet, pattern: SamplingPattern, sim: DiscreteSimulation
) -> SimulationReport:
    """Sample a random fragmented spectrum with the pattern and reconstruct.

    The sampled spectrum is the idempotent-weighted sum of the base spectrum
    over all N circular shifts of R bins; fragment bins divided by h(0) must
    reproduce the original when the pattern's zero set covers the fragment
    differences.
    """
    N, R = pattern.modulus, sim.oversampling
    if N <= max(F.fragments) + 1:
        raise ModulusMismatchError(f"pattern period {N} too small for fragments {F.fragments}")
    if not pattern.offsets.members:
        raise PreconditionError("pattern has no sample offsets")
    rng = np.random.default_rng(sim.seed)
    grid = N * R
    bins = _fragment_bins(F, R)
    spectrum = np.zeros(grid, dtype=complex)
    spectrum[bins] = rng.standard_normal(len(bins)) + 1j * rng.standard_normal(len(bins))
    h = idempotent_from_spectrum(pattern.offsets)
    hvals = [h.evaluate(k) for k in range(N)]
    sampled = np.zeros(grid, dtype=complex)
    for k in range(N):
        sampled += hvals[k] * np.roll(spectrum, k * R)
    recovered = sampled[bins] / hvals[0]
    max_error = float(np.max(np.abs(recovered - spectrum[bins])))
    alias_energy = {}
    for k in range(1, N):
        shifted = np.roll(spectrum, k * R)[bins]
        alias_energy[k] = float(abs(hvals[k]) ** 2 * np.sum(np.abs(shifted) ** 2))
    return SimulationReport(max_error, alias_energy)
