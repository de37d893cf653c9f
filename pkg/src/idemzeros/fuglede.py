"""Tiling checks, tiling-partner search, spectral witnesses, and the
spectral-vs-tiling agreement report for prime-power moduli.

A set J tiles Z_N with K iff the integer convolution of the indicators is the
all-ones signal; equivalently |J||K| = N and the zero sets of the two
idempotents jointly cover all nonzero indices.  J is spectral iff some
equally-sized row set I has all pairwise differences inside the zero set of
h_J, which makes the corresponding square DFT submatrix unitary up to scaling.

The exhaustive report classifies index sets by (size, zero-set divisors); both
predicates are constant on such classes, which keeps full sweeps tractable
even at modulus 27.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .digit_tables import PivotSet, enumerate_solutions
from .errors import GuardExceededError, ModulusMismatchError
from .fourier import idempotent_from_spectrum, zero_set
from .zn_core import (
    DivisorSpec,
    IndexSet,
    ModulusContext,
    expand_zero_spec,
    proper_divisors,
)

REPORT_GUARD_N = 32


def tiles(J: IndexSet, K: IndexSet) -> bool:
    """Exact-cover check: every residue has exactly one representation j + k."""
    if J.modulus != K.modulus:
        raise ModulusMismatchError(f"moduli differ: {J.modulus} != {K.modulus}")
    N = J.modulus
    counts = [0] * N
    for j in J.members:
        for k in K.members:
            counts[(j + k) % N] += 1
    return all(c == 1 for c in counts)


def _exact_zero_members(J: IndexSet) -> tuple[int, ...]:
    return zero_set(idempotent_from_spectrum(J), mode="exact").zero_set.members


def _prime_exponent(p: int, d: int) -> int:
    l = 0
    while d > 1:
        d //= p
        l += 1
    return l


def _partner_candidates(N: int, required: tuple[int, ...], size: int) -> Iterator[IndexSet]:
    ctx = ModulusContext.of(N)
    if ctx.is_prime_power:
        divisors = {math.gcd(i, N) for i in required}
        mc = PivotSet.of(_prime_exponent(ctx.p, d) for d in divisors)
        yield from enumerate_solutions(ctx, mc, max_cardinality=size)
    else:
        from .oracle import brute_force_solutions

        yield from brute_force_solutions(
            N, IndexSet(N, required), "vanish-at-least", max_cardinality=size
        )


def find_tiling_partners(J: IndexSet, max_results: int | None = None) -> Iterator[IndexSet]:
    """Partners K with 1_J * 1_K = all-ones, lexicographic order.

    Candidates come from the zero-set machinery (the partner's idempotent must
    vanish wherever h_J does not, away from 0) and are re-verified by the
    integer convolution.
    """
    N = J.modulus
    if len(J) == 0 or N % len(J) != 0:
        return
    size = N // len(J)
    zeros = set(_exact_zero_members(J))
    required = tuple(n for n in range(1, N) if n not in zeros)
    emitted = 0
    for K in _partner_candidates(N, required, size):
        if len(K) == size and tiles(J, K):
            yield K
            emitted += 1
            if max_results is not None and emitted >= max_results:
                return


@dataclass(frozen=True)
class SpectralResult:
    spectral: bool
    witness: IndexSet | None


def _difference_clique(N: int, zeros: set[int], size: int) -> tuple[int, ...] | None:
    """A size-element subset of Z_N containing 0 whose pairwise differences all
    lie in ``zeros``, or None.  Plain backtracking with a count bound."""

    def extend(clique: list[int], cands: list[int]) -> tuple[int, ...] | None:
        if len(clique) == size:
            return tuple(clique)
        if len(clique) + len(cands) < size:
            return None
        for i, v in enumerate(cands):
            rest = [u for u in cands[i + 1 :] if (u - v) % N in zeros]
            clique.append(v)
            found = extend(clique, rest)
            if found:
                return found
            clique.pop()
        return None

    return extend([0], sorted(z for z in zeros if z != 0))


def is_spectral(J: IndexSet) -> SpectralResult:
    """Search for a row set making the DFT submatrix on columns J unitary."""
    N = J.modulus
    size = len(J)
    if size == 0:
        return SpectralResult(True, IndexSet(N, ()))
    zeros = set(_exact_zero_members(J))
    witness = _difference_clique(N, zeros, size)
    if witness is None:
        return SpectralResult(False, None)
    rows = np.array(witness)
    cols = np.array(J.members)
    M = np.exp(-2j * np.pi * np.outer(rows, cols) / N)
    gram = M.conj().T @ M
    if not np.allclose(gram, size * np.eye(size), atol=1e-9):
        raise AssertionError(f"witness {witness} failed the Gram check for J={J.members}")
    return SpectralResult(True, IndexSet(N, witness))


@dataclass(frozen=True)
class ClassVerdict:
    size: int
    zero_divisors: tuple[int, ...]
    spectral: bool
    tiling: bool
    representative: IndexSet
    witness: IndexSet | None
    partner: IndexSet | None

    @property
    def agrees(self) -> bool:
        return self.spectral == self.tiling


@dataclass(frozen=True)
class FugledeReport:
    modulus: int
    max_set_size: int
    bracelet_filtered: bool
    sets_checked: int
    classes: tuple[ClassVerdict, ...]
    disagreements: tuple[ClassVerdict, ...]


def _popcounts(arr: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(arr)
    out = np.zeros(arr.shape, dtype=np.uint32)
    work = arr.copy()
    while work.any():
        out += (work & 1).astype(np.uint32)
        work >>= 1
    return out


def _canonical_chunk(arr: np.ndarray, N: int) -> np.ndarray:
    """Boolean mask of entries that are the minimum of their dihedral orbit."""
    full = np.uint64((1 << N) - 1)
    rev = np.zeros_like(arr)
    for i in range(N):
        rev |= ((arr >> np.uint64(i)) & np.uint64(1)) << np.uint64((N - i) % N)
    canon = arr.copy()
    for base in (arr, rev):
        for k in range(N):
            rot = ((base << np.uint64(k)) | (base >> np.uint64(N - k))) & full
            np.minimum(canon, rot, out=canon)
    return canon == arr


def _class_reps_vectorized(N: int, max_size: int) -> dict[tuple, int]:
    """Scan all bracelet-canonical masks, classifying by (size, divisor flags)."""
    from .cyclotomic import power_residue_matrix

    R = power_residue_matrix(N).astype(np.float64)
    divisors = proper_divisors(N)
    div_mats = [R[(np.arange(N) * d) % N] for d in divisors]
    reps: dict[tuple, int] = {}
    chunk = 1 << 22
    shifts = np.arange(N, dtype=np.uint64)
    for lo in range(1, 1 << N, chunk):
        arr = np.arange(lo, min(lo + chunk, 1 << N), dtype=np.uint64)
        arr = arr[_canonical_chunk(arr, N)]
        if not len(arr):
            continue
        sizes = _popcounts(arr)
        arr = arr[sizes <= max_size]
        sizes = sizes[sizes <= max_size]
        bits = ((arr[:, None] >> shifts) & np.uint64(1)).astype(np.float64)
        flags = [(bits @ mat == 0).all(axis=1) for mat in div_mats]
        for i in range(len(arr)):
            key = (int(sizes[i]), tuple(bool(f[i]) for f in flags))
            reps.setdefault(key, int(arr[i]))
    return reps


def _class_reps_python(N: int, max_size: int, bracelet_filter: bool) -> dict[tuple, int]:
    from .oracle import _vanish_masks

    divisors = proper_divisors(N)
    vanish = [_vanish_masks(N, d) for d in divisors]
    full = (1 << N) - 1
    reps: dict[tuple, int] = {}
    count = 0
    for mask in range(1, 1 << N):
        size = mask.bit_count()
        if size > max_size:
            continue
        if bracelet_filter and not _is_canonical_mask(mask, N, full):
            continue
        key = (size, tuple(bool(v[mask]) for v in vanish))
        reps.setdefault(key, mask)
        count += 1
    reps["__count__"] = count  # type: ignore[index]
    return reps


def _is_canonical_mask(mask: int, N: int, full: int) -> bool:
    rev = 0
    for i in range(N):
        if mask >> i & 1:
            rev |= 1 << ((N - i) % N)
    for base in (mask, rev):
        for k in range(N):
            rot = ((base << k) | (base >> (N - k))) & full
            if rot < mask:
                return False
    return True


def _check_class(ctx: ModulusContext, size: int, flags: tuple, rep_mask: int) -> ClassVerdict:
    N = ctx.N
    divisors = proper_divisors(N)
    D = tuple(d for d, f in zip(divisors, flags) if f)
    zeros = expand_zero_spec(DivisorSpec.of(N, D))
    rep = IndexSet.from_mask(N, rep_mask)
    witness_members = _difference_clique(N, set(zeros.members), size)
    spectral = witness_members is not None
    witness = IndexSet(N, witness_members) if spectral else None
    partner = None
    if N % size == 0:
        required = tuple(n for n in range(1, N) if n not in zeros.members)
        for K in _partner_candidates(N, required, N // size):
            if len(K) == N // size:
                partner = K
                break
        if partner is not None and not tiles(rep, partner):
            raise AssertionError(
                f"partner {partner.members} fails the convolution check for {rep.members}"
            )
    return ClassVerdict(size, D, spectral, partner is not None, rep, witness, partner)


def fuglede_report(
    ctx: ModulusContext,
    max_set_size: int | None = None,
    bracelet_filter: bool = False,
    jobs: int = 1,
) -> FugledeReport:
    """Exhaustively compare spectrality and tiling over all nonempty sets.

    Sets are grouped into (size, zero-set divisors) classes, on which both
    predicates are constant; each class is decided once.  For prime-power N
    the expected disagreement list is empty.
    """
    N = ctx.N
    if not ctx.is_prime_power:
        raise GuardExceededError(f"report requires a prime-power modulus, got {N}")
    if N > REPORT_GUARD_N:
        raise GuardExceededError(f"N={N} exceeds the report guard {REPORT_GUARD_N}")
    if max_set_size is None:
        max_set_size = N
    if N > 20:
        if not bracelet_filter:
            raise GuardExceededError(f"N={N} requires bracelet_filter=True")
        reps = _class_reps_vectorized(N, max_set_size)
        sets_checked = -1
    else:
        reps = _class_reps_python(N, max_set_size, bracelet_filter)
        sets_checked = reps.pop("__count__")  # type: ignore[arg-type]
    items = sorted(reps.items())
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(
                pool.map(lambda kv: _check_class(ctx, kv[0][0], kv[0][1], kv[1]), items)
            )
    else:
        verdicts = [_check_class(ctx, key[0], key[1], mask) for key, mask in items]
    disagreements = tuple(v for v in verdicts if not v.agrees)
    return FugledeReport(
        N, max_set_size, bracelet_filter, sets_checked, tuple(verdicts), disagreements
    )
