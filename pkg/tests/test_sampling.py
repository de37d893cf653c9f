import random

import numpy as np
import pytest

from idemzeros.errors import PreconditionError
from idemzeros.fourier import idempotent_from_spectrum, zero_set
from idemzeros.sampling import (
    DiscreteSimulation,
    FragmentSet,
    SamplingPattern,
    design_pattern,
    required_zero_set,
    simulate,
)
from idemzeros.zn_core import IndexSet


def test_required_zero_set():
    F = FragmentSet.of([0, 2])
    assert required_zero_set(F, 4).members == (2,)
    assert required_zero_set(FragmentSet.of([0, 1, 3]), 8).members == (1, 2, 3, 5, 6, 7)
    with pytest.raises(PreconditionError):
        required_zero_set(F, 3)


def test_design_example():
    result = design_pattern(FragmentSet.of([0, 2]), 4)
    assert result.pattern.offsets.members == (0, 1)
    assert result.rate == 2
    h = result.idempotent.time_domain().to_numpy()
    assert np.allclose(h, np.array([2, 1 + 1j, 0, 1 - 1j]) / 4, atol=1e-12)


def test_design_strategies_agree():
    for fragments, N in (((0, 2), 4), ((0, 1), 8), ((0, 3), 9)):
        F = FragmentSet.of(fragments)
        a = design_pattern(F, N, "digit-tables").pattern.offsets
        b = design_pattern(F, N, "oracle").pattern.offsets
        assert a == b


def test_design_composite_period():
    result = design_pattern(FragmentSet.of([0, 2]), 6, "oracle")
    required = required_zero_set(FragmentSet.of([0, 2]), 6)
    zeros = zero_set(idempotent_from_spectrum(result.pattern.offsets)).zero_set
    assert set(required.members) <= set(zeros.members)


def test_reconstruction_error_over_seeds():
    F = FragmentSet.of([0, 2])
    pattern = SamplingPattern(4, IndexSet.of(4, [0, 1]))
    for seed in range(10):
        report = simulate(F, pattern, DiscreteSimulation(oversampling=8, seed=seed))
        assert report.max_error <= 1e-9
        assert report.alias_free


def test_bad_pattern_reports_aliasing():
    F = FragmentSet.of([0, 2])
    pattern = SamplingPattern(4, IndexSet.of(4, [0, 2]))
    report = simulate(F, pattern, DiscreteSimulation(oversampling=8, seed=0))
    assert report.max_error > 1e-3
    assert not report.alias_free


def test_randomized_design_grid():
    rng = random.Random(47)
    cases = 0
    while cases < 25:
        N = rng.choice([4, 8, 9, 12, 16])
        size = rng.randint(1, 4)
        fragments = sorted(rng.sample(range(N - 1), min(size, N - 1)))
        F = FragmentSet.of(fragments)
        result = design_pattern(F, N)
        required = set(required_zero_set(F, N).members)
        zeros = set(
            zero_set(idempotent_from_spectrum(result.pattern.offsets)).zero_set.members
        )
        assert required <= zeros
        assert len(result.pattern.offsets) >= len(F.fragments)
        for seed in (0, 1):
            report = simulate(F, result.pattern, DiscreteSimulation(8, seed))
            assert report.max_error <= 1e-9
        cases += 1


def test_simulation_determinism():
    F = FragmentSet.of([0, 1])
    pattern = SamplingPattern(8, IndexSet.of(8, [0, 1]))
    a = simulate(F, pattern, DiscreteSimulation(8, 5))
    b = simulate(F, pattern, DiscreteSimulation(8, 5))
    assert a.max_error == b.max_error
    assert a.alias_energy == b.alias_energy
