"""Convolution idempotents on Z_N with prescribed zero sets.

Core objects: index sets and their bracelets (zn_core), exact root-of-unity
arithmetic (cyclotomic), idempotents and zero sets (fourier), Ramanujan sums
(ramanujan), the digit-table characterization and enumeration for prime-power
moduli (digit_tables), an exhaustive oracle (oracle), multicoset sampling
design (sampling), and tiling/spectral checks (fuglede).
"""

from .digit_tables import (
    ConformingTable,
    DigitTable,
    PivotSet,
    SolutionCheck,
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
from .errors import DomainError
from .fourier import (
    Idempotent,
    Signal,
    ZeroSetReport,
    circular_convolution,
    dft,
    idempotent_from_spectrum,
    idft,
    is_idempotent,
    zero_set,
)
from .fuglede import (
    FugledeReport,
    SpectralResult,
    find_tiling_partners,
    fuglede_report,
    is_spectral,
    tiles,
)
from .oracle import ComparisonReport, brute_force_solutions, compare_with_theorem
from .ramanujan import (
    annihilation_check,
    gcd_class_exponential_sum,
    ramanujan_direct,
    ramanujan_mobius,
    ramanujan_prime_power,
)
from .sampling import (
    DesignResult,
    DiscreteSimulation,
    FragmentSet,
    SamplingPattern,
    SimulationReport,
    design_pattern,
    required_zero_set,
    simulate,
)
from .zn_core import (
    DivisorSpec,
    IndexSet,
    ModulusContext,
    bracelet,
    canonical_bracelet_rep,
    expand_zero_spec,
    gcd_class,
    proper_divisors,
    reverse,
    translate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
