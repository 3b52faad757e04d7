"""Planarity invariants of functions over GF(2^n): differential spectra,
vanishing flats, partial quadruple systems, Dembowski-Ostrom rank counts, and
covers of the vector space by disjoint equidimensional affine subspaces."""

from .gf2n import GF, FieldElement, kloosterman, DEFAULT_MODULI
from .boolfunc import FunctionTable, DifferentialSpectrum
from .vflats import (
    PartialQuadrupleSystem,
    MonomialFamily,
    canonical_block,
    enumerate_flats,
    count_via_spectrum,
    flats_through_pair,
    bounds,
    total_flats,
    map_blocks,
    isomorphism_witness_check,
    closed_form_count,
    family_exponent,
    KNOWN_MONOMIAL_COUNTS,
)
from .dopoly import DOPolynomial, BinaryMatrix, random_do_polynomial
from .covers import (
    AffineSubspace,
    Cover,
    rref_basis,
    trivial_cover,
    overlapping_flats,
    image_cover,
    verify_cover,
    verify_nonparallel,
    verify_totally_skew,
    parallel_decomposition,
    gold_cover,
    theorem8_cover,
    skew_condition_check,
)
from .cycliccode import (
    ParityCheckSpec,
    weight_counts_from_flats,
    direct_low_weight_counts,
    generalized_weight4_count,
)

__version__ = "0.1.0"
