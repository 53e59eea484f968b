"""Exact symmetric-function expansions and stabilization analysis.

The library computes change-of-basis coefficients between the six
classical bases of symmetric functions with exact rational q,t-polynomial
arithmetic, detects and certifies stabilization ranges of degree-indexed
sequences, and implements three concrete stable families: graded
coinvariant algebras, diagonal coinvariant components, and modified
Macdonald polynomials.
"""

from .bases import (
    BASIS_TAGS,
    DEFAULT_DEGREE_CAP,
    CapExceeded,
    InvariantViolation,
    brick_count,
    brick_weight,
    change_of_basis_matrix,
    character,
    character_table,
    contingency_count,
    inverse_kostka,
    inverse_kostka_srht,
    kostka,
    normalize_basis_tag,
    ordered_brick_count,
    padded_entry,
    stable_kostka,
    stable_pz_to_h,
)
from .coinvariants import coinvariant_frobenius, coinvariant_schur_side, syt_maj_generating
from .macdonald import (
    cell_generating_polynomial,
    elementary_symmetric_eval,
    hook_qt_kostka,
    macdonald_monomial_coefficient,
    macdonald_polynomial,
    qt_kostka,
)
from .partitions import (
    Cell,
    Composition,
    Partition,
    centralizer_order,
    coarm,
    coleg,
    dominance_leq,
    leg,
    pad,
    partitions_of,
    partitions_up_to_size,
    rearrangement_count,
    unpad,
)
from .qt import QtPolynomial, q_binomial, q_multinomial
from .shuffle import (
    LabeledDyckPath,
    dr_component,
    dr_m_coefficient,
    is_shuffle,
    shuffle_distribution,
    shuffle_h_coefficient,
)
from .stability import (
    EXPECTED_TRANSFER_CONDITIONS,
    RangeResult,
    StabilityReport,
    SymFuncSequence,
    TransferConditionReport,
    build_stability_report,
    character_stabilization,
    check_transfer_conditions,
    coefficient_stabilization,
    coinvariant_sequence,
    counterexample_sequence,
    dr_sequence,
    macdonald_sequence,
    observed_range,
    padded_basis_sequence,
    schur_agreement_from_monomial_agreement,
    schur_range_from_monomial,
    sequence_weight,
)
from .symfunc import SymFunc

__version__ = "0.1.0"
