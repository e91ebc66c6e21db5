"""Weak Lefschetz Property of K[x,y,z]/(x^alpha, y^beta, z^gamma) in every
characteristic, and divisibility of plane-partition box counts."""

from .colex import LefschetzMatrix, Monomial, assemble_block_matrix, colex_compare, lefschetz_matrix, monomial_basis
from .exactla import all_maximal_minors, det_condensation, det_fraction_free, omit_row_minor, rank_mod_p
from .formulas import (
    BoxDims,
    PrimeFactorization,
    binomial_matrix_nk,
    det_nk_closed,
    f_of_k,
    h_of_k,
    legendre_valuation,
    macmahon,
    macmahon_factorization,
    macmahon_valuation,
)
from .hilbert import CIParams, HVector, h_vector, is_trivially_wlp, peak_profile, socle_degree
from .partitions import count_by_determinant, count_by_enumeration, count_by_transfer, is_box_plane_partition
from .wlp import (
    WlpVerdict,
    box_divisor_window,
    conjecture_char2_scan,
    cross_validate,
    failing_primes,
    prime_power_window,
    wlp_by_theorem,
    wlp_direct,
)

__version__ = "0.1.0"
