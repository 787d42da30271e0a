"""
Interlacing numbers of set partitions, the polynomials b_lambda(q), and the
subspace counts over finite fields that they govern.
"""
from .bijections import involution_count, theta, theta_inverse
from .blambda import BLambdaCache, b_lambda, b_lambda_n, b_two_row, touchard_riordan_rhs
from .gfq import census, delta_profile, enumerate_subspaces, rref
from .partitions import Partition, conjugate, parse_partition, removable_cells
from .poly import Polynomial, q_binomial, q_int, to_text
from .profiles import (anti_invariant_count, pi, pi_pivots, r_locus_count, sigma, sigma_pivots,
                       splitting_count)
from .qstirling import carlitz_rhs, s_q
from .setpart import (SetPartition, canonical_noninterlacing, fibre_generate, interlacing_number,
                      parse_set_partition, tableau_of)
from .shifted import count_shifted
from .tableaux import Tableau, c_weight, generate_tableaux, parse_tableau

__all__ = [
    "BLambdaCache", "Partition", "Polynomial", "SetPartition", "Tableau",
    "anti_invariant_count", "b_lambda", "b_lambda_n", "b_two_row", "c_weight", "canonical_noninterlacing",
    "carlitz_rhs", "census", "conjugate", "count_shifted", "delta_profile", "enumerate_subspaces",
    "fibre_generate", "generate_tableaux", "interlacing_number", "involution_count",
    "parse_partition", "parse_set_partition", "parse_tableau", "pi", "pi_pivots", "q_binomial",
    "q_int", "r_locus_count", "removable_cells", "rref", "s_q", "sigma", "sigma_pivots",
    "splitting_count", "tableau_of", "theta", "theta_inverse", "to_text", "touchard_riordan_rhs",
]
