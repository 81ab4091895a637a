"""Longest alternating subsequences of random permutations.

Exact laws and moments are computed in C++ with GMP; rationals come back as
fractions.Fraction and counts as Python ints.
"""

from ._altseq import (
    AltseqError,
    as_bruteforce,
    as_linear,
    complement,
    distribution,
    distribution_bruteforce,
    empirical_histogram,
    even_correction,
    fit_even_moment,
    fit_odd_moment,
    gaussian_moment,
    interpolate_in_r,
    kolmogorov_to_normal,
    mean_formula,
    moments,
    sample_permutation,
    tv_distance_to_exact,
    variance_formula,
    verify,
)

__all__ = [
    "AltseqError",
    "as_bruteforce",
    "as_linear",
    "complement",
    "distribution",
    "distribution_bruteforce",
    "empirical_histogram",
    "even_correction",
    "fit_even_moment",
    "fit_odd_moment",
    "gaussian_moment",
    "interpolate_in_r",
    "kolmogorov_to_normal",
    "mean_formula",
    "moments",
    "sample_permutation",
    "tv_distance_to_exact",
    "variance_formula",
    "verify",
]
