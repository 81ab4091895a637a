import math
from fractions import Fraction
from itertools import permutations

import pytest

import altseq


def test_evaluators_agree_on_s6():
    for w in permutations(range(1, 7)):
        for c in ("descent", "ascent"):
            assert altseq.as_linear(list(w), c) == altseq.as_bruteforce(list(w), c)


def test_examples():
    assert altseq.as_linear([2, 1, 3]) == 3
    assert altseq.as_linear([1, 2, 3]) == 1
    assert altseq.as_linear([1, 2, 3], "ascent") == 2
    assert altseq.complement([2, 1, 3]) == [2, 3, 1]
    with pytest.raises(altseq.AltseqError, match="not a permutation"):
        altseq.as_linear([2, 2])
    with pytest.raises(ValueError):
        altseq.distribution(0)


def test_distribution():
    assert altseq.distribution(4) == [1, 7, 11, 5]
    assert altseq.distribution(7) == altseq.distribution_bruteforce(7)
    big = altseq.distribution(40)
    assert sum(big) == math.factorial(40)
    assert isinstance(big[20], int)


def test_moments_are_fractions():
    t = altseq.moments(4, 4)
    assert t["mean"] == Fraction(17, 6)
    assert t["central"][2] == Fraction(23, 36)
    assert altseq.moments(3)["central"][2] == Fraction(17, 36)
    for n in range(4, 30):
        t = altseq.moments(n, 4)
        assert t["mean"] == altseq.mean_formula(n)
        assert t["central"][2] == altseq.variance_formula(n)
        assert t["alpha_even"][1] == 1


def test_closed_forms():
    assert altseq.gaussian_moment(3) == 15
    assert altseq.even_correction(2) == Fraction(-11, 14)
    assert altseq.interpolate_in_r([(r, altseq.even_correction(r) * 1764) for r in range(4)], 3) == [
        0,
        713,
        -723,
        10,
    ]


def test_even_fit():
    samples = [(n, altseq.moments(n, 4)["alpha_even"][2]) for n in range(100, 201, 10)]
    report = altseq.fit_even_moment(samples, 2)
    ratio = next(c for c in report["comparisons"] if c["quantity"] == "c1/c0")
    assert float(ratio["rel_error"]) <= 1e-3
    assert report["series"]["drift_shrinking"][1]


def test_odd_fit_input_shape():
    samples = []
    for n in range(100, 201, 10):
        t = altseq.moments(n, 3)
        samples.append((n, t["q_odd"][1], t["central"][2]))
    report = altseq.fit_odd_moment(samples, 1)
    assert report["target"] == "alpha_3*sqrt(n)"
    assert report["series"]["prefactor_exponent"] == "-1/2"


def test_monte_carlo():
    a = altseq.empirical_histogram(8, 200000, 1)
    assert a == altseq.empirical_histogram(8, 200000, 1, threads=3)
    assert sum(a) == 200000
    assert altseq.tv_distance_to_exact(a) <= 0.01
    w = altseq.sample_permutation(10, 5)
    assert sorted(w) == list(range(1, 11))
    assert w == altseq.sample_permutation(10, 5)


def test_kolmogorov_and_verify():
    assert altseq.kolmogorov_to_normal(200) < altseq.kolmogorov_to_normal(100) <= 0.1
    report = altseq.verify(n_max=12, samples=20000)
    assert report["exit_code"] == 0
    assert {r["id"] for r in report["records"]} >= {"C1", "C2", "C3", "C10"}
