import math
import random

import pytest

from radseries import (
    Classification,
    OutOfRangeError,
    Params,
    classify,
    classify_interval,
    identity_residual,
    radical,
    split_identity,
    st_ratio,
)

P41 = Params(4, 1)


def test_classify_one_is_equal(sieve_10k):
    assert classify(sieve_10k, 1, 0.15, 0.14) is Classification.EQUAL
    assert classify_interval(sieve_10k, 1, 1.03, 1.04) is Classification.EQUAL


def test_classify_squarefree_below(sieve_10k):
    # for squarefree n >= 2 the comparison reduces to T < S
    for n in (2, 3, 30, 9973):
        assert classify(sieve_10k, n, 0.15, 0.14) is Classification.BELOW
        assert classify_interval(sieve_10k, n, 1.03, 1.04) is Classification.BELOW


def test_classify_prime_power_above(sieve_10k):
    # n = p^k with k >= 2 reduces to k*T vs S with S < 2T <= kT
    for n in (4, 8, 9, 27, 6561, 8192):
        assert classify(sieve_10k, n, 0.15, 0.14) is Classification.ABOVE
        assert classify_interval(sieve_10k, n, 1.03, 1.04) is Classification.ABOVE


def test_classify_scale_consistent(sieve_10k):
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randrange(1, 10_001)
        s_val, t_val = 0.149, 0.144
        base = classify(sieve_10k, n, s_val, t_val)
        for c in (7.3, 0.02, 315.0):
            assert classify(sieve_10k, n, c * s_val, c * t_val) is base


def test_classify_validation(sieve_10k):
    with pytest.raises(OutOfRangeError):
        classify(sieve_10k, 0, 0.15, 0.14)
    with pytest.raises(OutOfRangeError):
        classify(sieve_10k, 5, 0.14, 0.15)  # needs S > T


def test_classify_ambiguous_knife_edge(sieve_10k):
    # n = 8 = 2^3 against an interval straddling ln8/ln2 = 3:
    # committed on neither side
    assert classify_interval(sieve_10k, 8, 2.999, 3.001) is Classification.AMBIGUOUS


def test_residual_single_term(sieve_10k, table_10k):
    got = identity_residual(sieve_10k, table_10k, P41, 1, 10_000)
    assert got.residual == 0.0


def test_residual_within_tolerance(sieve_10k, table_10k):
    for s, t in [(4, 1), (2.6, 0.5)]:
        params = Params(s, t)
        got = identity_residual(sieve_10k, table_10k, params, 10_000, 10_000)
        assert got.within_tolerance
        assert got.tolerance > 0


def test_squarefree_restriction_is_positive(sieve_10k, table_10k):
    # restricted to squarefree n the sum is (S - T) * sum ln(n) n^(t-s) > 0
    st = st_ratio(table_10k, P41, 10_000)
    s_p, t_p = st.s_value.value, st.t_value.value
    total = math.fsum(
        (n ** P41.t / n ** P41.s) * (s_p - t_p) * math.log(n)
        for n in range(2, 10_001)
        if radical(sieve_10k, n) == n
    )
    assert total > 0


def test_split_single_term(sieve_10k, table_10k):
    got = split_identity(sieve_10k, table_10k, P41, 1, 10_000)
    assert got.classification_counts == (0, 1, 0)
    assert got.below == got.above == got.equal == 0.0


def test_split_signs_and_balance(sieve_10k, table_10k):
    for s, t in [(4, 1), (2.6, 0.5), (5, 2.5)]:
        got = split_identity(sieve_10k, table_10k, Params(s, t), 10_000, 10_000)
        assert got.below > 0
        assert got.above < 0
        assert got.equal == 0.0
        assert got.balance_gap <= got.tolerance
    # tight enclosures commit every n <= 1e4
    for s, t in [(4, 1), (5, 2.5)]:
        got = split_identity(sieve_10k, table_10k, Params(s, t), 10_000, 10_000)
        assert got.ambiguous_count == 0


def test_ambiguity_shrinks_with_prime_limit(sieve_10k, table_100k):
    # (2.6, 0.5) converges slowly; borderline n resolve as the S/T
    # enclosure tightens
    params = Params(2.6, 0.5)
    coarse = split_identity(sieve_10k, table_100k, params, 10_000, 10_000)
    fine = split_identity(sieve_10k, table_100k, params, 10_000, 100_000)
    assert fine.ambiguous_count < coarse.ambiguous_count


def test_split_counts_match_classifier(sieve_10k, table_10k):
    st = st_ratio(table_10k, P41, 10_000)
    lo, hi = st.ratio_interval
    want = {Classification.BELOW: 0, Classification.EQUAL: 0, Classification.ABOVE: 0}
    for n in range(1, 2_001):
        want[classify_interval(sieve_10k, n, lo, hi)] += 1
    got = split_identity(sieve_10k, table_10k, P41, 2_000, 10_000)
    assert got.classification_counts == (
        want[Classification.BELOW],
        want[Classification.EQUAL],
        want[Classification.ABOVE],
    )


def test_primes_below_squares_above(sieve_10k, table_10k):
    st = st_ratio(table_10k, P41, 10_000)
    lo, hi = st.ratio_interval
    for p in (2, 3, 5, 7, 11, 97):
        assert classify_interval(sieve_10k, p, lo, hi) is Classification.BELOW
        assert classify_interval(sieve_10k, p * p, lo, hi) is Classification.ABOVE


def test_equal_class_is_singleton(sieve_10k, table_10k):
    # over a generic parameter sample only n = 1 lands exactly on the threshold
    for s, t in [(4, 1), (3.1, 1.7), (2.6, 0.5)]:
        got = split_identity(sieve_10k, table_10k, Params(s, t), 10_000, 10_000)
        assert got.classification_counts[1] == 1


def test_residual_improves_with_limit(sieve_100k, table_100k):
    # empirical monotone improvement, prime truncation held fixed
    r_coarse = identity_residual(sieve_100k, table_100k, P41, 1_000, 100_000)
    r_fine = identity_residual(sieve_100k, table_100k, P41, 100_000, 100_000)
    assert abs(r_fine.residual) / r_fine.tolerance < abs(r_coarse.residual) / r_coarse.tolerance


def test_threads_bit_identical(sieve_100k, table_100k):
    a = identity_residual(sieve_100k, table_100k, P41, 100_000, 100_000, threads=1)
    b = identity_residual(sieve_100k, table_100k, P41, 100_000, 100_000, threads=4)
    assert a.residual == b.residual
