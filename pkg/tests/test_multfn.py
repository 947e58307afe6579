import math
import random

import numpy as np
import pytest

from radseries import (
    IDENTITY_SPEC,
    RADICAL_SPEC,
    UNIT_SPEC,
    InvalidSpecError,
    MultiplicativeSpec,
    builtin_spec,
    evaluate,
    radical,
    range_values,
)


def test_radical_spec_matches_radical_module(sieve_10k):
    for n in range(1, 10_001):
        assert evaluate(RADICAL_SPEC, sieve_10k, n) == float(radical(sieve_10k, n))


def test_identity_spec(sieve_10k):
    for n in (1, 12, 97, 9973):
        assert evaluate(IDENTITY_SPEC, sieve_10k, n) == float(n)


def test_unit_spec(sieve_10k):
    for n in (1, 2, 12, 5040):
        assert evaluate(UNIT_SPEC, sieve_10k, n) == 1.0


def test_multiplicativity_random_coprime(sieve_10k):
    rng = random.Random(11)
    sqrt_spec = MultiplicativeSpec(name="sqrt", value_at_prime_power=lambda p, k: p ** (k / 2))
    done = 0
    while done < 200:
        m = rng.randrange(2, 100)
        n = rng.randrange(2, 100)
        if math.gcd(m, n) != 1:
            continue
        for spec in (RADICAL_SPEC, IDENTITY_SPEC, sqrt_spec):
            left = evaluate(spec, sieve_10k, m * n)
            right = evaluate(spec, sieve_10k, m) * evaluate(spec, sieve_10k, n)
            assert left == pytest.approx(right, rel=1e-12)
        done += 1


def test_range_values_builtin_hooks(sieve_10k):
    rad_vals = range_values(RADICAL_SPEC, sieve_10k, 500)
    id_vals = range_values(IDENTITY_SPEC, sieve_10k, 500)
    unit_vals = range_values(UNIT_SPEC, sieve_10k, 500)
    for n in range(1, 501):
        assert rad_vals[n] == float(radical(sieve_10k, n))
        assert id_vals[n] == float(n)
        assert unit_vals[n] == 1.0


def test_range_values_generic_stride_path(sieve_10k):
    # no range_hook, so this exercises the prime-power stride construction
    spec = MultiplicativeSpec(name="sqrt", value_at_prime_power=lambda p, k: p ** (k / 2))
    vals = range_values(spec, sieve_10k, 2_000)
    for n in range(1, 2_001):
        assert vals[n] == pytest.approx(evaluate(spec, sieve_10k, n), rel=1e-12)


def test_non_positive_rule_rejected(sieve_10k):
    broken = MultiplicativeSpec(name="broken", value_at_prime_power=lambda p, k: 0.0)
    with pytest.raises(InvalidSpecError):
        evaluate(broken, sieve_10k, 6)
    with pytest.raises(InvalidSpecError):
        range_values(broken, sieve_10k, 10)


def test_builtin_lookup():
    assert builtin_spec("radical") is RADICAL_SPEC
    assert builtin_spec("identity") is IDENTITY_SPEC
    assert builtin_spec("unit") is UNIT_SPEC
    with pytest.raises(InvalidSpecError):
        builtin_spec("mobius")


def test_prime_values_vectorized():
    p = np.array([2.0, 3.0, 5.0])
    assert np.array_equal(RADICAL_SPEC.prime_values(p), p)
    assert np.array_equal(UNIT_SPEC.prime_values(p), np.ones(3))
