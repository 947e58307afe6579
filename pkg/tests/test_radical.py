import math
import random

import numpy as np
import pytest

from radseries import (
    FactorSieve,
    InvalidArgumentError,
    OutOfRangeError,
    euler_phi,
    factorize,
    is_squarefree,
    radical,
)
from radseries.radical import radical_range


def radical_oracle(n):
    r, d, m = 1, 2, n
    while d * d <= m:
        if m % d == 0:
            r *= d
            while m % d == 0:
                m //= d
        d += 1
    return r * (m if m > 1 else 1)


def phi_oracle(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_radical_small(sieve_10k):
    assert radical(sieve_10k, 1) == 1
    assert radical(sieve_10k, 12) == 6
    assert radical(sieve_10k, 360) == 30
    assert radical(sieve_10k, 30) == 30


def test_phi_small(sieve_10k):
    assert euler_phi(sieve_10k, 1) == 1
    assert euler_phi(sieve_10k, 12) == 4
    for p in (2, 3, 5, 7, 97, 9973):
        assert euler_phi(sieve_10k, p) == p - 1


def test_squarefree_small(sieve_10k):
    assert is_squarefree(sieve_10k, 1)
    assert not is_squarefree(sieve_10k, 4)
    assert is_squarefree(sieve_10k, 30)


def test_out_of_range(sieve_10k):
    for bad in (0, -3, 10_001):
        with pytest.raises(OutOfRangeError):
            radical(sieve_10k, bad)
        with pytest.raises(OutOfRangeError):
            euler_phi(sieve_10k, bad)
        with pytest.raises(OutOfRangeError):
            is_squarefree(sieve_10k, bad)


def test_agrees_with_oracles_up_to_1e4(sieve_10k):
    for n in range(1, 10_001):
        r = radical(sieve_10k, n)
        assert r == radical_oracle(n), f"radical({n})"
        assert (r == n) == is_squarefree(sieve_10k, n)
        assert r <= n
    # phi oracle is quadratic; sample densely below 2000, sparsely above
    for n in list(range(1, 2001)) + list(range(2001, 10_001, 127)):
        assert euler_phi(sieve_10k, n) == phi_oracle(n), f"phi({n})"


def test_multiplicative_on_coprime_pairs(sieve_10k):
    rng = random.Random(7)
    done = 0
    while done < 300:
        m = rng.randrange(2, 100)
        n = rng.randrange(2, 100)
        if math.gcd(m, n) != 1:
            continue
        assert radical(sieve_10k, m * n) == radical(sieve_10k, m) * radical(sieve_10k, n)
        assert euler_phi(sieve_10k, m * n) == euler_phi(sieve_10k, m) * euler_phi(sieve_10k, n)
        done += 1


def test_factorize(sieve_10k):
    assert factorize(sieve_10k, 1) == []
    assert factorize(sieve_10k, 360) == [(2, 3), (3, 2), (5, 1)]
    assert factorize(sieve_10k, 9973) == [(9973, 1)]
    for n in range(2, 500):
        prod = 1
        for p, k in factorize(sieve_10k, n):
            prod *= p ** k
        assert prod == n


def test_uncached_queries_match(sieve_10k):
    lean = FactorSieve.build(2_000, cache_values=False)
    assert lean.rad is None and lean.phi is None
    for n in range(1, 2_001):
        assert radical(lean, n) == radical(sieve_10k, n)
        assert euler_phi(lean, n) == euler_phi(sieve_10k, n)


def test_radical_range(sieve_10k):
    arr = radical_range(sieve_10k, 1_000)
    for n in range(1, 1_001):
        assert int(arr[n]) == radical(sieve_10k, n)
    with pytest.raises(OutOfRangeError):
        radical_range(sieve_10k, 10_001)


def test_dump_load_roundtrip(tmp_path, sieve_10k):
    path = tmp_path / "sieve.bin"
    small = FactorSieve.build(5_000)
    small.dump(path)
    loaded = FactorSieve.load(path)
    assert loaded.limit == 5_000
    assert np.array_equal(loaded.spf, small.spf)
    for n in (1, 12, 4999, 5000):
        assert radical(loaded, n) == radical(sieve_10k, n)


def test_load_rejects_garbage(tmp_path):
    path = tmp_path / "bad.bin"
    path.write_bytes(b"not a sieve dump at all")
    with pytest.raises(InvalidArgumentError):
        FactorSieve.load(path)
    path.write_bytes(b"")
    with pytest.raises(InvalidArgumentError):
        FactorSieve.load(path)


def test_load_rejects_truncated_payload(tmp_path):
    path = tmp_path / "cut.bin"
    FactorSieve.build(100).dump(path)
    data = path.read_bytes()
    path.write_bytes(data[:-16])
    with pytest.raises(InvalidArgumentError):
        FactorSieve.load(path)


def test_spf_invariants(sieve_10k):
    spf = sieve_10k.spf
    for n in range(2, 3_000):
        p = int(spf[n])
        assert n % p == 0
        assert int(spf[p]) == p  # p prime iff fixed point
