import pytest

from radseries import FactorSieve, sieve_primes


@pytest.fixture(scope="session")
def sieve_10k():
    return FactorSieve.build(10_000)


@pytest.fixture(scope="session")
def sieve_100k():
    return FactorSieve.build(100_000)


@pytest.fixture(scope="session")
def table_10k():
    return sieve_primes(10_000)


@pytest.fixture(scope="session")
def table_100k():
    return sieve_primes(100_000)
