"""Smallest-prime-factor sieve: radical, totient, squarefree test, factorization.

A single O(limit) pass builds the spf array; each query then factors n in
O(log n) divisions.  When ``cache_values`` is on (the default), the radical
and totient are additionally sieved into parallel int64 arrays so the series
modules can gather them for every n <= limit in bulk.  The sieve is immutable
after construction and all queries are pure.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidArgumentError, OutOfRangeError

_DUMP_MAGIC = b"RADSIEVE"
_DUMP_VERSION = 1
_DUMP_HEADER = struct.Struct("<8sIIQ")  # magic, version, reserved, limit


@dataclass(frozen=True)
class FactorSieve:
    """Factor oracle for 1 <= n <= limit.

    spf[n] is the smallest prime factor of n (spf[p] = p exactly for
    primes; spf[0] = 0 and spf[1] = 1 are sentinels).
    """

    limit: int
    spf: np.ndarray  # int64
    rad: np.ndarray | None = field(default=None, repr=False)
    phi: np.ndarray | None = field(default=None, repr=False)

    @classmethod
    def build(cls, limit: int, *, cache_values: bool = True) -> "FactorSieve":
        if limit < 1:
            raise InvalidArgumentError(f"sieve limit must be >= 1, got {limit}")
        spf = _spf_sieve(limit)
        rad = phi = None
        if cache_values:
            rad = _radical_sieve(limit, spf)
            phi = _phi_sieve(limit, spf)
        return cls(limit=limit, spf=spf, rad=rad, phi=phi)

    def check_range(self, n: int) -> None:
        if n < 1 or n > self.limit:
            raise OutOfRangeError(f"n={n} outside sieve range [1, {self.limit}]")

    def dump(self, path) -> None:
        """Write a versioned binary image (magic, limit, spf payload)."""
        with open(path, "wb") as fh:
            fh.write(_DUMP_HEADER.pack(_DUMP_MAGIC, _DUMP_VERSION, 0, self.limit))
            fh.write(self.spf.astype("<i8").tobytes())

    @classmethod
    def load(cls, path, *, cache_values: bool = True) -> "FactorSieve":
        with open(path, "rb") as fh:
            header = fh.read(_DUMP_HEADER.size)
            if len(header) != _DUMP_HEADER.size:
                raise InvalidArgumentError(f"{path}: truncated sieve header")
            magic, version, _reserved, limit = _DUMP_HEADER.unpack(header)
            if magic != _DUMP_MAGIC:
                raise InvalidArgumentError(f"{path}: not a sieve dump")
            if version != _DUMP_VERSION:
                raise InvalidArgumentError(f"{path}: unsupported version {version}")
            payload = fh.read()
        spf = np.frombuffer(payload, dtype="<i8").astype(np.int64)
        if len(spf) != limit + 1:
            raise InvalidArgumentError(
                f"{path}: payload holds {len(spf)} entries, expected {limit + 1}"
            )
        rad = phi = None
        if cache_values:
            rad = _radical_sieve(limit, spf)
            phi = _phi_sieve(limit, spf)
        return cls(limit=int(limit), spf=spf, rad=rad, phi=phi)


def _spf_sieve(limit: int) -> np.ndarray:
    spf = np.arange(limit + 1, dtype=np.int64)
    for p in range(2, int(limit ** 0.5) + 1):
        if spf[p] == p:
            sl = spf[p * p:: p]
            np.minimum(sl, p, out=sl)
    return spf


def _radical_sieve(limit: int, spf: np.ndarray) -> np.ndarray:
    rad = np.ones(limit + 1, dtype=np.int64)
    is_prime = spf == np.arange(limit + 1, dtype=np.int64)
    is_prime[:2] = False
    for p in np.flatnonzero(is_prime):
        rad[p:: p] *= p
    return rad


def _phi_sieve(limit: int, spf: np.ndarray) -> np.ndarray:
    phi = np.arange(limit + 1, dtype=np.int64)
    is_prime = spf == np.arange(limit + 1, dtype=np.int64)
    is_prime[:2] = False
    for p in np.flatnonzero(is_prime):
        sl = phi[p:: p]
        sl -= sl // int(p)
    phi[0] = 0
    return phi


def factorize(sieve: FactorSieve, n: int) -> list[tuple[int, int]]:
    """Prime factorization of n as (prime, exponent) pairs, ascending."""
    sieve.check_range(n)
    out: list[tuple[int, int]] = []
    spf = sieve.spf
    m = n
    while m > 1:
        p = int(spf[m])
        k = 0
        while m % p == 0:
            m //= p
            k += 1
        out.append((p, k))
    return out


def radical(sieve: FactorSieve, n: int) -> int:
    """Product of the distinct primes dividing n; radical(1) = 1."""
    sieve.check_range(n)
    if sieve.rad is not None:
        return int(sieve.rad[n])
    r = 1
    spf = sieve.spf
    m = n
    while m > 1:
        p = int(spf[m])
        r *= p
        while m % p == 0:
            m //= p
    return r


def euler_phi(sieve: FactorSieve, n: int) -> int:
    """Count of 1 <= k <= n coprime to n."""
    sieve.check_range(n)
    if sieve.phi is not None:
        return int(sieve.phi[n])
    result = n
    spf = sieve.spf
    m = n
    while m > 1:
        p = int(spf[m])
        result = result // p * (p - 1)
        while m % p == 0:
            m //= p
    return result


def is_squarefree(sieve: FactorSieve, n: int) -> bool:
    """True iff no prime divides n twice; equivalently radical(n) == n."""
    sieve.check_range(n)
    return radical(sieve, n) == n


def radical_range(sieve: FactorSieve, n_max: int) -> np.ndarray:
    """radical(n) for n = 0..n_max as int64 (index 0 is a 1-sentinel)."""
    if n_max > sieve.limit:
        raise OutOfRangeError(f"n_max={n_max} exceeds sieve limit {sieve.limit}")
    if sieve.rad is not None:
        return sieve.rad[: n_max + 1]
    return _radical_sieve(n_max, sieve.spf[: n_max + 1])
