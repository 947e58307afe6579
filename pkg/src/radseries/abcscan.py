"""Coprime decompositions c = a + b and the implication
"c below its radical-power threshold implies a + b < R(abc)^2".

c = 2 is excluded throughout: its single decomposition 1 + 1 is the one
case where phi(c)/2 is not an integer and where R(ab) = 1 breaks the
radical-product chain.  For every c >= 3 the unordered coprime pairs
number exactly phi(c)/2.

The conclusion test is exact integer arithmetic: c < rad_abc^2 is
evaluated as rad_abc > isqrt(c), immune to overflow and rounding.  The
hypothesis test reuses the committed interval classification, so a c is
only flagged hypothesis-true when the entire S/T enclosure certifies
c < R(c)^(S/T).  A scan never proves the implication; it hunts for
counterexamples, and finding one indicates an implementation bug.
"""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass
from itertools import repeat
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from .errors import OutOfRangeError
from .identity import Classification, classify_interval
from .primes import PrimeTable
from .radical import FactorSieve, radical_range
from .series import Params
from .stkernel import st_ratio


class AbcRecord(NamedTuple):
    a: int
    b: int
    c: int
    rad_abc: int
    hypothesis_holds: bool   # c < R(c)^(S/T), committed over the S/T enclosure
    conclusion_holds: bool   # c < rad_abc^2, exact integer comparison
    quality: float           # ln(c) / ln(rad_abc)


@dataclass
class Theorem2Report:
    records_seen: int = 0
    hypothesis_true: int = 0
    hypothesis_false: int = 0
    conclusion_true: int = 0
    counterexamples: list[AbcRecord] | None = None
    max_quality_hypothesis: float | None = None
    top_quality: list[AbcRecord] | None = None

    @property
    def counterexample_count(self) -> int:
        return len(self.counterexamples or [])


def decompositions(sieve: FactorSieve, c: int) -> list[tuple[int, int]]:
    """All unordered pairs {a, b} with a <= b, a + b = c, gcd(a, b) = 1."""
    if c < 3:
        raise OutOfRangeError(f"c={c} must be >= 3 (phi(2)/2 is not a pair count)")
    sieve.check_range(c)
    a = np.arange(1, c // 2 + 1, dtype=np.int64)
    coprime = np.gcd(a, c) == 1
    a_sel = a[coprime]
    return [(int(x), int(c - x)) for x in a_sel]


def scan(
    sieve: FactorSieve,
    primes: PrimeTable,
    params: Params,
    c_max: int,
    prime_limit: int,
    *,
    sample: int | None = None,
    seed: int = 0,
    threads: int = 1,
    progress=None,
) -> Iterator[AbcRecord]:
    """Stream AbcRecords for every coprime decomposition of 3 <= c <= c_max.

    Records are emitted in ascending c, then ascending a.  ``sample`` draws
    that many c values uniformly without replacement instead of scanning
    all of them (the full scan is quadratic in c_max); order is still
    ascending.  ``progress`` is an optional callback invoked with (c, c_max).
    """
    if c_max < 3 or c_max > sieve.limit:
        raise OutOfRangeError(f"c_max={c_max} outside sieve range [3, {sieve.limit}]")
    st = st_ratio(primes, params, prime_limit, threads=threads)
    low, high = st.ratio_interval
    rad = radical_range(sieve, c_max)

    c_values: Iterable[int] = range(3, c_max + 1)
    if sample is not None and sample < c_max - 2:
        rng = random.Random(seed)
        c_values = sorted(rng.sample(range(3, c_max + 1), sample))

    # rad(a)*rad(b)*rad(c) <= c^3 must fit int64 for the vectorized product
    vector_safe = c_max <= 2_000_000

    for c in c_values:
        if progress is not None:
            progress(c, c_max)
        hypothesis = classify_interval(sieve, c, low, high) is Classification.BELOW
        isqrt_c = math.isqrt(c)
        ln_c = math.log(c)
        a = np.arange(1, c // 2 + 1, dtype=np.int64)
        a = a[np.gcd(a, c) == 1]
        b = c - a
        if vector_safe:
            rad_abc = rad[a] * rad[b] * int(rad[c])
            conclusion = rad_abc > isqrt_c
            quality = ln_c / np.log(rad_abc.astype(np.float64))
            yield from map(AbcRecord._make, zip(
                a.tolist(), b.tolist(), repeat(c), rad_abc.tolist(),
                repeat(hypothesis), conclusion.tolist(), quality.tolist(),
            ))
        else:
            rc = int(rad[c])
            for x, y in zip(a.tolist(), b.tolist()):
                r = int(rad[x]) * int(rad[y]) * rc
                yield AbcRecord(x, y, c, r, hypothesis, r > isqrt_c, ln_c / math.log(r))


def verify_theorem2(records: Iterable[AbcRecord], *, keep_top: int = 10) -> Theorem2Report:
    """Check hypothesis => conclusion on every record; collect statistics.

    Counterexamples are collected, not raised.  ``top_quality`` ranks the
    records with the smallest conclusion margin (highest quality).
    """
    report = Theorem2Report(counterexamples=[])
    heap: list[tuple[float, int, AbcRecord]] = []
    tie = 0
    best: float | None = None
    for rec in records:
        report.records_seen += 1
        if rec.conclusion_holds:
            report.conclusion_true += 1
        if rec.hypothesis_holds:
            report.hypothesis_true += 1
            if not rec.conclusion_holds:
                report.counterexamples.append(rec)
            if best is None or rec.quality > best:
                best = rec.quality
        else:
            report.hypothesis_false += 1
        if len(heap) < keep_top:
            heapq.heappush(heap, (rec.quality, tie, rec))
            tie += 1
        elif rec.quality > heap[0][0]:
            heapq.heapreplace(heap, (rec.quality, tie, rec))
            tie += 1
    report.max_quality_hypothesis = best
    report.top_quality = [r for _, _, r in sorted(heap, reverse=True)]
    return report
