"""Deterministic compensated summation and integral tail bounds.

Summation strategy: terms are produced in fixed-size index blocks, each
block is reduced with ``math.fsum`` (exact error-free-transformation
summation), and the per-block totals are combined with ``math.fsum`` in
block order.  Block boundaries depend only on the term count, never on the
worker count, so a run with ``threads=4`` is bit-identical to a serial run.

Tail bounds compare a series with non-negative, eventually decreasing
terms against the integral of its continuous majorant:

    sum_{n>N} n^(-a)        <= N^(1-a) / (a-1)                    (a > 1)
    sum_{n>N} ln(n) n^(-a)  <= (ln(N)(a-1) + 1) N^(1-a) / (a-1)^2 (a > 1)

The log-weighted comparison needs x^(-a) ln x decreasing, which holds for
x >= e; small cutoffs are patched with explicit terms.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

DEFAULT_BLOCK = 1 << 16


def sum_blocks(
    total: int,
    block_sum: Callable[[int, int], float],
    *,
    block: int = DEFAULT_BLOCK,
    threads: int = 1,
) -> float:
    """Sum ``block_sum(lo, hi)`` over [0, total) split at fixed boundaries.

    ``block_sum`` must return the compensated sum of its half-open index
    range.  With ``threads > 1`` the blocks are evaluated in a thread pool;
    the final reduction always runs in block order, so the result does not
    depend on the thread count.
    """
    if total <= 0:
        return 0.0
    bounds = [(lo, min(lo + block, total)) for lo in range(0, total, block)]
    if threads <= 1 or len(bounds) == 1:
        partials = [block_sum(lo, hi) for lo, hi in bounds]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(lambda b: block_sum(*b), bounds))
    return math.fsum(partials)


def power_tail(limit: int, exponent: float) -> float:
    """Upper bound on sum_{n>limit} n^(-exponent), requires exponent > 1."""
    if exponent <= 1.0:
        raise ValueError(f"power tail diverges for exponent {exponent} <= 1")
    if limit < 1:
        raise ValueError("limit must be >= 1")
    return limit ** (1.0 - exponent) / (exponent - 1.0)


def log_power_tail(limit: int, exponent: float) -> float:
    """Upper bound on sum_{n>limit} ln(n) n^(-exponent), requires exponent > 1.

    Integral comparison is valid from max(limit, 3); for limit < 3 the
    integers 2, 3 inside the gap are added explicitly.
    """
    if exponent <= 1.0:
        raise ValueError(f"log power tail diverges for exponent {exponent} <= 1")
    if limit < 1:
        raise ValueError("limit must be >= 1")
    a = exponent
    start = max(limit, 3)
    tail = (math.log(start) * (a - 1.0) + 1.0) * start ** (1.0 - a) / (a - 1.0) ** 2
    for n in range(limit + 1, start + 1):
        tail += math.log(n) * n ** (-a)
    return tail
