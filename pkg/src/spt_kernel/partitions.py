"""Partitions, overpartitions, and their rank/crank/spt statistics.

Everything here is brute-force enumeration.  These functions are the
independent oracles the series engine is checked against, so they must stay
free of generating-function shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import ceil
from typing import Iterator

from .rings import LaurentPolynomial

Partition = tuple[int, ...]  # weakly decreasing positive parts


def _gen_partitions(n: int, max_part: int, min_part: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), min_part - 1, -1):
        for rest in _gen_partitions(n - first, first, min_part):
            yield (first,) + rest


def _gen_distinct(n: int, max_part: int, min_part: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), min_part - 1, -1):
        for rest in _gen_distinct(n - first, first - 1, min_part):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partition_list(n: int, min_part: int = 1) -> tuple[Partition, ...]:
    """All partitions of n with every part >= min_part."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return tuple(_gen_partitions(n, n, min_part))


@lru_cache(maxsize=None)
def distinct_partition_list(n: int, min_part: int = 1) -> tuple[Partition, ...]:
    """All partitions of n into distinct parts, each >= min_part."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return tuple(_gen_distinct(n, n, min_part))


def enumerate_partitions(n: int) -> Iterator[Partition]:
    yield from partition_list(n)


def num_even_parts(p: Partition) -> int:
    return sum(1 for x in p if x % 2 == 0)


# ---------------------------------------------------------------------------
# Overpartitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Overpartition:
    """Multiset of (value, overlined) parts, at most one overline per value.

    Canonical order: values weakly decreasing, the overlined copy first
    among equal values.
    """

    parts: tuple[tuple[int, bool], ...]

    @property
    def size(self) -> int:
        return sum(v for v, _ in self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0][0]

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    def values(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.parts)

    def smallest_value(self) -> int:
        return self.parts[-1][0]

    def smallest_is_overlined(self) -> bool:
        """True if any copy of the smallest part value carries an overline."""
        s = self.smallest_value()
        return any(v == s and o for v, o in self.parts)

    def smallest_multiplicity(self) -> int:
        s = self.smallest_value()
        return sum(1 for v, _ in self.parts if v == s)

    def even_nonoverlined_halved(self) -> Partition:
        """The even non-overlined parts, each halved (residual-crank input)."""
        return tuple(v // 2 for v, o in self.parts if not o and v % 2 == 0)


def enumerate_overpartitions(n: int) -> Iterator[Overpartition]:
    """Each overpartition of n exactly once.

    Generated as (distinct overlined subset) x (ordinary partition), which
    mirrors the product (-q;q)_inf / (q;q)_inf and makes counting audits
    trivial.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    for m in range(n + 1):
        for over in distinct_partition_list(m):
            for plain in partition_list(n - m):
                parts = [(v, True) for v in over] + [(v, False) for v in plain]
                parts.sort(key=lambda p: (-p[0], not p[1]))
                yield Overpartition(tuple(parts))


# ---------------------------------------------------------------------------
# spt family
# ---------------------------------------------------------------------------

def spt(n: int) -> int:
    """Total occurrences of the smallest part over partitions of n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0
    for p in partition_list(n):
        s = p[-1]
        total += sum(1 for x in p if x == s)
    return total


def spt_family(n: int, variant: str) -> int:
    """spt, sptbar, sptbar1 or sptbar2.

    The overpartition variants count, over overpartitions of n in which no
    copy of the smallest part value is overlined, the multiplicity of the
    smallest part; sptbar1/sptbar2 restrict to odd/even smallest part.
    """
    if variant == "spt":
        return spt(n)
    if variant not in ("sptbar", "sptbar1", "sptbar2"):
        raise ValueError(f"unknown spt variant {variant!r}")
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0
    for op in enumerate_overpartitions(n):
        if op.smallest_is_overlined():
            continue
        s = op.smallest_value()
        if variant == "sptbar1" and s % 2 == 0:
            continue
        if variant == "sptbar2" and s % 2 == 1:
            continue
        total += op.smallest_multiplicity()
    return total


# ---------------------------------------------------------------------------
# M2-rank
# ---------------------------------------------------------------------------

def m2_rank(op: Overpartition) -> int:
    """ceil(l/2) - #parts + #(non-overlined odd parts) - chi."""
    if not op.parts:
        raise ValueError("rank of the empty overpartition is undefined")
    largest, largest_over = op.parts[0]
    odd_nonover = sum(1 for v, o in op.parts if v % 2 == 1 and not o)
    chi = 1 if (largest % 2 == 1 and not largest_over) else 0
    return ceil(largest / 2) - len(op.parts) + odd_nonover - chi


def m2_rank_distribution(n: int) -> LaurentPolynomial:
    """Sum of z^{m2_rank(pi)} over overpartitions of n; 1 for n = 0."""
    if n == 0:
        return LaurentPolynomial.from_int(1)
    counts: dict[int, int] = {}
    for op in enumerate_overpartitions(n):
        r = m2_rank(op)
        counts[r] = counts.get(r, 0) + 1
    return LaurentPolynomial(counts)


# ---------------------------------------------------------------------------
# Residual crank
# ---------------------------------------------------------------------------

def ag_crank(p: Partition) -> int:
    """Andrews-Garvan crank of an ordinary partition.

    Largest part when there are no ones; otherwise (#parts greater than the
    number of ones) minus (number of ones).
    """
    if not p:
        raise ValueError("crank of the empty partition is undefined")
    ones = sum(1 for x in p if x == 1)
    if ones == 0:
        return p[0]
    mu = sum(1 for x in p if x > ones)
    return mu - ones


# Weight for the failure case pi_e/2 == (1): the crank generating function
# assigns the partition of 1 the q-coefficient z + 1/z - 1, not z^{crank}.
_FAILURE_WEIGHT = LaurentPolynomial({1: 1, -1: 1, 0: -1})


def residual_crank_weight(op: Overpartition) -> LaurentPolynomial:
    halved = op.even_nonoverlined_halved()
    if not halved:
        return LaurentPolynomial.from_int(1)
    if halved == (1,):
        return _FAILURE_WEIGHT
    return LaurentPolynomial.monomial(1, ag_crank(halved))


def residual_m2_crank_distribution(n: int) -> LaurentPolynomial:
    """Residual-crank distribution over overpartitions of n.

    Matches the coefficient of q^n in the residual crank generating
    function exactly, including the repaired failure case.
    """
    if n == 0:
        return LaurentPolynomial.from_int(1)
    acc = LaurentPolynomial()
    for op in enumerate_overpartitions(n):
        acc = acc + residual_crank_weight(op)
    return acc


def count_partitions(n: int) -> int:
    return len(partition_list(n))


def count_overpartitions(n: int) -> int:
    return sum(1 for _ in enumerate_overpartitions(n))
