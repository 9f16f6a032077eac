"""The two-variable spt-crank series SB(z,q) and its combinatorial oracles.

SB(z,q) = sum_{n>=1} q^{2n} (-q^{2n+1};q)_inf (q^{2n+1};q)_inf
          / ( (z q^{2n}, z^{-1} q^{2n}; q^2)_inf (q^{2n+1}; q^2)_inf^2 ),

whose coefficient of z^m q^n counts spt-crank objects; z = 1 recovers the
even-smallest-part overpartition spt function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .partitions import (
    Partition,
    distinct_partition_list,
    num_even_parts,
    partition_list,
)
from .rings import (
    CYCLO3,
    CYCLO5,
    LAURENT,
    ZZ,
    CyclotomicRing,
    LaurentPolynomial,
    RingError,
    residue_class_sums,
)
from .series import (
    TruncatedSeries,
    div_binomial_list,
    geometric,
    invert_list,
    mul_binomial_list,
    mul_lists,
    pochhammer_finite,
    pochhammer_inf,
)


# ---------------------------------------------------------------------------
# Series construction
# ---------------------------------------------------------------------------

def _poch_list(c, j, k, order, zero=0, one=1):
    out = [zero] * (order + 1)
    out[0] = one
    e = j
    while e <= order:
        mul_binomial_list(out, c, e)
        e += k
    return out


def sb_coefficients(ring, z, z_inv, order: int) -> list:
    """Coefficient list of SB(z,q) with z specialized to a ring element.

    Walks the defining sum incrementally: the z-free factors are kept as
    integer lists and the z-carrying inverse product is updated by sparse
    binomial multiplications between consecutive summands.
    """
    z = ring.coerce(z)
    z_inv = ring.coerce(z_inv)
    if not (z * z_inv == ring.one):
        raise RingError("z and z_inv must be inverse units")
    total = [ring.zero] * (order + 1)
    if order < 2:
        return total
    # state at summand n=1:
    #   u    = (q^{4n+2}; q^2)_inf                     (z-free, integer)
    #   winv = 1/(q^{2n+1}; q^2)_inf^2                 (z-free, integer)
    #   vinv = 1/((z q^{2n}, z^{-1} q^{2n}; q^2)_inf)  (ring elements)
    u = _poch_list(1, 6, 2, order)
    w = _poch_list(1, 3, 2, order)
    winv = invert_list(mul_lists(w, w, order, 0), ZZ)
    v = mul_lists(
        _poch_list(z, 2, 2, order, ring.zero, ring.one),
        _poch_list(z_inv, 2, 2, order, ring.zero, ring.one),
        order, ring.zero,
    )
    vinv = invert_list(v, ring)
    for n in range(1, order // 2 + 1):
        upto = order - 2 * n
        x = mul_lists(u, winv, upto, 0)
        x = [ring.coerce(c) for c in x]
        x = mul_lists(x, vinv, upto, ring.zero)
        base = 2 * n
        for i, c in enumerate(x):
            if c:
                total[base + i] = total[base + i] + c
        # advance the state to summand n+1
        div_binomial_list(u, 1, 4 * n + 2)
        div_binomial_list(u, 1, 4 * n + 4)
        mul_binomial_list(winv, 1, 2 * n + 1)
        mul_binomial_list(winv, 1, 2 * n + 1)
        mul_binomial_list(vinv, z, 2 * n)
        mul_binomial_list(vinv, z_inv, 2 * n)
    return total


def sb_coefficients_naive(ring, z, z_inv, order: int) -> list:
    """Reference construction: every summand built from scratch.

    Kept as the mandatory cross-check for the incremental builder.
    """
    z = ring.coerce(z)
    z_inv = ring.coerce(z_inv)
    acc = TruncatedSeries(ring, order)
    for n in range(1, order // 2 + 1):
        num = (pochhammer_inf(ring, ring.coerce(-1), 2 * n + 1, 1, order)
               * pochhammer_inf(ring, ring.one, 2 * n + 1, 1, order))
        den = (pochhammer_inf(ring, z, 2 * n, 2, order)
               * pochhammer_inf(ring, z_inv, 2 * n, 2, order)
               * pochhammer_inf(ring, ring.one, 2 * n + 1, 2, order)
               * pochhammer_inf(ring, ring.one, 2 * n + 1, 2, order))
        acc = acc + (num * den.invert()).shift(2 * n)
    return acc.coeffs


@dataclass(frozen=True)
class SptCrankTable:
    """Rows n = 0..order of SB(z,q) as Laurent polynomials in z."""

    order: int
    rows: tuple[LaurentPolynomial, ...] = field(repr=False)

    def __post_init__(self):
        for n, row in enumerate(self.rows):
            for m, c in row.c.items():
                if c < 0:
                    raise ValueError(
                        f"negative spt-crank count at (m={m}, n={n})")

    def row(self, n: int) -> LaurentPolynomial:
        if not 0 <= n <= self.order:
            raise ValueError(f"row {n} outside 0..{self.order}")
        return self.rows[n]

    def spt2(self, n: int) -> int:
        return self.row(n).eval_at_one()

    def residue_sums(self, n: int, t: int) -> list[int]:
        return residue_class_sums(self.row(n), t)

    def as_series(self) -> TruncatedSeries:
        return TruncatedSeries(LAURENT, self.order, list(self.rows))

    def csv_rows(self):
        """(n, m, coefficient) triples, exact integers."""
        for n, row in enumerate(self.rows):
            for m in row.support():
                yield n, m, row.coefficient(m)


def sb_series(order: int) -> SptCrankTable:
    if order < 1:
        raise ValueError("order must be >= 1")
    coeffs = sb_coefficients(LAURENT, LAURENT.z, LAURENT.z_inv, order)
    return SptCrankTable(order, tuple(coeffs))


def sb_at_root(t: int, order: int) -> TruncatedSeries:
    """SB(zeta_t, q) over Z[zeta_t], t in {3, 5}."""
    ring = {3: CYCLO3, 5: CYCLO5}.get(t)
    if ring is None:
        raise RingError(f"unsupported root order t={t}")
    coeffs = sb_coefficients(ring, ring.zeta, ring.zeta_inv, order)
    return TruncatedSeries(ring, order, coeffs)


def sptbar2_series(order: int) -> TruncatedSeries:
    """Generating function of the even-smallest-part overpartition spt:

    sum_{n>=1} q^{2n} (-q^{2n+1};q)_inf / ((1-q^{2n})^2 (q^{2n+1};q)_inf).

    Distinct from the z=1 specialization of SB(z,q), so the two act as
    cross-checks on each other.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    total = [0] * (order + 1)
    p = _poch_list(-1, 3, 1, order)          # (-q^{2n+1}; q)_inf at n=1
    qinv = invert_list(_poch_list(1, 3, 1, order), ZZ)
    for n in range(1, order // 2 + 1):
        upto = order - 2 * n
        x = mul_lists(p, qinv, upto, 0)
        div_binomial_list(x, 1, 2 * n)
        div_binomial_list(x, 1, 2 * n)
        base = 2 * n
        for i, c in enumerate(x):
            if c:
                total[base + i] += c
        div_binomial_list(p, -1, 2 * n + 1)
        div_binomial_list(p, -1, 2 * n + 2)
        mul_binomial_list(qinv, 1, 2 * n + 1)
        mul_binomial_list(qinv, 1, 2 * n + 2)
    return TruncatedSeries(ZZ, order, total)


# ---------------------------------------------------------------------------
# Rank and residual-crank generating functions
# ---------------------------------------------------------------------------

def rank_series(ring, z, z_inv, order: int) -> TruncatedSeries:
    """M2-rank generating function in product-plus-Lambert form:

    (-q;q)_inf/(q;q)_inf * (1 + 2 sum_{n>=1} (1-z)(1-1/z)(-1)^n q^{n^2+2n}
                                / ((1-z q^{2n})(1-q^{2n}/z))).
    """
    z = ring.coerce(z)
    z_inv = ring.coerce(z_inv)
    inner = TruncatedSeries.one(ring, order)
    u = (ring.one - z) * (ring.one - z_inv)
    n = 1
    while n * n + 2 * n <= order:
        g = geometric(ring, z, 2 * n, order) * geometric(ring, z_inv, 2 * n, order)
        sign = -2 if n % 2 else 2
        inner = inner + g.shift(n * n + 2 * n).scale(u * sign)
        n += 1
    pref = (pochhammer_inf(ring, ring.coerce(-1), 1, 1, order)
            * pochhammer_inf(ring, ring.one, 1, 1, order).invert())
    return pref * inner


def rank_series_bailey_sum(ring, z, z_inv, order: int) -> TruncatedSeries:
    """The same rank generating function via the q-hypergeometric sum
    sum_{n>=0} (-1;q)_{2n} q^n / ((z q^2, q^2/z; q^2)_n).  O(N^3); use for
    modest orders as an independent route.
    """
    z = ring.coerce(z)
    z_inv = ring.coerce(z_inv)
    acc = TruncatedSeries(ring, order)
    for n in range(order + 1):
        num = pochhammer_finite(ring, ring.coerce(-1), 0, 1, 2 * n, order)
        den = (pochhammer_finite(ring, z, 2, 2, n, order)
               * pochhammer_finite(ring, z_inv, 2, 2, n, order))
        acc = acc + (num * den.invert()).shift(n)
    return acc


def crank_series(ring, z, z_inv, order: int) -> TruncatedSeries:
    """Residual-crank generating function
    (-q;q)_inf (q^2;q^2)_inf / ((q;q^2)_inf (z q^2;q^2)_inf (q^2/z;q^2)_inf).
    """
    z = ring.coerce(z)
    z_inv = ring.coerce(z_inv)
    num = (pochhammer_inf(ring, ring.coerce(-1), 1, 1, order)
           * pochhammer_inf(ring, ring.one, 2, 2, order))
    den = (pochhammer_inf(ring, ring.one, 1, 2, order)
           * pochhammer_inf(ring, z, 2, 2, order)
           * pochhammer_inf(ring, z_inv, 2, 2, order))
    return num * den.invert()


# ---------------------------------------------------------------------------
# Combinatorial oracles
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _distinct_count_min(n: int, min_part: int) -> int:
    return len(distinct_partition_list(n, min_part))


def vector_partition_oracle(n: int) -> LaurentPolynomial:
    """Signed vector-partition count of the spt-crank.

    Quadruples (p1, p2, p3, p4) with p1 nonempty distinct with even smallest
    part s, p2 and p3 ordinary with smallest parts >= s, p4 distinct with
    smallest part > s; weight (-1)^{#p1 - 1}, crank #even(p2) - #even(p3).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    counts: dict[int, int] = {}
    for n1 in range(2, n + 1):
        for p1 in distinct_partition_list(n1):
            s = p1[-1]
            if s % 2:
                continue
            w = -1 if len(p1) % 2 == 0 else 1
            rem = n - n1
            for n2 in range(rem + 1):
                for p2 in partition_list(n2, s):
                    e2 = num_even_parts(p2)
                    for n3 in range(rem - n2 + 1):
                        n4 = rem - n2 - n3
                        d4 = _distinct_count_min(n4, s + 1)
                        if not d4:
                            continue
                        for p3 in partition_list(n3, s):
                            m = e2 - num_even_parts(p3)
                            counts[m] = counts.get(m, 0) + w * d4
    return LaurentPolynomial(counts)


def _pp2_second_components(total: int, s: int):
    """Partitions of `total` with parts >= s whose even parts are <= 2s."""
    for p in partition_list(total, s):
        if all(x <= 2 * s for x in p if x % 2 == 0):
            yield p


def pair_statistic(p1: Partition, p2: Partition) -> int:
    """k(p1,p2): even parts of p1 equal to the smallest part, plus even
    parts exceeding s(p1) + 2*#even(p2)."""
    s = p1[-1]
    threshold = s + 2 * num_even_parts(p2)
    return sum(1 for x in p1 if x % 2 == 0 and (x == s or x > threshold))


def partition_pair_oracle(n: int) -> LaurentPolynomial:
    """Partition-pair count of the spt-crank (manifestly non-negative).

    Pairs (p1, p2) with p1 nonempty, s(p1) even, s(p1) <= s(p2), even parts
    of p2 at most 2 s(p1); crank c = k(p1,p2) - #even(p2) - 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    counts: dict[int, int] = {}
    for n1 in range(2, n + 1):
        for p1 in partition_list(n1):
            s = p1[-1]
            if s % 2:
                continue
            for p2 in _pp2_second_components(n - n1, s):
                c = pair_statistic(p1, p2) - num_even_parts(p2) - 1
                counts[c] = counts.get(c, 0) + 1
    return LaurentPolynomial(counts)


def pair_crank_series(order: int) -> TruncatedSeries:
    """The q-binomial two-sum decomposition of SB(z,q):

    sum_n q^{2n} / ((z q^{2n};q^2)_inf (q^{2n+1};q^2)_inf^2)
    + sum_{n,k>=1} q^{2n+2nk} z^{-k}
        / ((1 - z q^{2n}) (q^{2n+2};q^2)_k (z q^{2n+2k+2};q^2)_inf
           (q^{2n+1};q^2)_inf^2)
        * (q^2;q^2)_{n+k} / ((q^2;q^2)_k (q^2;q^2)_n).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    ring = LAURENT
    z, z_inv = LAURENT.z, LAURENT.z_inv
    acc = TruncatedSeries(ring, order)
    for n in range(1, order // 2 + 1):
        wsq = pochhammer_inf(ring, ring.one, 2 * n + 1, 2, order)
        wsq = (wsq * wsq).invert()
        first = pochhammer_inf(ring, z, 2 * n, 2, order).invert() * wsq
        acc = acc + first.shift(2 * n)
        k = 1
        while 2 * n * (k + 1) <= order:
            term = geometric(ring, z, 2 * n, order)
            term = term * pochhammer_finite(ring, ring.one, 2 * n + 2, 2, k, order).invert()
            if 2 * n + 2 * k + 2 <= order:
                term = term * pochhammer_inf(ring, z, 2 * n + 2 * k + 2, 2, order).invert()
            term = term * wsq
            qbin = (pochhammer_finite(ring, ring.one, 2, 2, n + k, order)
                    * (pochhammer_finite(ring, ring.one, 2, 2, k, order)
                       * pochhammer_finite(ring, ring.one, 2, 2, n, order)).invert())
            term = term * qbin
            zc = LaurentPolynomial.monomial(1, -k)
            acc = acc + term.shift(2 * n + 2 * n * k).scale(zc)
            k += 1
    return acc
