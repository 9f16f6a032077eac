"""Truncated formal power series in q over a pluggable coefficient ring.

A series carries its ring tag and truncation order N; coefficients beyond N
are undefined, never silently zero.  Binary operations require matching ring
and order -- a mismatch while checking an identity is a bug, not data.
"""

from __future__ import annotations

import json
from typing import Callable, Sequence

from .rings import RingError


class SeriesError(ValueError):
    """Order/ring mismatch or an operation leaving the power-series ring."""


# -- list-level kernels (shared with the spt-crank builders) ----------------

def mul_lists(a, b, upto, zero):
    """Cauchy product of coefficient lists, coefficients 0..upto only."""
    out = [zero] * (upto + 1)
    for i, ai in enumerate(a):
        if i > upto:
            break
        if not ai:
            continue
        lim = upto - i
        for j, bj in enumerate(b):
            if j > lim:
                break
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def mul_binomial_list(a, c, e):
    """In place: a *= (1 - c*q^e)."""
    if e == 0:
        f = 1 - c
        for i, ai in enumerate(a):
            a[i] = ai * f
        return
    for i in range(len(a) - 1, e - 1, -1):
        lo = a[i - e]
        if lo:
            a[i] = a[i] - c * lo


def div_binomial_list(a, c, e):
    """In place: a *= 1/(1 - c*q^e) (geometric recurrence)."""
    if e <= 0:
        raise SeriesError("geometric division needs a positive q-exponent")
    for i in range(e, len(a)):
        prev = a[i - e]
        if prev:
            a[i] = a[i] + c * prev


def invert_list(a, ring):
    c0inv = ring.unit_inverse(a[0])
    n = len(a)
    b = [ring.zero] * n
    b[0] = c0inv
    trivial = a[0] == ring.one
    for m in range(1, n):
        s = ring.zero
        for k in range(1, m + 1):
            ak = a[k]
            if ak:
                bk = b[m - k]
                if bk:
                    s = s + ak * bk
        if s:
            b[m] = -s if trivial else -(c0inv * s)
    return b


class TruncatedSeries:
    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring, order: int, coeffs: Sequence | None = None):
        if order < 0:
            raise SeriesError("order must be >= 0")
        self.ring = ring
        self.order = order
        if coeffs is None:
            self.coeffs = [ring.zero] * (order + 1)
        else:
            coeffs = list(coeffs)
            if len(coeffs) > order + 1:
                coeffs = coeffs[: order + 1]
            coeffs += [ring.zero] * (order + 1 - len(coeffs))
            self.coeffs = coeffs

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zeros(ring, order: int) -> "TruncatedSeries":
        return TruncatedSeries(ring, order)

    @staticmethod
    def one(ring, order: int) -> "TruncatedSeries":
        s = TruncatedSeries(ring, order)
        s.coeffs[0] = ring.one
        return s

    @staticmethod
    def monomial(ring, c, e: int, order: int) -> "TruncatedSeries":
        s = TruncatedSeries(ring, order)
        if 0 <= e <= order:
            s.coeffs[e] = ring.coerce(c)
        elif e < 0:
            raise SeriesError("negative q-exponent")
        return s

    # -- structure -----------------------------------------------------------

    def coefficient(self, n: int):
        if not 0 <= n <= self.order:
            raise SeriesError(f"coefficient {n} outside tracked range 0..{self.order}")
        return self.coeffs[n]

    def _compat(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise SeriesError("expected a TruncatedSeries")
        if self.ring != other.ring:
            raise SeriesError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
        if self.order != other.order:
            raise SeriesError(f"order mismatch: {self.order} vs {other.order}")

    def __bool__(self) -> bool:
        return any(bool(c) for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.order == other.order
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    __hash__ = None  # mutable coefficient list; not hashable

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        self._compat(other)
        return TruncatedSeries(
            self.ring, self.order,
            [a + b for a, b in zip(self.coeffs, other.coeffs)],
        )

    def __sub__(self, other):
        self._compat(other)
        return TruncatedSeries(
            self.ring, self.order,
            [a - b for a, b in zip(self.coeffs, other.coeffs)],
        )

    def __neg__(self):
        return TruncatedSeries(self.ring, self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        self._compat(other)
        return TruncatedSeries(
            self.ring, self.order,
            mul_lists(self.coeffs, other.coeffs, self.order, self.ring.zero),
        )

    def scale(self, c) -> "TruncatedSeries":
        c = self.ring.coerce(c)
        return TruncatedSeries(self.ring, self.order, [a * c for a in self.coeffs])

    def shift(self, e: int) -> "TruncatedSeries":
        """Multiply by q^e; top e coefficients fall off the truncation."""
        if e < 0:
            raise SeriesError("negative shift would leave the power-series ring")
        return TruncatedSeries(
            self.ring, self.order,
            [self.ring.zero] * e + self.coeffs[: self.order + 1 - e],
        )

    def invert(self) -> "TruncatedSeries":
        try:
            coeffs = invert_list(self.coeffs, self.ring)
        except RingError as exc:
            raise SeriesError(f"constant term is not a unit: {exc}") from exc
        return TruncatedSeries(self.ring, self.order, coeffs)

    def mul_binomial(self, c, e: int) -> "TruncatedSeries":
        """Return self * (1 - c*q^e)."""
        out = list(self.coeffs)
        mul_binomial_list(out, self.ring.coerce(c), e)
        return TruncatedSeries(self.ring, self.order, out)

    def div_binomial(self, c, e: int) -> "TruncatedSeries":
        """Return self / (1 - c*q^e)."""
        out = list(self.coeffs)
        div_binomial_list(out, self.ring.coerce(c), e)
        return TruncatedSeries(self.ring, self.order, out)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SeriesError("cannot extend a truncated series")
        return TruncatedSeries(self.ring, order, self.coeffs[: order + 1])

    def embed(self, ring) -> "TruncatedSeries":
        """Coerce coefficients into another ring (e.g. Z into Z[zeta_3])."""
        return TruncatedSeries(ring, self.order, [ring.coerce(c) for c in self.coeffs])

    # -- dissection ----------------------------------------------------------

    def dissect(self, t: int) -> list["TruncatedSeries"]:
        """Split by q-exponent residue mod t; component j keeps order (N-j)//t."""
        if t < 1:
            raise SeriesError("dissection modulus must be positive")
        out = []
        for j in range(t):
            comp_order = (self.order - j) // t
            if comp_order < 0:
                out.append(TruncatedSeries(self.ring, 0))
                continue
            out.append(TruncatedSeries(
                self.ring, comp_order,
                [self.coeffs[t * i + j] for i in range(comp_order + 1)],
            ))
        return out

    def inflate(self, t: int, order: int) -> "TruncatedSeries":
        """Substitute q -> q^t, re-truncated at the given target order."""
        if t < 1:
            raise SeriesError("inflation step must be positive")
        s = TruncatedSeries(self.ring, order)
        for i, c in enumerate(self.coeffs):
            if t * i > order:
                break
            s.coeffs[t * i] = c
        return s

    # -- rendering -----------------------------------------------------------

    def __repr__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c:
                r = self.ring.render(c)
                terms.append(f"({r})*q^{n}" if n else f"({r})")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.order + 1})"

    def to_json(self) -> str:
        return json.dumps({
            "ring": self.ring.name,
            "order": self.order,
            "coefficients": [self.ring.render(c) for c in self.coeffs],
        })


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------

def pochhammer_inf(ring, c, j: int, k: int, order: int) -> TruncatedSeries:
    """(c*q^j; q^k)_inf = prod_{i>=0} (1 - c*q^{j+ik}), truncated.

    Factors whose exponent exceeds the order are omitted; they cannot touch
    the tracked coefficients.
    """
    if k < 1:
        raise SeriesError("pochhammer step must be positive")
    if j < 1:
        raise SeriesError("pochhammer base exponent must be >= 1")
    c = ring.coerce(c)
    out = [ring.zero] * (order + 1)
    out[0] = ring.one
    e = j
    while e <= order:
        mul_binomial_list(out, c, e)
        e += k
    return TruncatedSeries(ring, order, out)


def pochhammer_finite(ring, c, j: int, k: int, n: int, order: int) -> TruncatedSeries:
    """(c*q^j; q^k)_n, a finite product of n factors; j = 0 is allowed."""
    if k < 1:
        raise SeriesError("pochhammer step must be positive")
    if n < 0:
        raise SeriesError("pochhammer length must be >= 0")
    c = ring.coerce(c)
    out = [ring.zero] * (order + 1)
    out[0] = ring.one
    for i in range(n):
        e = j + i * k
        if e > order:
            break
        mul_binomial_list(out, c, e)
    return TruncatedSeries(ring, order, out)


def geometric(ring, c, e: int, order: int) -> TruncatedSeries:
    """1/(1 - c*q^e)."""
    out = [ring.zero] * (order + 1)
    out[0] = ring.one
    div_binomial_list(out, ring.coerce(c), e)
    return TruncatedSeries(ring, order, out)


def _scan_range(order: int) -> range:
    # All exponent maps in this artifact grow at least linearly in |n|,
    # so |n| <= order + 2 covers every contributing index.
    return range(-(order + 2), order + 3)


def theta_sum(ring, exponent: Callable[[int], int],
              coefficient: Callable[[int], object],
              order: int, bilateral: bool = True) -> TruncatedSeries:
    """Sum of coefficient(n) * q^{exponent(n)} over n with exponent <= order."""
    s = TruncatedSeries(ring, order)
    for n in _scan_range(order):
        if not bilateral and n < 0:
            continue
        e = exponent(n)
        if 0 <= e <= order:
            s.coeffs[e] = s.coeffs[e] + ring.coerce(coefficient(n))
    return s


def lambert_sum(ring, sign: Callable[[int], int],
                numerator_exponent: Callable[[int], int],
                denominator_exponent: Callable[[int], int],
                order: int) -> TruncatedSeries:
    """Sum of sign(n) * q^{e(n)} / (1 - q^{d(n)}), truncated.

    Terms with d(n) < 0 are first rewritten via
    1/(1 - q^{-m}) = -q^m/(1 - q^m); terms that are still not power series
    after the rewrite are an error, not a guess.
    """
    acc = TruncatedSeries(ring, order)
    for n in _scan_range(order):
        e = numerator_exponent(n)
        d = denominator_exponent(n)
        sgn = sign(n)
        if d < 0:
            e += -d
            d = -d
            sgn = -sgn
        if e > order:
            continue
        if d == 0:
            raise SeriesError(f"lambert term n={n} divides by the zero series")
        if e < 0:
            raise SeriesError(
                f"lambert term n={n} has negative valuation {e} after rewrite")
        term = geometric(ring, ring.one, d, order).shift(e)
        acc = acc + term if sgn > 0 else acc - term
    return acc
