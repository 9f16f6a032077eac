"""Identity and congruence checks, one per theorem / proof step.

Every check compares two independently constructed truncated series with
exact ring equality and returns a machine-readable VerificationReport.
There are no tolerances anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Optional

from .partitions import m2_rank_distribution, residual_m2_crank_distribution
from .rings import CYCLO3, LAURENT, ZZ, LaurentPolynomial
from .series import (
    TruncatedSeries,
    geometric,
    lambert_sum,
    pochhammer_finite,
    pochhammer_inf,
)
from .sptcrank import (
    crank_series,
    rank_series,
    sb_at_root,
    sb_series,
    sptbar2_series,
)


@dataclass(frozen=True)
class VerificationReport:
    check: str
    order: int
    status: str  # "pass" | "fail"
    first_failure: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> str:
        return json.dumps({
            "check": self.check,
            "order": self.order,
            "status": self.status,
            "first_failure": self.first_failure,
        }, sort_keys=True)


def _compare(check: str, order: int, subchecks) -> VerificationReport:
    """subchecks: iterable of (label, lhs_series, rhs_series); series are
    compared coefficient-wise at the smaller of the two orders."""
    for label, lhs, rhs in subchecks:
        top = min(lhs.order, rhs.order)
        for n in range(top + 1):
            a, b = lhs.coefficient(n), rhs.coefficient(n)
            if a != b:
                return VerificationReport(check, order, "fail", {
                    "n": n,
                    "expected": rhs.ring.render(b),
                    "actual": lhs.ring.render(a),
                    "where": label,
                })
    return VerificationReport(check, order, "pass")


# ---------------------------------------------------------------------------
# Shared formula pieces (all over Z; callers embed into Z[zeta_3] as needed)
# ---------------------------------------------------------------------------

def _e(order: int, c: int, j: int, k: int) -> TruncatedSeries:
    return pochhammer_inf(ZZ, c, j, k, order)


def lambert_theorem1(ring, order: int) -> TruncatedSeries:
    """sum_{n in Z} (-1)^n q^{3n^2+6n} / (1 - q^{6n+2})."""
    return lambert_sum(
        ring,
        lambda n: -1 if n % 2 else 1,
        lambda n: 3 * n * n + 6 * n,
        lambda n: 6 * n + 2,
        order,
    )


def _eta_quotient_piece(order: int) -> TruncatedSeries:
    """(q^6;q^6)^4 / ((q^2;q^2)(q^3;q^3)^2)."""
    p6 = _e(order, 1, 6, 6)
    p6sq = p6 * p6
    p3 = _e(order, 1, 3, 3)
    return p6sq * p6sq * (_e(order, 1, 2, 2) * p3 * p3).invert()


def _lambert_piece(order: int) -> TruncatedSeries:
    """q (-q^3;q^3)/(q^3;q^3) * the theorem-1 Lambert sum."""
    t = (_e(order, -1, 3, 3) * _e(order, 1, 3, 3).invert()
         * lambert_theorem1(ZZ, order))
    return t.shift(1)


def a2_formula(order: int) -> TruncatedSeries:
    """The nonzero 3-dissection component of SB(zeta_3, q)."""
    return _eta_quotient_piece(order) + _lambert_piece(order).scale(2)


def rank_component(j: int, order: int) -> TruncatedSeries:
    """Component formulas of the M2-rank 3-dissection."""
    if j == 0:
        p3 = _e(order, 1, 3, 3)
        m3 = _e(order, -1, 3, 3)
        return (_e(order, -1, 1, 1) * p3 * p3
                * (_e(order, 1, 1, 1) * m3 * m3).invert())
    if j == 1:
        return (_e(order, 1, 3, 3) * _e(order, 1, 6, 6)
                * _e(order, 1, 1, 1).invert()).scale(2)
    if j == 2:
        return _eta_quotient_piece(order).scale(4) + _lambert_piece(order).scale(6)
    raise ValueError("component index must be 0, 1 or 2")


def crank_component(j: int, order: int) -> TruncatedSeries:
    """Component formulas of the residual-crank dissection."""
    if j in (0, 1):
        return rank_component(j, order)  # identical product formulas
    if j == 2:
        return _eta_quotient_piece(order)
    raise ValueError("component index must be 0, 1 or 2")


def gauss_psi(order: int) -> TruncatedSeries:
    """(q^2;q^2)_inf / (q;q^2)_inf."""
    return _e(order, 1, 2, 2) * _e(order, 1, 1, 2).invert()


def gauss_theta(order: int) -> TruncatedSeries:
    """sum_{n>=0} q^{n(n+1)/2}."""
    s = TruncatedSeries(ZZ, order)
    n = 0
    while n * (n + 1) // 2 <= order:
        s.coeffs[n * (n + 1) // 2] = 1
        n += 1
    return s


def jtp_psi_dissection(order: int) -> TruncatedSeries:
    """(-q^6,-q^3,q^9;q^9)_inf + q(-q^9,-q^9,q^9;q^9)_inf."""
    p9 = _e(order, 1, 9, 9)
    first = _e(order, -1, 6, 9) * _e(order, -1, 3, 9) * p9
    m9 = _e(order, -1, 9, 9)
    return first + (m9 * m9 * p9).shift(1)


def bailey_beta(n: int, order: int) -> TruncatedSeries:
    """beta_n = (q;q^2)_n^2 / (q^2;q^2)_{2n}."""
    num = pochhammer_finite(ZZ, 1, 1, 2, n, order)
    return num * num * pochhammer_finite(ZZ, 1, 2, 2, 2 * n, order).invert()


# ---------------------------------------------------------------------------
# The checks
# ---------------------------------------------------------------------------

def verify_theorem1(order: int) -> VerificationReport:
    """3-dissection of SB(zeta_3,q): components 0 and 1 vanish, component 2
    is the product-plus-Lambert formula."""
    if order < 8:
        raise ValueError("order must be >= 8")
    comps = sb_at_root(3, order).dissect(3)
    subchecks = [
        ("A0", comps[0], TruncatedSeries(CYCLO3, comps[0].order)),
        ("A1", comps[1], TruncatedSeries(CYCLO3, comps[1].order)),
        ("A2", comps[2], a2_formula(comps[2].order).embed(CYCLO3)),
    ]
    return _compare("theorem1", order, subchecks)


def verify_theorem2(order: int, n_oracle: int = 12) -> VerificationReport:
    """Cleared-denominator rank-minus-crank identity:
    (-z + 2 - 1/z) * [q^n] SB(z,q) = [q^n] rank - [q^n] crank, plus an
    enumeration cross-check of the rank and crank rows up to n_oracle."""
    if order < 4:
        raise ValueError("order must be >= 4")
    table = sb_series(order)
    rank = rank_series(LAURENT, LAURENT.z, LAURENT.z_inv, order)
    crank = crank_series(LAURENT, LAURENT.z, LAURENT.z_inv, order)
    u = LaurentPolynomial({1: -1, 0: 2, -1: -1})
    lhs = table.as_series().scale(u)
    rhs = rank - crank
    subchecks = [("rank-crank", lhs, rhs)]
    top = min(n_oracle, order)
    rank_enum = TruncatedSeries(
        LAURENT, top, [m2_rank_distribution(n) for n in range(top + 1)])
    crank_enum = TruncatedSeries(
        LAURENT, top, [residual_m2_crank_distribution(n) for n in range(top + 1)])
    subchecks.append(("rank-enumeration", rank.truncate(top), rank_enum))
    subchecks.append(("crank-enumeration", crank.truncate(top), crank_enum))
    return _compare("theorem2", order, subchecks)


def verify_theorem3(order: int) -> VerificationReport:
    """3-dissection of the M2-rank generating function at zeta_3."""
    if order < 9:
        raise ValueError("order must be >= 9")
    comps = rank_series(CYCLO3, CYCLO3.zeta, CYCLO3.zeta_inv, order).dissect(3)
    subchecks = [
        (f"N2rank{j}", comps[j], rank_component(j, comps[j].order).embed(CYCLO3))
        for j in range(3)
    ]
    return _compare("theorem3", order, subchecks)


def verify_theorem4(order: int) -> VerificationReport:
    """Residual-crank dissection at zeta_3, with its proof steps:
    (i) the zeta_3 product simplification, (ii) the Jacobi-triple-product
    3-dissection of psi, (iii) the three component formulas."""
    if order < 9:
        raise ValueError("order must be >= 9")
    lhs = crank_series(CYCLO3, CYCLO3.zeta, CYCLO3.zeta_inv, order)
    psi = gauss_psi(order)
    simplified = (psi * psi * _e(order, 1, 6, 6).invert()).embed(CYCLO3)
    subchecks = [
        ("zeta3-simplification", lhs, simplified),
        ("jtp-dissection", psi, jtp_psi_dissection(order)),
    ]
    comps = lhs.dissect(3)
    for j in range(3):
        subchecks.append(
            (f"M2crank{j}", comps[j],
             crank_component(j, comps[j].order).embed(CYCLO3)))
    subchecks.append(
        ("M2crank0-equals-N2rank0", crank_component(0, order),
         rank_component(0, order)))
    return _compare("theorem4", order, subchecks)


def verify_bailey_pair(n_max: int = 30, order: int = 120) -> VerificationReport:
    """Defining relation of the Bailey pair relative to (1, q^2):
    beta_n = sum_{r<=n} alpha_r / ((q^2;q^2)_{n-r} (q^2;q^2)_{n+r})
    with alpha_0 = 1 and alpha_r = (-1)^r 2 q^{r^2}."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    subchecks = []
    for n in range(n_max + 1):
        rhs = TruncatedSeries(ZZ, order)
        for r in range(n + 1):
            if r * r > order:
                break
            den = (pochhammer_finite(ZZ, 1, 2, 2, n - r, order)
                   * pochhammer_finite(ZZ, 1, 2, 2, n + r, order))
            term = den.invert()
            if r:
                term = term.shift(r * r).scale(-2 if r % 2 else 2)
            rhs = rhs + term
        subchecks.append((f"n={n}", bailey_beta(n, order), rhs))
    return _compare("bailey_pair", order, subchecks)


def verify_bailey_limit(order: int) -> VerificationReport:
    """The limiting Bailey Lemma instance (rho_1 = z, rho_2 = 1/z, a = 1,
    base q^2), in the cleared-denominator form: the Bailey-side sum with
    its infinite-product prefactor equals the closed rank generating
    function, over the Laurent ring."""
    if order < 4:
        raise ValueError("order must be >= 4")
    ring = LAURENT
    z, z_inv = LAURENT.z, LAURENT.z_inv
    acc = TruncatedSeries(ring, order)
    for n in range(order // 2 + 1):
        term = (pochhammer_finite(ring, z, 0, 2, n, order)
                * pochhammer_finite(ring, z_inv, 0, 2, n, order)
                * bailey_beta(n, order).embed(ring))
        acc = acc + term.shift(2 * n)
    half = pochhammer_inf(ring, ring.one, 1, 2, order)
    prefactor = pochhammer_inf(ring, ring.one, 2, 2, order) * (
        pochhammer_inf(ring, z, 2, 2, order)
        * pochhammer_inf(ring, z_inv, 2, 2, order)
        * half * half
    ).invert()
    lhs = prefactor * acc
    rhs = rank_series(ring, z, z_inv, order)
    return _compare("bailey_limit", order, [("bailey-vs-rank", lhs, rhs)])


def verify_congruences(order: int) -> VerificationReport:
    """The three spt congruences and the mod-3 crank refinement:
    spt2bar(3n), spt2bar(3n+1) divisible by 3; spt2bar(5n+3) divisible by
    5; residue classes of the spt-crank mod 3 all equal at 3n and 3n+1."""
    if order < 8:
        raise ValueError("order must be >= 8")
    s2 = sptbar2_series(order)
    table = sb_series(order)
    zeta3 = sb_at_root(3, order)

    def fail(n, expected, actual, where):
        return VerificationReport("congruences", order, "fail", {
            "n": n, "expected": expected, "actual": actual, "where": where,
        })

    for n in range(1, order + 1):
        v = s2.coefficient(n)
        if table.spt2(n) != v:
            return fail(n, str(v), str(table.spt2(n)), "z=1-consistency")
        if n % 3 in (0, 1):
            if v % 3:
                return fail(n, "0 (mod 3)", str(v), "mod3-congruence")
            sums = table.residue_sums(n, 3)
            if len(set(sums)) != 1:
                return fail(n, "equal residue classes", str(sums),
                            "mod3-refinement")
            if zeta3.coefficient(n):
                return fail(n, "(0, 0)", CYCLO3.render(zeta3.coefficient(n)),
                            "zeta3-vanishing")
        if n % 5 == 3 and v % 5:
            return fail(n, "0 (mod 5)", str(v), "mod5-congruence")
    return VerificationReport("congruences", order, "pass")


# ---------------------------------------------------------------------------
# Suite driver
# ---------------------------------------------------------------------------

CHECKS: dict[str, Callable[..., VerificationReport]] = {
    "bailey_limit": verify_bailey_limit,
    "bailey_pair": lambda order, **kw: verify_bailey_pair(
        n_max=min(30, max(1, order // 4)), order=order),
    "congruences": verify_congruences,
    "theorem1": verify_theorem1,
    "theorem2": None,  # bound below; needs the oracle bound
    "theorem3": verify_theorem3,
    "theorem4": verify_theorem4,
}


def run_all(order: int, oracle_bound: int = 20,
            only: str | None = None) -> list[VerificationReport]:
    """Run the verification checks in deterministic (name) order."""
    names = sorted(CHECKS)
    if only is not None:
        if only not in CHECKS:
            raise ValueError(f"unknown check {only!r}; choose from {names}")
        names = [only]
    reports = []
    for name in names:
        if name == "theorem2":
            reports.append(verify_theorem2(order, n_oracle=oracle_bound))
        else:
            reports.append(CHECKS[name](order))
    return reports
