import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spt_kernel.rings import (
    CYCLO3,
    CYCLO5,
    LAURENT,
    CyclotomicInteger,
    LaurentPolynomial,
    RingError,
    eval_at_root,
    residue_class_sums,
)

Z = LAURENT.z
ZI = LAURENT.z_inv

# the q^8 coefficient of the spt-crank series, used for t=5 evaluations
Q8_ROW = LaurentPolynomial({3: 1, 2: 1, 1: 3, 0: 5, -1: 3, -2: 1, -3: 1})


laurents = st.dictionaries(
    st.integers(-12, 12), st.integers(-9, 9), max_size=8
).map(LaurentPolynomial)


def cyclos(t):
    return st.lists(
        st.integers(-20, 20), min_size=t - 1, max_size=t - 1
    ).map(lambda v: CyclotomicInteger(t, v))


class TestCyclotomic:
    def test_one_plus_zeta3_squared_is_zeta3(self):
        x = CYCLO3.one + CYCLO3.zeta
        assert x * x == CYCLO3.zeta

    def test_root_powers_reduce(self):
        # 1 + zeta + zeta^2 = 0
        total = sum(
            (CyclotomicInteger.root_power(3, k) for k in range(3)),
            CYCLO3.zero,
        )
        assert not total
        total5 = sum(
            (CyclotomicInteger.root_power(5, k) for k in range(5)),
            CYCLO5.zero,
        )
        assert not total5

    def test_mixed_orders_rejected(self):
        with pytest.raises(RingError):
            CYCLO3.zeta + CYCLO5.zeta  # noqa: B018

    def test_unit_inverse(self):
        inv = CYCLO5.unit_inverse(CYCLO5.zeta)
        assert CYCLO5.zeta * inv == CYCLO5.one
        with pytest.raises(RingError):
            CYCLO3.unit_inverse(CYCLO3.coerce(2))

    @given(cyclos(3), cyclos(3), cyclos(3))
    @settings(max_examples=80)
    def test_ring_axioms_t3(self, a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(cyclos(5), cyclos(5), cyclos(5))
    @settings(max_examples=60)
    def test_ring_axioms_t5(self, a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


class TestLaurent:
    def test_exponent_cancellation(self):
        assert Z * ZI == 1

    def test_expand_and_collect(self):
        assert (Z - 1) * (ZI - 1) == LaurentPolynomial({1: -1, 0: 2, -1: -1})

    def test_canonical_no_zero_coeffs(self):
        p = LaurentPolynomial({2: 3, 5: 0})
        assert p.support() == [2]
        assert (p - p) == 0 and not (p - p)

    @given(laurents, laurents, laurents)
    @settings(max_examples=80)
    def test_ring_axioms(self, a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


class TestEvalAtRoot:
    def test_balanced_triple_vanishes(self):
        assert not eval_at_root(Z + 1 + ZI, 3)

    def test_constant_fixed(self):
        assert eval_at_root(LaurentPolynomial.from_int(7), 3) == 7

    def test_q8_row_nonzero_at_zeta5(self):
        assert bool(eval_at_root(Q8_ROW, 5))

    def test_unsupported_order(self):
        with pytest.raises(RingError):
            eval_at_root(Z, 7)


class TestResidueClassSums:
    def test_q8_row_mod5(self):
        assert residue_class_sums(Q8_ROW, 5) == [5, 3, 2, 2, 3]

    def test_balanced_triple(self):
        assert residue_class_sums(Z + 1 + ZI, 3) == [1, 1, 1]

    def test_zero_polynomial(self):
        assert residue_class_sums(LaurentPolynomial(), 4) == [0, 0, 0, 0]

    @given(laurents, st.sampled_from([3, 5]))
    @settings(max_examples=120)
    def test_vanishing_iff_equal_classes(self, p, t):
        # minimal-polynomial argument: zeta_t evaluation vanishes exactly
        # when all residue classes carry the same total
        sums = residue_class_sums(p, t)
        assert (not eval_at_root(p, t)) == (len(set(sums)) == 1)

    @given(laurents, st.integers(1, 7))
    @settings(max_examples=80)
    def test_classes_sum_to_z1_evaluation(self, p, t):
        assert sum(residue_class_sums(p, t)) == p.eval_at_one()
