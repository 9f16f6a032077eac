import pytest

from spt_kernel.partitions import (
    enumerate_overpartitions,
    spt_family,
)
from spt_kernel.rings import CYCLO3, LAURENT, ZZ, LaurentPolynomial, RingError
from spt_kernel.sptcrank import (
    pair_crank_series,
    partition_pair_oracle,
    rank_series,
    rank_series_bailey_sum,
    sb_at_root,
    sb_coefficients,
    sb_coefficients_naive,
    sb_series,
    sptbar2_series,
    vector_partition_oracle,
)

ROW4 = LaurentPolynomial({1: 1, 0: 1, -1: 1})
ROW8 = LaurentPolynomial({3: 1, 2: 1, 1: 3, 0: 5, -1: 3, -2: 1, -3: 1})


@pytest.fixture(scope="module")
def table():
    return sb_series(30)


class TestSbSeries:
    def test_low_rows(self, table):
        assert table.row(2) == 1
        assert table.row(3) == 0
        assert table.row(4) == ROW4

    def test_q8_residue_classes_mod5(self, table):
        assert table.row(8) == ROW8
        assert table.residue_sums(8, 5) == [5, 3, 2, 2, 3]

    def test_rows_symmetric_up_to_bound(self, table):
        # observed property, not claimed by the theory; guarded here
        for n in range(table.order + 1):
            assert table.row(n).is_symmetric()

    def test_incremental_matches_naive_laurent(self):
        assert (sb_coefficients(LAURENT, LAURENT.z, LAURENT.z_inv, 24)
                == sb_coefficients_naive(LAURENT, LAURENT.z, LAURENT.z_inv, 24))

    def test_incremental_matches_naive_cyclotomic(self):
        assert (sb_coefficients(CYCLO3, CYCLO3.zeta, CYCLO3.zeta_inv, 30)
                == sb_coefficients_naive(CYCLO3, CYCLO3.zeta, CYCLO3.zeta_inv, 30))

    def test_csv_rows_exact(self, table):
        triples = dict(((n, m), c) for n, m, c in table.csv_rows())
        assert triples[(8, 0)] == 5
        assert triples[(8, -3)] == 1
        assert all(isinstance(c, int) for c in triples.values())


class TestSptbar2:
    def test_known_coefficients(self):
        s = sptbar2_series(10)
        assert s.coefficient(4) == 3
        assert s.coefficient(8) == 15

    def test_matches_enumeration(self):
        s = sptbar2_series(12)
        for n in range(1, 13):
            assert s.coefficient(n) == spt_family(n, "sptbar2")

    def test_matches_z1_specialization(self, table):
        s = sptbar2_series(table.order)
        for n in range(1, table.order + 1):
            assert s.coefficient(n) == table.spt2(n)


class TestSbAtRoot:
    def test_theorem1_vanishing_pattern(self):
        s = sb_at_root(3, 25)
        for n in range(26):
            if n % 3 in (0, 1):
                assert not s.coefficient(n), n
        assert s.coefficient(2) == CYCLO3.one

    def test_zeta5_q8_nonzero(self):
        assert bool(sb_at_root(5, 8).coefficient(8))

    def test_unsupported_order(self):
        with pytest.raises(RingError):
            sb_at_root(7, 10)


class TestOracles:
    def test_vector_oracle_small_values(self):
        assert vector_partition_oracle(2) == 1
        assert vector_partition_oracle(3) == 0
        assert vector_partition_oracle(4) == ROW4

    def test_pair_oracle_small_values(self):
        assert partition_pair_oracle(2) == 1
        assert partition_pair_oracle(4) == ROW4
        assert partition_pair_oracle(8) == ROW8

    def test_oracles_match_series(self, table):
        for n in range(1, 13):
            row = table.row(n)
            assert vector_partition_oracle(n) == row
            assert partition_pair_oracle(n) == row

    def test_pair_counts_nonnegative(self):
        for n in range(1, 13):
            assert all(c >= 0 for c in partition_pair_oracle(n).c.values())


class TestPairCrankSeries:
    def test_rows_match_table(self, table):
        pcs = pair_crank_series(16)
        for n in range(17):
            assert pcs.coefficient(n) == table.row(n)

    def test_z1_collapse(self):
        pcs = pair_crank_series(14)
        s2 = sptbar2_series(14)
        for n in range(1, 15):
            assert pcs.coefficient(n).eval_at_one() == s2.coefficient(n)


class TestRankSeriesRoutes:
    def test_sum_form_matches_product_form(self):
        # the rank generating function has a q-hypergeometric sum form and
        a = rank_series(LAURENT, LAURENT.z, LAURENT.z_inv, 24)
        # a closed product form; both must agree
        b = rank_series_bailey_sum(LAURENT, LAURENT.z, LAURENT.z_inv, 24)
        assert a == b

    def test_z1_counts_overpartitions(self):
        a = rank_series(ZZ, 1, 1, 16)
        for n in range(17):
            assert a.coefficient(n) == sum(
                1 for _ in enumerate_overpartitions(n))
