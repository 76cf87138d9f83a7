"""Polylogarithm series tests against hand sums and closed-form oracles."""

from fractions import Fraction
from itertools import product

import pytest

from polyeuler.exact import Egf, NonNilpotentInner, egf_add, egf_exp_linear, egf_mul, egf_scale
from polyeuler.polylog import li_of_inner, li_series, multi_li_series, parse_kvector

from oracles import ord_mul, ord_scale

F = Fraction


def one_minus_exp(value, order):
    return egf_add(Egf.constant(1, order), egf_scale(egf_exp_linear(value, order), -1))


class TestLiSeries:
    def test_k1_is_minus_log(self):
        assert li_series(1, 3).coeffs == (0, 1, F(1, 2), F(1, 3))

    def test_k0_is_geometric(self):
        assert li_series(0, 3).coeffs == (0, 1, 1, 1)

    def test_k_minus_one(self):
        assert li_series(-1, 3).coeffs == (0, 1, 2, 3)

    @pytest.mark.parametrize("k", range(-3, 4))
    def test_singleton_vector_matches(self, k):
        assert multi_li_series((k,), 16) == li_series(k, 16)


class TestMultiLiSeries:
    def test_depth_two_by_hand(self):
        # sum over m1 < m2 of z^{m2}/(m1 m2), expanded by hand to z^4
        assert multi_li_series((1, 1), 4).coeffs == (0, 0, F(1, 2), F(1, 2), F(11, 24))

    def test_depth_two_is_half_squared_log(self):
        n = 12
        log = [F(0)] + [F(1, m) for m in range(1, n + 1)]
        half_log_sq = ord_scale(ord_mul(log, log, n), F(1, 2), n)
        assert list(multi_li_series((1, 1), n).coeffs) == half_log_sq

    def test_depth_exceeding_order_is_zero(self):
        for ks in [(1, 1, 1), (2, -1, 0)]:
            assert multi_li_series(ks, 2) == Egf.zero(2)

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_lowest_degree_is_depth(self, r):
        """The first nonzero coefficient sits exactly at degree r."""
        for ks in product((-1, 0, 1, 2), repeat=r):
            coeffs = multi_li_series(ks, 8).coeffs
            assert all(c == 0 for c in coeffs[:r])
            assert coeffs[r] != 0

    def test_rejects_empty_vector(self):
        with pytest.raises(ValueError):
            multi_li_series((), 4)


class TestParseKVector:
    def test_basic(self):
        assert parse_kvector("2,1,-1") == (2, 1, -1)

    def test_single(self):
        assert parse_kvector("-3") == (-3,)

    @pytest.mark.parametrize("bad", ["", "1,,2", "a", "1;2"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_kvector(bad)


class TestLiOfInner:
    def test_li1_gives_t(self):
        """Li_1(1-e^{-t}) = -ln(e^{-t}) = t, with every higher coefficient zero."""
        for order in (4, 8, 16):
            got = li_of_inner((1,), one_minus_exp(-1, order), order)
            assert got == Egf.t(order)

    def test_depth_two_gives_half_t_squared(self):
        got = li_of_inner((1, 1), one_minus_exp(-1, 10), 10)
        expected = Egf.zero(10).coeffs[:2] + (F(1),) + Egf.zero(7).coeffs
        assert got.coeffs == expected

    def test_negative_index_closed_form(self):
        # Li_{-1}(z) = z/(1-z)^2, so at z = 1-e^{-t} it equals (1-e^{-t}) e^{2t}
        order = 9
        got = li_of_inner((-1,), one_minus_exp(-1, order), order)
        expected = egf_mul(one_minus_exp(-1, order), egf_exp_linear(2, order))
        assert got == expected

    def test_rejects_unit_inner(self):
        with pytest.raises(NonNilpotentInner):
            li_of_inner((1,), egf_exp_linear(1, 5), 5)

    @pytest.mark.parametrize("ks", [(1,), (2, 1), (-1, 0, 2)])
    def test_prefix_stability(self, ks):
        """Recomputing at a higher order never disturbs earlier coefficients."""
        lo = li_of_inner(ks, one_minus_exp(-1, 6), 6)
        hi = li_of_inner(ks, one_minus_exp(-1, 12), 12)
        assert hi.coeffs[:7] == lo.coeffs
