from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from toric.exceptions import InputError, PreconditionError
from toric.homotopy import Contractible, ExternalX, FibreType, GeneralPair, LoopOf, PairSpec, Product, Sphere, Wedge
from toric.ranks import (
    Growth,
    IntegerSeries,
    RankSeries,
    growth_report,
    lie_ranks,
    pbw_reconstruct,
    ranks_of_formal,
    sphere_ranks,
    tensor_series,
    witt_number,
    witt_ranks,
)

LOOPED_WEDGE = LoopOf(Wedge((Sphere(3), Sphere(3))))
TWO_LOOPED_SPHERES = Product((LoopOf(Sphere(3)), LoopOf(Sphere(3))))


class SeriesTests(SimpleTestCase):
    def test_binomial_factors_invert(self):
        for sign in (1, -1):
            for i in (1, 2, 3):
                up = IntegerSeries.binomial(i, sign, 3, 12)
                down = IntegerSeries.binomial(i, sign, -3, 12)
                self.assertEqual(up * down, IntegerSeries.one(12))

    def test_negative_powers(self):
        self.assertEqual(IntegerSeries.binomial(1, 1, -1, 4).coefficients, (1, -1, 1, -1, 1))
        self.assertEqual(IntegerSeries.binomial(2, -1, -5, 6).coefficients, (1, 0, 5, 0, 15, 0, 35))
        self.assertEqual(IntegerSeries.binomial(3, 1, 0, 5), IntegerSeries.one(5))

    def test_products_truncate_to_the_shorter_series(self):
        product = tensor_series([1], 8) * IntegerSeries.binomial(1, -1, 1, 3)
        self.assertEqual(product.coefficients, (1, 0, 0, 0))

    def test_tensor_series(self):
        self.assertEqual(tensor_series([1, 1], 5).coefficients, (1, 2, 4, 8, 16, 32))
        self.assertEqual(tensor_series([2], 5).coefficients, (1, 0, 1, 0, 1, 0))


class SphereAndLieTests(SimpleTestCase):
    def test_sphere_ranks(self):
        self.assertEqual(sphere_ranks(3, 20).ranks, {3: 1})
        self.assertEqual(sphere_ranks(2, 20).ranks, {2: 1, 3: 1})
        self.assertEqual(sphere_ranks(6, 20).ranks, {6: 1, 11: 1})
        with self.assertRaises(InputError):
            sphere_ranks(1, 20)

    def test_lie_ranks_examples(self):
        self.assertEqual(lie_ranks([2], 12).ranks, {3: 1})
        self.assertEqual(lie_ranks([1], 12).ranks, {2: 1, 3: 1})
        self.assertEqual(lie_ranks([2, 2], 12).ranks, {3: 2, 5: 1, 7: 2, 9: 3, 11: 6})

    def test_single_generator_lists_its_whole_support(self):
        series = lie_ranks([5], 6)
        self.assertTrue(series.exact_finite)
        self.assertEqual(series.ranks, {6: 1, 11: 1})

    def test_lie_ranks_errors(self):
        with self.assertRaises(InputError):
            lie_ranks([0], 10)
        with self.assertRaises(InputError):
            lie_ranks([5], 4)
        with self.assertRaises(InputError):
            lie_ranks([2], 201)

    def test_sphere_agreement(self):
        for d in range(2, 13):
            self.assertEqual(lie_ranks([d - 1], 30).ranks, sphere_ranks(d, 30).ranks)

    def test_witt_numbers(self):
        self.assertEqual([witt_number(2, n) for n in range(1, 9)], [2, 1, 2, 3, 6, 9, 18, 30])
        self.assertEqual(witt_number(1, 3), 0)

    def test_witt_agreement_to_degree_forty(self):
        deflated = lie_ranks([2, 2], 40)
        oracle = witt_ranks(2, 2, 40)
        self.assertEqual(deflated.ranks, oracle.ranks)
        self.assertEqual(deflated[39], witt_number(2, 19))

    def test_pbw_reconstruction_to_degree_thirty_nine(self):
        self.assertEqual(pbw_reconstruct(lie_ranks([2, 2], 40), 39), tensor_series([2, 2], 39))

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=4), st.integers(min_value=0, max_value=20))
    def test_pbw_reconstruction(self, gens, extra):
        N = max(gens) + 1 + extra
        self.assertEqual(pbw_reconstruct(lie_ranks(gens, N), N - 1), tensor_series(gens, N - 1))


class FormalRankTests(SimpleTestCase):
    def test_contractible(self):
        series = ranks_of_formal(Contractible(), None, 30)
        self.assertEqual(series.ranks, {})
        self.assertTrue(series.exact_finite)

    def test_product_of_loops(self):
        series = ranks_of_formal(TWO_LOOPED_SPHERES, None, 40)
        self.assertEqual(series.ranks, {2: 2})
        self.assertTrue(series.exact_finite)

    def test_looped_wedge(self):
        series = ranks_of_formal(LOOPED_WEDGE, None, 11)
        self.assertEqual(series.ranks, {2: 2, 4: 1, 6: 2, 8: 3, 10: 6})
        self.assertFalse(series.exact_finite)

    def test_bare_spheres_and_wedges(self):
        self.assertEqual(ranks_of_formal(Sphere(4), None, 20).ranks, {4: 1, 7: 1})
        self.assertEqual(ranks_of_formal(Wedge((Sphere(3), Sphere(3))), None, 7).ranks, {3: 2, 5: 1, 7: 2})

    def test_external_factor_uses_given_degrees(self):
        pairs = PairSpec((GeneralPair(True, FibreType.sphere(2), (3, 3, 5)),))
        series = ranks_of_formal(LoopOf(ExternalX(1)), pairs, 20)
        self.assertEqual(series.ranks, {2: 2, 4: 1})
        with self.assertRaises(PreconditionError):
            ranks_of_formal(LoopOf(ExternalX(1)), None, 20)

    def test_additivity(self):
        whole = ranks_of_formal(Product((LoopOf(Sphere(4)), LoopOf(Sphere(3)))), None, 30)
        parts = ranks_of_formal(LoopOf(Sphere(4)), None, 30) + ranks_of_formal(LoopOf(Sphere(3)), None, 30)
        self.assertEqual(whole, parts)
        self.assertEqual(whole.ranks, {2: 1, 3: 1, 6: 1})

    def test_unsupported_shapes(self):
        with self.assertRaises(PreconditionError):
            ranks_of_formal(Product((Contractible(), LoopOf(Sphere(3)))), None, 20)
        with self.assertRaises(PreconditionError):
            ranks_of_formal(LoopOf(Product((Sphere(3), Sphere(5)))), None, 20)


class GrowthTests(SimpleTestCase):
    def test_finite_support_is_polynomial(self):
        report = growth_report(ranks_of_formal(TWO_LOOPED_SPHERES, None, 40))
        self.assertEqual(report.verdict, Growth.POLYNOMIAL)
        self.assertEqual(report.cumulative[-1], 2)

    def test_looped_wedge_is_exponential(self):
        for N in (30, 40):
            report = growth_report(ranks_of_formal(LOOPED_WEDGE, None, N))
            self.assertEqual(report.verdict, Growth.EXPONENTIAL)
            self.assertGreaterEqual(Fraction(report.cumulative[N], report.cumulative[N // 2]), 4)
        expected = sum(witt_number(2, n) for n in range(1, 21))
        self.assertEqual(report.cumulative[40], expected)

    def test_sparse_truncated_series_is_undetermined(self):
        series = ranks_of_formal(LoopOf(Wedge((Sphere(11), Sphere(11)))), None, 40)
        self.assertEqual(series.ranks, {10: 2, 20: 1, 30: 2, 40: 3})
        self.assertFalse(series.exact_finite)
        with self.assertLogs("toric.ranks", level="WARNING"):
            report = growth_report(series)
        self.assertIsNone(report.verdict)
        self.assertEqual(report.cumulative[40], 8)

    def test_all_zero_series(self):
        report = growth_report(RankSeries({}, 30, exact_finite=True))
        self.assertEqual(report.verdict, Growth.POLYNOMIAL)
        self.assertEqual(report.ratio_tail, Fraction(1))

    def test_needs_enough_degrees(self):
        with self.assertRaises(InputError):
            growth_report(RankSeries({}, 10, exact_finite=True))

    def test_cumulative_keeps_climbing(self):
        cumulative = lie_ranks([1, 2], 40).cumulative()
        for q in range(6, 38, 2):
            self.assertLess(cumulative[q], cumulative[q + 2])
