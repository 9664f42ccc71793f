from fractions import Fraction

import pytest

from symdual import boolean_poset as bp
from symdual.counting import (
    CountSeries,
    RationalPolynomial,
    count_series,
    default_degree_bound,
    dual_orbit_count,
    face_orbit_count,
    facet_orbits_by_dimension,
    fit_polynomial,
    min_degree_series,
    skeleton_system,
    type_vectors_of_degree,
)
from symdual.errors import FitError, WidthError
from symdual.oracle import brute_f_vector
from symdual.orbit_monomials import GeneratorSystem, TypeVector


def tv(c, counts):
    return TypeVector.from_counts(c, {bp.mask_of(k, c): v for k, v in counts.items()})


TRIANGLE_SYS = GeneratorSystem.make(3, [tv(3, {(1, 2): 1, (1, 3): 1, (2, 3): 1})])
TWO_ORBIT = GeneratorSystem.make(
    3, [tv(3, {(1, 2): 2, (1, 3): 1}), tv(3, {(1, 2): 1, (2, 3): 2})]
)
EDGE_SYS = GeneratorSystem.make(2, [tv(2, {(1, 2): 1})])
MIXED_SYS = GeneratorSystem.make(3, [tv(3, {(1,): 1, (2,): 1}), tv(3, {(1, 3): 1})])


class TestDualOrbitCount:
    def test_triangle_at_six(self):
        assert dual_orbit_count(TRIANGLE_SYS, 6) == 36

    def test_two_orbit_at_five(self):
        assert dual_orbit_count(TWO_ORBIT, 5) == 21

    def test_edge_at_four(self):
        assert dual_orbit_count(EDGE_SYS, 4) == 5


class TestFitPolynomial:
    def test_triangle_closed_form(self):
        series = count_series(TRIANGLE_SYS, range(4, 10))
        poly = fit_polynomial(series, default_degree_bound(3))
        assert poly.coeffs == (Fraction(-15), Fraction(11, 2), Fraction(1, 2))
        assert series.stable_from == 4

    def test_constant_series(self):
        series = CountSeries({5: 7, 6: 7, 7: 7, 8: 7})
        poly = fit_polynomial(series, 1)
        assert poly.coeffs == (Fraction(7),)
        assert poly.degree == 0

    def test_mixed_system_linear(self):
        series = count_series(MIXED_SYS, range(3, 8))
        poly = fit_polynomial(series, default_degree_bound(3))
        assert poly.coeffs == (Fraction(1), Fraction(1))

    def test_insufficient_samples(self):
        with pytest.raises(FitError):
            fit_polynomial(CountSeries({3: 1, 4: 2}), 2)

    def test_no_stable_window(self):
        series = CountSeries({1: 1, 2: 5, 3: 2, 4: 100})
        with pytest.raises(FitError):
            fit_polynomial(series, 0)

    def test_nonconsecutive_rejected(self):
        with pytest.raises(Exception):
            fit_polynomial(CountSeries({1: 1, 3: 3, 4: 4}), 1)

    def test_json_round_trip(self):
        poly = RationalPolynomial.from_coeffs([Fraction(-15), Fraction(11, 2), Fraction(1, 2)])
        doc = poly.to_json(stable_from=4)
        assert doc == {"coeffs": ["-15", "11/2", "1/2"], "stable_from": 4}
        assert RationalPolynomial.from_json(doc) == poly


class TestMinDegreeSeries:
    def test_edge_slope_one(self):
        slope, intercept, window = min_degree_series(EDGE_SYS, range(2, 8))
        assert (slope, intercept) == (1, 0)
        assert window[1] - window[0] >= 3

    def test_c1_slope_one(self):
        sys_ = GeneratorSystem.make(1, [tv(1, {(1,): 1})])
        slope, intercept, _ = min_degree_series(sys_, range(1, 6))
        assert (slope, intercept) == (1, 0)

    def test_slope_bounded_by_c(self):
        slope, _, _ = min_degree_series(TRIANGLE_SYS, range(3, 9))
        assert 0 <= slope <= 3


class TestFacetOrbits:
    def test_edge_histogram(self):
        assert facet_orbits_by_dimension(EDGE_SYS, 4) == {3: 5}

    def test_counts_total(self):
        hist = facet_orbits_by_dimension(TWO_ORBIT, 4)
        assert sum(hist.values()) == dual_orbit_count(TWO_ORBIT, 4)

    def test_below_stability_raises(self):
        with pytest.raises(WidthError):
            facet_orbits_by_dimension(TWO_ORBIT, 2)


class TestFacetEventualConstancy:
    @pytest.mark.parametrize(
        "system,j",
        [
            (GeneratorSystem.make(1, [tv(1, {(1,): 2})]), 0),
            (EDGE_SYS, 3),
            (MIXED_SYS, 2),
        ],
    )
    def test_fixed_dimension_count_stabilizes(self, system, j):
        start = max(system.m, j + 1)
        counts = [
            facet_orbits_by_dimension(system, n).get(j, 0)
            for n in range(start, start + 8)
        ]
        # non-increasing once past the threshold, and flat on some window of 4
        assert all(a >= b for a, b in zip(counts, counts[1:]))
        assert any(
            len(set(counts[i : i + 4])) == 1 for i in range(len(counts) - 3)
        )


class TestMinDegreeConsistency:
    def test_class_size_matches_histogram_top(self):
        from symdual.dual_core import min_degree_gens
        for system, n in ((TWO_ORBIT, 5), (TRIANGLE_SYS, 5), (EDGE_SYS, 6)):
            degree, gens = min_degree_gens(system, n)
            hist = facet_orbits_by_dimension(system, n)
            assert hist[system.c * n - 1 - degree] == len(gens)


class TestFaceOrbitCount:
    def test_vertex_orbits(self):
        assert face_orbit_count(TWO_ORBIT, 0, 4) == 3
        assert face_orbit_count(EDGE_SYS, 0, 3) == 2

    def test_edge_system_j1(self):
        assert face_orbit_count(EDGE_SYS, 1, 3) == 3

    def test_matches_brute_f_vector(self):
        for sys_, n in ((EDGE_SYS, 4), (TRIANGLE_SYS, 4), (MIXED_SYS, 4)):
            brute = brute_f_vector(sys_, n)
            for j in range(0, 4):
                assert face_orbit_count(sys_, j, n) == brute.get(j, 0)

    def test_above_dimension_zero(self):
        assert face_orbit_count(EDGE_SYS, 7, 3) == 0


class TestTypeVectorsOfDegree:
    def test_degree_two_c2(self):
        got = set(type_vectors_of_degree(2, 2))
        assert got == {
            tv(2, {(1, 2): 1}),
            tv(2, {(1,): 2}),
            tv(2, {(2,): 2}),
            tv(2, {(1,): 1, (2,): 1}),
        }

    def test_weight_cap(self):
        capped = set(type_vectors_of_degree(2, 2, max_weight=1))
        assert capped == {tv(2, {(1, 2): 1})}


class TestSkeletonSystem:
    def test_c1_adds_square(self):
        sys_ = GeneratorSystem.make(1, [tv(1, {(1,): 3})])
        skel = skeleton_system(sys_, 0)
        assert tv(1, {(1,): 2}) in skel.generators

    def test_c2_adds_degree_two_orbits(self):
        skel = skeleton_system(EDGE_SYS, 0)
        added = set(skel.generators) - set(EDGE_SYS.generators)
        assert added == {tv(2, {(1,): 2}), tv(2, {(2,): 2}), tv(2, {(1,): 1, (2,): 1})}

    def test_skeleton_faces_match(self):
        # faces of the j-skeleton agree with the original complex up to dim j
        skel = skeleton_system(EDGE_SYS, 1)
        for n in (3, 4):
            for j in (0, 1):
                assert face_orbit_count(skel, j, n) == face_orbit_count(EDGE_SYS, j, n)
            assert face_orbit_count(skel, 2, n) == 0

    def test_skeleton_facets_vs_oracle(self):
        skel = skeleton_system(EDGE_SYS, 0)
        brute = brute_f_vector(skel, 3)
        assert brute.get(1, 0) == 0
        assert brute.get(0, 0) == face_orbit_count(EDGE_SYS, 0, 3)
