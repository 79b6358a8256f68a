"""The brute-force oracle: counting, interpolation, h* extraction."""

import pytest

from sepkit.counting import (
    DilationCount,
    SizeExceeded,
    count_lattice_points,
    ehrhart_interpolate,
    enumerate_dilate_points,
    hstar_oracle,
)
from sepkit.graphs import Signature, edge_count
from sepkit.polynomial import Poly

from test_graphs import signatures_with_total


class TestCounts:
    def test_examples(self):
        assert count_lattice_points(Signature((1, 1)), 3).count == 7
        assert count_lattice_points(Signature((1, 1, 1)), 1).count == 7
        assert count_lattice_points(Signature((1, 1, 2)), 1).count == 11

    def test_dilation_zero(self):
        for sig in signatures_with_total(2, 6):
            assert count_lattice_points(sig, 0).count == 1

    @pytest.mark.parametrize("sig", signatures_with_total(2, 7), ids=str)
    def test_first_dilate_is_vertices_plus_origin(self, sig):
        got = count_lattice_points(sig, 1, max_total=7).count
        assert got == 2 * edge_count(sig) + 1

    def test_point_sets_centrally_symmetric(self):
        for sig in signatures_with_total(2, 5):
            for k in (1, 2):
                pts = set(enumerate_dilate_points(sig, k))
                assert pts == {tuple(-x for x in p) for p in pts}

    def test_dilation_count_invariants(self):
        with pytest.raises(ValueError):
            DilationCount(1, 0)
        with pytest.raises(ValueError):
            DilationCount(1, 4)  # central symmetry forces odd counts

    def test_size_bound(self):
        with pytest.raises(SizeExceeded):
            count_lattice_points(Signature((4, 4)), 1)
        # explicit override admits total 7
        assert count_lattice_points(Signature((4, 3)), 1, max_total=7).count > 0

    def test_jobs_parallel_agrees(self):
        sig = Signature((2, 2, 1))
        a = count_lattice_points(sig, 3).count
        b = count_lattice_points(sig, 3, jobs=3).count
        assert a == b

    def test_kernels_agree(self):
        from sepkit import _countpure
        from sepkit.counting import _facet_rows, USING_COMPILED_KERNEL

        sig = Signature((1, 2, 2))
        facets = _facet_rows(sig)
        n = sig.total
        pure = _countpure.count_range(3, n, facets, -3, 3)
        assert pure == count_lattice_points(sig, 3).count
        if USING_COMPILED_KERNEL:
            from sepkit import _countcore

            assert _countcore.count_range(3, n, facets, -3, 3) == pure


class TestInterpolation:
    def test_examples(self):
        assert ehrhart_interpolate(Signature((1, 1))) == Poly((1, 2))
        assert ehrhart_interpolate(Signature((1, 2))) == Poly((1, 2, 2))
        assert ehrhart_interpolate(Signature((1, 1, 1))) == Poly((1, 3, 3))

    @pytest.mark.parametrize("sig", signatures_with_total(2, 6), ids=str)
    def test_reflexivity_functional_equation(self, sig):
        """Ehrhart-Macdonald with a single interior point:
        (-1)^d E(-k) = E(k-1)."""
        e = ehrhart_interpolate(sig)
        d = e.degree
        for k in range(1, d + 1):
            assert (-1) ** d * e(-k) == e(k - 1)


class TestHStarOracle:
    def test_examples(self):
        assert hstar_oracle(Signature((1, 1))).poly == Poly((1, 1))
        assert hstar_oracle(Signature((2, 2))).poly == Poly((1, 5, 5, 1))
        assert hstar_oracle(Signature((1, 1, 1))).poly == Poly((1, 4, 1))

    def test_palindromic(self):
        for sig in signatures_with_total(2, 5):
            assert hstar_oracle(sig).is_palindromic()
