"""Recursion solving, the relation catalogue, and the two scans."""

from fractions import Fraction

import pytest

from sepkit.formulas import ehrhart_1mn, ehrhart_bipartite
from sepkit.polynomial import cross_polynomial
from sepkit.recursion import (
    CrossDegreeMismatch,
    DegreeMismatch,
    RelationFailed,
    conjecture_scan,
    corollary_scan,
    cross_degree_of_signature,
    nonnegative_solution,
    reproduce_known_relations,
    solve_recursion,
    solve_recursion_cross,
)
from sepkit.graphs import Signature

F = Fraction


class TestSolver:
    def test_example_a(self):
        sol = solve_recursion(ehrhart_1mn(1, 2), ehrhart_bipartite(1, 2), [ehrhart_bipartite(1, 1)])
        assert sol.status == "unique"
        assert sol.alpha == F(2, 3) and sol.alphas == [F(1, 3)]

    def test_example_bipartite(self):
        sol = solve_recursion(
            ehrhart_bipartite(2, 3), ehrhart_bipartite(1, 3), [ehrhart_bipartite(1, 2)]
        )
        assert sol.alpha == F(1, 2) and sol.alphas == [F(1, 2)]

    def test_example_cross(self):
        sol = solve_recursion(cross_polynomial(5), cross_polynomial(4), [cross_polynomial(3)])
        assert sol.alpha == F(1, 5) and sol.alphas == [F(4, 5)]

    def test_degree_gate(self):
        with pytest.raises(DegreeMismatch):
            solve_recursion(cross_polynomial(4), cross_polynomial(4), [])

    def test_inconsistent_reported(self):
        sol = solve_recursion(cross_polynomial(4), cross_polynomial(3), [])
        assert sol.status == "none"

    def test_underdetermined_reports_kernel(self):
        h = ehrhart_bipartite(1, 3)
        sol = solve_recursion(ehrhart_1mn(1, 4), ehrhart_bipartite(1, 4), [h, h])
        assert sol.status == "underdetermined" and sol.kernel_dim == 1
        witness = nonnegative_solution(sol)
        assert witness is not None and all(c >= 0 for c in witness)


class TestSolverAgainstRationalGauss:
    """Randomized cross-implementation check: the fraction-free solver must
    agree exactly with a plain Fraction-based Gauss elimination."""

    @staticmethod
    def _frac_solve(columns, hs_rhs):
        ncols = len(columns)
        nrows = 1 + max([hs_rhs.degree] + [c.degree for c in columns])
        A = [[F(c[i]) for c in columns] + [F(hs_rhs[i])] for i in range(nrows)]
        rank, piv_cols = 0, []
        for col in range(ncols):
            piv = next((r for r in range(rank, nrows) if A[r][col] != 0), None)
            if piv is None:
                continue
            A[rank], A[piv] = A[piv], A[rank]
            A[rank] = [v / A[rank][col] for v in A[rank]]
            for r in range(nrows):
                if r != rank and A[r][col]:
                    A[r] = [a - A[r][col] * b for a, b in zip(A[r], A[rank])]
            piv_cols.append(col)
            rank += 1
        if any(
            all(A[r][c] == 0 for c in range(ncols)) and A[r][ncols] != 0
            for r in range(nrows)
        ):
            return "none", None
        if rank < ncols:
            return "underdetermined", ncols - rank
        sol = [F(0)] * ncols
        for r, c in enumerate(piv_cols):
            sol[c] = A[r][ncols]
        return "unique", sol

    @pytest.mark.parametrize("seed", range(4))
    def test_randomized_agreement(self, seed):
        import random

        from sepkit.polynomial import Poly
        from sepkit.recursion import _solve_exact

        rnd = random.Random(seed)
        for _ in range(60):
            ncols = rnd.randint(1, 5)
            deg = rnd.randint(ncols, ncols + 3)
            cols = [
                Poly(
                    [F(rnd.randint(-6, 6), rnd.randint(1, 4)) for _ in range(deg)]
                    + [rnd.randint(0, 3)]
                )
                for _ in range(ncols)
            ]
            if rnd.random() < 0.5:
                rhs = Poly.zero()
                for c in cols:
                    rhs = rhs + F(rnd.randint(-5, 5), rnd.randint(1, 3)) * c
            else:
                rhs = Poly([rnd.randint(-6, 6) for _ in range(deg + 1)])
            if rnd.random() < 0.3 and ncols >= 2:
                cols[-1] = cols[0] * F(rnd.randint(1, 3))
            got = _solve_exact(cols, rhs)
            want_status, want = self._frac_solve(cols, rhs)
            assert got.status == want_status
            if want_status == "unique":
                assert got.coefficients == want
            elif want_status == "underdetermined":
                assert got.kernel_dim == want
                rec = Poly.zero()
                for k, c in zip(got.particular, cols):
                    rec = rec + k * c
                assert rec == rhs
                for vec in got.kernel:
                    z = Poly.zero()
                    for k, c in zip(vec, cols):
                        z = z + k * c
                    assert z.is_zero()


class TestCrossSolver:
    @pytest.mark.parametrize("n", range(3, 11))
    def test_agrees_with_direct_on_relations(self, n):
        cases = [
            (ehrhart_1mn(1, n), ehrhart_bipartite(1, n), [ehrhart_bipartite(1, n - 1)]),
            (ehrhart_bipartite(2, n), ehrhart_bipartite(1, n), [ehrhart_bipartite(1, n - 1)]),
            (cross_polynomial(n), cross_polynomial(n - 1), [cross_polynomial(n - 2)]),
        ]
        for f, g, hs in cases:
            direct = solve_recursion(f, g, hs)
            cross = solve_recursion_cross(f, g, hs)
            assert direct.status == cross.status == "unique"
            assert direct.coefficients == cross.coefficients

    @pytest.mark.parametrize("n", range(3, 9))
    def test_agrees_on_catalogued_instances(self, n):
        from sepkit.recursion import _relation_instances

        for inst in _relation_instances(n):
            direct = solve_recursion(inst["f"], inst["g"], inst["hs"])
            try:
                cross = solve_recursion_cross(inst["f"], inst["g"], inst["hs"])
            except CrossDegreeMismatch:
                continue  # duplicate cross-degrees break the triangular sweep
            assert direct.status == cross.status
            if direct.status == "unique":
                assert direct.coefficients == cross.coefficients, inst["relation"]

    def test_pure_alpha_edge_case(self):
        # C_(d+1) = alpha (2x+1) C_d holds only for d = 0
        assert solve_recursion_cross(cross_polynomial(1), cross_polynomial(0), []).alpha == 1
        assert solve_recursion_cross(cross_polynomial(4), cross_polynomial(3), []).status == "none"

    def test_duplicate_cross_degrees_rejected(self):
        h = ehrhart_bipartite(1, 3)
        with pytest.raises(CrossDegreeMismatch):
            solve_recursion_cross(ehrhart_1mn(1, 4), ehrhart_bipartite(1, 4), [h, h])


class TestKnownRelations:
    def test_relation_a_closed_form(self):
        for n in range(2, 11):
            rep = reproduce_known_relations(n, strict=False)
            row = next(r for r in rep["rows"] if r["relation"] == "a")
            assert row["verified"]
            assert row["coefficients"] == [
                str(F(n + 2, 2 * (n + 1))),
                str(F(n, 2 * (n + 1))),
            ] or row["coefficients"] == [
                f"{n + 2}/{2 * (n + 1)}",
                f"{n}/{2 * (n + 1)}",
            ]

    def test_bipartite_rows(self):
        rep = reproduce_known_relations(3, strict=False)
        row1 = next(r for r in rep["rows"] if r["relation"] == "bipartite-1")
        assert row1["coefficients"] == ["1/2", "1/2"]
        row2 = next(r for r in rep["rows"] if r["relation"] == "bipartite-2")
        assert row2["coefficients"] == ["1/3", "1/2", "1/6"]
        row3 = next(r for r in rep["rows"] if r["relation"] == "bipartite-3")
        assert row3["verified"] and "ambiguous" in row3["note"]

    def test_interlacing_conclusions(self):
        rep = reproduce_known_relations(4, strict=False)
        assert len(rep["interlacings"]) == 4
        assert all(i["certified"] for i in rep["interlacings"])

    def test_displayed_f_g_j_fail_as_stated(self):
        """The displayed relations (f), (g), (j) admit no nonnegative solution
        for most n: the solutions are unique with a negative coefficient.
        This is a defect of the source display; the package reports it
        honestly rather than papering over it."""
        rep = reproduce_known_relations(5, strict=False)
        bad = {r["relation"] for r in rep["rows"] if not r["verified"]}
        assert bad == {"g", "j"}
        with pytest.raises(RelationFailed):
            reproduce_known_relations(5, strict=True)

    def test_verified_subset_at_n2(self):
        rep = reproduce_known_relations(2, strict=False)
        bad = {r["relation"] for r in rep["rows"] if not r["verified"]}
        assert bad == {"f"}


class TestCorollaryScan:
    @pytest.mark.parametrize("n", range(4, 11))
    def test_m4_alpha2_closed_form(self, n):
        rep = corollary_scan(4, n)
        closed = F(n - n**3, 8 * (5 * n**3 + 39 * n**2 + 100 * n + 96))
        assert rep["alpha2_matches"] and rep["alpha2_negative"]
        assert rep["alpha2"] == (
            f"{closed.numerator}/{closed.denominator}" if closed.denominator != 1 else str(closed)
        )

    def test_low_m_all_positive(self):
        for m in (1, 2, 3):
            rep = corollary_scan(m, m + 3)
            up = rep["rows"][0]
            assert up["status"] == "unique"
            assert all(s == "+" for s in up["signs"])

    def test_bad_range(self):
        with pytest.raises(ValueError):
            corollary_scan(5, 4)


class TestConjectureScan:
    def test_no_violations(self):
        rep = conjecture_scan(6, 6)
        assert rep["violations"] == 0
        assert all(i["certified"] for i in rep["interlacings"])

    def test_spec_examples(self):
        assert cross_degree_of_signature(Signature((2, 2, 1))) == 2
        assert cross_degree_of_signature(Signature((1, 1))) == 0
        row = next(r for r in conjecture_scan(5, 2)["rows"] if r["signature"] == "1,2,2")
        assert row["bounds"] == [1, 3] and row["ok"]

    def test_full_sum_reading_reported(self):
        rep = conjecture_scan(4, 2)
        star = next(r for r in rep["rows"] if r["signature"] == "1,3")
        assert star["ok"] and not star["full_sum_ok"]
