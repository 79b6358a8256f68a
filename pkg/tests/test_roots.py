"""Sturm counting, canonical-line certificates, interlacing."""

import json
import random
from fractions import Fraction

import pytest

from sepkit.formulas import ehrhart_1mn, ehrhart_bipartite
from sepkit.polynomial import HStar, Poly, cross_polynomial, ehrhart_from_hstar
from sepkit.roots import (
    NotCL,
    NotSymmetric,
    cl_transform,
    imaginary_bounds,
    interlaces_on_cl,
    is_cl,
    isolate_real_roots,
    sqrt_bounds,
    squarefree_decomposition,
    sturm_chain,
    sturm_chain_primitive,
    sturm_count,
)

F = Fraction


class TestCLTransform:
    def test_quadratic(self):
        t = cl_transform(Poly((1, 2, 2)))
        assert t.parity == 0 and t.half_square == Poly((2, 2))

    def test_linear(self):
        t = cl_transform(Poly((1, 2)))
        assert t.parity == 1 and t.half_square.degree == 0

    def test_cross_three(self):
        t = cl_transform(cross_polynomial(3))
        h = t.half_square
        assert t.parity == 1 and h.degree == 1
        assert -h[0] / h[1] == -5  # root w = -5, so roots -1/2 +- i sqrt(5)/2

    def test_rejects_asymmetric(self):
        with pytest.raises(NotSymmetric):
            cl_transform(Poly((1, 1)))


class TestSturm:
    def test_examples(self):
        assert sturm_count(Poly((1, 1)), None, F(0)) == 1
        assert sturm_count(Poly((-1, 0, 1)), None, F(0)) == 1
        assert sturm_count(Poly((1, 0, 1)), None, None) == 0

    def test_half_open_endpoints(self):
        p = Poly((-1, 0, 1))  # roots -1, 1
        assert sturm_count(p, None, F(-1)) == 1
        assert sturm_count(p, F(-1), F(1)) == 1
        assert sturm_count(p, F(-1), F(0)) == 0
        assert sturm_count(p, F(-2), F(1)) == 2

    @pytest.mark.parametrize("seed", range(6))
    def test_primitive_chain_agrees(self, seed):
        rnd = random.Random(seed)
        for _ in range(8):
            deg = rnd.randint(1, 10)
            p = Poly([rnd.randint(-9, 9) for _ in range(deg)] + [rnd.randint(1, 9)])
            p = p.squarefree_part()
            if p.degree < 1:
                continue
            naive, prim = sturm_chain(p), sturm_chain_primitive(p)
            for lo, hi in [(None, F(0)), (None, None), (F(-3), F(2)), (F(0), None), (F(-1), F(1))]:
                assert sturm_count(p, lo, hi, naive) == sturm_count(p, lo, hi, prim)

    def test_isolation(self):
        p = Poly((-2, 1)) * Poly((1, 1)) * Poly((5, 1))  # roots 2, -1, -5
        isos = isolate_real_roots(p.monic())
        assert len(isos) == 3
        for iso in isos:
            assert iso.count() == 1
        spans = [(iso.lo, iso.hi) for iso in isos]
        assert spans == sorted(spans)

    def test_squarefree_decomposition(self):
        p = Poly((1, 1)) ** 2 * Poly((3, 1)) ** 3 * Poly((0, 1))
        decomp = squarefree_decomposition(p)
        assert {(tuple(f.coeffs), m) for f, m in decomp} == {
            ((F(0), F(1)), 1),
            ((F(1), F(1)), 2),
            ((F(3), F(1)), 3),
        }


class TestIsCL:
    def test_on_line(self):
        assert is_cl(Poly((1, 2, 2))).on_cl
        assert is_cl(Poly((1, 1, 1))).on_cl  # roots -1/2 +- i sqrt(3)/2

    def test_symmetric_but_off_line(self):
        cert = is_cl(Poly((-2, 1, 1)))  # (x+2)(x-1)
        assert cert.symmetric and not cert.on_cl

    def test_asymmetric(self):
        cert = is_cl(Poly((1, 1)))
        assert not cert.symmetric and not cert.on_cl

    @pytest.mark.parametrize("n", range(1, 13))
    def test_cross_polytopes(self, n):
        cert = is_cl(ehrhart_bipartite(1, n))
        assert cert.on_cl
        # certificate accounting: every distinct root isolated, all w <= 0,
        # multiplicities summing to half the degree
        assert all(r.hi <= 0 for r in cert.w_roots)
        assert cert.half_square.degree == n // 2
        assert sum(r.multiplicity for r in cert.w_roots) == n // 2

    @pytest.mark.parametrize("m,n", [(2, 4), (3, 5), (2, 7)])
    def test_multiplicity_accounting_bipartite(self, m, n):
        e = ehrhart_bipartite(m, n)
        cert = is_cl(e)
        assert cert.on_cl
        assert sum(r.multiplicity for r in cert.w_roots) == e.degree // 2
        assert all(r.hi <= 0 for r in cert.w_roots)

    def test_certificate_counts_multiplicity(self):
        cert = is_cl(Poly((1, 4, 4)))  # (2x+1)^2
        assert cert.on_cl
        assert [(r.exact, r.multiplicity) for r in cert.w_roots] == [(F(0), 1)]

    def test_serialization_round_trips(self):
        cert = is_cl(ehrhart_bipartite(2, 3))
        blob = json.dumps(cert.as_dict())
        assert json.loads(blob)["on_cl"] is True


class TestInterlacing:
    def test_base_example(self):
        cert = interlaces_on_cl(Poly((1, 2)), Poly((1, 2, 2)))
        assert cert.interlaces

    def test_chain_example(self):
        cert = interlaces_on_cl(Poly((1, 2, 2)), cross_polynomial(3))
        assert cert.interlaces

    def test_shared_root(self):
        cert = interlaces_on_cl(Poly((1, 2)), Poly((1, 4, 4)))
        assert cert.interlaces
        assert cert.shared_factor.degree == 0  # sharing happens at the center

    def test_degree_gate(self):
        with pytest.raises(NotCL):
            interlaces_on_cl(Poly((1, 2)), Poly((1, 0, 0, 4)))

    def test_non_cl_gate(self):
        with pytest.raises(NotCL):
            interlaces_on_cl(Poly((-2, 1, 1)), cross_polynomial(3))

    def test_non_interlacing_pair(self):
        # f's extreme roots must bracket g's; here they nest instead:
        # the w-root of the Ehrhart polynomial of h* = (1,b,1) is (b-6)/(b+2),
        # so b_f = 5 (w = -1/7) sits inside b_g = 1 (w = -5/3)
        f = Poly((1, 2)) * ehrhart_from_hstar(HStar(Poly((1, 5, 1)), 2))
        g = ehrhart_from_hstar(HStar(Poly((1, 1, 1)), 2))
        assert is_cl(f).on_cl and is_cl(g).on_cl
        cert = interlaces_on_cl(g, f)
        assert not cert.interlaces and cert.reason

    @pytest.mark.parametrize("n", range(1, 9))
    def test_ones_chain(self, n):
        assert interlaces_on_cl(ehrhart_bipartite(1, n), ehrhart_bipartite(1, n + 1)).interlaces
        assert interlaces_on_cl(ehrhart_bipartite(1, n), ehrhart_1mn(1, n)).interlaces


class TestBounds:
    def test_sqrt_bounds(self):
        lo, hi = sqrt_bounds(F(3))
        assert lo * lo <= 3 <= hi * hi and hi - lo < F(1, 10**6)

    def test_imaginary_bounds(self):
        lo, hi = imaginary_bounds(F(-4), F(-1))
        assert lo <= F(1, 2) and hi >= 1
