"""Brute-force ground truth: lattice-point counts, Ehrhart interpolation and
h* extraction for symmetric edge polytopes.

Membership in the k-th dilate is tested against the facet description: x
belongs to k * P_G iff sum(x) = 0, every |x_v| <= k (the polytope sits in
the unit box) and <lam, x> <= k for every facet labeling lam.  Labelings are
used in their min-0 normalization; on the zero-sum hyperplane any constant
shift of lam changes the dot product by nothing, so the normalization is
irrelevant to the test.

The inner loop lives in a compiled Cython kernel when available, with a
pure-Python fallback selected at import time.  Both kernels take a range for
the first coordinate, which is how counting parallelizes.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graphs import Signature, enumerate_facet_labelings
from .polynomial import Poly, HStar, hstar_from_ehrhart

try:  # compiled kernel, if the extension was built
    from . import _countcore as _kernel

    USING_COMPILED_KERNEL = True
except ImportError:  # pragma: no cover - depends on build environment
    from . import _countpure as _kernel

    USING_COMPILED_KERNEL = False

from . import _countpure

DEFAULT_MAX_TOTAL = 6
HARD_MAX_TOTAL = 7  # allowed only by explicit request


class SizeExceeded(ValueError):
    """The requested computation is beyond the configured size bound."""


@dataclass(frozen=True)
class DilationCount:
    """Number of lattice points in the k-th dilate."""

    k: int
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("every dilate contains the origin")
        if self.count % 2 == 0:
            raise ValueError("central symmetry forces an odd count")


def _check_bound(sig: Signature, max_total: Optional[int]) -> None:
    bound = DEFAULT_MAX_TOTAL if max_total is None else max_total
    if sig.total > bound:
        raise SizeExceeded(
            f"signature total {sig.total} exceeds bound {bound}; "
            f"pass an explicit bound (<= {HARD_MAX_TOTAL}) to override"
        )
    if sig.k < 2:
        raise ValueError("need at least two classes")


def _facet_rows(sig: Signature) -> list[list[int]]:
    return [list(lam.values) for lam in enumerate_facet_labelings(sig)]


def count_lattice_points(
    sig: Signature,
    k: int,
    max_total: Optional[int] = None,
    jobs: int = 1,
    _facets: Optional[list[list[int]]] = None,
) -> DilationCount:
    """Exact |k P_G  ∩ Z^n| by pruned depth-first enumeration."""
    if k < 0:
        raise ValueError("dilation must be nonnegative")
    _check_bound(sig, max_total)
    if k == 0:
        return DilationCount(0, 1)
    n = sig.total
    facets = _facet_rows(sig) if _facets is None else _facets
    if jobs <= 1:
        total = _kernel.count_range(k, n, facets, -k, k)
    else:
        # split the first coordinate's value range; summation order is
        # irrelevant, so the result is deterministic regardless of scheduling
        values = list(range(-k, k + 1))
        chunks = [values[i::jobs] for i in range(jobs)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(
                    lambda ch: sum(_kernel.count_range(k, n, facets, x, x) for x in ch),
                    chunk,
                )
                for chunk in chunks
                if chunk
            ]
            total = sum(f.result() for f in futures)
    return DilationCount(k, total)


def dilation_counts(
    sig: Signature, up_to: int, max_total: Optional[int] = None, jobs: int = 1
) -> list[DilationCount]:
    facets = _facet_rows(sig)
    return [
        count_lattice_points(sig, k, max_total=max_total, jobs=jobs, _facets=facets)
        for k in range(up_to + 1)
    ]


class InterpolationGuardFailed(ArithmeticError):
    """The degree-d interpolant missed the count at d+1 (counting bug)."""


def _lagrange(points: list[tuple[int, int]]) -> Poly:
    """Exact Lagrange interpolation through integer points."""
    total = Poly.zero()
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        term = Poly.one()
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            term = term * Poly((-xj, 1))
            denom *= xi - xj
        total = total + term * (Fraction(yi) / denom)
    return total


def ehrhart_interpolate(
    sig: Signature, max_total: Optional[int] = None, jobs: int = 1
) -> Poly:
    """Unique degree-d interpolant through the counts at k = 0..d, with an
    integrality-and-value guard at k = d + 1."""
    _check_bound(sig, max_total)
    d = sig.dim
    facets = _facet_rows(sig)
    counts = [
        count_lattice_points(sig, k, max_total=max_total, jobs=jobs, _facets=facets).count
        for k in range(d + 2)
    ]
    poly = _lagrange([(k, counts[k]) for k in range(d + 1)])
    guard = poly(d + 1)
    if guard.denominator != 1 or int(guard) != counts[d + 1]:
        raise InterpolationGuardFailed(
            f"interpolant gives E({d + 1}) = {guard}, enumeration gives {counts[d + 1]}"
        )
    return poly


def hstar_oracle(sig: Signature, max_total: Optional[int] = None, jobs: int = 1) -> HStar:
    """Ground-truth h*: interpolate the Ehrhart polynomial, then convert."""
    return hstar_from_ehrhart(ehrhart_interpolate(sig, max_total=max_total, jobs=jobs), sig.dim)


def enumerate_dilate_points(sig: Signature, k: int) -> list[tuple[int, ...]]:
    """Explicit point list for small inputs (used by symmetry checks)."""
    return _countpure.enumerate_points(k, sig.total, _facet_rows(sig))
