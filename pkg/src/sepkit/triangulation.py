"""The unimodular boundary triangulation as directed spanning trees, the
inedge statistic, and the resulting h*-polynomials.

A square-free degree-d monomial in the directed-edge variables survives the
Groebner basis (no leading monomial divides it) exactly when it encodes a
directed spanning tree whose simplex belongs to the boundary triangulation.
The h*-polynomial is the histogram of the inedge statistic over these
standard trees: fixing the smallest vertex r as root, a tree edge counts as
ingoing when it points toward the component containing r.

Each standard tree's simplex lies in exactly one facet: the labeling whose
tight edges (those with label increasing by one along the edge) contain all
tree edges.  Splitting the histogram by the facet's type reproduces the two
summands of the closed tripartite formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Iterator, Optional

from .counting import SizeExceeded
from .graphs import (
    DirectedEdge,
    FacetLabeling,
    FacetType,
    Signature,
    classify_labeling,
    edge_order,
    enumerate_facet_labelings,
)
from .grobner import VarTable, build_basis
from .polynomial import HStar, Poly

DEFAULT_TREE_MAX_TOTAL = 7


class AmbiguousFacet(RuntimeError):
    """A boundary simplex matched an unexpected number of facets."""


@dataclass(frozen=True)
class DirTree:
    """A directed spanning tree, i.e. a boundary simplex of the triangulation."""

    edges: tuple[DirectedEdge, ...]


def _is_spanning_tree(n: int, und: tuple[tuple[int, int], ...]) -> bool:
    if len(und) != n - 1:
        return False
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, w in und:
        ru, rw = find(u), find(w)
        if ru == rw:
            return False
        parent[ru] = rw
    return True


def _lead_sets(sig: Signature) -> tuple[set[frozenset[int]], set[frozenset[int]]]:
    """Leading monomials with all-distinct variables, as variable sets,
    split by degree.  Leads with repeated variables can never divide a
    square-free tree monomial."""
    basis = build_basis(sig)
    deg2, deg3 = set(), set()
    for e in basis:
        s = frozenset(e.lead)
        if len(s) != len(e.lead):
            continue
        (deg2 if len(e.lead) == 2 else deg3).add(s)
    return deg2, deg3


def enumerate_standard_trees(
    sig: Signature, max_total: Optional[int] = None
) -> Iterator[DirTree]:
    """Directed spanning trees whose monomial avoids every leading term.

    Deterministic order: undirected trees by sorted edge list, then
    orientations lexicographically (forward before reverse on each edge).
    """
    bound = DEFAULT_TREE_MAX_TOTAL if max_total is None else max_total
    if sig.total > bound:
        raise SizeExceeded(f"signature total {sig.total} exceeds bound {bound}")
    if sig.k < 2:
        raise ValueError("need at least two classes")
    n = sig.total
    vt = VarTable(sig)
    deg2, deg3 = _lead_sets(sig)
    edges = edge_order(sig)
    for und in combinations(edges, n - 1):
        if not _is_spanning_tree(n, und):
            continue
        for orient in product((0, 1), repeat=n - 1):
            dirs = tuple(
                DirectedEdge(u, w) if o == 0 else DirectedEdge(w, u)
                for (u, w), o in zip(und, orient)
            )
            mono = [vt.var(e.tail, e.head) for e in dirs]
            if any(frozenset(p) in deg2 for p in combinations(mono, 2)):
                continue
            if deg3 and any(frozenset(p) in deg3 for p in combinations(mono, 3)):
                continue
            yield DirTree(dirs)


def inedge(tree: DirTree, root: int) -> int:
    """Number of tree edges directed toward the side containing the root.

    The unique path from an edge's tail to the root uses the edge itself
    exactly when the head lies on the root side, so orient the underlying
    tree at the root and count edges pointing from child to parent.
    """
    adj: dict[int, list[int]] = {}
    for e in tree.edges:
        adj.setdefault(e.tail, []).append(e.head)
        adj.setdefault(e.head, []).append(e.tail)
    parent = {root: root}
    stack = [root]
    while stack:
        u = stack.pop()
        for w in adj.get(u, ()):
            if w not in parent:
                parent[w] = u
                stack.append(w)
    count = 0
    for e in tree.edges:
        if parent.get(e.tail) == e.head:
            count += 1
    return count


def hstar_triangulation(sig: Signature, max_total: Optional[int] = None) -> HStar:
    """h* as the inedge histogram over all standard trees."""
    d = sig.dim
    root = 1
    hist = [0] * (d + 1)
    for tree in enumerate_standard_trees(sig, max_total=max_total):
        hist[inedge(tree, root)] += 1
    return HStar(Poly(hist), d)


def facet_of_tree(
    sig: Signature, tree: DirTree, labelings: list[FacetLabeling]
) -> FacetLabeling:
    """The unique facet whose tight-edge set contains every tree edge.

    Directed edge (u, v) carries e_v - e_u, so it is tight for lambda when
    lambda(v) = lambda(u) + 1.
    """
    matches = [
        lam
        for lam in labelings
        if all(lam[e.head] == lam[e.tail] + 1 for e in tree.edges)
    ]
    if len(matches) != 1:
        raise AmbiguousFacet(
            f"tree {tree.edges} lies in {len(matches)} facets, expected 1"
        )
    return matches[0]


def hstar_split_by_facet_type(
    sig: Signature, max_total: Optional[int] = None
) -> tuple[Poly, Poly]:
    """Inedge histograms (h_type_i, h_type_ii) split by the facet type of
    each standard tree's simplex.  Requires k >= 3."""
    if sig.k < 3:
        raise ValueError("facet-type split needs k >= 3")
    d = sig.dim
    root = 1
    labelings = enumerate_facet_labelings(sig)
    hist_i = [0] * (d + 1)
    hist_ii = [0] * (d + 1)
    for tree in enumerate_standard_trees(sig, max_total=max_total):
        lam = facet_of_tree(sig, tree, labelings)
        kind = classify_labeling(sig, lam)
        target = hist_i if kind is FacetType.TYPE_I else hist_ii
        target[inedge(tree, root)] += 1
    return Poly(hist_i), Poly(hist_ii)


def tree_dump(tree: DirTree) -> str:
    """One-line tree format: 'u>v' tokens in edge order."""
    return " ".join(f"{e.tail}>{e.head}" for e in tree.edges)


# -- planar spanning trees ----------------------------------------------------


def planar_tree_count(a: int, b: int) -> int:
    """Closed count of planar spanning trees between ordered sets of sizes
    a and b: binom(a + b - 2, b - 1)."""
    if a < 1 or b < 1:
        raise ValueError("both sides must be nonempty")
    return comb(a + b - 2, b - 1)


def enumerate_planar_trees(a: int, b: int) -> list[tuple[tuple[int, int], ...]]:
    """All planar spanning trees between A = 0..a-1 and B = 0..b-1.

    A subset E of A x B qualifies when |E| = a + b - 1, every element of A
    and B is covered, and no two edges cross: (x, y), (x', y') with x < x'
    forces y <= y'.  Depth-first over pairs in lexicographic order; partial
    choices violating the crossing condition or coverage feasibility are cut
    immediately, so the search stays proportional to the output.
    """
    if a < 1 or b < 1:
        raise ValueError("both sides must be nonempty")
    target = a + b - 1
    pairs = [(x, y) for x in range(a) for y in range(b)]
    out: list[tuple[tuple[int, int], ...]] = []
    chosen: list[tuple[int, int]] = []

    def dfs(idx: int) -> None:
        if len(chosen) == target:
            if len({x for x, _ in chosen}) == a and len({y for _, y in chosen}) == b:
                out.append(tuple(chosen))
            return
        if idx == len(pairs) or len(chosen) + len(pairs) - idx < target:
            return
        x, y = pairs[idx]
        # an A-vertex below x with no edge can never be covered later
        uncovered = {x2 for x2 in range(x)} - {x2 for x2, _ in chosen}
        if uncovered:
            return
        if all((x2 - x) * (y2 - y) >= 0 for x2, y2 in chosen):
            chosen.append((x, y))
            dfs(idx + 1)
            chosen.pop()
        dfs(idx + 1)

    dfs(0)
    return out


def planar_trees(a: int, b: int) -> tuple[int, list[tuple[tuple[int, int], ...]]]:
    """(closed-form count, explicit enumeration); the two always agree."""
    return planar_tree_count(a, b), enumerate_planar_trees(a, b)
