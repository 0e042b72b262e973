"""Exact independence numbers and maximum-independent-set enumeration.

A maximum independent set of a queen's graph is a largest placement of
mutually non-attacking queens.  Rows are cliques, so a set never holds two
vertices of one row; the search therefore walks the board row by row
(choose one cell or skip), pruned by the remaining-rows bound.  Graphs
without board geometry use a branch-and-bound over bitmasks with a greedy
clique-cover bound.  Closed-form independence numbers are also provided
for both board families.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .enumeration import CapExceededError
from .graphs import Graph

__all__ = [
    "IndependentSet",
    "is_independent",
    "max_independent_sets",
    "queen_alpha_formula",
    "toroidal_alpha_formula",
    "DEFAULT_MAX_MIS_VERTICES",
]

DEFAULT_MAX_MIS_VERTICES = 100


@dataclass(frozen=True)
class IndependentSet:
    """A set of pairwise non-adjacent vertices."""

    vertices: frozenset[int]

    def __init__(self, vertices: Iterable[int]):
        object.__setattr__(self, "vertices", frozenset(vertices))

    def sorted_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    """True iff no two vertices of s share an edge."""
    mask = g.vertex_set_mask(s)
    rest = mask
    v = 0
    while rest:
        if rest & 1 and g.neighbor_mask(v) & mask:
            return False
        rest >>= 1
        v += 1
    return True


def _row_search(g: Graph) -> tuple[int, list[int]]:
    grid = g.grid
    m, nrows = grid.m, grid.n
    masks = [g.neighbor_mask(v) for v in range(g.vertex_count)]
    best = -1
    found: list[int] = []

    def search(y: int, chosen_mask: int, size: int) -> None:
        nonlocal best, found
        if size + (nrows - y) < best:
            return
        if y == nrows:
            if size > best:
                best = size
                found = [chosen_mask]
            elif size == best:
                found.append(chosen_mask)
            return
        base = y * m
        for x in range(m):
            v = base + x
            if masks[v] & chosen_mask == 0:
                search(y + 1, chosen_mask | 1 << v, size + 1)
        search(y + 1, chosen_mask, size)

    search(0, 0, 0)
    return best, found


def _general_search(g: Graph) -> tuple[int, list[int]]:
    n = g.vertex_count
    masks = [g.neighbor_mask(v) for v in range(n)]
    best = -1
    found: list[int] = []

    def cover_bound(cand: int) -> int:
        # Greedy clique cover: alpha of the candidate set is at most the
        # number of cliques needed to cover it.
        bound = 0
        rest = cand
        while rest:
            v = (rest & -rest).bit_length() - 1
            avail = rest & masks[v]
            clique = 1 << v
            while avail:
                u = (avail & -avail).bit_length() - 1
                clique |= 1 << u
                avail &= masks[u]
            rest &= ~clique
            bound += 1
        return bound

    def search(cand: int, chosen: int, size: int) -> None:
        nonlocal best, found
        if cand == 0:
            if size > best:
                best = size
                found = [chosen]
            elif size == best:
                found.append(chosen)
            return
        if size + cover_bound(cand) < best:
            return
        v = (cand & -cand).bit_length() - 1
        search(cand & ~(masks[v] | 1 << v), chosen | 1 << v, size + 1)
        search(cand & ~(1 << v), chosen, size)

    search((1 << n) - 1, 0, 0)
    return best, found


def _mask_vertices(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def max_independent_sets(
    g: Graph, *, max_vertices: int = DEFAULT_MAX_MIS_VERTICES
) -> tuple[int, list[IndependentSet]]:
    """Exact independence number and every maximum independent set."""
    if g.vertex_count > max_vertices:
        raise CapExceededError("max_vertices", max_vertices, g.vertex_count)
    alpha, masks = _row_search(g) if g.grid is not None else _general_search(g)
    sets = sorted(_mask_vertices(msk) for msk in masks)
    return alpha, [IndependentSet(s) for s in sets]


def _check_board(m: int, n: int) -> tuple[int, int]:
    if m < 2 or n < 2:
        raise ValueError(f"board must be at least 2x2, got {m}x{n}")
    return (m, n) if m >= n else (n, m)


def queen_alpha_formula(m: int, n: int) -> int:
    """Independence number of the m-by-n queen's graph (argument order free)."""
    m, n = _check_board(m, n)
    if (m, n) == (2, 2):
        return 1
    if (m, n) == (3, 3):
        return 2
    return n


def toroidal_alpha_formula(m: int, n: int) -> int:
    """Independence number of the m-by-n toroidal queen's graph.

    For square boards the three cases are tried top to bottom (they
    overlap); rectangular boards give gcd(m, n).
    """
    m, n = _check_board(m, n)
    if m != n:
        return math.gcd(m, n)
    if math.gcd(6, n) == 1:
        return n
    if n % 3 != 0 and n % 4 != 0:
        return n - 1
    return n - 2
