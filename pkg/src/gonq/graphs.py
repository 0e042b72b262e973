"""Board graphs for the chip-firing engine.

A queen's graph connects two cells of an m-columns-by-n-rows board whenever
a chess queen could move between them: same row, same column, or a common
slope-plus/minus-1 diagonal.  The toroidal variant additionally lets
diagonals wrap around both board edges; rows and columns are cliques either
way, so wrapping adds nothing there.

All graphs here are immutable simple connected graphs.  Adjacency is stored
as one bit-set per vertex (a Python int used as a bitmask), so burning-edge
counts and cut sizes are popcounts.  On very small tori several queen-move
relations can join the same cell pair; the pair then carries several
``EdgeKind`` labels but still a single edge.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

import numpy as np

__all__ = [
    "EdgeKind",
    "GridSpec",
    "Graph",
    "queen_graph",
    "toroidal_queen_graph",
    "complete_graph",
]


class EdgeKind(Enum):
    """How a queen move relates two cells; one pair may carry several kinds."""

    ROW = "row"
    COLUMN = "col"
    DIAG_POS = "dp"
    DIAG_NEG = "dn"


# DOT export uses the first kind present, in this fixed order.
KIND_ORDER = (EdgeKind.ROW, EdgeKind.COLUMN, EdgeKind.DIAG_POS, EdgeKind.DIAG_NEG)


@dataclass(frozen=True)
class GridSpec:
    """Board geometry: m columns, n rows, optionally toroidal diagonals."""

    m: int
    n: int
    toroidal: bool = False

    def __post_init__(self) -> None:
        if self.m < 2 or self.n < 2:
            raise ValueError(f"board must be at least 2x2, got {self.m}x{self.n}")

    def vertex_id(self, x: int, y: int) -> int:
        """Row-major id of cell (x, y), counting from the bottom-left."""
        if not (0 <= x < self.m and 0 <= y < self.n):
            raise ValueError(f"cell ({x}, {y}) outside {self.m}x{self.n} board")
        return y * self.m + x

    def coords(self, v: int) -> tuple[int, int]:
        """Cell (x, y) of vertex id v."""
        return v % self.m, v // self.m


class Graph:
    """Immutable simple undirected graph, optionally grid-backed.

    ``edge_kinds`` maps each edge (u, v) with u < v to the frozenset of
    :class:`EdgeKind` labels it carries; graphs without board geometry
    (e.g. complete graphs, ad-hoc fixtures) have no labels.
    """

    __slots__ = ("vertex_count", "grid", "_masks", "_edge_kinds", "_edges", "_csr")

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        *,
        grid: GridSpec | None = None,
        edge_kinds: Mapping[tuple[int, int], frozenset[EdgeKind]] | None = None,
    ):
        if vertex_count < 1:
            raise ValueError("graph needs at least one vertex")
        masks = [0] * vertex_count
        normalized: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) has an out-of-range endpoint")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            normalized.add((u, v))
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.vertex_count = vertex_count
        self.grid = grid
        self._masks = tuple(masks)
        self._edges = tuple(sorted(normalized))
        self._edge_kinds = dict(edge_kinds) if edge_kinds else {}
        self._csr: tuple[np.ndarray, np.ndarray] | None = None
        if not self._connected():
            raise ValueError("graph is not connected")

    def _connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            v = 0
            f = frontier
            while f:
                if f & 1:
                    reach |= self._masks[v]
                f >>= 1
                v += 1
            frontier = reach & ~seen
            seen |= reach
        return seen == (1 << self.vertex_count) - 1

    # -- queries ---------------------------------------------------------

    def check_vertex(self, v: int) -> int:
        if not (0 <= v < self.vertex_count):
            raise ValueError(f"vertex {v} out of range [0, {self.vertex_count})")
        return v

    def neighbor_mask(self, v: int) -> int:
        return self._masks[self.check_vertex(v)]

    def neighbors(self, v: int) -> tuple[int, ...]:
        mask = self.neighbor_mask(v)
        out = []
        w = 0
        while mask:
            if mask & 1:
                out.append(w)
            mask >>= 1
            w += 1
        return tuple(out)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.neighbor_mask(u) >> self.check_vertex(v) & 1)

    def degree(self, v: int) -> int:
        return self.neighbor_mask(v).bit_count()

    def min_degree(self) -> int:
        return min(m.bit_count() for m in self._masks)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def edge_kind_set(self, u: int, v: int) -> frozenset[EdgeKind]:
        if u > v:
            u, v = v, u
        return self._edge_kinds.get((u, v), frozenset())

    def vertex_set_mask(self, vertices: Iterable[int]) -> int:
        mask = 0
        for v in vertices:
            mask |= 1 << self.check_vertex(v)
        return mask

    def cut_edge_count(self, u_set: Iterable[int]) -> int:
        """Number of edges between ``u_set`` and its complement."""
        mask = self.vertex_set_mask(u_set)
        if mask == 0 or mask == (1 << self.vertex_count) - 1:
            raise ValueError("cut requires a nonempty proper vertex subset")
        total = 0
        rest = mask
        v = 0
        while rest:
            if rest & 1:
                total += (self._masks[v] & ~mask).bit_count()
            rest >>= 1
            v += 1
        return total

    # -- grid structure ----------------------------------------------------

    def _require_grid(self) -> GridSpec:
        if self.grid is None:
            raise ValueError("operation requires a grid-backed graph")
        return self.grid

    def row_vertices(self, i: int) -> tuple[int, ...]:
        """Vertices of row i (the m cells with y = i)."""
        g = self._require_grid()
        if not 0 <= i < g.n:
            raise ValueError(f"row {i} out of range [0, {g.n})")
        return tuple(range(i * g.m, (i + 1) * g.m))

    def column_vertices(self, j: int) -> tuple[int, ...]:
        """Vertices of column j (the n cells with x = j)."""
        g = self._require_grid()
        if not 0 <= j < g.m:
            raise ValueError(f"column {j} out of range [0, {g.m})")
        return tuple(range(j, g.m * g.n, g.m))

    # -- matrix / kernel views ----------------------------------------------

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency in CSR form (indptr, indices), int64, neighbors ascending."""
        if self._csr is None:
            indptr = np.zeros(self.vertex_count + 1, dtype=np.int64)
            chunks = []
            for v in range(self.vertex_count):
                nbrs = self.neighbors(v)
                indptr[v + 1] = indptr[v] + len(nbrs)
                chunks.extend(nbrs)
            self._csr = (indptr, np.array(chunks, dtype=np.int64))
        return self._csr

    def laplacian(self) -> np.ndarray:
        """Graph Laplacian (degree matrix minus adjacency matrix), int64."""
        n = self.vertex_count
        lap = np.zeros((n, n), dtype=np.int64)
        for u, v in self._edges:
            lap[u, v] -= 1
            lap[v, u] -= 1
            lap[u, u] += 1
            lap[v, v] += 1
        return lap

    # -- export -------------------------------------------------------------

    def _vertex_label(self, v: int) -> str:
        if self.grid is not None:
            x, y = self.grid.coords(v)
            return f"c{x}r{y}"
        return f"v{v}"

    def to_dot(self) -> str:
        lines = ["graph G {"]
        for v in range(self.vertex_count):
            lines.append(f'  {v} [label="{self._vertex_label(v)}"];')
        for u, v in self._edges:
            kinds = self.edge_kind_set(u, v)
            attr = ""
            for kind in KIND_ORDER:
                if kind in kinds:
                    attr = f' [kind="{kind.value}"]'
                    break
            lines.append(f"  {u} -- {v}{attr};")
        lines.append("}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        if self.grid is not None:
            return {
                "m": self.grid.m,
                "n": self.grid.n,
                "toroidal": self.grid.toroidal,
                "edges": [list(e) for e in self._edges],
            }
        return {
            "vertices": self.vertex_count,
            "edges": [list(e) for e in self._edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @staticmethod
    def from_json_dict(data: dict) -> "Graph":
        edges = [tuple(e) for e in data["edges"]]
        if data.get("m") is not None:
            m, n = data["m"], data["n"]
            g = (toroidal_queen_graph if data.get("toroidal") else queen_graph)(m, n)
            if g.edges != tuple(sorted(edges)):
                raise ValueError("edge list does not match the declared board")
            return g
        return Graph(data["vertices"], edges)

    @staticmethod
    def from_json(text: str) -> "Graph":
        return Graph.from_json_dict(json.loads(text))

    def __repr__(self) -> str:
        tag = ""
        if self.grid is not None:
            tag = f", {'TQ' if self.grid.toroidal else 'Q'}[{self.grid.m}x{self.grid.n}]"
        return f"Graph(n={self.vertex_count}, m={self.edge_count}{tag})"


def _board_kinds(m: int, n: int, toroidal: bool) -> dict[tuple[int, int], set[EdgeKind]]:
    kinds: dict[tuple[int, int], set[EdgeKind]] = {}

    def add(u: int, v: int, kind: EdgeKind) -> None:
        if u > v:
            u, v = v, u
        kinds.setdefault((u, v), set()).add(kind)

    def vid(x: int, y: int) -> int:
        return y * m + x

    for y in range(n):
        for x1 in range(m):
            for x2 in range(x1 + 1, m):
                add(vid(x1, y), vid(x2, y), EdgeKind.ROW)
    for x in range(m):
        for y1 in range(n):
            for y2 in range(y1 + 1, n):
                add(vid(x, y1), vid(x, y2), EdgeKind.COLUMN)
    for y in range(n):
        for x in range(m):
            for k in range(1, min(m - x, n - y)):
                add(vid(x, y), vid(x + k, y + k), EdgeKind.DIAG_POS)
            for k in range(1, min(m - x, y + 1)):
                add(vid(x, y), vid(x + k, y - k), EdgeKind.DIAG_NEG)
    if toroidal:
        period = math.lcm(m, n)
        for y in range(n):
            for x in range(m):
                for k in range(1, period):
                    add(vid(x, y), vid((x + k) % m, (y + k) % n), EdgeKind.DIAG_POS)
                    add(vid(x, y), vid((x + k) % m, (y - k) % n), EdgeKind.DIAG_NEG)
    return kinds


def _board_graph(m: int, n: int, toroidal: bool) -> Graph:
    grid = GridSpec(m, n, toroidal)
    kinds = _board_kinds(m, n, toroidal)
    return Graph(
        m * n,
        kinds.keys(),
        grid=grid,
        edge_kinds={e: frozenset(ks) for e, ks in kinds.items()},
    )


def queen_graph(m: int, n: int) -> Graph:
    """The m-by-n queen's graph: cells adjacent along rows, columns, diagonals."""
    return _board_graph(m, n, toroidal=False)


def toroidal_queen_graph(m: int, n: int) -> Graph:
    """The m-by-n toroidal queen's graph: diagonals wrap modulo the board."""
    return _board_graph(m, n, toroidal=True)


def complete_graph(n: int) -> Graph:
    """Complete graph on n >= 2 vertices (no grid, no edge kinds)."""
    if n < 2:
        raise ValueError(f"complete graph needs n >= 2, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
