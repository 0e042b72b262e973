"""Divisors, set firing, Dhar's burning algorithm, and q-reduction.

A divisor assigns an integer number of chips to each vertex; negative
entries are debt.  Firing a vertex set U sends one chip along every edge
leaving U.  Two divisors are equivalent when some sequence of firings turns
one into the other; every divisor has a unique q-reduced representative in
its class, which the fire-spread test of Dhar's algorithm certifies and the
iterated form computes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import backend
from .graphs import Graph

__all__ = [
    "Divisor",
    "FiringScript",
    "BurnReport",
    "divisor_degree",
    "is_effective",
    "fire_set",
    "is_legal_firing",
    "dhar_burn",
    "q_reduce",
    "equivalent",
    "apply_script",
]


class Divisor:
    """Immutable integer chip vector indexed by vertex."""

    __slots__ = ("_values",)

    def __init__(self, values: Iterable[int]):
        arr = np.array(list(values), dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("divisor values must be a flat integer sequence")
        arr.setflags(write=False)
        self._values = arr

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "Divisor":
        d = object.__new__(cls)
        arr = arr.astype(np.int64, copy=False)
        arr.setflags(write=False)
        d._values = arr
        return d

    @classmethod
    def zero(cls, n: int) -> "Divisor":
        return cls._wrap(np.zeros(n, dtype=np.int64))

    @classmethod
    def unit(cls, n: int, v: int) -> "Divisor":
        arr = np.zeros(n, dtype=np.int64)
        arr[v] = 1
        return cls._wrap(arr)

    @classmethod
    def indicator(cls, n: int, vertices: Iterable[int]) -> "Divisor":
        """One chip on each vertex of ``vertices``, zero elsewhere."""
        arr = np.zeros(n, dtype=np.int64)
        for v in vertices:
            arr[v] = 1
        return cls._wrap(arr)

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def degree(self) -> int:
        return int(self._values.sum())

    @property
    def is_effective(self) -> bool:
        return bool((self._values >= 0).all())

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, v: int) -> int:
        return int(self._values[v])

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor._wrap(self._values + _coerce(other, len(self))._values)

    def __sub__(self, other: "Divisor") -> "Divisor":
        return Divisor._wrap(self._values - _coerce(other, len(self))._values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        return len(self) == len(other) and bool((self._values == other._values).all())

    def __hash__(self) -> int:
        return hash((len(self._values), self._values.tobytes()))

    def __repr__(self) -> str:
        return f"Divisor({self._values.tolist()})"

    def to_json_dict(self) -> dict:
        return {"values": self._values.tolist()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @staticmethod
    def from_json_dict(data: dict) -> "Divisor":
        return Divisor(data["values"])


class FiringScript:
    """Net number of times each vertex fired; witnesses divisor equivalence.

    Adding a constant to every entry acts trivially, so scripts are kept
    shifted with minimum entry 0.
    """

    __slots__ = ("_fires",)

    def __init__(self, fires: Iterable[int]):
        arr = np.array(list(fires), dtype=np.int64)
        arr.setflags(write=False)
        self._fires = arr

    @property
    def fires(self) -> np.ndarray:
        return self._fires

    @property
    def is_zero(self) -> bool:
        return bool((self._fires == 0).all())

    def __len__(self) -> int:
        return len(self._fires)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiringScript):
            return NotImplemented
        return bool((self._fires == other._fires).all())

    def __repr__(self) -> str:
        return f"FiringScript({self._fires.tolist()})"


@dataclass(frozen=True)
class BurnReport:
    """Outcome of a Dhar fire spread: burn order plus the unburned set."""

    burned_order: tuple[int, ...]
    unburned: frozenset[int]

    @property
    def all_burned(self) -> bool:
        return not self.unburned

    def trace(self) -> str:
        """Golden-test text format: one id per line, then the UNBURNED line."""
        lines = [str(v) for v in self.burned_order]
        tail = "UNBURNED:"
        if self.unburned:
            tail += " " + " ".join(str(v) for v in sorted(self.unburned))
        lines.append(tail)
        return "\n".join(lines)


def _coerce(d, n: int) -> Divisor:
    if not isinstance(d, Divisor):
        d = Divisor(d)
    if len(d) != n:
        raise ValueError(f"divisor length {len(d)} != vertex count {n}")
    return d


def divisor_degree(d: Divisor | Sequence[int]) -> int:
    d = d if isinstance(d, Divisor) else Divisor(d)
    return d.degree


def is_effective(d: Divisor | Sequence[int]) -> bool:
    d = d if isinstance(d, Divisor) else Divisor(d)
    return d.is_effective


def fire_set(g: Graph, d: Divisor | Sequence[int], u_set: Iterable[int]) -> Divisor:
    """Fire every vertex of ``u_set`` once: one chip per edge leaving the set."""
    d = _coerce(d, g.vertex_count)
    mask = g.vertex_set_mask(u_set)
    out = d.values.copy()
    for v in range(g.vertex_count):
        nb = g.neighbor_mask(v)
        if mask >> v & 1:
            out[v] -= (nb & ~mask).bit_count()
        else:
            out[v] += (nb & mask).bit_count()
    return Divisor._wrap(out)


def is_legal_firing(g: Graph, d: Divisor | Sequence[int], u_set: Iterable[int]) -> bool:
    """True iff ``u_set`` is debt-free before and after firing."""
    d = _coerce(d, g.vertex_count)
    mask = g.vertex_set_mask(u_set)
    rest = mask
    v = 0
    while rest:
        if rest & 1:
            if d[v] < 0 or d[v] < (g.neighbor_mask(v) & ~mask).bit_count():
                return False
        rest >>= 1
        v += 1
    return True


def dhar_burn(g: Graph, d: Divisor | Sequence[int], q: int) -> BurnReport:
    """Run the fire spread from q; the unburned set is empty iff d is q-reduced.

    Requires d(v) >= 0 for every v != q.  When the unburned set is nonempty
    it is a legal set firing for d.
    """
    d = _coerce(d, g.vertex_count)
    g.check_vertex(q)
    values = d.values
    for v in range(g.vertex_count):
        if v != q and values[v] < 0:
            raise ValueError(f"vertex {v} is in debt; burning requires debt only at q")
    indptr, indices = g.csr()
    order, unburned = backend.burn(indptr, indices, values, q)
    return BurnReport(tuple(int(v) for v in order), frozenset(int(v) for v in unburned))


def q_reduce(g: Graph, d: Divisor | Sequence[int], q: int) -> tuple[Divisor, FiringScript]:
    """The unique q-reduced divisor equivalent to d, plus a witnessing script."""
    d = _coerce(d, g.vertex_count)
    g.check_vertex(q)
    indptr, indices = g.csr()
    reduced, script = backend.qreduce(indptr, indices, d.values, q)
    return Divisor._wrap(reduced), FiringScript(script)


def equivalent(g: Graph, d1: Divisor | Sequence[int], d2: Divisor | Sequence[int]) -> bool:
    """True iff some sequence of firings turns d1 into d2 (canonical q = 0)."""
    d1 = _coerce(d1, g.vertex_count)
    d2 = _coerce(d2, g.vertex_count)
    if d1.degree != d2.degree:
        return False
    r1, _ = q_reduce(g, d1, 0)
    r2, _ = q_reduce(g, d2, 0)
    return r1 == r2


def apply_script(g: Graph, d: Divisor | Sequence[int], script: FiringScript) -> Divisor:
    """Apply a firing script: the divisor drops by Laplacian times fires."""
    d = _coerce(d, g.vertex_count)
    if len(script) != g.vertex_count:
        raise ValueError("script length does not match the graph")
    return Divisor._wrap(d.values - g.laplacian() @ script.fires)
