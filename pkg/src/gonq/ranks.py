"""Divisor rank by exhaustive debt placement.

The rank of a divisor D is the largest k such that every effective divisor
E of degree k can be subtracted from D leaving a class that still contains
an effective divisor; it is -1 when D's own class has none.  Debt
placements are enumerated in colex order and the first failing one is
returned as a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .chipfiring import Divisor, _coerce, q_reduce
from .enumeration import check_composition_cap, compositions_colex, map_partitions
from .graphs import Graph

__all__ = ["RankResult", "effective_in_class", "has_positive_rank", "rank"]

CANONICAL_Q = 0


@dataclass(frozen=True)
class RankResult:
    """Rank plus, when the search resolved it, the cheapest failing debt.

    ``certificate`` is an effective divisor of degree rank + 1 whose
    subtraction leaves no effective equivalent; it is None when the search
    was capped at max_k, in which case ``rank`` means "at least max_k".
    """

    rank: int
    certificate: Divisor | None

    @property
    def exact(self) -> bool:
        return self.certificate is not None

    def to_json_dict(self) -> dict:
        return {
            "rank": self.rank,
            "exact": self.exact,
            "certificate": self.certificate.to_json_dict() if self.certificate else None,
        }


def effective_in_class(g: Graph, d: Divisor | Sequence[int]) -> bool:
    """True iff the class of d contains an effective divisor.

    The q-reduced representative is nonnegative away from q, so only its
    value at q can fail.
    """
    reduced, _ = q_reduce(g, d, CANONICAL_Q)
    return reduced[CANONICAL_Q] >= 0


def has_positive_rank(g: Graph, d: Divisor | Sequence[int]) -> bool:
    """True iff d can absorb one chip of debt wherever it is placed."""
    d = _coerce(d, g.vertex_count)
    for q in range(g.vertex_count):
        reduced, _ = q_reduce(g, d, q)
        if reduced[q] < 1:
            return False
    return True


def _first_failing(
    g: Graph, base: np.ndarray, placements: Iterator[tuple[int, ...]]
) -> tuple[int, ...] | None:
    for e in placements:
        shifted = base - np.array(e, dtype=np.int64)
        reduced, _ = q_reduce(g, Divisor._wrap(shifted), CANONICAL_Q)
        if reduced[CANONICAL_Q] < 0:
            return e
    return None


def rank(
    g: Graph,
    d: Divisor | Sequence[int],
    max_k: int,
    *,
    max_compositions: int | None = None,
    threads: int = 1,
) -> RankResult:
    """Exact rank if it is below max_k, otherwise a ">= max_k" report.

    Level k enumerates all compositions of k over the vertices; the level
    fails on the colex-first placement the divisor cannot absorb, which
    becomes the certificate.  Each level's composition count is checked
    against the cap up front.
    """
    if max_k < 0:
        raise ValueError("max_k must be >= 0")
    d = _coerce(d, g.vertex_count)
    n = g.vertex_count
    base = d.values.astype(np.int64)
    for k in range(max_k + 1):
        check_composition_cap(k, n, max_compositions)
        if threads <= 1:
            failing = _first_failing(g, base, compositions_colex(k, n))
        else:
            hits = map_partitions(
                k, n, lambda p: _first_failing(g, base, p), threads=threads
            )
            found = [e for e in hits if e is not None]
            # Partition-local first failures; the global first is their colex min.
            failing = min(found, key=lambda e: tuple(reversed(e))) if found else None
        if failing is not None:
            return RankResult(k - 1, Divisor(failing))
    return RankResult(max_k, None)
