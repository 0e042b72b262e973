"""Pure-Python chip-firing kernel.

Fallback twin of the compiled ``gonq._kernel`` extension; both expose the
same two functions over CSR adjacency arrays and must produce identical
output bit for bit.  The fire spread processes a worklist in ascending
vertex id, so burn orders are deterministic.
"""

from __future__ import annotations

import heapq

import numpy as np

_MAX_REDUCE_ROUNDS = 50_000_000


def _burn_lists(indptr, indices, d, q, n):
    cnt = [0] * n
    burned = [False] * n
    pending = [False] * n
    heap = [q]
    pending[q] = True
    order = []
    while heap:
        v = heapq.heappop(heap)
        burned[v] = True
        order.append(v)
        for i in range(indptr[v], indptr[v + 1]):
            w = indices[i]
            if not burned[w]:
                cnt[w] += 1
                if w != q and not pending[w] and cnt[w] > d[w]:
                    pending[w] = True
                    heapq.heappush(heap, w)
    return order, burned


def burn(indptr: np.ndarray, indices: np.ndarray, values: np.ndarray, q: int):
    """Dhar fire spread from q.  Returns (burn order, unburned ascending)."""
    n = len(values)
    order, burned = _burn_lists(indptr.tolist(), indices.tolist(), values.tolist(), q, n)
    unburned = [v for v in range(n) if not burned[v]]
    return np.array(order, dtype=np.int64), np.array(unburned, dtype=np.int64)


def qreduce(indptr: np.ndarray, indices: np.ndarray, values: np.ndarray, q: int):
    """Reduce ``values`` to its unique q-reduced form.

    Returns (reduced, script) where script counts net fires per vertex,
    shifted so its minimum entry is 0.  Stage 1 clears debt off q by firing
    balls around q from the outside in; stage 2 iterates the fire spread,
    firing the unburned set as many times as it stays debt-free.
    """
    n = len(values)
    ip = indptr.tolist()
    idx = indices.tolist()
    work = values.tolist()
    script = [0] * n

    # BFS layers around q (graphs are connected).
    dist = [-1] * n
    dist[q] = 0
    queue = [q]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for i in range(ip[v], ip[v + 1]):
            w = idx[i]
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    ecc = max(dist)

    for k in range(ecc - 1, -1, -1):
        t = 0
        for v in range(n):
            if dist[v] == k + 1 and work[v] < 0:
                inward = sum(1 for i in range(ip[v], ip[v + 1]) if dist[idx[i]] <= k)
                need = (-work[v] + inward - 1) // inward
                if need > t:
                    t = need
        if t == 0:
            continue
        for v in range(n):
            if dist[v] <= k:
                script[v] += t
                if dist[v] == k:
                    out = sum(1 for i in range(ip[v], ip[v + 1]) if dist[idx[i]] == k + 1)
                    work[v] -= t * out
            elif dist[v] == k + 1:
                inward = sum(1 for i in range(ip[v], ip[v + 1]) if dist[idx[i]] <= k)
                work[v] += t * inward

    rounds = 0
    while True:
        _, burned = _burn_lists(ip, idx, work, q, n)
        if all(burned):
            break
        rounds += 1
        if rounds > _MAX_REDUCE_ROUNDS:
            raise RuntimeError("q-reduction did not terminate")
        t = None
        for v in range(n):
            if not burned[v]:
                out = sum(1 for i in range(ip[v], ip[v + 1]) if burned[idx[i]])
                if out:
                    tt = work[v] // out
                    if t is None or tt < t:
                        t = tt
        for v in range(n):
            if not burned[v]:
                script[v] += t
                for i in range(ip[v], ip[v + 1]):
                    w = idx[i]
                    if burned[w]:
                        work[w] += t
                        work[v] -= t

    base = min(script)
    if base:
        script = [s - base for s in script]
    return np.array(work, dtype=np.int64), np.array(script, dtype=np.int64)
