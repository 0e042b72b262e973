# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled chip-firing kernel.

Twin of ``gonq._kernel_py``: same functions, same CSR inputs, bit-identical
outputs.  The worklist is a binary min-heap on vertex ids, so vertices burn
in ascending id among those ready to burn.
"""

import numpy as np

DEF MAX_REDUCE_ROUNDS = 50_000_000


cdef inline void _heap_push(long long* heap, Py_ssize_t* size, long long item) noexcept nogil:
    cdef Py_ssize_t i = size[0]
    cdef Py_ssize_t parent
    cdef long long tmp
    heap[i] = item
    size[0] += 1
    while i > 0:
        parent = (i - 1) >> 1
        if heap[parent] <= heap[i]:
            break
        tmp = heap[parent]
        heap[parent] = heap[i]
        heap[i] = tmp
        i = parent


cdef inline long long _heap_pop(long long* heap, Py_ssize_t* size) noexcept nogil:
    cdef long long top = heap[0]
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t child
    cdef long long tmp
    size[0] -= 1
    heap[0] = heap[size[0]]
    while True:
        child = 2 * i + 1
        if child >= size[0]:
            break
        if child + 1 < size[0] and heap[child + 1] < heap[child]:
            child += 1
        if heap[i] <= heap[child]:
            break
        tmp = heap[i]
        heap[i] = heap[child]
        heap[child] = tmp
        i = child
    return top


cdef Py_ssize_t _burn_core(const long long[::1] indptr, const long long[::1] indices,
                           const long long[::1] d, long long q,
                           long long[::1] cnt, unsigned char[::1] burned,
                           unsigned char[::1] pending, long long[::1] heap,
                           long long[::1] order) noexcept nogil:
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t heap_size = 0
    cdef Py_ssize_t nburned = 0
    cdef Py_ssize_t i
    cdef long long v, w
    for i in range(n):
        cnt[i] = 0
        burned[i] = 0
        pending[i] = 0
    _heap_push(&heap[0], &heap_size, q)
    pending[q] = 1
    while heap_size > 0:
        v = _heap_pop(&heap[0], &heap_size)
        burned[v] = 1
        order[nburned] = v
        nburned += 1
        for i in range(indptr[v], indptr[v + 1]):
            w = indices[i]
            if not burned[w]:
                cnt[w] += 1
                if w != q and pending[w] == 0 and cnt[w] > d[w]:
                    pending[w] = 1
                    _heap_push(&heap[0], &heap_size, w)
    return nburned


def burn(indptr, indices, values, q):
    """Dhar fire spread from q.  Returns (burn order, unburned ascending)."""
    cdef long long qq = q
    cdef const long long[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const long long[::1] idx = np.ascontiguousarray(indices, dtype=np.int64)
    cdef const long long[::1] d = np.ascontiguousarray(values, dtype=np.int64)
    cdef Py_ssize_t n = d.shape[0]
    cnt_arr = np.empty(n, dtype=np.int64)
    burned_arr = np.empty(n, dtype=np.uint8)
    pending_arr = np.empty(n, dtype=np.uint8)
    heap_arr = np.empty(n, dtype=np.int64)
    order_arr = np.empty(n, dtype=np.int64)
    cdef long long[::1] cnt = cnt_arr
    cdef unsigned char[::1] burned = burned_arr
    cdef unsigned char[::1] pending = pending_arr
    cdef long long[::1] heap = heap_arr
    cdef long long[::1] order = order_arr
    cdef Py_ssize_t nburned
    with nogil:
        nburned = _burn_core(ip, idx, d, qq, cnt, burned, pending, heap, order)
    return order_arr[:nburned].copy(), np.flatnonzero(burned_arr == 0).astype(np.int64)


cdef Py_ssize_t _qreduce_core(const long long[::1] indptr, const long long[::1] indices,
                              long long q, long long[::1] work, long long[::1] script,
                              long long[::1] dist, long long[::1] cnt,
                              unsigned char[::1] burned, unsigned char[::1] pending,
                              long long[::1] heap, long long[::1] order) noexcept nogil:
    cdef Py_ssize_t n = work.shape[0]
    cdef Py_ssize_t i, head, tail, rounds, nburned
    cdef long long v, w, k, ecc, t, tt, need, inward, out, base

    for i in range(n):
        script[i] = 0
        dist[i] = -1
    dist[q] = 0
    order[0] = q
    head = 0
    tail = 1
    while head < tail:
        v = order[head]
        head += 1
        for i in range(indptr[v], indptr[v + 1]):
            w = indices[i]
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                order[tail] = w
                tail += 1
    ecc = 0
    for i in range(n):
        if dist[i] > ecc:
            ecc = dist[i]

    # Stage 1: clear debt off q, outermost shell first.
    for k in range(ecc - 1, -1, -1):
        t = 0
        for v in range(n):
            if dist[v] == k + 1 and work[v] < 0:
                inward = 0
                for i in range(indptr[v], indptr[v + 1]):
                    if dist[indices[i]] <= k:
                        inward += 1
                need = (-work[v] + inward - 1) // inward
                if need > t:
                    t = need
        if t == 0:
            continue
        for v in range(n):
            if dist[v] <= k:
                script[v] += t
                if dist[v] == k:
                    out = 0
                    for i in range(indptr[v], indptr[v + 1]):
                        if dist[indices[i]] == k + 1:
                            out += 1
                    work[v] -= t * out
            elif dist[v] == k + 1:
                inward = 0
                for i in range(indptr[v], indptr[v + 1]):
                    if dist[indices[i]] <= k:
                        inward += 1
                work[v] += t * inward

    # Stage 2: iterate the fire spread, multi-firing the unburned set.
    rounds = 0
    while True:
        nburned = _burn_core(indptr, indices, work, q, cnt, burned, pending, heap, order)
        if nburned == n:
            break
        rounds += 1
        if rounds > MAX_REDUCE_ROUNDS:
            return -1
        t = -1
        for v in range(n):
            if not burned[v]:
                out = 0
                for i in range(indptr[v], indptr[v + 1]):
                    if burned[indices[i]]:
                        out += 1
                if out > 0:
                    tt = work[v] // out
                    if t < 0 or tt < t:
                        t = tt
        for v in range(n):
            if not burned[v]:
                script[v] += t
                for i in range(indptr[v], indptr[v + 1]):
                    w = indices[i]
                    if burned[w]:
                        work[w] += t
                        work[v] -= t

    base = script[0]
    for i in range(1, n):
        if script[i] < base:
            base = script[i]
    if base != 0:
        for i in range(n):
            script[i] -= base
    return rounds


def qreduce(indptr, indices, values, q):
    """Reduce ``values`` to its unique q-reduced form; see the Python twin."""
    cdef long long qq = q
    cdef const long long[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const long long[::1] idx = np.ascontiguousarray(indices, dtype=np.int64)
    work_arr = np.array(values, dtype=np.int64)
    cdef Py_ssize_t n = work_arr.shape[0]
    script_arr = np.empty(n, dtype=np.int64)
    dist_arr = np.empty(n, dtype=np.int64)
    cnt_arr = np.empty(n, dtype=np.int64)
    burned_arr = np.empty(n, dtype=np.uint8)
    pending_arr = np.empty(n, dtype=np.uint8)
    heap_arr = np.empty(n, dtype=np.int64)
    order_arr = np.empty(n, dtype=np.int64)
    cdef long long[::1] work = work_arr
    cdef long long[::1] script = script_arr
    cdef long long[::1] dist = dist_arr
    cdef long long[::1] cnt = cnt_arr
    cdef unsigned char[::1] burned = burned_arr
    cdef unsigned char[::1] pending = pending_arr
    cdef long long[::1] heap = heap_arr
    cdef long long[::1] order = order_arr
    cdef Py_ssize_t rounds
    with nogil:
        rounds = _qreduce_core(ip, idx, qq, work, script, dist, cnt, burned,
                               pending, heap, order)
    if rounds < 0:
        raise RuntimeError("q-reduction did not terminate")
    return work_arr, script_arr
