# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled simple-cycle counting kernel.

Mirror of ``tss._cycles_py``: CSR input on local vertices, no self loops,
count saturates at ``cap``. Blocked-by sets are rows of 64-bit words.
"""
from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport calloc, free, malloc

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef struct Work:
    int n
    int words
    const int64_t* indptr
    const int64_t* indices
    int64_t* rptr
    int64_t* ridx
    char* allowed
    char* blocked
    char* on_path
    uint64_t* bby          # n * words bitset rows
    int64_t* queue
    int64_t* stack_v
    int64_t* stack_k
    char* stack_found


cdef void _mark_reach(Work* w, int s, const int64_t* ptr, const int64_t* idx,
                      char* mark, char bit) nogil:
    cdef int64_t head = 0, tail = 0, v, x, p
    mark[s] |= bit
    w.queue[tail] = s
    tail += 1
    while head < tail:
        v = w.queue[head]
        head += 1
        for p in range(ptr[v], ptr[v + 1]):
            x = idx[p]
            if x >= s and not (mark[x] & bit):
                mark[x] |= bit
                w.queue[tail] = x
                tail += 1


cdef int _restrict(Work* w, int s) nogil:
    """Set allowed[v] for v in the SCC of s among vertices >= s; return its size."""
    cdef int v, size = 0
    for v in range(w.n):
        w.allowed[v] = 0
    _mark_reach(w, s, w.indptr, w.indices, w.allowed, 1)
    _mark_reach(w, s, w.rptr, w.ridx, w.allowed, 2)
    for v in range(w.n):
        if w.allowed[v] == 3:
            w.allowed[v] = 1
            size += 1
        else:
            w.allowed[v] = 0
    return size


cdef void _unblock(Work* w, int u) nogil:
    cdef int64_t top = 0, x, y, k
    cdef uint64_t bits
    cdef uint64_t* row
    w.blocked[u] = 0
    w.queue[top] = u
    top += 1
    while top > 0:
        top -= 1
        x = w.queue[top]
        row = w.bby + x * w.words
        for k in range(w.words):
            bits = row[k]
            row[k] = 0
            while bits:
                y = k * 64 + __builtin_ctzll(bits)
                bits &= bits - 1
                if w.blocked[y]:
                    w.blocked[y] = 0
                    w.queue[top] = y
                    top += 1


cdef int64_t _johnson_from(Work* w, int s, int64_t cap) nogil:
    cdef int64_t count = 0, depth, v, x, k, p
    cdef char found
    for v in range(w.n):
        if w.allowed[v]:
            w.blocked[v] = 0
            for k in range(w.words):
                w.bby[v * w.words + k] = 0
    w.blocked[s] = 1
    depth = 0
    w.stack_v[0] = s
    w.stack_k[0] = w.indptr[s]
    w.stack_found[0] = 0
    while depth >= 0:
        v = w.stack_v[depth]
        p = w.stack_k[depth]
        if p < w.indptr[v + 1]:
            w.stack_k[depth] = p + 1
            x = w.indices[p]
            if not w.allowed[x]:
                continue
            if x == s:
                count += 1
                w.stack_found[depth] = 1
                if count >= cap:
                    return count
            elif not w.blocked[x]:
                w.blocked[x] = 1
                depth += 1
                w.stack_v[depth] = x
                w.stack_k[depth] = w.indptr[x]
                w.stack_found[depth] = 0
            continue
        found = w.stack_found[depth]
        if found:
            _unblock(w, v)
        else:
            for p in range(w.indptr[v], w.indptr[v + 1]):
                x = w.indices[p]
                if w.allowed[x]:
                    w.bby[x * w.words + v // 64] |= (<uint64_t>1) << (v % 64)
        depth -= 1
        if depth >= 0 and found:
            w.stack_found[depth] = 1
    return count


cdef int64_t _bounded_from(Work* w, int s, int64_t cap, int64_t max_length) nogil:
    cdef int64_t count = 0, depth = 0, v, x, p
    for v in range(w.n):
        w.on_path[v] = 0
    w.on_path[s] = 1
    w.stack_v[0] = s
    w.stack_k[0] = w.indptr[s]
    while depth >= 0:
        v = w.stack_v[depth]
        p = w.stack_k[depth]
        if p < w.indptr[v + 1]:
            w.stack_k[depth] = p + 1
            x = w.indices[p]
            if x == s:
                count += 1
                if count >= cap:
                    return count
            elif w.allowed[x] and not w.on_path[x] and depth + 1 < max_length:
                w.on_path[x] = 1
                depth += 1
                w.stack_v[depth] = x
                w.stack_k[depth] = w.indptr[x]
            continue
        w.on_path[v] = 0
        depth -= 1
    return count


def count_cycles(const int64_t[::1] indptr, const int64_t[::1] indices,
                 long long cap, long long max_length=0):
    """Count simple cycles of length >= 2, stopping once ``cap`` is reached.

    Returns ``min(total, cap)``. ``max_length == 0`` means unbounded.
    """
    cdef int n = indptr.shape[0] - 1
    cdef int64_t m = indices.shape[0]
    cdef int64_t total = 0, v, p, x
    cdef int s
    cdef Work w
    if n < 2 or m == 0:
        return 0
    if cap <= 0:
        return 0
    w.n = n
    w.words = (n + 63) // 64
    w.indptr = &indptr[0]
    w.indices = &indices[0]
    w.rptr = <int64_t*>calloc(n + 1, sizeof(int64_t))
    w.ridx = <int64_t*>malloc(m * sizeof(int64_t))
    w.allowed = <char*>calloc(n, 1)
    w.blocked = <char*>calloc(n, 1)
    w.on_path = <char*>calloc(n, 1)
    w.bby = <uint64_t*>calloc(<size_t>n * w.words, sizeof(uint64_t))
    w.queue = <int64_t*>malloc((n + 1) * sizeof(int64_t))
    w.stack_v = <int64_t*>malloc((n + 1) * sizeof(int64_t))
    w.stack_k = <int64_t*>malloc((n + 1) * sizeof(int64_t))
    w.stack_found = <char*>calloc(n + 1, 1)
    cdef int64_t* fill = <int64_t*>calloc(n, sizeof(int64_t))
    try:
        if (not w.rptr or not w.ridx or not w.allowed or not w.blocked or not w.on_path
                or not w.bby or not w.queue or not w.stack_v or not w.stack_k
                or not w.stack_found or not fill):
            raise MemoryError()
        with nogil:
            # reverse CSR
            for p in range(m):
                w.rptr[w.indices[p] + 1] += 1
            for v in range(n):
                w.rptr[v + 1] += w.rptr[v]
            for v in range(n):
                for p in range(w.indptr[v], w.indptr[v + 1]):
                    x = w.indices[p]
                    w.ridx[w.rptr[x] + fill[x]] = v
                    fill[x] += 1
            for s in range(n - 1):
                if _restrict(&w, s) < 2:
                    continue
                if max_length > 0:
                    total += _bounded_from(&w, s, cap - total, max_length)
                else:
                    total += _johnson_from(&w, s, cap - total)
                if total >= cap:
                    total = cap
                    break
        return total
    finally:
        free(w.rptr)
        free(w.ridx)
        free(w.allowed)
        free(w.blocked)
        free(w.on_path)
        free(w.bby)
        free(w.queue)
        free(w.stack_v)
        free(w.stack_k)
        free(w.stack_found)
        free(fill)
