"""Pure-Python simple-cycle counting kernel.

Same interface as the compiled ``_cycles_ext`` module. The graph is given in
CSR form (``indptr``, ``indices``) on local vertices ``0..k-1`` and must not
contain self loops; callers count those separately.
"""


def _adjacency(indptr, indices):
    n = len(indptr) - 1
    succ = [[int(indices[p]) for p in range(indptr[v], indptr[v + 1])] for v in range(n)]
    pred = [[] for _ in range(n)]
    for v, row in enumerate(succ):
        for w in row:
            pred[w].append(v)
    return succ, pred


def _reach(start, adj, lo):
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w >= lo and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _johnson_from(s, succ, allowed, cap):
    """Count elementary circuits through ``s`` inside ``allowed``."""
    blocked = set()
    blocked_by = {v: set() for v in allowed}
    count = 0

    def unblock(u):
        todo = [u]
        while todo:
            x = todo.pop()
            if x in blocked:
                blocked.discard(x)
                todo.extend(blocked_by[x])
                blocked_by[x].clear()

    blocked.add(s)
    nbrs = [w for w in succ[s] if w in allowed]
    # frame: vertex, its allowed successors, next index, found-a-circuit flag
    stack = [[s, nbrs, 0, False]]
    while stack:
        frame = stack[-1]
        v, nbrs, k, _ = frame
        if k < len(nbrs):
            frame[2] = k + 1
            w = nbrs[k]
            if w == s:
                count += 1
                frame[3] = True
                if count >= cap:
                    return count
            elif w not in blocked:
                blocked.add(w)
                stack.append([w, [x for x in succ[w] if x in allowed], 0, False])
            continue
        found = frame[3]
        if found:
            unblock(v)
        else:
            for w in nbrs:
                blocked_by[w].add(v)
        stack.pop()
        if stack and found:
            stack[-1][3] = True
    return count


def _bounded_from(s, succ, allowed, cap, max_length):
    """Count circuits through ``s`` with at most ``max_length`` edges (no blocking)."""
    count = 0
    on_path = {s}
    stack = [(s, iter(succ[s]))]
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if w == s:
                count += 1
                if count >= cap:
                    return count
            elif w in allowed and w not in on_path and len(stack) < max_length:
                on_path.add(w)
                stack.append((w, iter(succ[w])))
                advanced = True
                break
        if not advanced:
            stack.pop()
            on_path.discard(v)
    return count


def count_cycles(indptr, indices, cap, max_length=0):
    """Count simple cycles of length >= 2, stopping once ``cap`` is reached.

    Returns ``min(total, cap)``. ``max_length == 0`` means unbounded.
    """
    succ, pred = _adjacency(indptr, indices)
    n = len(succ)
    total = 0
    for s in range(n - 1):
        # strongly connected component of s within vertices >= s
        allowed = _reach(s, succ, s) & _reach(s, pred, s)
        if len(allowed) < 2:
            continue
        remaining = cap - total
        if max_length:
            total += _bounded_from(s, succ, allowed, remaining, max_length)
        else:
            total += _johnson_from(s, succ, allowed, remaining)
        if total >= cap:
            return cap
    return total
