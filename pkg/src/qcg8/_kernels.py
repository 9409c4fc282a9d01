"""Compiled inner loops.  Callers validate arguments; nothing here raises."""

import numpy as np
from numba import njit

_JIT = dict(cache=True, nogil=True)


@njit(**_JIT)
def first_cycle2(E, P, out):
    J, L = E.shape
    for j0 in range(J):
        for l0 in range(L):
            for j1 in range(J):
                if j1 == j0:
                    continue
                for l1 in range(L):
                    if l1 == l0:
                        continue
                    s = E[j0, l0] - E[j0, l1] + E[j1, l1] - E[j1, l0]
                    if s % P == 0:
                        out[0] = j0; out[1] = l0
                        out[2] = j1; out[3] = l1
                        return True
    return False


@njit(**_JIT)
def first_cycle3(E, P, out):
    J, L = E.shape
    for j0 in range(J):
        for l0 in range(L):
            for j1 in range(J):
                if j1 == j0:
                    continue
                for l1 in range(L):
                    if l1 == l0:
                        continue
                    s1 = E[j0, l0] - E[j0, l1]
                    for j2 in range(J):
                        if j2 == j1 or j2 == j0:
                            continue
                        for l2 in range(L):
                            if l2 == l1 or l2 == l0:
                                continue
                            s = s1 + E[j1, l1] - E[j1, l2] + E[j2, l2] - E[j2, l0]
                            if s % P == 0:
                                out[0] = j0; out[1] = l0
                                out[2] = j1; out[3] = l1
                                out[4] = j2; out[5] = l2
                                return True
    return False


@njit(**_JIT)
def first_cycle4(E, P, out):
    J, L = E.shape
    for j0 in range(J):
        for l0 in range(L):
            for j1 in range(J):
                if j1 == j0:
                    continue
                for l1 in range(L):
                    if l1 == l0:
                        continue
                    s1 = E[j0, l0] - E[j0, l1]
                    for j2 in range(J):
                        if j2 == j1:
                            continue
                        for l2 in range(L):
                            if l2 == l1:
                                continue
                            s2 = s1 + E[j1, l1] - E[j1, l2]
                            for j3 in range(J):
                                if j3 == j2 or j3 == j0:
                                    continue
                                for l3 in range(L):
                                    if l3 == l2 or l3 == l0:
                                        continue
                                    s = s2 + E[j2, l2] - E[j2, l3] + E[j3, l3] - E[j3, l0]
                                    if s % P == 0:
                                        out[0] = j0; out[1] = l0
                                        out[2] = j1; out[3] = l1
                                        out[4] = j2; out[5] = l2
                                        out[6] = j3; out[7] = l3
                                        return True
    return False


@njit(**_JIT)
def bfs_girth(col_ptr, col_adj, row_ptr, row_adj, n, cap):
    """Shortest cycle length (or ``cap``) of the bipartite graph.

    Nodes 0..n-1 are variable nodes, n.. are check nodes.  Every cycle passes
    through a variable node, so BFS roots are the variable nodes only.
    """
    m = row_ptr.shape[0] - 1
    total = n + m
    dist = np.full(total, -1, np.int64)
    parent = np.full(total, -1, np.int64)
    queue = np.empty(total, np.int64)
    best = cap
    for root in range(n):
        # a cycle shorter than best has length <= best - 2, reached at depth (best - 2) / 2
        limit = (best - 1) // 2
        dist[root] = 0
        parent[root] = -1
        queue[0] = root
        head = 0
        tail = 1
        found = False
        while head < tail and not found:
            u = queue[head]
            head += 1
            du = dist[u]
            if u < n:
                start = col_ptr[u]
                stop = col_ptr[u + 1]
            else:
                start = row_ptr[u - n]
                stop = row_ptr[u - n + 1]
            for e in range(start, stop):
                if u < n:
                    w = col_adj[e] + n
                else:
                    w = row_adj[e]
                if w == parent[u]:
                    continue
                if dist[w] >= 0:
                    length = du + dist[w] + 1
                    if length < best:
                        best = length
                    found = True
                    break
                if du + 1 > limit:
                    continue
                dist[w] = du + 1
                parent[w] = u
                queue[tail] = w
                tail += 1
        for i in range(tail):
            dist[queue[i]] = -1
            parent[queue[i]] = -1
        if best == 4:
            break
    return best


@njit(**_JIT)
def minsum(check_ptr, check_edges, edge_var, n, llr, max_iter, alpha, hard):
    """Flooding normalized min-sum.  Returns (converged, iterations used)."""
    m = check_ptr.shape[0] - 1
    num_edges = edge_var.shape[0]
    v2c = np.empty(num_edges)
    c2v = np.zeros(num_edges)
    total = np.empty(n)
    for e in range(num_edges):
        v2c[e] = llr[edge_var[e]]
    for v in range(n):
        hard[v] = 1 if llr[v] < 0 else 0
    it = 0
    while True:
        ok = True
        for c in range(m):
            parity = 0
            for k in range(check_ptr[c], check_ptr[c + 1]):
                parity ^= hard[edge_var[check_edges[k]]]
            if parity:
                ok = False
                break
        if ok:
            return True, it
        if it == max_iter:
            return False, it
        it += 1
        for c in range(m):
            min1 = np.inf
            min2 = np.inf
            argmin = -1
            sign = 1.0
            for k in range(check_ptr[c], check_ptr[c + 1]):
                x = v2c[check_edges[k]]
                if x < 0:
                    sign = -sign
                a = abs(x)
                if a < min1:
                    min2 = min1
                    min1 = a
                    argmin = k
                elif a < min2:
                    min2 = a
            for k in range(check_ptr[c], check_ptr[c + 1]):
                e = check_edges[k]
                x = v2c[e]
                s = sign if x >= 0 else -sign
                mag = min2 if k == argmin else min1
                c2v[e] = alpha * s * mag
        for v in range(n):
            total[v] = llr[v]
        for e in range(num_edges):
            total[edge_var[e]] += c2v[e]
        for e in range(num_edges):
            v2c[e] = total[edge_var[e]] - c2v[e]
        for v in range(n):
            hard[v] = 1 if total[v] < 0 else 0
