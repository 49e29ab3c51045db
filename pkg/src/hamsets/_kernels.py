"""Compiled subset-DP kernels.  All tables are indexed by vertex bitmasks."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def anchored_table(rows, n):
    """dp[S] = bitmask of endpoints u such that G[S] has a Hamiltonian path
    from a = min(S) to u.  Singletons hold themselves."""
    N = 1 << n
    dp = np.zeros(N, np.int64)
    for S in range(1, N):
        low = S & -S
        if S == low:
            dp[S] = S
            continue
        rest = S ^ low
        acc = 0
        for u in range(n):
            ub = 1 << u
            if rest & ub:
                if dp[S ^ ub] & rows[u]:
                    acc |= ub
        dp[S] = acc
    return dp


@njit(cache=True)
def ham_by_size(dp, rows, n):
    """Histogram over |S| of Hamiltonian subsets (|S| >= 3)."""
    hist = np.zeros(n + 1, np.int64)
    N = 1 << n
    for S in range(1, N):
        low = S & -S
        a = 0
        while (1 << a) != low:
            a += 1
        if dp[S] & rows[a]:
            k = popcount(S)
            if k >= 3:
                hist[k] += 1
    return hist


@njit(cache=True)
def anchored_path_table(rows, n, x):
    """Same table anchored at a fixed vertex x over subsets of the other
    vertices: dp[T] = endpoints u in T with a Hamiltonian x,u-path in
    G[{x} + T].  Masks of T use the original vertex bits with x's bit
    squeezed out (vertex v > x occupies bit v-1)."""
    k = n - 1
    idx = np.empty(k, np.int64)
    j = 0
    for v in range(n):
        if v != x:
            idx[j] = v
            j += 1
    # local adjacency among the other vertices, and adjacency to x
    loc = np.zeros(k, np.int64)
    tox = 0
    for i in range(k):
        r = rows[idx[i]]
        m = 0
        for j2 in range(k):
            if (r >> idx[j2]) & 1:
                m |= 1 << j2
        loc[i] = m
        if (r >> x) & 1:
            tox |= 1 << i
    N = 1 << k
    dp = np.zeros(N, np.int64)
    for T in range(1, N):
        acc = 0
        for u in range(k):
            ub = 1 << u
            if T & ub:
                prev = T ^ ub
                if prev == 0:
                    if tox & ub:
                        acc |= ub
                elif dp[prev] & loc[u]:
                    acc |= ub
        dp[T] = acc
    return dp, idx


@njit(cache=True)
def cycle_count_anchor(rows, n, a, modulus):
    """Sum over subsets S with min(S) = a and |S| >= 3 of the number of
    directed Hamiltonian cycles of G[S] through a (each undirected cycle is
    counted twice).  ``modulus`` = 0 means plain int64 arithmetic."""
    k = n - 1 - a
    if k < 2:
        return 0
    loc = np.zeros(k, np.int64)
    toa = 0
    for i in range(k):
        r = rows[a + 1 + i] >> (a + 1)
        loc[i] = r & ((1 << k) - 1)
        if (rows[a + 1 + i] >> a) & 1:
            toa |= 1 << i
    N = 1 << k
    cnt = np.zeros((N, k), np.int64)
    for i in range(k):
        if (toa >> i) & 1:
            cnt[1 << i, i] = 1
    total = 0
    for T in range(1, N):
        if T & (T - 1) == 0:
            continue
        for u in range(k):
            ub = 1 << u
            if not (T & ub):
                continue
            prev = T ^ ub
            nb = loc[u] & prev
            acc = 0
            for w in range(k):
                if (nb >> w) & 1:
                    acc += cnt[prev, w]
                    if modulus and acc >= modulus:
                        acc -= modulus
            cnt[T, u] = acc
            if (toa >> u) & 1:
                total += acc
                if modulus and total >= modulus:
                    total -= modulus
    return total


@njit(cache=True)
def subset_is_hamiltonian(rows, n, S):
    """Per-subset Held-Karp test (used by the Monte Carlo sampler)."""
    k = popcount(S)
    if k < 3:
        return False
    idx = np.empty(k, np.int64)
    j = 0
    for v in range(n):
        if (S >> v) & 1:
            idx[j] = v
            j += 1
    loc = np.zeros(k, np.int64)
    for i in range(k):
        r = rows[idx[i]]
        m = 0
        for j2 in range(k):
            if (r >> idx[j2]) & 1:
                m |= 1 << j2
        loc[i] = m
    # anchor at local vertex 0; masks over local vertices 1..k-1
    kk = k - 1
    N = 1 << kk
    dp = np.zeros(N, np.int64)
    for T in range(1, N):
        acc = 0
        for u in range(kk):
            ub = 1 << u
            if T & ub:
                prev = T ^ ub
                if prev == 0:
                    if (loc[0] >> (u + 1)) & 1:
                        acc |= ub
                else:
                    # neighbours of local u+1 among 1..k-1, shifted to bits 0..
                    if dp[prev] & (loc[u + 1] >> 1):
                        acc |= ub
        dp[T] = acc
    return (dp[N - 1] & (loc[0] >> 1)) != 0


@njit(cache=True)
def sample_hamiltonian(rows, n, masks):
    out = np.zeros(masks.shape[0], np.bool_)
    for i in range(masks.shape[0]):
        out[i] = subset_is_hamiltonian(rows, n, masks[i])
    return out


@njit(cache=True)
def largest_ham_subset(dp, rows, n):
    """Smallest mask among the Hamiltonian subsets of maximum size (0 if none)."""
    best = 0
    best_size = 2
    for S in range(1, 1 << n):
        low = S & -S
        a = 0
        while (1 << a) != low:
            a += 1
        if dp[S] & rows[a]:
            k = popcount(S)
            if k > best_size:
                best_size = k
                best = S
    return best
