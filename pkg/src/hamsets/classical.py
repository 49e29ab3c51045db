"""Classical tools: Posa's degree condition, degree peeling, exact longest
cycles and the binomial estimates used in the counting argument."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels as K
from .counting import anchored_table
from .graph import DP_CAP, Graph

# Smallest n from which both binomial inequalities hold for every larger n
# (exact evaluation; the first inequality fails for all n <= 671).
BINOM_THRESHOLD = 672


@dataclass(frozen=True)
class PosaVerdict:
    passes: bool
    witness_index: int | None = None


def posa_check(g: Graph) -> PosaVerdict:
    """d_i >= i+1 for all i < (n-1)/2, and d_{ceil(n/2)} >= ceil(n/2) for odd n
    (1-based indices into the sorted degree sequence)."""
    n = g.n
    if n < 3:
        raise ValueError("Posa's condition needs n >= 3")
    d = sorted(g.degrees())
    i = 1
    while 2 * i < n - 1:
        if d[i - 1] < i + 1:
            return PosaVerdict(False, i)
        i += 1
    if n % 2 == 1:
        h = (n + 1) // 2
        if d[h - 1] < h:
            return PosaVerdict(False, h)
    return PosaVerdict(True)


def min_degree_core(g: Graph, d: Fraction | int | float) -> tuple[Graph, list[int]]:
    """Repeatedly delete the lowest-index vertex of minimum degree while that
    degree is below d/2.  Returns the remaining induced subgraph and its
    vertex labels in g (both empty when everything is peeled)."""
    d = Fraction(d)
    if d <= 0:
        raise ValueError("d must be positive")
    alive = set(range(g.n))
    deg = {v: g.degree(v) for v in alive}
    half = d / 2
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        if deg[v] >= half:
            break
        alive.remove(v)
        for w in g.neighbours(v):
            if w in alive:
                deg[w] -= 1
    return g.induced(alive)


def relative_core(g: Graph) -> tuple[Graph, list[int]]:
    """Peel until delta(H) >= d(H)/2 for H's own average degree.  Each
    deletion of a vertex below half the current average raises the average."""
    keep = list(range(g.n))
    h = g
    while h.n:
        avg = h.average_degree()
        low = [v for v in range(h.n) if h.degree(v) < avg / 2]
        if not low:
            break
        drop = min(low, key=lambda v: (h.degree(v), v))
        h, sub = h.remove([drop])
        keep = [keep[i] for i in sub]
    return h, keep


def _trace_cycle(g: Graph, dp: np.ndarray, S: int) -> list[int]:
    rows = g.rows
    a = (S & -S).bit_length() - 1
    ends = int(dp[S]) & rows[a]
    u = (ends & -ends).bit_length() - 1
    seq = [u]
    cur = S
    while True:
        prev = cur ^ (1 << u)
        if prev == 1 << a:
            break
        cand = int(dp[prev]) & rows[u] & ~(1 << a)
        w = (cand & -cand).bit_length() - 1
        seq.append(w)
        cur, u = prev, w
    seq.append(a)
    return seq[::-1]


def longest_cycle(g: Graph, cap: int = DP_CAP) -> list[int] | None:
    """A longest cycle as a vertex sequence (None for forests), read off the
    anchored subset table: the largest Hamiltonian subset wins, ties broken
    by the smallest mask."""
    if g.n < 3:
        return None
    dp = anchored_table(g, cap=cap)
    S = int(K.largest_ham_subset(dp, np.array(g.rows, dtype=np.int64), g.n))
    if S == 0:
        return None
    return _trace_cycle(g, dp, S)


def is_hamiltonian(g: Graph, cap: int = DP_CAP) -> bool:
    if g.n < 3:
        return False
    dp = anchored_table(g, cap=cap)
    full = (1 << g.n) - 1
    return bool(int(dp[full]) & g.rows[0])


@dataclass(frozen=True)
class BinomVerdict:
    n: int
    first: bool
    second: bool
    asserted: bool


def binom_bound_check(n: int, threshold: int = BINOM_THRESHOLD) -> BinomVerdict:
    """Exact evaluation of C(n, floor(n/4 - 1)) >= 2^{4n/5} and
    C(n, 2 floor(n/4 - 1)) >= 2^{n - log2 n}; both are asserted only for
    n >= threshold."""
    k = n // 4 - 1
    if k < 0:
        first = second = False
    else:
        # C^5 >= 2^{4n}  and  C * n >= 2^n  avoid fractional exponents
        first = math.comb(n, k) ** 5 >= 2 ** (4 * n)
        second = math.comb(n, 2 * k) * n >= 2**n
    return BinomVerdict(n, first, second, n >= threshold)
