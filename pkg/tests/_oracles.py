"""Independent reference implementations used only by the tests.

Nothing here imports the counting kernels: Hamiltonicity is decided by plain
backtracking over bitmasks, and cycle vertex sets by explicit enumeration.
"""

from __future__ import annotations

import gzip
import math
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "data"
STREAM = DATA / "mindeg3_n4-9.g6.gz"


def stream_lines() -> list[str]:
    with gzip.open(STREAM, "rt", encoding="ascii") as fh:
        return [ln.strip() for ln in fh if ln.strip()]


def adjacency(n: int, edges) -> list[int]:
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _ham_from(adj: list[int], S: int) -> bool:
    """Backtracking: does the induced graph on bitmask S have a spanning cycle?"""
    if S & (S - 1) == 0:
        return False
    bits = [v for v in range(len(adj)) if S >> v & 1]
    if len(bits) < 3:
        return False
    for v in bits:
        if bin(adj[v] & S).count("1") < 2:
            return False
    start = bits[0]
    full = S

    def go(v: int, seen: int) -> bool:
        if seen == full:
            return bool(adj[v] >> start & 1)
        nxt = adj[v] & full & ~seen
        while nxt:
            low = nxt & -nxt
            w = low.bit_length() - 1
            if go(w, seen | low):
                return True
            nxt ^= low
        return False

    return go(start, 1 << start)


def ham_sizes(n: int, edges) -> dict[int, int]:
    """Histogram by size of the vertex subsets with a spanning induced cycle."""
    adj = adjacency(n, edges)
    out: dict[int, int] = {}
    for S in range(1 << n):
        if _ham_from(adj, S):
            k = bin(S).count("1")
            out[k] = out.get(k, 0) + 1
    return out


def closed_complete(d: int) -> int:
    # subsets of size >= 3 of d+1 vertices, as a binomial sum
    return sum(math.comb(d + 1, k) for k in range(3, d + 2))


def closed_glued(d: int) -> int:
    # the two cliques share one vertex, so no cycle crosses it
    return closed_complete(d) + closed_complete(d - 1)


def closed_bipartite(a: int, b: int) -> int:
    # a cycle in K_{a,b} uses k >= 2 vertices on each side
    return sum(math.comb(a, k) * math.comb(b, k) for k in range(2, min(a, b) + 1))


def path_subsets(n: int, edges, x: int, y: int) -> int:
    """Subsets U containing x, y with a spanning x,y-path in the induced graph."""
    adj = adjacency(n, edges)
    count = 0
    for S in range(1 << n):
        if not (S >> x & 1 and S >> y & 1):
            continue

        def go(v: int, seen: int) -> bool:
            if seen == S:
                return v == y
            nxt = adj[v] & S & ~seen
            while nxt:
                low = nxt & -nxt
                w = low.bit_length() - 1
                if (w != y or seen | low == S) and go(w, seen | low):
                    return True
                nxt ^= low
            return False

        if go(x, 1 << x):
            count += 1
    return count
