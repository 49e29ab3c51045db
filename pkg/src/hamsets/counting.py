"""Exact counts of Hamiltonian subsets, spanning-path subsets and cycles."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _kernels as K
from .graph import DP_CAP, CapExceeded, Graph

# The cycle census keeps an (subsets x vertices) table of path counts, which
# is 8 * 2^(n-1) * (n-1) bytes; 22 keeps that under ~350 MB.
NU_CAP = 22
# Exact int64 cycle counts are safe up to this order (n!/2 < 2^63 territory).
_NU_INT64 = 20
_PRIMES = (2**61 - 1, 4611686018427387847)


@dataclass(frozen=True)
class CountReport:
    c: int
    by_size: dict[int, int]
    weak: int
    n: int
    e: int
    nu: int | None = None

    def as_dict(self, with_sizes: bool = True) -> dict:
        out = {"n": self.n, "e": self.e, "c": self.c, "weak": self.weak}
        if self.nu is not None:
            out["nu"] = self.nu
        if with_sizes:
            out["by_size"] = {str(k): v for k, v in sorted(self.by_size.items())}
        return out


@dataclass(frozen=True)
class PathCount:
    x: int
    y: int
    p: int


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise CapExceeded(
            f"n={g.n} exceeds the exact-count cap {cap}; use ham_fraction_estimate for larger graphs"
        )


def _rows(g: Graph) -> np.ndarray:
    return np.array(g.rows, dtype=np.int64)


def anchored_table(g: Graph, cap: int = DP_CAP) -> np.ndarray:
    """Entry S is the bitmask of u with a Hamiltonian min(S),u-path in G[S]."""
    _check_cap(g, cap)
    if g.n == 0:
        return np.zeros(1, np.int64)
    return K.anchored_table(_rows(g), g.n)


def ham_subsets_count(
    g: Graph, with_nu: bool = False, cap: int = DP_CAP, nu_cap: int = NU_CAP
) -> CountReport:
    _check_cap(g, cap)
    if g.n < 3:
        hist: dict[int, int] = {}
    else:
        rows = _rows(g)
        dp = K.anchored_table(rows, g.n)
        arr = K.ham_by_size(dp, rows, g.n)
        hist = {k: int(arr[k]) for k in range(3, g.n + 1) if arr[k]}
    c = sum(hist.values())
    nu = count_all_cycles(g, cap=nu_cap) if with_nu else None
    return CountReport(c, hist, c + g.m + g.n + 1, g.n, g.m, nu)


def weak_ham_count(g: Graph, cap: int = DP_CAP) -> int:
    return ham_subsets_count(g, cap=cap).weak


def path_subsets_count(g: Graph, x: int, y: int, cap: int = DP_CAP) -> PathCount:
    """Subsets U containing x and y whose induced graph has a Hamiltonian
    x,y-path.  U = {x, y} counts exactly when xy is an edge."""
    if x == y:
        raise ValueError("x and y must be distinct")
    for v in (x, y):
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph")
    _check_cap(g, cap)
    dp, _ = K.anchored_path_table(_rows(g), g.n, x)
    ly = y if y < x else y - 1
    bit = 1 << ly
    sel = dp[(np.arange(dp.shape[0]) & bit) != 0]
    return PathCount(x, y, int(np.count_nonzero(sel & bit)))


def count_all_cycles(g: Graph, cap: int = NU_CAP) -> int:
    """nu(G): number of cycles (as edge sets).

    For each anchor a, directed Hamiltonian a-cycles of G[S] are counted over
    subsets S with min(S) = a; each cycle appears once per direction.
    Orders above 20 are counted modulo two primes and recombined.
    """
    _check_cap(g, cap)
    if g.n < 3:
        return 0
    rows = _rows(g)
    if g.n <= _NU_INT64:
        total = sum(int(K.cycle_count_anchor(rows, g.n, a, 0)) for a in range(g.n - 2))
        return total // 2
    residues = []
    for p in _PRIMES:
        r = 0
        for a in range(g.n - 2):
            r = (r + int(K.cycle_count_anchor(rows, g.n, a, p))) % p
        residues.append(r)
    (p1, p2), (r1, r2) = _PRIMES, residues
    # CRT; the true doubled count is far below p1 * p2 for n <= 24
    t = ((r2 - r1) * pow(p1, -1, p2)) % p2
    return (r1 + p1 * t) // 2


# -- closed forms ---------------------------------------------------------

def closed_form_complete(d: int) -> int:
    """c(K_{d+1}) = 2^{d+1} - C(d+1, 2) - d - 2."""
    return 2 ** (d + 1) - math.comb(d + 1, 2) - d - 2


def closed_form_glued(d: int) -> int:
    """c(K_{d+1} * K_d) = (3/2) 2^{d+1} - d^2 - 2d - 3."""
    return 3 * 2**d - d * d - 2 * d - 3


def closed_form_bipartite(a: int, b: int) -> int:
    """c(K_{a,b}) = C(a+b, a) - (ab + 1)."""
    return math.comb(a + b, a) - (a * b + 1)


def tuza_floor(d: int) -> int:
    """ceil(2^{d/2}), exact."""
    if d % 2 == 0:
        return 2 ** (d // 2)
    # 2^{d/2} = sqrt(2^d) is irrational for odd d
    return math.isqrt(2**d) + 1


# -- Monte Carlo ----------------------------------------------------------

@dataclass(frozen=True)
class FractionEstimate:
    fraction: Fraction
    half_width: float
    samples: int
    hits: int
    seed: int = field(default=0)


def subset_masks(n: int, samples: int, seed: int, start: int = 0) -> np.ndarray:
    """Uniform vertex subsets; sample i depends only on (seed, i)."""
    if n > 62:
        raise CapExceeded("subset sampling supports n <= 62")
    full = (1 << n) - 1
    out = np.empty(samples, np.int64)
    for k in range(samples):
        bg = np.random.Philox(key=seed, counter=start + k)
        out[k] = int(bg.random_raw()) & full
    return out


def ham_fraction_estimate(g: Graph, samples: int, seed: int = 0) -> FractionEstimate:
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if g.n < 3:
        return FractionEstimate(Fraction(0), 0.0, samples, 0, seed)
    masks = subset_masks(g.n, samples, seed)
    hits = int(np.count_nonzero(K.sample_hamiltonian(_rows(g), g.n, masks)))
    frac = Fraction(hits, samples)
    p = hits / samples
    hw = 1.96 * math.sqrt(p * (1 - p) / samples) if 0 < hits < samples else 3.0 / samples
    return FractionEstimate(frac, hw, samples, hits, seed)
