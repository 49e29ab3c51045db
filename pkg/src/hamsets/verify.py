"""Exhaustive desk-scale checks of lower bounds on c(G) over graph6 streams."""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .counting import (
    closed_form_bipartite,
    closed_form_complete,
    ham_subsets_count,
    path_subsets_count,
)
from .graph import DP_CAP, Graph, blocks, degree_stats, from_graph6, to_graph6

TINY_CAP = 8


@dataclass
class VerificationReport:
    kind: str
    d: int
    bound: int | None
    n_range: tuple[int, int] | None = None
    graphs_scanned: int = 0
    skipped: int = 0  # failed the degree filter
    skipped_other: int = 0  # e.g. not bipartite
    min_c: int | None = None
    min_c_witness: str | None = None
    violations: list[tuple[str, int]] = field(default_factory=list)
    equality_cases: list[str] = field(default_factory=list)
    findings: list[dict] = field(default_factory=list)
    exceptions: list[str] = field(default_factory=list)
    parse_errors: list[tuple[int, str]] = field(default_factory=list)
    per_graph: list[tuple[str, int]] = field(default_factory=list)
    elapsed: float = 0.0
    params: dict = field(default_factory=dict)

    @property
    def clean(self) -> bool:
        return not self.violations and not self.findings

    def as_dict(self, timing: bool = False) -> dict:
        out = {
            "kind": self.kind,
            "d": self.d,
            "bound": self.bound,
            "params": self.params,
            "n_range": list(self.n_range) if self.n_range else None,
            "graphs_scanned": self.graphs_scanned,
            "skipped": self.skipped,
            "skipped_other": self.skipped_other,
            "min_c": self.min_c,
            "min_c_witness": self.min_c_witness,
            "violations": [[g6, c] for g6, c in sorted(self.violations)],
            "equality_cases": sorted(self.equality_cases),
            "findings": sorted(self.findings, key=lambda f: f["graph6"]),
            "exceptions": sorted(self.exceptions),
            "parse_errors": [[ln, msg] for ln, msg in self.parse_errors],
        }
        if timing:
            out["elapsed"] = self.elapsed
        return out


# -- per-graph work -------------------------------------------------------

def bipartition(g: Graph) -> list[int] | None:
    """A proper 2-colouring, or None when g has an odd cycle."""
    col = [-1] * g.n
    for s in range(g.n):
        if col[s] != -1:
            continue
        col[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbours(u):
                if col[w] == -1:
                    col[w] = 1 - col[u]
                    stack.append(w)
                elif col[w] == col[u]:
                    return None
    return col


def is_complete_graph(g: Graph, order: int) -> bool:
    return g.n == order and g.m == order * (order - 1) // 2


def is_glued_clique_pair(g: Graph, d: int) -> bool:
    """g is K_{d+1} and K_d sharing one vertex: one cut vertex, two complete blocks."""
    if g.n != 2 * d or g.m != d * (d + 1) // 2 + d * (d - 1) // 2:
        return False
    bd = blocks(g)
    if bd.isolated or len(bd.blocks) != 2 or len(bd.cut_vertices) != 1:
        return False
    sizes = sorted(len(b) for b in bd.blocks)
    if sizes != [d, d + 1]:
        return False
    return all(
        sum(1 for u in b for w in g.neighbours(u) if w in b) == len(b) * (len(b) - 1)
        for b in bd.blocks
    )


def _scan_one(args) -> tuple:
    """Parse and classify one stream line; returns (lineno, status, g6, c, extra)."""
    lineno, text, kind, d, cap = args
    try:
        g = from_graph6(text)
    except Exception as exc:  # recorded per line, the stream continues
        return lineno, "error", text, None, str(exc)
    g6 = to_graph6(g)
    if g.n == 0:
        return lineno, "skip", g6, None, g.n
    if kind in ("komlos", "bipartite"):
        if min(g.degrees()) < d:
            return lineno, "skip", g6, None, g.n
        if kind == "bipartite" and bipartition(g) is None:
            return lineno, "other", g6, None, g.n
    elif kind == "stability":
        if g.average_degree() < d:
            return lineno, "skip", g6, None, g.n
        if is_complete_graph(g, d + 1) or is_glued_clique_pair(g, d):
            return lineno, "exception", g6, ham_subsets_count(g, cap=cap).c, g.n
    elif kind == "tuza":
        if math.floor(g.average_degree()) < 3:
            return lineno, "skip", g6, None, g.n
    return lineno, "ok", g6, ham_subsets_count(g, cap=cap).c, g.n


def _bound(kind: str, d: int, g6: str | None = None) -> int | None:
    if kind == "komlos":
        return closed_form_complete(d)
    if kind == "bipartite":
        return closed_form_bipartite(d, d)
    return None


def _lines(stream: Iterable[str]) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(stream, 1):
        if isinstance(raw, bytes):
            raw = raw.decode("ascii", "replace")
        s = raw.strip()
        if s:
            out.append((i, s))
    return out


def _scan(stream, kind: str, d: int, threads: int, cap: int) -> list[tuple]:
    jobs = [(ln, s, kind, d, cap) for ln, s in _lines(stream)]
    if threads > 1 and len(jobs) > 1:
        chunk = max(1, len(jobs) // (threads * 8))
        with ProcessPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(_scan_one, jobs, chunksize=chunk))
    return [_scan_one(j) for j in jobs]


def _report(kind: str, d: int, results: list[tuple], params: dict, keep_counts: bool):
    rep = VerificationReport(kind, d, _bound(kind, d), params=params)
    lo = hi = None
    alpha = Fraction(params.get("alpha", 0))
    for lineno, status, g6, c, extra in results:
        if status == "error":
            rep.parse_errors.append((lineno, extra))
            continue
        if status == "skip":
            rep.skipped += 1
            continue
        if status == "other":
            rep.skipped_other += 1
            continue
        rep.graphs_scanned += 1
        lo = extra if lo is None else min(lo, extra)
        hi = extra if hi is None else max(hi, extra)
        if keep_counts:
            rep.per_graph.append((g6, c))
        if status == "exception":
            rep.exceptions.append(g6)
            continue
        if rep.min_c is None or c < rep.min_c or (c == rep.min_c and g6 < rep.min_c_witness):
            rep.min_c, rep.min_c_witness = c, g6
        if kind in ("komlos", "bipartite"):
            if c < rep.bound:
                rep.violations.append((g6, c))
            elif c == rep.bound:
                rep.equality_cases.append(g6)
        elif kind == "stability":
            thr = (2 - alpha) * 2 ** (d + 1)
            if c < thr:
                rep.findings.append({"graph6": g6, "c": c, "ratio": str(Fraction(c, 2 ** (d + 1)))})
        elif kind == "tuza":
            f = math.floor(from_graph6(g6).average_degree())
            if c * c < 2 ** f:
                rep.violations.append((g6, c))
            elif c * c == 2 ** f:
                rep.equality_cases.append(g6)
    rep.n_range = (lo, hi) if lo is not None else None
    return rep


def _run(kind, stream, d, threads, cap, params, keep_counts):
    t0 = time.perf_counter()
    rep = _report(kind, d, _scan(stream, kind, d, threads, cap), params, keep_counts)
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_komlos(stream, d: int, threads: int = 1, cap: int = DP_CAP, keep_counts: bool = False):
    """c(G) >= c(K_{d+1}) for every graph of minimum degree >= d in the stream."""
    return _run("komlos", stream, d, threads, cap, {}, keep_counts)


def verify_bipartite(stream, d: int, threads: int = 1, cap: int = DP_CAP, keep_counts: bool = False):
    """c(G) >= c(K_{d,d}) for every bipartite graph of minimum degree >= d."""
    return _run("bipartite", stream, d, threads, cap, {}, keep_counts)


def verify_stability(
    stream, d: int, alpha, threads: int = 1, cap: int = DP_CAP, keep_counts: bool = False
):
    """Lists graphs with d(G) >= d, other than K_{d+1} and K_{d+1}*K_d, whose
    c(G) is below (2 - alpha) 2^{d+1}.  For small d these are findings."""
    alpha = Fraction(str(alpha))
    return _run("stability", stream, d, threads, cap, {"alpha": str(alpha)}, keep_counts)


def verify_tuza(stream, threads: int = 1, cap: int = DP_CAP, keep_counts: bool = False):
    """c(G) >= 2^{floor(d(G))/2} for graphs with floor(d(G)) >= 3."""
    return _run("tuza", stream, 3, threads, cap, {}, keep_counts)


def recheck(rep: VerificationReport) -> bool:
    """Re-parse and re-count every listed witness in isolation."""
    for g6, c in rep.violations:
        if ham_subsets_count(from_graph6(g6)).c != c:
            return False
    if rep.bound is not None:
        for g6 in rep.equality_cases:
            if ham_subsets_count(from_graph6(g6)).c != rep.bound:
                return False
    for f in rep.findings:
        if ham_subsets_count(from_graph6(f["graph6"])).c != f["c"]:
            return False
    if rep.min_c_witness is not None:
        if ham_subsets_count(from_graph6(rep.min_c_witness)).c != rep.min_c:
            return False
    return True


# -- tiny isomorph-free generation ----------------------------------------

def _refine(rows: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Colour refinement: split cells by neighbour counts into every cell,
    ordering the pieces by their count signature."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig: dict[tuple, list[int]] = {}
            for v in c:
                key = tuple(bin(rows[v] & m).count("1") for m in masks)
                sig.setdefault(key, []).append(v)
            if len(sig) > 1:
                changed = True
            out.extend(sig[k] for k in sorted(sig))
        cells = out
        if not changed:
            return cells


def canonical_code(g: Graph) -> int:
    """Minimum upper-triangle adjacency code over the leaves of an
    individualisation-refinement search; equal exactly for isomorphic graphs."""
    n = g.n
    rows = list(g.rows)
    best = -1

    def code(order: list[int]) -> int:
        out = 0
        for i in range(n):
            ri = rows[order[i]]
            for j in range(i + 1, n):
                out = (out << 1) | ((ri >> order[j]) & 1)
        return out

    def search(cells: list[list[int]]) -> None:
        nonlocal best
        cells = _refine(rows, cells)
        if len(cells) == n:
            c = code([c[0] for c in cells])
            if best < 0 or c < best:
                best = c
            return
        i = min((k for k, c in enumerate(cells) if len(c) > 1), key=lambda k: len(cells[k]))
        for v in cells[i]:
            rest = [w for w in cells[i] if w != v]
            search(cells[:i] + [[v], rest] + cells[i + 1 :])

    if n == 0:
        return 0
    search([list(range(n))])
    return best


def _from_code(n: int, code: int) -> Graph:
    edges = []
    bit = n * (n - 1) // 2 - 1
    for i in range(n):
        for j in range(i + 1, n):
            if (code >> bit) & 1:
                edges.append((i, j))
            bit -= 1
    return Graph(n, edges)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[int, ...]:
    """Canonical codes of all graphs on n vertices, grown vertex by vertex."""
    if n <= 1:
        return (0,)
    seen: set[int] = set()
    for c in _classes(n - 1):
        h = _from_code(n - 1, c)
        base = list(h.edges())
        for mask in range(1 << (n - 1)):
            edges = base + [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
            seen.add(canonical_code(Graph(n, edges)))
    return tuple(sorted(seen))


def tiny_generate(n: int, min_degree: int = 0) -> list[str]:
    """graph6 of one graph per isomorphism class on n <= 8 vertices with
    minimum degree >= min_degree."""
    if n > TINY_CAP:
        raise ValueError(f"tiny_generate handles n <= {TINY_CAP}; use an external generator")
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for c in _classes(n):
        g = _from_code(n, c)
        if min(g.degrees()) >= min_degree:
            out.append(to_graph6(g))
    return out


# -- minimal-counterexample predicates ------------------------------------

def proper_subgraphs_sparse(g: Graph, d, cap: int = 16) -> tuple[bool, list[int] | None]:
    """d(G[V']) <= d for every nonempty proper V'; returns a witness V' on failure."""
    if g.n > cap:
        raise ValueError(f"exhaustive subset scan capped at n={cap}")
    d = Fraction(d)
    rows = g.rows
    full = (1 << g.n) - 1
    for S in range(1, full):
        k = bin(S).count("1")
        e2 = sum(bin(rows[v] & S).count("1") for v in range(g.n) if S >> v & 1)
        if Fraction(e2, k) > d:
            return False, [v for v in range(g.n) if S >> v & 1]
    return True, None


@dataclass(frozen=True)
class LeafBlockProfile:
    vertices: tuple[int, ...]
    order: int
    avg_degree: Fraction
    second_min_degree: int
    ok: bool  # delta_2(F) >= d/2, |F| >= d, d(F) >= d - 1


def leaf_block_profile(g: Graph, d) -> list[LeafBlockProfile]:
    d = Fraction(d)
    bd = blocks(g)
    out = []
    for i in sorted(bd.leaf_blocks):
        vs = tuple(sorted(bd.blocks[i]))
        h, _ = g.induced(vs)
        st = degree_stats(h)
        ok = 2 * st.second_min >= d and len(vs) >= d and st.average >= d - 1
        out.append(LeafBlockProfile(vs, len(vs), st.average, st.second_min, ok))
    return out


def small_graph_ratios(g: Graph, cap: int = DP_CAP) -> dict:
    """c(G)/2^n and min over pairs of p_xy(G)/2^{n-2}."""
    n = g.n
    c = ham_subsets_count(g, cap=cap).c
    pmin = min(
        (path_subsets_count(g, x, y, cap=cap).p for x, y in itertools.combinations(range(n), 2)),
        default=0,
    )
    return {
        "c_ratio": Fraction(c, 2 ** n),
        "pxy_min_ratio": Fraction(pmin, 2 ** (n - 2)) if n >= 2 else None,
    }
