"""Cycles C_U through prescribed core vertices.

Dense route: webs with disjoint interiors, consecutive cores joined through
their exteriors, over-used webs skipped.  Sparse route: far-apart centres,
consecutive ones joined between their balls while avoiding every other ball.
"""

from __future__ import annotations

import math
from collections import deque
from fractions import Fraction

from ..expander import ExpansionProfile, connect_avoiding, is_expander
from ..graph import Graph, ball, bfs_distances, shortest_path
from .types import CycleBuildReport, Failure, Web
from .units import bfs_reach, trace_back
from .validate import validate_cycle

HEURISTIC_NOTE = (
    "expansion certified heuristically; success of the connecting steps is empirical"
)


def _union_path(g: Graph, vertices, s: int, t: int, forbid_edge: bool = False) -> list[int] | None:
    """Shortest s,t-path inside g[vertices]; optionally without the edge st."""
    allowed = set(vertices)
    prev = {s: -1}
    q = deque([s])
    while q:
        u = q.popleft()
        for w in g.neighbours(u):
            if w in prev or w not in allowed:
                continue
            if forbid_edge and u == s and w == t:
                continue
            prev[w] = u
            if w == t:
                return trace_back(prev, t)
            q.append(w)
    return None


def _connect_webs(
    g: Graph, w1: Web, w2: Web, blocked: set[int], taken: set[int],
    q_len: int, forbid_edge: bool = False,
) -> tuple[list[int], list[int]] | None:
    """A core-to-core path inside Q + P(W1,w1) + P(W2,w2) where Q joins the
    two exteriors in g - blocked.  Returns (path, Q) or None."""
    def side(w: Web) -> dict[int, tuple[int, ...]]:
        out = {}
        for x in sorted(w.exterior):
            if x in blocked:
                continue
            p = w.path_to(x)
            if not set(p) & taken:
                out[x] = p
        return out

    A1, A2 = side(w1), side(w2)
    if not A1 or not A2:
        return None
    prev, order = bfs_reach(g, A1, blocked, q_len)
    for b in order:
        if b not in A2:
            continue
        q = trace_back(prev, b)
        union = set(q) | set(A1[q[0]]) | set(A2[b])
        p = _union_path(g, union, w1.core, w2.core, forbid_edge)
        if p is not None:
            return p, q
    return None


def build_cycle_dense(
    g: Graph,
    webs: list[Web],
    U,
    m: int | None = None,
    path_bound: int | None = None,
    overuse: int | None = None,
    coverage: float = 0.9,
    certified: bool | None = None,
) -> CycleBuildReport:
    """Cycle through at least ``coverage`` of the U-cores and no other core.

    ``U`` indexes into ``webs``.  ``m`` bounds the linking path Q between two
    exteriors (vertices); ``path_bound`` bounds each core-to-core path and
    defaults to m plus twice the longest core-to-exterior web path.  A web is
    bad once its interior meets the path interiors in ``overuse`` vertices
    (default 2m^2); the next core is taken among webs with at most overuse/2."""
    Z = tuple(w.core for w in webs)
    U = sorted(set(U))
    rep = CycleBuildReport(Z, tuple(Z[i] for i in U if 0 <= i < len(webs)))
    if any(not 0 <= i < len(webs) for i in U):
        rep.failure = Failure("input", "U must index the given webs")
        return rep
    if len(U) < 2:
        rep.failure = Failure("input", f"|U| = {len(U)}: a cycle needs at least two cores")
        return rep
    longest = max(len(w.path_to(x)) for w in webs for x in w.exterior)
    if m is None:
        m = longest
    if path_bound is None:
        path_bound = m + 2 * longest
    if overuse is None:
        overuse = 2 * m * m
    rep.params = {
        "m": m, "path_bound": path_bound, "overuse": overuse, "coverage": coverage,
        "paper": {"path_bound": "18m", "overuse": "2m^2", "coverage": 0.98},
    }
    if certified is not True:
        rep.notes.append(HEURISTIC_NOTE)
    interiors = [w.interior for w in webs]
    centres = [w.centre for w in webs]
    Zset = set(Z)

    def blocked_for(a: int, b: int, taken: set[int]) -> set[int]:
        out = taken | Zset
        for k, c in enumerate(centres):
            if k != a and k != b:
                out |= c
        return out

    seq = [U[0]]
    paths: list[list[int]] = []
    taken: set[int] = set()
    remaining = U[1:]
    while remaining:
        cur = seq[-1]
        cands = [j for j in remaining if len(interiors[j] & taken) <= overuse // 2]
        got = None
        for j in cands:
            res = _connect_webs(g, webs[cur], webs[j], blocked_for(cur, j, taken), taken, m)
            if res is not None and len(res[0]) <= path_bound:
                got = (j, res)
                break
        if got is None:
            rep.trace.append({"step": len(paths), "from": Z[cur], "stalled": True,
                              "candidates": [Z[j] for j in cands]})
            break
        j, (p, q) = got
        rep.trace.append({
            "step": len(paths), "from": Z[cur], "to": Z[j], "length": len(p),
            "bound": path_bound, "linking": len(q),
            "target_overlap": len(interiors[j] & taken),
        })
        paths.append(p)
        taken |= set(p[1:-1])
        seq.append(j)
        remaining.remove(j)
    if len(seq) < 2:
        rep.failure = Failure("connect", f"no path leaves the first core {Z[seq[0]]}")
        return rep
    good = [len(interiors[i] & taken) < overuse for i in seq]
    if not good[-1]:
        rep.failure = Failure("close", f"last web {Z[seq[-1]]} is over-used")
        return rep
    p_idx = good.index(True)
    if p_idx == len(seq) - 1:
        rep.failure = Failure("close", "no good web before the last one")
        return rep
    a, b = seq[p_idx], seq[-1]
    chain = [Z[a]]
    for p in paths[p_idx:]:
        chain.extend(p[1:])
    res = _connect_webs(
        g, webs[a], webs[b], blocked_for(a, b, taken), taken, m, forbid_edge=len(chain) == 2
    )
    if res is None or len(res[0]) > path_bound:
        rep.failure = Failure("close", f"no closing path between {Z[a]} and {Z[b]}")
        return rep
    closing, q = res
    rep.trace.append({
        "step": "close", "from": Z[a], "to": Z[b], "length": len(closing),
        "bound": path_bound, "linking": len(q), "skipped_bad": p_idx,
    })
    cyc = chain + closing[::-1][1:-1]
    if not validate_cycle(cyc, g):
        rep.failure = Failure("close", "concatenation is not a simple cycle")
        return rep
    inter = tuple(v for v in cyc if v in Zset)
    rep.intersection = tuple(sorted(inter))
    need = math.ceil(coverage * len(U) - 1e-12)
    if not set(inter) <= set(rep.U):
        rep.failure = Failure("intersection", "cycle meets a core outside U")
        return rep
    rep.cycle = tuple(cyc)
    if len(inter) < need:
        rep.failure = Failure("coverage", f"{len(inter)} of {len(U)} cores, need {need}")
    return rep


def far_apart_set(g: Graph, k: int, size: int, candidates=None) -> tuple[list[int], str]:
    """Greedy set with pairwise distances > 2k, scanning vertices by index.

    Returns the set and a diagnostic (empty when ``size`` was reached)."""
    out: list[int] = []
    covered: set[int] = set()
    for v in (range(g.n) if candidates is None else candidates):
        if len(out) >= size:
            break
        if v in covered:
            continue
        out.append(v)
        covered |= set(bfs_distances(g, [v], limit=2 * k))
    diag = ""
    if len(out) < size:
        delta = max(g.degrees(), default=0)
        vol = sum(delta ** i for i in range(2 * k + 1))
        diag = (
            f"found {len(out)} of {size}: 2k-balls cover all {g.n} vertices "
            f"(ball volume bound {vol})"
        )
    return out, diag


def sparse_paper_values(n: int, d: float) -> dict:
    """r = (log log n)^5, k = (log n)^(7/8), path bound 2 log^4 n, gate d log^7 n."""
    ln = math.log(n)
    return {
        "r": math.log(ln) ** 5 if ln > 1 else 0.0,
        "k": ln ** 0.875,
        "path_len": 2 * ln ** 4,
        "ball_min": d * ln ** 7,
        "Z": 200 * d,
        "U": 100 * d,
    }


def build_cycle_sparse(
    g: Graph,
    Z,
    U,
    r: int,
    k: int,
    profile: ExpansionProfile | None = None,
    ball_min: int = 1,
    path_len: int | None = None,
    certificate=None,
) -> CycleBuildReport:
    """Cycle with V(C) ∩ Z = U, joining consecutive U-vertices in order.

    Path i runs v_i -> ball B^k(v_i) -> Q -> ball B^k(v_{i+1}) -> v_{i+1} in
    g minus earlier path interiors, the r-balls of the other U-vertices and
    Z - U.  The r-ball sizes in g minus the path interiors are gated by
    ``ball_min``; ``path_len`` bounds each path (edges)."""
    Z = list(dict.fromkeys(Z))
    U = list(dict.fromkeys(U))
    rep = CycleBuildReport(tuple(Z), tuple(U))
    rep.params = {"r": r, "k": k, "ball_min": ball_min, "path_len": path_len,
                  "paper": sparse_paper_values(max(g.n, 3), float(g.average_degree() or 1))}
    Zset, Uset = set(Z), set(U)
    if not Uset <= Zset:
        rep.failure = Failure("input", "U must be a subset of Z")
        return rep
    if len(U) < 2:
        rep.failure = Failure("input", f"|U| = {len(U)}: a cycle needs at least two centres")
        return rep
    if profile is not None and certificate is None:
        certificate = is_expander(g, profile)
    if certificate is None or certificate.mode != "exact":
        rep.notes.append(HEURISTIC_NOTE)
    if certificate is not None:
        rep.params["certificate"] = {"mode": certificate.mode, "passed": certificate.passed}
    r_balls = {v: ball(g, [v], r).members for v in U}
    for v in U:
        if len(r_balls[v]) < ball_min:
            rep.failure = Failure("ball gate", f"|B^{r}({v})| = {len(r_balls[v])} < {ball_min}")
            return rep
    outside = Zset - Uset
    s = len(U)
    taken: set[int] = set()
    paths: list[list[int]] = []
    for i in range(s):
        a, b = U[i], U[(i + 1) % s]
        for v in (a, b):
            sz = len(ball(g, [v], r, blocked=taken).members)
            if sz < ball_min:
                rep.failure = Failure("ball gate", f"step {i}: |B^{r}({v}) - P'| = {sz} < {ball_min}")
                return rep
        W = taken | outside
        for v in U:
            if v != a and v != b:
                W |= r_balls[v]
        Xa = ball(g, [a], k, blocked=W).members
        Xb = ball(g, [b], k, blocked=W).members
        if Xa & Xb:
            rep.failure = Failure("far apart", f"step {i}: k-balls of {a} and {b} meet")
            return rep
        if profile is not None:
            conn = connect_avoiding(g, Xa, Xb, W, profile, certificate)
            q = list(conn.path) if conn.path else None
            bound_info = {"connector_bound": conn.bound, "hypotheses_met": conn.hypotheses_met}
        else:
            q = shortest_path(g, Xa, Xb, blocked=W)
            bound_info = {}
        if q is None:
            rep.failure = Failure("connect", f"step {i}: no path between the balls of {a} and {b}")
            return rep
        pa = shortest_path(g, [a], [q[0]], blocked=W | (Xb - {q[0]}))
        pb = shortest_path(g, [b], [q[-1]], blocked=W | (Xa - {q[-1]}))
        p = pa + q[1:-1] + pb[::-1]
        if len(set(p)) != len(p):
            rep.failure = Failure("connect", f"step {i}: joined path is not simple")
            return rep
        length = len(p) - 1
        rep.trace.append({"step": i, "from": a, "to": b, "length": length,
                          "bound": path_len, "linking": len(q), **bound_info})
        if path_len is not None and length > path_len:
            rep.failure = Failure("length", f"step {i}: path length {length} > {path_len}")
            return rep
        paths.append(p)
        taken |= set(p[1:-1])
    cyc = [U[0]]
    for p in paths:
        cyc.extend(p[1:])
    cyc.pop()
    if not validate_cycle(cyc, g):
        rep.failure = Failure("close", "concatenation is not a simple cycle")
        return rep
    rep.cycle = tuple(cyc)
    rep.intersection = tuple(sorted(v for v in cyc if v in Zset))
    if set(rep.intersection) != Uset:
        rep.failure = Failure("intersection", "V(C) ∩ Z differs from U")
    return rep


def distinguishability_bound(n_cycles: int, z: int, u: int, k: int) -> Fraction:
    """Lower bound on distinct V(C_U) among ``n_cycles`` cycles built for
    distinct u-subsets U of a z-set Z, when each V(C_U) ∩ Z is a subset of U
    of size at least k: one intersection lies in at most C(z-k, u-k) sets U."""
    if not 0 <= k <= u <= z:
        raise ValueError("need 0 <= k <= u <= z")
    return Fraction(n_cycles, math.comb(z - k, u - k))
