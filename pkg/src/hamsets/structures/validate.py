"""Clause-by-clause checks of suns, units and webs against a host graph.

These deliberately share no code with the builders; each check reports the
first failing clause by name.
"""

from __future__ import annotations

from ..graph import Graph
from .types import Sun, Unit, Verdict, Web


def _edges_ok(g: Graph, seq) -> bool:
    return all(0 <= v < g.n for v in seq) and all(
        g.has_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1)
    )


def validate_sun(s: Sun, g: Graph) -> Verdict:
    x = s.cycle
    a = len(x)
    if a < 3:
        return Verdict(False, "cycle length", f"a={a} < 3")
    if len(set(x)) != a:
        return Verdict(False, "distinct cycle vertices")
    if not _edges_ok(g, x + (x[0],)):
        return Verdict(False, "cycle edges")
    idx = [i for i, _ in s.rays]
    if any(not 0 <= i < a for i in idx) or any(idx[j] <= idx[j - 1] for j in range(1, len(idx))):
        return Verdict(False, "ray indices increasing", str(idx))
    for j in range(1, len(idx)):
        if idx[j] - idx[j - 1] < 2:
            return Verdict(False, "ray gaps", f"{idx[j - 1]} -> {idx[j]}")
    if len(idx) >= 2 and idx[0] + a - idx[-1] < 2:
        return Verdict(False, "wrap-around gap", f"i_1={idx[0]}, i_b={idx[-1]}, a={a}")
    ys = [y for _, y in s.rays]
    if len(set(ys)) != len(ys) or set(ys) & set(x):
        return Verdict(False, "rays off the cycle")
    for i, y in s.rays:
        if not (0 <= y < g.n and g.has_edge(y, x[(i - 1) % a]) and g.has_edge(y, x[(i + 1) % a])):
            return Verdict(False, "ray edges", f"ray {y} at index {i}")
    if 2 * len(idx) > a:
        return Verdict(False, "b at most a/2", f"b={len(idx)}, a={a}")
    return Verdict(True)


def validate_unit(
    u: Unit, g: Graph, h1: int | None = None, h2: int | None = None, h3: int | None = None
) -> Verdict:
    k = len(u.branches)
    if k == 0 or (h1 is not None and k != h1):
        return Verdict(False, "branch count", f"{k} branches, expected {h1}")
    if len(u.paths) != k or len(u.stars) != k:
        return Verdict(False, "one path and star per branch")
    if len(set(u.branches)) != k or u.core in u.branches:
        return Verdict(False, "distinct branch vertices")
    for p, x in zip(u.paths, u.branches):
        if len(p) < 2 or p[0] != u.core or p[-1] != x:
            return Verdict(False, "paths run from core to branch", f"path {list(p)}")
    for p in u.paths:
        if not _edges_ok(g, p):
            return Verdict(False, "path edges", f"path {list(p)}")
        if len(set(p)) != len(p):
            return Verdict(False, "simple paths", f"path {list(p)}")
        if h3 is not None and len(p) > h3:
            return Verdict(False, "path length", f"{len(p)} vertices > {h3}")
    for i in range(k):
        for j in range(i + 1, k):
            if set(u.paths[i]) & set(u.paths[j]) != {u.core}:
                return Verdict(False, "paths internally disjoint", f"paths {i} and {j}")
    for s, x in zip(u.stars, u.branches):
        if s.centre != x:
            return Verdict(False, "star centred at branch", f"star at {s.centre}, branch {x}")
        if len(set(s.leaves)) != len(s.leaves) or (h2 is not None and len(s.leaves) != h2):
            return Verdict(False, "star size", f"{len(s.leaves)} leaves, expected {h2}")
        if not all(0 <= w < g.n and g.has_edge(x, w) for w in s.leaves):
            return Verdict(False, "star edges", f"star at {x}")
    seen: set[int] = set()
    for s in u.stars:
        vs = {s.centre, *s.leaves}
        if vs & seen:
            return Verdict(False, "stars vertex-disjoint", f"star at {s.centre}")
        seen |= vs
    on_paths = {v for p in u.paths for v in p}
    for s in u.stars:
        if set(s.leaves) & on_paths:
            return Verdict(False, "leaves disjoint from paths", f"star at {s.centre}")
    return Verdict(True)


def validate_web(
    w: Web,
    g: Graph,
    h0: int | None = None,
    h1: int | None = None,
    h2: int | None = None,
    h3: int | None = None,
) -> Verdict:
    k = len(w.units)
    if k == 0 or (h0 is not None and k != h0):
        return Verdict(False, "unit count", f"{k} units, expected {h0}")
    if len(w.spokes) != k:
        return Verdict(False, "one spoke per unit")
    for q, f in zip(w.spokes, w.units):
        if len(q) < 2 or q[0] != w.core or q[-1] != f.core:
            return Verdict(False, "spokes run from core to unit cores", f"spoke {list(q)}")
    for q in w.spokes:
        if not _edges_ok(g, q):
            return Verdict(False, "spoke edges", f"spoke {list(q)}")
        if len(set(q)) != len(q):
            return Verdict(False, "simple spokes", f"spoke {list(q)}")
        if h3 is not None and len(q) > h3:
            return Verdict(False, "spoke length", f"{len(q)} vertices > {h3}")
    for i in range(k):
        for j in range(i + 1, k):
            if set(w.spokes[i]) & set(w.spokes[j]) != {w.core}:
                return Verdict(False, "spokes internally disjoint", f"spokes {i} and {j}")
    for i, f in enumerate(w.units):
        v = validate_unit(f, g, h1, h2, h3)
        if not v:
            return Verdict(False, "units valid", f"unit {i}: {v.clause} {v.detail}".strip())
    seen: set[int] = set()
    for i, f in enumerate(w.units):
        vs = set(f.vertices)
        if vs & seen:
            return Verdict(False, "vertex-disjoint units", f"unit {i}")
        seen |= vs
    on_spokes = {v for q in w.spokes for v in q}
    for i, f in enumerate(w.units):
        if (set(f.vertices) - {f.core}) & on_spokes or w.core in f.vertices:
            return Verdict(False, "units disjoint from spokes", f"unit {i}")
    return Verdict(True)


def validate_cycle(seq, g: Graph) -> Verdict:
    if len(seq) < 3:
        return Verdict(False, "cycle length")
    if len(set(seq)) != len(seq):
        return Verdict(False, "distinct cycle vertices")
    if not _edges_ok(g, tuple(seq) + (seq[0],)):
        return Verdict(False, "cycle edges")
    return Verdict(True)


def validate_path(seq, g: Graph) -> Verdict:
    if not seq:
        return Verdict(False, "nonempty path")
    if len(set(seq)) != len(seq):
        return Verdict(False, "simple path")
    if not _edges_ok(g, tuple(seq)):
        return Verdict(False, "path edges")
    return Verdict(True)
