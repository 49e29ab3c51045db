"""Disjoint stars, units and webs grown by the path-collection procedures.

All searches are breadth-first with lowest-index tie-breaking.  Adding a
path only ever shrinks the set of vertices later paths may use, so one pass
over the candidate centres, each exhausted in turn, already yields a maximal
collection.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from ..graph import Graph
from .types import Failure, Star, Unit, Web
from .validate import validate_unit, validate_web


# -- search helper ---------------------------------------------------------

def bfs_reach(
    g: Graph, sources, blocked, max_vertices: int | None = None
) -> tuple[dict[int, int], list[int]]:
    """BFS forest from ``sources`` in g - blocked.  Returns the predecessor map
    (-1 at roots) and the visiting order; paths have at most ``max_vertices``
    vertices."""
    block = blocked if isinstance(blocked, (set, frozenset)) else set(blocked)
    prev: dict[int, int] = {}
    depth: dict[int, int] = {}
    order: list[int] = []
    q: deque[int] = deque()
    for s in sorted(set(sources)):
        if s in block:
            continue
        prev[s] = -1
        depth[s] = 1
        order.append(s)
        q.append(s)
    while q:
        u = q.popleft()
        if max_vertices is not None and depth[u] >= max_vertices:
            continue
        for w in g.neighbours(u):
            if w in prev or w in block:
                continue
            prev[w] = u
            depth[w] = depth[u] + 1
            order.append(w)
            q.append(w)
    return prev, order


def trace_back(prev: dict[int, int], v: int) -> list[int]:
    out = [v]
    while prev[out[-1]] != -1:
        out.append(prev[out[-1]])
    return out[::-1]


# -- stars -----------------------------------------------------------------

@dataclass(frozen=True)
class StarCollection:
    stars: tuple[Star, ...]
    requested: int
    leaves: int
    residual_avg_degree: float  # average degree of g - avoid - stars when the greedy stalls

    @property
    def complete(self) -> bool:
        return len(self.stars) >= self.requested

    def as_dict(self) -> dict:
        return {
            "stars": [{"centre": s.centre, "leaves": list(s.leaves)} for s in self.stars],
            "requested": self.requested,
            "found": len(self.stars),
            "residual_avg_degree": self.residual_avg_degree,
        }


def find_disjoint_stars(g: Graph, count: int, leaves: int, avoid=()) -> StarCollection:
    """Greedy vertex-disjoint ``leaves``-stars in g - avoid, up to ``count``.

    Centres are tried by decreasing degree in g - avoid (then index); each
    takes its lowest-degree free neighbours as leaves."""
    if leaves < 1:
        raise ValueError("stars need at least one leaf")
    used = set(avoid)
    free_deg = {v: sum(1 for w in g.neighbours(v) if w not in used) for v in range(g.n) if v not in used}
    order = sorted(free_deg, key=lambda v: (-free_deg[v], v))
    stars: list[Star] = []
    for c in order:
        if len(stars) >= count:
            break
        if c in used:
            continue
        nb = [w for w in g.neighbours(c) if w not in used]
        if len(nb) < leaves:
            continue
        nb.sort(key=lambda w: (free_deg[w], w))
        chosen = tuple(sorted(nb[:leaves]))
        stars.append(Star(c, chosen))
        used.add(c)
        used.update(chosen)
    rest = [v for v in range(g.n) if v not in used]
    if rest:
        rs = set(rest)
        deg_sum = sum(1 for v in rest for w in g.neighbours(v) if w in rs)
        resid = deg_sum / len(rest)
    else:
        resid = 0.0
    return StarCollection(tuple(stars), count, leaves, resid)


# -- units -----------------------------------------------------------------

def _split(k: int, want_v: int, need_u: int) -> int:
    """Number of V-side items when k items must supply at least need_u U-side ones."""
    return max(1, min(want_v, k - need_u))


def grow_unit(
    g: Graph,
    h1: int,
    h2: int,
    h3: int,
    avoid=(),
    star_leaves: int | None = None,
    n_v: int | None = None,
    n_u: int | None = None,
) -> Unit | Failure:
    """An (h1, h2, h3)-unit in g - avoid, path lengths counted in vertices.

    Stars S(v) for v in V and S(u) for u in U; then a maximal family of
    v,u-paths on at most h3 vertices whose last edge lies in S(u), whose
    interiors miss avoid, U and V, and which are pairwise internally
    disjoint; then a pivot v with h1 partners, whose stars are pruned of the
    chosen paths' interiors."""
    if min(h1, h2) < 1 or h3 < 3:
        raise ValueError("need h1, h2 >= 1 and h3 >= 3")
    star_leaves = star_leaves or 2 * h2
    n_v = n_v or 2 * h1
    n_u = n_u or 4 * h1
    avoid = set(avoid)
    sc = find_disjoint_stars(g, n_v + n_u, star_leaves, avoid)
    if len(sc.stars) < h1 + 1:
        return Failure(
            "stars",
            f"found {len(sc.stars)} disjoint {star_leaves}-stars, need {h1 + 1}; "
            f"residual average degree {sc.residual_avg_degree:.3g}",
        )
    nv = _split(len(sc.stars), n_v, h1)
    V = [s.centre for s in sc.stars[:nv]]
    ustars = {s.centre: s for s in sc.stars[nv:]}
    centres = set(V) | set(ustars)
    leaf_owner = {w: u for u, s in ustars.items() for w in s.leaves}

    taken: set[int] = set()  # P': interiors of chosen paths
    partners: dict[int, dict[int, tuple[int, ...]]] = {v: {} for v in V}
    for v in V:
        while True:
            blocked = avoid | centres | taken
            blocked.discard(v)
            prev, order = bfs_reach(g, [v], blocked, h3 - 1)
            hit = None
            for w in order:
                u = leaf_owner.get(w)
                if u is not None and u not in partners[v] and w != v:
                    hit = (w, u)
                    break
            if hit is None:
                break
            w, u = hit
            p = tuple(trace_back(prev, w)) + (u,)
            partners[v][u] = p
            taken.update(p[1:-1])
    best = max(V, key=lambda v: (len(partners[v]), -v))
    if len(partners[best]) < h1:
        return Failure(
            "paths",
            f"best pivot {best} reaches {len(partners[best])} branch stars, need {h1}",
        )
    chosen = sorted(partners[best])
    while True:
        inner = {x for u in chosen for x in partners[best][u][1:-1]}
        keep = [u for u in chosen if len(set(ustars[u].leaves) - inner) >= h2]
        if len(keep) == len(chosen):
            break
        chosen = keep
    if len(chosen) < h1:
        return Failure("prune", f"only {len(chosen)} branch stars keep {h2} leaves after pruning")
    chosen = chosen[:h1]
    inner = {x for u in chosen for x in partners[best][u][1:-1]}
    unit = Unit(
        best,
        tuple(chosen),
        tuple(partners[best][u] for u in chosen),
        tuple(Star(u, tuple(sorted(set(ustars[u].leaves) - inner))[:h2]) for u in chosen),
    )
    verdict = validate_unit(unit, g, h1, h2, h3)
    if not verdict:
        return Failure("validate", f"{verdict.clause}: {verdict.detail}")
    return unit


def trim_unit(u: Unit, hit, h1: int) -> Unit | None:
    """Drop every branch whose path (beyond the core) or star meets ``hit``."""
    hit = set(hit)
    keep = [
        i for i in range(len(u.branches))
        if not (set(u.paths[i][1:]) | u.stars[i].vertices) & hit
    ]
    if len(keep) < h1:
        return None
    keep = keep[:h1]
    return Unit(
        u.core,
        tuple(u.branches[i] for i in keep),
        tuple(u.paths[i] for i in keep),
        tuple(u.stars[i] for i in keep),
    )


# -- webs ------------------------------------------------------------------

@dataclass(frozen=True)
class WebParameters:
    """Desk-scale web parameters plus the values the asymptotic argument uses.

    ``unit_len`` bounds the core-to-branch paths of the building units and
    ``pstar`` the linking path between two exteriors, both in vertices, so
    a spoke has at most 2*unit_len + pstar vertices."""

    h0: int
    h1: int
    h2: int
    h3: int
    unit_len: int
    pstar: int
    n_v: int = 2
    n_u: int = 0
    slack: int = 0
    paper: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "h0": self.h0, "h1": self.h1, "h2": self.h2, "h3": self.h3,
            "unit_len": self.unit_len, "pstar": self.pstar,
            "n_v": self.n_v, "n_u": self.n_u, "slack": self.slack,
            "paper": self.paper,
        }


def paper_values(d: float, n: int, eps1: float) -> dict:
    """m = (2/eps1) log^3(450n/d) and the web parameters built from it."""
    m = 2 / eps1 * math.log(450 * n / d) ** 3
    return {
        "m": m, "h0": m ** 3, "h1": m ** 3, "h2": d / 100, "h3": 4 * m,
        "unit_paths": m + 2, "linking_path": m, "webs": 200 * d,
        "min_d": m ** 30,
    }


def web_parameters(
    h0: int, h1: int, h2: int, h3: int,
    unit_len: int | None = None,
    n_v: int = 2,
    n_u: int | None = None,
    slack: int | None = None,
    paper: dict | None = None,
) -> WebParameters:
    if unit_len is None:
        unit_len = max(3, h3 // 3)
    pstar = h3 - 2 * unit_len
    if pstar < 2:
        raise ValueError(
            f"h3={h3} leaves no room for a linking path: spokes need at least "
            f"2*unit_len + 2 = {2 * unit_len + 2} vertices"
        )
    return WebParameters(
        h0, h1, h2, h3, unit_len, pstar, n_v,
        2 * h0 if n_u is None else n_u,
        h0 if slack is None else slack,
        dict(paper or {}),
    )


@dataclass
class WebGrowth:
    webs: list[Web]
    failures: list[Failure]
    params: WebParameters

    def as_dict(self) -> dict:
        return {
            "webs": [w.as_dict() for w in self.webs],
            "failures": [f.as_dict() for f in self.failures],
            "params": self.params.as_dict(),
        }


def _grow_one_web(g: Graph, p: WebParameters, X: set[int]) -> Web | Failure:
    branches = max(p.h0, p.h1 + p.slack)
    units: list[Unit] = []
    used = set(X)
    last: Failure | None = None
    while len(units) < p.n_v + p.n_u:
        u = grow_unit(g, branches, p.h2, p.unit_len, used)
        if isinstance(u, Failure):
            last = u
            break
        units.append(u)
        used |= u.vertices
    if len(units) < p.h0 + 1:
        why = f" ({last.stage}: {last.detail})" if last else ""
        return Failure("units", f"built {len(units)} units, need {p.h0 + 1}{why}")
    nv = _split(len(units), p.n_v, p.h0)
    Vu, Uu = units[:nv], units[nv:]
    U_cores = {f.core for f in Uu}
    V_int: set[int] = set()
    for f in Vu:
        V_int |= f.interior
    ext_owner = {w: j for j, f in enumerate(Uu) for w in f.exterior}

    taken: set[int] = set()  # P'
    touched: set[int] = set()  # U-units met by P'
    links: dict[int, dict[int, tuple[int, ...]]] = {i: {} for i in range(nv)}
    for i, fv in enumerate(Vu):
        while True:
            A = [w for w in sorted(fv.exterior) if not set(fv.path_to(w)) & taken]
            if not A:
                break
            blocked = taken | X | U_cores | V_int
            prev, order = bfs_reach(g, A, blocked, p.pstar)
            found = None
            for b in order:
                j = ext_owner.get(b)
                if j is None or j in touched or j in links[i]:
                    continue
                q = trace_back(prev, b)
                pv = fv.path_to(q[0])
                pu = Uu[j].path_to(b)
                spoke = list(pv) + q[1:-1] + list(pu[::-1])
                if len(set(spoke)) == len(spoke):
                    found = (j, tuple(spoke))
                    break
            if found is None:
                break
            j, spoke = found
            links[i][j] = spoke
            inner = set(spoke[1:-1])
            taken |= inner
            touched |= {k for k, f in enumerate(Uu) if f.vertices & inner}
    best = max(range(nv), key=lambda i: (len(links[i]), -i))
    if len(links[best]) < p.h0:
        return Failure("spokes", f"best pivot reaches {len(links[best])} units, need {p.h0}")
    spokes = links[best]
    hit = {x for s in spokes.values() for x in s[1:-1]}
    web_spokes, web_units = [], []
    for j in sorted(spokes):
        t = trim_unit(Uu[j], hit, p.h1)
        if t is None:
            continue
        web_spokes.append(spokes[j])
        web_units.append(t)
        if len(web_units) == p.h0:
            break
    if len(web_units) < p.h0:
        return Failure("trim", f"{len(web_units)} units keep {p.h1} branches after trimming")
    web = Web(Vu[best].core, tuple(web_spokes), tuple(web_units))
    v = validate_web(web, g, p.h0, p.h1, p.h2, p.h3)
    if not v:
        return Failure("validate", f"{v.clause}: {v.detail}")
    return web


def grow_webs(
    g: Graph,
    h0: int,
    h1: int,
    h2: int,
    h3: int,
    count: int,
    params: WebParameters | None = None,
    avoid=(),
) -> WebGrowth:
    """Up to ``count`` validated webs with pairwise disjoint interiors.

    Each web is grown in g minus the interiors of the earlier ones, so the
    exteriors may overlap.  Stops at the first web that cannot be grown."""
    p = params or web_parameters(h0, h1, h2, h3)
    webs: list[Web] = []
    failures: list[Failure] = []
    X = set(avoid)
    while len(webs) < count:
        w = _grow_one_web(g, p, X)
        if isinstance(w, Failure):
            failures.append(Failure(f"web {len(webs)}: {w.stage}", w.detail))
            break
        webs.append(w)
        X |= w.interior
    return WebGrowth(webs, failures, p)
