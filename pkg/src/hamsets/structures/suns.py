"""Long cycles, long paths or suns in graphs of large average degree."""

from __future__ import annotations

import math
from fractions import Fraction

from ..classical import longest_cycle
from ..graph import DP_CAP, Graph, shortest_path
from .types import StructureWitness, Sun
from .validate import validate_cycle, validate_path, validate_sun


def _avg(g: Graph, vs) -> Fraction:
    vs = list(vs)
    if not vs:
        return Fraction(0)
    h, _ = g.induced(vs)
    return h.average_degree()


def _longest_in(g: Graph, vs, cap: int) -> tuple[int, ...]:
    h, lab = g.induced(vs)
    c = longest_cycle(h, cap=cap) if h.n >= 3 else None
    return tuple(lab[i] for i in c) if c else ()


def _rotate_to_end(cyc: tuple[int, ...], v: int) -> list[int]:
    """Cycle as a path ending at v (starting at v's successor)."""
    i = cyc.index(v)
    return list(cyc[i + 1 :] + cyc[: i + 1])


def _rotate_to_start(cyc: tuple[int, ...], v: int) -> list[int]:
    i = cyc.index(v)
    return list(cyc[i:] + cyc[:i])


def build_sun(g: Graph, cycle: tuple[int, ...], candidates, b: int) -> Sun | None:
    """Attach up to b rays to ``cycle``: each candidate z (in order) takes the
    smallest index i with x_{i-1}, x_{i+1} both adjacent to z and i at cyclic
    distance >= 2 from every index already used."""
    a = len(cycle)
    used: list[int] = []
    rays: list[tuple[int, int]] = []
    for z in candidates:
        if len(rays) >= b or 2 * (len(rays) + 1) > a:
            break
        nz = g.nbr_set(z)
        for i in range(a):
            if cycle[(i - 1) % a] not in nz or cycle[(i + 1) % a] not in nz:
                continue
            if any((i - j) % a in (0, 1, a - 1) for j in used):
                continue
            used.append(i)
            rays.append((i, z))
            break
    if not rays:
        return None
    return Sun(tuple(cycle), tuple(sorted(rays)))


def find_structure(
    g: Graph,
    d,
    cap: int = DP_CAP,
    path_ratio: float = 1.01,
    pair_ratio: float = 1.8,
    split_ratio: Fraction = Fraction(22, 21),
) -> StructureWitness:
    """Two disjoint cycles of total length >= 1.8d, a path on >= 1.01d
    vertices, or an (a, b)-sun with a >= d and b >= d/20.

    Follows the case analysis of the sun lemma: densest component H, then
    its longest cycle C; a dense remainder U = V(H) - C yields a second cycle
    joined to C by a path; otherwise low-U-degree vertices become rays.
    ``path_ratio`` is the 1.01 factor; raising it lets small fixtures reach
    the sun branch, which at the default needs more than 100 vertices.
    """
    d = Fraction(d)
    trace: list[str] = []
    n = g.n
    stats_ok = n > 0 and n >= Fraction(118, 100) * d and g.average_degree() >= d
    hyp = bool(stats_ok and 2 * min(g.degrees()) >= d)
    if not hyp:
        trace.append("hypotheses unmet: need n >= 1.18d, d(G) >= d, delta >= d/2")
    if n == 0:
        return StructureWitness(None, d, hypotheses_met=False, trace=tuple(trace))
    pair_thr = pair_ratio * d
    path_thr = Fraction(path_ratio) * d

    def two_cycles(c1, c2, why):
        ok = bool(c1 and c2) and validate_cycle(c1, g).ok and validate_cycle(c2, g).ok
        ok = ok and len(c1) + len(c2) >= pair_thr
        trace.append(f"{why}: cycles of length {len(c1)} + {len(c2)}")
        return StructureWitness(
            "two_cycles", d, cycles=(c1, c2), threshold=f"|C1|+|C2| >= {float(pair_thr):g}",
            satisfied=ok, hypotheses_met=hyp, trace=tuple(trace),
        )

    def long_path(p, why):
        ok = validate_path(p, g).ok and len(p) >= path_thr
        trace.append(f"{why}: path on {len(p)} vertices")
        return StructureWitness(
            "long_path", d, path=tuple(p), threshold=f"|P| >= {float(path_thr):g}",
            satisfied=ok, hypotheses_met=hyp, trace=tuple(trace),
        )

    comps = g.components()
    H = max(comps, key=lambda c: (_avg(g, c), len(c), [-v for v in c]))
    rest = [v for v in range(n) if v not in set(H)]
    d1, d2, n1 = _avg(g, H), _avg(g, rest), len(H)
    trace.append(f"component H: n1={n1}, d1={d1}, d(G-H)={d2}")
    if rest and d2 >= d:
        w = two_cycles(_longest_in(g, H, cap), _longest_in(g, rest, cap), "d(G-H) >= d")
        if w.satisfied:
            return w
    if d1 >= path_thr:
        c = _longest_in(g, H, cap)
        if c and len(c) >= path_thr:
            return long_path(list(c), "d1 >= ratio*d")
    if rest and Fraction(n, n1) >= split_ratio:
        w = two_cycles(_longest_in(g, H, cap), _longest_in(g, rest, cap), "n/n1 >= 22/21")
        if w.satisfied:
            return w
    C = _longest_in(g, H, cap)
    a = len(C)
    trace.append(f"longest cycle in H: a={a}")
    if a and a >= Fraction(path_ratio) * d1:
        return long_path(list(C), "a >= ratio*d1")
    U = [v for v in H if v not in set(C)]
    if U and _avg(g, U) >= d1 / 100:
        C2 = _longest_in(g, U, cap)
        if C2:
            hv, lab = g.induced(H)
            idx = {v: i for i, v in enumerate(lab)}
            link = shortest_path(hv, [idx[v] for v in C], [idx[v] for v in C2])
            if link:
                link = [lab[i] for i in link]
                p = _rotate_to_end(C, link[0]) + link[1:-1] + _rotate_to_start(C2, link[-1])
                return long_path(p, "dense remainder: C + connecting path + C'")
        trace.append("dense remainder without usable cycle")
    # rays from vertices with few neighbours in U
    Uset = set(U)
    low = [z for z in U if sum(1 for w in g.neighbours(z) if w in Uset) <= d1 / 40]
    b = max(1, math.ceil(d1 / 20))
    sun = build_sun(g, C, low, b) if a >= 3 else None
    if sun is None:
        trace.append("no ray satisfies the neighbour conditions")
        return StructureWitness(None, d, hypotheses_met=hyp, trace=tuple(trace))
    ok = validate_sun(sun, g).ok and sun.a >= d and sun.b >= d / 20
    trace.append(f"sun with a={sun.a}, b={sun.b}")
    return StructureWitness(
        "sun", d, sun=sun, threshold=f"a >= {float(d):g} and b >= {float(d / 20):g}",
        satisfied=ok, hypotheses_met=hyp, trace=tuple(trace),
    )
