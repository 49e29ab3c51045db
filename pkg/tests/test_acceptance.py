"""The fifteen acceptance criteria, one test each.

Every test records a PASS/FAIL line (shown in the pytest terminal summary)
before asserting.  Run directly with ``python tests/test_acceptance.py`` to
print the lines without pytest.
"""

from __future__ import annotations

import math
import random
import time
from collections import Counter
from fractions import Fraction

import networkx as nx

from _fixtures import gnp, k300_webs, random_regular, sun_fixture, sun_host
from _fixtures import dense_unit, sparse_unit, sun_mutations, unit_mutations_dense
from _fixtures import unit_mutations_sparse, web_mutations
from _oracles import closed_bipartite, closed_complete, closed_glued, ham_sizes, stream_lines
from _report import record

from hamsets.classical import is_hamiltonian, longest_cycle, posa_check
from hamsets.constructors import barbell, complete, complete_bipartite, cycle
from hamsets.constructors import figure1_family, glued_pair
from hamsets.counting import ham_subsets_count
from hamsets.expander import ExpansionProfile, connect_avoiding, extract_expander, is_expander
from hamsets.graph import Graph, blocks, from_graph6, is_k_connected
from hamsets.structures import (
    CycleShape,
    PathShape,
    Sun,
    build_cycle_dense,
    build_cycle_sparse,
    build_walk,
    distinguishability_bound,
    far_apart_set,
    grow_webs,
    validate_cycle,
    validate_sun,
    validate_unit,
    validate_web,
)
from hamsets.verify import tiny_generate, verify_komlos, verify_tuza


def _graphs_of_stream():
    return [(s, from_graph6(s)) for s in stream_lines()]


# 1 ---------------------------------------------------------------------------

def test_01_complete_graph_formula():
    t0 = time.perf_counter()
    bad = []
    for d in range(2, 11):
        c = ham_subsets_count(complete(d + 1)).c
        want = 2 ** (d + 1) - math.comb(d + 1, 2) - d - 2
        if c != want or c != closed_complete(d):
            bad.append((d, c, want))
    spots = [ham_subsets_count(complete(k)).c for k in (4, 5, 6)]
    elapsed = time.perf_counter() - t0
    ok = not bad and spots == [5, 16, 42] and elapsed < 5
    record(1, "complete-graph formula, d=2..10", ok, f"spots {spots}, {elapsed:.2f}s, mismatches {bad}")
    assert ok


# 2 ---------------------------------------------------------------------------

def test_02_gluing_additivity():
    t0 = time.perf_counter()
    bad = []
    for d in range(2, 9):
        c = ham_subsets_count(glued_pair(d + 1, d)).c
        # (3/2) 2^{d+1} - d^2 - 2d - 3, kept integral
        want = 3 * 2 ** d - d * d - 2 * d - 3
        if c != want or c != closed_glued(d):
            bad.append((d, c, want))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 5
    record(2, "glued K_{d+1}*K_d formula, d=2..8", ok, f"{elapsed:.2f}s, mismatches {bad}")
    assert ok


# 3 ---------------------------------------------------------------------------

def test_03_bipartite_formula():
    t0 = time.perf_counter()
    bad = []
    for a in range(2, 7):
        for b in range(a, 7):
            c = ham_subsets_count(complete_bipartite(a, b)).c
            want = math.comb(a + b, a) - (a * b + 1)
            if c != want or c != closed_bipartite(a, b):
                bad.append((a, b, c, want))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 30
    record(3, "complete bipartite formula, 2<=a<=b<=6", ok, f"{elapsed:.2f}s, mismatches {bad}")
    assert ok


# 4 ---------------------------------------------------------------------------

def test_04_cycles_have_one_subset():
    bad = [n for n in range(3, 25) if ham_subsets_count(cycle(n)).c != 1]
    record(4, "c(C_n) = 1, n=3..24", not bad, f"mismatches {bad}")
    assert not bad


# 5 ---------------------------------------------------------------------------

def test_05_dp_matches_backtracking_oracle():
    t0 = time.perf_counter()
    bad = []
    exhaustive = 0
    for n in range(1, 8):
        for s in tiny_generate(n):
            g = from_graph6(s)
            exhaustive += 1
            if ham_subsets_count(g).by_size != ham_sizes(g.n, list(g.edges())):
                bad.append(s)
    rng = random.Random(5)
    for _ in range(10_000):
        n = rng.randint(1, 9)
        p = rng.random()
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        if ham_subsets_count(Graph(n, edges)).by_size != ham_sizes(n, edges):
            bad.append((n, edges))
    elapsed = time.perf_counter() - t0
    ok = not bad and exhaustive == sum((1, 2, 4, 11, 34, 156, 1044)) and elapsed < 600
    record(5, "DP equals per-subset backtracking", ok,
           f"{exhaustive} exhaustive + 10000 random, {len(bad)} discrepancies, {elapsed:.1f}s")
    assert ok


# 6 ---------------------------------------------------------------------------

def test_06_komlos_d3_over_stream():
    t0 = time.perf_counter()
    lines = stream_lines()
    rep = verify_komlos(lines, 3)
    elapsed = time.perf_counter() - t0
    ok = (
        len(lines) == 87008
        and rep.graphs_scanned == len(lines)
        and not rep.violations
        and not rep.parse_errors
        and rep.equality_cases == ["C~"]
        and rep.min_c == 5
        and elapsed < 900
    )
    record(6, "Komlos bound at d=3, all delta>=3 graphs n<=9", ok,
           f"{rep.graphs_scanned} graphs, {len(rep.violations)} violations, "
           f"equality {rep.equality_cases}, {elapsed:.1f}s")
    assert ok


# 7 ---------------------------------------------------------------------------

def test_07_tuza_audit_over_stream():
    rep = verify_tuza(stream_lines())
    ok = rep.graphs_scanned == 87008 and not rep.violations and not rep.parse_errors
    record(7, "c(G) >= 2^{floor d(G) / 2} over the stream", ok,
           f"{rep.graphs_scanned} graphs, {len(rep.violations)} violations, min c {rep.min_c}")
    assert ok


# 8 ---------------------------------------------------------------------------

def _clique_sum(g: Graph) -> int:
    # every block of these graphs is complete, and cycles live inside blocks
    return sum(closed_complete(len(b) - 1) for b in blocks(g).blocks if len(b) >= 3)


def test_08_clique_tree_ratio_window():
    bad = []
    checked = 0
    for d in range(3, 9):
        lo = 2 * (1 - Fraction(4 * (d * d + 2), 2 ** (d + 1)))
        for g in figure1_family(d) + [glued_pair(d + 1, d + 1)]:
            c = ham_subsets_count(g).c
            ratio = Fraction(c, 2 ** (d + 1))
            checked += 1
            if c != _clique_sum(g) or not lo <= ratio <= 2:
                bad.append((d, g.n, ratio))
    record(8, "clique-tree family ratio window, d=3..8", not bad, f"{checked} graphs, out of window {bad}")
    assert not bad


# 9 ---------------------------------------------------------------------------

def test_09_posa_soundness():
    passed = 0
    false_pos = []
    for s, g in _graphs_of_stream():
        if posa_check(g).passes:
            passed += 1
            if not is_hamiltonian(g):
                false_pos.append(s)
    ok = not false_pos and passed > 0
    record(9, "Posa condition implies Hamiltonicity over the stream", ok,
           f"{passed} graphs pass the condition, {len(false_pos)} false positives")
    assert ok


# 10 --------------------------------------------------------------------------

def test_10_erdos_gallai_longest_cycle():
    checked = 0
    bad = []
    for s, g in _graphs_of_stream():
        if not g.is_connected() or g.average_degree() < 2:
            continue
        checked += 1
        cyc = longest_cycle(g)
        if cyc is None or len(cyc) < math.floor(g.average_degree()) or not validate_cycle(cyc, g):
            bad.append(s)
    ok = not bad and checked > 0
    record(10, "longest cycle >= floor d(G) over connected stream graphs", ok,
           f"{checked} graphs, {len(bad)} violations")
    assert ok


# 11 --------------------------------------------------------------------------

def _host_with(n: int, shape_edges, rng: random.Random, p: float) -> Graph:
    extra = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, list(shape_edges) + extra)


def _random_walk_fixture(rng: random.Random):
    kind = rng.choice(["cycle", "path", "sun"])
    p = rng.uniform(0, 0.3)
    if kind == "cycle":
        n = rng.randint(3, 30)
        vs = rng.sample(range(n), rng.randint(3, n))
        g = _host_with(n, zip(vs, vs[1:] + vs[:1]), rng, p)
        shape = CycleShape(tuple(vs))
        cls = {v: 2 for v in vs}
    elif kind == "path":
        n = rng.randint(2, 30)
        vs = rng.sample(range(n), rng.randint(2, n))
        g = _host_with(n, zip(vs, vs[1:]), rng, p)
        shape = PathShape(tuple(vs))
        cls = {v: 2 for v in vs}
        cls[vs[0]] = cls[vs[-1]] = 1
    else:
        a = rng.randint(4, 20)
        idx = []
        for i in rng.sample(range(a), a):
            trial = sorted(idx + [i])
            gaps = [trial[j + 1] - trial[j] for j in range(len(trial) - 1)]
            if all(x >= 2 for x in gaps) and (len(trial) < 2 or trial[0] + a - trial[-1] >= 2):
                idx = trial
            if len(idx) >= rng.randint(1, a // 2):
                break
        n = a + len(idx) + rng.randint(0, 5)
        perm = rng.sample(range(n), n)
        x, ys = perm[:a], perm[a:a + len(idx)]
        edges = list(zip(x, x[1:] + x[:1]))
        for i, y in zip(idx, ys):
            edges += [(y, x[(i - 1) % a]), (y, x[(i + 1) % a])]
        g = _host_with(n, edges, rng, p)
        shape = Sun(tuple(x), tuple(zip(idx, ys)))
        cls = {v: 2 for v in x}
        for i, y in zip(idx, ys):
            cls[x[i]] = cls[y] = 1
    u, v = rng.choice(list(cls)), rng.choice(list(cls))
    return g, shape, cls, u, v, rng.randint(1, 6)


def test_11_walk_multiplicities():
    t0 = time.perf_counter()
    rng = random.Random(11)
    bad = []
    kinds = Counter()
    for _ in range(200):
        g, shape, cls, u, v, n = _random_walk_fixture(rng)
        kinds[type(shape).__name__] += 1
        w = build_walk(g, shape, u, v, n).vertices
        mult = Counter(w)
        fine = (
            w[0] == u
            and w[-1] == v
            and all(g.has_edge(w[i], w[i + 1]) for i in range(len(w) - 1))
            and set(mult) == set(cls)
            and all(cls[y] * n <= mult[y] <= cls[y] * n + 2 for y in cls)
        )
        if not fine:
            bad.append((shape, u, v, n))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 10
    record(11, "walk multiplicity windows, 200 fixtures", ok,
           f"{dict(sorted(kinds.items()))}, {len(bad)} violations, {elapsed:.2f}s")
    assert ok


# 12 --------------------------------------------------------------------------

def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_12_expander_extraction_postconditions():
    rng = random.Random(12)
    bad = []
    exact = 0
    for i in range(50):
        if i % 5 == 4:
            g = barbell(rng.randint(4, 40))
        else:
            n = rng.randint(10, 200)
            g = gnp(n, rng.uniform(0.05, 0.5), rng.randrange(10**9))
            while g.m == 0:
                g = gnp(n, 0.5, rng.randrange(10**9))
        r = extract_expander(g)
        H = r.subgraph
        dH, dG = H.average_degree(), g.average_degree()
        k = math.ceil(r.nu * float(dH) - 1e-12)
        kappa_ok = nx.node_connectivity(_nx(H)) >= k if k > 1 else (k <= 0 or nx.is_connected(_nx(H)))
        fine = (
            2 * min(H.degrees()) >= dH
            and dH >= (1 - Fraction(r.eps0)) * dG
            and kappa_ok
            and is_k_connected(H, k)
            and r.ok
        )
        if H.n <= 20:
            exact += 1
            cert = is_expander(H, ExpansionProfile(r.eps1, r.c_prime * float(dG)), mode="exact")
            fine = fine and cert.passed
        if not fine:
            bad.append((i, g.n, g.m, r.postconditions))
    record(12, "expander extraction postconditions, 50 graphs", not bad,
           f"{exact} outputs certified exactly, {len(bad)} failures")
    assert not bad


# 13 --------------------------------------------------------------------------

def test_13_connector_length_bound():
    rng = random.Random(13)
    fixtures = [(random_regular(6, 200, s), ExpansionProfile(1.0, 120), 60, 3) for s in range(5)]
    fixtures += [(random_regular(4, 20, s), ExpansionProfile(1.0, 4), 4, 0) for s in range(5)]
    runs = 0
    bad = []
    modes = Counter()
    for g, prof, x, w in fixtures:
        cert = is_expander(g, prof)
        assert cert.passed, "fixture is not certified"
        modes[cert.mode] += 1
        for _ in range(20):
            vs = rng.sample(range(g.n), 2 * x + w)
            X, Xp, W = vs[:x], vs[x:2 * x], vs[2 * x:]
            c = connect_avoiding(g, X, Xp, W, prof, cert)
            runs += 1
            p = c.path
            fine = (
                c.hypotheses_met
                and p is not None
                and p[0] in X and p[-1] in Xp
                and not set(p) & set(W)
                and len(set(p)) == len(p)
                and all(g.has_edge(p[i], p[i + 1]) for i in range(len(p) - 1))
                and len(p) <= 2 / prof.eps1 * math.log(15 * g.n / prof.t) ** 3
            )
            if not fine:
                bad.append((g.n, X, Xp, W))
    record(13, "connector paths within the length bound", not bad,
           f"{runs} connections, certificates {dict(modes)}, {len(bad)} violations")
    assert not bad


# 14 --------------------------------------------------------------------------

def test_14_structure_builders():
    t0 = time.perf_counter()
    problems = []
    mutations = 0
    # validators accept builder output and reject single-clause mutations
    h = sun_host()
    s = sun_fixture()
    if not validate_sun(s, h):
        problems.append("sun fixture invalid")
    for label, m, clause in sun_mutations(s):
        mutations += 1
        if validate_sun(m, h).clause != clause:
            problems.append(label)
    g, u = dense_unit()
    if not validate_unit(u, g, 3, 4, 3):
        problems.append("dense unit invalid")
    for label, m, clause in unit_mutations_dense(u):
        mutations += 1
        if validate_unit(m, g, 3, 4, 3).clause != clause:
            problems.append(label)
    g, u = sparse_unit()
    if not validate_unit(u, g, 3, 5, 8):
        problems.append("sparse unit invalid")
    for label, m, clause in unit_mutations_sparse(g, u):
        mutations += 1
        if validate_unit(m, g, 3, 5, 8).clause != clause:
            problems.append(label)
    g, growth = k300_webs()
    webs = growth.webs
    if len(webs) != 6 or not all(validate_web(w, g, 2, 2, 3, 8) for w in webs):
        problems.append("K_300 webs")
    for label, m, clause in web_mutations(webs[0]):
        mutations += 1
        if validate_web(m, g, 2, 2, 3, 8).clause != clause:
            problems.append(label)

    # dense cycle through all six cores
    rep = build_cycle_dense(g, webs, range(6))
    cores = {w.core for w in webs}
    if not (rep.ok and validate_cycle(rep.cycle, g) and cores <= set(rep.cycle)):
        problems.append(f"dense cycle: {rep.failure}")

    # sparse cycles with exact intersection
    hs = random_regular(6, 2000, 3)
    prof = ExpansionProfile(1.0, 120)
    cert = is_expander(hs, prof)
    Z, _ = far_apart_set(hs, 2, 12)
    rng = random.Random(14)
    sparse_ok = 0
    for _ in range(20):
        U = rng.sample(Z, 8)
        r = build_cycle_sparse(hs, Z, U, r=1, k=2, profile=prof, certificate=cert)
        if r.ok and validate_cycle(r.cycle, hs) and set(r.cycle) & set(Z) == set(U):
            sparse_ok += 1
    if sparse_ok != 20 or not cert.passed or len(Z) != 12:
        problems.append(f"sparse cycles {sparse_ok}/20")
    elapsed = time.perf_counter() - t0
    ok = not problems and mutations >= 10 and elapsed < 300
    record(14, "structure validators and cycle builders", ok,
           f"{mutations} mutations rejected by clause, dense cycle length "
           f"{len(rep.cycle or ())}, sparse {sparse_ok}/20, {elapsed:.1f}s, problems {problems}")
    assert ok


# 15 --------------------------------------------------------------------------

def test_15_distinguishable_cycles():
    g = complete(500)
    growth = grow_webs(g, 2, 2, 3, 8, 12)
    webs = growth.webs
    assert len(webs) == 12 and all(validate_web(w, g, 2, 2, 3, 8) for w in webs)
    Z = [w.core for w in webs]
    rng = random.Random(15)
    u = 6
    vsets = {}
    k = u
    while len(vsets) < 100:
        U = tuple(sorted(rng.sample(range(len(webs)), u)))
        if U in vsets:
            continue
        rep = build_cycle_dense(g, webs, U)
        assert rep.ok and validate_cycle(rep.cycle, g), rep.failure
        inter = set(rep.cycle) & set(Z)
        assert inter <= {Z[i] for i in U}
        k = min(k, len(inter))
        vsets[U] = frozenset(rep.cycle)
    distinct = len(set(vsets.values()))
    bound = distinguishability_bound(len(vsets), len(Z), u, k)
    # same ratio from first principles
    assert bound == Fraction(len(vsets), math.comb(len(Z) - k, u - k))
    ok = distinct >= bound
    record(15, "distinct cycle vertex sets vs the counting bound", ok,
           f"{len(vsets)} distinct U of size {u} from z={len(Z)}, k={k}, "
           f"{distinct} distinct V(C_U), bound {bound}")
    assert ok


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
