"""Immutable simple graphs, graph6 I/O and basic structural queries."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

# Desk-scale limits.  Subset DP consumers refuse graphs above DP_CAP unless a
# caller passes a larger cap explicitly; graph6 parsing accepts up to STREAM_CAP.
DP_CAP = 24
STREAM_CAP = 1 << 18


class GraphFormatError(ValueError):
    """Malformed graph6 input; ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class CapExceeded(ValueError):
    pass


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Neighbourhoods are stored as sorted tuples; bit rows (Python ints, bit
    ``v`` of ``rows[u]`` set iff ``uv`` is an edge) are built on first use and
    cached, so large sparse graphs never pay for them.
    """

    __slots__ = ("n", "_adj", "_rows", "_m", "_sets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("negative vertex count")
        nb: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nb[u].add(v)
            nb[v].add(u)
        self._init(n, tuple(tuple(sorted(s)) for s in nb))

    def _init(self, n: int, adj: tuple[tuple[int, ...], ...]) -> None:
        self.n = n
        self._adj = adj
        self._rows = None
        self._sets = None
        self._m = sum(len(a) for a in adj) // 2

    @classmethod
    def from_neighbours(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        """Build from neighbour lists that are already symmetric."""
        g = cls.__new__(cls)
        g._init(len(adj), tuple(tuple(sorted(a)) for a in adj))
        return g

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        n = len(rows)
        adj = []
        for u, r in enumerate(rows):
            adj.append(tuple(v for v in range(n) if (r >> v) & 1))
        g = cls.__new__(cls)
        g._init(n, tuple(adj))
        for u in range(n):
            for v in g._adj[u]:
                if v == u or u not in g._adj[v]:
                    raise ValueError("rows are not a symmetric irreflexive relation")
        return g

    # -- basic access -------------------------------------------------------
    @property
    def m(self) -> int:
        return self._m

    @property
    def rows(self) -> tuple[int, ...]:
        if self._rows is None:
            rows = []
            for a in self._adj:
                r = 0
                for v in a:
                    r |= 1 << v
                rows.append(r)
            self._rows = tuple(rows)
        return self._rows

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def nbr_set(self, v: int) -> frozenset[int]:
        if self._sets is None:
            self._sets = tuple(frozenset(a) for a in self._adj)
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbr_set(u)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, a in enumerate(self._adj):
            for v in a:
                if u < v:
                    yield (u, v)

    def vertices(self) -> range:
        return range(self.n)

    def average_degree(self) -> Fraction:
        if self.n == 0:
            raise ValueError("average degree of the empty graph")
        return Fraction(2 * self._m, self.n)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"

    # -- derived graphs -----------------------------------------------------
    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled in increasing order; also returns the
        list mapping new labels back to the old ones."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = [[index[w] for w in self._adj[v] if w in index] for v in keep]
        return Graph.from_neighbours(adj), keep

    def remove(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self.n, list(self.edges()) + list(extra))

    def components(self, blocked: Iterable[int] = ()) -> list[list[int]]:
        """Connected components (sorted vertex lists) of ``self - blocked``."""
        seen = bytearray(self.n)
        for b in blocked:
            seen[b] = 1
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = 1
            comp = [s]
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = 1
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


# -- graph6 ---------------------------------------------------------------

def _g6_size(data: bytes) -> tuple[int, int]:
    def ch(i: int) -> int:
        if i >= len(data):
            raise GraphFormatError("truncated size header", i)
        c = data[i]
        if not 63 <= c <= 126:
            raise GraphFormatError(f"character {c!r} outside graph6 range", i)
        return c - 63

    first = ch(0)
    if first < 63:
        return first, 1
    if len(data) > 1 and data[1] == 126:
        n = 0
        for i in range(2, 8):
            n = (n << 6) | ch(i)
        return n, 8
    n = 0
    for i in range(1, 4):
        n = (n << 6) | ch(i)
    return n, 4


def from_graph6(text: str | bytes, cap: int = STREAM_CAP) -> Graph:
    """Decode one graph6 record (a leading ``>>graph6<<`` header is allowed)."""
    data = text.encode("ascii", "replace") if isinstance(text, str) else bytes(text)
    data = data.strip(b"\r\n")
    base = 0
    if data.startswith(b">>graph6<<"):
        base = 10
        data = data[10:]
    if not data:
        raise GraphFormatError("empty record", base)
    try:
        n, pos = _g6_size(data)
    except GraphFormatError as exc:
        raise GraphFormatError(str(exc).rsplit(" (byte", 1)[0], exc.offset + base) from None
    if n > cap:
        raise CapExceeded(f"graph6 record has n={n} > cap {cap}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise GraphFormatError(
            f"truncated body: expected {nbytes} bytes, found {len(body)}", base + pos + len(body)
        )
    if len(body) > nbytes:
        raise GraphFormatError("trailing bytes after body", base + pos + nbytes)
    for i, c in enumerate(body):
        if not 63 <= c <= 126:
            raise GraphFormatError(f"character {c!r} outside graph6 range", base + pos + i)
    adj: list[list[int]] = [[] for _ in range(n)]
    # bits run over the upper triangle column by column: (0,1),(0,2),(1,2),(0,3)...
    k = 0
    i, j = 0, 1
    for c in body:
        val = c - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                break
            if (val >> shift) & 1:
                adj[i].append(j)
                adj[j].append(i)
            k += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph.from_neighbours(adj)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = ["~"] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    else:
        out = ["~~"] + [chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0)]
    acc = 0
    nb = 0
    for j in range(1, n):
        sj = g.nbr_set(j)
        for i in range(j):
            acc = (acc << 1) | (i in sj)
            nb += 1
            if nb == 6:
                out.append(chr(acc + 63))
                acc = nb = 0
    if nb:
        out.append(chr((acc << (6 - nb)) + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph | Exception]]:
    """Yield ``(line_number, record, graph_or_error)`` for non-blank lines."""
    for lineno, raw in enumerate(lines, 1):
        rec = raw.strip()
        if not rec:
            continue
        try:
            yield lineno, rec, from_graph6(rec)
        except (GraphFormatError, CapExceeded) as exc:
            yield lineno, rec, exc


# -- degree statistics ----------------------------------------------------

@dataclass(frozen=True)
class DegreeStats:
    average: Fraction
    min: int
    second_min: int
    max: int
    edges: int


def degree_stats(g: Graph) -> DegreeStats:
    if g.n == 0:
        raise ValueError("degree statistics of the empty graph")
    degs = sorted(g.degrees())
    second = degs[1] if g.n > 1 else degs[0]
    return DegreeStats(Fraction(2 * g.m, g.n), degs[0], second, degs[-1], g.m)


# -- blocks ---------------------------------------------------------------

@dataclass(frozen=True)
class BlockDecomposition:
    blocks: list[frozenset[int]]
    cut_vertices: frozenset[int]
    block_graph: dict[int, frozenset[int]]
    leaf_blocks: frozenset[int]
    isolated: frozenset[int]


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components by the lowpoint DFS (iterative)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found: list[frozenset[int]] = []
    cuts: set[int] = set()
    t = 0
    for root in range(n):
        if disc[root] != -1 or not g.neighbours(root):
            continue
        disc[root] = low[root] = t
        t += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.neighbours(root)))]
        root_children = 0
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, u, iter(g.neighbours(w))))
                    if u == root:
                        root_children += 1
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            low[p] = min(low[p], low[u])
            if low[u] >= disc[p]:
                if p != root:
                    cuts.add(p)
                comp: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.add(a)
                    comp.add(b)
                    if (a, b) == (p, u):
                        break
                found.append(frozenset(comp))
        if root_children > 1:
            cuts.add(root)
    # block graph: blocks adjacent when they share a cut vertex (clique over
    # each cut vertex would create cycles, so link through a star instead:
    # every block at a cut vertex is joined to the first block listed there).
    at_cut: dict[int, list[int]] = {c: [] for c in cuts}
    for i, b in enumerate(found):
        for c in b & cuts:
            at_cut[c].append(i)
    bg: dict[int, set[int]] = {i: set() for i in range(len(found))}
    for c, ids in at_cut.items():
        for other in ids[1:]:
            bg[ids[0]].add(other)
            bg[other].add(ids[0])
    leaves = frozenset(i for i, b in enumerate(found) if len(b & cuts) == 1)
    isolated = frozenset(v for v in range(n) if not g.neighbours(v))
    return BlockDecomposition(
        found, frozenset(cuts), {i: frozenset(s) for i, s in bg.items()}, leaves, isolated
    )


# -- connectivity ---------------------------------------------------------

def _local_connectivity(g: Graph, s: int, t: int, limit: int) -> int:
    """Number of internally disjoint s-t paths (s, t non-adjacent), stopping
    once ``limit`` paths are found.  Unit-capacity augmenting paths on the
    vertex-split digraph: node 2v is v_in, 2v+1 is v_out."""
    flow: dict[tuple[int, int], int] = {}

    def cap(a: int, b: int) -> int:
        # residual capacity of arc a->b
        base = 0
        if a // 2 == b // 2:
            base = 1 if (a % 2 == 0 and b == a + 1) else 0
        elif a % 2 == 1 and b % 2 == 0 and g.has_edge(a // 2, b // 2):
            base = 1
        return base - flow.get((a, b), 0) + flow.get((b, a), 0)

    def succ(a: int) -> Iterator[int]:
        v = a // 2
        if a % 2 == 0:
            yield a + 1
            for w in g.neighbours(v):
                yield 2 * w + 1  # residual back-arc of w_out -> v_in
        else:
            yield a - 1
            for w in g.neighbours(v):
                yield 2 * w

    src, dst = 2 * s + 1, 2 * t
    value = 0
    while value < limit:
        prev = {src: src}
        q = deque([src])
        while q and dst not in prev:
            a = q.popleft()
            for b in succ(a):
                if b not in prev and b != 2 * s and b != 2 * t + 1 and cap(a, b) > 0:
                    prev[b] = a
                    q.append(b)
        if dst not in prev:
            break
        b = dst
        while b != src:
            a = prev[b]
            if flow.get((b, a), 0) > 0:
                flow[(b, a)] -= 1
            else:
                flow[(a, b)] = flow.get((a, b), 0) + 1
            b = a
        value += 1
    return value


def vertex_connectivity(g: Graph, at_least: int | None = None) -> int:
    """Size of a minimum vertex cut (n-1 for complete graphs).

    Even's scheme: some vertex among the first kappa+1 lies outside a
    minimum cut, so only pairs (v_i, v_j) with i <= kappa need a flow.
    With ``at_least=k`` the search stops early and the return value is only
    guaranteed to be ``min(kappa, k)``.
    """
    n = g.n
    if n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    if not g.is_connected():
        return 0
    best = min(g.degrees())
    if at_least is not None:
        best = min(best, at_least)
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            if not g.has_edge(i, j):
                best = min(best, _local_connectivity(g, i, j, best))
        i += 1
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    if k <= 0:
        return True
    if g.n <= k:
        return False
    return vertex_connectivity(g, at_least=k) >= k


# -- balls ----------------------------------------------------------------

@dataclass(frozen=True)
class Ball:
    center_set: frozenset[int]
    radius: int
    members: frozenset[int]
    sphere: frozenset[int]


def ball(g: Graph, X: Iterable[int], r: int, blocked: Iterable[int] = ()) -> Ball:
    """B^r(X) in ``g - blocked`` (centres themselves are never blocked)."""
    centres = frozenset(X)
    if not centres:
        raise ValueError("ball needs a nonempty centre set")
    if r < 0:
        raise ValueError("negative radius")
    for x in centres:
        if not 0 <= x < g.n:
            raise ValueError(f"vertex {x} not in graph")
    dist = bfs_distances(g, centres, blocked=blocked, limit=r)
    members = frozenset(dist)
    sphere = frozenset(v for v, dv in dist.items() if dv == r)
    return Ball(centres, r, members, sphere)


def bfs_distances(
    g: Graph, sources: Iterable[int], blocked: Iterable[int] = (), limit: int | None = None
) -> dict[int, int]:
    block = set(blocked)
    dist: dict[int, int] = {}
    q: deque[int] = deque()
    for s in sorted(set(sources)):
        dist[s] = 0
        q.append(s)
    while q:
        u = q.popleft()
        du = dist[u]
        if limit is not None and du >= limit:
            continue
        for w in g.neighbours(u):
            if w not in dist and w not in block:
                dist[w] = du + 1
                q.append(w)
    return dist


def shortest_path(
    g: Graph,
    sources: Iterable[int],
    targets: Iterable[int],
    blocked: Iterable[int] = (),
    max_vertices: int | None = None,
) -> list[int] | None:
    """Shortest path (as a vertex list) from any source to any target in
    ``g - blocked``; BFS with lowest-index tie-breaking.  ``max_vertices``
    bounds the number of vertices on the path."""
    tgt = set(targets)
    block = set(blocked)
    srcs = sorted(s for s in set(sources) if s not in block)
    prev: dict[int, int] = {}
    q: deque[tuple[int, int]] = deque()
    for s in srcs:
        prev[s] = -1
        if s in tgt:
            return [s]
        q.append((s, 1))
    while q:
        u, k = q.popleft()
        if max_vertices is not None and k >= max_vertices:
            continue
        for w in g.neighbours(u):
            if w in prev or w in block:
                continue
            prev[w] = u
            if w in tgt:
                path = [w]
                while prev[path[-1]] != -1:
                    path.append(prev[path[-1]])
                return path[::-1]
            q.append((w, k + 1))
    return None
