"""Named graphs and clique gluings."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .graph import Graph


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return Graph(n)


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both sides must be nonempty")
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    k = g1.n
    return Graph(k + g2.n, list(g1.edges()) + [(u + k, v + k) for u, v in g2.edges()])


def glue_at_vertex(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Identify ``v1`` of g1 with ``v2`` of g2.

    g1 keeps its labels; the remaining vertices of g2 follow in their
    original order, and ``v2`` takes the label ``v1``.
    """
    if not 0 <= v1 < g1.n:
        raise ValueError(f"vertex {v1} not in first graph")
    if not 0 <= v2 < g2.n:
        raise ValueError(f"vertex {v2} not in second graph")
    relabel = {}
    nxt = g1.n
    for v in range(g2.n):
        if v == v2:
            relabel[v] = v1
        else:
            relabel[v] = nxt
            nxt += 1
    edges = list(g1.edges()) + [(relabel[u], relabel[v]) for u, v in g2.edges()]
    return Graph(g1.n + g2.n - 1, edges)


def barbell(k: int) -> Graph:
    """Two copies of K_k joined by one edge between vertex k-1 and vertex k."""
    g = disjoint_union(complete(k), complete(k))
    return g.with_edges([(k - 1, k)])


@dataclass(frozen=True)
class GlueSpec:
    """A clique tree: ``cliques[i]`` is the order of the i-th clique, and
    ``attachments[i-1] = (host_vertex, clique_vertex)`` glues clique i onto
    the graph built from cliques 0..i-1.  Clique vertices are numbered
    ``0..order-1`` locally."""

    cliques: tuple[int, ...]
    attachments: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if len(self.attachments) not in (0, len(self.cliques) - 1):
            raise ValueError("need one attachment per glued clique")

    def build(self) -> Graph:
        if not self.attachments:
            g = complete(self.cliques[0])
            for k in self.cliques[1:]:
                g = disjoint_union(g, complete(k))
            return g
        g = complete(self.cliques[0])
        for k, (host, local) in zip(self.cliques[1:], self.attachments):
            g = glue_at_vertex(g, host, complete(k), local)
        return g


def figure1_specs(d: int) -> list[GlueSpec]:
    """Clique trees of the four average-degree-d graphs near the extremum."""
    a, b = d + 1, d
    return [
        GlueSpec((a, a)),
        # two K_d's hanging off the same vertex of K_{d+1}
        GlueSpec((a, b, b), ((0, 0), (0, 0))),
        # K_{d+1} * K_d * K_d: the second K_d hangs off a fresh vertex of the first
        GlueSpec((a, b, b), ((0, 0), (a, 0))),
        # K_d * K_{d+1} * K_d: both K_d's hang off distinct vertices of K_{d+1}
        GlueSpec((b, a, b), ((0, 0), (b, 0))),
    ]


def figure1_family(d: int) -> list[Graph]:
    if d < 2:
        raise ValueError("d must be at least 2")
    out = []
    for spec in figure1_specs(d):
        g = spec.build()
        if g.average_degree() != Fraction(d):
            raise AssertionError(f"{spec} has average degree {g.average_degree()}")
        out.append(g)
    return out


def glued_pair(a: int, b: int) -> Graph:
    """K_a * K_b glued at vertex 0 of each."""
    return glue_at_vertex(complete(a), 0, complete(b), 0)


def split_graph(clique: int, independent: int) -> Graph:
    """K_clique joined completely to an independent set; its longest cycle
    alternates clique/independent vertices, so it has 2*clique vertices
    whenever ``independent >= clique``."""
    edges = list(combinations(range(clique), 2))
    edges += [(i, clique + j) for i in range(clique) for j in range(independent)]
    return Graph(clique + independent, edges)
