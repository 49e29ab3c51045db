"""Walks with controlled vertex multiplicities on cycles, paths and suns.

Each shape has a spanning circuit R in which every vertex appears once or
twice.  Going round R about N times, entering and leaving at the right
positions, gives a walk where each vertex y appears between N*deg(y,R) and
(N+1)*deg(y,R) times.
"""

from __future__ import annotations

from ..graph import Graph
from .types import CycleShape, PathShape, Sun, Walk
from .validate import validate_cycle, validate_path, validate_sun


class ShapeError(ValueError):
    pass


def circuit(shape) -> tuple[list[int], int]:
    """The circuit R and the multiplier N per multiplicity unit n."""
    if isinstance(shape, CycleShape):
        return list(shape.vertices), 2
    if isinstance(shape, PathShape):
        x = list(shape.vertices)
        return x + x[-2:0:-1], 1
    if isinstance(shape, Sun):
        x = list(shape.cycle)
        a = len(x)
        i1 = shape.rays[0][0]
        loop = x[i1:] + x[:i1]
        rays = dict(shape.rays)
        second = [rays.get((i1 + k) % a, loop[k]) for k in range(a)]
        return loop + second, 1
    raise ShapeError(f"unsupported shape {type(shape).__name__}")


def vertex_classes(shape) -> dict[int, int]:
    """k such that the walk multiplicity of each vertex lies in {kn, kn+1, kn+2}."""
    if isinstance(shape, CycleShape):
        return {v: 2 for v in shape.vertices}
    if isinstance(shape, PathShape):
        x = shape.vertices
        out = {v: 2 for v in x}
        out[x[0]] = out[x[-1]] = 1
        return out
    if isinstance(shape, Sun):
        cor = shape.corona
        return {v: (1 if v in cor else 2) for v in shape.vertices}
    raise ShapeError(f"unsupported shape {type(shape).__name__}")


def _validate(shape, g: Graph) -> None:
    if isinstance(shape, CycleShape):
        v = validate_cycle(shape.vertices, g)
    elif isinstance(shape, PathShape):
        v = validate_path(shape.vertices, g)
        if v.ok and len(shape.vertices) < 2:
            raise ShapeError("path shape needs at least 2 vertices")
    elif isinstance(shape, Sun):
        v = validate_sun(shape, g)
        if v.ok and not shape.rays:
            raise ShapeError("sun shape needs at least one ray")
    else:
        raise ShapeError(f"unsupported shape {type(shape).__name__}")
    if not v.ok:
        raise ShapeError(f"shape validation failed: {v.clause}")


def circuit_walk(R: list[int], x: int, x_prime: int, N: int) -> list[int]:
    """Walk from x' to x: (y_t..y_l)(y_1..y_l)^N(y_1..y_s) with s = pos(x),
    t = pos(x'), s <= t (exponent N-1 when s = t); positions are first
    occurrences in R."""
    s, t = R.index(x), R.index(x_prime)
    if s > t:
        raise ValueError("need pos(x) <= pos(x')")
    reps = N if s < t else N - 1
    return R[t:] + R * reps + R[: s + 1]


def build_walk(g: Graph, shape, u: int, v: int, n: int) -> Walk:
    """A u,v-walk where each vertex of class k appears kn, kn+1 or kn+2 times."""
    if n < 1:
        raise ValueError("multiplicity unit must be >= 1")
    _validate(shape, g)
    R, mult = circuit(shape)
    if u not in R or v not in R:
        raise ShapeError("endpoints must lie on the shape")
    N = mult * n
    if R.index(v) <= R.index(u):
        seq = circuit_walk(R, v, u, N)
    else:
        seq = circuit_walk(R, u, v, N)[::-1]
    return Walk(tuple(seq))


def walk_in_windows(walk: Walk, shape, n: int) -> bool:
    mult = walk.multiplicity
    cls = vertex_classes(shape)
    if set(mult) != set(cls):
        return False
    return all(cls[x] * n <= mult[x] <= cls[x] * n + 2 for x in cls)


def is_walk(walk: Walk, g: Graph) -> bool:
    w = walk.vertices
    return all(g.has_edge(w[i], w[i + 1]) for i in range(len(w) - 1))
