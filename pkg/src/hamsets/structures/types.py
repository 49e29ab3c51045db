"""Value types for suns, walks, stars, units, webs and cycle-build reports."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class Sun:
    """Cycle x_0..x_{a-1} with rays: ``rays[j] = (i_j, y_{i_j})``, where y is
    adjacent to x_{i-1} and x_{i+1} (indices mod a)."""

    cycle: tuple[int, ...]
    rays: tuple[tuple[int, int], ...]

    @property
    def a(self) -> int:
        return len(self.cycle)

    @property
    def b(self) -> int:
        return len(self.rays)

    @property
    def ray_indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.rays)

    @property
    def corona(self) -> frozenset[int]:
        out = set()
        for i, y in self.rays:
            out.add(self.cycle[i])
            out.add(y)
        return frozenset(out)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.cycle) | frozenset(y for _, y in self.rays)

    def as_dict(self) -> dict:
        return {
            "cycle": list(self.cycle),
            "ray_indices": list(self.ray_indices),
            "rays": {str(i): y for i, y in self.rays},
            "corona": sorted(self.corona),
        }


@dataclass(frozen=True)
class CycleShape:
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class PathShape:
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class StructureWitness:
    kind: str | None  # "two_cycles", "long_path", "sun" or None
    d: Fraction
    cycles: tuple[tuple[int, ...], ...] = ()
    path: tuple[int, ...] = ()
    sun: Sun | None = None
    threshold: str = ""
    satisfied: bool = False
    hypotheses_met: bool = True
    trace: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "d": str(self.d),
            "threshold": self.threshold,
            "satisfied": self.satisfied,
            "hypotheses_met": self.hypotheses_met,
            "trace": list(self.trace),
        }
        if self.kind == "two_cycles":
            out["cycles"] = [list(c) for c in self.cycles]
        elif self.kind == "long_path":
            out["path"] = list(self.path)
        elif self.kind == "sun":
            out["sun"] = self.sun.as_dict()
        return out


@dataclass(frozen=True)
class Walk:
    vertices: tuple[int, ...]

    @property
    def multiplicity(self) -> Counter:
        return Counter(self.vertices)


@dataclass(frozen=True)
class Star:
    centre: int
    leaves: tuple[int, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset((self.centre,) + self.leaves)


@dataclass(frozen=True)
class Unit:
    """Core u, branch vertices x_i, core-to-branch paths and a star at each
    branch vertex.  ``paths[i]`` runs from the core to ``branches[i]`` and
    ``stars[i]`` is centred at ``branches[i]``."""

    core: int
    branches: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]
    stars: tuple[Star, ...]

    @property
    def exterior(self) -> frozenset[int]:
        return frozenset(v for s in self.stars for v in s.leaves)

    @property
    def vertices(self) -> frozenset[int]:
        out = {self.core}
        for p in self.paths:
            out.update(p)
        for s in self.stars:
            out.update(s.vertices)
        return frozenset(out)

    @property
    def interior(self) -> frozenset[int]:
        return self.vertices - self.exterior

    def path_to(self, w: int) -> tuple[int, ...]:
        """The unique core-to-w path for an exterior vertex w."""
        for p, s in zip(self.paths, self.stars):
            if w in s.leaves:
                return p + (w,)
        raise KeyError(f"{w} is not an exterior vertex")

    def as_dict(self) -> dict:
        return {
            "core": self.core,
            "branches": list(self.branches),
            "paths": [list(p) for p in self.paths],
            "stars": [{"centre": s.centre, "leaves": list(s.leaves)} for s in self.stars],
        }


@dataclass(frozen=True)
class Web:
    """Core v, spokes ``spokes[i]`` from v to the core of ``units[i]``."""

    core: int
    spokes: tuple[tuple[int, ...], ...]
    units: tuple[Unit, ...]

    @property
    def centre(self) -> frozenset[int]:
        return frozenset(v for q in self.spokes for v in q) | {self.core}

    @property
    def exterior(self) -> frozenset[int]:
        out: set[int] = set()
        for u in self.units:
            out |= u.exterior
        return frozenset(out)

    @property
    def vertices(self) -> frozenset[int]:
        out = set(self.centre)
        for u in self.units:
            out |= u.vertices
        return frozenset(out)

    @property
    def interior(self) -> frozenset[int]:
        return self.vertices - self.exterior

    def path_to(self, w: int) -> tuple[int, ...]:
        """The unique core-to-w path in the web for an exterior vertex w."""
        for q, u in zip(self.spokes, self.units):
            if w in u.exterior:
                return q + u.path_to(w)[1:]
        raise KeyError(f"{w} is not an exterior vertex")

    def as_dict(self) -> dict:
        return {
            "core": self.core,
            "spokes": [list(q) for q in self.spokes],
            "units": [u.as_dict() for u in self.units],
            "interior_size": len(self.interior),
            "exterior_size": len(self.exterior),
        }


@dataclass(frozen=True)
class Failure:
    stage: str
    detail: str

    def as_dict(self) -> dict:
        return {"stage": self.stage, "detail": self.detail}


@dataclass(frozen=True)
class Verdict:
    ok: bool
    clause: str | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class CycleBuildReport:
    Z: tuple[int, ...]
    U: tuple[int, ...]
    cycle: tuple[int, ...] | None = None
    failure: Failure | None = None
    intersection: tuple[int, ...] = ()
    trace: list[dict] = field(default_factory=list)
    params: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.cycle is not None and self.failure is None

    def as_dict(self) -> dict:
        return {
            "Z": list(self.Z),
            "U": list(self.U),
            "ok": self.ok,
            "cycle": list(self.cycle) if self.cycle else None,
            "failure": self.failure.as_dict() if self.failure else None,
            "intersection": list(self.intersection),
            "trace": self.trace,
            "params": self.params,
            "notes": self.notes,
        }
