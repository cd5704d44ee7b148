"""Rectangles and surface diagrams on the grid torus.

A rectangle is the product of two proper closed arcs, one on each axis.  A
surface diagram is a finite set of pairwise compatible rectangles such that
every meridian and longitude carries at most two free vertices (corners
belonging to exactly one rectangle).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional

from . import axis

UP = "up"      # type of a corner on the secondary diagonal
DOWN = "down"  # type of a corner on the main diagonal


class GridError(ValueError):
    pass


class Rect(NamedTuple):
    t1: int
    t2: int
    p1: int
    p2: int

    def corners(self) -> tuple[tuple[int, int], ...]:
        return ((self.t1, self.p1), (self.t1, self.p2), (self.t2, self.p1), (self.t2, self.p2))

    def corner_type(self, v: tuple[int, int]) -> str:
        t, p = v
        if (t, p) in ((self.t1, self.p2), (self.t2, self.p1)):
            return UP
        if (t, p) in ((self.t1, self.p1), (self.t2, self.p2)):
            return DOWN
        raise GridError(f"{v} is not a corner of {self}")

    def corner_role(self, v: tuple[int, int]) -> tuple[str, str]:
        """Role of a corner as (theta end, phi end), each 'start' or 'end'."""
        t, p = v
        rt = "start" if t == self.t1 else "end"
        rp = "start" if p == self.p1 else "end"
        if (rt == "start" and t != self.t1) or (rp == "start" and p != self.p1):
            raise GridError(f"{v} is not a corner of {self}")
        return rt, rp


EMPTY = "empty"
COMMON_VERTEX_SET = "common_vertex_set"
INNER_RECTANGLE = "inner_rectangle"
INCOMPATIBLE = "incompatible"


def check_rect(nt: int, np_: int, r: Rect) -> None:
    for x in (r.t1, r.t2):
        if not (0 <= x < nt):
            raise GridError(f"theta position {x} out of range 0..{nt - 1}")
    for x in (r.p1, r.p2):
        if not (0 <= x < np_):
            raise GridError(f"phi position {x} out of range 0..{np_ - 1}")
    if r.t1 == r.t2 or r.p1 == r.p2:
        raise GridError(f"degenerate rectangle {r}")


def classify_intersection(nt: int, np_: int, r1: Rect, r2: Rect) -> str:
    """Classify the intersection of two rectangles per the compatibility rules."""
    check_rect(nt, np_, r1)
    check_rect(nt, np_, r2)
    tcomps = axis.arc_intersection(nt, r1.t1, r1.t2, r2.t1, r2.t2)
    pcomps = axis.arc_intersection(np_, r1.p1, r1.p2, r2.p1, r2.p2)
    if not tcomps or not pcomps:
        return EMPTY
    products = [(tc, pc) for tc in tcomps for pc in pcomps]
    all_points = all(tc[0] == tc[1] and pc[0] == pc[1] for tc, pc in products)
    if all_points:
        pts = {(tc[0], pc[0]) for tc, pc in products}
        v1, v2 = set(r1.corners()), set(r2.corners())
        if pts <= v1 and pts <= v2:
            return COMMON_VERTEX_SET
        return INCOMPATIBLE
    if len(products) == 1:
        (ta, tb), (pa, pb) = products[0]
        if ta != tb and pa != pb:
            # single rectangle; must avoid every corner of both inputs
            for v in r1.corners() + r2.corners():
                if axis.arc_contains(nt, ta, tb, v[0]) and axis.arc_contains(np_, pa, pb, v[1]):
                    return INCOMPATIBLE
            return INNER_RECTANGLE
    return INCOMPATIBLE


@dataclass(frozen=True)
class SurfaceDiagram:
    theta_size: int
    phi_size: int
    rects: tuple[Rect, ...]
    marks: tuple[tuple[int, int, str], ...] = ()

    def __post_init__(self):
        if self.theta_size < 1 or self.phi_size < 1:
            raise GridError("axis sizes must be positive")
        object.__setattr__(self, "rects", tuple(sorted(Rect(*r) for r in self.rects)))
        object.__setattr__(self, "marks", tuple(sorted(tuple(m) for m in self.marks)))

    # -- basic queries -------------------------------------------------

    def vertex_multiplicity(self) -> dict[tuple[int, int], int]:
        mult: dict[tuple[int, int], int] = {}
        for r in self.rects:
            for v in r.corners():
                mult[v] = mult.get(v, 0) + 1
        return mult

    def vertices(self) -> set[tuple[int, int]]:
        return set(self.vertex_multiplicity())

    def owners(self, v: tuple[int, int]) -> list[Rect]:
        return [r for r in self.rects if v in r.corners()]

    def vertex_type(self, v: tuple[int, int]) -> str:
        own = self.owners(v)
        if not own:
            raise GridError(f"{v} is not a vertex")
        types = {r.corner_type(v) for r in own}
        if len(types) != 1:
            raise GridError(f"{v} has conflicting corner types")
        return types.pop()

    def free_vertices(self) -> set[tuple[int, int]]:
        return {v for v, m in self.vertex_multiplicity().items() if m == 1}

    def boundary_with_types(self) -> dict[tuple[int, int], str]:
        out = {}
        for v in self.free_vertices():
            out[v] = self.owners(v)[0].corner_type(v)
        return out

    def occupied_theta(self) -> list[int]:
        return sorted({t for r in self.rects for t in (r.t1, r.t2)})

    def occupied_phi(self) -> list[int]:
        return sorted({p for r in self.rects for p in (r.p1, r.p2)})

    def replace(self, **kw) -> "SurfaceDiagram":
        data = dict(theta_size=self.theta_size, phi_size=self.phi_size,
                    rects=self.rects, marks=self.marks)
        data.update(kw)
        return SurfaceDiagram(**data)

    def transpose(self) -> "SurfaceDiagram":
        return SurfaceDiagram(
            self.phi_size, self.theta_size,
            tuple(Rect(r.p1, r.p2, r.t1, r.t2) for r in self.rects),
            tuple((p, t, ty) for (t, p, ty) in self.marks))

    def reflect_theta(self) -> "SurfaceDiagram":
        n = self.theta_size
        return SurfaceDiagram(
            n, self.phi_size,
            tuple(Rect((-r.t2) % n, (-r.t1) % n, r.p1, r.p2) for r in self.rects),
            tuple(((-t) % n, p, _flip(ty)) for (t, p, ty) in self.marks))


def _flip(ty: str) -> str:
    return DOWN if ty == UP else UP


@dataclass
class ValidityReport:
    errors: list[str] = field(default_factory=list)
    free_per_theta: dict[int, int] = field(default_factory=dict)
    free_per_phi: dict[int, int] = field(default_factory=dict)
    multiplicities: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return not self.errors


def validate(d: SurfaceDiagram) -> ValidityReport:
    """Check every validity rule; never raises on structurally sound input."""
    rep = ValidityReport()
    for r in d.rects:
        try:
            check_rect(d.theta_size, d.phi_size, r)
        except GridError as e:
            rep.errors.append(str(e))
    if rep.errors:
        return rep
    for i, r in enumerate(d.rects):
        if i + 1 < len(d.rects) and d.rects[i + 1] == r:
            rep.errors.append(f"duplicate rectangle {r}")
    for i in range(len(d.rects)):
        for j in range(i + 1, len(d.rects)):
            cls = classify_intersection(d.theta_size, d.phi_size, d.rects[i], d.rects[j])
            if cls == INCOMPATIBLE:
                rep.errors.append(f"incompatible pair {d.rects[i]} / {d.rects[j]}")
    mult = d.vertex_multiplicity()
    rep.multiplicities = mult
    for v, m in sorted(mult.items()):
        if m > 2:
            rep.errors.append(f"vertex {v} belongs to {m} rectangles")
    free = {v for v, m in mult.items() if m == 1}
    for t in sorted({v[0] for v in mult}):
        c = sum(1 for v in free if v[0] == t)
        rep.free_per_theta[t] = c
        if c > 2:
            rep.errors.append(f"meridian {t} carries {c} free vertices")
        elif c == 1:
            rep.errors.append(f"meridian {t} carries an odd number of free vertices")
    for p in sorted({v[1] for v in mult}):
        c = sum(1 for v in free if v[1] == p)
        rep.free_per_phi[p] = c
        if c > 2:
            rep.errors.append(f"longitude {p} carries {c} free vertices")
        elif c == 1:
            rep.errors.append(f"longitude {p} carries an odd number of free vertices")
    for (t, p, ty) in d.marks:
        if (t, p) not in free:
            rep.errors.append(f"mark {(t, p)} is not a free vertex")
        elif d.vertex_type((t, p)) != ty:
            rep.errors.append(f"mark {(t, p)} has wrong type {ty}")
    return rep


class OddLevelError(GridError):
    pass


@dataclass(frozen=True)
class LinkDiagram:
    """Boundary of a surface diagram: free vertices grouped into closed
    components, each a cyclic vertex sequence alternating vertical and
    horizontal edges."""
    vertices: frozenset[tuple[int, int]]
    components: tuple[tuple[tuple[int, int], ...], ...]


def boundary(d: SurfaceDiagram) -> LinkDiagram:
    free = d.free_vertices()
    by_t: dict[int, list] = {}
    by_p: dict[int, list] = {}
    for v in free:
        by_t.setdefault(v[0], []).append(v)
        by_p.setdefault(v[1], []).append(v)
    for t, vs in by_t.items():
        if len(vs) != 2:
            raise OddLevelError(f"meridian {t} carries {len(vs)} free vertices")
    for p, vs in by_p.items():
        if len(vs) != 2:
            raise OddLevelError(f"longitude {p} carries {len(vs)} free vertices")
    comps = []
    unvisited = set(free)
    while unvisited:
        start = min(unvisited)
        cycle = [start]
        unvisited.discard(start)
        cur, use_t = start, True
        while True:
            pair = by_t[cur[0]] if use_t else by_p[cur[1]]
            nxt = pair[0] if pair[1] == cur else pair[1]
            if nxt == start:
                break
            cycle.append(nxt)
            unvisited.discard(nxt)
            cur, use_t = nxt, not use_t
        comps.append(tuple(cycle))
    return LinkDiagram(frozenset(free), tuple(sorted(comps)))


def _serial_key(d: SurfaceDiagram):
    return (d.theta_size, d.phi_size, d.rects, d.marks)


def compact(d: SurfaceDiagram) -> tuple[SurfaceDiagram, dict[int, int], dict[int, int]]:
    """Delete unoccupied grid lines and renumber each axis 0..m-1."""
    occ_t = d.occupied_theta() or [0]
    occ_p = d.occupied_phi() or [0]
    tmap = {t: i for i, t in enumerate(occ_t)}
    pmap = {p: i for i, p in enumerate(occ_p)}
    rects = tuple(Rect(tmap[r.t1], tmap[r.t2], pmap[r.p1], pmap[r.p2]) for r in d.rects)
    marks = tuple((tmap[t], pmap[p], ty) for (t, p, ty) in d.marks)
    return SurfaceDiagram(len(occ_t), len(occ_p), rects, marks), tmap, pmap


def canonicalize(d: SurfaceDiagram) -> tuple[SurfaceDiagram, dict[int, int], dict[int, int]]:
    """Canonical form under rescaling: drop unoccupied lines, renumber, then
    pick the lexicographically least form over all rotations of both axes.

    Returns (canonical diagram, theta map, phi map) where the maps send
    positions of d to positions of the canonical diagram (occupied lines only).
    """
    base, tmap0, pmap0 = compact(d)
    nt, np_ = base.theta_size, base.phi_size
    best = None
    best_rot = (0, 0)
    for i in range(nt):
        for j in range(np_):
            cand = SurfaceDiagram(
                nt, np_,
                tuple(Rect((r.t1 + i) % nt, (r.t2 + i) % nt, (r.p1 + j) % np_, (r.p2 + j) % np_)
                      for r in base.rects),
                tuple(((t + i) % nt, (p + j) % np_, ty) for (t, p, ty) in base.marks))
            key = _serial_key(cand)
            if best is None or key < _serial_key(best):
                best = cand
                best_rot = (i, j)
    assert best is not None
    i, j = best_rot
    tmap = {t: (tmap0[t] + i) % nt for t in tmap0}
    pmap = {p: (pmap0[p] + j) % np_ for p in pmap0}
    return best, tmap, pmap


def canonical(d: SurfaceDiagram) -> SurfaceDiagram:
    return canonicalize(d)[0]


def same_up_to_rescaling(a: SurfaceDiagram, b: SurfaceDiagram) -> bool:
    return canonical(a) == canonical(b)


def diagram(nt: int, np_: int, rects: Iterable[tuple[int, int, int, int]],
            marks: Iterable[tuple[int, int, str]] = ()) -> SurfaceDiagram:
    return SurfaceDiagram(nt, np_, tuple(Rect(*r) for r in rects), tuple(marks))
