"""Topological invariants of the surface associated with a diagram.

The surface is tiled by one disc per rectangle.  The tiling is a CW complex:
one 0-cell per occupied meridian and per occupied longitude, one 1-cell per
distinct vertex point (the arc over it), one 2-cell per rectangle, whose
boundary runs through its four corner arcs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grid import SurfaceDiagram, Rect, GridError, validate


@dataclass(frozen=True)
class TilingComplex:
    zero_cells: int
    one_cells: int
    two_cells: int
    # 1-cell -> indices of bordering rectangles (1 or 2 entries)
    arc_faces: dict


def tiling_complex(d: SurfaceDiagram) -> TilingComplex:
    arc_faces: dict[tuple[int, int], list[int]] = {}
    for i, r in enumerate(d.rects):
        for v in r.corners():
            arc_faces.setdefault(v, []).append(i)
    for v, faces in arc_faces.items():
        if len(faces) > 2:
            raise GridError(f"vertex {v} borders {len(faces)} faces")
    zero = len(d.occupied_theta()) + len(d.occupied_phi())
    return TilingComplex(zero, len(arc_faces), len(d.rects), arc_faces)


def euler_characteristic(d: SurfaceDiagram) -> int:
    _require_valid(d)
    c = tiling_complex(d)
    return c.zero_cells - c.one_cells + c.two_cells


def _face_adjacency(d: SurfaceDiagram) -> list[list[int]]:
    c = tiling_complex(d)
    adj: list[list[int]] = [[] for _ in d.rects]
    for faces in c.arc_faces.values():
        if len(faces) == 2:
            a, b = faces
            adj[a].append(b)
            adj[b].append(a)
    return adj


def face_components(d: SurfaceDiagram) -> list[list[int]]:
    adj = _face_adjacency(d)
    seen = [False] * len(d.rects)
    comps = []
    for s in range(len(d.rects)):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def orientability(d: SurfaceDiagram) -> list[bool]:
    """One flag per connected component (True = orientable).

    Two discs glued along a corner arc induce opposite directions on it
    exactly when their orientation signs differ, because a shared corner has
    the same diagonal type in both rectangles.  So a component is orientable
    iff its face adjacency graph is bipartite.
    """
    _require_valid(d)
    adj = _face_adjacency(d)
    comps = face_components(d)
    out = []
    for comp in comps:
        color = {comp[0]: 0}
        stack = [comp[0]]
        ok = True
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in color:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    ok = False
        out.append(ok)
    return out


def component_count(d: SurfaceDiagram) -> int:
    _require_valid(d)
    return len(face_components(d))


def boundary_component_count(d: SurfaceDiagram) -> int:
    from .grid import boundary
    _require_valid(d)
    return len(boundary(d).components)


@dataclass(frozen=True)
class ComponentInfo:
    faces: tuple[int, ...]
    euler_characteristic: int
    orientable: bool
    boundary_components: int
    genus: int  # crosscap number when non-orientable


@dataclass(frozen=True)
class InvariantSummary:
    euler_characteristic: int
    orientable: bool
    components: int
    boundary_components: int
    per_component: tuple[ComponentInfo, ...]


def summary(d: SurfaceDiagram) -> InvariantSummary:
    from .grid import boundary
    _require_valid(d)
    comps = face_components(d)
    orients = orientability(d)
    link = boundary(d)
    cyc_of_face: dict[int, int] = {}
    free = {}
    for i, r in enumerate(d.rects):
        for v in r.corners():
            free.setdefault(v, []).append(i)
    vertex_face = {v: fs[0] for v, fs in free.items() if len(fs) == 1}
    comp_of_face = {}
    for ci, comp in enumerate(comps):
        for f in comp:
            comp_of_face[f] = ci
    bcount = [0] * len(comps)
    for cyc in link.components:
        f = vertex_face[cyc[0]]
        bcount[comp_of_face[f]] += 1
    infos = []
    for ci, comp in enumerate(comps):
        sub = SurfaceDiagram(d.theta_size, d.phi_size,
                             tuple(d.rects[i] for i in comp))
        chi = euler_characteristic(sub)
        b = bcount[ci]
        if orients[ci]:
            genus = (2 - chi - b) // 2
        else:
            genus = 2 - chi - b
        infos.append(ComponentInfo(tuple(comp), chi, orients[ci], b, genus))
    return InvariantSummary(
        euler_characteristic=sum(i.euler_characteristic for i in infos) if infos else 0,
        orientable=all(orients) if orients else True,
        components=len(comps),
        boundary_components=len(link.components),
        per_component=tuple(infos))


def _require_valid(d: SurfaceDiagram) -> None:
    rep = validate(d)
    if not rep.valid:
        raise GridError("invalid diagram: " + "; ".join(rep.errors))
