"""Flype moves.

Base form: the five pattern vertices sit at
v1=(a1,c3) up, v2=(a2,c3) down, v3=(a3,c3) up, v4=(a3,c2) down, v5=(a3,c1) up
with a2 in (a1;a3), c2 in (c1;c3), v2,v3,v4 interior, and no other vertices in
[a1;a3]x[c1;c3].  The four rectangles anchored at the pattern are replaced as
in the definition; all other rectangles are untouched.  The mirror variant
conjugates by the theta reflection, and the move reverses by `reversed_`.

Parameters: (a1, a2, a3, c1, c2, c3) in base coordinates.
"""

from __future__ import annotations

from .. import axis
from ..grid import Rect, SurfaceDiagram, UP, DOWN
from .records import MoveRecord, MoveError, FLYPE, VERTICAL, IDENTITY
from .base import to_base, from_base, conjugate_record, require_valid


class PatternNotFound(MoveError):
    pass


def _owner_with_role(d: SurfaceDiagram, v, role):
    for r in d.owners(v):
        if r.corner_role(v) == role:
            return r
    return None


def locate_forward(base: SurfaceDiagram, a1, a2, a3, c1, c2, c3):
    """Find r1..r4 for the forward flype and check conditions 1-4."""
    nt, np_ = base.theta_size, base.phi_size
    if not axis.arc_contains_open(nt, a1, a3, a2):
        raise PatternNotFound("need a2 strictly inside (a1;a3)")
    if not axis.arc_contains_open(np_, c1, c3, c2):
        raise PatternNotFound("need c2 strictly inside (c1;c3)")
    verts = base.vertex_multiplicity()
    free = base.free_vertices()
    spots = {"v1": (a1, c3), "v2": (a2, c3), "v3": (a3, c3),
             "v4": (a3, c2), "v5": (a3, c1)}
    types = {"v1": UP, "v2": DOWN, "v3": UP, "v4": DOWN, "v5": UP}
    for name, v in spots.items():
        if v not in verts:
            raise PatternNotFound(f"{name}={v} is not a vertex")
        if base.vertex_type(v) != types[name]:
            raise PatternNotFound(f"{name}={v} has the wrong type")
    for name in ("v2", "v3", "v4"):
        if spots[name] in free:
            raise PatternNotFound(f"{name} lies on the boundary")
    for v in verts:
        if v in spots.values():
            continue
        if axis.arc_contains(nt, a1, a3, v[0]) and axis.arc_contains(np_, c1, c3, v[1]):
            raise PatternNotFound(f"extra vertex {v} in the flype region")
    r1 = _owner_with_role(base, (a2, c3), ("end", "end"))
    r2 = _owner_with_role(base, (a2, c3), ("start", "start"))
    r3 = _owner_with_role(base, (a3, c3), ("start", "end"))
    r4 = _owner_with_role(base, (a3, c2), ("end", "end"))
    got = {"r1": r1, "r2": r2, "r3": r3, "r4": r4}
    for name, r in got.items():
        if r is None:
            raise PatternNotFound(f"rectangle {name} is missing")
    if len({r1, r2, r3, r4}) != 4:
        raise PatternNotFound("pattern rectangles are not distinct")
    if r1.t1 != a1 or r2.t2 != a3 or r3.p1 != c2 or r4.p1 != c1 or r4.p2 != c2:
        raise PatternNotFound("pattern rectangles are not anchored as required")
    # derived free parameters must sit outside the region
    if not axis.arc_contains_open(nt, a3, a1, r3.t2):
        raise PatternNotFound("r3 does not leave the region on the right")
    if not axis.arc_contains_open(nt, a3, a1, r4.t1):
        raise PatternNotFound("r4 does not enter the region from the right")
    if not axis.arc_contains_open(np_, c3, c1, r1.p1):
        raise PatternNotFound("r1 does not come from below the region")
    if not axis.arc_contains_open(np_, c3, c1, r2.p2):
        raise PatternNotFound("r2 does not leave below the region")
    return r1, r2, r3, r4


def _replacements(a1, a2, a3, c1, c2, c3, r1, r2, r3, r4):
    n1 = Rect(a1, a2, r1.p1, c1)
    n2 = Rect(a2, a3, c1, r2.p2)
    n3 = Rect(a1, r3.t2, c2, c3)
    n4 = Rect(r4.t1, a1, c1, c2)
    return n1, n2, n3, n4


def locate_reverse(base: SurfaceDiagram, a1, a2, a3, c1, c2, c3):
    """Find the primed rectangles r1'..r4' of a flype image."""
    nt, np_ = base.theta_size, base.phi_size
    if not axis.arc_contains_open(nt, a1, a3, a2):
        raise PatternNotFound("need a2 strictly inside (a1;a3)")
    if not axis.arc_contains_open(np_, c1, c3, c2):
        raise PatternNotFound("need c2 strictly inside (c1;c3)")
    r1p = _owner_with_role(base, (a2, c1), ("end", "end"))
    r2p = _owner_with_role(base, (a2, c1), ("start", "start"))
    r3p = _owner_with_role(base, (a1, c3), ("start", "end"))
    r4p = _owner_with_role(base, (a1, c2), ("end", "end"))
    for name, r in (("r1'", r1p), ("r2'", r2p), ("r3'", r3p), ("r4'", r4p)):
        if r is None:
            raise PatternNotFound(f"rectangle {name} is missing")
    if len({r1p, r2p, r3p, r4p}) != 4:
        raise PatternNotFound("image rectangles are not distinct")
    if r1p.t1 != a1 or r2p.t2 != a3 or r3p.p1 != c2 or r4p.p1 != c1 or r4p.p2 != c2:
        raise PatternNotFound("image rectangles are not anchored as required")
    return r1p, r2p, r3p, r4p


def apply_flype(d: SurfaceDiagram, a1: int, a2: int, a3: int,
                c1: int, c2: int, c3: int,
                orientation: str = VERTICAL, symmetry: str = IDENTITY,
                reversed_: bool = False) -> tuple[SurfaceDiagram, MoveRecord]:
    base = to_base(d, orientation, symmetry)
    if not reversed_:
        r1, r2, r3, r4 = locate_forward(base, a1, a2, a3, c1, c2, c3)
        n1, n2, n3, n4 = _replacements(a1, a2, a3, c1, c2, c3, r1, r2, r3, r4)
        old, new = (r1, r2, r3, r4), (n1, n2, n3, n4)
    else:
        r1p, r2p, r3p, r4p = locate_reverse(base, a1, a2, a3, c1, c2, c3)
        o1 = Rect(a1, a2, r1p.p1, c3)
        o2 = Rect(a2, a3, c3, r2p.p2)
        o3 = Rect(a3, r3p.t2, c2, c3)
        o4 = Rect(r4p.t1, a3, c1, c2)
        old, new = (r1p, r2p, r3p, r4p), (o1, o2, o3, o4)
    remaining = list(base.rects)
    for r in old:
        remaining.remove(r)
    rects = tuple(remaining) + tuple(new)
    # correspondence: a vertex maps to a point only when all owners agree
    corr = {}
    repl = dict(zip(old, new))
    for v in base.vertex_multiplicity():
        images = set()
        ok = True
        for r in base.owners(v):
            if r in repl:
                role = r.corner_role(v)
                nr = repl[r]
                t = nr.t1 if role[0] == "start" else nr.t2
                p = nr.p1 if role[1] == "start" else nr.p2
                images.add((t, p))
            else:
                images.add(v)
        if len(images) == 1:
            corr[v] = images.pop()
    marks = tuple((corr[(t, p)][0], corr[(t, p)][1], ty) for (t, p, ty) in base.marks
                  if (t, p) in corr)
    out = SurfaceDiagram(base.theta_size, base.phi_size, rects, marks)
    require_valid(out, " (flype)")
    if reversed_:
        # the reverse is a flype exactly when the forward move recreates the input
        try:
            back, _ = apply_flype(out, a1, a2, a3, c1, c2, c3, VERTICAL, IDENTITY, False)
        except (PatternNotFound, MoveError):
            raise PatternNotFound("reverse flype does not invert a forward flype")
        if back.rects != base.rects:
            raise PatternNotFound("reverse flype does not invert a forward flype")
    ident = {x: x for x in range(base.theta_size)}
    identp = {x: x for x in range(base.phi_size)}
    rec = MoveRecord(FLYPE, orientation, symmetry, (a1, a2, a3, c1, c2, c3),
                     reversed_=reversed_)
    rec = rec.with_maps(ident, identp, set(ident), set(identp), corr)
    result = from_base(out, orientation, symmetry)
    return result, conjugate_record(rec, d, result, base, out)
