"""Shared machinery for basic moves.

Every move is implemented in a base form (vertical, no reflection).  The
horizontal variant conjugates by transposition and the reflected variants by
the orientation-reversing relabeling of the theta axis.  Records store their
parameters in base coordinates together with (orientation, symmetry) tags, so
replay is deterministic.
"""

from __future__ import annotations

from .. import axis
from ..grid import Rect, SurfaceDiagram, GridError, validate
from .records import (MoveRecord, MoveError, VERTICAL, HORIZONTAL, IDENTITY,
                      THETA_REFLECTION)


def to_base(d: SurfaceDiagram, orientation: str, symmetry: str) -> SurfaceDiagram:
    if orientation == HORIZONTAL:
        d = d.transpose()
    if symmetry == THETA_REFLECTION:
        d = d.reflect_theta()
    return d


def from_base(d: SurfaceDiagram, orientation: str, symmetry: str) -> SurfaceDiagram:
    if symmetry == THETA_REFLECTION:
        d = d.reflect_theta()
    if orientation == HORIZONTAL:
        d = d.transpose()
    return d


def conjugate_record(rec: MoveRecord, src: SurfaceDiagram, dst: SurfaceDiagram,
                     base_src: SurfaceDiagram, base_dst: SurfaceDiagram) -> MoveRecord:
    """Translate a base-coordinate record's maps into source coordinates."""
    horizontal = rec.orientation == HORIZONTAL
    reflected = rec.symmetry == THETA_REFLECTION

    def lvl_maps():
        # build maps on source axes from the base maps
        tmap, pmap, pin_t, pin_p = {}, {}, set(), set()
        for lb, nb in rec.theta_map.items():
            l = (-lb) % base_src.theta_size if reflected else lb
            nl = (-nb) % base_dst.theta_size if reflected else nb
            tmap[l] = nl
        for lb, nb in rec.phi_map.items():
            pmap[lb] = nb
        for lb in rec.pinned_theta:
            pin_t.add((-lb) % base_src.theta_size if reflected else lb)
        pin_p = set(rec.pinned_phi)
        if horizontal:
            tmap, pmap = pmap, tmap
            pin_t, pin_p = pin_p, pin_t
        return tmap, pmap, pin_t, pin_p

    tmap, pmap, pin_t, pin_p = lvl_maps()
    corr = {}
    for vb, wb in rec.correspondence.items():
        t, p = vb
        if reflected:
            t = (-t) % base_src.theta_size
        v = (p, t) if horizontal else (t, p)
        t2, p2 = wb
        if reflected:
            t2 = (-t2) % base_dst.theta_size
        w = (p2, t2) if horizontal else (t2, p2)
        corr[v] = w
    return rec.with_maps(tmap, pmap, pin_t, pin_p, corr, rec.inverse_params)


def require_valid(d: SurfaceDiagram, context: str = "") -> None:
    rep = validate(d)
    if not rep.valid:
        raise MoveError(f"move produced an invalid diagram{context}: {rep.errors[0]}")


# ---------------------------------------------------------------------------
# the Def-2.3 modification engine (wrinkles, half-wrinkles, stabilizations)

SIDE_R = "r"  # phi arc inside [p1;p2]; re-anchors to the fresh line after t0
SIDE_L = "l"  # phi arc inside [p2;p1]; re-anchors to the fresh line before t0


def classify_side(d: SurfaceDiagram, t0: int, p1: int, p2: int, r: Rect) -> str:
    np_ = d.phi_size
    if axis.arc_subset(np_, r.p1, r.p2, p1, p2):
        return SIDE_R
    if axis.arc_subset(np_, r.p1, r.p2, p2, p1):
        return SIDE_L
    raise MoveError(f"rectangle {r} at meridian {t0} straddles the pivot pair")


def rects_at_theta(d: SurfaceDiagram, t0: int) -> list[Rect]:
    return [r for r in d.rects if t0 in (r.t1, r.t2)]


def wrinkle_engine(d: SurfaceDiagram, t0: int, p1: int, p2: int,
                   add_left: bool, add_right: bool):
    """Apply the meridian-splitting modification at m_t0 for the pivot pair
    (p1, p2).  Returns (result, theta_map, inserted line positions dict,
    correspondence) without any applicability checks.
    """
    nt = d.theta_size
    sides = {}
    for r in rects_at_theta(d, t0):
        sides[r] = classify_side(d, t0, p1, p2, r)
    insert_left = add_left or any(s == SIDE_L for s in sides.values())
    insert_right = add_right or any(s == SIDE_R for s in sides.values())
    left_cut = (2 * t0 - 1) % (2 * nt)
    right_cut = (2 * t0 + 1) % (2 * nt)
    cuts = []
    if insert_left:
        cuts.append(left_cut)
    if insert_right:
        cuts.append(right_cut)
    new_nt, old_map, new_pos = axis.insert_lines(nt, cuts)
    lines = {}
    i = 0
    if insert_left:
        lines["left"] = new_pos[i]
        i += 1
    if insert_right:
        lines["right"] = new_pos[i]
    lines["mid"] = old_map[t0]

    new_rects = []
    for r in d.rects:
        if r in sides:
            side_line = lines["right"] if sides[r] == SIDE_R else lines["left"]
            t1 = side_line if r.t1 == t0 else old_map[r.t1]
            t2 = side_line if r.t2 == t0 else old_map[r.t2]
            new_rects.append(Rect(t1, t2, r.p1, r.p2))
        else:
            new_rects.append(Rect(old_map[r.t1], old_map[r.t2], r.p1, r.p2))
    if add_left:
        new_rects.append(Rect(lines["left"], lines["mid"], p1, p2))
    if add_right:
        new_rects.append(Rect(lines["mid"], lines["right"], p2, p1))

    # vertex correspondence: off the pivot meridian vertices just renumber;
    # on it they follow their owners when those agree.  The pivot pair itself
    # is patched by the caller (its boundary continuation depends on the move).
    corr = {}
    mult = d.vertex_multiplicity()
    for v in mult:
        t, p = v
        if t != t0:
            corr[v] = (old_map[t], p)
            continue
        owner_sides = {sides[r] for r in d.owners(v)}
        if len(owner_sides) == 1:
            side = owner_sides.pop()
            corr[v] = ((lines["right"] if side == SIDE_R else lines["left"]), p)
        elif add_left and add_right and p in (p1, p2):
            corr[v] = (lines["mid"], p)
    out = SurfaceDiagram(new_nt, d.phi_size, tuple(new_rects), ())
    return out, old_map, lines, corr, sides


def carry_marks(d: SurfaceDiagram, out: SurfaceDiagram, corr: dict) -> SurfaceDiagram:
    marks = tuple((corr[(t, p)][0], corr[(t, p)][1], ty) for (t, p, ty) in d.marks
                  if (t, p) in corr)
    return out.replace(marks=marks)
