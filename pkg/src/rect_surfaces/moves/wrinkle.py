"""Wrinkle, half-wrinkle, and (de)stabilization moves.

All three share the meridian-splitting engine: two fresh meridians flank the
pivot meridian, rectangles re-anchor to the side matching their phi arc, and
one or two new slim rectangles appear.  Base form is vertical with an
up-vertex above a down-vertex; other variants conjugate by transposition and
theta reflection.
"""

from __future__ import annotations

from .. import axis
from ..grid import Rect, SurfaceDiagram, UP, DOWN
from .records import (MoveRecord, MoveError, WRINKLE_CREATE, WRINKLE_REDUCE,
                      HALF_WRINKLE_CREATE, HALF_WRINKLE_REDUCE, STABILIZE,
                      DESTABILIZE, VERTICAL, IDENTITY)
from .base import (to_base, from_base, conjugate_record, wrinkle_engine,
                   carry_marks, rects_at_theta, classify_side, require_valid,
                   SIDE_R, SIDE_L)


def _check_pivot(d: SurfaceDiagram, t0, p1, p2, need_boundary: bool):
    verts = d.vertex_multiplicity()
    v1, v2 = (t0, p1), (t0, p2)
    for v, want in ((v1, DOWN), (v2, UP)):
        if v not in verts:
            raise MoveError(f"{v} is not a vertex")
        if d.vertex_type(v) != want:
            raise MoveError(f"{v} has type {d.vertex_type(v)}, expected {want}")
    if need_boundary:
        free = d.free_vertices()
        if v1 not in free or v2 not in free:
            raise MoveError("half-wrinkle pivots must be boundary vertices")


def _pivot_patch(corr, lines, sides, d, t0, p1, p2, half: bool):
    """Fix the correspondence of the pivot pair and choose the level map
    convention for the pivot meridian."""
    free = d.free_vertices()
    v1, v2 = (t0, p1), (t0, p2)
    if half:
        corr[v1] = (lines["mid"], p1)
        corr[v2] = (lines["mid"], p2)
        return lines["mid"]
    if v1 in free and v2 in free:
        owner_side = sides[d.owners(v1)[0]]
        land = lines["left"] if owner_side == SIDE_R else lines["right"]
        corr[v1] = (land, p1)
        corr[v2] = (land, p2)
        return land
    return lines["mid"]


def apply_wrinkle_create(d: SurfaceDiagram, t0: int, p1: int, p2: int,
                         orientation: str = VERTICAL,
                         symmetry: str = IDENTITY) -> tuple[SurfaceDiagram, MoveRecord]:
    """Full wrinkle creation at the pivot pair (t0,p1) down / (t0,p2) up,
    given in base coordinates."""
    base = to_base(d, orientation, symmetry)
    _check_pivot(base, t0, p1, p2, need_boundary=False)
    out, old_map, lines, corr, sides = wrinkle_engine(base, t0, p1, p2, True, True)
    t0_img = _pivot_patch(corr, lines, sides, base, t0, p1, p2, half=False)
    out = carry_marks(base, out, corr)
    require_valid(out, " (wrinkle create)")
    tmap = dict(old_map)
    tmap[t0] = t0_img
    rec = MoveRecord(WRINKLE_CREATE, orientation, symmetry, (t0, p1, p2))
    rec = rec.with_maps(tmap, {p: p for p in range(base.phi_size)},
                        set(range(base.theta_size)), set(range(base.phi_size)),
                        corr, inverse_params=(lines["mid"],))
    result = from_base(out, orientation, symmetry)
    return result, conjugate_record(rec, d, result, base, out)


def apply_half_wrinkle_create(d: SurfaceDiagram, t0: int, p1: int, p2: int,
                              orientation: str = VERTICAL,
                              symmetry: str = IDENTITY) -> tuple[SurfaceDiagram, MoveRecord]:
    base = to_base(d, orientation, symmetry)
    _check_pivot(base, t0, p1, p2, need_boundary=True)
    occupied = {classify_side(base, t0, p1, p2, r) for r in rects_at_theta(base, t0)}
    if occupied == {SIDE_R, SIDE_L}:
        raise MoveError("both sides occupied; a full wrinkle is required")
    if not occupied:
        raise MoveError("pivot meridian carries no rectangles")
    # the new rectangle goes on the occupied side: its slim spur replaces the
    # pivot corner pair there, flipping their types in place
    add_left = occupied == {SIDE_L}
    out, old_map, lines, corr, sides = wrinkle_engine(
        base, t0, p1, p2, add_left=add_left, add_right=not add_left)
    t0_img = _pivot_patch(corr, lines, sides, base, t0, p1, p2, half=True)
    out = carry_marks(base, out, corr)
    require_valid(out, " (half-wrinkle create)")
    tmap = dict(old_map)
    tmap[t0] = t0_img
    rec = MoveRecord(HALF_WRINKLE_CREATE, orientation, symmetry, (t0, p1, p2))
    rec = rec.with_maps(tmap, {p: p for p in range(base.phi_size)},
                        set(range(base.theta_size)), set(range(base.phi_size)),
                        corr, inverse_params=(lines["mid"],))
    result = from_base(out, orientation, symmetry)
    return result, conjugate_record(rec, d, result, base, out)


def apply_stabilize(d: SurfaceDiagram, t0: int, p2: int, gap_cut: int,
                    orientation: str = VERTICAL,
                    symmetry: str = IDENTITY) -> tuple[SurfaceDiagram, MoveRecord]:
    """Stabilization: v2 = (t0, p2) is an up-vertex; a fresh longitude is
    inserted at the (doubled, odd) cut and plays the down slot."""
    base = to_base(d, orientation, symmetry)
    if gap_cut % 2 != 1 or not (0 <= gap_cut < 2 * base.phi_size):
        raise MoveError(f"bad longitude cut {gap_cut}")
    v2 = (t0, p2)
    if v2 not in base.vertices():
        raise MoveError(f"{v2} is not a vertex")
    if base.vertex_type(v2) != UP:
        raise MoveError(f"{v2} is not an up-vertex")
    for r in base.rects:
        if axis.arc_contains(2 * base.theta_size, 2 * r.t1, 2 * r.t2, 2 * t0) and \
           axis.arc_contains(2 * base.phi_size, 2 * r.p1, 2 * r.p2, gap_cut):
            raise MoveError(f"fresh point blocked by rectangle {r}")
    new_np, pmap, inserted = axis.insert_lines(base.phi_size, [gap_cut])
    p1 = inserted[0]
    lifted = SurfaceDiagram(base.theta_size, new_np,
                            tuple(Rect(r.t1, r.t2, pmap[r.p1], pmap[r.p2]) for r in base.rects),
                            tuple((t, pmap[p], ty) for (t, p, ty) in base.marks))
    p2n = pmap[p2]
    out, old_map, lines, corr, sides = wrinkle_engine(lifted, t0, p1, p2n, True, True)
    # level continuation: any free vertex of the pivot meridian other than v2
    free = lifted.free_vertices()
    others = [v for v in free if v[0] == t0 and v != (t0, p2n)]
    if others and others[0] in corr:
        t0_img = corr[others[0]][0]
    else:
        t0_img = lines["mid"]
    out = carry_marks(lifted, out, corr)
    require_valid(out, " (stabilize)")
    tmap = dict(old_map)
    tmap[t0] = t0_img
    full_pmap = dict(pmap)
    full_corr = {(t, p): corr[(t, pmap[p])] for (t, p) in base.vertices()
                 if (t, pmap[p]) in corr}
    rec = MoveRecord(STABILIZE, orientation, symmetry, (t0, p2, gap_cut))
    rec = rec.with_maps(tmap, full_pmap, set(range(base.theta_size)),
                        set(range(base.phi_size)), full_corr,
                        inverse_params=(lines["mid"],))
    result = from_base(out, orientation, symmetry)
    return result, conjugate_record(rec, d, result, base, out)


# ---------------------------------------------------------------------------
# reductions (pattern detection + inverse application)


def find_wrinkle_pattern(d: SurfaceDiagram, mid: int):
    """Match the image of a full wrinkle creation at middle meridian `mid`.

    Returns (L, R, p1, p2) or raises MoveError.
    """
    at_mid = rects_at_theta(d, mid)
    if len(at_mid) != 2:
        raise MoveError(f"meridian {mid} does not carry exactly the slim pair")
    a, b = at_mid
    cand = None
    for L, R in ((a, b), (b, a)):
        if L.t2 == mid and R.t1 == mid and L.p1 == R.p2 and L.p2 == R.p1:
            cand = (L, R, L.p1, L.p2)
    if cand is None:
        raise MoveError(f"meridian {mid} does not carry a complementary slim pair")
    L, R, p1, p2 = cand
    nt = d.theta_size
    for t in d.occupied_theta():
        if t in (L.t1, mid, R.t2):
            continue
        if axis.arc_contains_open(nt, L.t1, mid, t) or axis.arc_contains_open(nt, mid, R.t2, t):
            raise MoveError("extra occupied meridian inside the wrinkle")
    for r in rects_at_theta(d, L.t1):
        if r != L and classify_side(d, L.t1, p1, p2, r) != SIDE_L:
            raise MoveError(f"rectangle {r} on the left line is not on the left side")
    for r in rects_at_theta(d, R.t2):
        if r != R and classify_side(d, R.t2, p1, p2, r) != SIDE_R:
            raise MoveError(f"rectangle {r} on the right line is not on the right side")
    return L, R, p1, p2


def _merge_lines(d: SurfaceDiagram, removed: list[Rect], remap: dict[int, int],
                 drop_theta: list[int], drop_phi: list[int] = ()):
    """Delete `removed` rectangles, re-anchor theta endpoints through `remap`,
    then delete the now-unoccupied lines.  Returns (diagram, tmap, pmap)."""
    rects = []
    for r in d.rects:
        if r in removed:
            continue
        rects.append(Rect(remap.get(r.t1, r.t1), remap.get(r.t2, r.t2), r.p1, r.p2))
    nt2, tmap = axis.delete_lines(d.theta_size, list(drop_theta))
    np2, pmap = axis.delete_lines(d.phi_size, list(drop_phi))
    out_rects = tuple(Rect(tmap[r.t1], tmap[r.t2], pmap[r.p1], pmap[r.p2]) for r in rects)
    return SurfaceDiagram(nt2, np2, out_rects), tmap, pmap


def apply_wrinkle_reduce(d: SurfaceDiagram, mid: int,
                         orientation: str = VERTICAL,
                         symmetry: str = IDENTITY) -> tuple[SurfaceDiagram, MoveRecord]:
    base = to_base(d, orientation, symmetry)
    L, R, p1, p2 = find_wrinkle_pattern(base, mid)
    remap = {L.t1: mid, R.t2: mid}
    merged, tmap, pmap = _merge_lines(base, [L, R], remap, [L.t1, R.t2])
    # the merged pivot pair must be vertices again
    for p, want in ((p1, DOWN), (p2, UP)):
        v = (tmap[mid], p)
        if v not in merged.vertices():
            raise MoveError(f"reduction leaves no vertex at phi={p}")
        if merged.vertex_type(v) != want:
            raise MoveError(f"reduced vertex {v} has the wrong type")
    corr = {}
    for v in base.vertices():
        t, p = v
        if t == mid:
            if p in (p1, p2):
                corr[v] = (tmap[mid], p)
            continue
        t2 = tmap[remap.get(t, t)]
        w = (t2, p)
        if w in merged.vertices():
            corr[v] = w
    out = carry_marks(base, merged, corr)
    require_valid(out, " (wrinkle reduce)")
    level_map = {}
    for t in range(base.theta_size):
        if t in (L.t1, R.t2, mid):
            level_map[t] = tmap[mid]
        else:
            level_map[t] = tmap[t]
    rec = MoveRecord(WRINKLE_REDUCE, orientation, symmetry, (mid,))
    rec = rec.with_maps(level_map, pmap,
                        set(range(base.theta_size)) - {L.t1, R.t2, mid},
                        set(range(base.phi_size)), corr,
                        inverse_params=(tmap[mid], p1, p2))
    result = from_base(out, orientation, symmetry)
    return result, conjugate_record(rec, d, result, base, out)


def find_half_wrinkle_pattern(d: SurfaceDiagram, mid: int):
    """Match the image of a half-wrinkle creation whose surviving pivot pair
    sits on meridian `mid`.  Returns (slim rect, far line, p1, p2, left_form).
    left_form means the slim rectangle is [far; mid] x [p1; p2]."""
    at_mid = rects_at_theta(d, mid)
    if len(at_mid) != 1:
        raise MoveError(f"meridian {mid} does not carry exactly one rectangle")
    N = at_mid[0]
    free = d.free_vertices()
    nt = d.theta_size
    if N.t1 == mid:
        # creation image with the right rectangle added: N = [mid; far] x [p2; p1]
        p2, p1, far, left_form = N.p1, N.p2, N.t2, False
    else:
        p1, p2, far, left_form = N.p1, N.p2, N.t1, True
    for p in (p1, p2):
        if (mid, p) not in free:
            raise MoveError("pivot pair is not free")
    for t in d.occupied_theta():
        if t not in (mid, far) and (
                axis.arc_contains_open(nt, mid, far, t) if not left_form
                else axis.arc_contains_open(nt, far, mid, t)):
            raise MoveError("extra occupied meridian inside the half-wrinkle")
    want = SIDE_R if not left_form else SIDE_L
    others = [r for r in rects_at_theta(d, far) if r != N]
    if not others:
        raise MoveError("no rectangles to merge back")
    for r in others:
        if classify_side(d, far, p1, p2, r) != want:
            raise MoveError(f"rectangle {r} on the far line is on the wrong side")
    ends = {e for r in others for e in (r.p1, r.p2)}
    if p1 not in ends or p2 not in ends:
        raise MoveError("merged pivot pair would not be vertices")
    return N, far, p1, p2, left_form


def apply_half_wrinkle_reduce(d: SurfaceDiagram, mid: int,
                              orientation: str = VERTICAL,
                              symmetry: str = IDENTITY) -> tuple[SurfaceDiagram, MoveRecord]:
    base = to_base(d, orientation, symmetry)
    N, far, p1, p2, left_form = find_half_wrinkle_pattern(base, mid)
    remap = {far: mid}
    merged, tmap, pmap = _merge_lines(base, [N], remap, [far])
    mfree = merged.free_vertices()
    for p, want in ((p1, DOWN), (p2, UP)):
        v = (tmap[mid], p)
        if v not in mfree or merged.vertex_type(v) != want:
            raise MoveError("reduction does not restore a free pivot pair")
    corr = {}
    for v in base.vertices():
        t, p = v
        if t == mid:
            if p in (p1, p2):
                corr[v] = (tmap[mid], p)
            continue
        w = (tmap[remap.get(t, t)], p)
        if w in merged.vertices():
            corr[v] = w
    out = carry_marks(base, merged, corr)
    require_valid(out, " (half-wrinkle reduce)")
    level_map = {t: tmap[remap.get(t, t)] for t in range(base.theta_size)}
    rec = MoveRecord(HALF_WRINKLE_REDUCE, orientation, symmetry, (mid,))
    rec = rec.with_maps(level_map, pmap,
                        set(range(base.theta_size)) - {far},
                        set(range(base.phi_size)), corr,
                        inverse_params=(tmap[mid], p1, p2))
    result = from_base(out, orientation, symmetry)
    return result, conjugate_record(rec, d, result, base, out)


def apply_destabilize(d: SurfaceDiagram, mid: int,
                      orientation: str = VERTICAL,
                      symmetry: str = IDENTITY) -> tuple[SurfaceDiagram, MoveRecord]:
    """Inverse of a stabilization: a full wrinkle pattern whose down level p1
    is occupied by the two slim rectangles alone, so it vanishes."""
    base = to_base(d, orientation, symmetry)
    L, R, p1, p2 = find_wrinkle_pattern(base, mid)
    for r in base.rects:
        if r in (L, R):
            continue
        if p1 in (r.p1, r.p2):
            raise MoveError(f"longitude {p1} is not fresh: {r}")
        if axis.arc_contains(base.theta_size, r.t1, r.t2, mid) and \
           axis.arc_contains(base.phi_size, r.p1, r.p2, p1):
            raise MoveError(f"rectangle {r} covers the fresh point")
    remap = {L.t1: mid, R.t2: mid}
    merged, tmap, pmap = _merge_lines(base, [L, R], remap, [L.t1, R.t2], [p1])
    v2 = (tmap[mid], pmap[p2])
    if v2 not in merged.vertices():
        raise MoveError("destabilization leaves no up-vertex")
    if merged.vertex_type(v2) != UP:
        raise MoveError("destabilized vertex has the wrong type")
    corr = {}
    for v in base.vertices():
        t, p = v
        if p == p1:
            continue
        if t == mid:
            if p == p2:
                corr[v] = (tmap[mid], pmap[p])
            continue
        w = (tmap[remap.get(t, t)], pmap[p])
        if w in merged.vertices():
            corr[v] = w
    out = carry_marks(base, merged, corr)
    require_valid(out, " (destabilize)")
    level_map = {t: tmap[remap.get(t, t)] for t in range(base.theta_size)}
    gap_cut = (2 * p1 - 1) % (2 * merged.phi_size)
    rec = MoveRecord(DESTABILIZE, orientation, symmetry, (mid,))
    rec = rec.with_maps(level_map, pmap,
                        set(range(base.theta_size)) - {L.t1, R.t2, mid},
                        set(range(base.phi_size)) - {p1}, corr,
                        inverse_params=(tmap[mid], pmap[p2], gap_cut))
    result = from_base(out, orientation, symmetry)
    return result, conjugate_record(rec, d, result, base, out)
