"""Bubble creation and reduction, and the decomposition of a bubble into a
wrinkle creation followed by an exchange.

Base form is vertical: a rectangle r is split by two fresh meridians inserted
into a gap strictly inside its theta arc, the middle slab flipping to the
complementary phi arc.  Parameters: (r fields..., gap cut) with the gap cut in
doubled coordinates (odd, strictly inside r's theta arc).
"""

from __future__ import annotations

from .. import axis
from ..grid import Rect, SurfaceDiagram
from .records import (MoveRecord, MoveError, MoveSequence, BUBBLE_CREATE,
                      BUBBLE_REDUCE, VERTICAL, IDENTITY)
from .base import to_base, from_base, conjugate_record, require_valid
from .wrinkle import apply_wrinkle_create
from .exchange import apply_exchange


class ConditionViolated(MoveError):
    pass


def check_bubble_site(base: SurfaceDiagram, r: Rect, cut: int) -> None:
    nt2 = 2 * base.theta_size
    if r not in base.rects:
        raise ConditionViolated(f"{r} is not in the diagram")
    if cut % 2 != 1 or not 0 <= cut < nt2:
        raise MoveError(f"bad gap cut {cut}")
    if not axis.arc_contains_open(nt2, 2 * r.t1, 2 * r.t2, cut):
        raise ConditionViolated("gap cut must lie strictly inside the theta arc")
    # the strip between the fresh meridians must not sit inside any rectangle
    np2 = 2 * base.phi_size
    for s in base.rects:
        if s == r:
            continue
        if axis.arc_contains_open(nt2, 2 * s.t1, 2 * s.t2, cut) and \
           axis.arc_subset(np2, 2 * r.p1, 2 * r.p2, (2 * s.p1 + 1) % np2, (2 * s.p2 - 1) % np2):
            raise ConditionViolated(f"strip lies inside {s}")


def apply_bubble_create(d: SurfaceDiagram, t1: int, t2: int, p1: int, p2: int,
                        cut: int, orientation: str = VERTICAL
                        ) -> tuple[SurfaceDiagram, MoveRecord]:
    base = to_base(d, orientation, IDENTITY)
    r = Rect(t1, t2, p1, p2)
    check_bubble_site(base, r, cut)
    new_nt, old_map, new_pos = axis.insert_lines(base.theta_size, [cut, cut])
    a, b = new_pos
    rects = []
    for s in base.rects:
        if s == r:
            continue
        rects.append(Rect(old_map[s.t1], old_map[s.t2], s.p1, s.p2))
    rects += [Rect(old_map[r.t1], a, r.p1, r.p2),
              Rect(a, b, r.p2, r.p1),
              Rect(b, old_map[r.t2], r.p1, r.p2)]
    corr = {(t, p): (old_map[t], p) for (t, p) in base.vertices()}
    marks = tuple((old_map[t], p, ty) for (t, p, ty) in base.marks)
    out = SurfaceDiagram(new_nt, base.phi_size, tuple(rects), marks)
    require_valid(out, " (bubble create)")
    rec = MoveRecord(BUBBLE_CREATE, orientation, IDENTITY, (t1, t2, p1, p2, cut))
    rec = rec.with_maps(old_map, {p: p for p in range(base.phi_size)},
                        set(range(base.theta_size)), set(range(base.phi_size)),
                        corr, inverse_params=(a, b))
    result = from_base(out, orientation, IDENTITY)
    return result, conjugate_record(rec, d, result, base, out)


def find_bubble_pattern(base: SurfaceDiagram, a: int, b: int):
    """Match the image of a bubble creation with bump meridians a, b."""
    nt = base.theta_size
    at_a = [r for r in base.rects if a in (r.t1, r.t2)]
    at_b = [r for r in base.rects if b in (r.t1, r.t2)]
    mid = None
    for r in at_a:
        if r.t1 == a and r.t2 == b:
            mid = r
    if mid is None:
        raise MoveError(f"no bump rectangle spans [{a};{b}]")
    left = [r for r in at_a if r != mid]
    right = [r for r in at_b if r != mid]
    if len(left) != 1 or len(right) != 1:
        raise MoveError("bump meridians carry extra rectangles")
    r1, r3 = left[0], right[0]
    p1, p2 = mid.p2, mid.p1
    if r1.t2 != a or r1 != Rect(r1.t1, a, p1, p2):
        raise MoveError("left bubble rectangle does not match")
    if r3.t1 != b or r3 != Rect(b, r3.t2, p1, p2):
        raise MoveError("right bubble rectangle does not match")
    if len({r1, mid, r3}) != 3 or r1.t1 in (a, b) or r3.t2 in (a, b):
        raise MoveError("bubble rectangles are not distinct")
    for t in base.occupied_theta():
        if t not in (a, b) and axis.arc_contains_open(nt, a, b, t):
            raise MoveError("extra occupied meridian inside the bump")
    return r1, mid, r3, p1, p2


def apply_bubble_reduce(d: SurfaceDiagram, a: int, b: int,
                        orientation: str = VERTICAL
                        ) -> tuple[SurfaceDiagram, MoveRecord]:
    base = to_base(d, orientation, IDENTITY)
    r1, mid, r3, p1, p2 = find_bubble_pattern(base, a, b)
    merged = Rect(r1.t1, r3.t2, p1, p2)
    rects = [r for r in base.rects if r not in (r1, mid, r3)]
    new_nt, tmap = axis.delete_lines(base.theta_size, [a, b])
    out_rects = tuple(Rect(tmap[r.t1], tmap[r.t2], r.p1, r.p2) for r in rects) + \
        (Rect(tmap[merged.t1], tmap[merged.t2], p1, p2),)
    corr = {}
    for v in base.vertices():
        t, p = v
        if t in (a, b):
            continue
        corr[v] = (tmap[t], p)
    marks = tuple((corr[(t, p)][0], corr[(t, p)][1], ty) for (t, p, ty) in base.marks
                  if (t, p) in corr)
    out = SurfaceDiagram(new_nt, base.phi_size, out_rects, marks)
    require_valid(out, " (bubble reduce)")
    level_map = {t: tmap[t] for t in range(base.theta_size) if t not in (a, b)}
    q = (a - 1) % base.theta_size
    while q in (a, b):
        q = (q - 1) % base.theta_size
    cut_back = (2 * tmap[q] + 1) % (2 * new_nt)
    rec = MoveRecord(BUBBLE_REDUCE, orientation, IDENTITY, (a, b))
    rec = rec.with_maps(level_map, {p: p for p in range(base.phi_size)},
                        set(level_map), set(range(base.phi_size)), corr,
                        inverse_params=(tmap[merged.t1], tmap[merged.t2],
                                        p1, p2, cut_back))
    result = from_base(out, orientation, IDENTITY)
    return result, conjugate_record(rec, d, result, base, out)


def decompose_bubble(d: SurfaceDiagram, t1: int, t2: int, p1: int, p2: int,
                     cut: int, orientation: str = VERTICAL
                     ) -> tuple[SurfaceDiagram, MoveSequence]:
    """Realize a bubble creation as [wrinkle creation, exchange].

    The wrinkle is created at the left corner pair of r, producing the bump
    right next to m_t1; the exchange then carries the bump into the chosen
    gap.  The result equals apply_bubble_create up to canonicalization.
    """
    base = to_base(d, orientation, IDENTITY)
    r = Rect(t1, t2, p1, p2)
    check_bubble_site(base, r, cut)
    d1, rec1 = apply_wrinkle_create(base, t1, p1, p2)
    if cut == (2 * t1 + 1) % (2 * base.theta_size):
        # the bubble gap is right next to t1, where the wrinkle already put
        # the bump; no transport needed
        result = from_base(d1, orientation, IDENTITY)
        recs = [rec1] if orientation == VERTICAL else [_reorient(rec1, orientation)]
        return result, MoveSequence(recs)
    nt = base.theta_size
    _, old_map, _ = axis.insert_lines(
        nt, [(2 * t1 - 1) % (2 * nt), (2 * t1 + 1) % (2 * nt)])
    mid = old_map[t1]
    bump_right = mid + 1
    nt2 = 2 * d1.theta_size
    ex_t1 = (2 * mid - 1) % nt2
    ex_t2 = (2 * bump_right + 1) % nt2
    ex_t3 = (2 * old_map[cut // 2] + 1) % nt2
    ex_p1 = (2 * p2 + 1) % (2 * d1.phi_size)
    ex_p2 = (2 * p1 - 1) % (2 * d1.phi_size)
    d2, rec2 = apply_exchange(d1, ex_t1, ex_t2, ex_t3, ex_p1, ex_p2)
    result = from_base(d2, orientation, IDENTITY)
    recs = [rec1, rec2]
    if orientation != VERTICAL:
        recs = [_reorient(rc, orientation) for rc in recs]
    return result, MoveSequence(recs)


def _reorient(rec: MoveRecord, orientation: str) -> MoveRecord:
    out = MoveRecord(rec.kind, orientation, rec.symmetry, rec.params, rec.reversed_)
    return out.with_maps(rec.phi_map, rec.theta_map, rec.pinned_phi,
                         rec.pinned_theta,
                         {(p, t): (p2, t2) for (t, p), (t2, p2) in rec.correspondence.items()})
