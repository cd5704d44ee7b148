"""Exchange moves.

Parameters are five cuts in doubled coordinates, all odd (strictly inside
gaps): t1, t2, t3 on the theta axis with t2 inside (t1;t3), and p1, p2 on the
phi axis.  The move swaps the blocks of grid lines in (t1;t2) and (t2;t3),
preserving internal order; cuts at grid lines are never needed because a gap
cut next to the line yields the same map under weaker conditions.

An exchange is a move in both directions; `reversed_=True` applies the
inverse block transfer, whose applicability is defined by the forward
conditions holding at the result.
"""

from __future__ import annotations

from .. import axis
from ..grid import Rect, SurfaceDiagram
from .records import MoveRecord, MoveError, EXCHANGE, VERTICAL, IDENTITY
from .base import to_base, from_base, conjugate_record, require_valid


class ConditionViolated(MoveError):
    def __init__(self, index: int, msg: str):
        super().__init__(f"exchange condition {index} violated: {msg}")
        self.index = index


def _check_cuts(base: SurfaceDiagram, t1, t2, t3, p1, p2):
    nt2, np2 = 2 * base.theta_size, 2 * base.phi_size
    for c in (t1, t2, t3):
        if c % 2 != 1 or not 0 <= c < nt2:
            raise MoveError(f"bad theta cut {c}")
    for c in (p1, p2):
        if c % 2 != 1 or not 0 <= c < np2:
            raise MoveError(f"bad phi cut {c}")
    if len({t1, t2, t3}) != 3 or not axis.arc_contains_open(nt2, t1, t3, t2):
        raise ConditionViolated(1, "need t2 strictly inside (t1;t3)")


def check_forward(base: SurfaceDiagram, t1, t2, t3, p1, p2) -> None:
    # p1 == p2 encodes two cuts inside the same gap: the arc [p1;p2] is then
    # an empty sliver holding no grid positions at all
    nt2, np2 = 2 * base.theta_size, 2 * base.phi_size
    _check_cuts(base, t1, t2, t3, p1, p2)
    sliver = p1 == p2
    verts = base.vertices()
    for v in verts:
        vt, vp = 2 * v[0], 2 * v[1]
        in_first = (not sliver) and axis.arc_contains(np2, p1, p2, vp)
        in_second = True if sliver else axis.arc_contains(np2, p2, p1, vp)
        if axis.arc_contains(nt2, t1, t2, vt) and in_first:
            raise ConditionViolated(2, f"vertex {v} lies in the first swap rectangle")
        if axis.arc_contains(nt2, t2, t3, vt) and in_second:
            raise ConditionViolated(2, f"vertex {v} lies in the second swap rectangle")
    for ct in (t1, t2, t3):
        for cp in (p1, p2):
            for r in base.rects:
                if axis.arc_contains(nt2, 2 * r.t1, 2 * r.t2, ct) and \
                   axis.arc_contains(np2, 2 * r.p1, 2 * r.p2, cp):
                    raise ConditionViolated(3, f"corner ({ct},{cp}) lies in {r}")


def _forward_perm(base: SurfaceDiagram, t1, t2, t3):
    nt2 = 2 * base.theta_size
    shift_a = (t3 - t2) % nt2
    shift_b = (t1 - t2) % nt2
    perm = {}
    for l in range(base.theta_size):
        x = 2 * l
        if axis.arc_contains_open(nt2, t1, t2, x):
            perm[l] = ((x + shift_a) % nt2) // 2
        elif axis.arc_contains_open(nt2, t2, t3, x):
            perm[l] = ((x + shift_b) % nt2) // 2
        else:
            perm[l] = l
    return perm


def apply_exchange(d: SurfaceDiagram, t1: int, t2: int, t3: int, p1: int, p2: int,
                   orientation: str = VERTICAL, reversed_: bool = False
                   ) -> tuple[SurfaceDiagram, MoveRecord]:
    base = to_base(d, orientation, IDENTITY)
    nt2 = 2 * base.theta_size
    if not reversed_:
        check_forward(base, t1, t2, t3, p1, p2)
        perm = _forward_perm(base, t1, t2, t3)
    else:
        _check_cuts(base, t1, t2, t3, p1, p2)
        fwd = _forward_perm(base, t1, t2, t3)
        perm = {v: k for k, v in fwd.items()}
    rects = tuple(Rect(perm[r.t1], perm[r.t2], r.p1, r.p2) for r in base.rects)
    marks = tuple((perm[t], p, ty) for (t, p, ty) in base.marks)
    out = SurfaceDiagram(base.theta_size, base.phi_size, rects, marks)
    if reversed_:
        check_forward(out, t1, t2, t3, p1, p2)
    require_valid(out, " (exchange)")
    corr = {(t, p): (perm[t], p) for (t, p) in base.vertices()}
    pinned = {l for l in range(base.theta_size)
              if not axis.arc_contains_open(nt2, t1, t3, 2 * l)}
    rec = MoveRecord(EXCHANGE, orientation, IDENTITY, (t1, t2, t3, p1, p2),
                     reversed_=reversed_)
    rec = rec.with_maps(perm, {p: p for p in range(base.phi_size)},
                        pinned, set(range(base.phi_size)), corr)
    result = from_base(out, orientation, IDENTITY)
    return result, conjugate_record(rec, d, result, base, out)
