"""Complete, deterministic enumeration of applicable moves.

Sites with continuous freedom (fresh line placement, exchange cuts) are
canonicalized to one representative per gap between consecutive occupied
levels, which keeps the move graph locally finite without losing any
combinatorial class.
"""

from __future__ import annotations

from .. import axis
from ..grid import SurfaceDiagram, UP, DOWN
from .records import (MoveRecord, MoveError, KINDS, WRINKLE_CREATE,
                      WRINKLE_REDUCE, HALF_WRINKLE_CREATE, HALF_WRINKLE_REDUCE,
                      STABILIZE, DESTABILIZE, EXCHANGE, FLYPE, BUBBLE_CREATE,
                      BUBBLE_REDUCE, VERTICAL, HORIZONTAL, IDENTITY,
                      THETA_REFLECTION)
from .base import to_base
from .apply import apply_record


def _variants(kind: str):
    if kind in (EXCHANGE, BUBBLE_CREATE, BUBBLE_REDUCE):
        return [(VERTICAL, IDENTITY), (HORIZONTAL, IDENTITY)]
    if kind in (STABILIZE, DESTABILIZE, FLYPE):
        return [(VERTICAL, IDENTITY), (VERTICAL, THETA_REFLECTION),
                (HORIZONTAL, IDENTITY), (HORIZONTAL, THETA_REFLECTION)]
    return [(VERTICAL, IDENTITY), (HORIZONTAL, IDENTITY)]


def _gap_cuts(occupied: list[int], size: int) -> list[int]:
    if not occupied:
        return [1]
    return sorted((2 * t + 1) % (2 * size) for t in occupied)


def _pivot_pairs(d: SurfaceDiagram, free_only: bool):
    verts = d.free_vertices() if free_only else d.vertices()
    by_t: dict[int, list] = {}
    for v in sorted(verts):
        by_t.setdefault(v[0], []).append(v)
    out = []
    for t0 in sorted(by_t):
        vs = by_t[t0]
        for v1 in vs:
            if d.vertex_type(v1) != DOWN:
                continue
            for v2 in vs:
                if v2 != v1 and d.vertex_type(v2) == UP:
                    out.append((t0, v1[1], v2[1]))
    return out


def _separators(phis_one_side: set, phis_other_side: set, pcuts: list[int],
                np2: int):
    """(p1, p2) cut pairs with the first set inside (p2;p1) and the second
    inside (p1;p2).  p1 == p2 encodes an empty sliver on the [p1;p2] side."""
    out = []
    for p1 in pcuts:
        for p2 in pcuts:
            if p1 == p2:
                if not phis_other_side:
                    out.append((p1, p2))
                continue
            if all(axis.arc_contains_open(np2, p2, p1, 2 * q) for q in phis_one_side) and \
               all(axis.arc_contains_open(np2, p1, p2, 2 * q) for q in phis_other_side):
                out.append((p1, p2))
    return out


def _exchange_candidates(base: SurfaceDiagram, reverse: bool):
    nt2, np2 = 2 * base.theta_size, 2 * base.phi_size
    tcuts = _gap_cuts(base.occupied_theta(), base.theta_size)
    pcuts = _gap_cuts(base.occupied_phi(), base.phi_size)
    verts = sorted(base.vertices())
    out = []
    for t1 in tcuts:
        for t3 in tcuts:
            if t3 == t1:
                continue
            for tm in tcuts:
                if tm in (t1, t3) or not axis.arc_contains_open(nt2, t1, t3, tm):
                    continue
                a_phis = {p for (t, p) in verts
                          if axis.arc_contains_open(nt2, t1, tm, 2 * t)}
                b_phis = {p for (t, p) in verts
                          if axis.arc_contains_open(nt2, tm, t3, 2 * t)}
                if not a_phis and not b_phis:
                    continue  # nothing to move
                if reverse:
                    pairs = _separators(b_phis, a_phis, pcuts, np2)
                    t2 = (t1 + t3 - tm) % nt2
                else:
                    pairs = _separators(a_phis, b_phis, pcuts, np2)
                    t2 = tm
                for (p1, p2) in pairs:
                    out.append((t1, t2, t3, p1, p2))
    return sorted(set(out))


def _flype_forward_candidates(base: SurfaceDiagram):
    out = []
    mult = base.vertex_multiplicity()
    for v, m in sorted(mult.items()):
        if m != 2:
            continue
        a2, c3 = v
        roles = {r.corner_role(v) for r in base.owners(v)}
        if roles != {("end", "end"), ("start", "start")}:
            continue
        r1 = next(r for r in base.owners(v) if r.corner_role(v) == ("end", "end"))
        r2 = next(r for r in base.owners(v) if r.corner_role(v) == ("start", "start"))
        a1, a3 = r1.t1, r2.t2
        v3 = (a3, c3)
        r3 = next((r for r in base.owners(v3)
                   if r.corner_role(v3) == ("start", "end")), None)
        if r3 is None:
            continue
        c2 = r3.p1
        v4 = (a3, c2)
        r4 = next((r for r in base.owners(v4)
                   if r.corner_role(v4) == ("end", "end")), None)
        if r4 is None:
            continue
        c1 = r4.p1
        out.append((a1, a2, a3, c1, c2, c3))
    return out


def _flype_reverse_candidates(base: SurfaceDiagram):
    out = []
    mult = base.vertex_multiplicity()
    for v, m in sorted(mult.items()):
        if m != 2:
            continue
        a2, c1 = v
        roles = {r.corner_role(v) for r in base.owners(v)}
        if roles != {("end", "end"), ("start", "start")}:
            continue
        r1p = next(r for r in base.owners(v) if r.corner_role(v) == ("end", "end"))
        r2p = next(r for r in base.owners(v) if r.corner_role(v) == ("start", "start"))
        a1, a3 = r1p.t1, r2p.t2
        # locate c2 via the shared corner of r3' and r4' on meridian a1
        for w, mw in sorted(mult.items()):
            if w[0] != a1 or mw != 2:
                continue
            c2 = w[1]
            r4p = next((r for r in base.owners(w)
                        if r.corner_role(w) == ("end", "end")), None)
            r3p = next((r for r in base.owners(w)
                        if r.corner_role(w) == ("start", "start")), None)
            if r4p is None or r3p is None or r4p.p1 != c1:
                continue
            c3 = r3p.p2
            out.append((a1, a2, a3, c1, c2, c3))
    return out


def _candidates(base: SurfaceDiagram, kind: str, reverse: bool):
    nt, np_ = base.theta_size, base.phi_size
    occ_t = base.occupied_theta()
    occ_p = base.occupied_phi()
    if kind == WRINKLE_CREATE:
        return _pivot_pairs(base, free_only=False)
    if kind == HALF_WRINKLE_CREATE:
        return _pivot_pairs(base, free_only=True)
    if kind in (WRINKLE_REDUCE, HALF_WRINKLE_REDUCE, DESTABILIZE):
        return [(t,) for t in occ_t]
    if kind == STABILIZE:
        out = []
        for v in sorted(base.vertices()):
            if base.vertex_type(v) != UP:
                continue
            for cut in _gap_cuts(occ_p, np_):
                out.append((v[0], v[1], cut))
        return out
    if kind == EXCHANGE:
        return _exchange_candidates(base, reverse)
    if kind == FLYPE:
        return _flype_reverse_candidates(base) if reverse \
            else _flype_forward_candidates(base)
    if kind == BUBBLE_CREATE:
        out = []
        for r in base.rects:
            for cut in _gap_cuts(occ_t, nt):
                if axis.arc_contains_open(2 * nt, 2 * r.t1, 2 * r.t2, cut):
                    out.append((r.t1, r.t2, r.p1, r.p2, cut))
        return out
    if kind == BUBBLE_REDUCE:
        return [(a, b) for a in occ_t for b in occ_t if a != b]
    raise MoveError(f"unknown move kind {kind!r}")


def enumerate_moves(d: SurfaceDiagram, kinds=None) -> list[MoveRecord]:
    """All applicable moves of the requested kinds, in deterministic order.

    Every returned record has been test-applied once, so replaying it with
    apply_record is known to succeed.
    """
    kinds = list(kinds) if kinds is not None else list(KINDS)
    out = []
    for kind in kinds:
        if kind not in KINDS:
            raise MoveError(f"unknown move kind {kind!r}")
        for orientation, symmetry in _variants(kind):
            base = to_base(d, orientation, symmetry)
            reversed_options = (False, True) if kind in (EXCHANGE, FLYPE) else (False,)
            for rev in reversed_options:
                for params in _candidates(base, kind, rev):
                    rec = MoveRecord(kind, orientation, symmetry, tuple(params),
                                     reversed_=rev)
                    try:
                        apply_record(d, rec)
                    except MoveError:
                        continue
                    out.append(rec)
    out.sort(key=lambda r: (KINDS.index(r.kind), r.orientation, r.symmetry,
                            r.reversed_, r.params))
    return out
