"""Dispatch a move record onto a diagram."""

from __future__ import annotations

from ..grid import SurfaceDiagram
from .records import (MoveRecord, MoveSequence, MoveError, WRINKLE_CREATE,
                      WRINKLE_REDUCE, HALF_WRINKLE_CREATE, HALF_WRINKLE_REDUCE,
                      STABILIZE, DESTABILIZE, EXCHANGE, FLYPE, BUBBLE_CREATE,
                      BUBBLE_REDUCE)
from .wrinkle import (apply_wrinkle_create, apply_wrinkle_reduce,
                      apply_half_wrinkle_create, apply_half_wrinkle_reduce,
                      apply_stabilize, apply_destabilize)
from .exchange import apply_exchange
from .flype import apply_flype
from .bubble import apply_bubble_create, apply_bubble_reduce


def apply_record(d: SurfaceDiagram, rec: MoveRecord) -> tuple[SurfaceDiagram, MoveRecord]:
    k, o, s, ps = rec.kind, rec.orientation, rec.symmetry, rec.params
    if k == WRINKLE_CREATE:
        return apply_wrinkle_create(d, *ps, orientation=o, symmetry=s)
    if k == WRINKLE_REDUCE:
        return apply_wrinkle_reduce(d, *ps, orientation=o, symmetry=s)
    if k == HALF_WRINKLE_CREATE:
        return apply_half_wrinkle_create(d, *ps, orientation=o, symmetry=s)
    if k == HALF_WRINKLE_REDUCE:
        return apply_half_wrinkle_reduce(d, *ps, orientation=o, symmetry=s)
    if k == STABILIZE:
        return apply_stabilize(d, *ps, orientation=o, symmetry=s)
    if k == DESTABILIZE:
        return apply_destabilize(d, *ps, orientation=o, symmetry=s)
    if k == EXCHANGE:
        return apply_exchange(d, *ps, orientation=o, reversed_=rec.reversed_)
    if k == FLYPE:
        return apply_flype(d, *ps, orientation=o, symmetry=s, reversed_=rec.reversed_)
    if k == BUBBLE_CREATE:
        return apply_bubble_create(d, *ps, orientation=o)
    if k == BUBBLE_REDUCE:
        return apply_bubble_reduce(d, *ps, orientation=o)
    raise MoveError(f"unknown move kind {k!r}")


def apply_sequence(d: SurfaceDiagram, seq: MoveSequence
                   ) -> tuple[SurfaceDiagram, list[MoveRecord]]:
    """Replay a sequence; returns the final diagram and the applied records
    (with maps filled in)."""
    applied = []
    cur = d
    for rec in seq:
        cur, filled = apply_record(cur, rec)
        applied.append(filled)
    return cur, applied
