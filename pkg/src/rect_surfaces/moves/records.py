"""Replayable move records.

A record stores the move kind, its defining parameters, and the data needed
to decide fixedness: per-axis level maps (old occupied level -> new level),
the set of pinned levels (levels a continuous realization of the move keeps
pointwise fixed), and a vertex correspondence for every vertex point of the
source that has an unambiguous image.

A move is fixed on a set X of boundary vertices when every vertex of X
survives into the target boundary with the same type, and the level map
restricted to X's levels together with the pinned levels still preserves
cyclic order (so a realization exists that keeps X pointwise).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from .. import axis
from ..grid import SurfaceDiagram, GridError

WRINKLE_CREATE = "wrinkle_create"
WRINKLE_REDUCE = "wrinkle_reduce"
HALF_WRINKLE_CREATE = "half_wrinkle_create"
HALF_WRINKLE_REDUCE = "half_wrinkle_reduce"
STABILIZE = "stabilize"
DESTABILIZE = "destabilize"
EXCHANGE = "exchange"
FLYPE = "flype"
BUBBLE_CREATE = "bubble_create"
BUBBLE_REDUCE = "bubble_reduce"

KINDS = (WRINKLE_CREATE, WRINKLE_REDUCE, HALF_WRINKLE_CREATE, HALF_WRINKLE_REDUCE,
         STABILIZE, DESTABILIZE, EXCHANGE, FLYPE, BUBBLE_CREATE, BUBBLE_REDUCE)

INVERSE_KIND = {
    WRINKLE_CREATE: WRINKLE_REDUCE, WRINKLE_REDUCE: WRINKLE_CREATE,
    HALF_WRINKLE_CREATE: HALF_WRINKLE_REDUCE, HALF_WRINKLE_REDUCE: HALF_WRINKLE_CREATE,
    STABILIZE: DESTABILIZE, DESTABILIZE: STABILIZE,
    EXCHANGE: EXCHANGE, FLYPE: FLYPE,
    BUBBLE_CREATE: BUBBLE_REDUCE, BUBBLE_REDUCE: BUBBLE_CREATE,
}

VERTICAL = "vertical"
HORIZONTAL = "horizontal"

IDENTITY = "identity"
TRANSPOSE = "transpose"
THETA_REFLECTION = "theta_reflection"
BOTH = "both"
SYMMETRIES = (IDENTITY, TRANSPOSE, THETA_REFLECTION, BOTH)


class MoveError(GridError):
    pass


@dataclass(frozen=True)
class MoveRecord:
    kind: str
    orientation: str = VERTICAL
    symmetry: str = IDENTITY
    params: tuple = ()
    reversed_: bool = False
    # filled in by apply(); not part of the move identity
    theta_map: dict = field(default_factory=dict, compare=False)
    phi_map: dict = field(default_factory=dict, compare=False)
    pinned_theta: frozenset = field(default_factory=frozenset, compare=False)
    pinned_phi: frozenset = field(default_factory=frozenset, compare=False)
    correspondence: dict = field(default_factory=dict, compare=False)
    inverse_params: tuple = field(default=None, compare=False)

    def describe(self) -> str:
        flag = " reversed" if self.reversed_ else ""
        ps = " ".join(str(x) for x in self.params)
        return f"move {self.kind} {self.orientation} {self.symmetry}{flag} {ps}".rstrip()

    def invert(self) -> "MoveRecord":
        if self.kind in (EXCHANGE, FLYPE):
            return MoveRecord(self.kind, self.orientation, self.symmetry,
                              self.params, reversed_=not self.reversed_)
        if self.inverse_params is None:
            raise MoveError("only an applied record knows its inverse site")
        return MoveRecord(INVERSE_KIND[self.kind], self.orientation,
                          self.symmetry, tuple(self.inverse_params))

    def with_maps(self, theta_map, phi_map, pinned_theta, pinned_phi,
                  correspondence, inverse_params=None):
        return replace(self, theta_map=dict(theta_map), phi_map=dict(phi_map),
                       pinned_theta=frozenset(pinned_theta), pinned_phi=frozenset(pinned_phi),
                       correspondence=dict(correspondence),
                       inverse_params=inverse_params)


def parse_record(line: str) -> MoveRecord:
    parts = line.split()
    if not parts or parts[0] != "move":
        raise MoveError(f"bad move line: {line!r}")
    parts = parts[1:]
    if len(parts) < 3:
        raise MoveError(f"bad move line: {line!r}")
    kind, orientation, symmetry = parts[0], parts[1], parts[2]
    rest = parts[3:]
    rev = False
    if rest and rest[0] == "reversed":
        rev = True
        rest = rest[1:]
    if kind not in KINDS:
        raise MoveError(f"unknown move kind {kind!r}")
    if orientation not in (VERTICAL, HORIZONTAL):
        raise MoveError(f"unknown orientation {orientation!r}")
    if symmetry not in SYMMETRIES:
        raise MoveError(f"unknown symmetry {symmetry!r}")
    params = tuple(int(x) for x in rest)
    return MoveRecord(kind, orientation, symmetry, params, reversed_=rev)


def fixed_on(record: MoveRecord, source: SurfaceDiagram, target: SurfaceDiagram,
             xs) -> bool:
    """Is the move fixed on the marked vertex set xs (iterable of (t, p))?"""
    xs = list(xs)
    src_types = source.boundary_with_types()
    tgt_types = target.boundary_with_types()
    imgs = {}
    for v in xs:
        if v not in src_types:
            return False
        img = record.correspondence.get(tuple(v))
        if img is None or img not in tgt_types:
            return False
        if tgt_types[img] != src_types[v]:
            return False
        imgs[tuple(v)] = img
    for levels, axis_idx, pinned, size_old, size_new in (
            (record.theta_map, 0, record.pinned_theta, source.theta_size, target.theta_size),
            (record.phi_map, 1, record.pinned_phi, source.phi_size, target.phi_size)):
        pairs = []
        for l_old in pinned:
            if l_old in levels:
                pairs.append((l_old, levels[l_old]))
        for v in xs:
            l_old = v[axis_idx]
            pairs.append((l_old, imgs[tuple(v)][axis_idx]))
        if not axis.is_cyclic_order_preserving(size_old, size_new, pairs):
            return False
    return True


@dataclass
class MoveSequence:
    records: list

    def describe(self) -> str:
        return "\n".join(r.describe() for r in self.records) + ("\n" if self.records else "")

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


def parse_sequence(text: str) -> MoveSequence:
    records = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        records.append(parse_record(line))
    return MoveSequence(records)


def compose_correspondence(records) -> dict:
    """Composite vertex correspondence across a sequence of applied records."""
    comp: Optional[dict] = None
    for r in records:
        step = r.correspondence
        if comp is None:
            comp = dict(step)
        else:
            comp = {v: step[w] for v, w in comp.items() if w in step}
    return comp if comp is not None else {}
