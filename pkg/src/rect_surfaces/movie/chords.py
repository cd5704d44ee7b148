"""Non-crossing chord diagrams and admissible events."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .. import axis
from ..grid import GridError


class MovieError(GridError):
    pass


def chord(a: int, b: int) -> tuple[int, int]:
    if a == b:
        raise MovieError(f"degenerate chord {{{a},{b}}}")
    return (a, b) if a < b else (b, a)


def chords_cross(n: int, c1, c2) -> bool:
    a, b = c1
    c, d = c2
    if {a, b} & {c, d}:
        return True  # shared endpoints are not allowed either
    inside = axis.arc_contains_open(n, a, b, c)
    return inside != axis.arc_contains_open(n, a, b, d)


@dataclass(frozen=True)
class ChordDiagram:
    size: int  # phi axis size
    chords: frozenset

    def __post_init__(self):
        object.__setattr__(self, "chords",
                           frozenset(chord(a, b) for (a, b) in self.chords))

    def points(self) -> set[int]:
        return {x for c in self.chords for x in c}

    def non_crossing(self) -> bool:
        cs = sorted(self.chords)
        for i in range(len(cs)):
            for j in range(i + 1, len(cs)):
                if chords_cross(self.size, cs[i], cs[j]):
                    return False
        return True

    def with_chords(self, add=(), remove=()) -> "ChordDiagram":
        out = set(self.chords)
        for c in remove:
            c = chord(*c)
            if c not in out:
                raise MovieError(f"chord {c} not present")
            out.discard(c)
        for c in add:
            out.add(chord(*c))
        return ChordDiagram(self.size, frozenset(out))


def cdiag(size: int, chords=()) -> ChordDiagram:
    return ChordDiagram(size, frozenset(chord(a, b) for (a, b) in chords))


@dataclass(frozen=True)
class Event:
    """An admissible event: chords removed and added at one meridian."""
    size: int
    removed: frozenset
    added: frozenset
    involved: tuple  # the points in circular order, as listed in the scheme
    pattern: str     # 'shrink', 'grow', 'shift', 'wrap', 'wrap_back'

    def key(self):
        return (self.removed, self.added)

    def inverse(self) -> "Event":
        inv = {"shrink": "grow", "grow": "shrink", "shift": "shift",
               "wrap": "wrap_back", "wrap_back": "wrap"}
        return Event(self.size, self.added, self.removed, self.involved,
                     inv[self.pattern])

    def describe(self) -> str:
        rem = " ".join("{%d,%d}" % c for c in sorted(self.removed))
        add = " ".join("{%d,%d}" % c for c in sorted(self.added))
        return f"- {rem or 'o'} + {add or 'o'}"


def _scheme_events(size: int, pts: tuple):
    """The replacement schemes over the circularly ordered points."""
    k = len(pts)
    out = []
    if k >= 2 and k % 2 == 0:
        rem = [chord(pts[i], pts[i + 1]) for i in range(0, k - 1, 2)]
        add = [chord(pts[i], pts[i + 1]) for i in range(1, k - 2, 2)]
        out.append(("shrink", rem, add))
    if k >= 3 and k % 2 == 1:
        rem = [chord(pts[i], pts[i + 1]) for i in range(0, k - 2, 2)]
        add = [chord(pts[i], pts[i + 1]) for i in range(1, k - 1, 2)]
        out.append(("shift", rem, add))
    if k >= 4 and k % 2 == 0:
        rem = [chord(pts[i], pts[i + 1]) for i in range(0, k - 1, 2)]
        add = [chord(pts[i], pts[i + 1]) for i in range(1, k - 2, 2)] + \
            [chord(pts[-1], pts[0])]
        out.append(("wrap", rem, add))
    return out


def is_admissible(c1: ChordDiagram, c2: ChordDiagram) -> Optional[Event]:
    """The event taking c1 to c2 if one exists; None for no change or for an
    inadmissible difference."""
    if c1.size != c2.size:
        raise MovieError("chord diagrams live on different circles")
    if not c1.non_crossing() or not c2.non_crossing():
        return None
    removed = c1.chords - c2.chords
    added = c2.chords - c1.chords
    if not removed and not added:
        return None
    n = c1.size
    pts = sorted({x for c in removed | added for x in c})
    k = len(pts)
    for shift in range(k):
        order = tuple(pts[(i + shift) % k] for i in range(k))
        for pattern, rem, add in _scheme_events(n, order):
            if frozenset(rem) == removed and frozenset(add) == added:
                return Event(n, removed, added, order, pattern)
            if frozenset(rem) == added and frozenset(add) == removed:
                inv = {"shrink": "grow", "shift": "shift", "wrap": "wrap_back"}
                return Event(n, removed, added, order, inv[pattern])
    return None


def strict_event(c1: ChordDiagram, c2: ChordDiagram) -> Event:
    ev = is_admissible(c1, c2)
    if ev is None:
        raise MovieError(
            f"passage is not an admissible event: -{sorted(c1.chords - c2.chords)} "
            f"+{sorted(c2.chords - c1.chords)}")
    return ev
