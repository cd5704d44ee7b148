"""Movie diagrams: the cyclic sequence of page slices of a diagram.

A movie is stored gap-indexed: for each occupied meridian (in cyclic order)
the event happening there (possibly none) and the chord diagram on the gap
following it.  The value at an occupied meridian itself is the preceding
gap's diagram (left continuity).  Equality of movies is structural: drop
eventless meridians, then compare the cyclic (event, following gap) sequences
with phi coordinates verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .. import axis
from ..grid import SurfaceDiagram, GridError, validate
from .chords import ChordDiagram, Event, MovieError, cdiag, strict_event, chord
from .regions import Region, regions


@dataclass(frozen=True)
class MovieDiagram:
    size: int                 # phi circle size
    gaps: tuple               # ChordDiagram per meridian gap (after event i)
    events: tuple             # Event or None per occupied meridian
    positions: tuple = ()     # theta positions of the meridians, if known

    def __post_init__(self):
        if len(self.gaps) != len(self.events):
            raise MovieError("gap and event lists differ in length")
        for i, ev in enumerate(self.events):
            prev = self.gaps[i - 1] if i else self.gaps[-1]
            if ev is None:
                if len(self.gaps) > 1 and prev.chords != self.gaps[i].chords:
                    raise MovieError(f"meridian {i} changes chords without an event")
                continue
            want = (prev.chords - ev.removed) | ev.added
            if want != self.gaps[i].chords:
                raise MovieError(f"event {i} does not transform its gaps")

    def phi_points(self) -> set[int]:
        out = set()
        for g in self.gaps:
            out |= g.points()
        return out

    def normalized(self) -> "MovieDiagram":
        """Drop eventless meridians; neighbors of a dropped meridian carry
        equal gap diagrams, so only the event sites matter."""
        if not self.gaps:
            return self
        keep = [i for i, ev in enumerate(self.events) if ev is not None]
        if not keep:
            return MovieDiagram(self.size, (self.gaps[-1],), (None,))
        gaps = tuple(self.gaps[i] for i in keep)
        events = tuple(self.events[i] for i in keep)
        return MovieDiagram(self.size, gaps, events)

    def rotations(self):
        m = len(self.gaps)
        for k in range(m):
            yield tuple((self.events[(i + k) % m], self.gaps[(i + k) % m].chords)
                        for i in range(m))


def movies_equal(a: MovieDiagram, b: MovieDiagram) -> bool:
    na, nb = a.normalized(), b.normalized()
    if na.size != nb.size or len(na.gaps) != len(nb.gaps):
        return False
    if len(na.gaps) == 1 and na.events[0] is None:
        return nb.events[0] is None and na.gaps[0].chords == nb.gaps[0].chords
    ref = tuple((e.key() if e else None, g.chords)
                for e, g in zip(nb.events, nb.gaps))
    for rot in na.rotations():
        cand = tuple((e.key() if e else None, g) for e, g in rot)
        if cand == ref:
            return True
    return False


def movie_of(d: SurfaceDiagram) -> MovieDiagram:
    """The movie of a valid diagram: chords of the gap after each occupied
    meridian are the phi arcs of the rectangles spanning it."""
    rep = validate(d)
    if not rep.valid:
        raise GridError("invalid diagram: " + "; ".join(rep.errors))
    occ = d.occupied_theta()
    np_ = d.phi_size
    if not occ:
        return MovieDiagram(np_, (cdiag(np_),), (None,))
    nt2 = 2 * d.theta_size
    gaps = []
    for t in occ:
        cut = (2 * t + 1) % nt2
        chords = set()
        for r in d.rects:
            if axis.arc_contains_open(nt2, 2 * r.t1, 2 * r.t2, cut):
                chords.add(chord(r.p1, r.p2))
        g = cdiag(np_, chords)
        if not g.non_crossing():
            raise MovieError(f"gap after meridian {t} has crossing chords")
        gaps.append(g)
    events = []
    for i, t in enumerate(occ):
        prev = gaps[i - 1]
        ev = None
        if prev.chords != gaps[i].chords:
            ev = strict_event(prev, gaps[i])
        events.append(ev)
    return MovieDiagram(np_, tuple(gaps), tuple(events), tuple(occ))


def region_function(d: SurfaceDiagram) -> dict:
    """For each gap (keyed by the occupied meridian before it), the region of
    the gap's chord diagram equal to the uncovered part of the meridian."""
    movie = movie_of(d)
    if not movie.positions:
        return {}
    out = {}
    nt2 = 2 * d.theta_size
    np2 = 2 * d.phi_size
    for i, t in enumerate(movie.positions):
        cut = (2 * t + 1) % nt2
        covered = []
        for r in d.rects:
            if axis.arc_contains_open(nt2, 2 * r.t1, 2 * r.t2, cut):
                covered.append((r.p1, r.p2))
        regs = regions(movie.gaps[i])
        target = _uncovered_region(d.phi_size, covered)
        match = None
        for reg in regs:
            if _region_matches(reg, target, d.phi_size):
                match = reg
                break
        if match is None:
            raise MovieError(f"uncovered set of gap {t} is not a region")
        out[t] = match
    return out


def _uncovered_region(np_: int, covered: list) -> Optional[tuple]:
    """Open arcs of the complement of a union of closed arcs; None = full."""
    if not covered:
        return None
    np2 = 2 * np_
    cells = set(range(np2))
    for (a, b) in covered:
        x = 2 * a
        while True:
            cells.discard(x)
            if x == 2 * b:
                break
            x = (x + 1) % np2
    if not cells:
        return ()
    runs = []
    for x in sorted(cells):
        if runs and runs[-1][-1] == x - 1:
            runs[-1].append(x)
        else:
            runs.append([x])
    if len(runs) > 1 and runs[0][0] == 0 and runs[-1][-1] == np2 - 1:
        runs[0] = runs[-1] + runs[0]
        runs.pop()
    out = []
    for run in runs:
        a, b = run[0], run[-1]
        # runs are open arcs between grid endpoints; endpoints are the grid
        # positions just outside the run
        out.append((((a - 1) % np2) // 2, ((b + 1) % np2) // 2))
    return tuple(sorted(out))


def _region_matches(reg: Region, target, np_) -> bool:
    if target is None:
        return reg.full
    if reg.full:
        return False
    return tuple(sorted(reg.intervals)) == target
