"""Reconstruction of a surface diagram from a movie diagram.

The recipe follows the representability proof: choose a region function that
is constant between events, constrained at each event by the regions whose
closure contains all involved points, walks the region tree inside each gap,
and whose values jointly cover the circle densely; then take the maximal
rectangles of the closure of the complement of the region function's graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .. import axis
from ..grid import Rect, SurfaceDiagram, validate
from .chords import ChordDiagram, Event, MovieError
from .movie import MovieDiagram, movie_of, movies_equal
from .regions import Region, regions, region_tree, tree_path, tree_tour, \
    region_containing_points


class UnsatisfiableEvent(MovieError):
    pass


@dataclass
class ReconstructPolicy:
    """Hooks steering the free choices of the recipe.

    event_side: maps (event index, 'before'|'after') to a picker applied to
    the list of eligible regions (default: first in sorted order).
    waypoints: extra regions (by index in regions(gap)) the walk inside a gap
    must visit, in order.
    tour_gap: gap index whose walk is padded with a full tree tour when the
    coverage condition fails (default: the gap with the most regions).
    """
    event_side: dict = field(default_factory=dict)
    waypoints: dict = field(default_factory=dict)
    tour_gap: Optional[int] = None


def _constrained_region(regs, ev: Event, which: str, idx: int,
                        policy: ReconstructPolicy):
    pts = set(ev.involved)
    eligible = region_containing_points(regs, pts, closure=True)
    if not eligible:
        raise UnsatisfiableEvent(
            f"no region contains the points involved in event {idx}")
    pick = policy.event_side.get((idx, which), 0)
    return eligible[min(pick, len(eligible) - 1)]


def reconstruct(movie: MovieDiagram, policy: Optional[ReconstructPolicy] = None
                ) -> SurfaceDiagram:
    policy = policy or ReconstructPolicy()
    movie = movie.normalized()
    np_ = movie.size
    m = len(movie.gaps)
    if m == 1 and movie.events[0] is None:
        return _constant_movie_diagram(movie, policy)

    gap_regions = [regions(g) for g in movie.gaps]
    gap_trees = [region_tree(g) for g in movie.gaps]

    # constrained values: for gap i, left end fixed by event i (after side),
    # right end by event i+1 (before side); note event i+1's before-side value
    # is a region of gap i's diagram
    walks = []
    for i in range(m):
        regs, edges = gap_trees[i][0], gap_trees[i][1]
        left = _constrained_region(regs, movie.events[i], "after", i, policy)
        nxt = (i + 1) % m
        right = _constrained_region(regs, movie.events[nxt], "before", nxt, policy)
        stops = [left] + [w for w in policy.waypoints.get(i, [])] + [right]
        walk = [left]
        for a, b in zip(stops, stops[1:]):
            walk += tree_path(regs, edges, a, b)[1:]
        walks.append(walk)

    # coverage: the union of all visited regions must be dense in the circle
    if not _covers_circle(movie, gap_regions, walks):
        gi = policy.tour_gap
        if gi is None:
            gi = max(range(m), key=lambda i: len(gap_regions[i]))
        regs, edges = gap_trees[gi][0], gap_trees[gi][1]
        walk = walks[gi]
        tour = tree_tour(regs, edges, walk[-1])
        walks[gi] = walk + tour[1:]

    return _realize(movie, gap_regions, walks)


def _covers_circle(movie, gap_regions, walks) -> bool:
    np2 = 2 * movie.size
    cells = set(range(np2))
    for i, walk in enumerate(walks):
        for ri in walk:
            reg = gap_regions[i][ri]
            if reg.full:
                return True
            for (a, b) in reg.intervals:
                x = (2 * a + 1) % np2
                while x != 2 * b:
                    cells.discard(x)
                    x = (x + 1) % np2
    # dense coverage means every open cell (odd) is hit; grid cells are
    # closure points
    return all(c % 2 == 0 for c in cells)


def _constant_movie_diagram(movie, policy) -> SurfaceDiagram:
    c = movie.gaps[0]
    if not c.chords:
        return SurfaceDiagram(1, max(1, movie.size), ())
    regs, edges = region_tree(c)
    tour = tree_tour(regs, edges, 0)
    if len(tour) > 1:
        tour = tour[:-1]  # closed tour: last step returns to start
    walks = [tour]
    gap_regions = [regs]
    fake = MovieDiagram(movie.size, (c,), (None,))
    return _realize(fake, gap_regions, walks, eventless=True)


def _realize(movie, gap_regions, walks, eventless=False) -> SurfaceDiagram:
    """Build the grid: one theta slab per walk step, one grid line between
    consecutive slabs (event lines are the boundaries between the walks of
    consecutive gaps), cover each slab with the complement of its region, and
    take the maximal rectangles of the closure of the union."""
    np_ = movie.size
    slab_cover = []
    for i, walk in enumerate(walks):
        for ri in walk:
            reg = gap_regions[i][ri]
            slab_cover.append(reg.complement_arcs() if not reg.full else ())
    nt = len(slab_cover)
    rects = _maximal_rects(nt, np_, slab_cover)
    return SurfaceDiagram(nt, np_, rects)


def _phi_cells(np_: int, arcs) -> set:
    np2 = 2 * np_
    cells = set()
    for (a, b) in arcs:
        x = 2 * a
        while True:
            cells.add(x)
            if x == 2 * b:
                break
            x = (x + 1) % np2
    return cells


def _maximal_rects(nt: int, np_: int, slab_cover) -> tuple:
    """Maximal rectangles contained in the closure of the slab covers.

    slab_cover[i] is the list of closed phi arcs covered over slab i (the
    open theta interval between lines i and i+1), or None for an event line
    slot (no interior coverage).  The closure adds each slab's cover to its
    bounding lines.
    """
    np2 = 2 * np_
    cover_cells = [_phi_cells(np_, arcs) for arcs in slab_cover]
    candidates = set()
    # theta arcs run from line a to line b > a (cyclically); slab i lies
    # between lines i and i+1
    for a in range(nt):
        cells = None
        for span in range(1, nt + 1):
            b = (a + span) % nt
            slab = (a + span - 1) % nt
            cells = set(cover_cells[slab]) if cells is None \
                else cells & cover_cells[slab]
            if not cells:
                break
            if span == nt:
                break  # a full wrap is not a rectangle
            for (p1, p2) in _arc_runs(np2, cells):
                candidates.add((a, b, p1, p2))
    out = []
    for (a, b, p1, p2) in candidates:
        maximal = True
        for (a2, b2, q1, q2) in candidates:
            if (a, b, p1, p2) == (a2, b2, q1, q2):
                continue
            if axis.arc_subset(2 * nt, 2 * a, 2 * b, 2 * a2, 2 * b2) and \
               axis.arc_subset(np2, 2 * p1, 2 * p2, 2 * q1, 2 * q2):
                maximal = False
                break
        if maximal:
            out.append(Rect(a, b, p1, p2))
    return tuple(sorted(out))


def _arc_runs(np2: int, cells: set):
    """Maximal closed arcs (grid endpoints) present in a doubled cell set."""
    if not cells:
        return []
    if len(cells) == np2:
        return []  # whole circle: no proper arc is maximal
    runs = []
    xs = sorted(cells)
    blocks = []
    for x in xs:
        if blocks and blocks[-1][-1] == x - 1:
            blocks[-1].append(x)
        else:
            blocks.append([x])
    if len(blocks) > 1 and blocks[0][0] == 0 and blocks[-1][-1] == np2 - 1:
        blocks[0] = blocks[-1] + blocks[0]
        blocks.pop()
    for blk in blocks:
        lo, hi = blk[0], blk[-1]
        # trim to grid endpoints
        if lo % 2 == 1:
            lo = (lo + 1) % np2
        if hi % 2 == 1:
            hi = (hi - 1) % np2
        if lo == hi:
            continue
        span = (hi - lo) % np2
        if span >= 1:
            runs.append((lo // 2, hi // 2))
    return runs
