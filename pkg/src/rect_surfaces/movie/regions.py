"""Regions of a non-crossing chord diagram and the region tree.

A region is a face of the diagram drawn in a disc: a maximal union of open
arcs disjoint from the chords whose gap-closing pairs are chords.  Two
regions sharing a chord are neighbors; the neighbor graph is a tree.

The chordless diagram has a single region, the full circle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import axis
from .chords import ChordDiagram, MovieError


@dataclass(frozen=True)
class Region:
    size: int
    intervals: tuple  # ((a,b), ...) open arcs between chord endpoints, sorted
    full: bool = False

    def contains(self, p, doubled: bool = False) -> bool:
        """Membership of a point; p doubled if doubled=True (odd = gap cut)."""
        if self.full:
            return True
        x = p if doubled else 2 * p
        n2 = 2 * self.size
        return any(axis.arc_contains_open(n2, 2 * a, 2 * b, x)
                   for (a, b) in self.intervals)

    def boundary(self) -> set[int]:
        return {x for iv in self.intervals for x in iv}

    def closure_contains(self, p: int) -> bool:
        return self.full or p in self.boundary() or self.contains(p)

    def complement_arcs(self) -> tuple:
        """Closed arcs covered by the complement (the rectangle slices)."""
        if self.full:
            return ()
        ivs = sorted(self.intervals, key=lambda iv: iv[0])
        out = []
        for i, (a, b) in enumerate(ivs):
            c = ivs[(i + 1) % len(ivs)][0]
            out.append((b, c))
        # normalize: each arc runs from the end of one interval to the start
        # of the next in circular order
        return tuple(sorted(out))

    def sort_key(self):
        return (0 if self.full else 1, self.intervals)


def regions(c: ChordDiagram) -> list[Region]:
    if not c.non_crossing():
        raise MovieError("chord diagram is not non-crossing")
    if not c.chords:
        return [Region(c.size, (), full=True)]
    mate = {}
    for (a, b) in c.chords:
        mate[a] = b
        mate[b] = a
    pts = sorted(mate)
    nxt = {p: pts[(i + 1) % len(pts)] for i, p in enumerate(pts)}
    # faces are orbits of elementary arcs under: arc (x -> nxt[x]) is followed
    # by the arc starting at mate(nxt[x])
    arcs = {(p, nxt[p]) for p in pts}
    out = []
    seen = set()
    for start in sorted(arcs):
        if start in seen:
            continue
        orbit = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            cur = (mate[cur[1]], nxt[mate[cur[1]]])
        out.append(Region(c.size, tuple(sorted(orbit))))
    return sorted(out, key=Region.sort_key)


def region_tree(c: ChordDiagram):
    """(regions, edges) where edges are (i, j, chord) triples."""
    regs = regions(c)
    edges = []
    for ch in sorted(c.chords):
        a, b = ch
        touching = [i for i, r in enumerate(regs)
                    if a in r.boundary() and b in r.boundary()]
        if len(touching) != 2:
            raise MovieError(f"chord {ch} does not separate two regions")
        edges.append((touching[0], touching[1], ch))
    return regs, edges


def tree_path(regs, edges, start: int, end: int) -> list[int]:
    """Unique simple path between two regions (indices)."""
    adj = {}
    for i, j, _ in edges:
        adj.setdefault(i, []).append(j)
        adj.setdefault(j, []).append(i)
    prev = {start: None}
    stack = [start]
    while stack:
        x = stack.pop()
        if x == end:
            break
        for y in sorted(adj.get(x, [])):
            if y not in prev:
                prev[y] = x
                stack.append(y)
    if end not in prev:
        raise MovieError("region tree is disconnected")
    path = [end]
    while path[-1] != start:
        path.append(prev[path[-1]])
    return path[::-1]


def tree_tour(regs, edges, start: int) -> list[int]:
    """Depth-first closed tour visiting every region, starting and ending at
    start."""
    adj = {}
    for i, j, _ in edges:
        adj.setdefault(i, []).append(j)
        adj.setdefault(j, []).append(i)
    tour = []
    seen = set()

    def walk(x):
        seen.add(x)
        tour.append(x)
        for y in sorted(adj.get(x, [])):
            if y not in seen:
                walk(y)
                tour.append(x)

    walk(start)
    return tour


def region_containing_points(regs, pts, closure: bool = True):
    """Indices of regions whose closure (or interior) contains all points."""
    out = []
    for i, r in enumerate(regs):
        ok = all((r.closure_contains(p) if closure else r.contains(p)) for p in pts)
        if ok:
            out.append(i)
    return out
