"""Exact arithmetic on cyclic grid axes.

Positions on an axis of size n are integers 0..n-1 in cyclic order.  A closed
arc [a;b] with a != b runs from a to b in the increasing (wrapping) direction.
Everything is integer arithmetic; there is no floating point anywhere.

Several operations need to reason about points strictly between grid lines
(gap cuts).  For those we work in doubled coordinates: position p becomes 2*p,
and the cut in the gap after p becomes 2*p + 1, on a circle of size 2*n.
"""

from __future__ import annotations


def norm(n: int, x: int) -> int:
    return x % n


def arc_len(n: int, a: int, b: int) -> int:
    """Number of steps from a forward to b (0 if a == b)."""
    return (b - a) % n


def arc_contains(n: int, a: int, b: int, x: int) -> bool:
    """Is x in the closed arc [a;b]?  Requires a != b."""
    return (x - a) % n <= (b - a) % n


def arc_contains_open(n: int, a: int, b: int, x: int) -> bool:
    """Is x in the open arc (a;b)?"""
    d = (x - a) % n
    return 0 < d < (b - a) % n


def arc_positions(n: int, a: int, b: int) -> list[int]:
    """All grid positions of the closed arc [a;b] in order."""
    return [(a + i) % n for i in range(arc_len(n, a, b) + 1)]


def arc_subset(n: int, a1: int, b1: int, a2: int, b2: int) -> bool:
    """Is [a1;b1] a subset of [a2;b2] as arcs of the circle?"""
    s1 = (a1 - a2) % n
    e1 = s1 + (b1 - a1) % n
    return e1 <= (b2 - a2) % n


def arc_intersection(n: int, a1: int, b1: int, a2: int, b2: int) -> list[tuple[int, int]]:
    """Intersection of closed arcs [a1;b1] and [a2;b2].

    Returns a list of at most two components as (start, end) pairs, each a
    closed arc (start == end means a single point), ordered along [a1;b1].
    """
    # Each component of the intersection starts at a1 or a2; it runs from the
    # start to whichever arc ends first going forward.
    out = []
    for s in (a1, a2):
        if arc_contains(n, a1, b1, s) and arc_contains(n, a2, b2, s):
            length = min((b1 - s) % n, (b2 - s) % n)
            comp = (s, (s + length) % n)
            if comp not in out:
                out.append(comp)
    out.sort(key=lambda c: (c[0] - a1) % n)
    return out


def rotate_map(n: int, k: int):
    """Position map for rotating the axis by k."""
    return {x: (x + k) % n for x in range(n)}


def insert_lines(n: int, cuts: list[int]) -> tuple[int, dict[int, int], list[int]]:
    """Insert fresh grid lines at the given gap cuts (doubled coordinates).

    Each cut must be odd (strictly inside a gap); repeated cuts insert several
    lines into the same gap.  Returns (new_size, old->new position map,
    new positions of the inserted lines in cut order).
    """
    assert all(c % 2 == 1 for c in cuts)
    srt = sorted(cuts)
    new_n = n + len(cuts)
    old_map = {}
    for x in range(n):
        shift = sum(1 for c in srt if c < 2 * x)
        old_map[x] = x + shift
    # position of an inserted line = (#old lines before its gap)
    # + (#inserted cuts strictly smaller) + (#equal cuts earlier in the list)
    new_positions = []
    seen: dict[int, int] = {}
    for c in cuts:
        eq_prior = seen.get(c, 0)
        seen[c] = eq_prior + 1
        pos = (c + 1) // 2 + sum(1 for c2 in srt if c2 < c) + eq_prior
        new_positions.append(pos)
    return new_n, old_map, new_positions


def delete_lines(n: int, lines: list[int]) -> tuple[int, dict[int, int]]:
    """Delete the given grid lines; returns (new_size, old->new map).

    Deleted positions are absent from the map.
    """
    keep = [x for x in range(n) if x not in set(lines)]
    return len(keep), {x: i for i, x in enumerate(keep)}


def reflect_map(n: int) -> dict[int, int]:
    """Orientation-reversing relabeling x -> -x (mod n)."""
    return {x: (-x) % n for x in range(n)}


def is_cyclic_order_preserving(n_old: int, n_new: int, pairs: list[tuple[int, int]]) -> bool:
    """Does the partial map given by (old, new) pairs preserve cyclic order?

    Duplicate old positions must map consistently; the map must be injective.
    """
    m = {}
    for a, b in pairs:
        if a in m and m[a] != b:
            return False
        m[a] = b
    items = sorted(m.items())
    vals = [b for _, b in items]
    if len(set(vals)) != len(vals):
        return False
    if len(vals) <= 2:
        return True
    # cyclic order preserved iff the value sequence has exactly one descent
    # around the circle
    descents = 0
    for i in range(len(vals)):
        if vals[i] > vals[(i + 1) % len(vals)]:
            descents += 1
    return descents <= 1
