"""Independent brute-force oracles used to freeze expected values.

These deliberately avoid the library's arc arithmetic: rectangles are
rasterized as point sets on a 4x subdivided torus and classified by looking
at the shape of the actual intersection set.
"""

from __future__ import annotations

RES = 4  # subdivision factor per axis


def raster_points(nt, np_, rect):
    """Sample points of the rectangle on the 4x grid, as a set of (i, j)."""
    t1, t2, p1, p2 = rect
    tspan = ((t2 - t1) % nt) * RES
    pspan = ((p2 - p1) % np_) * RES
    pts = set()
    for i in range(tspan + 1):
        for j in range(pspan + 1):
            pts.add(((t1 * RES + i) % (nt * RES), (p1 * RES + j) % (np_ * RES)))
    return pts


def _components(pts, wt, wp):
    comps = []
    left = set(pts)
    while left:
        seed = left.pop()
        comp = {seed}
        stack = [seed]
        while stack:
            x, y = stack.pop()
            for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                q = ((x + dx) % wt, (y + dy) % wp)
                if q in left:
                    left.discard(q)
                    comp.add(q)
                    stack.append(q)
        comps.append(comp)
    return comps


def _comp_shape(comp, wt, wp):
    """Classify a connected component: 'point', 'hseg', 'vseg', or 'block'."""
    xs = {x for x, _ in comp}
    ys = {y for _, y in comp}
    if len(comp) == 1:
        return "point"
    if len(xs) == 1:
        return "vseg"
    if len(ys) == 1:
        return "hseg"
    return "block"


def classify_by_raster(nt, np_, r1, r2):
    """Oracle counterpart of classify_intersection."""
    wt, wp = nt * RES, np_ * RES
    inter = raster_points(nt, np_, r1) & raster_points(nt, np_, r2)
    if not inter:
        return "empty"
    comps = _components(inter, wt, wp)
    shapes = [_comp_shape(c, wt, wp) for c in comps]
    corners = set()
    for (t1, t2, p1, p2) in (r1, r2):
        for t in (t1, t2):
            for p in (p1, p2):
                corners.add(((t * RES) % wt, (p * RES) % wp))
    if all(s == "point" for s in shapes):
        both = set()
        for rect in (r1, r2):
            t1, t2, p1, p2 = rect
            both |= {((t * RES) % wt, (p * RES) % wp)
                     for t in (t1, t2) for p in (p1, p2)}
        r1c = {((t * RES) % wt, (p * RES) % wp)
               for t in (r1[0], r1[1]) for p in (r1[2], r1[3])}
        r2c = {((t * RES) % wt, (p * RES) % wp)
               for t in (r2[0], r2[1]) for p in (r2[2], r2[3])}
        if all(pt in r1c and pt in r2c for c in comps for pt in c):
            return "common_vertex_set"
        return "incompatible"
    if len(comps) == 1 and shapes[0] == "block":
        block = comps[0]
        xs = {x for x, _ in block}
        ys = {y for _, y in block}
        is_product = len(block) == len(xs) * len(ys)
        if is_product and not (block & corners):
            return "inner_rectangle"
    return "incompatible"


def random_rect(rng, nt, np_):
    t1 = rng.randrange(nt)
    t2 = (t1 + rng.randrange(1, nt)) % nt
    p1 = rng.randrange(np_)
    p2 = (p1 + rng.randrange(1, np_)) % np_
    return (t1, t2, p1, p2)
