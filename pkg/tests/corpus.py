"""Corpus of random valid diagrams grown by random basic moves from seeds."""

from __future__ import annotations

import random
from functools import lru_cache

from rect_surfaces import diagram
from rect_surfaces.moves import enumerate_moves, apply_record, MoveError

SEEDS = [
    diagram(2, 2, [(0, 1, 0, 1)]),
    diagram(2, 2, [(0, 1, 0, 1), (1, 0, 1, 0)]),
    diagram(4, 4, [(0, 1, 0, 1), (2, 3, 2, 3)]),
    diagram(3, 3, [(0, 1, 0, 1), (1, 2, 1, 2), (2, 0, 2, 0)]),
    diagram(4, 4, [(0, 1, 0, 1), (1, 2, 1, 2), (2, 3, 2, 3), (3, 0, 3, 0)]),
]

GROW_LIMIT_RECTS = 15
GROW_LIMIT_AXES = 16


def random_walk(seed_index: int, steps: int, rng: random.Random):
    d = SEEDS[seed_index % len(SEEDS)]
    trace = []
    for _ in range(steps):
        recs = enumerate_moves(d)
        if d.theta_size >= GROW_LIMIT_AXES or d.phi_size >= GROW_LIMIT_AXES \
                or len(d.rects) >= GROW_LIMIT_RECTS:
            recs = [r for r in recs if r.kind.endswith("reduce")
                    or r.kind in ("exchange", "flype", "destabilize")]
        if not recs:
            break
        rec = rng.choice(recs)
        try:
            d, _ = apply_record(d, rec)
        except MoveError:
            break
        trace.append(rec)
    return d, trace


@lru_cache(maxsize=None)
def corpus(count: int = 60, steps: int = 5, seed: int = 2024):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        d, _ = random_walk(i, 1 + rng.randrange(steps), rng)
        out.append(d)
    return out


@lru_cache(maxsize=None)
def small_corpus(count: int = 30, seed: int = 7):
    """Diagrams small enough for exhaustive checks (<=6 rectangles, axes <=8)."""
    rng = random.Random(seed)
    out = []
    for i in range(count * 3):
        if len(out) >= count:
            break
        d, _ = random_walk(i, 1 + rng.randrange(4), rng)
        if len(d.rects) <= 6 and d.theta_size <= 8 and d.phi_size <= 8:
            out.append(d)
    return out
