import itertools

import pytest

from rect_surfaces import (diagram, euler_characteristic, orientability,
                           component_count, boundary_component_count, summary,
                           boundary)
from rect_surfaces.grid import GridError

DISC = diagram(2, 2, [(0, 1, 0, 1)])
SPHERE = diagram(2, 2, [(0, 1, 0, 1), (1, 0, 1, 0)])
TWO_DISCS = diagram(4, 4, [(0, 1, 0, 1), (2, 3, 2, 3)])
# smallest non-orientable diagram: an odd chain of corner-sharing squares
MOBIUS = diagram(3, 3, [(0, 1, 0, 1), (1, 2, 1, 2), (2, 0, 2, 0)])
ANNULUS = diagram(4, 4, [(0, 1, 0, 1), (1, 2, 1, 2), (2, 3, 2, 3), (3, 0, 3, 0)])


def cw_oracle_chi(d):
    """Count the cells of the tiling complex directly."""
    zero = len({t for r in d.rects for t in (r.t1, r.t2)}) + \
        len({p for r in d.rects for p in (r.p1, r.p2)})
    one = len({v for r in d.rects for v in r.corners()})
    return zero - one + len(d.rects)


def orientation_oracle(d):
    """Try every sign assignment; orientable iff one satisfies all arcs."""
    arcs = {}
    for i, r in enumerate(d.rects):
        for v in r.corners():
            arcs.setdefault(v, []).append(i)
    shared = [faces for faces in arcs.values() if len(faces) == 2]
    for signs in itertools.product((1, -1), repeat=len(d.rects)):
        if all(signs[a] != signs[b] for a, b in shared):
            return True
    return False


@pytest.mark.parametrize("d,chi", [(DISC, 1), (SPHERE, 2), (TWO_DISCS, 2),
                                   (MOBIUS, 0), (ANNULUS, 0)])
def test_euler_characteristic(d, chi):
    assert euler_characteristic(d) == chi == cw_oracle_chi(d)


def test_orientability_examples():
    assert orientability(DISC) == [True] == [orientation_oracle(DISC)]
    assert orientability(SPHERE) == [True] == [orientation_oracle(SPHERE)]
    assert orientability(MOBIUS) == [False] == [orientation_oracle(MOBIUS)]
    assert orientability(ANNULUS) == [True]


def test_mobius_is_a_mobius_band():
    s = summary(MOBIUS)
    assert s.euler_characteristic == 0
    assert s.boundary_components == 1
    assert not s.orientable
    assert s.per_component[0].genus == 1  # one crosscap


def test_component_counts():
    assert (component_count(DISC), boundary_component_count(DISC)) == (1, 1)
    assert (component_count(SPHERE), boundary_component_count(SPHERE)) == (1, 0)
    assert (component_count(TWO_DISCS), boundary_component_count(TWO_DISCS)) == (2, 2)


def test_summary_matches_parts():
    s = summary(TWO_DISCS)
    assert s.components == 2
    assert [c.euler_characteristic for c in s.per_component] == [1, 1]
    assert all(c.orientable for c in s.per_component)
    assert sum(c.boundary_components for c in s.per_component) == 2


def test_boundary_count_matches_link():
    for d in (DISC, SPHERE, TWO_DISCS, MOBIUS, ANNULUS):
        assert boundary_component_count(d) == len(boundary(d).components)


def test_invalid_diagram_rejected():
    bad = diagram(2, 2, [(0, 1, 0, 1), (1, 0, 0, 1)])
    with pytest.raises(GridError):
        euler_characteristic(bad)


def test_chi_parity_closed():
    s = summary(SPHERE)
    assert s.boundary_components == 0
    assert s.euler_characteristic % 2 == 0
    assert s.euler_characteristic <= 2 * s.components
