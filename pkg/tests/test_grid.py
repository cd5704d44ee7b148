import random

import pytest

from rect_surfaces import (Rect, diagram, classify_intersection, validate,
                           boundary, canonicalize, canonical, serialize, parse,
                           EMPTY, COMMON_VERTEX_SET, INNER_RECTANGLE,
                           INCOMPATIBLE, UP, DOWN)
from rect_surfaces.grid import GridError, OddLevelError, SurfaceDiagram
from rect_surfaces import axis

from oracles import classify_by_raster, random_rect

ORACLE_NAMES = {EMPTY: "empty", COMMON_VERTEX_SET: "common_vertex_set",
                INNER_RECTANGLE: "inner_rectangle", INCOMPATIBLE: "incompatible"}


def test_arc_basics():
    assert axis.arc_positions(6, 4, 1) == [4, 5, 0, 1]
    assert axis.arc_contains(6, 4, 1, 0)
    assert not axis.arc_contains(6, 4, 1, 2)
    assert axis.arc_subset(8, 1, 2, 0, 3)
    assert not axis.arc_subset(8, 7, 2, 0, 3)
    assert axis.arc_intersection(4, 0, 1, 2, 3) == []
    assert axis.arc_intersection(2, 0, 1, 1, 0) == [(0, 0), (1, 1)]
    assert axis.arc_intersection(6, 0, 3, 2, 5) == [(2, 3)]
    # two-component overlap
    assert sorted(axis.arc_intersection(6, 0, 3, 2, 1)) == [(0, 1), (2, 3)]


def test_classify_examples():
    assert classify_intersection(4, 4, Rect(0, 1, 0, 1), Rect(2, 3, 2, 3)) == EMPTY
    assert classify_intersection(2, 2, Rect(0, 1, 0, 1), Rect(1, 0, 1, 0)) == COMMON_VERTEX_SET
    assert classify_intersection(2, 2, Rect(0, 1, 0, 1), Rect(1, 0, 0, 1)) == INCOMPATIBLE
    # crossing strips meet in an inner rectangle
    assert classify_intersection(4, 4, Rect(1, 2, 0, 3), Rect(0, 3, 1, 2)) == INNER_RECTANGLE
    # overlapping corner-to-corner squares share vertices with the overlap,
    # so they are not compatible
    assert classify_intersection(4, 4, Rect(0, 2, 0, 2), Rect(1, 3, 1, 3)) == INCOMPATIBLE


@pytest.mark.parametrize("seed", range(4))
def test_classify_matches_rasterization_oracle(seed):
    rng = random.Random(seed)
    nt = rng.choice([2, 3, 4, 5, 6])
    np_ = rng.choice([2, 3, 4, 5, 6])
    for _ in range(300):
        r1 = random_rect(rng, nt, np_)
        r2 = random_rect(rng, nt, np_)
        got = classify_intersection(nt, np_, Rect(*r1), Rect(*r2))
        want = classify_by_raster(nt, np_, r1, r2)
        assert ORACLE_NAMES[got] == want, (nt, np_, r1, r2)


def test_validate_examples():
    assert validate(diagram(2, 2, [(0, 1, 0, 1)])).valid
    rep = validate(diagram(2, 2, [(0, 1, 0, 1), (1, 0, 0, 1)]))
    assert not rep.valid and "incompatible" in rep.errors[0]
    assert validate(diagram(2, 2, [(0, 1, 0, 1), (1, 0, 1, 0)])).valid


def test_validate_reports_free_counts():
    d = diagram(2, 2, [(0, 1, 0, 1)])
    rep = validate(d)
    assert rep.free_per_theta == {0: 2, 1: 2}
    assert rep.free_per_phi == {0: 2, 1: 2}
    assert all(m == 1 for m in rep.multiplicities.values())


def test_vertex_types():
    d = diagram(2, 2, [(0, 1, 0, 1)])
    assert d.vertex_type((0, 0)) == DOWN
    assert d.vertex_type((1, 1)) == DOWN
    assert d.vertex_type((0, 1)) == UP
    assert d.vertex_type((1, 0)) == UP


def test_boundary_single_rect():
    link = boundary(diagram(2, 2, [(0, 1, 0, 1)]))
    assert len(link.components) == 1
    assert len(link.components[0]) == 4


def test_boundary_closed_sphere():
    link = boundary(diagram(2, 2, [(0, 1, 0, 1), (1, 0, 1, 0)]))
    assert link.components == ()


def test_boundary_two_components():
    d = diagram(4, 4, [(0, 1, 0, 1), (2, 3, 2, 3)])
    link = boundary(d)
    assert len(link.components) == 2


def test_boundary_rejects_odd_level():
    # a triple corner is invalid, and leaves meridian 1 with 3 free vertices;
    # boundary() must refuse rather than mis-pair
    bad = SurfaceDiagram(4, 4, (Rect(0, 1, 0, 1), Rect(1, 2, 1, 2), Rect(1, 2, 1, 3)))
    with pytest.raises(OddLevelError):
        boundary(bad)


def test_canonicalize_single_rect():
    d = diagram(12, 12, [(3, 7, 2, 9)])
    c, tmap, pmap = canonicalize(d)
    assert c == diagram(2, 2, [(0, 1, 0, 1)])
    assert tmap[3] == 0 and tmap[7] == 1
    assert pmap[2] == 0 and pmap[9] == 1


def test_canonicalize_idempotent():
    d = diagram(5, 7, [(0, 2, 1, 4), (2, 0, 4, 1)])
    c = canonical(d)
    assert canonical(c) == c


def test_canonicalize_rotation_invariant():
    d = diagram(4, 4, [(0, 1, 0, 1), (1, 2, 1, 2)])
    nt, np_ = 4, 4
    for i in range(nt):
        for j in range(np_):
            rot = diagram(4, 4, [((r.t1 + i) % nt, (r.t2 + i) % nt,
                                  (r.p1 + j) % np_, (r.p2 + j) % np_)
                                 for r in d.rects])
            assert canonical(rot) == canonical(d)


def test_canonicalize_ignores_unoccupied_lines():
    d = diagram(2, 2, [(0, 1, 0, 1)])
    padded = diagram(9, 5, [(2, 6, 1, 4)])
    assert canonical(padded) == canonical(d)


def test_serialize_round_trip():
    d = diagram(4, 4, [(0, 1, 0, 1), (2, 3, 2, 3)], [(0, 0, DOWN)])
    assert parse(serialize(d)) == d
    import json
    from rect_surfaces import to_json
    assert parse(json.dumps(to_json(d))) == d


def test_serialize_stable():
    d1 = diagram(4, 4, [(2, 3, 2, 3), (0, 1, 0, 1)])
    d2 = diagram(4, 4, [(0, 1, 0, 1), (2, 3, 2, 3)])
    assert serialize(d1) == serialize(d2)


def test_parse_errors_report_position():
    from rect_surfaces import ParseError
    with pytest.raises(ParseError, match="line 2"):
        parse("axes 2 2\nrect 0 1 0\n")
    with pytest.raises(ParseError, match="not an integer"):
        parse("axes 2 x\n")
    with pytest.raises(ParseError, match="missing axes"):
        parse("rect 0 1 0 1\n")


def test_mark_validation():
    d = diagram(2, 2, [(0, 1, 0, 1)], [(0, 0, DOWN)])
    assert validate(d).valid
    bad = diagram(2, 2, [(0, 1, 0, 1)], [(0, 0, UP)])
    assert not validate(bad).valid
