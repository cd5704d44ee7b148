import itertools

import pytest

from rect_surfaces import diagram
from rect_surfaces.movie import (cdiag, is_admissible, strict_event, regions,
                                 region_tree, tree_path, movie_of, movies_equal,
                                 region_function, reconstruct, MovieDiagram,
                                 MovieError, movie_to_text, movie_from_text,
                                 chords_cross)
from rect_surfaces.movie.regions import tree_tour

DISC = diagram(2, 2, [(0, 1, 0, 1)])
SPHERE = diagram(2, 2, [(0, 1, 0, 1), (1, 0, 1, 0)])


def test_non_crossing():
    assert cdiag(6, [(0, 1), (2, 3)]).non_crossing()
    assert cdiag(6, [(0, 3), (1, 2)]).non_crossing()   # nested
    assert not cdiag(6, [(0, 2), (1, 3)]).non_crossing()
    assert not cdiag(6, [(0, 2), (0, 3)]).non_crossing()  # shared endpoint
    assert chords_cross(6, (0, 2), (1, 4))


def test_admissible_death_and_birth():
    c1 = cdiag(4, [(0, 1)])
    c2 = cdiag(4, [])
    ev = is_admissible(c1, c2)
    assert ev is not None and ev.pattern == "shrink"
    assert ev.removed == frozenset({(0, 1)}) and ev.added == frozenset()
    back = is_admissible(c2, c1)
    assert back is not None and back.pattern == "grow"


def test_admissible_wrap():
    c1 = cdiag(4, [(0, 1), (2, 3)])
    c2 = cdiag(4, [(1, 2), (0, 3)])
    ev = is_admissible(c1, c2)
    assert ev is not None and ev.pattern in ("wrap", "wrap_back")
    assert set(map(frozenset, ev.removed)) == {frozenset({0, 1}), frozenset({2, 3})}


def test_admissible_shift():
    c1 = cdiag(6, [(0, 1)])
    c2 = cdiag(6, [(1, 2)])
    ev = is_admissible(c1, c2)
    assert ev is not None and ev.pattern == "shift"


def test_inadmissible_crossing_target():
    c1 = cdiag(6, [(0, 1), (2, 3)])
    c2 = cdiag(6, [(0, 2), (1, 3)])  # crossing
    assert is_admissible(c1, c2) is None


def test_inadmissible_disjoint_change():
    # removing two far-apart chords and adding an unrelated one is no scheme
    c1 = cdiag(8, [(0, 1), (4, 5)])
    c2 = cdiag(8, [(2, 3)])
    assert is_admissible(c1, c2) is None


def test_identity_is_no_event():
    c = cdiag(4, [(0, 1)])
    assert is_admissible(c, c) is None


def test_regions_empty_and_single():
    assert len(regions(cdiag(5))) == 1
    assert regions(cdiag(5))[0].full
    regs = regions(cdiag(6, [(1, 4)]))
    assert len(regs) == 2
    ivs = sorted(r.intervals for r in regs)
    assert ivs == [((1, 4),), ((4, 1),)]


def test_regions_nested_path():
    regs, edges = region_tree(cdiag(8, [(0, 5), (1, 4)]))
    assert len(regs) == 3 and len(edges) == 2
    # the tree of a nested pair is a path: inside - between - outside
    idx = {r.intervals: i for i, r in enumerate(regs)}
    inner, outer = idx[((1, 4),)], idx[((5, 0),)]
    path = tree_path(regs, edges, inner, outer)
    assert len(path) == 3


def test_region_count_is_chords_plus_one():
    c = cdiag(12, [(0, 7), (1, 4), (2, 3), (8, 11), (9, 10)])
    assert c.non_crossing()
    regs, edges = region_tree(c)
    assert len(regs) == len(c.chords) + 1
    assert len(edges) == len(c.chords)


def test_movie_of_disc():
    m = movie_of(DISC)
    assert m.positions == (0, 1)
    assert [g.chords for g in m.gaps] == [frozenset({(0, 1)}), frozenset()]
    assert m.events[0] is not None and m.events[0].pattern == "grow"
    assert m.events[1] is not None and m.events[1].pattern == "shrink"


def test_movie_of_sphere_is_constant():
    m = movie_of(SPHERE)
    assert [g.chords for g in m.gaps] == [frozenset({(0, 1)})] * 2
    assert m.events == (None, None)
    n = m.normalized()
    assert len(n.gaps) == 1 and n.events == (None,)


def test_movies_equal_up_to_rotation():
    m = movie_of(DISC)
    rot = MovieDiagram(m.size, (m.gaps[1], m.gaps[0]), (m.events[1], m.events[0]))
    assert movies_equal(m, rot)
    assert not movies_equal(m, movie_of(SPHERE))


def test_region_function_disc():
    rf = region_function(DISC)
    # gap after meridian 0 is inside the rectangle: uncovered = circle minus [0;1]
    assert rf[0].intervals == ((1, 0),)
    # gap after meridian 1 is outside: full circle
    assert rf[1].full


def test_region_function_sphere():
    rf = region_function(SPHERE)
    assert rf[0].intervals == ((1, 0),)
    assert rf[1].intervals == ((0, 1),)


def test_reconstruct_round_trip_disc():
    m = movie_of(DISC)
    d = reconstruct(m)
    assert movies_equal(movie_of(d), m)


def test_reconstruct_round_trip_sphere():
    m = movie_of(SPHERE)
    d = reconstruct(m)
    assert movies_equal(movie_of(d), m)
    assert len(d.rects) == 2


def test_reconstruct_single_born_dying_chord():
    text = "movie 2\nevent 0: - o + {0,1}\ngap 0: {0,1}\nevent 1: - {0,1} + o\ngap 1: o\n"
    m = movie_from_text(text)
    d = reconstruct(m)
    from rect_surfaces import canonical
    assert canonical(d) == canonical(DISC)


def test_movie_text_round_trip():
    for d in (DISC, SPHERE, diagram(4, 4, [(0, 1, 0, 1), (2, 3, 2, 3)])):
        m = movie_of(d).normalized()
        assert movies_equal(movie_from_text(movie_to_text(m)), m)


def test_movie_file_errors():
    from rect_surfaces import ParseError
    with pytest.raises(ParseError):
        movie_from_text("gap 0: {0,1}\n")
    with pytest.raises(ParseError):
        movie_from_text("movie 4\ngap 0: {0,1}\ngap 1: o\n")  # missing event
