import pytest

from rect_surfaces import (diagram, validate, boundary, canonical,
                           same_up_to_rescaling, euler_characteristic, summary,
                           UP, DOWN)
from rect_surfaces.grid import Rect
from rect_surfaces.moves import (apply_wrinkle_create, apply_wrinkle_reduce,
                                 apply_half_wrinkle_create, apply_half_wrinkle_reduce,
                                 apply_stabilize, apply_destabilize,
                                 apply_exchange, apply_flype,
                                 apply_bubble_create, apply_bubble_reduce,
                                 decompose_bubble, apply_record, apply_sequence,
                                 enumerate_moves, fixed_on, MoveError,
                                 MoveRecord, VERTICAL, HORIZONTAL, IDENTITY,
                                 THETA_REFLECTION, HALF_WRINKLE_CREATE,
                                 STABILIZE, FLYPE, EXCHANGE)
from rect_surfaces.movie import movie_of, movies_equal

DISC = diagram(2, 2, [(0, 1, 0, 1)])
SPHERE = diagram(2, 2, [(0, 1, 0, 1), (1, 0, 1, 0)])


def check_sound(d, d2, rec):
    assert validate(d2).valid, rec
    assert euler_characteristic(d) == euler_characteristic(d2)
    s1, s2 = summary(d), summary(d2)
    assert s1.orientable == s2.orientable
    assert s1.components == s2.components
    assert s1.boundary_components == s2.boundary_components


def test_wrinkle_create_disc():
    d2, rec = apply_wrinkle_create(DISC, 0, 0, 1)
    check_sound(DISC, d2, rec)
    assert len(d2.rects) == 3
    assert euler_characteristic(d2) == 1
    # replay determinism
    d3, _ = apply_record(DISC, MoveRecord(rec.kind, rec.orientation,
                                          rec.symmetry, rec.params))
    assert d3 == d2


def test_wrinkle_create_reduce_round_trip():
    d2, rec = apply_wrinkle_create(DISC, 0, 0, 1)
    back, rec2 = apply_record(d2, rec.invert())
    assert same_up_to_rescaling(back, DISC)


def test_wrinkle_preserves_movie():
    d2, _ = apply_wrinkle_create(DISC, 0, 0, 1)
    assert movies_equal(movie_of(DISC), movie_of(d2))


def test_wrinkle_create_wrong_type():
    with pytest.raises(MoveError):
        apply_wrinkle_create(DISC, 0, 1, 0)  # types swapped
    with pytest.raises(MoveError):
        apply_wrinkle_create(DISC, 0, 0, 0)


def test_half_wrinkle_disc():
    d2, rec = apply_half_wrinkle_create(DISC, 0, 0, 1)
    check_sound(DISC, d2, rec)
    assert len(d2.rects) == 2
    # types of the pivot pair flip in place
    assert rec.correspondence[(0, 0)] == (0, 0)
    assert rec.correspondence[(0, 1)] == (0, 1)
    assert d2.vertex_type((0, 0)) == UP
    assert d2.vertex_type((0, 1)) == DOWN


def test_half_wrinkle_requires_boundary():
    with pytest.raises(MoveError):
        apply_half_wrinkle_create(SPHERE, 0, 0, 1)


def test_half_wrinkle_reduce_inverts():
    d2, rec = apply_half_wrinkle_create(DISC, 0, 0, 1)
    back, _ = apply_record(d2, rec.invert())
    assert same_up_to_rescaling(back, DISC)


def test_two_half_wrinkles_make_a_wrinkle():
    # after the first half-wrinkle the pair types flip, so the second uses
    # the pair with roles swapped
    d2, _ = apply_half_wrinkle_create(DISC, 0, 0, 1)
    d3, _ = apply_half_wrinkle_create(d2, 0, 1, 0)
    full, _ = apply_wrinkle_create(DISC, 0, 0, 1)
    assert same_up_to_rescaling(d3, full)


def test_half_wrinkle_preserves_movie():
    d2, _ = apply_half_wrinkle_create(DISC, 0, 0, 1)
    assert movies_equal(movie_of(DISC), movie_of(d2))


def test_stabilize_disc():
    # v2=(0,1) up; fresh longitude in the gap after 1
    d2, rec = apply_stabilize(DISC, 0, 1, 3)
    assert validate(d2).valid
    assert len(d2.rects) == 3
    link1, link2 = boundary(DISC), boundary(d2)
    assert len(link2.components) == len(link1.components)
    assert len(link2.components[0]) == len(link1.components[0]) + 2
    assert euler_characteristic(d2) == 1


def test_stabilize_blocked_gap():
    with pytest.raises(MoveError):
        apply_stabilize(DISC, 0, 1, 1)  # the gap inside the rectangle


def test_destabilize_inverts():
    d2, rec = apply_stabilize(DISC, 0, 1, 3)
    back, _ = apply_record(d2, rec.invert())
    assert same_up_to_rescaling(back, DISC)


def test_exchange_swaps_blocks():
    # two discs with a spare line so the window covers both blocks
    d = diagram(5, 4, [(0, 1, 0, 1), (2, 3, 2, 3)])
    # window (gap after 4 ... gap after 3), separator after 1
    d2, rec = apply_exchange(d, 9, 3, 7, 3, 7)
    check_sound(d, d2, rec)
    assert d2 == diagram(5, 4, [(0, 1, 2, 3), (2, 3, 0, 1)])
    back, _ = apply_record(d2, rec.invert())
    assert same_up_to_rescaling(back, d)


def test_exchange_condition_errors():
    d = diagram(5, 4, [(0, 1, 0, 1), (2, 3, 2, 3)])
    from rect_surfaces.moves.exchange import ConditionViolated
    with pytest.raises(ConditionViolated):
        apply_exchange(d, 9, 1, 7, 3, 7)  # separator outside the window
    with pytest.raises(ConditionViolated):
        apply_exchange(d, 9, 3, 7, 1, 5)  # swap rectangles hit vertices


def test_exchange_fixedness_outside_window():
    d = diagram(6, 4, [(0, 1, 0, 1), (2, 3, 2, 3)])
    # hop the first block past the second
    d2, rec = apply_exchange(d, 11, 3, 7, 3, 7)
    assert validate(d2).valid
    # vertices of the second rectangle keep their cyclic position relative to
    # the pinned outside levels, so the move is fixed on them
    assert fixed_on(rec, d, d2, [(2, 2), (2, 3), (3, 2), (3, 3)])
    # either block alone can be held while the other hops over it
    assert fixed_on(rec, d, d2, [(0, 0)])
    # but not both at once: their cyclic order flips
    assert not fixed_on(rec, d, d2, [(2, 2), (0, 0)])


def test_bubble_create_reduce():
    d = diagram(4, 2, [(0, 3, 0, 1)])
    d2, rec = apply_bubble_create(d, 0, 3, 0, 1, 3)
    check_sound(d, d2, rec)
    assert len(d2.rects) == 3
    assert movies_equal(movie_of(d), movie_of(d2))
    back, _ = apply_record(d2, rec.invert())
    assert same_up_to_rescaling(back, d)


def test_bubble_site_conditions():
    from rect_surfaces.moves.bubble import ConditionViolated
    d = diagram(4, 2, [(0, 3, 0, 1)])
    with pytest.raises(MoveError):
        apply_bubble_create(d, 0, 3, 0, 1, 7)  # cut outside the theta arc


def test_decompose_bubble_matches_bubble():
    d = diagram(4, 2, [(0, 3, 0, 1)])
    direct, _ = apply_bubble_create(d, 0, 3, 0, 1, 3)
    via, seq = decompose_bubble(d, 0, 3, 0, 1, 3)
    assert len(seq) == 2
    assert same_up_to_rescaling(direct, via)
    replayed, _ = apply_sequence(d, seq)
    assert replayed == via


def test_decompose_bubble_adjacent_gap():
    d = diagram(4, 2, [(0, 3, 0, 1)])
    direct, _ = apply_bubble_create(d, 0, 3, 0, 1, 1)
    via, seq = decompose_bubble(d, 0, 3, 0, 1, 1)
    assert same_up_to_rescaling(direct, via)


def test_enumerate_disc_counts():
    recs = enumerate_moves(DISC, kinds=[HALF_WRINKLE_CREATE])
    assert len(recs) == 4  # two per axis
    recs = enumerate_moves(DISC, kinds=[STABILIZE])
    assert len(recs) == 8  # 4 vertices x eligible variants
    recs = enumerate_moves(DISC, kinds=[FLYPE])
    assert recs == []


def test_enumerate_sphere_no_boundary_moves():
    assert enumerate_moves(SPHERE, kinds=[HALF_WRINKLE_CREATE]) == []
    assert enumerate_moves(SPHERE, kinds=[STABILIZE]) == []


def test_enumerate_replays():
    for d in (DISC, SPHERE):
        for rec in enumerate_moves(d):
            d2, filled = apply_record(d, rec)
            check_sound(d, d2, rec)
