import pytest

from conftest import antiprism, santos, trapezoid
from drumwidth.drum import (facet_vertex_map, has_oriented_two_cycle, incidence_pattern, pair_embedding_by_enumeration,
                            pair_in_image_lp, pencil_min_faces, ridge_pencil_sweep, skin_ridges, width, width_trimmed)
from drumwidth.errors import DimensionMismatch, EmptySkin, NonUnitLastCoordinate, NotARidge, NotSimplicial
from drumwidth.drum import make_drum


def test_trapezoid():
    d = trapezoid()
    assert len(d.bottom_idx) == 2 and len(d.top_idx) == 2
    assert width(d) == 2
    assert has_oriented_two_cycle(d)
    assert incidence_pattern(d).has_oriented_two_cycle()


def test_trapezoid_phi_by_side():
    d = trapezoid()
    bot = d.skin("-").points
    for F, v in facet_vertex_map(d, "+").items():
        x = d.skin("+").points[F[0]][0]
        assert (bot[v][0] > 0) == (x > 0)


def test_antiprism():
    d = antiprism()
    assert d.is_simplicial()
    assert width(d) == 3 == width_trimmed(d)


def test_bad_points():
    with pytest.raises(NonUnitLastCoordinate):
        make_drum([(0, 0), (1, 2)])
    with pytest.raises(EmptySkin):
        make_drum([(0, 1), (1, 1)])


def test_santos():
    d = santos()
    assert d.n == 48
    assert width(d) == 6
    assert not d.is_simplicial()
    with pytest.raises(NotSimplicial):
        width_trimmed(d)
    assert not has_oriented_two_cycle(d)


def test_d1_width(d1):
    assert d1.n == 40
    assert len(d1.drum_facets()) + 2 == 386
    assert d1.is_simplicial()
    assert width(d1) == 6


def test_phi_is_argmin(d1):
    for side, other in (("+", "-"), ("-", "+")):
        opp = d1.skin(other).points
        for f in d1.skin_facets(side):
            v = facet_vertex_map(d1, side)[f.vertex_indices]
            vals = [f.functional(p) for p in opp]
            assert vals[v] == min(vals) and vals.count(min(vals)) == 1


def test_phi_completes_a_drum_facet(d1):
    pairs = {(df.bottom.vertex_indices, df.top.vertex_indices) for df in d1.drum_facets()}
    for F, v in facet_vertex_map(d1, "+").items():
        assert ((v,), F) in pairs


def test_pair_lp_witness(d1):
    df = d1.drum_facets()[0]
    ok, w = pair_in_image_lp(d1, df.bottom.vertex_indices, df.top.vertex_indices)
    assert ok and w.margin > 0
    with pytest.raises(DimensionMismatch):
        pair_in_image_lp(d1, (0,), (0,))


def test_pair_embedding_injective(d1):
    assert len(pair_embedding_by_enumeration(d1)) == len(d1.drum_facets())


def test_pencil_sweep(d1):
    R, (F1, F2) = next(iter(skin_ridges(d1, "+").items()))
    faces = ridge_pencil_sweep(d1, "+", R)
    assert faces and all(len(f) >= 1 for f in faces)
    with pytest.raises(NotARidge):
        ridge_pencil_sweep(d1, "+", F1)


def test_pencil_min_faces_small():
    # v0 wins below t = 1/2, all three tie at 1/2, v1 wins above
    assert pencil_min_faces([0, 2, 1], [2, 0, 1]) == {(0,), (0, 1, 2), (1,)}
    # endpoint ties at t = 0, 1 are outside the open interval
    assert pencil_min_faces([0, 2, 0], [2, 0, 0]) == {(2,)}
