from fractions import Fraction

import networkx as nx
import pytest

from conftest import octahedron, simplex, square
from drumwidth.exactcore import AffineFunctional
from drumwidth.polytope import (FaceId, Facet, VertexPolytope, certify_face, certify_vertices, enumerate_facets,
                                face_graph, faces_of_dim, facet_ridge_graph, graph_distance, is_visible, ridges)
from drumwidth.verify import SkinLabels

F_B = AffineFunctional((-1, Fraction(-24, 25), -49, 0), 147)


def test_facet_counts_small():
    assert len(enumerate_facets(square())) == 4
    assert len(enumerate_facets(octahedron())) == 8
    assert len(enumerate_facets(simplex(4))) == 5


@pytest.mark.parametrize("method", ["flood", "brute", "brute-nogroup", "flood-nogroup"])
def test_methods_agree_octahedron(method):
    want = {f.vertex_indices for f in enumerate_facets(octahedron(), "brute-nogroup")}
    assert {f.vertex_indices for f in enumerate_facets(octahedron(), method)} == want


def test_methods_agree_skin(d1):
    sk = d1.skin("+")
    flood = {f.vertex_indices for f in sk.facets("flood")}
    brute = {f.vertex_indices for f in VertexPolytope(sk.points).facets("brute-nogroup")}
    assert flood == brute and len(flood) == 64


def test_facet_functionals_positive_off_face(d1):
    for p in (octahedron(), d1.skin("+"), d1.skin("-")):
        for f in p.facets():
            for i, q in enumerate(p.points):
                v = f.functional(q)
                assert (v == 0) if i in f.vertex_indices else (v > 0)


def test_certify_face():
    sq = square()
    assert certify_face(sq, [0, 3]) is None            # antipodal: not a face
    v = certify_face(octahedron(), [0])
    assert isinstance(v, FaceId) and v.dim == 0
    assert isinstance(certify_face(sq, [0, 1]), Facet)


def test_certify_face_b(d1):
    sk = d1.skin("+")
    B = SkinLabels(d1, 1, "+").masks["B"]
    from drumwidth.polytope import bits
    f = certify_face(sk, bits(B))
    assert isinstance(f, Facet)
    assert f.functional.is_positive_multiple_of(F_B)
    assert is_visible(sk, f, (200, 0, 0, 0))
    assert F_B((200, 0, 0, 0)) == -53


def test_faces_of_dim():
    assert len(faces_of_dim(simplex(3), 1)) == 6
    assert len(faces_of_dim(octahedron(), 1)) == 12


def test_ridges_in_two_facets(d1):
    for p in (octahedron(), d1.skin("+")):
        for r, fs in ridges(p).items():
            assert len(fs) == 2 and all(set(r) < set(f) for f in fs)
    assert len(ridges(d1.skin("+"))) == 128


def test_fr_graphs():
    assert nx.is_isomorphic(facet_ridge_graph(simplex(3)).to_networkx(), nx.complete_graph(4))
    g = facet_ridge_graph(octahedron())
    assert nx.is_isomorphic(g.to_networkx(), nx.hypercube_graph(3))
    assert nx.diameter(g.to_networkx()) == 3
    n = g.nodes[0]
    assert graph_distance(g, n, n) == 0
    assert graph_distance(g, n, next(iter(g.neighbors(n)))) == 1


def test_fr_graph_connected(d1):
    assert facet_ridge_graph(d1.skin("+")).is_connected()


def test_visibility():
    sq = square()
    right = next(f for f in sq.facets() if f.functional((1, 0)) == 0)
    assert is_visible(sq, right, (2, 0))
    assert not is_visible(sq, right, (-2, 0))


def test_certify_vertices_drops_interior():
    p = VertexPolytope([(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)])
    assert certify_vertices(p) == [i for i, q in enumerate(p.points) if q != (1, 1)]


def test_face_graph_includes_empty():
    g = face_graph(square())
    assert () in g and g.degree(()) == 4
    assert len(g) == 1 + 4 + 4


def test_d1_facets_match_plain_brute_force(d1):
    plain = VertexPolytope(d1.polytope.points)
    brute = {f.vertex_indices for f in plain.facets("brute-nogroup")}
    assert brute == {f.vertex_indices for f in d1.polytope.facets()}
    assert len(brute) == 386
