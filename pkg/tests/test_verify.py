import pytest

from conftest import dk
from drumwidth.drum import MINUS, PLUS
from drumwidth.graph import Graph
from drumwidth.verify import (build_G, certify_width_lower_bound, check_cor_bound, check_incidences, check_phi,
                              classify_skin_facets, delta_D, fr_quotient_template, g_template, matches_template,
                              pair_bound, pair_image_in_tilde, report, screen_edges, sigma_is_automorphism,
                              sign_flip_quotient_fr)
import networkx as nx


@pytest.mark.parametrize("k", [1, 2, 3])
def test_classification(k):
    for side in (PLUS, MINUS):
        c = classify_skin_facets(dk(k), k, side)
        assert c.n_orbits == 2 * k + 1
        assert sum(c.orbit_sizes.values()) == len(dk(k).skin_facets(side))
        assert all(check_incidences(dk(k), k, side).values())


def test_d1_orbit_sizes(d1):
    # 64 skin facets split into orbits of B, C1, E1
    assert sorted(classify_skin_facets(d1, 1).orbit_sizes.values()) == [16, 16, 32]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_phi(k):
    assert all(check_phi(dk(k), k)["checks"].values())


@pytest.mark.parametrize("k", [1, 2])
def test_edge_screening(k):
    for side in (PLUS, MINUS):
        e = screen_edges(dk(k), k, side)
        assert e.ok
        assert e.n_ridges == 96 * k + 32 and e.n_excluded == 80 * k


@pytest.mark.parametrize("k", [1, 2, 3])
def test_fr_quotient(k):
    q, _ = sign_flip_quotient_fr(dk(k), k)
    assert len(q) == 2 * (2 * k + 1)
    assert nx.is_isomorphic(q.to_networkx(), fr_quotient_template(k).to_networkx())


@pytest.mark.parametrize("k", [1, 2, 3])
def test_G_shape_and_distances(k):
    for side in (PLUS, MINUS):
        g = build_G(dk(k), k, side)
        assert matches_template(g.G, g_template(k))
        assert sigma_is_automorphism(g)
        cb = check_cor_bound(g, k)
        assert cb.minimum == 2 * k + 3


def test_G_dims_k1(d1):
    assert build_G(d1, 1).dim_counts() == {0: 2, 1: 2, 2: 14, 3: 6}


def test_template_rejects_wrong_graph():
    assert not matches_template(Graph(edges=[(1, 2)]), g_template(1))


@pytest.mark.parametrize("k", [1, 2])
def test_pair_bound_exact(k):
    d = dk(k)
    best, table = pair_bound(d, build_G(d, k, MINUS), build_G(d, k, PLUS))
    assert best == 2 * k + 6


def test_certificate_k1():
    cert = certify_width_lower_bound(1)
    assert cert.valid and cert.bound == 6
    js = cert.to_json()
    assert set(js["details"]["premise_hashes"]) == {PLUS, MINUS}


def test_pair_image_in_tilde(d1, d2):
    for k, d in ((1, d1), (2, d2)):
        assert pair_image_in_tilde(d, build_G(d, k, MINUS), build_G(d, k, PLUS))


def test_delta_vs_tilde(d1):
    # every skin face met by a drum face appears in the tilde graph or has dimension < 2
    gp = build_G(d1, 1, PLUS)
    sk = d1.skin(PLUS)
    for m in delta_D(d1, PLUS):
        assert m in gp.tilde or sk.face_table()[m] < 2


def test_report_arithmetic():
    r = report(k=3)
    assert r["n_vertices"] == 72 and r["width_bound"] == 8 and r["excess_width"] == 3
    assert r["translated_dim"] == 67 and r["hirsch_excess"] == "3/67"
    assert r["hirsch_excess_limit"] == "1/16"
