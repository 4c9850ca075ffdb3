"""One test per acceptance criterion; a summary line per criterion is printed at the end of the run."""
import random
import time

import pytest

from conftest import antiprism, dk, octahedron, santos, trapezoid
from drumwidth.drum import (MINUS, PLUS, has_oriented_two_cycle, pair_embedding_by_enumeration,
                            pair_in_image_lp, trimmed_graph, width)
from drumwidth.family import D1_MOTIF, gamma_closure
from drumwidth.graph import box_product_distance
from drumwidth.polytope import bits, face_graph, facet_ridge_graph, ridges
from drumwidth.search import REASONS, SearchConfig, evaluate_motif, records_to_jsonl, run_search
from drumwidth.symmetry import Group, eps, gamma, generate_group, orbit, setwise_stabilizer
from drumwidth.verify import (build_G, certify_width_lower_bound, check_cor_bound, check_phi, classify_skin_facets,
                              screen_edges)

KS = range(1, 9)


def compatible_pairs(d):
    """All (bottom face, top face) pairs whose dimensions add up to dim - 2."""
    tabs = {s: d.skin(s).face_table() for s in (MINUS, PLUS)}
    by_dim = {s: {} for s in tabs}
    for s, tab in tabs.items():
        for m, dm in tab.items():
            by_dim[s].setdefault(dm, []).append(tuple(bits(m)))
    out = []
    for j in range(d.dim - 1):
        for a in by_dim[MINUS].get(j, []):
            for b in by_dim[PLUS].get(d.dim - 2 - j, []):
                out.append((a, b))
    return out


def image_pairs(d):
    return {(a.vertex_indices, b.vertex_indices) for a, b in pair_embedding_by_enumeration(d)}


def test_criterion_01_santos_48_vertices_width_6():
    t = time.perf_counter()
    d = santos()
    assert d.n == 48
    assert width(d) == 6
    assert time.perf_counter() - t < 300


def test_criterion_02_d1_40_vertices_width_6():
    d = dk(1)
    assert d.n == 40
    assert set(d.polytope.points) == set(gamma_closure(D1_MOTIF))
    assert width(d) == 6


def test_criterion_03_vertex_counts():
    for k in KS:
        assert dk(k).n == 16 * k + 24


def test_criterion_04_skin_facet_classification():
    for k in KS:
        c = classify_skin_facets(dk(k), k, PLUS)
        assert c.n_orbits == 2 * k + 1
        assert set(c.orbit_sizes) == {"B"} | {f"E{i}" for i in range(1, k + 1)} | {f"C{i}" for i in range(1, k + 1)}
        assert sum(c.orbit_sizes.values()) == len(dk(k).skin_facets(PLUS))


def test_criterion_05_facet_vertex_maps():
    for k in KS:
        checks = check_phi(dk(k), k)["checks"]
        for name in ("phi+(B)=a1-", "phi+(C_i)=phi+(E_i)=n-", "phi-(B-)=n", "phi-(C_i-)=phi-(E_i-)=a1"):
            assert checks[name], (k, name)


def test_criterion_06_edge_screening():
    for k in KS:
        for side in (PLUS, MINUS):
            assert screen_edges(dk(k), k, side).ok, (k, side)


def test_criterion_07_certified_bound():
    for k in KS:
        cert = certify_width_lower_bound(k, drum=dk(k))
        assert cert.valid and cert.bound >= 5 + k, (k, cert.bound)


def test_criterion_08_distance_bound():
    for k in KS:
        for side in (PLUS, MINUS):
            cb = check_cor_bound(build_G(dk(k), k, side), k, strict=False)
            assert cb.ok and cb.minimum >= 2 * k + 3, (k, side, cb.minimum)


def test_criterion_09_no_oriented_two_cycles():
    assert not has_oriented_two_cycle(santos())
    for k in KS:
        assert not has_oriented_two_cycle(dk(k)), k


def test_criterion_10_pair_oracle_equivalence():
    d1 = dk(1)
    img = image_pairs(d1)
    pairs = compatible_pairs(d1)
    assert len(pairs) == 24064
    for a, b in pairs:
        assert pair_in_image_lp(d1, a, b)[0] == ((a, b) in img), (a, b)
    d2 = dk(2)
    img2 = image_pairs(d2)
    rng = random.Random("pair-oracle-d2")
    sample = rng.sample(compatible_pairs(d2), 1000) + rng.sample(sorted(img2), 200)
    for a, b in sample:
        assert pair_in_image_lp(d2, a, b)[0] == ((a, b) in img2), (a, b)


def test_criterion_11_trimmed_distance_vs_product():
    d = dk(1)
    t = trimmed_graph(d)
    by_facet = {df.facet.vertex_indices: (df.bottom.vertex_indices, df.top.vertex_indices) for df in d.drum_facets()}
    gm, gp = face_graph(d.skin(MINUS)), face_graph(d.skin(PLUS))
    nodes = sorted(by_facet)
    rng = random.Random("trimmed-vs-product")
    for _ in range(600):
        F, G = rng.sample(nodes, 2)
        dt = t.distance(F, G)
        dp = box_product_distance(gm, gp, by_facet[F], by_facet[G])
        assert dt is not None and dp is not None
        assert 2 * dt >= dp, (F, G, dt, dp)


def test_criterion_12_toy_invariants():
    assert width(trapezoid()) == 2
    assert width(antiprism()) == 3
    for p in (octahedron(), trapezoid().polytope, antiprism().polytope, dk(1).polytope, dk(1).skin(PLUS)):
        for f in p.facets():
            for i, q in enumerate(p.points):
                v = f.functional(q)
                assert (v == 0) if i in f.vertex_indices else (v > 0)
        for r, fs in ridges(p).items():
            assert len(fs) == 2
        facet_ridge_graph(p)
    G = gamma()
    a2 = dk(2).named["a2"]
    for p, size in (((0, 0, 3, 3, 1), 8), ((75, 75, 0, 0, 1), 8), ((100, 0, 0, 0, 1), 8),
                    ((98, 0, 1, 0, 1), 16), (a2, 16)):
        stab = setwise_stabilizer(G, [p])
        assert len(orbit(G, p)) == size and size * len(stab) == len(G)
    assert setwise_stabilizer(G, [(98, 0, 1, 0, 1)]) == Group(generate_group([eps(2), eps(4)]))
    assert setwise_stabilizer(G, [a2]) == Group(generate_group([eps(3), eps(4)]))


def test_criterion_13_d2_direct_width():
    d = dk(2)
    w = width(d)
    assert len(d.drum_facets()) + 2 == 994
    cert = certify_width_lower_bound(2, drum=d)
    assert w >= 7 and w >= cert.bound
    assert w == 7


def test_criterion_14_search_smoke():
    cfg = SearchConfig(seed=2024, budget=100)
    first = run_search(cfg)
    assert len(first) == 100
    for i, r in enumerate(first):
        assert r.index == i and r.motif and r.outcome in REASONS
        assert (r.width is not None) == (r.outcome == "width")
        if r.outcome not in ("NotFullDim", "EmptySkin"):
            assert r.n_vertices is not None
    again = run_search(SearchConfig(seed=2024, budget=100))
    assert records_to_jsonl(first) == records_to_jsonl(again)
    planted = evaluate_motif(D1_MOTIF)
    assert planted.outcome == "width" and planted.width == 6
