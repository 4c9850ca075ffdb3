"""Machine checks for the drums D_k and the certified width lower bound.

Skin faces are vertex masks over the local indices of a projected skin.
Top-skin labels come from the named points of :class:`DkDrum`; bottom-skin
labels are their images under ``tau``.
"""
from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .drum import (MINUS, PLUS, Drum, facet_vertex_map, other, pencil_min_faces, skin_ridges)
from .errors import BoundViolated, CertificateInvalid, ClassificationMismatch
from .exactcore import rat_str
from .family import DkDrum, build_Dk, default_params
from .graph import Graph
from .polytope import VertexPolytope, bits, facet_ridge_graph, map_mask, to_mask
from .symmetry import SIGMA, TAU, SignedPerm, eps

S = "s"   # prefix of sigma-images in labels, e.g. "sB", "sE2"


def _r4(g: SignedPerm) -> SignedPerm:
    return SignedPerm(g.perm[:4], g.signs[:4])


E2, E3, E4, SIG4 = _r4(eps(2)), _r4(eps(3)), _r4(eps(4)), _r4(SIGMA)


def _names(k: int) -> list[str]:
    return ["B"] + [f"E{i}" for i in range(1, k + 1)] + [f"C{i}" for i in range(1, k + 1)]


# ---------------------------------------------------------------------------
# Labels on the skins

class SkinLabels:
    """Named faces of one skin of D_k, as local vertex masks."""

    def __init__(self, d: Drum, k: int, side: str):
        self.d, self.k, self.side = d, k, side
        self.skin: VertexPolytope = d.skin(side)
        if self.skin.action is None:
            raise ClassificationMismatch("skin has no symmetry group")
        self.action = self.skin.action
        self.flip_rows = [row for g, row in self.action.by_element.items() if list(g.perm) == [0, 1, 2, 3]]
        named = d.named if isinstance(d, DkDrum) and d.k == k else DkDrum(default_params(k)).named
        top_index = {d.polytope.points[i]: l for l, i in enumerate(d.top_idx)}
        bot_index = {d.polytope.points[i]: l for l, i in enumerate(d.bottom_idx)}
        self.local = {}
        for name, pt in named.items():
            q = pt if side == PLUS else TAU(pt)
            idx = top_index if side == PLUS else bot_index
            if q not in idx:
                raise ClassificationMismatch(f"point {name} = {[rat_str(c) for c in q]} is not on the {side} skin")
            self.local[name] = idx[q]
        m = lambda *names: to_mask(self.local[n] for n in names)
        base = {"B": m("m++", "m+-", "p+", f"a{k + 1}")}
        for i in range(1, k + 1):
            base[f"E{i}"] = m("m++", "m-+", f"a{i}", f"a{i + 1}")
            base[f"C{i}"] = m("m++", "p+", f"a{i}", f"a{i + 1}")
        for i in range(1, k + 1):
            base[f"e{i}"] = m(f"a{i}", f"a{i + 1}")
        base["a1"] = m("a1")
        self.masks = dict(base)
        for name, mask in base.items():
            self.masks[S + name] = self.act(SIG4, mask)

    def act(self, g: SignedPerm, mask: int) -> int:
        """Apply a top-skin symmetry; on the bottom skin the tau-conjugate acts."""
        if self.side == MINUS:
            t = TAU
            g5 = SignedPerm(tuple(g.perm) + (4,), tuple(g.signs) + (1,))
            g5 = t * g5 * t.inverse()
            g = _r4(g5)
        return map_mask(self.action.by_element[g], mask)

    def flip_class(self, mask: int) -> int:
        return min(map_mask(row, mask) for row in self.flip_rows)

    def orbit(self, mask: int) -> set[int]:
        return {map_mask(row, mask) for row in self.action.table}


# ---------------------------------------------------------------------------
# Facet classification

@dataclass
class OrbitClassification:
    side: str
    k: int
    labels: dict            # facet tuple -> (label, SignedPerm mapping the representative to it)
    orbit_sizes: dict       # label -> orbit size

    @property
    def n_orbits(self) -> int:
        return len(self.orbit_sizes)


def classify_skin_facets(d: Drum, k: int, side: str = PLUS) -> OrbitClassification:
    lab = SkinLabels(d, k, side)
    sk = lab.skin
    facets = set(sk.facet_masks())
    assigned: dict[int, tuple] = {}
    sizes = {}
    for name in _names(k):
        mask = lab.masks[name]
        if mask not in facets:
            raise ClassificationMismatch(f"{name} is not a facet of the {side} skin")
        hits = 0
        for g, row in lab.action.by_element.items():
            img = map_mask(row, mask)
            if img in assigned:
                if assigned[img][0] != name:
                    raise ClassificationMismatch(f"{name} and {assigned[img][0]} lie in one orbit")
                continue
            assigned[img] = (name, g)
            hits += 1
        sizes[name] = hits
    extra = facets - set(assigned)
    if extra:
        raise ClassificationMismatch(f"{len(extra)} facets outside the orbits of B, E_i, C_i "
                                     f"(e.g. {bits(next(iter(extra)))})")
    if len(sizes) != 2 * k + 1:
        raise ClassificationMismatch(f"{len(sizes)} orbits, expected {2 * k + 1}")
    return OrbitClassification(side, k, {tuple(bits(m)): v for m, v in assigned.items()}, sizes)


def expected_neighbours(lab: SkinLabels) -> dict[str, set[int]]:
    """Facet-ridge neighbours of the fundamental domain B, E_i, C_i."""
    k, M = lab.k, lab.masks
    out = {}
    for i in range(1, k + 1):
        lower_e = lab.act(E2, M["E1"]) if i == 1 else M[f"E{i - 1}"]
        upper_e = M["sB"] if i == k else M[f"E{i + 1}"]
        out[f"E{i}"] = {lower_e, upper_e, M[f"C{i}"], lab.act(E3, M[f"C{i}"])}
        lower_c = lab.act(E2, M["C1"]) if i == 1 else M[f"C{i - 1}"]
        upper_c = M["B"] if i == k else M[f"C{i + 1}"]
        out[f"C{i}"] = {lower_c, upper_c, M[f"E{i}"], lab.act(E4, M[f"C{i}"])}
    out["B"] = {M[f"sE{k}"], M[f"C{k}"], lab.act(E2, M["B"]), lab.act(E4, M[f"C{k}"])}
    return out


def check_incidences(d: Drum, k: int, side: str = PLUS) -> dict:
    lab = SkinLabels(d, k, side)
    g = facet_ridge_graph(lab.skin)
    exp = expected_neighbours(lab)
    report = {}
    for name, want in exp.items():
        got = {to_mask(n) for n in g.neighbors(tuple(bits(lab.masks[name])))}
        report[name] = got == want and len(got) == 4
    return report


# ---------------------------------------------------------------------------
# Facet-vertex maps

def check_phi(d: Drum, k: int) -> dict:
    """Values of the facet-vertex maps on the fundamental domain, plus equivariance."""
    top, bot = SkinLabels(d, k, PLUS), SkinLabels(d, k, MINUS)
    pp, pm = facet_vertex_map(d, PLUS), facet_vertex_map(d, MINUS)
    a1_bot = bot.local["a1"]
    n_bot = bits(bot.masks["sa1"])[0]
    a1_top = top.local["a1"]
    n_top = bits(top.masks["sa1"])[0]
    t = lambda lab, nm: tuple(bits(lab.masks[nm]))
    values = {"phi+(B)": pp[t(top, "B")], "phi-(B-)": pm[t(bot, "B")]}
    ok = {"phi+(B)=a1-": values["phi+(B)"] == a1_bot, "phi-(B-)=n": values["phi-(B-)"] == n_top}
    good_plus = good_minus = True
    for i in range(1, k + 1):
        for X in ("C", "E"):
            values[f"phi+({X}{i})"] = pp[t(top, f"{X}{i}")]
            values[f"phi-({X}{i}-)"] = pm[t(bot, f"{X}{i}")]
            good_plus &= values[f"phi+({X}{i})"] == n_bot
            good_minus &= values[f"phi-({X}{i}-)"] == a1_top
    ok["phi+(C_i)=phi+(E_i)=n-"] = good_plus
    ok["phi-(C_i-)=phi-(E_i-)=a1"] = good_minus
    # equivariance under the skin group (same index action on both skins)
    eq = True
    for side, phi in ((PLUS, pp), (MINUS, pm)):
        act_s, act_o = d.skin(side).action, d.skin(other(side)).action
        for F, v in phi.items():
            fm = to_mask(F)
            for g, row in act_s.by_element.items():
                gF = tuple(bits(map_mask(row, fm)))
                if phi[gF] != act_o.by_element[g][v]:
                    eq = False
    ok["gamma+ equivariance"] = eq
    # tau carries top facets to bottom facets and phi+ to phi-
    tau_ok = True
    top_to_bot = _tau_local_map(d, PLUS)
    bot_to_top = _tau_local_map(d, MINUS)
    for F, v in pp.items():
        tF = tuple(sorted(top_to_bot[i] for i in F))
        if pm[tF] != bot_to_top[v]:
            tau_ok = False
    ok["tau symmetry"] = tau_ok
    return {"values": values, "checks": ok,
            "a1-": a1_bot, "n-": n_bot, "a1": a1_top, "n": n_top}


def _tau_local_map(d: Drum, side: str) -> list[int]:
    """Local index on ``side`` -> local index of its tau-image on the other skin."""
    pts = d.polytope.points
    src = d.global_idx[side]
    dst = d.local_idx[other(side)]
    return [dst[d.polytope.index[TAU(pts[g])]] for g in src]


# ---------------------------------------------------------------------------
# Edge screening by pencil sweeps

def fast_pencil(d: Drum, side: str, f1_tuple: tuple, f2_tuple: tuple) -> set[tuple]:
    sk = d.skin(side)
    f1, f2 = sk.facet(f1_tuple).functional, sk.facet(f2_tuple).functional
    opp = d.skin(other(side))
    # integer values on the rescaled opposite skin
    a1 = [f1.linear[j] for j in range(opp.dim)]
    a2 = [f2.linear[j] for j in range(opp.dim)]
    den = math.lcm(*(x.denominator for x in a1 + a2), f1.constant.denominator, f2.constant.denominator)
    va = [sum(int(x * den) * y for x, y in zip(a1, q)) + int(f1.constant * den) * opp.scale for q in opp.ints]
    vb = [sum(int(x * den) * y for x, y in zip(a2, q)) + int(f2.constant * den) * opp.scale for q in opp.ints]
    return lower_envelope_faces(va, vb)


def lower_envelope_faces(a, b) -> set[tuple]:
    """Argmin sets of ``(1-t) a_v + t b_v`` for ``t`` in (0, 1), by walking the envelope."""
    n = len(a)
    slope = [y - x for x, y in zip(a, b)]
    m0 = min(a)
    cur = [i for i in range(n) if a[i] == m0]
    smin = min(slope[i] for i in cur)
    lead = [i for i in cur if slope[i] == smin]
    t = Fraction(0)
    out = set()
    while True:
        L = lead[0]
        out.add(tuple(sorted(lead)))
        best = None
        for w in range(n):
            if slope[w] < slope[L]:
                tw = Fraction(a[w] - a[L], slope[L] - slope[w])
                if tw > t and (best is None or tw < best):
                    best = tw
        if best is None or best >= 1:
            return out
        t = best
        vals = [a[i] + t * slope[i] for i in range(n)]
        m = min(vals)
        face = [i for i in range(n) if vals[i] == m]
        out.add(tuple(face))
        smin = min(slope[i] for i in face)
        lead = [i for i in face if slope[i] == smin]


def boundary_edge_orbit(lab: SkinLabels) -> set[int]:
    out = set()
    for i in range(1, lab.k + 1):
        out |= lab.orbit(lab.masks[f"e{i}"])
    return out


@dataclass
class EdgeScreen:
    side: str
    n_ridges: int
    n_excluded: int
    dim1_faces: set        # masks on the opposite skin
    image_pairs: set       # (opposite mask, ridge mask) found by sweeps
    ok: bool


def screen_edges(d: Drum, k: int, side: str) -> EdgeScreen:
    """Sweep every ridge of ``side``'s skin whose facets have distinct phi values."""
    phi = facet_vertex_map(d, side)
    opp_lab = SkinLabels(d, k, other(side))
    allowed = boundary_edge_orbit(opp_lab)
    opp = d.skin(other(side))
    excluded = 0
    found = set()
    pairs = set()
    rmap = skin_ridges(d, side)
    for R, (F1, F2) in rmap.items():
        if phi[F1] == phi[F2]:
            excluded += 1
            continue
        for face in fast_pencil(d, side, F1, F2):
            if len(face) >= 2 and opp.face_dim(face) == 1:
                found.add(to_mask(face))
                pairs.add((to_mask(face), to_mask(R)))
    return EdgeScreen(side, len(rmap), excluded, found, pairs, found <= allowed)


# ---------------------------------------------------------------------------
# Quotient graphs and the graphs G

@dataclass
class QuotientGraph:
    graph: Graph
    cls: dict            # original node -> class node


def quotient_graph(g: Graph, images) -> QuotientGraph:
    """Quotient by a group acting on nodes; ``images(node)`` lists the orbit of a node."""
    cls = {}
    for n in g.nodes:
        orb = list(images(n))
        for x in orb:
            if x not in g:
                raise ValueError(f"action maps {n!r} to {x!r}, which is not a node")
        cls[n] = min(orb)
    q = g.quotient(cls.__getitem__)
    return QuotientGraph(q, cls)


def sign_flip_quotient_fr(d: Drum, k: int, side: str = PLUS) -> tuple[Graph, dict]:
    """Facet-ridge graph of a skin modulo sign flips, with nodes renamed by labels."""
    lab = SkinLabels(d, k, side)
    g = facet_ridge_graph(lab.skin)
    q = quotient_graph(g, lambda n: [tuple(bits(map_mask(r, to_mask(n)))) for r in lab.flip_rows])
    names = {}
    for nm in _names(k):
        for pre in ("", S):
            names[q.cls[tuple(bits(lab.masks[pre + nm]))]] = pre + nm
    return q.graph.quotient(lambda n: names.get(n, n)), names


def fr_quotient_template(k: int) -> Graph:
    g = Graph()
    for pre in ("", S):
        for i in range(1, k + 1):
            g.add_edge(pre + f"E{i}", pre + f"C{i}")
            if i < k:
                g.add_edge(pre + f"E{i}", pre + f"E{i + 1}")
                g.add_edge(pre + f"C{i}", pre + f"C{i + 1}")
        g.add_edge(pre + f"C{k}", pre + "B")
    g.add_edge(f"E{k}", "sB")
    g.add_edge(f"sE{k}", "B")
    return g


@dataclass
class GGraph:
    side: str
    k: int
    tilde: Graph                 # nodes: masks, attribute dim
    G: Graph                     # nodes: sign-flip class masks, attribute dim
    names: dict                  # label -> class node in G
    labels: SkinLabels = field(repr=False)

    def node(self, name: str) -> int:
        return self.names[name]

    def cls(self, mask: int) -> int:
        return self.labels.flip_class(mask)

    def dim_counts(self) -> dict:
        out = {}
        for n in self.G.nodes:
            dm = self.G.attrs[n]["dim"]
            out[dm] = out.get(dm, 0) + 1
        return dict(sorted(out.items()))


def build_G(d: Drum, k: int, side: str = PLUS) -> GGraph:
    lab = SkinLabels(d, k, side)
    sk = lab.skin
    nodes = {m: dm for m, dm in sk.face_table().items() if dm >= 2}
    for m in boundary_edge_orbit(lab):
        nodes[m] = 1
    for m in lab.orbit(lab.masks["a1"]):
        nodes[m] = 0
    by_dim: dict[int, list[int]] = {}
    for m, dm in nodes.items():
        by_dim.setdefault(dm, []).append(m)
    tilde = Graph()
    for m in sorted(nodes, key=lambda x: (nodes[x], bits(x))):
        tilde.add_node(m, dim=nodes[m])
    for dm in range(0, 3):
        for m in by_dim.get(dm, []):
            for big in by_dim.get(dm + 1, []):
                if m & big == m:
                    tilde.add_edge(m, big)
    G = tilde.quotient(lab.flip_class)
    names = {}
    for name, mask in lab.masks.items():
        c = lab.flip_class(mask)
        if c in G:
            names[name] = c
    return GGraph(side, k, tilde, G, names, lab)


def g_template(k: int) -> Graph:
    """Expected shape of G: facet classes, ridge classes, boundary edges, two poles."""
    g = Graph()
    for pre in ("", S):
        for nm in _names(k):
            g.add_node(pre + nm, dim=3)

    def ridge(name, *facets):
        g.add_node(name, dim=2)
        for f in facets:
            g.add_edge(name, f)

    for pre in ("", S):
        for i in range(1, k + 1):
            ridge(f"{pre}E{i}|C{i}", f"{pre}E{i}", f"{pre}C{i}")
            ridge(f"{pre}C{i}|e4", f"{pre}C{i}")
            if i < k:
                ridge(f"{pre}E{i}|E{i + 1}", f"{pre}E{i}", f"{pre}E{i + 1}")
                ridge(f"{pre}C{i}|C{i + 1}", f"{pre}C{i}", f"{pre}C{i + 1}")
        ridge(f"{pre}C{k}|B", f"{pre}C{k}", f"{pre}B")
        ridge(f"{pre}E1|e2", f"{pre}E1")
        ridge(f"{pre}C1|e2", f"{pre}C1")
        ridge(f"{pre}B|e2", f"{pre}B")
        for i in range(1, k + 1):
            g.add_node(f"{pre}e{i}", dim=1)
            g.add_edge(f"{pre}e{i}", f"{pre}E{i}|C{i}")
            g.add_edge(f"{pre}e{i}", f"{pre}C{i}|e4")
        g.add_node(f"{pre}a1", dim=0)
        g.add_edge(f"{pre}a1", f"{pre}e1")
    ridge(f"E{k}|sB", f"E{k}", "sB")
    ridge(f"B|sE{k}", "B", f"sE{k}")
    return g


def matches_template(G: Graph, template: Graph) -> bool:
    import networkx as nx

    return nx.is_isomorphic(G.to_networkx(), template.to_networkx(),
                            node_match=lambda x, y: x.get("dim") == y.get("dim"))


def sigma_is_automorphism(gg: GGraph) -> bool:
    """sigma permutes the sign-flip classes and preserves adjacency and dimension."""
    lab = gg.labels
    f = {n: lab.flip_class(lab.act(SIG4, n)) for n in gg.G.nodes}
    if set(f.values()) != set(gg.G.nodes):
        return False
    for a, b in gg.G.edges():
        if f[b] not in gg.G.neighbors(f[a]):
            return False
    return all(gg.G.attrs[n]["dim"] == gg.G.attrs[f[n]]["dim"] for n in gg.G.nodes)


@dataclass
class CorBound:
    k: int
    to_sigma_a1: dict
    to_a1: dict
    ok: bool

    @property
    def minimum(self) -> int:
        return min(list(self.to_sigma_a1.values()) + list(self.to_a1.values()))


def check_cor_bound(gg: GGraph, k: int, strict: bool = True) -> CorBound:
    G = gg.G
    d_sa = G.bfs([gg.node(S + "a1")])
    d_a = G.bfs([gg.node("a1")])
    first = ["B", "sB"] + [f"E{i}" for i in range(1, k + 1)] + [f"C{i}" for i in range(1, k + 1)]
    second = ["B", "sB"] + [f"sE{i}" for i in range(1, k + 1)] + [f"sC{i}" for i in range(1, k + 1)]
    to_sa = {f: d_sa.get(gg.node(f)) for f in first}
    to_a = {f: d_a.get(gg.node(f)) for f in second}
    ok = all(v is not None and v >= 2 * k + 3 for v in list(to_sa.values()) + list(to_a.values()))
    if strict and not ok:
        raise BoundViolated(f"distance below {2 * k + 3}: {to_sa} {to_a}")
    return CorBound(k, to_sa, to_a, ok)


# ---------------------------------------------------------------------------
# The certificate

@dataclass
class WidthCertificate:
    k: int
    premises: dict
    distances: dict
    minimum_sum: int
    bound: int
    details: dict = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return all(self.premises.values())

    def to_json(self) -> dict:
        return {"k": self.k, "valid": self.valid, "bound": self.bound, "target": 5 + self.k,
                "minimum_sum": self.minimum_sum, "premises": self.premises,
                "distances": self.distances, "details": self.details}


def _hash(obj) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True).encode()).hexdigest()


def pair_bound(d: Drum, g_minus: GGraph, g_plus: GGraph) -> tuple[int, dict]:
    """``min`` over bottom facet classes G and top facet classes H of
    ``dist_{G-}(G, phi+(H)) + dist_{G+}(phi-(G), H)``."""
    pp, pm = facet_vertex_map(d, PLUS), facet_vertex_map(d, MINUS)
    bots = [n for n in g_minus.G.nodes if g_minus.G.attrs[n]["dim"] == 3]
    tops = [n for n in g_plus.G.nodes if g_plus.G.attrs[n]["dim"] == 3]
    inv_m = {v: k for k, v in g_minus.names.items()}
    inv_p = {v: k for k, v in g_plus.names.items()}
    dist_m = {}
    dist_p = {}
    table = {}
    best = None
    for Gm in bots:
        v_top = pm[tuple(bits(Gm))]
        c_top = g_plus.cls(1 << v_top)
        if c_top not in dist_p:
            dist_p[c_top] = g_plus.G.bfs([c_top])
        for H in tops:
            v_bot = pp[tuple(bits(H))]
            c_bot = g_minus.cls(1 << v_bot)
            if c_bot not in dist_m:
                dist_m[c_bot] = g_minus.G.bfs([c_bot])
            s = dist_m[c_bot][Gm] + dist_p[c_top][H]
            table[f"{inv_m.get(Gm, Gm)}-|{inv_p.get(H, H)}"] = s
            best = s if best is None else min(best, s)
    return best, table


def certify_width_lower_bound(k: int, params=None, drum: DkDrum | None = None) -> WidthCertificate:
    """Run the staged pipeline; a failing stage raises :class:`CertificateInvalid`."""
    stage = "build"
    try:
        d = drum or build_Dk(params or default_params(k))
        premises, details = {}, {}
        stage = "classify"
        cls = {s: classify_skin_facets(d, k, s) for s in (PLUS, MINUS)}
        premises["classification"] = all(c.n_orbits == 2 * k + 1 for c in cls.values())
        inc = {s: check_incidences(d, k, s) for s in (PLUS, MINUS)}
        premises["incidences"] = all(all(r.values()) for r in inc.values())
        details["orbit_sizes"] = cls[PLUS].orbit_sizes
        _need(premises, stage)
        stage = "phi"
        ph = check_phi(d, k)
        premises.update({f"phi: {k_}": v for k_, v in ph["checks"].items()})
        _need(premises, stage)
        stage = "edges"
        es = {s: screen_edges(d, k, s) for s in (PLUS, MINUS)}
        premises["edge screening +"] = es[PLUS].ok
        premises["edge screening -"] = es[MINUS].ok
        details["ridges"] = {s: {"total": e.n_ridges, "excluded": e.n_excluded,
                                 "dim1_faces": len(e.dim1_faces)} for s, e in es.items()}
        _need(premises, stage)
        stage = "graphs"
        gp, gm = build_G(d, k, PLUS), build_G(d, k, MINUS)
        tmpl = g_template(k)
        premises["G+ shape"] = matches_template(gp.G, tmpl)
        premises["G- shape"] = matches_template(gm.G, tmpl)
        cb = {s: check_cor_bound(g, k, strict=False) for s, g in ((PLUS, gp), (MINUS, gm))}
        premises["distance bound"] = all(c.ok for c in cb.values())
        details["G_dims"] = {str(dm): c for dm, c in gp.dim_counts().items()}
        _need(premises, stage)
        stage = "bound"
        best, table = pair_bound(d, gm, gp)
        bound = 2 + -(-best // 2)
        details["premise_hashes"] = {
            s: _hash(sorted(list(bits(m)) for m in d.skin(s).facet_masks())) for s in (PLUS, MINUS)}
        distances = {"cor_bound": {s: {"to_sa1": c.to_sigma_a1, "to_a1": c.to_a1} for s, c in cb.items()},
                     "pair_sums": table}
        return WidthCertificate(k, premises, distances, best, bound, details)
    except CertificateInvalid:
        raise
    except Exception as exc:  # any failure names its stage
        raise CertificateInvalid(stage, f"{type(exc).__name__}: {exc}") from exc


def _need(premises: dict, stage: str) -> None:
    bad = [k for k, v in premises.items() if not v]
    if bad:
        raise CertificateInvalid(stage, "failed premises: " + ", ".join(bad))


# ---------------------------------------------------------------------------
# Ground-truth comparisons (full enumeration, small k)

def pair_image_in_tilde(d: Drum, g_minus: GGraph, g_plus: GGraph) -> bool:
    """Every coordinate of the pair embedding is a node of the tilde graphs."""
    for df in d.drum_facets():
        if df.bottom.mask not in g_minus.tilde or df.top.mask not in g_plus.tilde:
            return False
    return True


def delta_D(d: Drum, side: str) -> set[int]:
    """Skin faces ``F cap skin`` for faces ``F`` of the drum (local masks, nonempty, proper)."""
    P = d.polytope
    gl = d.global_idx[side]
    skin_mask = to_mask(gl)
    loc = d.local_idx[side]
    out = set()
    for m in P.face_table():
        x = m & skin_mask
        if x and x != skin_mask:
            out.add(to_mask(loc[i] for i in bits(x)))
    return out


# ---------------------------------------------------------------------------
# Summary arithmetic

def report(k: int | None = None, width_value: int | None = None, dim: int = 5) -> dict:
    """Vertex count, excess width and the non-Hirsch translation for D_k or a given width."""
    out = {"dim": dim}
    if k is not None:
        n = 16 * k + 24
        bound = width_value if width_value is not None else 5 + k
        tdim = 16 * k + 19
        out.update({"k": k, "n_vertices": n, "width_bound": bound, "excess_width": bound - dim,
                    "translated_dim": tdim, "translated_facets": 2 * tdim,
                    "hirsch_deficit": k, "hirsch_excess": rat_str(Fraction(k, tdim)),
                    "hirsch_excess_limit": rat_str(Fraction(1, 16))})
    elif width_value is not None:
        out.update({"width": width_value, "excess_width": width_value - dim})
    return out
