"""Drums: polytopes whose vertices all lie on the two levels ``z = -1`` and ``z = +1``.

Skin faces are addressed by *local* vertex indices of the projected skin
polytopes (last coordinate dropped); ``Drum.bottom_idx`` / ``Drum.top_idx``
translate them to indices of the full polytope.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (DimensionMismatch, EmptySkin, NonUniqueMinimum, NonUnitLastCoordinate,
                     NotARidge, NotFullDimensional, NotSimplicial)
from .exactcore import AffineFunctional, LpProblem, affine_rank, lp_max_margin, rat_str, vec
from .graph import Graph
from .polytope import FaceId, Facet, VertexPolytope, bits, facet_ridge_graph, ridges
from .symmetry import Group, SignedPerm

PLUS, MINUS = "+", "-"


def _side(side: str) -> str:
    if side not in (PLUS, MINUS):
        raise ValueError(f"side must be '+' or '-', got {side!r}")
    return side


def other(side: str) -> str:
    return MINUS if _side(side) == PLUS else PLUS


def level_subgroup(group: Group) -> Group | None:
    """Elements fixing the last coordinate, restricted to the first ``d-1`` coordinates."""
    d = group.dim
    keep = [SignedPerm(g.perm[:-1], g.signs[:-1]) for g in group
            if g.perm[-1] == d - 1 and g.signs[-1] == 1]
    return Group(keep) if keep else None


@dataclass(frozen=True)
class DrumFacet:
    facet: Facet
    bottom: FaceId      # local indices in the bottom skin
    top: FaceId         # local indices in the top skin

    @property
    def height(self) -> int:
        return self.top.dim


class Drum:
    def __init__(self, points: Iterable[Sequence], group: Group | None = None):
        pts = [vec(p) for p in points]
        if not pts:
            raise EmptySkin("no points")
        for p in pts:
            if p[-1] not in (1, -1):
                raise NonUnitLastCoordinate(f"point {[rat_str(c) for c in p]} is not on z = +-1")
        self.polytope = VertexPolytope(pts, group)
        P = self.polytope
        self.dim = P.dim
        self.bottom_idx = [i for i, p in enumerate(P.points) if p[-1] == -1]
        self.top_idx = [i for i, p in enumerate(P.points) if p[-1] == 1]
        if not self.bottom_idx or not self.top_idx:
            raise EmptySkin("both levels z = -1 and z = +1 must be occupied")
        if not P.full_dimensional:
            raise NotFullDimensional(f"hull has dimension {P.rank} < {P.dim}")
        self.group = group
        sg = level_subgroup(group) if group is not None else None
        self.skin_group = sg
        self.skins = {
            MINUS: VertexPolytope([P.points[i][:-1] for i in self.bottom_idx], sg),
            PLUS: VertexPolytope([P.points[i][:-1] for i in self.top_idx], sg),
        }
        self.global_idx = {MINUS: self.bottom_idx, PLUS: self.top_idx}
        self.local_idx = {MINUS: {g: l for l, g in enumerate(self.bottom_idx)},
                          PLUS: {g: l for l, g in enumerate(self.top_idx)}}
        self.skin_minus = FaceId(tuple(self.bottom_idx), self.skins[MINUS].rank)
        self.skin_plus = FaceId(tuple(self.top_idx), self.skins[PLUS].rank)
        self._phi: dict = {}
        self._drum_facets = None

    def __repr__(self) -> str:
        return f"Drum(dim={self.dim}, n={self.polytope.n}, bottom={len(self.bottom_idx)}, top={len(self.top_idx)})"

    @property
    def n(self) -> int:
        return self.polytope.n

    def skin(self, side: str) -> VertexPolytope:
        return self.skins[_side(side)]

    def skin_point(self, side: str, local: int) -> tuple:
        return self.skins[side].points[local]

    def skin_facets(self, side: str) -> list[Facet]:
        return self.skin(side).facets()

    # -- full polytope -----------------------------------------------------

    def _skin_masks(self):
        P = self.polytope
        tb = P._facet_table()
        lo = sum(1 << i for i in self.bottom_idx)
        hi = sum(1 << i for i in self.top_idx)
        if lo not in tb or hi not in tb:
            raise ArithmeticError("a skin is not a facet of the drum")
        return lo, hi

    def drum_facets(self) -> list[DrumFacet]:
        """Non-skin facets with their bottom/top parts (enumerates the full polytope)."""
        if self._drum_facets is None:
            lo, hi = self._skin_masks()
            out = []
            for f in self.polytope.facets():
                if f.mask in (lo, hi):
                    continue
                b = [self.local_idx[MINUS][i] for i in f.vertex_indices if i in self.local_idx[MINUS]]
                t = [self.local_idx[PLUS][i] for i in f.vertex_indices if i in self.local_idx[PLUS]]
                out.append(DrumFacet(f, FaceId(tuple(b), self.skins[MINUS].face_dim(b)),
                                     FaceId(tuple(t), self.skins[PLUS].face_dim(t))))
            self._drum_facets = out
        return self._drum_facets

    def is_simplicial(self) -> bool:
        return all(len(df.facet.vertex_indices) == self.dim for df in self.drum_facets())

    def check_simplicial(self) -> None:
        bad = [df for df in self.drum_facets() if len(df.facet.vertex_indices) != self.dim]
        if bad:
            raise NotSimplicial(f"{len(bad)} non-skin facets are not simplices "
                                f"(e.g. {len(bad[0].facet.vertex_indices)} vertices)")

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "points": [[rat_str(c) for c in p] for p in self.polytope.points],
            "skin_minus": list(self.bottom_idx),
            "skin_plus": list(self.top_idx),
        }


def make_drum(points: Iterable[Sequence], group: Group | None = None) -> Drum:
    return Drum(points, group)


# ---------------------------------------------------------------------------
# Width

def trimmed_graph(d: Drum) -> Graph:
    g = facet_ridge_graph(d.polytope)
    return g.subgraph([n for n in g.nodes if n not in (d.skin_minus.vertex_indices, d.skin_plus.vertex_indices)])


def width_trimmed(d: Drum) -> int:
    """``2 + `` min distance from height-0 to height-(d-2) facets in the trimmed graph."""
    d.check_simplicial()
    t = trimmed_graph(d)
    low = [df.facet.vertex_indices for df in d.drum_facets() if df.height == 0]
    high = {df.facet.vertex_indices for df in d.drum_facets() if df.height == d.dim - 2}
    dist = t.bfs(low)
    return 2 + min(v for n, v in dist.items() if n in high)


def width(d: Drum, cross_check: bool = True) -> int:
    """Distance between the two skins in the facet-ridge graph.

    On simplicial drums the value is cross-checked against the trimmed-graph
    formula; the check is skipped (not failed) for non-simplicial drums.
    """
    g = facet_ridge_graph(d.polytope)
    w = g.distance(d.skin_minus.vertex_indices, d.skin_plus.vertex_indices)
    if w is None:
        raise ArithmeticError("facet-ridge graph is disconnected")
    if cross_check and d.is_simplicial():
        w2 = width_trimmed(d)
        if w2 != w:
            raise ArithmeticError(f"width mismatch: skin distance {w}, trimmed formula {w2}")
    return w


# ---------------------------------------------------------------------------
# Facet-vertex maps and incidence pattern

def argmin_set(f: AffineFunctional, points: Sequence[Sequence]) -> list[int]:
    vals = [f(p) for p in points]
    m = min(vals)
    return [i for i, v in enumerate(vals) if v == m]


def facet_vertex_map(d: Drum, side: str) -> dict[tuple, int]:
    """Skin facet (local vertex tuple on ``side``) -> local vertex on the other skin."""
    side = _side(side)
    if side in d._phi:
        return d._phi[side]
    opp = d.skin(other(side)).points
    out = {}
    for f in d.skin_facets(side):
        mins = argmin_set(f.functional, opp)
        if len(mins) != 1:
            raise NonUniqueMinimum(f"facet {f.vertex_indices} of skin {side} is minimised by "
                                   f"{len(mins)} opposite vertices")
        out[f.vertex_indices] = mins[0]
    d._phi[side] = out
    return out


@dataclass
class IncidencePattern:
    """Arcs ``(s, F) -> (s', F')`` when ``phi^s(F)`` is a vertex of ``F'``."""

    arcs: dict

    def out_degree(self, node) -> int:
        return len(self.arcs[node])

    def two_cycles(self) -> list[tuple]:
        out = []
        for a, targets in self.arcs.items():
            if a[0] != PLUS:
                continue
            for b in targets:
                if a in self.arcs.get(b, ()):
                    out.append((a, b))
        return out

    def has_oriented_two_cycle(self) -> bool:
        return bool(self.two_cycles())


def incidence_pattern(d: Drum) -> IncidencePattern:
    arcs = {}
    for side in (PLUS, MINUS):
        phi = facet_vertex_map(d, side)
        opp = [f.vertex_indices for f in d.skin_facets(other(side))]
        for F, v in phi.items():
            arcs[(side, F)] = [(other(side), G) for G in opp if v in G]
    return IncidencePattern(arcs)


def has_oriented_two_cycle(d: Drum) -> bool:
    """Screen without building all arcs: ``phi+(F) in G`` and ``phi-(G) in F``."""
    pp, pm = facet_vertex_map(d, PLUS), facet_vertex_map(d, MINUS)
    for G, v in pm.items():
        for F, w in pp.items():
            if v in F and w in G:
                return True
    return False


# ---------------------------------------------------------------------------
# Pair embedding

def pair_embedding_by_enumeration(d: Drum) -> set[tuple[FaceId, FaceId]]:
    pairs = [(df.bottom, df.top) for df in d.drum_facets()]
    s = set(pairs)
    if len(s) != len(pairs):
        raise ArithmeticError("pair embedding is not injective")
    d.check_simplicial()
    return s


@dataclass(frozen=True)
class PairWitness:
    functional: AffineFunctional
    c_minus: Fraction
    c_plus: Fraction
    margin: Fraction


def pair_in_image_lp(d: Drum, f_minus: Iterable[int], f_plus: Iterable[int]) -> tuple[bool, PairWitness | None]:
    """Is there a functional on the skins' space minimised exactly on ``f_minus``
    over the bottom skin and exactly on ``f_plus`` over the top skin?"""
    fm, fp = sorted(set(f_minus)), sorted(set(f_plus))
    if not fm or not fp:
        raise ValueError("both faces must be nonempty")
    bot, top = d.skin(MINUS).points, d.skin(PLUS).points
    dm = affine_rank([bot[i] for i in fm])
    dp = affine_rank([top[i] for i in fp])
    if dm + dp != d.dim - 2:
        raise DimensionMismatch(f"face dimensions {dm} + {dp} != {d.dim - 2}")
    e = d.dim - 1
    lp = LpProblem(e + 2)
    for pts, face, slot in ((bot, set(fm), e), (top, set(fp), e + 1)):
        for i, p in enumerate(pts):
            row = list(p) + [0, 0]
            row[slot] = -1
            if i in face:
                lp.add_eq(row, 0)
            else:
                lp.add_gt(row, 0)
    res = lp_max_margin(lp)
    if not res.strictly_feasible:
        return False, None
    x = res.assignment
    f = AffineFunctional(x[:e], 0)
    w = PairWitness(f, x[e], x[e + 1], res.margin)
    for pts, face, c in ((bot, set(fm), w.c_minus), (top, set(fp), w.c_plus)):
        for i, p in enumerate(pts):
            v = f(p) - c
            if (v != 0) if i in face else (v <= 0):
                raise ArithmeticError("pair witness failed exact re-check")
    return True, w


# ---------------------------------------------------------------------------
# Pencil sweep

def skin_ridges(d: Drum, side: str) -> dict[tuple, tuple]:
    """Ridge of a projected skin -> its two facets (local tuples)."""
    return ridges(d.skin(side))


def ridge_pencil_sweep(d: Drum, side: str, ridge: Sequence[int]) -> set[tuple]:
    """Minimum faces on the opposite skin of all ``a f1 + b f2`` with ``a, b > 0``,
    where ``f1, f2`` define the two facets of ``side``'s skin through ``ridge``."""
    side = _side(side)
    if d.skin(side).dim < 2:
        raise NotARidge("skins of dimension < 2 have no ridges")
    R = tuple(sorted(ridge))
    rmap = skin_ridges(d, side)
    if R not in rmap:
        raise NotARidge(f"{R} is not a ridge of skin {side}")
    F1, F2 = rmap[R]
    phi = facet_vertex_map(d, side)
    if phi[F1] == phi[F2]:
        return {(phi[F1],)}
    sk = d.skin(side)
    f1, f2 = sk.facet(F1).functional, sk.facet(F2).functional
    opp = d.skin(other(side)).points
    return pencil_min_faces([f1(p) for p in opp], [f2(p) for p in opp])


def pencil_min_faces(a: Sequence[Fraction], b: Sequence[Fraction]) -> set[tuple]:
    """Argmin sets of ``(1-t) a_v + t b_v`` over ``v`` for ``t`` in the open interval (0, 1)."""
    n = len(a)
    ts = set()
    for u in range(n):
        for v in range(u + 1, n):
            da, db = a[u] - a[v], b[u] - b[v]
            if da != db:
                t = Fraction(da) / (da - db)
                if 0 < t < 1:
                    ts.add(t)
    pts = sorted(ts)
    samples = list(pts)
    grid = [Fraction(0)] + pts + [Fraction(1)]
    samples += [(x + y) / 2 for x, y in zip(grid, grid[1:])]
    out = set()
    for t in samples:
        vals = [(1 - t) * x + t * y for x, y in zip(a, b)]
        m = min(vals)
        out.add(tuple(i for i, v in enumerate(vals) if v == m))
    return out


def phi_csv(d: Drum, side: str) -> str:
    lines = ["facet,vertex"]
    for F, v in facet_vertex_map(d, side).items():
        lines.append(f"{' '.join(map(str, F))},{v}")
    return "\n".join(lines) + "\n"
