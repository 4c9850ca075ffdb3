"""Polytopes given by vertices: exact facet enumeration, faces, facet-ridge graphs.

Points are rescaled once to a common integer lattice; all hyperplane tests
then run on Python ints.  Vertex subsets are handled internally as
bitmasks and exposed as sorted index tuples.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotARidge, NotFullDimensional
from .exactcore import (AffineFunctional, LpProblem, lp_max_margin, int_affine_rank,
                        normal_of_differences, rat_str, scale_to_integers, solve_linear, vec)
from .graph import Graph
from .symmetry import Group, IndexAction


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def map_mask(row: Sequence[int], mask: int) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << row[low.bit_length() - 1]
        mask ^= low
    return out


def _primitive(a: Sequence[int], c: int) -> tuple[tuple[int, ...], int]:
    g = math.gcd(*a, c)
    return tuple(x // g for x in a), c // g


@dataclass(frozen=True)
class FaceId:
    vertex_indices: tuple
    dim: int

    @property
    def mask(self) -> int:
        return to_mask(self.vertex_indices)

    def __len__(self) -> int:
        return len(self.vertex_indices)


@dataclass(frozen=True)
class Facet:
    """Facet vertex set with a functional that is 0 on it and > 0 on all other vertices."""

    vertex_indices: tuple
    functional: AffineFunctional

    @property
    def mask(self) -> int:
        return to_mask(self.vertex_indices)

    def face_id(self) -> FaceId:
        return FaceId(self.vertex_indices, self.functional.dim - 1)


class VertexPolytope:
    """Convex hull of a finite point list with stable vertex indices.

    ``group`` (optional) must permute the points; it is used for
    symmetry-reduced facet enumeration.
    """

    def __init__(self, points: Iterable[Sequence], group: Group | None = None):
        pts, seen = [], set()
        for p in points:
            q = vec(p)
            if q in seen:
                warnings.warn(f"duplicate point {q} removed", stacklevel=2)
                continue
            seen.add(q)
            pts.append(q)
        if not pts:
            raise ValueError("empty point list")
        d = len(pts[0])
        if any(len(p) != d for p in pts):
            raise DimensionMismatch("points of mixed dimension")
        self.points: list[tuple] = pts
        self.dim = d
        self.ints, self.scale = scale_to_integers(pts)
        self.rank = int_affine_rank(self.ints)
        self.group = group
        self.action = IndexAction(group, pts) if group is not None else None
        self.index = {p: i for i, p in enumerate(pts)}
        self._facets: dict[int, tuple] | None = None   # mask -> (a, c) integer functional
        self._ridges: dict[int, list[int]] = {}
        self._frg: Graph | None = None
        self._faces: dict[int, int] | None = None

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def full_dimensional(self) -> bool:
        return self.rank == self.dim

    def __repr__(self) -> str:
        return f"VertexPolytope(n={self.n}, dim={self.dim}, rank={self.rank})"

    # -- integer kernels ---------------------------------------------------

    def _hyperplane(self, idx: Sequence[int]):
        """Integer functional through ``len(idx) == d`` points, or None if degenerate."""
        p0 = self.ints[idx[0]]
        rows = [[a - b for a, b in zip(self.ints[i], p0)] for i in idx[1:]]
        a = normal_of_differences(rows)
        if not any(a):
            return None
        c = -sum(x * y for x, y in zip(a, p0))
        return a, c

    def _supporting(self, a, c):
        """Orient ``(a, c)`` to be >= 0 on every point; return (mask, a, c) or None."""
        pos = neg = False
        zero = 0
        for i, q in enumerate(self.ints):
            v = c
            for x, y in zip(a, q):
                v += x * y
            if v > 0:
                pos = True
            elif v < 0:
                neg = True
            else:
                zero |= 1 << i
            if pos and neg:
                return None
        if not pos and not neg:
            return None
        if neg:
            a, c = [-x for x in a], -c
        a, c = _primitive(a, c)
        return zero, a, c

    def _value(self, a, c, i) -> int:
        v = c
        for x, y in zip(a, self.ints[i]):
            v += x * y
        return v

    # -- facets ------------------------------------------------------------

    def _require_full(self):
        if not self.full_dimensional:
            raise NotFullDimensional(f"affine rank {self.rank} < ambient dimension {self.dim}")
        if self.dim < 1:
            raise NotFullDimensional("dimension 0")

    def _enumerate_brute(self, use_group: bool) -> dict:
        d, n = self.dim, self.n
        found: dict[int, tuple] = {}
        big: list[int] = []
        table = self.action.table if (use_group and self.action) else None
        for comb in combinations(range(n), d):
            s = to_mask(comb)
            if any(m & s == s for m in big):
                continue
            if table is not None and not _is_lex_min(table, comb):
                continue
            h = self._hyperplane(comb)
            if h is None:
                continue
            sup = self._supporting(*h)
            if sup is None:
                continue
            mask, a, c = sup
            if mask not in found:
                found[mask] = (a, c)
                if len(comb) < mask.bit_count():
                    big.append(mask)
        if table is not None:
            found = self._close_under_group(found)
        return found

    def _close_under_group(self, found: dict) -> dict:
        out = dict(found)
        for mask, (a, c) in found.items():
            for g, row in self.action.by_element.items():
                m = map_mask(row, mask)
                if m not in out:
                    out[m] = (tuple(g(a)), c)
        return out

    def _initial_facet(self):
        d = self.dim
        x0 = [q[0] for q in self.ints]
        a = [1] + [0] * (d - 1)
        c = -min(x0)
        while True:
            zero = [i for i in range(self.n) if self._value(a, c, i) == 0]
            r = int_affine_rank([self.ints[i] for i in zero])
            if r == d - 1:
                return to_mask(zero), tuple(a), c
            p0 = self.ints[zero[0]]
            rows = [[Fraction(x - y) for x, y in zip(self.ints[i], p0)] for i in zero[1:]]
            rows.append([Fraction(x) for x in a])
            kernel = solve_linear(rows, [0] * len(rows)).kernel
            h = kernel[0]
            den = math.lcm(*(x.denominator for x in h))
            h = [int(x * den) for x in h]
            h0 = -sum(x * y for x, y in zip(h, p0))
            vals = [(self._value(a, c, i), self._value(h, h0, i)) for i in range(self.n)]
            if not any(hv < 0 for _, hv in vals):
                h, h0 = [-x for x in h], -h0
                vals = [(fv, -hv) for fv, hv in vals]
            t = min(Fraction(fv, -hv) for fv, hv in vals if hv < 0)
            a = [t.denominator * x + t.numerator * y for x, y in zip(a, h)]
            c = t.denominator * c + t.numerator * h0
            a, c = _primitive(a, c)
            a = list(a)

    def _basis(self, mask: int) -> list[int]:
        """Affinely independent subset spanning the hull of ``mask``."""
        idx = bits(mask)
        chosen = [idx[0]]
        p0 = self.ints[idx[0]]
        rows: list[list[int]] = []
        for i in idx[1:]:
            cand = rows + [[x - y for x, y in zip(self.ints[i], p0)]]
            if int_affine_rank([p0] + [tuple(y + z for y, z in zip(r, p0)) for r in cand]) == len(cand):
                rows = cand
                chosen.append(i)
        return chosen

    def _wrap(self, fmask: int, rmask: int):
        """The facet sharing ridge ``rmask`` with facet ``fmask``."""
        u = bits(fmask & ~rmask)[0]
        basis = self._basis(rmask)
        if len(basis) != self.dim - 1:
            raise NotARidge("ridge candidate has the wrong affine rank")
        best = None
        for v in range(self.n):
            if fmask >> v & 1:
                continue
            if best is not None and self._value(a, c, v) >= 0:
                continue
            best = v
            a, c = self._hyperplane(basis + [v])
            if self._value(a, c, u) < 0:
                a, c = [-x for x in a], -c
        sup = self._supporting(a, c)
        if sup is None:
            raise ArithmeticError("gift-wrapping step produced a non-supporting hyperplane")
        return sup

    def _enumerate_flood(self, use_group: bool) -> dict:
        mask0, a0, c0 = self._initial_facet()
        found = {mask0: _primitive(a0, c0)}
        action = self.action if use_group else None
        if action:
            found = self._close_under_group(found)
        queue = [mask0]
        while queue:
            f = queue.pop()
            for r in self.ridges_of(f, found[f]):
                if r.bit_count() == 0:
                    continue
                g = self._wrap(f, r)
                if g[0] in found:
                    continue
                found[g[0]] = (g[1], g[2])
                if action:
                    found = self._close_under_group({g[0]: found[g[0]]}) | found
                queue.append(g[0])
        return found

    def ridges_of(self, fmask: int, functional=None) -> list[int]:
        """Vertex masks of the ridges of a facet (recursive for non-simplices)."""
        if fmask in self._ridges:
            return self._ridges[fmask]
        idx = bits(fmask)
        d = self.dim
        if len(idx) == d:
            out = [fmask & ~(1 << i) for i in idx]
        elif d == 1:
            out = [0]
        else:
            a = functional[0] if functional else self._facet_table()[fmask][0]
            j = next(t for t, x in enumerate(a) if x != 0)
            proj = [self.ints[i][:j] + self.ints[i][j + 1:] for i in idx]
            sub = VertexPolytope(proj)
            out = [to_mask(idx[t] for t in bits(m)) for m in sub._facet_table()]
        self._ridges[fmask] = out
        return out

    def _facet_table(self, method: str = "auto") -> dict:
        if self._facets is None:
            self._require_full()
            if self.dim == 1:
                lo = min(range(self.n), key=lambda i: self.ints[i][0])
                hi = max(range(self.n), key=lambda i: self.ints[i][0])
                self._facets = {1 << lo: ((1,), -self.ints[lo][0]), 1 << hi: ((-1,), self.ints[hi][0])}
            elif method == "brute":
                self._facets = self._enumerate_brute(use_group=True)
            elif method == "brute-nogroup":
                self._facets = self._enumerate_brute(use_group=False)
            elif method in ("auto", "flood"):
                self._facets = self._enumerate_flood(use_group=True)
            elif method == "flood-nogroup":
                self._facets = self._enumerate_flood(use_group=False)
            else:
                raise ValueError(f"unknown enumeration method {method!r}")
            self._facets = dict(sorted(self._facets.items(), key=lambda kv: bits(kv[0])))
        return self._facets

    def facets(self, method: str = "auto") -> list[Facet]:
        return [self._make_facet(m, a, c) for m, (a, c) in self._facet_table(method).items()]

    def facet_masks(self) -> list[int]:
        return list(self._facet_table())

    def _make_facet(self, mask, a, c) -> Facet:
        f = AffineFunctional(tuple(Fraction(x * self.scale) for x in a), Fraction(c)).primitive()
        return Facet(tuple(bits(mask)), f)

    def facet(self, vertex_indices: Iterable[int]) -> Facet:
        m = to_mask(vertex_indices)
        a, c = self._facet_table()[m]
        return self._make_facet(m, a, c)

    def is_facet(self, vertex_indices: Iterable[int]) -> bool:
        return to_mask(vertex_indices) in self._facet_table()

    def is_simplicial(self) -> bool:
        return all(m.bit_count() == self.dim for m in self._facet_table())

    # -- faces -------------------------------------------------------------

    def face_table(self) -> dict[int, int]:
        """All nonempty proper faces as ``mask -> dim`` (intersection closure of facets)."""
        if self._faces is None:
            fm = self.facet_masks()
            faces = {m: self.dim - 1 for m in fm}
            frontier = list(fm)
            while frontier:
                new = []
                for m in frontier:
                    for f in fm:
                        x = m & f
                        if x and x not in faces:
                            faces[x] = -1
                            new.append(x)
                frontier = new
            for m, dm in faces.items():
                if dm < 0:
                    faces[m] = int_affine_rank([self.ints[i] for i in bits(m)])
            self._faces = dict(sorted(faces.items(), key=lambda kv: (kv[1], bits(kv[0]))))
        return self._faces

    def face_dim(self, vertex_indices: Iterable[int]) -> int:
        m = to_mask(vertex_indices)
        if m == 0:
            return -1
        return int_affine_rank([self.ints[i] for i in bits(m)])

    def to_json(self) -> dict:
        return {
            "vertices": [[rat_str(c) for c in p] for p in self.points],
            "facets": [{"verts": list(f.vertex_indices), "functional": f.functional.to_json()}
                       for f in self.facets()],
        }


def _is_lex_min(table, comb: tuple) -> bool:
    for row in table:
        if tuple(sorted(row[i] for i in comb)) < comb:
            return False
    return True


# ---------------------------------------------------------------------------
# Module-level operations

def enumerate_facets(p: VertexPolytope, method: str = "auto") -> list[Facet]:
    """All facets with certified functionals.

    ``method``: ``"brute"`` (all d-subsets, symmetry filtered when a group is
    present), ``"flood"`` (adjacency walk from an initial facet), or
    ``"auto"`` (flood).  Variants ``*-nogroup`` ignore the symmetry group.
    """
    if p.dim < 2:
        raise NotFullDimensional("facet enumeration needs dimension >= 2")
    if method != "auto" and p._facets is not None:
        fresh = VertexPolytope(p.points, p.group)
        return fresh.facets(method)
    return p.facets(method)


def certify_face(p: VertexPolytope, subset: Iterable[int]) -> Facet | FaceId | None:
    """Exact face test by a max-margin LP; ``None`` means not a face."""
    sub = sorted(set(subset))
    if not sub:
        raise ValueError("empty subset")
    d = p.dim
    lp = LpProblem(d + 1)
    ss = set(sub)
    for i in range(p.n):
        row = list(p.points[i]) + [1]
        if i in ss:
            lp.add_eq(row, 0)
        else:
            lp.add_gt(row, 0)
    res = lp_max_margin(lp)
    if not res.strictly_feasible:
        return None
    f = AffineFunctional(res.assignment[:d], res.assignment[d])
    for i in range(p.n):
        v = f(p.points[i])
        assert (v == 0) if i in ss else (v > 0)
    dim = p.face_dim(sub)
    if dim == d - 1:
        return Facet(tuple(sub), f.primitive())
    return FaceId(tuple(sub), dim)


def faces_of_dim(p: VertexPolytope, j: int) -> list[FaceId]:
    if not 0 <= j <= p.dim - 1:
        raise ValueError(f"face dimension {j} out of range 0..{p.dim - 1}")
    return [FaceId(tuple(bits(m)), dm) for m, dm in p.face_table().items() if dm == j]


def facet_ridge_graph(p: VertexPolytope) -> Graph:
    """Nodes are facet vertex-index tuples; edges join facets sharing a ridge."""
    if p._frg is not None:
        return p._frg
    table = p._facet_table()
    ridge_map: dict[int, list[int]] = {}
    if p.action is not None:
        done = set()
        for m in table:
            if m in done:
                continue
            rs = p.ridges_of(m, table[m])
            for row in p.action.table:
                gm = map_mask(row, m)
                if gm not in done:
                    done.add(gm)
                    p._ridges[gm] = [map_mask(row, r) for r in rs]
    for m in table:
        for r in p.ridges_of(m, table[m]):
            ridge_map.setdefault(r, []).append(m)
    g = Graph(tuple(bits(m)) for m in table)
    for r, fs in ridge_map.items():
        if len(fs) != 2:
            raise ArithmeticError(f"ridge {bits(r)} lies in {len(fs)} facets")
        g.add_edge(tuple(bits(fs[0])), tuple(bits(fs[1])))
    p._frg = g
    return g


def ridges(p: VertexPolytope) -> dict[tuple, tuple]:
    """Ridge vertex tuple -> the two facets containing it."""
    facet_ridge_graph(p)
    out = {}
    for m in p._facet_table():
        for r in p._ridges[m]:
            out.setdefault(tuple(bits(r)), []).append(tuple(bits(m)))
    return {r: tuple(fs) for r, fs in out.items()}


def is_visible(p: VertexPolytope, f: Facet, point: Sequence) -> bool:
    if len(point) != p.dim:
        raise DimensionMismatch("point dimension differs from the polytope's")
    return f.functional(vec(point)) < 0


def graph_distance(g: Graph, a, b) -> int | None:
    """BFS distance; ``None`` when unreachable.  Unknown nodes raise KeyError."""
    if a not in g:
        raise KeyError(f"unknown node {a!r}")
    return g.distance(a, b)


def certify_vertices(p: VertexPolytope) -> list[int]:
    """Indices of points that are vertices, each certified by a strict minimiser."""
    out = []
    for i in range(p.n):
        lp = LpProblem(p.dim)
        for j in range(p.n):
            if j != i:
                lp.add_gt([x - y for x, y in zip(p.points[j], p.points[i])], 0)
        if lp_max_margin(lp).strictly_feasible:
            out.append(i)
    return out


def face_graph(p: VertexPolytope, include_empty: bool = True) -> Graph:
    """Nodes are proper faces (vertex tuples, ``()`` for the empty face); edges join
    faces ``F < G`` with ``dim G = dim F + 1``."""
    table = p.face_table()
    by_dim: dict[int, list[int]] = {}
    for m, dm in table.items():
        by_dim.setdefault(dm, []).append(m)
    g = Graph()
    if include_empty:
        g.add_node((), dim=-1)
    for m, dm in table.items():
        g.add_node(tuple(bits(m)), dim=dm)
    for dm, ms in by_dim.items():
        for m in ms:
            for big in by_dim.get(dm + 1, []):
                if m & big == m:
                    g.add_edge(tuple(bits(m)), tuple(bits(big)))
    if include_empty:
        for m in by_dim.get(0, []):
            g.add_edge((), tuple(bits(m)))
    return g
