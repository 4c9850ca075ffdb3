"""Constructors: the drums D_k, Santos' drum and arbitrary motif closures."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .drum import MINUS, PLUS, Drum
from .errors import ParamsInvalid, VertexCountMismatch
from .exactcore import rat, rat_str, vec
from .polytope import VertexPolytope, certify_vertices
from .symmetry import TAU, Group, gamma

U_MIN, U_MAX = Fraction(100), Fraction(102)
V_FLOOR = Fraction(75) / (1 - Fraction(75, 102))   # = 850/3
DEFAULT_V1 = Fraction(600)   # must stay below 750 for phi+(C_k) = n- when u_k = 102

SANTOS_MOTIF = ((18, 0, 0, 0, 1), (0, 0, 45, 0, 1), (15, 15, 0, 0, 1), (0, 0, 30, 30, 1), (10, 0, 0, 40, 1))
D1_MOTIF = ((0, 0, 3, 3, 1), (98, 0, 1, 0, 1), (100, 0, 0, 0, 1), (75, 75, 0, 0, 1))


@dataclass(frozen=True)
class FamilyParams:
    k: int
    a: tuple   # k+1 planar points (x, y)

    def __post_init__(self):
        object.__setattr__(self, "a", tuple((rat(x), rat(y)) for x, y in self.a))

    def to_json(self) -> dict:
        return {"k": self.k, "a": [[rat_str(x), rat_str(y)] for x, y in self.a]}

    @classmethod
    def from_json(cls, obj: dict) -> FamilyParams:
        return cls(int(obj["k"]), tuple((rat(x), rat(y)) for x, y in obj["a"]))


def default_params(k: int) -> FamilyParams:
    """Convex chain from (100, 0) to (75, 75) cut out by k lines ``x/u_i + y/v_i = 1``.

    ``u_i = 100 + 2(i-1)/(k-1)``, ``v_1 = 600``, ``v_k = 850/3``.  The interior
    vertices come from a strictly decreasing schedule of ratios ``x/y``
    (equivalently, of slopes of the dual chain ``(1/u_i, 1/v_i)``) scaled to
    hit ``v_k``; this keeps the chain monotone and convex for every ``k``.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ParamsInvalid(f"k must be a positive integer, got {k!r}")
    if k == 1:
        p = FamilyParams(1, ((100, 0), (75, 75)))
    else:
        alpha = [1 / (U_MIN + Fraction(2 * i, k - 1)) for i in range(k)]
        steps = [alpha[i] - alpha[i + 1] for i in range(k - 1)]
        weights = [2 * k - 1 - j for j in range(k - 1)]
        total = 1 / V_FLOOR - 1 / DEFAULT_V1
        scale = total / sum(w * s for w, s in zip(weights, steps))
        mids = [scale * w for w in weights]   # x/y of each interior vertex
        beta = [1 / DEFAULT_V1]
        for r, s in zip(mids, steps):
            beta.append(beta[-1] + r * s)
        # vertex a_{j+2} satisfies alpha_j x + beta_j y = 1 and x = r_j y
        pts = [(r / (alpha[j] * r + beta[j]), 1 / (alpha[j] * r + beta[j])) for j, r in enumerate(mids)]
        p = FamilyParams(k, ((100, 0), *pts, (75, 75)))
    rep = validate_params(p)
    if not rep.ok:
        raise ParamsInvalid("default parameters failed: " + ", ".join(rep.failures))
    return p


@dataclass
class ParamsReport:
    checks: dict = field(default_factory=dict)
    u: list = field(default_factory=list)
    v: list = field(default_factory=list)

    @property
    def failures(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": self.checks,
                "u": [rat_str(x) if x is not None else None for x in self.u],
                "v": [rat_str(x) if x is not None else None for x in self.v]}


def line_intercepts(p1, p2):
    """(x-intercept, y-intercept) of the line through two planar points; None if parallel."""
    (x1, y1), (x2, y2) = p1, p2
    u = x1 - y1 * (x2 - x1) / (y2 - y1) if y2 != y1 else None
    v = y1 - x1 * (y2 - y1) / (x2 - x1) if x2 != x1 else None
    return u, v


def validate_params(p: FamilyParams) -> ParamsReport:
    rep = ParamsReport()
    a = p.a
    c = rep.checks
    c["count"] = len(a) == p.k + 1 and p.k >= 1
    if not c["count"]:
        return rep
    c["endpoints"] = a[0] == (100, 0) and a[-1] == (75, 75)
    c["first_quadrant"] = (all(a[i][0] > a[i + 1][0] for i in range(p.k))
                           and all(a[i][1] < a[i + 1][1] for i in range(p.k)))
    turns = [(b[0] - a_[0]) * (c_[1] - a_[1]) - (b[1] - a_[1]) * (c_[0] - a_[0])
             for a_, b, c_ in zip(a, a[1:], a[2:])]
    c["convex_turns"] = all(t > 0 for t in turns) or all(t < 0 for t in turns)
    if len(set(a)) == len(a) and len(a) >= 2:
        c["convex_position"] = len(certify_vertices(VertexPolytope(a))) == len(a)
    else:
        c["convex_position"] = False
    for i in range(p.k):
        u, v = line_intercepts(a[i], a[i + 1])
        rep.u.append(u)
        rep.v.append(v)
    c["u_in_range"] = all(u is not None and U_MIN <= u <= U_MAX for u in rep.u)
    c["v_bound"] = all(v is not None and v >= V_FLOOR for v in rep.v)
    return rep


def gamma_closure(motif: Iterable[Sequence], group: Group | None = None) -> list[tuple]:
    group = group or gamma()
    return sorted({g(vec(p)) for p in motif for g in group})


class DkDrum(Drum):
    """D_k with named points ``m++, m+-, m-+, m--, p+, p-, a1 .. a{k+1}`` (top skin)."""

    def __init__(self, params: FamilyParams):
        self.k = params.k
        self.params = params
        named = {}
        for s3, s4, tag in ((1, 1, "++"), (1, -1, "+-"), (-1, 1, "-+"), (-1, -1, "--")):
            named["m" + tag] = vec((0, 0, 3 * s3, 3 * s4, 1))
        named["p+"] = vec((98, 0, 1, 0, 1))
        named["p-"] = vec((98, 0, -1, 0, 1))
        for i, (x, y) in enumerate(params.a, start=1):
            named[f"a{i}"] = vec((x, y, 0, 0, 1))
        self.named = named
        super().__init__(gamma_closure(named.values()), gamma())

    def top_local(self, name_or_point) -> int:
        pt = self.named[name_or_point] if isinstance(name_or_point, str) else vec(name_or_point)
        return self.local_idx[PLUS][self.polytope.index[pt]]

    def bottom_local(self, point) -> int:
        return self.local_idx[MINUS][self.polytope.index[vec(point)]]


def build_Dk(p: FamilyParams) -> DkDrum:
    rep = validate_params(p)
    if not rep.ok:
        raise ParamsInvalid("parameters violate: " + ", ".join(rep.failures))
    d = DkDrum(p)
    expect = 16 * p.k + 24
    if d.n != expect:
        raise VertexCountMismatch(f"{d.n} points, expected {expect}")
    pts = set(d.polytope.points)
    if {TAU(q) for q in d.polytope.points} != pts:
        raise ArithmeticError("point set is not tau-invariant")
    if {TAU(d.polytope.points[i]) for i in d.top_idx} != {d.polytope.points[i] for i in d.bottom_idx}:
        raise ArithmeticError("tau does not swap the skins")
    return d


def build_from_motif(motif: Iterable[Sequence], group: Group | None = None) -> Drum:
    pts = gamma_closure(motif, group)
    return Drum(pts, group or gamma())


def build_santos() -> Drum:
    return build_from_motif(SANTOS_MOTIF)


def load_motif(path: str) -> list[tuple]:
    with open(path) as fh:
        obj = json.load(fh)
    if isinstance(obj, dict):
        obj = obj["motif"]
    return [vec(p) for p in obj]


def load_params(path: str) -> FamilyParams:
    with open(path) as fh:
        return FamilyParams.from_json(json.load(fh))


def skin_vertices_certified(d: Drum) -> bool:
    """Every point is a vertex: on each skin the facets through it meet only in it."""
    for side in (PLUS, MINUS):
        sk = d.skin(side)
        masks = sk.facet_masks()
        full = (1 << sk.n) - 1
        for i in range(sk.n):
            inter = full
            for m in masks:
                if m >> i & 1:
                    inter &= m
            if inter != 1 << i:
                return False
    return True

