"""Signed permutation groups acting on coordinate vectors and vertex indices."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotAVertexPermutation


@dataclass(frozen=True, order=True)
class SignedPerm:
    """Map ``v -> w`` with ``w[perm[i]] = signs[perm[i]] * v[i]`` (0-based).

    The coordinate ``v[i]`` is moved to position ``perm[i]`` and the sign
    vector is then applied to the result.
    """

    perm: tuple
    signs: tuple

    def __post_init__(self):
        if len(self.perm) != len(self.signs):
            raise DimensionMismatch("perm and signs differ in length")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a permutation")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @classmethod
    def identity(cls, d: int) -> SignedPerm:
        return cls(tuple(range(d)), (1,) * d)

    @classmethod
    def from_one_based(cls, perm: Sequence[int], signs: Sequence[int] | None = None) -> SignedPerm:
        return cls(tuple(p - 1 for p in perm), tuple(signs) if signs else (1,) * len(perm))

    @property
    def dim(self) -> int:
        return len(self.perm)

    def __call__(self, v: Sequence):
        if len(v) != self.dim:
            raise DimensionMismatch(f"element of dim {self.dim} applied to a vector of dim {len(v)}")
        w = [None] * self.dim
        for i, x in enumerate(v):
            w[self.perm[i]] = x
        return tuple(s * x for s, x in zip(self.signs, w))

    def __mul__(self, other: SignedPerm) -> SignedPerm:
        """``(self * other)(v) == self(other(v))``."""
        if other.dim != self.dim:
            raise DimensionMismatch("composing elements of different dimension")
        perm = tuple(self.perm[other.perm[i]] for i in range(self.dim))
        signs = [0] * self.dim
        for j in range(self.dim):
            # position j of other's output lands at self.perm[j]
            signs[self.perm[j]] = self.signs[self.perm[j]] * other.signs[j]
        return SignedPerm(perm, tuple(signs))

    def inverse(self) -> SignedPerm:
        inv = [0] * self.dim
        for i, p in enumerate(self.perm):
            inv[p] = i
        # v = g^{-1}(w): v[i] = signs[perm[i]] * w[perm[i]]
        signs = tuple(self.signs[self.perm[i]] for i in range(self.dim))
        return SignedPerm(tuple(inv), signs)

    def is_identity(self) -> bool:
        return self == SignedPerm.identity(self.dim)

    def to_json(self) -> dict:
        return {"perm": [p + 1 for p in self.perm], "signs": list(self.signs)}

    @classmethod
    def from_json(cls, obj: dict) -> SignedPerm:
        return cls.from_one_based(obj["perm"], obj["signs"])


class Group:
    """A finite group of signed permutations, fully materialised."""

    def __init__(self, elements: Iterable[SignedPerm], generators: Sequence[SignedPerm] = ()):
        self.elements = tuple(sorted(set(elements)))
        self.generators = tuple(generators)
        self._set = frozenset(self.elements)
        dims = {g.dim for g in self.elements}
        if len(dims) != 1:
            raise DimensionMismatch("group elements of mixed dimension")
        self.dim = dims.pop()

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._set

    def __eq__(self, other) -> bool:
        return isinstance(other, Group) and self._set == other._set

    def __hash__(self) -> int:
        return hash(self._set)

    def __repr__(self) -> str:
        return f"Group(order={self.order}, dim={self.dim})"

    def is_closed(self) -> bool:
        return all(g * h in self._set for g in self.elements for h in self.elements)

    def subgroup(self, predicate) -> Group:
        return Group([g for g in self.elements if predicate(g)])


def generate_group(generators: Sequence[SignedPerm]) -> Group:
    if not generators:
        raise ValueError("need at least one generator")
    d = generators[0].dim
    if any(g.dim != d for g in generators):
        raise DimensionMismatch("generators act on different dimensions")
    ident = SignedPerm.identity(d)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = g * x
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return Group(seen, generators)


def orbit(group: Group, point: Sequence) -> set:
    return {g(tuple(point)) for g in group}


def stabilizer(group: Group, point: Sequence) -> Group:
    p = tuple(point)
    return group.subgroup(lambda g: g(p) == p)


def setwise_stabilizer(group: Group, subset: Iterable[Sequence]) -> Group:
    s = frozenset(tuple(p) for p in subset)
    return group.subgroup(lambda g: frozenset(g(p) for p in s) == s)


# ---------------------------------------------------------------------------
# Named elements of the drum group (dimension 5)

def eps(i: int, d: int = 5) -> SignedPerm:
    """Sign change of the ``i``-th coordinate (1-based)."""
    signs = [1] * d
    signs[i - 1] = -1
    return SignedPerm(tuple(range(d)), tuple(signs))


TAU = SignedPerm.from_one_based((3, 4, 2, 1, 5), (1, 1, 1, 1, -1))
SIGMA = TAU * TAU


@lru_cache(maxsize=None)
def gamma() -> Group:
    return generate_group([eps(1), eps(2), eps(3), eps(4), TAU])


@lru_cache(maxsize=None)
def gamma_plus() -> Group:
    return generate_group([SIGMA, eps(1), eps(2), eps(3), eps(4)])


@lru_cache(maxsize=None)
def sign_flips() -> Group:
    return generate_group([eps(1), eps(2), eps(3), eps(4)])


# ---------------------------------------------------------------------------
# Induced action on vertex indices

class IndexAction:
    """Permutation tables of a group acting on an indexed point list."""

    def __init__(self, group: Group, points: Sequence[Sequence]):
        pts = [tuple(p) for p in points]
        index = {p: i for i, p in enumerate(pts)}
        table = []
        for g in group:
            row = []
            for p in pts:
                j = index.get(g(p))
                if j is None:
                    raise NotAVertexPermutation(f"{g.to_json()} maps {p} outside the vertex set")
                row.append(j)
            table.append(tuple(row))
        self.group = group
        self.n = len(pts)
        self.table = tuple(table)
        self.by_element = dict(zip(group.elements, self.table))

    def image(self, g: SignedPerm, subset: Iterable[int]) -> frozenset:
        row = self.by_element[g]
        return frozenset(row[i] for i in subset)

    def orbit(self, subset: Iterable[int]) -> set[frozenset]:
        s = tuple(subset)
        return {frozenset(row[i] for i in s) for row in self.table}

    def stabilizer(self, subset: Iterable[int]) -> Group:
        s = frozenset(subset)
        return Group([g for g, row in self.by_element.items() if frozenset(row[i] for i in s) == s])

    def canonical(self, subset: Iterable[int]) -> tuple:
        return canonical_subset(self, subset)

    def restrict(self, subgroup: Group) -> IndexAction:
        new = object.__new__(IndexAction)
        new.group = subgroup
        new.n = self.n
        new.by_element = {g: self.by_element[g] for g in subgroup}
        new.table = tuple(new.by_element[g] for g in subgroup)
        return new


def canonical_subset(action: IndexAction, vertex_indices: Iterable[int]) -> tuple:
    """Lexicographically least sorted image of the subset under the group."""
    s = tuple(vertex_indices)
    for i in s:
        if not 0 <= i < action.n:
            raise IndexError(f"vertex index {i} out of range 0..{action.n - 1}")
    return min(tuple(sorted(row[i] for i in s)) for row in action.table)
