"""Exact rational arithmetic, linear algebra and a max-margin LP solver.

Everything here works over :class:`fractions.Fraction`; there is no
floating point anywhere in the package.  Heavy geometric loops use the
integer helpers (``scale_to_integers``, ``int_det``, ``int_rank``,
``normal_of_differences``) which operate on points rescaled by a common
denominator, so that they can run on plain Python ints.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, MalformedProblem, NoSolution

Rat = Fraction
Vec = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {x!r} to an exact rational (floats are not accepted)")


def vec(coords: Iterable) -> tuple:
    return tuple(rat(c) for c in coords)


def rat_str(q: Fraction) -> str:
    q = rat(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def vec_str(v: Sequence) -> list[str]:
    return [rat_str(c) for c in v]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


@dataclass(frozen=True)
class AffineFunctional:
    """``f(v) = linear . v + constant``."""

    linear: tuple
    constant: Fraction = ZERO

    def __post_init__(self):
        object.__setattr__(self, "linear", vec(self.linear))
        object.__setattr__(self, "constant", rat(self.constant))

    @property
    def dim(self) -> int:
        return len(self.linear)

    def __call__(self, v: Sequence) -> Fraction:
        if len(v) != len(self.linear):
            raise DimensionMismatch(f"functional of dim {self.dim} evaluated at a point of dim {len(v)}")
        return dot(self.linear, v) + self.constant

    def __add__(self, other: AffineFunctional) -> AffineFunctional:
        return AffineFunctional(tuple(a + b for a, b in zip(self.linear, other.linear)),
                                self.constant + other.constant)

    def scaled(self, s) -> AffineFunctional:
        s = rat(s)
        return AffineFunctional(tuple(s * a for a in self.linear), s * self.constant)

    def primitive(self) -> AffineFunctional:
        """Positive multiple with coprime integer coefficients."""
        coeffs = list(self.linear) + [self.constant]
        den = math.lcm(*(c.denominator for c in coeffs))
        ints = [int(c * den) for c in coeffs]
        g = math.gcd(*ints)
        if g == 0:
            return self
        return AffineFunctional(tuple(Fraction(c // g) for c in ints[:-1]), Fraction(ints[-1] // g))

    def is_positive_multiple_of(self, other: AffineFunctional) -> bool:
        return self.primitive() == other.primitive()

    def to_json(self) -> dict:
        return {"linear": vec_str(self.linear), "constant": rat_str(self.constant)}


# ---------------------------------------------------------------------------
# Linear systems over Q

@dataclass(frozen=True)
class LinearSolution:
    """Solution set ``particular + span(kernel)`` of a consistent system."""

    particular: tuple
    kernel: tuple = ()

    @property
    def unique(self) -> bool:
        return not self.kernel


def _rref(rows: list[list[Fraction]], ncols: int):
    """In-place reduced row echelon form; returns pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence) -> LinearSolution:
    """Solve ``matrix @ x = rhs`` exactly.

    Returns the particular solution with all free variables set to zero and
    a basis of the kernel.  Raises :class:`NoSolution` for inconsistent
    systems and :class:`DimensionMismatch` for ragged input.
    """
    if len(matrix) != len(rhs):
        raise DimensionMismatch(f"{len(matrix)} rows but {len(rhs)} right-hand sides")
    if not matrix:
        raise DimensionMismatch("empty matrix has no column count")
    n = len(matrix[0])
    if any(len(row) != n for row in matrix):
        raise DimensionMismatch("ragged matrix")
    aug = [[rat(a) for a in row] + [rat(b)] for row, b in zip(matrix, rhs)]
    pivots = _rref(aug, n)
    for row in aug[len(pivots):]:
        if row[n] != 0:
            raise NoSolution("inconsistent linear system")
    x = [ZERO] * n
    for i, c in enumerate(pivots):
        x[c] = aug[i][n]
    free = [c for c in range(n) if c not in set(pivots)]
    kernel = []
    for fc in free:
        k = [ZERO] * n
        k[fc] = ONE
        for i, c in enumerate(pivots):
            k[c] = -aug[i][fc]
        kernel.append(tuple(k))
    sol = LinearSolution(tuple(x), tuple(kernel))
    for row, b in zip(matrix, rhs):
        assert dot(vec(row), sol.particular) == rat(b)
        for k in sol.kernel:
            assert dot(vec(row), k) == 0
    return sol


# ---------------------------------------------------------------------------
# Integer kernels for the hot loops

def scale_to_integers(points: Sequence[Sequence]) -> tuple[list[tuple[int, ...]], int]:
    """Multiply every coordinate by the lcm of all denominators."""
    den = 1
    for p in points:
        for c in p:
            den = math.lcm(den, rat(c).denominator)
    return [tuple(int(rat(c) * den) for c in p) for p in points], den


def int_det(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = m
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    # Bareiss fraction-free elimination
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            sw = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if sw is None:
                return 0
            a[k], a[sw] = a[sw], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 0
    a = [list(r) for r in rows]
    ncols = len(a[0])
    rank = 0
    for c in range(ncols):
        pr = next((i for i in range(rank, len(a)) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[rank], a[pr] = a[pr], a[rank]
        piv = a[rank]
        for i in range(rank + 1, len(a)):
            f = a[i][c]
            if f:
                p = piv[c]
                a[i] = [x * p - f * y for x, y in zip(a[i], piv)]
        rank += 1
        if rank == len(a):
            break
    return rank


def int_affine_rank(points: Sequence[Sequence[int]]) -> int:
    p0 = points[0]
    return int_rank([[a - b for a, b in zip(q, p0)] for q in points[1:]])


def normal_of_differences(rows: Sequence[Sequence[int]]) -> list[int]:
    """Generalised cross product of ``d-1`` integer vectors in ``Z^d``.

    The result is orthogonal to every row and is zero exactly when the rows
    are linearly dependent.
    """
    d = len(rows) + 1
    out = []
    for j in range(d):
        minor = [r[:j] + r[j + 1:] for r in rows]
        v = int_det(minor)
        out.append(-v if j % 2 else v)
    return out


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of a nonempty point list."""
    if not points:
        raise ValueError("affine_rank of an empty point list")
    d = len(points[0])
    if any(len(p) != d for p in points):
        raise DimensionMismatch("points of mixed dimension")
    ints, _ = scale_to_integers(points)
    return int_affine_rank(ints)


# ---------------------------------------------------------------------------
# Simplex method (dictionary form, Bland's rule)

class LpStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


class _Dictionary:
    """``x_B = b - A x_N``, ``z = z0 + c . x_N`` with integer variable labels."""

    def __init__(self, a, b, c, basic, nonbasic):
        self.a, self.b, self.c = a, b, c
        self.z0 = ZERO
        self.basic, self.nonbasic = basic, nonbasic

    def pivot(self, r: int, e: int) -> None:
        a, b, c = self.a, self.b, self.c
        row = a[r]
        piv = row[e]
        inv = 1 / piv
        new_row = [x * inv for x in row]
        new_row[e] = inv
        br = b[r] * inv
        a[r], b[r] = new_row, br
        for i in range(len(a)):
            if i == r:
                continue
            ai = a[i]
            f = ai[e]
            if f == 0:
                continue
            for j, x in enumerate(new_row):
                if x:
                    ai[j] -= f * x
            ai[e] = -f * inv
            b[i] -= f * br
        ce = c[e]
        if ce:
            self.z0 += ce * br
            for j, x in enumerate(new_row):
                if x:
                    c[j] -= ce * x
            c[e] = -ce * inv
        self.basic[r], self.nonbasic[e] = self.nonbasic[e], self.basic[r]

    def run(self) -> bool:
        """Bland's rule iterations; returns False iff unbounded."""
        while True:
            cand = [(self.nonbasic[j], j) for j, cj in enumerate(self.c) if cj > 0]
            if not cand:
                return True
            _, e = min(cand)
            best = None
            for i, row in enumerate(self.a):
                if row[e] > 0:
                    key = (self.b[i] / row[e], self.basic[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], e)


def simplex_max(c: Sequence, a: Sequence[Sequence], b: Sequence):
    """Maximise ``c.x`` subject to ``a x <= b``, ``x >= 0``.

    Returns ``(status, value, x)``.  Two-phase method with an auxiliary
    variable for infeasible starts; Bland's rule in both phases.
    """
    m, n = len(a), len(c)
    A = [[rat(x) for x in row] for row in a]
    B = [rat(x) for x in b]
    C = [rat(x) for x in c]
    if any(len(row) != n for row in A):
        raise MalformedProblem("constraint row length differs from objective length")
    basic = list(range(n, n + m))
    if m and min(B) < 0:
        aux = n + m  # label of the auxiliary variable
        D = _Dictionary([row + [Fraction(-1)] for row in A], B[:], [ZERO] * n + [Fraction(-1)],
                        basic, list(range(n)) + [aux])
        r = min(range(m), key=lambda i: (B[i], i))
        D.pivot(r, n)
        D.run()
        if D.z0 < 0:
            return LpStatus.INFEASIBLE, None, None
        if aux in D.basic:
            r = D.basic.index(aux)
            e = next((j for j, x in enumerate(D.a[r]) if x != 0 and D.nonbasic[j] != aux), None)
            if e is None:  # redundant row
                del D.a[r], D.b[r], D.basic[r]
            else:
                D.pivot(r, e)
        col = D.nonbasic.index(aux)
        for row in D.a:
            del row[col]
        del D.nonbasic[col]
        # re-express the true objective in the current nonbasic variables
        newc = [ZERO] * n
        z0 = ZERO
        pos = {v: j for j, v in enumerate(D.nonbasic)}
        for v in range(n):
            if C[v] == 0:
                continue
            if v in pos:
                newc[pos[v]] += C[v]
            else:
                i = D.basic.index(v)
                z0 += C[v] * D.b[i]
                for j, x in enumerate(D.a[i]):
                    newc[j] -= C[v] * x
        D.c, D.z0 = newc, z0
    else:
        D = _Dictionary(A, B, C[:], basic, list(range(n)))
    if not D.run():
        return LpStatus.UNBOUNDED, None, None
    x = [ZERO] * n
    for i, v in enumerate(D.basic):
        if v < n:
            x[v] = D.b[i]
    return LpStatus.OPTIMAL, D.z0, x


# ---------------------------------------------------------------------------
# Max-margin feasibility

@dataclass
class LpProblem:
    """Feasibility problem with strict inequalities realised as a margin.

    ``equalities``: ``row . x == rhs``; ``inequalities``: ``row . x >= rhs``;
    ``strict``: ``row . x >= rhs + delta``.  The solver maximises ``delta``
    subject to ``delta <= 1``; the strict system is feasible iff the
    optimum is positive.
    """

    n_vars: int
    equalities: list = field(default_factory=list)
    inequalities: list = field(default_factory=list)
    strict: list = field(default_factory=list)

    def add_eq(self, row, rhs=0):
        self.equalities.append((row, rhs))

    def add_ge(self, row, rhs=0):
        self.inequalities.append((row, rhs))

    def add_gt(self, row, rhs=0):
        self.strict.append((row, rhs))

    def _check(self):
        for kind in (self.equalities, self.inequalities, self.strict):
            for row, _ in kind:
                if len(row) != self.n_vars:
                    raise MalformedProblem(f"row of length {len(row)} in a {self.n_vars}-variable problem")


@dataclass(frozen=True)
class LpResult:
    status: LpStatus
    margin: Fraction | None = None
    assignment: tuple | None = None

    @property
    def strictly_feasible(self) -> bool:
        return self.status is LpStatus.OPTIMAL and self.margin > 0


def lp_max_margin(problem: LpProblem) -> LpResult:
    problem._check()
    n = problem.n_vars
    eqs = [(vec(r), rat(b)) for r, b in problem.equalities]
    weak = [(vec(r), rat(b)) for r, b in problem.inequalities]
    strict = [(vec(r), rat(b)) for r, b in problem.strict]

    if eqs:
        try:
            sol = solve_linear([r for r, _ in eqs], [b for _, b in eqs])
        except NoSolution:
            return LpResult(LpStatus.INFEASIBLE)
        x0, kernel = list(sol.particular), list(sol.kernel)
    else:
        x0 = [ZERO] * n
        kernel = [tuple(ONE if i == j else ZERO for i in range(n)) for j in range(n)]

    k = len(kernel)
    # reduced variables: y (free, split in two) then delta (free, split in two)
    rows, rhs = [], []
    for (r, b), is_strict in [(w, False) for w in weak] + [(s, True) for s in strict]:
        coef = [dot(r, kv) for kv in kernel]
        slack = dot(r, x0) - b     # need coef . y (- delta) >= -slack
        if not any(coef) and not is_strict:
            if slack < 0:
                return LpResult(LpStatus.INFEASIBLE)
            continue
        row = []
        for cf in coef:
            row += [-cf, cf]
        row += [ONE, -ONE] if is_strict else [ZERO, ZERO]
        rows.append(row)
        rhs.append(slack)
    rows.append([ZERO] * (2 * k) + [ONE, -ONE])
    rhs.append(ONE)
    obj = [ZERO] * (2 * k) + [ONE, -ONE]
    status, value, x = simplex_max(obj, rows, rhs)
    if status is not LpStatus.OPTIMAL:
        return LpResult(status)
    y = [x[2 * j] - x[2 * j + 1] for j in range(k)]
    delta = x[2 * k] - x[2 * k + 1]
    assign = tuple(x0[i] + sum(y[j] * kernel[j][i] for j in range(k)) for i in range(n))
    for r, b in eqs:
        if dot(r, assign) != b:
            raise ArithmeticError("LP assignment violates an equality")
    for r, b in weak:
        if dot(r, assign) < b:
            raise ArithmeticError("LP assignment violates an inequality")
    for r, b in strict:
        if dot(r, assign) < b + delta:
            raise ArithmeticError("LP assignment violates a margin inequality")
    return LpResult(LpStatus.OPTIMAL, delta, assign)
