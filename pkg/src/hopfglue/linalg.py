"""Exact arbitrary-precision integer matrix arithmetic.

Everything here is computed over Python ints, so there is no overflow and
no rounding, ever.  Matrices are immutable values: operations return new
objects, equal matrices compare equal, and instances can be shared freely
between threads.

The module provides products, determinants, unimodular inverses, the
extended Euclidean algorithm, Smith normal form with its transformation
matrices, gcds of k-minors, and completions of primitive vectors to
determinant-one matrices.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations


class ShapeError(ValueError):
    """Operands have incompatible or invalid dimensions."""


class NotUnimodularError(ValueError):
    """The determinant is not +1 or -1."""


class NotPrimitiveError(ValueError):
    """The entries of an integer vector share a common divisor > 1."""


class IntMatrix:
    """Dense integer matrix with value semantics.

    Entries are stored row-major as a tuple of tuples; instances are
    immutable and hashable.  Indexing is 0-based: ``m[i, j]`` reads one
    entry, ``m.row(i)`` and ``m.col(j)`` return whole lines.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows):
        data = tuple(tuple(row) for row in rows)
        if not data or not data[0]:
            raise ShapeError("matrix needs at least one row and one column")
        width = len(data[0])
        for row in data:
            if len(row) != width:
                raise ShapeError("all rows must have the same length")
            for entry in row:
                if not isinstance(entry, int):
                    raise TypeError(
                        f"entries must be int, got {type(entry).__name__}"
                    )
        self._rows = data

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return len(self._rows[0])

    def __getitem__(self, key) -> int:
        i, j = key
        return self._rows[i][j]

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def col(self, j: int) -> tuple:
        return tuple(row[j] for row in self._rows)

    def to_lists(self) -> list:
        return [list(row) for row in self._rows]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self._rows))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return multiply(self, other)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-x for x in row] for row in self._rows])

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_lists()!r})"


class UnimodularMatrix:
    """A square integer matrix of determinant +1 or -1.

    The determinant is computed once at construction and kept; an exact
    integer inverse always exists (the adjugate divided by the determinant).
    """

    __slots__ = ("m", "det")

    def __init__(self, m):
        if not isinstance(m, IntMatrix):
            m = IntMatrix(m)
        if m.rows != m.cols:
            raise ShapeError("unimodular matrices must be square")
        d = determinant(m)
        if d not in (1, -1):
            raise NotUnimodularError(f"determinant is {d}, expected +1 or -1")
        self.m = m
        self.det = d

    def inverse(self) -> "UnimodularMatrix":
        return inverse_unimodular(self)

    def __matmul__(self, other):
        if isinstance(other, UnimodularMatrix):
            return UnimodularMatrix(self.m @ other.m)
        return self.m @ other

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnimodularMatrix):
            return NotImplemented
        return self.m == other.m

    def __hash__(self) -> int:
        return hash((UnimodularMatrix, self.m))

    def __repr__(self) -> str:
        return f"UnimodularMatrix({self.m.to_lists()!r})"


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form ``u @ a @ v == d`` of an input matrix ``a``.

    ``d`` has the shape of ``a``, is zero off the diagonal, and its diagonal
    entries are non-negative with each dividing the next.  ``u`` and ``v``
    are unimodular.
    """

    u: UnimodularMatrix
    d: IntMatrix
    v: UnimodularMatrix

    def diagonal(self) -> tuple:
        n = min(self.d.rows, self.d.cols)
        return tuple(self.d[i, i] for i in range(n))


def multiply(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact matrix product."""
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bt = list(zip(*[b.row(i) for i in range(b.rows)]))
    return IntMatrix(
        [
            [sum(x * y for x, y in zip(row, col)) for col in bt]
            for row in (a.row(i) for i in range(a.rows))
        ]
    )


def determinant(a: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if a.rows != a.cols:
        raise ShapeError("determinant needs a square matrix")
    n = a.rows
    if n == 1:
        return a[0, 0]
    m = a.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot_row is None:
                return 0
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Exact division: Bareiss guarantees prev divides this.
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inverse_unimodular(a: UnimodularMatrix) -> UnimodularMatrix:
    """Exact integer inverse: the adjugate times the determinant."""
    n = a.m.rows
    if n == 1:
        return UnimodularMatrix(a.m)
    rows = a.m.to_lists()
    cof = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = IntMatrix(
                [
                    [rows[r][c] for c in range(n) if c != j]
                    for r in range(n)
                    if r != i
                ]
            )
            cof[i][j] = (-1) ** (i + j) * determinant(minor)
    # adjugate = transpose of cofactors; dividing by det is multiplying,
    # since det is +1 or -1.
    inv = [[cof[j][i] * a.det for j in range(n)] for i in range(n)]
    return UnimodularMatrix(IntMatrix(inv))


def extended_gcd(a: int, b: int) -> tuple:
    """Return ``(g, x, y)`` with ``x*a + y*b == g`` and ``g == gcd(a, b)``.

    ``g`` is non-negative and ``gcd(0, 0) == 0`` with coefficients (0, 0).
    The coefficients are the ones produced by the classical Euclidean
    recursion on ``|a|, |b|`` (signs folded back in), so they are
    reproducible and have the usual small magnitudes.
    """
    if a == 0 and b == 0:
        return (0, 0, 0)
    g, x, y = _egcd(abs(a), abs(b))
    return (g, x if a >= 0 else -x, y if b >= 0 else -y)


def _egcd(a: int, b: int) -> tuple:
    # Iterative form of the classical recursion; a, b >= 0.
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


# --- Smith normal form -------------------------------------------------
#
# The working state is three mutable lists-of-lists (d, u, v) kept in the
# invariant u @ a @ v == d.  Row operations touch d and u, column
# operations touch d and v.


def _row_gcd_transform(d, u, t, i):
    """Left-multiply rows (t, i) by a det-1 transform making d[i][t] = 0."""
    a0, b0 = d[t][t], d[i][t]
    if b0 == 0:
        return
    if a0 != 0 and b0 % a0 == 0:
        q = b0 // a0
        d[i] = [x - q * y for x, y in zip(d[i], d[t])]
        u[i] = [x - q * y for x, y in zip(u[i], u[t])]
        return
    g, x, y = extended_gcd(a0, b0)
    aa, bb = a0 // g, b0 // g
    dt, di = d[t], d[i]
    d[t] = [x * p + y * q for p, q in zip(dt, di)]
    d[i] = [-bb * p + aa * q for p, q in zip(dt, di)]
    ut, ui = u[t], u[i]
    u[t] = [x * p + y * q for p, q in zip(ut, ui)]
    u[i] = [-bb * p + aa * q for p, q in zip(ut, ui)]


def _col_gcd_transform(d, v, t, j):
    """Right-multiply cols (t, j) by a det-1 transform making d[t][j] = 0."""
    a0, b0 = d[t][t], d[t][j]
    if b0 == 0:
        return
    if a0 != 0 and b0 % a0 == 0:
        q = b0 // a0
        for row in d:
            row[j] -= q * row[t]
        for row in v:
            row[j] -= q * row[t]
        return
    g, x, y = extended_gcd(a0, b0)
    aa, bb = a0 // g, b0 // g
    for row in d:
        ct, cj = row[t], row[j]
        row[t] = x * ct + y * cj
        row[j] = -bb * ct + aa * cj
    for row in v:
        ct, cj = row[t], row[j]
        row[t] = x * ct + y * cj
        row[j] = -bb * ct + aa * cj


def _move_pivot(d, u, v, t, m, n) -> bool:
    """Swap the smallest nonzero |entry| of the trailing block into (t, t).

    Ties break by row, then column.  Returns False when the block is zero.
    """
    best = None
    for i in range(t, m):
        for j in range(t, n):
            if d[i][j] != 0:
                key = (abs(d[i][j]), i, j)
                if best is None or key < best:
                    best = key
    if best is None:
        return False
    _, bi, bj = best
    if bi != t:
        d[t], d[bi] = d[bi], d[t]
        u[t], u[bi] = u[bi], u[t]
    if bj != t:
        for row in d:
            row[t], row[bj] = row[bj], row[t]
        for row in v:
            row[t], row[bj] = row[bj], row[t]
    return True


def _clear_position(d, u, v, t, m, n):
    """Zero out row t and column t beyond the pivot, alternating passes.

    Each general gcd transform replaces the pivot by a strict divisor, so
    the alternation terminates.
    """
    while True:
        for i in range(t + 1, m):
            if d[i][t]:
                _row_gcd_transform(d, u, t, i)
        for j in range(t + 1, n):
            if d[t][j]:
                _col_gcd_transform(d, v, t, j)
        if not any(d[i][t] for i in range(t + 1, m)) and not any(
            d[t][j] for j in range(t + 1, n)
        ):
            return


def smith_normal_form(a: IntMatrix) -> SnfResult:
    """Diagonalize ``a`` over the integers: ``u @ a @ v == d``.

    The diagonal of ``d`` is non-negative and each entry divides the next,
    so ``d`` is the unique Smith form of ``a``; the product of the first k
    diagonal entries equals the gcd of all k-minors of ``a``.
    """
    m, n = a.rows, a.cols
    d = a.to_lists()
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    limit = min(m, n)

    for t in range(limit):
        if not _move_pivot(d, u, v, t, m, n):
            break
        _clear_position(d, u, v, t, m, n)

    def fix_sign(i):
        if d[i][i] < 0:
            d[i] = [-x for x in d[i]]
            u[i] = [-x for x in u[i]]

    for i in range(limit):
        fix_sign(i)

    rank = sum(1 for i in range(limit) if d[i][i] != 0)
    for i in range(rank):
        for j in range(i + 1, rank):
            if d[j][j] % d[i][i] != 0:
                # Fold d[j][j] into column i, then re-clear: the pair
                # (d_i, d_j) becomes (gcd, lcm) and nothing else moves.
                for row in d:
                    row[i] += row[j]
                for row in v:
                    row[i] += row[j]
                _clear_position(d, u, v, i, m, n)
                fix_sign(i)
                fix_sign(j)

    return SnfResult(
        u=UnimodularMatrix(IntMatrix(u)),
        d=IntMatrix(d),
        v=UnimodularMatrix(IntMatrix(v)),
    )


def gcd_of_k_minors(a: IntMatrix, k: int) -> int:
    """Gcd of the determinants of all k x k submatrices of ``a``.

    Returns 0 when every k-minor vanishes (the gcd-of-nothing-but-zeros
    convention).
    """
    if not 1 <= k <= min(a.rows, a.cols):
        raise ShapeError(f"k={k} out of range for a {a.rows}x{a.cols} matrix")
    g = 0
    for rows_idx in combinations(range(a.rows), k):
        for cols_idx in combinations(range(a.cols), k):
            if k == 1:
                minor_det = a[rows_idx[0], cols_idx[0]]
            else:
                minor_det = determinant(
                    IntMatrix([[a[i, j] for j in cols_idx] for i in rows_idx])
                )
            g = math.gcd(g, minor_det)
    return g


def complete_primitive_to_sl3(v) -> UnimodularMatrix:
    """Complete a primitive integer triple to a determinant +1 matrix.

    The returned 3x3 matrix has ``v`` as its third column.  The first two
    columns are assembled from Bezout coefficients in two stages: first
    combine the leading pair of entries, then combine their gcd with the
    last entry.

    Raises NotPrimitiveError unless gcd of the three entries is 1.
    """
    a, b, p = v
    g1, x1, y1 = extended_gcd(a, b)
    g2, x2, y2 = extended_gcd(g1, p)
    if g2 != 1:
        raise NotPrimitiveError(f"triple {tuple(v)} is not primitive: gcd = {g2}")
    if g1 == 0:
        # a = b = 0 forces p = +1 or -1.
        if p == 1:
            return UnimodularMatrix(IntMatrix.identity(3))
        return UnimodularMatrix(IntMatrix([[0, 1, 0], [1, 0, 0], [0, 0, -1]]))
    ap, bp = a // g1, b // g1
    cols = (
        (-y1, x1, 0),
        (-y2 * ap, -y2 * bp, x2),
        (a, b, p),
    )
    mat = IntMatrix([[cols[j][i] for j in range(3)] for i in range(3)])
    result = UnimodularMatrix(mat)
    assert result.det == 1
    return result


def sl2_carry_to_e1(g: int, h: int) -> UnimodularMatrix:
    """A 2x2 determinant +1 matrix ``u`` with ``u @ (g, h) == (1, 0)``.

    Built as [[x, y], [-h, g]] from Bezout coefficients x*g + y*h = 1;
    requires gcd(g, h) = 1.
    """
    g0, x, y = extended_gcd(g, h)
    if g0 != 1:
        raise NotPrimitiveError(f"gcd({g}, {h}) = {g0}, expected 1")
    return UnimodularMatrix(IntMatrix([[x, y], [-h, g]]))


def random_sl3(seed: int, word_length: int) -> UnimodularMatrix:
    """Deterministic pseudo-random element of the 3x3 determinant-1 group.

    The result is a product of ``word_length`` elementary row-addition
    matrices (and their inverses) drawn from a generator seeded with
    ``seed``; the same seed always yields the same matrix.
    """
    rng = random.Random(seed)
    m = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    for _ in range(word_length):
        i, j = rng.sample(range(3), 2)
        s = rng.choice((1, -1))
        m[i] = [x + s * y for x, y in zip(m[i], m[j])]
    return UnimodularMatrix(IntMatrix(m))
