"""Dense exact linear algebra over Q(zeta_n).

Matrices are lists of rows of CycNum values, all of one order.
"""
from __future__ import annotations

from .cyclo import CycNum, common_order

Matrix = list[list[CycNum]]


def zeros(rows: int, cols: int, order: int) -> Matrix:
    z = CycNum.rational(0, order)
    return [[z] * cols for _ in range(rows)]


def identity(n: int, order: int) -> Matrix:
    z, one = CycNum.rational(0, order), CycNum.rational(1, order)
    return [[one if i == j else z for j in range(n)] for i in range(n)]


def matrix_order(m) -> int:
    return common_order(*(x.order for row in m for x in row))


def lift_matrix(m, order: int) -> Matrix:
    return [[x.lift(order) for x in row] for row in m]


def mat_mul(a, b) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(m):
            acc = None
            for t in range(k):
                x = ai[t]
                if x.is_zero():
                    continue
                y = b[t][j]
                if y.is_zero():
                    continue
                acc = x * y if acc is None else acc + x * y
            row.append(acc if acc is not None else CycNum.rational(0, ai[0].order))
        out.append(row)
    return out


def mat_vec(a, v) -> list[CycNum]:
    return [row[0] for row in mat_mul(a, [[x] for x in v])]


def mat_sub(a, b) -> Matrix:
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_scale(a, c) -> Matrix:
    return [[x * c for x in r] for r in a]


def transpose(a) -> Matrix:
    return [list(col) for col in zip(*a)]


def rref(a) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(r) for r in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if not m[i][c].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y if not y.is_zero() else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a) -> int:
    if not a:
        return 0
    return len(rref(a)[1])


def nullspace(a, cols: int | None = None, order: int | None = None) -> list[list[CycNum]]:
    """Basis of {x : a x = 0} as a list of vectors."""
    if not a:
        if cols is None or order is None:
            raise ValueError("empty matrix needs explicit shape")
        return [row for row in identity(cols, order)]
    cols = len(a[0])
    order = a[0][0].order
    m, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    zero, one = CycNum.rational(0, order), CycNum.rational(1, order)
    basis = []
    for f in free:
        v = [zero] * cols
        v[f] = one
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][f]
        basis.append(v)
    return basis


def determinant(a) -> CycNum:
    m = [list(r) for r in a]
    n = len(m)
    order = m[0][0].order
    det = CycNum.rational(1, order)
    for c in range(n):
        piv = next((i for i in range(c, n) if not m[i][c].is_zero()), None)
        if piv is None:
            return CycNum.rational(0, order)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c]
        inv = m[c][c].inverse()
        for i in range(c + 1, n):
            if not m[i][c].is_zero():
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def inverse(a) -> Matrix:
    n = len(a)
    order = a[0][0].order
    aug = [list(r) + e for r, e in zip(a, identity(n, order))]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in m]


class EchelonBasis:
    """Incrementally maintained echelon basis of a subspace of K^n."""

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[list[CycNum]] = []
        self.pivots: list[int] = []

    def reduce(self, v):
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            f = v[pc]
            if not f.is_zero():
                v = [x - f * y if not y.is_zero() else x for x, y in zip(v, row)]
        return v

    def add(self, v) -> bool:
        """Insert v; return True when it enlarged the span."""
        v = self.reduce(v)
        pc = next((i for i, x in enumerate(v) if not x.is_zero()), None)
        if pc is None:
            return False
        inv = v[pc].inverse()
        v = [x * inv for x in v]
        self.rows.append(v)
        self.pivots.append(pc)
        return True

    def __len__(self) -> int:
        return len(self.rows)
