"""Projective matrices: elements of PGL(p) over cyclotomic fields.

A ProjMat stores the representative whose first nonzero entry (row-major) is 1,
so equality and hashing of projective classes reduce to entrywise comparison.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .cyclo import CycNum, common_order, root_of_unity


class OrderOverflow(ArithmeticError):
    """No power up to the cap is the identity."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def default_order(p: int, level: int = 1) -> int:
    """Smallest cyclotomic order holding xi = zeta_p and the level-th roots of unity."""
    return common_order(p, level)


def _as_cyc(x, order: int) -> CycNum:
    if isinstance(x, CycNum):
        return x
    return CycNum.rational(Fraction(x), order)


class ProjMat:
    """A p x p invertible matrix modulo scalars."""

    __slots__ = ("p", "order", "entries", "_hash")

    def __init__(self, rows: Sequence[Sequence], order: int | None = None):
        p = len(rows)
        if p == 0 or any(len(r) != p for r in rows):
            raise ValueError("matrix must be square and nonempty")
        orders = [x.order for r in rows for x in r if isinstance(x, CycNum)]
        n = common_order(order or 1, *orders)
        m = [[_as_cyc(x, n).lift(n) for x in r] for r in rows]
        lead = next((x for r in m for x in r if not x.is_zero()), None)
        if lead is None:
            raise ValueError("zero matrix is not invertible")
        if lead != 1:
            inv = lead.inverse()
            m = [[x * inv for x in r] for r in m]
        self.p = p
        self.order = n
        self.entries = tuple(tuple(r) for r in m)
        self._hash = None

    @classmethod
    def _trusted(cls, entries, order: int) -> "ProjMat":
        obj = cls.__new__(cls)
        obj.p = len(entries)
        obj.order = order
        obj.entries = entries
        obj._hash = None
        return obj

    # ------------------------------------------------------------------ basics
    def rows(self) -> list[list[CycNum]]:
        return [list(r) for r in self.entries]

    def lift(self, order: int) -> "ProjMat":
        if order == self.order:
            return self
        return ProjMat._trusted(tuple(tuple(x.lift(order) for x in r) for r in self.entries), order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjMat):
            return NotImplemented
        return self.p == other.p and self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.entries)
        return self._hash

    def __repr__(self) -> str:
        return f"ProjMat(p={self.p}, order={self.order}, {[list(r) for r in self.entries]})"

    # ------------------------------------------------------------------ group operations
    def __mul__(self, other: "ProjMat") -> "ProjMat":
        if not isinstance(other, ProjMat):
            return NotImplemented
        if other.p != self.p:
            raise ValueError("dimension mismatch")
        n = common_order(self.order, other.order)
        a, b = self.lift(n), other.lift(n)
        return ProjMat(linalg.mat_mul(a.entries, b.entries), n)

    def inverse(self) -> "ProjMat":
        return ProjMat(linalg.inverse(self.rows()), self.order)

    def __pow__(self, e: int) -> "ProjMat":
        if e < 0:
            return self.inverse() ** (-e)
        result = identity(self.p, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate_by(self, g: "ProjMat") -> "ProjMat":
        """g * self * g^-1."""
        return g * self * g.inverse()

    def det(self) -> CycNum:
        """Determinant of the canonical representative."""
        return linalg.determinant(self.rows())

    # ------------------------------------------------------------------ shape queries
    def is_identity(self) -> bool:
        return all((x == 1) if i == j else x.is_zero()
                   for i, r in enumerate(self.entries) for j, x in enumerate(r))

    def is_diagonal(self) -> bool:
        return all(x.is_zero() for i, r in enumerate(self.entries) for j, x in enumerate(r) if i != j)

    def diagonal(self) -> list[CycNum]:
        return [self.entries[i][i] for i in range(self.p)]

    def monomial_shift(self) -> int | None:
        """s if the matrix is (diagonal) * M_c^s, i.e. supported exactly on (i+s, i); else None."""
        p = self.p
        for s in range(p):
            if all((not x.is_zero()) == ((i - j) % p == s)
                   for i, r in enumerate(self.entries) for j, x in enumerate(r)):
                return s
        return None

    def is_monomial(self) -> bool:
        return all(sum(1 for x in r if not x.is_zero()) == 1 for r in self.entries) and all(
            sum(1 for r in self.entries if not r[j].is_zero()) == 1 for j in range(self.p))


# ---------------------------------------------------------------------- constructors
def identity(p: int, order: int = 1) -> ProjMat:
    return ProjMat._trusted(tuple(tuple(r) for r in linalg.identity(p, order)), order)


def diag(values: Iterable, order: int = 1) -> ProjMat:
    vals = list(values)
    p = len(vals)
    n = common_order(order, *(v.order for v in vals if isinstance(v, CycNum)))
    zero = CycNum.rational(0, n)
    return ProjMat([[_as_cyc(vals[i], n) if i == j else zero for j in range(p)] for i in range(p)], n)


def mat_perm(sigma: Sequence[int], order: int = 1) -> ProjMat:
    """Permutation matrix with M e_k = e_sigma(k)."""
    p = len(sigma)
    if sorted(sigma) != list(range(p)):
        raise ValueError(f"{list(sigma)} is not a permutation of 0..{p - 1}")
    zero, one = CycNum.rational(0, order), CycNum.rational(1, order)
    rows = [[zero] * p for _ in range(p)]
    for k, s in enumerate(sigma):
        rows[s][k] = one
    return ProjMat(rows, order)


def mat_Mc(p: int, order: int | None = None) -> ProjMat:
    """The cyclic permutation matrix, M_c e_k = e_{k+1}."""
    _check_prime(p)
    return mat_perm([(k + 1) % p for k in range(p)], order or default_order(p))


def mat_D_xi(p: int, order: int | None = None) -> ProjMat:
    """diag(xi^i) with xi = zeta_p; for p = 2 this is diag(1, -1) up to scalar."""
    _check_prime(p)
    n = order or default_order(p)
    return diag([root_of_unity(p, i, n) for i in range(p)], n)


def vandermonde(p: int, order: int | None = None) -> ProjMat:
    """The Vandermonde matrix (xi^{ij})."""
    _check_prime(p)
    n = order or default_order(p)
    return ProjMat([[root_of_unity(p, i * j, n) for j in range(p)] for i in range(p)], n)


def mat_S(p: int, order: int | None = None) -> ProjMat:
    """diag(xi^{i(i+1)/2}), odd p only."""
    _check_prime(p)
    if p == 2:
        raise ValueError("mat_S needs an odd prime")
    n = order or default_order(p)
    return diag([root_of_unity(p, i * (i + 1) // 2, n) for i in range(p)], n)


def mult_perm(p: int, ell: int) -> list[int]:
    """sigma_ell : i -> ell * i on Z/p."""
    if ell % p == 0:
        raise ValueError("multiplier must be a unit mod p")
    return [(ell * i) % p for i in range(p)]


# ---------------------------------------------------------------------- commutators and orders
def scalar_commutator(a: ProjMat, b: ProjMat) -> int | None:
    """k with [A, B] = xi^k I on lifts, or None when the commutator is not scalar."""
    if a.p != b.p:
        raise ValueError("dimension mismatch")
    p = a.p
    n = common_order(a.order, b.order, p)
    A, B = a.lift(n).rows(), b.lift(n).rows()
    c = linalg.mat_mul(linalg.mat_mul(A, B), linalg.mat_mul(linalg.inverse(A), linalg.inverse(B)))
    lam = c[0][0]
    for i in range(p):
        for j in range(p):
            if (i == j and c[i][j] != lam) or (i != j and not c[i][j].is_zero()):
                return None
    for k in range(p):
        if lam == root_of_unity(p, k, n):
            return k
    return None


def proj_order(a: ProjMat, cap: int) -> int:
    """Least k >= 1 with A^k = identity; raises OrderOverflow past cap."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    cur = a
    for k in range(1, cap + 1):
        if cur.is_identity():
            return k
        cur = cur * a
    raise OrderOverflow(f"order exceeds {cap}")
