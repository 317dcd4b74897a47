"""Torsion points of the projective diagonal torus and their shift-invariant subgroups.

A point of the m-torsion is an exponent vector e in (Z/m)^p, standing for
diag(zeta_m^e_i), taken modulo constant vectors (scalars).  The canonical
representative has e_0 = 0, and its remaining p-1 entries are the coordinates.
M_c acts by the cyclic shift (c.e)_i = e_{i-1}.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .cyclo import common_order, root_of_unity
from .modp import TooLarge, howell_form, span_contains, span_elements, span_size
from .projmat import ProjMat, diag


def shift_matrix(p: int) -> list[list[int]]:
    """Integer matrix of the shift on coordinates (e_1, ..., e_{p-1}).

    After shifting, e_0 becomes e_{p-1}; subtracting it restores e_0 = 0, so the
    new i-th coordinate is e_{i-1} - e_{p-1} (with e_0 = 0).
    """
    n = p - 1
    s = [[0] * n for _ in range(n)]
    for i in range(1, p):
        row = s[i - 1]
        if i - 1 >= 1:
            row[i - 2] += 1
        row[n - 1] -= 1
    return s


def mat_power_int(a: Sequence[Sequence[int]], k: int, modulus: int | None = None) -> list[list[int]]:
    n = len(a)
    out = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(k):
        out = [[sum(out[i][t] * a[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        if modulus:
            out = [[x % modulus for x in r] for r in out]
    return out


@dataclass(frozen=True)
class TorsionDiag:
    p: int
    m: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != self.p:
            raise ValueError("need p exponents")
        e0 = self.exponents[0]
        object.__setattr__(self, "exponents", tuple((e - e0) % self.m for e in self.exponents))

    @classmethod
    def from_coords(cls, p: int, m: int, coords: Sequence[int]) -> "TorsionDiag":
        return cls(p, m, (0, *coords))

    @classmethod
    def zero(cls, p: int, m: int) -> "TorsionDiag":
        return cls(p, m, (0,) * p)

    @classmethod
    def d_xi(cls, p: int, m: int) -> "TorsionDiag":
        """D(xi) at level m (needs p | m)."""
        if m % p:
            raise ValueError("D(xi) is m-torsion only when p divides m")
        return cls(p, m, tuple(i * (m // p) for i in range(p)))

    @property
    def coords(self) -> tuple[int, ...]:
        return self.exponents[1:]

    def _check(self, other: "TorsionDiag") -> None:
        if (self.p, self.m) != (other.p, other.m):
            raise ValueError("torsion points of different tori")

    def __add__(self, other: "TorsionDiag") -> "TorsionDiag":
        self._check(other)
        return TorsionDiag(self.p, self.m, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __neg__(self) -> "TorsionDiag":
        return TorsionDiag(self.p, self.m, tuple(-a for a in self.exponents))

    def __sub__(self, other: "TorsionDiag") -> "TorsionDiag":
        return self + (-other)

    def scale(self, k: int) -> "TorsionDiag":
        return TorsionDiag(self.p, self.m, tuple(k * a for a in self.exponents))

    def shift(self, k: int = 1) -> "TorsionDiag":
        """The action of M_c^k: conjugation M_c^k diag(e) M_c^-k."""
        p = self.p
        return TorsionDiag(p, self.m, tuple(self.exponents[(i - k) % p] for i in range(p)))

    def is_zero(self) -> bool:
        return not any(self.exponents)

    def to_projmat(self, order: int | None = None) -> ProjMat:
        n = order or common_order(self.m, self.p)
        return diag([root_of_unity(self.m, e, n) for e in self.exponents], n)


@dataclass(frozen=True)
class DiagSubgroup:
    """A shift-invariant subgroup of the m-torsion, stored as a Howell-canonical Z/m span."""

    p: int
    m: int
    howell: tuple[tuple[int, ...], ...]

    @classmethod
    def generated_by(cls, p: int, m: int, gens: Iterable[TorsionDiag]) -> "DiagSubgroup":
        rows = []
        for t in gens:
            for k in range(p):
                rows.append(t.shift(k).coords)
        return cls(p, m, howell_form(rows, m, p - 1))

    @property
    def order(self) -> int:
        return span_size(self.howell, self.m)

    def elements(self) -> list[TorsionDiag]:
        return [TorsionDiag.from_coords(self.p, self.m, v) for v in span_elements(self.howell, self.m, self.p - 1)]

    def __contains__(self, t: TorsionDiag) -> bool:
        return span_contains(self.howell, self.m, t.coords)

    def generators(self) -> list[TorsionDiag]:
        return [TorsionDiag.from_coords(self.p, self.m, r) for r in self.howell]

    def is_trivial(self) -> bool:
        return not self.howell

    def is_d_xi(self) -> bool:
        if self.m % self.p:
            return False
        return self == DiagSubgroup.generated_by(self.p, self.m, [TorsionDiag.d_xi(self.p, self.m)])

    def projmats(self, order: int | None = None) -> list[ProjMat]:
        return [g.to_projmat(order) for g in self.generators()]

    def __add__(self, other: "DiagSubgroup") -> "DiagSubgroup":
        return DiagSubgroup(self.p, self.m, howell_form(list(self.howell) + list(other.howell), self.m, self.p - 1))


def d_xi_subgroup(p: int, m: int) -> DiagSubgroup:
    return DiagSubgroup.generated_by(p, m, [TorsionDiag.d_xi(p, m)])


def invariant_subgroups(p: int, m: int, cap: int = 100_000) -> list[DiagSubgroup]:
    """All shift-invariant subgroups of the m-torsion of the projective torus (trivial one included).

    Cyclic submodules are collected from every element, then sums are closed off.
    """
    if m ** (p - 1) > cap:
        raise TooLarge(f"{m}^{p - 1} torsion points exceed cap {cap}")
    found: set[DiagSubgroup] = set()
    for coords in product(range(m), repeat=p - 1):
        found.add(DiagSubgroup.generated_by(p, m, [TorsionDiag.from_coords(p, m, coords)]))
    cyclic = list(found)
    frontier = list(found)
    while frontier:
        new = []
        for a in frontier:
            for b in cyclic:
                c = a + b
                if c not in found:
                    found.add(c)
                    new.append(c)
        frontier = new
        if len(found) > cap:
            raise TooLarge("too many invariant subgroups")
    return sorted(found, key=lambda k: (k.order, k.howell))
