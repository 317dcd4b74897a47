"""Bad representations of free and surface groups, Euler classes and component counts.

Pseudo-components are indexed by hyperplanes of Gamma^ab / p (the kernels of the
layer maps Gamma -> Z/p).  Abelian irreducible classes are surjections onto
(Z/p)^2 = <D(xi)> x <M_c> modulo SL(2, F_p), which the normalizer realizes.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from . import linalg
from .cyclo import CycNum, common_order, nth_root, root_of_unity
from .modp import FpSubspace, SymplecticSpace, TooLarge, hyperplanes, pair_degeneracy
from .presentation import RepAssignment, free_group, surface_group
from .projmat import ProjMat, mat_D_xi, mat_Mc, mat_perm, mult_perm
from .torus import DiagSubgroup, TorsionDiag, d_xi_subgroup, invariant_subgroups  # noqa: F401  (re-exported)


class NotScalarResult(ArithmeticError):
    """The product of commutators is not scalar: the input is not a representation."""


@dataclass(frozen=True)
class EulerClass:
    """e(rho) = xi^k I."""

    p: int
    k: int


# ---------------------------------------------------------------------- constructors
def _level(p: int, diags: Sequence[TorsionDiag]) -> int:
    return common_order(p, *(t.m for t in diags))


def build_free_bad_rep(p: int, ell: int, data: Sequence[TorsionDiag]) -> RepAssignment:
    """x1 -> M_c, x_j -> diag(t_j) for j = 2..ell."""
    if ell < 2:
        raise ValueError("rank must be at least 2")
    if len(data) != ell - 1:
        raise ValueError("need ell - 1 torsion points")
    if any(t.p != p for t in data):
        raise ValueError("torsion points of the wrong dimension")
    n = _level(p, data)
    return RepAssignment(free_group(ell), (mat_Mc(p, n), *(t.to_projmat(n) for t in data)))


def free_rep_with_layers(p: int, layers: Sequence[int], data: Sequence[TorsionDiag]) -> RepAssignment:
    """x_j -> diag(t_j) M_c^{layer_j}: a member of the fiber over an arbitrary layer map."""
    if len(layers) != len(data) or len(data) < 2:
        raise ValueError("one layer and one torsion point per generator, rank >= 2")
    n = _level(p, data)
    mc = mat_Mc(p, n)
    return RepAssignment(free_group(len(data)), tuple(t.to_projmat(n) * mc ** (s % p) for s, t in zip(layers, data)))


def build_surface_bad_rep(p: int, genus: int, k: int, data: Sequence[tuple[TorsionDiag, TorsionDiag]]) -> RepAssignment:
    """a1 -> M_c, b1 -> D(xi)^k, (a_j, b_j) -> (t_j, u_j) for j = 2..genus.

    The relator is checked on construction: [M_c, D(xi)^k] is scalar, the rest commute.
    """
    if genus < 2:
        raise ValueError("genus must be at least 2")
    if len(data) != genus - 1:
        raise ValueError("need genus - 1 pairs of torsion points")
    flat = [t for pair in data for t in pair]
    if any(t.p != p for t in flat):
        raise ValueError("torsion points of the wrong dimension")
    if any(t.m % p for t in flat):
        raise ValueError("surface constructor needs p | m")
    n = _level(p, flat)
    imgs = [mat_Mc(p, n), mat_D_xi(p, n) ** (k % p)]
    for t, u in data:
        imgs += [t.to_projmat(n), u.to_projmat(n)]
    return RepAssignment(surface_group(genus), tuple(imgs))


# ---------------------------------------------------------------------- Euler class
def euler_invariant(rho: RepAssignment) -> EulerClass:
    """Product of the commutators [A_i, B_i] of arbitrary lifts, as a power of xi."""
    p = rho.p
    g = rho.presentation.ngens // 2
    if rho.presentation.ngens != 2 * g or not rho.presentation.name.startswith("surface"):
        raise ValueError("needs the standard surface presentation")
    n = common_order(rho.order, p)
    acc = linalg.identity(p, n)
    for i in range(g):
        a = rho.images[2 * i].lift(n).rows()
        b = rho.images[2 * i + 1].lift(n).rows()
        c = linalg.mat_mul(linalg.mat_mul(a, b), linalg.mat_mul(linalg.inverse(a), linalg.inverse(b)))
        acc = linalg.mat_mul(acc, c)
    lam = acc[0][0]
    if any((acc[i][j] != lam) if i == j else not acc[i][j].is_zero() for i in range(p) for j in range(p)):
        raise NotScalarResult("product of commutators is not scalar")
    for k in range(p):
        if lam == root_of_unity(p, k, n):
            return EulerClass(p, k)
    raise NotScalarResult("scalar is not a p-th root of unity")


# ---------------------------------------------------------------------- counting formulas
def count_pseudo_components(p: int, r: int) -> int:
    return (p**r - 1) // (p - 1)


def count_abelian_irreducible(p: int, r: int) -> int:
    return (p**r - 1) * (p ** (r - 1) - 1) // (p * p - 1)


def intersection_count(p: int) -> int:
    return p - 1


def components_through_abelian(p: int) -> int:
    return p + 1


# ---------------------------------------------------------------------- oracles
def sl2_elements(p: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    return [((a, b), (c, d)) for a, b, c, d in product(range(p), repeat=4) if (a * d - b * c) % p == 1]


def _apply2(g, cols: Sequence[tuple[int, int]], p: int) -> tuple[tuple[int, int], ...]:
    (a, b), (c, d) = g
    return tuple(((a * x + b * y) % p, (c * x + d * y) % p) for x, y in cols)


def surjections(p: int, r: int, cap: int = 200_000) -> list[tuple[tuple[int, int], ...]]:
    """Surjective linear maps F_p^r -> F_p^2, as tuples of column images."""
    if p ** (2 * r) > cap:
        raise TooLarge(f"{p}^{2 * r} linear maps exceed cap {cap}")
    cols = list(product(range(p), repeat=2))
    out = []
    for m in product(cols, repeat=r):
        if any((x1 * y2 - x2 * y1) % p for (x1, y1), (x2, y2) in product(m, repeat=2)):
            out.append(m)
    return out


@dataclass(frozen=True)
class SurjectionOrbits:
    p: int
    r: int
    representatives: tuple
    orbit_sizes: tuple[int, ...]
    group_order: int

    @property
    def count(self) -> int:
        return len(self.representatives)

    @property
    def free(self) -> bool:
        return all(s == self.group_order for s in self.orbit_sizes)


def surjection_orbits(p: int, r: int, cap: int = 200_000) -> SurjectionOrbits:
    """Orbits of SL(2, F_p) acting by post-composition on surjections F_p^r -> F_p^2."""
    group = sl2_elements(p)
    seen: set = set()
    reps, sizes = [], []
    for s in surjections(p, r, cap):
        if s in seen:
            continue
        orbit = {_apply2(g, s, p) for g in group}
        seen |= orbit
        reps.append(s)
        sizes.append(len(orbit))
    return SurjectionOrbits(p, r, tuple(reps), tuple(sizes), len(group))


def abelian_irreducible_oracle(p: int, r: int) -> int:
    """Count abelian irreducible classes as SL(2, F_p)-orbits of surjections; the action must be free."""
    orb = surjection_orbits(p, r)
    if not orb.free:
        raise AssertionError("SL(2, F_p) does not act freely on surjections")
    return orb.count


def _kernel(s, p: int, r: int) -> FpSubspace:
    rows = [tuple(c[0] for c in s), tuple(c[1] for c in s)]
    return FpSubspace.kernel_of(rows, p, r)


def through_abelian_oracle(p: int, r: int) -> set[int]:
    """For each abelian irreducible class, the number of hyperplanes containing its kernel."""
    hs = hyperplanes(r, p)
    return {sum(1 for h in hs if h.contains_subspace(_kernel(s, p, r))) for s in surjection_orbits(p, r).representatives}


def intersection_oracle(p: int, r: int) -> set[int]:
    """For each pair of distinct hyperplanes, the number of abelian classes lying on both."""
    orb = surjection_orbits(p, r)
    kernels = [_kernel(s, p, r) for s in orb.representatives]
    hs = hyperplanes(r, p)
    out = set()
    for i, h in enumerate(hs):
        for h2 in hs[i + 1:]:
            out.add(sum(1 for k in kernels if h.contains_subspace(k) and h2.contains_subspace(k)))
    return out


# ---------------------------------------------------------------------- intersection profiles on surfaces
def _det2(u, v, p: int) -> int:
    return (u[0] * v[1] - u[1] * v[0]) % p


def intersection_euler_profile(e: FpSubspace, e2: FpSubspace, space: SymplecticSpace) -> dict[int, int]:
    """Euler classes of the abelian irreducible classes on both pseudo-components E and E'.

    Those classes are the isomorphisms psi : E_{p,g}/(E cap E') -> <D(xi)> x <M_c>
    modulo SL(2, F_p); representatives are psi_d = diag(d, 1) o q with q = (f, f')
    the pair of covectors.  psi(x) = (D-exponent, M-exponent) and the commutator
    pairing gives e = sum_i det(psi(a_i) | psi(b_i)).
    """
    pair_degeneracy(e, e2, space)  # validates the inputs
    p = space.p
    f, f2 = e.covector(), e2.covector()
    q = [(sum(a * b for a, b in zip(f, v)) % p, sum(a * b for a, b in zip(f2, v)) % p)
         for v in (space.x(i) if j == 0 else space.y(i) for i in range(1, space.g + 1) for j in (0, 1))]
    profile = {k: 0 for k in range(p)}
    for d in range(1, p):
        psi = [((d * x) % p, y) for x, y in q]
        k = sum(_det2(psi[2 * i], psi[2 * i + 1], p) for i in range(space.g)) % p
        profile[k] += 1
    return profile


def abelian_rep_from_psi(psi: Sequence[tuple[int, int]], p: int) -> RepAssignment:
    """The surface representation a_i, b_i -> D(xi)^alpha M_c^beta for (alpha, beta) = psi(generator)."""
    g = len(psi) // 2
    d, mc = mat_D_xi(p), mat_Mc(p)
    return RepAssignment(surface_group(g), tuple(d ** a * mc ** b for a, b in psi))


def intersection_profile_by_matrices(e: FpSubspace, e2: FpSubspace, space: SymplecticSpace) -> dict[int, int]:
    """Same tally as intersection_euler_profile, but with actual matrices and euler_invariant."""
    p = space.p
    f, f2 = e.covector(), e2.covector()
    vecs = [space.x(i) if j == 0 else space.y(i) for i in range(1, space.g + 1) for j in (0, 1)]
    q = [(sum(a * b for a, b in zip(f, v)) % p, sum(a * b for a, b in zip(f2, v)) % p) for v in vecs]
    profile = {k: 0 for k in range(p)}
    for d in range(1, p):
        rho = abelian_rep_from_psi([((d * x) % p, y) for x, y in q], p)
        profile[euler_invariant(rho).k] += 1
    return profile


# ---------------------------------------------------------------------- Vogt coordinates for p = 2
def _tr2(a) -> CycNum:
    return a[0][0] + a[1][1]


def _as_rows(a):
    if isinstance(a, ProjMat):
        return a.rows()
    n = common_order(*(x.order for r in a for x in r if isinstance(x, CycNum)))
    return [[x if isinstance(x, CycNum) else CycNum.rational(x, n) for x in r] for r in a]


def vogt_coordinates(a, b) -> tuple[CycNum, CycNum, CycNum, CycNum]:
    """(tr A^2, tr B^2, tr(AB)^2, tr A tr B tr AB) for determinant-one 2 x 2 matrices."""
    A, B = _as_rows(a), _as_rows(b)
    n = common_order(linalg.matrix_order(A), linalg.matrix_order(B))
    A, B = linalg.lift_matrix(A, n), linalg.lift_matrix(B, n)
    if len(A) != 2 or len(B) != 2:
        raise ValueError("2 x 2 matrices required")
    if linalg.determinant(A) != 1 or linalg.determinant(B) != 1:
        raise ValueError("determinant-one matrices required")
    x, y, z = _tr2(A), _tr2(B), _tr2(linalg.mat_mul(A, B))
    X, Y, Z, T = x * x, y * y, z * z, x * y * z
    assert T * T == X * Y * Z
    return X, Y, Z, T


def sl2_lift(a: ProjMat) -> list[list[CycNum]]:
    """A determinant-one representative of a 2 x 2 projective class."""
    if a.p != 2:
        raise ValueError("2 x 2 only")
    rows = a.rows()
    s = nth_root(linalg.determinant(rows), 2)
    if s is None:
        raise ArithmeticError("square root of the determinant not available")
    n = common_order(a.order, s.order)
    inv = s.lift(n).inverse()
    return [[x.lift(n) * inv for x in r] for r in rows]


def vogt_of_rep(rho: RepAssignment) -> tuple[CycNum, CycNum, CycNum, CycNum]:
    if rho.p != 2 or rho.presentation.ngens != 2:
        raise ValueError("needs a representation of F_2 into PSL(2)")
    return vogt_coordinates(sl2_lift(rho.images[0]), sl2_lift(rho.images[1]))


def layer_kernel(rho: RepAssignment) -> FpSubspace:
    """The hyperplane ker(rhobar) of F_p^r for a representation with monomial images."""
    p = rho.p
    layers = rho.mc_exponent
    if any(s is None for s in layers):
        raise ValueError("images must be monomial with cyclic support")
    return FpSubspace.kernel_of([tuple(layers)], p, len(layers))


def normalizer_twist(rho: RepAssignment, ell: int) -> RepAssignment:
    """Conjugate by the permutation matrix of i -> ell * i, which multiplies every layer by ell."""
    return rho.conjugate(mat_perm(mult_perm(rho.p, ell), rho.order))


__all__ = [
    "DiagSubgroup", "TorsionDiag", "d_xi_subgroup", "invariant_subgroups",
    "EulerClass", "NotScalarResult",
    "build_free_bad_rep", "free_rep_with_layers", "build_surface_bad_rep", "euler_invariant",
    "count_pseudo_components", "count_abelian_irreducible", "intersection_count", "components_through_abelian",
    "abelian_irreducible_oracle", "surjection_orbits", "through_abelian_oracle", "intersection_oracle",
    "intersection_euler_profile", "intersection_profile_by_matrices",
    "vogt_coordinates", "sl2_lift", "vogt_of_rep", "layer_kernel", "normalizer_twist",
]
