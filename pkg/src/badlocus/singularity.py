"""Cyclic quotient singularities and the bad-implies-singular verdicts.

C^N // (Z/p) with weights a_1, ..., a_N is singular at the origin exactly when
the fixed subspace has codimension > 1.  The second test counts minimal
generators of the monoid of invariant monomials: that count is the embedding
dimension of the quotient, so it exceeds N exactly at a singular origin.

A monomial is a minimal invariant iff its multiset of weights is a minimal
zero-sum sequence, so the count only depends on the weight multiplicities:
sum over minimal zero-sum multisets s of prod_k multichoose(m_k, s_k).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from math import comb
from typing import Sequence

from .cocycles import (
    SchreierData,
    ShiftModule,
    adjoint_cohomology,
    block_cohomology,
    cocycle_dims,
    restrict_cocycle,
    torsion_h1,
)
from .groups import centralizer, conjugate_to_normal_form, is_irreducible
from .modp import TooLarge, abelian_invariants
from .presentation import Presentation, RepAssignment, modular_group
from .cyclo import root_of_unity
from .projmat import diag, mat_D_xi, mat_Mc

SMOOTH = "Smooth"
SINGULAR = "AlgebraicSingularity"


class UnsupportedCentralizer(ValueError):
    pass


@dataclass(frozen=True)
class WeightProfile:
    """Multiplicities (m_0, ..., m_{p-1}) of the Z/p weights."""

    p: int
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if len(self.multiplicities) != self.p or any(x < 0 for x in self.multiplicities):
            raise ValueError("need p nonnegative multiplicities")

    @classmethod
    def from_weights(cls, p: int, weights: Sequence[int]) -> "WeightProfile":
        m = [0] * p
        for w in weights:
            m[w % p] += 1
        return cls(p, tuple(m))

    @property
    def N(self) -> int:
        return sum(self.multiplicities)

    def weights(self) -> list[int]:
        return [k for k, c in enumerate(self.multiplicities) for _ in range(c)]


def fixed_codim(w: WeightProfile) -> int:
    return sum(w.multiplicities[1:])


def multichoose(n: int, k: int) -> int:
    """Number of degree-k monomials in n variables."""
    if k == 0:
        return 1
    return comb(n + k - 1, k) if n > 0 else 0


def minimal_zero_sum_multisets(elements: Sequence, add, zero, max_len: int) -> list[dict]:
    """Minimal zero-sum multisets over a finite abelian group, as {element: count}.

    A zero-sum multiset is minimal when no proper nonempty sub-multiset sums to zero.
    """
    out = []
    for length in range(1, max_len + 1):
        for combo in combinations_with_replacement(elements, length):
            total = zero
            for x in combo:
                total = add(total, x)
            if total != zero:
                continue
            counts: dict = {}
            for x in combo:
                counts[x] = counts.get(x, 0) + 1
            if _has_proper_zero_sum(counts, add, zero):
                continue
            out.append(counts)
    return out


def _has_proper_zero_sum(counts: dict, add, zero) -> bool:
    keys = list(counts)
    full = tuple(counts[k] for k in keys)
    for sub in product(*(range(c + 1) for c in full)):
        if sub == full or not any(sub):
            continue
        total = zero
        for k, c in zip(keys, sub):
            for _ in range(c):
                total = add(total, k)
        if total == zero:
            return True
    return False


_MZS_CACHE: dict = {}


def _cyclic_mzs(p: int) -> list[dict]:
    key = ("cyclic", p)
    if key not in _MZS_CACHE:
        _MZS_CACHE[key] = minimal_zero_sum_multisets(list(range(p)), lambda a, b: (a + b) % p, 0, p)
    return _MZS_CACHE[key]


def _biweight_mzs(p: int) -> list[dict]:
    key = ("square", p)
    if key not in _MZS_CACHE:
        elems = list(product(range(p), repeat=2))
        _MZS_CACHE[key] = minimal_zero_sum_multisets(
            elems, lambda a, b: ((a[0] + b[0]) % p, (a[1] + b[1]) % p), (0, 0), 2 * p - 1)
    return _MZS_CACHE[key]


def invariant_min_generators(w: WeightProfile, bound: int = 12, method: str = "count") -> int:
    """Number of minimal generators of the invariant monomials of C^N under Z/p.

    method="count" uses minimal zero-sum sequences; method="enumerate" lists all
    exponent vectors of degree <= p (Noether bound) and discards products.
    """
    if method == "count":
        total = 0
        for s in _cyclic_mzs(w.p):
            prod_ = 1
            for k, c in s.items():
                prod_ *= multichoose(w.multiplicities[k], c)
            total += prod_
        return total
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    if w.N > bound:
        raise TooLarge(f"{w.N} variables exceed the enumeration bound {bound}")
    return _enumerate_min_generators(w.weights(), w.p, lambda a, b: (a + b) % w.p, 0, w.p)


def _enumerate_min_generators(weights, p, add, zero, degree_bound: int) -> int:
    """Brute force: invariant exponent vectors of degree <= bound that are not products."""
    n = len(weights)
    by_degree: dict[int, list[tuple[int, ...]]] = {}
    for deg in range(1, degree_bound + 1):
        found = []
        for combo in combinations_with_replacement(range(n), deg):
            total = zero
            for i in combo:
                total = add(total, weights[i])
            if total == zero:
                e = [0] * n
                for i in combo:
                    e[i] += 1
                found.append(tuple(e))
        by_degree[deg] = found
    minimal = 0
    invariants = {e for v in by_degree.values() for e in v}
    for deg, vecs in by_degree.items():
        for e in vecs:
            if not _splits(e, invariants):
                minimal += 1
    return minimal


def _splits(e: tuple[int, ...], invariants: set) -> bool:
    for sub in product(*(range(x + 1) for x in e)):
        if any(sub) and sub != e and sub in invariants:
            return True
    return False


def biweight_min_generators(p: int, multiplicities: dict, method: str = "count", bound: int = 8) -> int:
    """Minimal invariant-monomial generators for (Z/p)^2 acting with the given character multiplicities."""
    if method == "count":
        total = 0
        for s in _biweight_mzs(p):
            prod_ = 1
            for k, c in s.items():
                prod_ *= multichoose(multiplicities.get(k, 0), c)
            total += prod_
        return total
    weights = [k for k, c in multiplicities.items() for _ in range(c)]
    if len(weights) > bound:
        raise TooLarge(f"{len(weights)} variables exceed the enumeration bound {bound}")
    return _enumerate_min_generators(
        weights, p, lambda a, b: ((a[0] + b[0]) % p, (a[1] + b[1]) % p), (0, 0), p * p)


def is_singular_origin(w: WeightProfile) -> bool:
    """Codimension criterion, cross-checked against the generator count."""
    by_codim = fixed_codim(w) > 1
    by_gens = invariant_min_generators(w) > w.N
    if by_codim != by_gens:
        raise AssertionError(f"criteria disagree on {w}")
    return by_codim


# ---------------------------------------------------------------------- verdicts
@dataclass(frozen=True)
class SingularityReport:
    verdict: str
    centralizer_order: int
    h1_dims: tuple[int, ...]  # per block d_0..d_{p-1}, or (dim H^1(sl_p),) when not monomial
    profile: WeightProfile | None = None
    tangent_dim: int | None = None
    quotient_dim: int | None = None
    extension: bool = False  # verdict computed beyond what the limit argument covers
    notes: tuple[str, ...] = field(default_factory=tuple)


def _weight_of_block(k: int, p: int) -> int:
    # Ad D(xi) multiplies E_{i,i+k} by xi^{-k}
    return (-k) % p


def singular_verdict(rho: RepAssignment) -> SingularityReport:
    """Smooth or AlgebraicSingularity at the class of an irreducible rho."""
    gens = list(rho.images)
    if not is_irreducible(gens):
        raise ValueError("representation is not irreducible")
    z = centralizer(gens)
    p = rho.p
    if z.order == 1:
        h = adjoint_cohomology(rho)
        return SingularityReport(SMOOTH, 1, (h.dim_H1,), tangent_dim=h.dim_H1, quotient_dim=h.dim_H1)
    if z.order == p:
        if any(s is None for s in rho.mc_exponent) or not all(mat_D_xi(p) * g == g * mat_D_xi(p) for g in gens):
            nf = conjugate_to_normal_form(gens)
            rho = RepAssignment(rho.presentation, nf.images, check=False)
        dims = tuple(r.dim_H1 for r in block_cohomology(rho))
        mult = [0] * p
        for k, d in enumerate(dims):
            mult[_weight_of_block(k, p)] += d
        w = WeightProfile(p, tuple(mult))
        sing = is_singular_origin(w)
        return SingularityReport(SINGULAR if sing else SMOOTH, p, dims, w,
                                 tangent_dim=invariant_min_generators(w), quotient_dim=w.N)
    if z.order == p * p:
        return _abelian_verdict(rho)
    raise UnsupportedCentralizer(f"centralizer of order {z.order}")


def _abelian_verdict(rho: RepAssignment) -> SingularityReport:
    """Centralizer <D(xi)> x <M_c>: each D^a M^b line of sl_p carries the character (b, -a).

    H^1 of the line is computed by Fox calculus on the one-dimensional
    representation gamma -> (eigenvalue of Ad rho(gamma) on that line).
    """
    p = rho.p
    nf_images = rho.images
    if any(s is None for s in rho.mc_exponent):
        nf_images = conjugate_to_normal_form(list(rho.images)).images
    n = p
    dxi, mc = mat_D_xi(p, n), mat_Mc(p, n)
    # coordinates (alpha, beta) of each image in <D> x <M>
    coords = []
    for g in nf_images:
        hit = None
        for a in range(p):
            for b in range(p):
                if dxi ** a * mc ** b == g:
                    hit = (a, b)
        if hit is None:
            raise UnsupportedCentralizer("abelian image not inside <D(xi)> x <M_c>")
        coords.append(hit)
    mult: dict = {}
    dims = []
    for al, be in product(range(p), repeat=2):
        if (al, be) == (0, 0):
            continue
        # Ad(D^a M^b) on D^al M^be is xi^{a be - al b}
        chars = [[[root_of_unity(p, (a * be - al * b) % p, n)]] for a, b in coords]
        h = cocycle_dims(rho.presentation, chars).dim_H1
        dims.append(h)
        if h:
            key = (be % p, (-al) % p)
            mult[key] = mult.get(key, 0) + h
    N = sum(mult.values())
    gens = biweight_min_generators(p, mult)
    fixed = mult.get((0, 0), 0)
    # singular iff the embedding dimension of the quotient exceeds its dimension
    sing = gens > N
    extension = rho.presentation.name.startswith(("free", "surface"))
    notes = ("abelian irreducible: quotient by (Z/p)^2 computed directly",) if extension else ()
    return SingularityReport(SINGULAR if sing else SMOOTH, p * p, tuple(dims), None,
                             tangent_dim=gens, quotient_dim=N, extension=extension,
                             notes=notes + (f"trivial-character dimension {fixed}",))


# ---------------------------------------------------------------------- PSL(2, Z)
@dataclass(frozen=True)
class Psl2zReport:
    p: int
    abelianization: tuple[int, ...]
    layer_maps: tuple[tuple[int, ...], ...]
    locus_size: int
    verdict: str | None
    block_dims: tuple[int, ...]
    representative: RepAssignment | None


def psl2z_witness(p: int) -> RepAssignment:
    """beta_3: a -> diag(-1, -1, 1), b -> M_c; beta_2: a -> M_c, b -> diag(1, omega)."""
    g = modular_group()
    if p == 3:
        return RepAssignment(g, (diag([-1, -1, 1], 3), mat_Mc(3)))
    if p == 2:
        return RepAssignment(g, (mat_Mc(2, 6), diag([1, root_of_unity(3, 1, 6)], 6)))
    raise ValueError("no bad representation for p > 3")


def _layer_maps(pres: Presentation, p: int) -> list[tuple[int, ...]]:
    out = []
    for lay in product(range(p), repeat=pres.ngens):
        if any(lay) and all(sum(lay[g] * e for g, e in r) % p == 0 for r in pres.relators):
            out.append(lay)
    return out


def psl2z_locus_size(p: int, layer: Sequence[int], m: int = 6) -> int:
    """Classes of irreducible reps over one layer map, counted at torsion level m.

    Every homomorphism of Z/2 * Z/3 into the torus extension has order dividing 6
    on the torus part, so level 6 sees all of them: a class is a nonzero element of
    the restriction image, up to the shift.
    """
    pres = modular_group()
    rep = torsion_h1(pres, layer, m, p)
    sd = SchreierData(pres, layer, p)
    d = p - 1
    gens = rep.generators
    values = set()
    for coeffs in product(*(range(k) for k in rep.invariants)):
        vec = [0] * len(gens[0]) if gens else []
        for c, g in zip(coeffs, gens):
            vec = [x + c * y for x, y in zip(vec, g)]
        res = tuple(restrict_cocycle(sd, vec, m))
        if any(any(v) for v in res):
            values.add(res)
    return _count_shift_orbits(values, p, m, d)


def _count_shift_orbits(values: set, p: int, m: int, d: int) -> int:
    mod = ShiftModule(p, m)
    seen: set = set()
    orbits = 0
    for v in values:
        if v in seen:
            continue
        orbits += 1
        cur = v
        for _ in range(p):
            seen.add(cur)
            cur = tuple(mod.apply(1, x) for x in cur)
    return orbits


def psl2z_report(p: int) -> Psl2zReport:
    pres = modular_group()
    ab = abelian_invariants(pres.relation_matrix(), pres.ngens)
    layers = _layer_maps(pres, p)
    if not layers:
        return Psl2zReport(p, ab, (), 0, None, (), None)
    # layer maps with the same kernel give the same pseudo-component
    kernels = {}
    for lay in layers:
        s = next(x for x in lay if x)
        kernels.setdefault(tuple((x * pow(s, -1, p)) % p for x in lay), lay)
    size = sum(psl2z_locus_size(p, lay) for lay in kernels.values())
    rho = psl2z_witness(p)
    rep = singular_verdict(rho)
    return Psl2zReport(p, ab, tuple(kernels.values()), size, rep.verdict, rep.h1_dims, rho)
