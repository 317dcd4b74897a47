"""Finite subgroups of PGL(p): closure, irreducibility, centralizers, normal forms."""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .cyclo import CycNum, common_order, nth_root, root_of_unity
from .modp import TooLarge
from .presentation import RepAssignment
from .projmat import ProjMat, identity, mat_D_xi, mat_Mc

DEFAULT_CAP = 100_000


def default_cap() -> int:
    """Closure cap, overridable through the BADLOCUS_CAP environment variable."""
    raw = os.environ.get("BADLOCUS_CAP")
    return int(raw) if raw else DEFAULT_CAP


class ReducibleInput(ValueError):
    pass


class NotBad(ValueError):
    pass


class UnsupportedScalar(ArithmeticError):
    """A projective intertwining scalar has no p-th root available in the field."""


@dataclass(frozen=True)
class FinMatrixGroup:
    p: int
    generators: tuple[ProjMat, ...]
    elements: frozenset

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: ProjMat) -> bool:
        if not self.elements:
            return False
        n = common_order(next(iter(self.elements)).order, g.order)
        return any(g.lift(n) == e.lift(n) for e in self.elements)


class Badness:
    GOOD = "Good"
    BAD_ZP = "Bad_Zp"
    BAD_ZPZP = "Bad_ZpZp"
    NOT_IRREDUCIBLE = "NotIrreducible"


@dataclass(frozen=True)
class BadnessVerdict:
    kind: str
    centralizer: FinMatrixGroup | None
    conjugator: ProjMat | None = None


def _same_order(mats: Sequence[ProjMat], extra: int = 1) -> list[ProjMat]:
    n = common_order(extra, *(m.order for m in mats))
    return [m.lift(n) for m in mats]


def closure(gens: Sequence[ProjMat], cap: int | None = None) -> FinMatrixGroup:
    """Breadth-first product closure; raises TooLarge past cap elements."""
    if cap is None:
        cap = default_cap()
    if not gens:
        raise ValueError("need at least one generator")
    gens = _same_order(gens)
    e = identity(gens[0].p, gens[0].order)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a * g
                if b not in seen:
                    seen.add(b)
                    if len(seen) > cap:
                        raise TooLarge(f"group exceeds cap {cap}")
                    nxt.append(b)
        frontier = nxt
    return FinMatrixGroup(gens[0].p, tuple(gens), frozenset(seen))


def _flat(m) -> list[CycNum]:
    return [x for row in m for x in row]


def is_irreducible(gens: Sequence[ProjMat]) -> bool:
    """Burnside: the lifts generate the full matrix algebra."""
    if not gens:
        raise ValueError("need at least one generator")
    gens = _same_order(gens)
    p, n = gens[0].p, gens[0].order
    basis = linalg.EchelonBasis(p * p)
    start = linalg.identity(p, n)
    basis.add(_flat(start))
    queue = [start]
    while queue and len(basis) < p * p:
        b = queue.pop()
        for g in gens:
            c = linalg.mat_mul(g.rows(), b)
            if basis.add(_flat(c)):
                queue.append(c)
    return len(basis) == p * p


# ---------------------------------------------------------------------- intertwiners
def _trace(m) -> CycNum:
    acc = m[0][0]
    for i in range(1, len(m)):
        acc = acc + m[i][i]
    return acc


def _scalar_candidates(a, b, p: int) -> list[CycNum]:
    """All lam for which X a X^-1 = lam b can hold (a, b raw lifts of one order)."""
    delta = linalg.determinant(a) / linalg.determinant(b)  # lam^p
    pa, pb = a, b
    for j in range(1, p):
        ta, tb = _trace(pa), _trace(pb)
        if tb.is_zero() != ta.is_zero():
            return []
        if not tb.is_zero():
            ratio = ta / tb  # lam^j
            # lam = delta^s * ratio^t with s p + t j = 1
            t = pow(j, -1, p)
            s = (1 - t * j) // p
            lam = delta**s * ratio**t
            if lam**j == ratio and lam**p == delta:
                return [lam]
            return []
        pa, pb = linalg.mat_mul(pa, a), linalg.mat_mul(pb, b)
    root = nth_root(delta, p)
    if root is None:
        raise UnsupportedScalar("intertwining scalar needs a p-th root outside the field")
    n = common_order(root.order, p)
    return [root.lift(n) * root_of_unity(p, i, n) for i in range(p)]


def intertwiners(source: Sequence[ProjMat], target: Sequence[ProjMat], check: bool = True) -> list[ProjMat]:
    """All g in PGL(p) with g source_i g^-1 = target_i for every i."""
    if len(source) != len(target) or not source:
        raise ValueError("need matching nonempty generator lists")
    if check and not (is_irreducible(source) and is_irreducible(target)):
        raise ReducibleInput("intertwiner solver needs irreducible inputs")
    mats = _same_order(list(source) + list(target))
    p, n = mats[0].p, mats[0].order
    k = len(source)
    A = [m.rows() for m in mats[:k]]
    B = [m.rows() for m in mats[k:]]
    cands = [_scalar_candidates(a, b, p) for a, b in zip(A, B)]
    if any(not c for c in cands):
        return []
    n = common_order(n, *(lam.order for c in cands for lam in c))
    A = [linalg.lift_matrix(a, n) for a in A]
    B = [linalg.lift_matrix(b, n) for b in B]
    cands = [[lam.lift(n) for lam in c] for c in cands]
    zero, one = CycNum.rational(0, n), CycNum.rational(1, n)
    start = []
    for i in range(p):
        for j in range(p):
            e = [[zero] * p for _ in range(p)]
            e[i][j] = one
            start.append(e)
    # handle generators with a unique scalar first: they prune hardest
    order = sorted(range(k), key=lambda i: len(cands[i]))
    results: list[ProjMat] = []

    def restrict(basis, a, b, lam):
        cols = []
        for x in basis:
            r = linalg.mat_sub(linalg.mat_mul(x, a), linalg.mat_scale(linalg.mat_mul(b, x), lam))
            cols.append(_flat(r))
        rows = [list(row) for row in zip(*cols)]
        null = linalg.nullspace(rows)
        out = []
        for c in null:
            acc = [[zero] * p for _ in range(p)]
            for coef, x in zip(c, basis):
                if not coef.is_zero():
                    acc = [[u + coef * v for u, v in zip(r1, r2)] for r1, r2 in zip(acc, x)]
            out.append(acc)
        return out

    def search(depth, basis):
        if depth == k:
            if len(basis) != 1:
                raise ReducibleInput("intertwiner space of dimension > 1")
            x = basis[0]
            if linalg.determinant(x).is_zero():
                raise ReducibleInput("singular intertwiner")
            results.append(ProjMat(x, n))
            return
        i = order[depth]
        for lam in cands[i]:
            nb = restrict(basis, A[i], B[i], lam)
            if nb:
                search(depth + 1, nb)

    search(0, start)
    return results


def conjugators_between(rho: RepAssignment, rho2: RepAssignment) -> list[ProjMat]:
    """All g with g rho(x) g^-1 = rho2(x) for every generator x."""
    if rho.presentation.generators != rho2.presentation.generators:
        raise ValueError("representations of different presentations")
    if rho.p != rho2.p:
        raise ValueError("dimension mismatch")
    return intertwiners(rho.images, rho2.images)


def centralizer(gens: Sequence[ProjMat], cap: int | None = None) -> FinMatrixGroup:
    """Centralizer in PGL(p) of an irreducible subgroup."""
    elems = intertwiners(gens, gens)
    group = closure(elems, cap)
    if group.order != len(set(elems)):
        raise AssertionError("centralizer solutions are not closed under products")
    return group


def classify(gens: Sequence[ProjMat], normal_form: bool = False) -> BadnessVerdict:
    if not is_irreducible(gens):
        return BadnessVerdict(Badness.NOT_IRREDUCIBLE, None)
    z = centralizer(gens)
    p = gens[0].p
    if z.order == 1:
        return BadnessVerdict(Badness.GOOD, z)
    if z.order == p:
        kind = Badness.BAD_ZP
    elif z.order == p * p:
        kind = Badness.BAD_ZPZP
    else:
        raise AssertionError(f"unexpected centralizer order {z.order}")
    conj = conjugate_to_normal_form(gens).conjugator if normal_form else None
    return BadnessVerdict(kind, z, conj)


# ---------------------------------------------------------------------- normal form
@dataclass(frozen=True)
class NormalForm:
    conjugator: ProjMat
    images: tuple[ProjMat, ...]
    exact_mc: bool  # some generator power is exactly M_c after the diagonal correction


def _eigenbasis(u: ProjMat):
    """Columns v_j with u v_j = mu xi^j v_j, or None when mu is not in reach."""
    p = u.p
    U = u.rows()
    up = linalg.identity(p, u.order)
    for _ in range(p):
        up = linalg.mat_mul(up, U)
    alpha = up[0][0]
    if any(not up[i][j].is_zero() for i in range(p) for j in range(p) if i != j):
        return None
    mu = nth_root(alpha, p)
    if mu is None:
        return None
    n = common_order(u.order, mu.order, p)
    U = linalg.lift_matrix(U, n)
    mu = mu.lift(n)
    cols = []
    for j in range(p):
        lam = mu * root_of_unity(p, j, n)
        shifted = [[x - lam if i == k else x for k, x in enumerate(row)] for i, row in enumerate(U)]
        null = linalg.nullspace(shifted)
        if len(null) != 1:
            return None
        cols.append(null[0])
    return [list(r) for r in zip(*cols)], n


def conjugate_to_normal_form(gens: Sequence[ProjMat]) -> NormalForm:
    """Conjugate a bad irreducible subgroup into D-bar semidirect <M_c>.

    A nontrivial centralizer element is diagonalized (its eigenvalues are
    mu * xi^j); every generator then becomes monomial with cyclic support.  A
    diagonal correction turns a layer-one element into M_c when the needed
    p-th root is available.
    """
    gens = _same_order(gens)
    p = gens[0].p
    z = centralizer(gens)
    if z.order == 1:
        raise NotBad("centralizer is trivial")
    found = None
    for u in sorted(z.elements, key=lambda m: (not m.is_diagonal(), repr(m))):
        if u.is_identity():
            continue
        found = _eigenbasis(u)
        if found is not None:
            break
    if found is None:
        raise UnsupportedScalar("no centralizer element has its eigenvalues in reach")
    P, n = found
    g = ProjMat(linalg.inverse(P), n)
    ginv = ProjMat(P, n)
    images = [g * h.lift(common_order(n, h.order)) * ginv for h in gens]
    layers = [h.monomial_shift() for h in images]
    if any(s is None for s in layers):
        raise AssertionError("conjugated generators are not cyclic-monomial")
    exact = False
    i = next((i for i, s in enumerate(layers) if s), None)
    if i is not None:
        x = images[i] ** pow(layers[i], -1, p)
        lam = [x.entries[(j + 1) % p][j] for j in range(p)]  # x e_j = lam_j e_{j+1}
        prod = lam[0]
        for v in lam[1:]:
            prod = prod * v
        c = nth_root(prod, p)
        if c is not None:
            m = common_order(x.order, c.order)
            c = c.lift(m)
            lam = [v.lift(m) for v in lam]
            s = [CycNum.rational(1, m)]
            for j in range(p - 1):
                # (s x s^-1)_{j+1, j} = s_{j+1} lam_j / s_j = c
                s.append(s[j] * c / lam[j])
            d = ProjMat([[s[a] if a == b else CycNum.rational(0, m) for b in range(p)] for a in range(p)], m)
            g = d * g.lift(m)
            images = [d * h.lift(m) * d.inverse() for h in images]
            exact = images[i] ** pow(layers[i], -1, p) == mat_Mc(p, images[i].order)
    return NormalForm(g, tuple(images), exact)


# ---------------------------------------------------------------------- structure helpers
def layer_decomposition(m: ProjMat) -> list[list[CycNum]]:
    """The unique diagonals d_j with m = sum_j diag(d_j) M_c^j (entry (i+j, i) of m is d_j[i+j])."""
    p = m.p
    return [[m.entries[i][(i - j) % p] for i in range(p)] for j in range(p)]


def poly_mc_times_dpower(g: ProjMat) -> tuple[list[CycNum], int] | None:
    """Coefficients a and k with g = (sum_j a_j M_c^j) D(xi)^k projectively, if any."""
    p = g.p
    n = common_order(g.order, p)
    target = _flat(g.lift(n).rows())
    mc = mat_Mc(p, n).rows()
    for k in range(p):
        dk = (mat_D_xi(p, n) ** k).rows()
        cols = []
        power = linalg.identity(p, n)
        for _ in range(p):
            cols.append(_flat(linalg.mat_mul(power, dk)))
            power = linalg.mat_mul(mc, power)
        # solve sum_j a_j cols_j = target
        rows = [list(r) + [t] for r, t in zip(zip(*cols), target)]
        red, piv = linalg.rref(rows)
        if p in piv:
            continue
        a = [CycNum.rational(0, n)] * p
        for r, c in zip(red, piv):
            a[c] = r[p]
        return a, k
    return None


def eigenspace_shift_holds(a: ProjMat, b: ProjMat) -> bool:
    """If [A, B] = xi^k, check B maps ker(A - mu) into ker(A - xi^k mu) for every eigenvalue mu of A."""
    from .projmat import scalar_commutator

    k = scalar_commutator(a, b)
    if k is None:
        return False
    p = a.p
    n = common_order(a.order, b.order, p)
    A, B = a.lift(n).rows(), b.lift(n).rows()
    ok = True
    for mu_exp in range(common_order(2, n)):
        mu = root_of_unity(common_order(2, n), mu_exp, n)
        shifted = [[x - mu if i == j else x for j, x in enumerate(r)] for i, r in enumerate(A)]
        for v in linalg.nullspace(shifted):
            bv = linalg.mat_vec(B, v)
            lam = mu * root_of_unity(p, k, n)
            av = linalg.mat_vec(A, bv)
            ok &= all(x == lam * y for x, y in zip(av, bv))
    return ok
