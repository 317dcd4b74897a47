"""Group cohomology in degree one, two ways.

Over a cyclotomic field, Z^1 is the kernel of the Fox Jacobian of the relators
evaluated in a linear representation.  Over Z/m, with coefficients in the
m-torsion of the projective torus and the group acting through a layer map
rhobar : Gamma -> Z/p, the same Jacobian becomes an integer matrix and the
cohomology is read off with Smith normal forms.

Cocycle convention: f(uv) = f(u) + u.f(v), coboundaries f(x) = x.v - v.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

from . import linalg
from .cyclo import CycNum, common_order
from .modp import Lattice, LatticeQuotient, integer_kernel, invariants_from_order_counts, lattice_from_congruence
from .presentation import (
    Letter,
    Presentation,
    RelatorNotSatisfied,
    RepAssignment,
    Word,
    concat,
    free_reduce,
    inverse_word,
    word_power,
)
from .torus import TorsionDiag, mat_power_int, shift_matrix


class NotMonomial(ValueError):
    pass


class NotHomomorphism(ValueError):
    pass


class NotEquivariant(ValueError):
    pass


# ---------------------------------------------------------------------- group ring and Fox calculus
GroupRingElement = dict  # reduced Word -> nonzero int


def gr_add(*elems: GroupRingElement) -> GroupRingElement:
    out: Counter = Counter()
    for e in elems:
        out.update(e)
    return {w: c for w, c in out.items() if c}


def gr_scale(e: GroupRingElement, k: int) -> GroupRingElement:
    return {w: c * k for w, c in e.items() if c * k}


def gr_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    out: Counter = Counter()
    for u, c in a.items():
        for v, d in b.items():
            out[concat(u, v)] += c * d
    return {w: c for w, c in out.items() if c}


def gr_word(w: Sequence[Letter]) -> GroupRingElement:
    return {free_reduce(w): 1}


def fox_derivative(word: Sequence[Letter], gen: int) -> GroupRingElement:
    """d word / d x_gen, with d(uv) = du + u dv, dx/dx = 1, dx^-1/dx = -x^-1."""
    out: Counter = Counter()
    prefix: list[Letter] = []
    for g, e in word:
        if g == gen:
            if e == 1:
                out[free_reduce(prefix)] += 1
            else:
                out[free_reduce(prefix + [(g, -1)])] -= 1
        prefix.append((g, e))
    return {w: c for w, c in out.items() if c}


def fox_fundamental_holds(word: Sequence[Letter], ngens: int) -> bool:
    """sum_j (dw/dx_j)(x_j - 1) = w - 1 in the integral group ring of the free group."""
    total: GroupRingElement = {}
    for j in range(ngens):
        xj_minus_1 = gr_add(gr_word(((j, 1),)), {(): -1})
        total = gr_add(total, gr_mul(fox_derivative(word, j), xj_minus_1))
    return total == gr_add(gr_word(word), {(): -1})


def _fox_row(word: Sequence[Letter], ngens: int, act: Callable, act_inv: Callable, mul, add, ident):
    """Blocks (dw/dx_j) evaluated in a representation.

    act(g) / act_inv(g) give the images of x_g and x_g^-1; mul/add combine them.
    Returns a list of ngens blocks (None where the derivative vanishes).
    """
    blocks: list = [None] * ngens
    prefix = ident
    for g, e in word:
        if e == 1:
            term = prefix
            sign = 1
            prefix = mul(prefix, act(g))
        else:
            prefix = mul(prefix, act_inv(g))
            term = prefix
            sign = -1
        blocks[g] = add(blocks[g], term, sign)
    return blocks


# ---------------------------------------------------------------------- field coefficients
@dataclass(frozen=True)
class CohomologyReport:
    dim_Z1: int
    dim_B1: int
    dim_H1: int
    label: str = ""


def _as_order(mats, n):
    return [linalg.lift_matrix(a, n) for a in mats]


def cocycle_dims(presentation: Presentation, images: Sequence, label: str = "") -> CohomologyReport:
    """dim Z^1, B^1, H^1 of the presented group with coefficients in a d-dimensional representation.

    images[j] is the d x d matrix (rows of CycNum) of generator j.
    """
    n_gens = presentation.ngens
    if len(images) != n_gens:
        raise ValueError("one matrix per generator required")
    d = len(images[0])
    n = common_order(*(linalg.matrix_order(a) for a in images))
    A = _as_order(images, n)
    Ainv = [linalg.inverse(a) for a in A]
    I = linalg.identity(d, n)

    def add(acc, term, sign):
        t = term if sign == 1 else linalg.mat_scale(term, CycNum.rational(-1, n))
        return t if acc is None else [[x + y for x, y in zip(r, s)] for r, s in zip(acc, t)]

    rows: list[list[CycNum]] = []
    zero_block = linalg.zeros(d, d, n)
    for rel in presentation.relators:
        img = I
        for g, e in rel:
            img = linalg.mat_mul(img, A[g] if e == 1 else Ainv[g])
        if img != I:
            raise RelatorNotSatisfied("relator does not act trivially")
        blocks = _fox_row(rel, n_gens, lambda g: A[g], lambda g: Ainv[g], linalg.mat_mul, add, I)
        blocks = [b if b is not None else zero_block for b in blocks]
        for i in range(d):
            rows.append([x for b in blocks for x in b[i]])
    total = d * n_gens
    rank_j = linalg.rank(rows) if rows else 0
    dim_z1 = total - rank_j
    delta = []  # rows of the coboundary map v -> ((A_j - 1) v)_j
    for a in A:
        delta.extend(linalg.mat_sub(a, I))
    dim_b1 = linalg.rank(delta)
    return CohomologyReport(dim_z1, dim_b1, dim_z1 - dim_b1, label)


def _block_basis(p: int, k: int, n: int):
    """Basis matrices of d_k inside sl_p: E_{i,i+k} for k != 0, E_ii - E_{i+1,i+1} for k = 0."""
    zero, one = CycNum.rational(0, n), CycNum.rational(1, n)
    basis = []
    if k == 0:
        for i in range(p - 1):
            m = [[zero] * p for _ in range(p)]
            m[i][i] = one
            m[i + 1][i + 1] = -one
            basis.append(m)
    else:
        for i in range(p):
            m = [[zero] * p for _ in range(p)]
            m[i][(i + k) % p] = one
            basis.append(m)
    return basis


def _block_coords(x, p: int, k: int) -> list[CycNum]:
    if k == 0:
        out = []
        acc = x[0][0]
        for i in range(p - 1):
            out.append(acc)
            acc = acc + x[i + 1][i + 1]
        return out
    return [x[i][(i + k) % p] for i in range(p)]


def _in_block(x, p: int, k: int) -> bool:
    for i in range(p):
        for j in range(p):
            if (j - i) % p != k and not x[i][j].is_zero():
                return False
    if k == 0:
        tr = x[0][0]
        for i in range(1, p):
            tr = tr + x[i][i]
        return tr.is_zero()
    return True


def adjoint_block(g, k: int) -> list[list[CycNum]]:
    """Matrix of X -> g X g^-1 on d_k (columns are images of the basis); g a ProjMat."""
    p, n = g.p, g.order
    G = g.rows()
    Ginv = linalg.inverse(G)
    cols = []
    for b in _block_basis(p, k, n):
        img = linalg.mat_mul(linalg.mat_mul(G, b), Ginv)
        if not _in_block(img, p, k):
            raise NotMonomial("image does not preserve the block decomposition")
        cols.append(_block_coords(img, p, k))
    return [list(r) for r in zip(*cols)]


def ad_blocks(rho: RepAssignment) -> list[list[list[list[CycNum]]]]:
    """For k = 0..p-1, the matrices of Ad(rho(x_j)) on d_k, one per generator."""
    if any(s is None for s in rho.mc_exponent):
        raise NotMonomial("images must be monomial with cyclic support")
    return [[adjoint_block(a, k) for a in rho.images] for k in range(rho.p)]


def adjoint_matrix(g) -> list[list[CycNum]]:
    """Ad(g) on all of sl_p in the basis d_0, d_1, ..., d_{p-1} (any invertible g)."""
    p, n = g.p, g.order
    G = g.rows()
    Ginv = linalg.inverse(G)
    basis = [b for k in range(p) for b in _block_basis(p, k, n)]
    cols = []
    for b in basis:
        img = linalg.mat_mul(linalg.mat_mul(G, b), Ginv)
        cols.append([c for k in range(p) for c in _block_coords(img, p, k)])
    return [list(r) for r in zip(*cols)]


def block_cohomology(rho: RepAssignment) -> list[CohomologyReport]:
    """H^1 of each adjoint block d_0, ..., d_{p-1}."""
    blocks = ad_blocks(rho)
    return [cocycle_dims(rho.presentation, mats, f"d{k}") for k, mats in enumerate(blocks)]


def adjoint_cohomology(rho: RepAssignment) -> CohomologyReport:
    """H^1 with coefficients in the whole adjoint representation sl_p."""
    return cocycle_dims(rho.presentation, [adjoint_matrix(a) for a in rho.images], "sl")


# ---------------------------------------------------------------------- torsion coefficients
def _int_mul(a, b):
    return [[sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def _int_add(acc, term, sign):
    t = [[sign * x for x in r] for r in term]
    return t if acc is None else [[x + y for x, y in zip(r, s)] for r, s in zip(acc, t)]


class ShiftModule:
    """The m-torsion of the projective torus as a Z[Z/p]-module, in e_0 = 0 coordinates."""

    def __init__(self, p: int, m: int):
        self.p, self.m = p, m
        self.dim = p - 1
        s = shift_matrix(p)
        self.powers = [mat_power_int(s, k) for k in range(p)]

    def act(self, k: int):
        return self.powers[k % self.p]

    def apply(self, k: int, v: Sequence[int]) -> tuple[int, ...]:
        s = self.act(k)
        return tuple(sum(a * b for a, b in zip(row, v)) % self.m for row in s)

    def fox_row(self, word: Sequence[Letter], rhobar: Sequence[int]) -> list[list[list[int]]]:
        """Integer blocks of the Fox derivatives of word, the group acting through rhobar."""
        ngens = len(rhobar)
        # track the exponent of the shift instead of multiplying matrices
        blocks = _fox_row(
            word, ngens,
            lambda g: rhobar[g], lambda g: -rhobar[g],
            lambda a, b: a + b,
            lambda acc, k, sign: _int_add(acc, self.act(k), sign),
            0,
        )
        zero = [[0] * self.dim for _ in range(self.dim)]
        return [b if b is not None else zero for b in blocks]

    def norm(self, v: Sequence[int]) -> tuple[int, ...]:
        """sum_i c^i . v; always zero on the projective torus."""
        out = [0] * self.dim
        for k in range(self.p):
            out = [x + y for x, y in zip(out, self.apply(k, v))]
        return tuple(x % self.m for x in out)

    def trace(self, v: Sequence[int]) -> tuple[int, ...]:
        """v - c.v."""
        return tuple((x - y) % self.m for x, y in zip(v, self.apply(1, v)))


def _flatten_blocks(blocks) -> list[list[int]]:
    d = len(blocks[0])
    return [[x for b in blocks for x in b[i]] for i in range(d)]


def check_layer_map(presentation: Presentation, rhobar: Sequence[int], p: int) -> None:
    if len(rhobar) != presentation.ngens:
        raise ValueError("one layer per generator required")
    for r in presentation.relators:
        if sum(rhobar[g] * e for g, e in r) % p:
            raise NotHomomorphism("relator has nonzero layer")


class SchreierData:
    """Reidemeister-Schreier data for K = ker(rhobar), an index-p subgroup.

    Coset j is represented by t_j = gamma0^(j / s0) where gamma0 is the first
    generator with nonzero layer s0.  The Schreier generators are
    s_{j,x} = t_j x t_{j + rhobar(x)}^-1.
    """

    def __init__(self, presentation: Presentation, rhobar: Sequence[int], p: int):
        check_layer_map(presentation, rhobar, p)
        self.presentation = presentation
        self.rhobar = tuple(r % p for r in rhobar)
        self.p = p
        nz = [i for i, r in enumerate(self.rhobar) if r]
        if not nz:
            raise ValueError("layer map is trivial")
        self.gamma0 = nz[0]
        self.s0 = self.rhobar[self.gamma0]
        inv = pow(self.s0, -1, p)
        self.transversal = [word_power(((self.gamma0, 1),), (j * inv) % p) for j in range(p)]
        self.index = {}
        self.words: list[Word] = []
        for j in range(p):
            for x in range(presentation.ngens):
                w = concat(self.transversal[j], ((x, 1),), inverse_word(self.transversal[(j + self.rhobar[x]) % p]))
                self.index[(j, x)] = len(self.words)
                self.words.append(w)

    @property
    def ngens(self) -> int:
        return len(self.words)

    def trivial_generators(self) -> list[int]:
        return [i for i, w in enumerate(self.words) if not w]

    def layer(self, word: Sequence[Letter]) -> int:
        return sum(self.rhobar[g] * e for g, e in word) % self.p

    def rewrite(self, word: Sequence[Letter]) -> list[int]:
        """Abelianized Schreier rewriting of a word of K."""
        if self.layer(word):
            raise ValueError("word is not in the kernel")
        vec = [0] * self.ngens
        j = 0
        for g, e in word:
            if e == 1:
                vec[self.index[(j, g)]] += 1
                j = (j + self.rhobar[g]) % self.p
            else:
                j = (j - self.rhobar[g]) % self.p
                vec[self.index[(j, g)]] -= 1
        return vec

    def gamma0_power(self) -> Word:
        return word_power(((self.gamma0, 1),), self.p)

    def kernel_relators(self) -> list[list[int]]:
        """Rewritten conjugates t_j R t_j^-1 of the relators."""
        out = []
        for r in self.presentation.relators:
            for t in self.transversal:
                out.append(self.rewrite(concat(t, r, inverse_word(t))))
        return out

    def conjugation_rewrites(self) -> list[list[int]]:
        """For each Schreier generator s, the rewriting of gamma0 s gamma0^-1."""
        g = ((self.gamma0, 1),)
        return [self.rewrite(concat(g, w, inverse_word(g))) for w in self.words]


@dataclass(frozen=True)
class TorsionH1Report:
    p: int
    m: int
    invariants: tuple[int, ...]
    order: int
    generators: tuple[tuple[int, ...], ...]  # cocycle values, (p-1) coordinates per generator
    shift_action: tuple[tuple[int, ...], ...]  # column j = image of generator j
    fixed_invariants: tuple[int, ...]
    restriction_invariants: tuple[int, ...] | None
    inflation_invariants: tuple[int, ...] | None
    transgression_kernel_invariants: tuple[int, ...] | None


def _subgroup_invariants(gens: Sequence[Sequence[int]], moduli: Sequence[int]) -> tuple[int, ...]:
    """Invariants of the subgroup of prod Z/moduli generated by gens."""
    k = len(moduli)
    rel = [tuple(d * int(i == j) for j in range(k)) for i, d in enumerate(moduli)]
    lat = Lattice(list(gens) + rel, k)
    return LatticeQuotient(lat, rel).invariants


def _fixed_invariants(action, moduli) -> tuple[int, ...]:
    """Invariants of the kernel of (T - 1) on prod Z/moduli."""
    k = len(moduli)
    if k == 0:
        return ()
    a = [[action[i][j] - int(i == j) for j in range(k)] + [-moduli[i] * int(i == t) for t in range(k)]
         for i in range(k)]
    ker = integer_kernel(a, 2 * k)
    rel = [tuple(d * int(i == j) for j in range(k)) for i, d in enumerate(moduli)]
    lat = Lattice([v[:k] for v in ker] + rel, k)
    return LatticeQuotient(lat, rel).invariants


def torsion_h1(presentation: Presentation, rhobar: Sequence[int], m: int, p: int) -> TorsionH1Report:
    """H^1 of the group with coefficients in the m-torsion of the projective torus, twisted by rhobar."""
    check_layer_map(presentation, rhobar, p)
    mod = ShiftModule(p, m)
    d = mod.dim
    ngens = presentation.ngens
    total = d * ngens
    jac: list[list[int]] = []
    for r in presentation.relators:
        jac.extend(_flatten_blocks(mod.fox_row(r, rhobar)))
    z1 = lattice_from_congruence(jac, m, total)
    b1 = [tuple(m * int(i == j) for j in range(total)) for i in range(total)]
    for i in range(d):
        e = [int(i == j) for j in range(d)]
        col: list[int] = []
        for g in range(ngens):
            col.extend(x - y for x, y in zip(mod.apply(rhobar[g], e), e))
        b1.append(tuple(col))
    h1 = LatticeQuotient(z1, b1)
    gens = h1.generators
    moduli = h1.invariants

    def shift_cocycle(v):
        out: list[int] = []
        for g in range(ngens):
            out.extend(mod.apply(1, v[g * d:(g + 1) * d]))
        return out

    action = [h1.reduce(shift_cocycle(v)) for v in gens]
    action_t = tuple(tuple(action[j][i] for j in range(len(gens))) for i in range(len(gens)))
    fixed = _fixed_invariants(action_t, moduli)

    res_inv = infl_inv = tk_inv = None
    if any(r % p for r in rhobar):
        sd = SchreierData(presentation, rhobar, p)
        res_maps = [_flatten_blocks(mod.fox_row(w, rhobar)) if w else None for w in sd.words]
        images = []
        for v in z1.basis:
            img: list[int] = []
            for blk in res_maps:
                if blk is None:
                    img.extend([0] * d)
                else:
                    img.extend(sum(a * b for a, b in zip(row, v)) % m for row in blk)
            images.append(img)
        res_inv = _subgroup_invariants(images, [m] * (d * sd.ngens))
        # inflation of the cocycles of <t | t^p>: f(x) = (1 + c + ... + c^{rhobar(x)-1}) a
        infl = []
        for i in range(d):
            e = [int(i == j) for j in range(d)]
            vec: list[int] = []
            for g in range(ngens):
                acc = [0] * d
                for k in range(rhobar[g] % p):
                    acc = [x + y for x, y in zip(acc, mod.apply(k, e))]
                vec.extend(acc)
            infl.append(h1.reduce(vec))
        infl_inv = _subgroup_invariants(infl, moduli)
        tk_inv = transgression_kernel(sd, m).invariants
    return TorsionH1Report(
        p=p, m=m,
        invariants=moduli,
        order=h1.order,
        generators=tuple(tuple(v) for v in gens),
        shift_action=action_t,
        fixed_invariants=fixed,
        restriction_invariants=res_inv,
        inflation_invariants=infl_inv,
        transgression_kernel_invariants=tk_inv,
    )


def restrict_cocycle(sd: SchreierData, values: Sequence[int], m: int) -> list[tuple[int, ...]]:
    """Values on the Schreier generators of a cocycle given by its generator values (flattened)."""
    mod = ShiftModule(sd.p, m)
    d = mod.dim
    out = []
    for w in sd.words:
        if not w:
            out.append((0,) * d)
            continue
        blk = _flatten_blocks(mod.fox_row(w, sd.rhobar))
        out.append(tuple(sum(a * b for a, b in zip(row, values)) % m for row in blk))
    return out


def _evaluate_hom(f: Sequence[Sequence[int]], vec: Sequence[int], m: int, d: int) -> tuple[int, ...]:
    acc = [0] * d
    for c, val in zip(vec, f):
        if c:
            acc = [x + c * y for x, y in zip(acc, val)]
    return tuple(x % m for x in acc)


def transgression_obstruction(sd: SchreierData, f: Sequence, m: int) -> TorsionDiag:
    """f(gamma0^p) for f : K -> torus[m] given on the Schreier generators.

    f entries are TorsionDiags or coordinate tuples.  Raises NotEquivariant unless
    f(gamma0 s gamma0^-1) = c^s0 . f(s) for every Schreier generator, and
    NotHomomorphism unless f kills the relators of K.
    """
    p = sd.p
    mod = ShiftModule(p, m)
    d = mod.dim
    vals = [tuple(v.coords) if isinstance(v, TorsionDiag) else tuple(x % m for x in v) for v in f]
    if len(vals) != sd.ngens:
        raise ValueError("one value per Schreier generator required")
    for i in sd.trivial_generators():
        if any(vals[i]):
            raise NotHomomorphism("trivial Schreier generator with nonzero value")
    for rel in sd.kernel_relators():
        if any(_evaluate_hom(vals, rel, m, d)):
            raise NotHomomorphism("relator of the kernel not killed")
    for s, vec in enumerate(sd.conjugation_rewrites()):
        if _evaluate_hom(vals, vec, m, d) != mod.apply(sd.s0, vals[s]):
            raise NotEquivariant(f"equivariance fails on Schreier generator {s}")
    out = _evaluate_hom(vals, sd.rewrite(sd.gamma0_power()), m, d)
    return TorsionDiag.from_coords(p, m, out)


def transgression_kernel(sd: SchreierData, m: int) -> LatticeQuotient:
    """Equivariant homomorphisms K -> torus[m] with f(gamma0^p) = 0, as a subgroup of (Z/m)^N."""
    mod = ShiftModule(sd.p, m)
    d = mod.dim
    n = sd.ngens * d
    rows: list[list[int]] = []

    def hom_rows(vec):
        out = [[0] * n for _ in range(d)]
        for s, c in enumerate(vec):
            if c:
                for i in range(d):
                    out[i][s * d + i] += c
        return out

    for s in sd.trivial_generators():
        rows.extend(hom_rows([int(t == s) for t in range(sd.ngens)]))
    for rel in sd.kernel_relators():
        rows.extend(hom_rows(rel))
    shift = mod.act(sd.s0)
    for s, vec in enumerate(sd.conjugation_rewrites()):
        r = hom_rows(vec)
        for i in range(d):
            for j in range(d):
                r[i][s * d + j] -= shift[i][j]
        rows.extend(r)
    rows.extend(hom_rows(sd.rewrite(sd.gamma0_power())))
    lat = lattice_from_congruence(rows, m, n)
    return LatticeQuotient(lat, [tuple(m * int(i == j) for j in range(n)) for i in range(n)])


# ---------------------------------------------------------------------- brute-force oracle for Z/p
def cyclic_h1_oracle(p: int, m: int) -> tuple[int, ...]:
    """Ker(Norm)/im(Trace) for Z/p acting by cyclic shift on (Z/m)^p modulo constants.

    Pure enumeration over exponent vectors; no Smith forms involved.
    """
    def canon(e):
        return tuple((x - e[0]) % m for x in e)

    def shift(e):
        return canon(tuple(e[(i - 1) % p] for i in range(p)))

    def add(a, b):
        return canon(tuple(x + y for x, y in zip(a, b)))

    zero = (0,) * p
    elements = [canon((0, *c)) for c in product(range(m), repeat=p - 1)]
    kernel = []
    for e in elements:
        acc, cur = zero, e
        for _ in range(p):
            acc = add(acc, cur)
            cur = shift(cur)
        if acc == zero:
            kernel.append(e)
    image = {add(e, canon(tuple(-x for x in shift(e)))) for e in elements}
    counts: Counter = Counter()
    seen = set()
    for e in kernel:
        if e in seen:
            continue
        coset = {add(e, t) for t in image}
        seen |= coset
        k, cur = 1, e
        while cur not in image:
            cur = add(cur, e)
            k += 1
        counts[k] += 1
    return invariants_from_order_counts(dict(counts))
