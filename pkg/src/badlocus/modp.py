"""Linear algebra over F_p and Z/m, Smith normal form, symplectic F_p-spaces."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Vector = tuple[int, ...]


class TooLarge(RuntimeError):
    """An enumeration would exceed its configured cap."""


# ---------------------------------------------------------------------- Z/m spans (Howell form)
def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _normalizing_unit(a: int, m: int) -> int:
    """A unit u mod m with u*a = gcd(a, m) mod m."""
    from math import gcd

    g = gcd(a, m)
    if g == 0 or a % m == 0:
        return 1
    mp = m // g
    u0 = pow(a // g, -1, mp) if mp > 1 else 0
    u = u0
    while gcd(u, m) != 1:
        u += mp
    return u % m


def howell_form(rows: Iterable[Sequence[int]], m: int, ncols: int) -> tuple[Vector, ...]:
    """Canonical generating rows of the Z/m-span of `rows` (Howell normal form).

    Two families span the same subgroup of (Z/m)^ncols iff their Howell forms agree.
    For prime m this is the reduced row echelon form.
    """
    a = [[x % m for x in r] for r in rows]
    while len(a) < ncols:
        a.append([0] * ncols)
    r = 0
    for c in range(ncols):
        for i in range(r + 1, len(a)):
            if a[i][c]:
                x, y = a[r][c], a[i][c]
                g, s, t = _xgcd(x, y)
                rx, ry = a[r], a[i]
                a[r] = [(s * u + t * v) % m for u, v in zip(rx, ry)]
                a[i] = [((y // g) * u - (x // g) * v) % m for u, v in zip(rx, ry)]
        if r >= len(a) or a[r][c] == 0:
            continue
        u = _normalizing_unit(a[r][c], m)
        a[r] = [(u * x) % m for x in a[r]]
        d = a[r][c]
        for i in range(r):
            q = a[i][c] // d
            if q:
                a[i] = [(x - q * y) % m for x, y in zip(a[i], a[r])]
        ann = [((m // d) * x) % m for x in a[r]]
        if any(ann):
            a.append(ann)
        r += 1
        if r == len(a):
            a.append([0] * ncols)
    return tuple(tuple(row) for row in a[:r] if any(row))


def span_size(howell: Sequence[Sequence[int]], m: int) -> int:
    size = 1
    for row in howell:
        lead = next(x for x in row if x)
        size *= m // lead
    return size


def span_elements(howell: Sequence[Sequence[int]], m: int, ncols: int) -> Iterator[Vector]:
    """Every element of the span, each exactly once."""
    ranges = []
    for row in howell:
        lead = next(x for x in row if x)
        ranges.append(range(m // lead))
    for coeffs in itertools.product(*ranges):
        v = [0] * ncols
        for c, row in zip(coeffs, howell):
            if c:
                v = [(x + c * y) % m for x, y in zip(v, row)]
        yield tuple(v)


def span_contains(howell: Sequence[Sequence[int]], m: int, v: Sequence[int]) -> bool:
    v = [x % m for x in v]
    for row in howell:
        c = next(i for i, x in enumerate(row) if x)
        d = row[c]
        if v[c] % d:
            return False
        q = v[c] // d
        v = [(x - q * y) % m for x, y in zip(v, row)]
    return not any(v)


# ---------------------------------------------------------------------- F_p subspaces
def fp_rref(rows: Iterable[Sequence[int]], p: int, ncols: int) -> tuple[Vector, ...]:
    return howell_form(rows, p, ncols)


def fp_nullspace(rows: Sequence[Sequence[int]], p: int, ncols: int) -> list[Vector]:
    """Basis of {x : A x = 0} over F_p."""
    red = fp_rref(rows, p, ncols)
    pivots = [next(i for i, x in enumerate(r) if x) for r in red]
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = (-row[f]) % p
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class FpSubspace:
    """A subspace of F_p^n stored by its reduced row echelon basis."""

    p: int
    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], p: int, n: int) -> "FpSubspace":
        return cls(p, n, fp_rref(list(vectors), p, n))

    @classmethod
    def kernel_of(cls, rows: Sequence[Sequence[int]], p: int, n: int) -> "FpSubspace":
        return cls.span(fp_nullspace(rows, p, n), p, n)

    @classmethod
    def image_of(cls, matrix: Sequence[Sequence[int]], p: int) -> "FpSubspace":
        """Column space of a matrix given by rows."""
        n = len(matrix)
        cols = list(zip(*matrix)) if matrix else []
        return cls.span(cols, p, n)

    @classmethod
    def full(cls, p: int, n: int) -> "FpSubspace":
        return cls.span([tuple(int(i == j) for j in range(n)) for i in range(n)], p, n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _compat(self, other: "FpSubspace") -> None:
        if self.p != other.p or self.ambient_dim != other.ambient_dim:
            raise ValueError("dimension mismatch")

    def annihilator(self) -> list[Vector]:
        """Covectors vanishing on the subspace."""
        if not self.basis:
            return [tuple(int(i == j) for j in range(self.ambient_dim)) for i in range(self.ambient_dim)]
        return fp_nullspace(self.basis, self.p, self.ambient_dim)

    def intersect(self, other: "FpSubspace") -> "FpSubspace":
        self._compat(other)
        return FpSubspace.kernel_of(self.annihilator() + other.annihilator(), self.p, self.ambient_dim)

    def __add__(self, other: "FpSubspace") -> "FpSubspace":
        self._compat(other)
        return FpSubspace.span(self.basis + other.basis, self.p, self.ambient_dim)

    def contains(self, v: Sequence[int]) -> bool:
        return span_contains(self.basis, self.p, v)

    def contains_subspace(self, other: "FpSubspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def elements(self) -> Iterator[Vector]:
        return span_elements(self.basis, self.p, self.ambient_dim)

    def covector(self) -> Vector:
        """Normalized covector (first nonzero coordinate 1) of a hyperplane."""
        if self.dim != self.ambient_dim - 1:
            raise ValueError("not a hyperplane")
        (f,) = fp_rref(self.annihilator(), self.p, self.ambient_dim)
        return f


def normalize_covector(f: Sequence[int], p: int) -> Vector:
    f = [x % p for x in f]
    lead = next((x for x in f if x), None)
    if lead is None:
        raise ValueError("zero covector")
    inv = pow(lead, -1, p)
    return tuple((x * inv) % p for x in f)


def hyperplane_from_covector(f: Sequence[int], p: int) -> FpSubspace:
    return FpSubspace.kernel_of([f], p, len(f))


def hyperplanes(r: int, p: int) -> list[FpSubspace]:
    """All hyperplanes of F_p^r, one per normalized covector."""
    if r < 1:
        raise ValueError("r must be at least 1")
    out = []
    for f in itertools.product(range(p), repeat=r):
        if any(f) and next(x for x in f if x) == 1:
            out.append(hyperplane_from_covector(f, p))
    return out


# ---------------------------------------------------------------------- Smith normal form
@dataclass(frozen=True)
class SmithForm:
    """U * M * V = D with U, V unimodular and D diagonal with d_1 | d_2 | ..."""

    invariants: tuple[int, ...]  # nonzero diagonal entries
    rank: int
    U: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]
    D: tuple[tuple[int, ...], ...]


def snf(matrix: Sequence[Sequence[int]]) -> SmithForm:
    a = [list(map(int, r)) for r in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    U = [[int(i == j) for j in range(rows)] for i in range(rows)]
    V = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for r in a:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]

    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            changed = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        changed = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        changed = True
            if changed:
                # move the smallest remaining entry of row/column t to the pivot
                cands = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
                cands += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
                _, i, j = min(cands)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    invariants = tuple(a[i][i] for i in range(min(rows, cols)) if a[i][i])
    return SmithForm(
        invariants=invariants,
        rank=len(invariants),
        U=tuple(map(tuple, U)),
        V=tuple(map(tuple, V)),
        D=tuple(map(tuple, a)),
    )


def abelian_invariants(relations: Sequence[Sequence[int]], ngens: int) -> tuple[int, ...]:
    """Invariant factors (0 = free Z summand) of Z^ngens / row span of relations; ones dropped."""
    if not relations:
        return (0,) * ngens
    form = snf(relations)
    inv = [d for d in form.invariants if d != 1]
    return tuple(inv) + (0,) * (ngens - form.rank)


def _int_inverse(u: Sequence[Sequence[int]]) -> list[list[int]]:
    """Inverse of a unimodular integer matrix."""
    from fractions import Fraction

    n = len(u)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(u)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    out = [[int(x) for x in r[n:]] for r in a]
    if any(x != int(x) for r in a for x in r[n:]):
        raise ValueError("matrix is not unimodular")
    return out


def integer_kernel(a: Sequence[Sequence[int]], ncols: int) -> list[Vector]:
    """Basis of {x in Z^ncols : a x = 0}."""
    if not a:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    form = snf(a)
    return [tuple(form.V[i][j] for i in range(ncols)) for j in range(form.rank, ncols)]


class Lattice:
    """A sublattice of Z^n given by generators, with a basis and exact coordinates."""

    def __init__(self, generators: Sequence[Sequence[int]], n: int):
        self.n = n
        gens = [list(g) for g in generators]
        if not gens:
            self.basis: list[Vector] = []
            self._u, self._d = None, ()
            return
        g = [[gens[j][i] for j in range(len(gens))] for i in range(n)]  # columns are generators
        form = snf(g)
        uinv = _int_inverse(form.U)
        self._u = form.U
        self._d = form.invariants
        # (G V)[:, i] = U^-1 D e_i
        self.basis = [tuple(uinv[r][i] * d for r in range(n)) for i, d in enumerate(self._d)]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coords(self, v: Sequence[int]) -> Vector:
        if not self.basis:
            if any(v):
                raise ValueError("vector not in lattice")
            return ()
        uv = [sum(a * b for a, b in zip(row, v)) for row in self._u]
        out = []
        for i, x in enumerate(uv):
            d = self._d[i] if i < len(self._d) else 0
            if d == 0:
                if x:
                    raise ValueError("vector not in lattice")
                continue
            if x % d:
                raise ValueError("vector not in lattice")
            out.append(x // d)
        return tuple(out)

    def contains(self, v: Sequence[int]) -> bool:
        try:
            self.coords(v)
        except ValueError:
            return False
        return True


def lattice_from_congruence(a: Sequence[Sequence[int]], m: int, ncols: int) -> Lattice:
    """The lattice {x in Z^ncols : a x = 0 mod m} (contains m Z^ncols)."""
    rows = len(a)
    if rows == 0:
        return Lattice([tuple(int(i == j) for j in range(ncols)) for i in range(ncols)], ncols)
    aug = [list(r) + [-m * int(i == j) for j in range(rows)] for i, r in enumerate(a)]
    ker = integer_kernel(aug, ncols + rows)
    gens = [v[:ncols] for v in ker]
    gens += [tuple(m * int(i == j) for j in range(ncols)) for i in range(ncols)]
    return Lattice(gens, ncols)


class LatticeQuotient:
    """The finitely generated abelian group L / S for a sublattice S of L."""

    def __init__(self, lattice: Lattice, sub_generators: Sequence[Sequence[int]]):
        self.lattice = lattice
        r = lattice.rank
        cols = [lattice.coords(v) for v in sub_generators]
        if r == 0:
            self._u, self._d, self._gens = [], [], []
        else:
            if cols:
                c = [[col[i] for col in cols] for i in range(r)]
                form = snf(c)
                u = [list(row) for row in form.U]
                d = list(form.invariants) + [0] * (r - form.rank)
            else:
                u = [[int(i == j) for j in range(r)] for i in range(r)]
                d = [0] * r
            uinv = _int_inverse(u)
            keep = [i for i in range(r) if d[i] != 1]
            self._u = [u[i] for i in keep]
            self._d = [d[i] for i in keep]
            # ambient generator i = basis . U^-1 e_i
            self._gens = [
                tuple(sum(lattice.basis[k][t] * uinv[k][i] for k in range(r)) for t in range(lattice.n))
                for i in keep
            ]

    @property
    def invariants(self) -> tuple[int, ...]:
        return tuple(self._d)

    @property
    def order(self) -> int | None:
        if any(d == 0 for d in self._d):
            return None
        out = 1
        for d in self._d:
            out *= d
        return out

    @property
    def generators(self) -> list[Vector]:
        """Ambient representatives of the cyclic factors, in the order of invariants."""
        return list(self._gens)

    def reduce(self, v: Sequence[int]) -> Vector:
        """Coordinates of the class of v in the product of cyclic factors."""
        x = self.lattice.coords(v)
        y = [sum(a * b for a, b in zip(row, x)) for row in self._u]
        return tuple(yi % d if d else yi for yi, d in zip(y, self._d))


def invariants_from_order_counts(counts: dict[int, int]) -> tuple[int, ...]:
    """Invariant factors of a finite abelian group from the number of elements of each order.

    Works one prime at a time: the number of elements killed by q^k determines the
    q-primary part.
    """
    n = sum(counts.values())
    primes = []
    x, d = n, 2
    while d * d <= x:
        if x % d == 0:
            primes.append(d)
            while x % d == 0:
                x //= d
        d += 1
    if x > 1:
        primes.append(x)
    parts: dict[int, list[int]] = {}
    for q in primes:
        total = _qpart_total(counts, q)
        killed = [1]
        while killed[-1] < total:
            qk = q ** len(killed)
            killed.append(sum(v for o, v in counts.items() if qk % o == 0))
        # killed[k] = q^(sum_i min(k, e_i)); number of cyclic factors of exponent >= k is log_q(killed[k]/killed[k-1])
        ranks = []
        for k in range(1, len(killed)):
            ratio = killed[k] // killed[k - 1]
            e = 0
            while ratio > 1:
                ratio //= q
                e += 1
            ranks.append(e)
        exps = []
        for k, r in enumerate(ranks, start=1):
            nxt = ranks[k] if k < len(ranks) else 0
            exps += [k] * (r - nxt)
        parts[q] = sorted(exps, reverse=True)
    width = max((len(v) for v in parts.values()), default=0)
    inv = []
    for i in range(width):
        d = 1
        for q, exps in parts.items():
            if i < len(exps):
                d *= q ** exps[i]
        inv.append(d)
    return tuple(sorted(inv))


def _qpart(o: int, q: int) -> int:
    out = 1
    while o % q == 0:
        o //= q
        out *= q
    return out


def _qpart_total(counts: dict[int, int], q: int) -> int:
    """Size of the q-primary part: elements whose order is a power of q."""
    return sum(v for o, v in counts.items() if _qpart(o, q) == o)


# ---------------------------------------------------------------------- symplectic spaces
class PairType:
    DEGENERATE = "Degenerate"
    NONDEGENERATE = "NonDegenerate"


@dataclass(frozen=True)
class SymplecticSpace:
    """F_p^{2g} with basis (x_1, y_1, ..., x_g, y_g) and omega(x_i, y_i) = 1."""

    g: int
    p: int

    @property
    def dim(self) -> int:
        return 2 * self.g

    @property
    def form(self) -> tuple[tuple[int, ...], ...]:
        n = self.dim
        gram = [[0] * n for _ in range(n)]
        for i in range(self.g):
            gram[2 * i][2 * i + 1] = 1
            gram[2 * i + 1][2 * i] = self.p - 1
        return tuple(map(tuple, gram))

    def omega(self, u: Sequence[int], v: Sequence[int]) -> int:
        s = 0
        for i in range(self.g):
            s += u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i]
        return s % self.p

    def x(self, i: int) -> Vector:
        return tuple(int(j == 2 * (i - 1)) for j in range(self.dim))

    def y(self, i: int) -> Vector:
        return tuple(int(j == 2 * (i - 1) + 1) for j in range(self.dim))

    def span(self, vectors: Iterable[Sequence[int]]) -> FpSubspace:
        return FpSubspace.span(vectors, self.p, self.dim)

    def radical(self, s: FpSubspace) -> FpSubspace:
        """{v in S : omega(v, S) = 0}."""
        if not s.basis:
            return s
        # coordinates c with sum c_i b_i orthogonal to every b_j
        k = len(s.basis)
        rows = [[self.omega(s.basis[i], s.basis[j]) for i in range(k)] for j in range(k)]
        coeffs = fp_nullspace(rows, self.p, k)
        vecs = []
        for c in coeffs:
            v = [0] * self.dim
            for ci, b in zip(c, s.basis):
                v = [(x + ci * y) % self.p for x, y in zip(v, b)]
            vecs.append(v)
        return self.span(vecs)

    def transvection(self, v: Sequence[int]):
        """The map x -> x + omega(x, v) v."""
        p = self.p

        def apply(x: Sequence[int]) -> Vector:
            c = self.omega(x, v)
            return tuple((a + c * b) % p for a, b in zip(x, v))

        return apply

    def transvection_on_covector(self, f: Sequence[int], v: Sequence[int]) -> Vector:
        """Normalized covector of T_v(ker f), i.e. f o T_v^{-1}."""
        # T_v^{-1}(x) = x - omega(x, v) v, so f o T^{-1} = f - f(v) omega(., v)
        fv = sum(a * b for a, b in zip(f, v)) % self.p
        w = [0] * self.dim
        for i in range(self.g):
            # omega(x, v) = x_{2i} v_{2i+1} - x_{2i+1} v_{2i}
            w[2 * i] = v[2 * i + 1]
            w[2 * i + 1] = -v[2 * i]
        return normalize_covector([a - fv * b for a, b in zip(f, w)], self.p)

    def sp_order(self) -> int:
        order = self.p ** (self.g * self.g)
        for i in range(1, self.g + 1):
            order *= self.p ** (2 * i) - 1
        return order


def pair_degeneracy(e: FpSubspace, e2: FpSubspace, space: SymplecticSpace) -> str:
    n = space.dim
    for h in (e, e2):
        if h.p != space.p or h.ambient_dim != n or h.dim != n - 1:
            raise ValueError("inputs must be hyperplanes of the symplectic space")
    if e == e2:
        raise ValueError("hyperplanes must be distinct")
    w = e.intersect(e2)
    rad = space.radical(w)
    return PairType.DEGENERATE if rad.dim == 2 else PairType.NONDEGENERATE


def _points(space: SymplecticSpace) -> list[Vector]:
    return list(itertools.product(range(space.p), repeat=space.dim))


def sp_group_size(space: SymplecticSpace, cap: int | None = None) -> int:
    """Size of the group generated by all transvections, by closure on point permutations."""
    if cap is None:
        cap = 51840
    pts = _points(space)
    index = {v: i for i, v in enumerate(pts)}
    gens = []
    for v in pts:
        if any(v):
            t = space.transvection(v)
            gens.append(tuple(index[t(x)] for x in pts))
    gens = list(dict.fromkeys(gens))
    ident = tuple(range(len(pts)))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = tuple(s[i] for i in g)
                if h not in seen:
                    seen.add(h)
                    if len(seen) > cap:
                        raise TooLarge(f"symplectic group exceeds {cap}")
                    nxt.append(h)
        frontier = nxt
    return len(seen)


def sp_orbits_on_hyperplane_pairs(space: SymplecticSpace) -> list[list[tuple[Vector, Vector]]]:
    """Orbits of the transvection group on ordered pairs of distinct hyperplanes (as covectors)."""
    if space.g > 3 or space.p > 5 or space.p ** space.dim > 5**4:
        raise TooLarge("brute-force orbit enumeration only for small parameters")
    covs = [h.covector() for h in hyperplanes(space.dim, space.p)]
    pairs = [(f, f2) for f in covs for f2 in covs if f != f2]
    idx = {pr: i for i, pr in enumerate(pairs)}
    parent = list(range(len(pairs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    # the transvection action on covectors, tabulated once per generator
    gens = [v for v in itertools.product(range(space.p), repeat=space.dim) if any(v)]
    for v in gens:
        img = {f: space.transvection_on_covector(f, v) for f in covs}
        for (f, f2), i in idx.items():
            j = idx[(img[f], img[f2])]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    orbits: dict[int, list] = {}
    for pr, i in idx.items():
        orbits.setdefault(find(i), []).append(pr)
    return list(orbits.values())


def sp_orbit_count_on_hyperplane_pairs(g: int, p: int) -> int:
    return len(sp_orbits_on_hyperplane_pairs(SymplecticSpace(g, p)))


def normal_form_pair(space: SymplecticSpace, kind: str) -> tuple[FpSubspace, FpSubspace]:
    """The two standard pairs: (<x1, x2, y2, ...>, <y1, x2, y2, ...>) and the degenerate one."""
    g = space.g
    rest = []
    for i in range(2, g + 1):
        rest += [space.x(i), space.y(i)]
    if kind == PairType.NONDEGENERATE:
        return space.span([space.x(1)] + rest), space.span([space.y(1)] + rest)
    tail = []
    for i in range(3, g + 1):
        tail += [space.x(i), space.y(i)]
    e = space.span([space.y(1), space.x(2), space.y(2)] + tail)
    e2 = space.span([space.x(1), space.y(1), space.y(2)] + tail)
    return e, e2


def _opposite(kind: str) -> str:
    return PairType.DEGENERATE if kind == PairType.NONDEGENERATE else PairType.NONDEGENERATE


def _e0_candidates(e: FpSubspace, e2: FpSubspace, space: SymplecticSpace) -> list[FpSubspace]:
    g = space.g
    add = lambda u, v: tuple((a + b) % space.p for a, b in zip(u, v))
    later = []
    for i in range(3, g + 1):
        later += [space.x(i), space.y(i)]
    return [
        space.span([space.x(1), space.y(1), space.x(2)] + later),
        space.span([space.x(1), space.x(2), add(space.y(1), space.y(2))] + later),
    ]


def find_E0(e: FpSubspace, e2: FpSubspace, space: SymplecticSpace) -> FpSubspace:
    """A hyperplane E0 making both (E, E0) and (E', E0) of the type opposite to (E, E')."""
    want = _opposite(pair_degeneracy(e, e2, space))

    def ok(h: FpSubspace) -> bool:
        return (h != e and h != e2 and pair_degeneracy(e, h, space) == want
                and pair_degeneracy(e2, h, space) == want)

    for h in _e0_candidates(e, e2, space):
        if ok(h):
            return h
    for h in hyperplanes(space.dim, space.p):
        if ok(h):
            return h
    raise LookupError("no hyperplane of the required type")
