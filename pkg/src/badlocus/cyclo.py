"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is stored as an integer coefficient vector of length phi(n) over a
common positive denominator, i.e. a polynomial in zeta_n reduced modulo the
n-th cyclotomic polynomial.  Values of different orders are combined by
embedding both into Q(zeta_lcm).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Union

Rational = Union[int, Fraction]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # both low-to-high, den monic, exact division over Z
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + len(den) - 1]
        out[i] = q
        if q:
            for j, c in enumerate(den):
                num[i + j] -= q * c
    assert not any(num), "inexact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


class _Tables:
    """Reduction data for one order n: x^k mod Phi_n for 0 <= k < max(n, 2 phi)."""

    def __init__(self, n: int):
        self.n = n
        self.phi = euler_phi(n)
        phi_poly = cyclotomic_poly(n)
        top = max(n, 2 * self.phi)
        powers = []
        cur = [1] + [0] * (self.phi - 1) if self.phi > 0 else []
        for _ in range(top):
            powers.append(tuple(cur))
            # multiply by x and reduce
            carry = cur[-1]
            nxt = [0] + cur[:-1]
            if carry:
                for j in range(self.phi):
                    nxt[j] -= carry * phi_poly[j]
            cur = nxt
        self.powers = powers


@lru_cache(maxsize=None)
def _tables(n: int) -> _Tables:
    return _Tables(n)


class CycNum:
    """An element of Q(zeta_n).

    Equality compares values (lifting to a common order when needed).  Hashes
    agree across orders for rational values; for irrational values they are
    only consistent among numbers of the same order, so hashed collections
    should hold numbers of one order (the matrix layers take care of this).
    """

    __slots__ = ("order", "num", "den")

    def __init__(self, order: int, num, den: int = 1):
        phi = euler_phi(order)
        num = tuple(int(c) for c in num)
        if len(num) != phi:
            raise ValueError(f"expected {phi} coefficients for order {order}")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num = tuple(-c for c in num)
            den = -den
        g = gcd(den, *num)
        if g > 1:
            num = tuple(c // g for c in num)
            den //= g
        self.order = order
        self.num = num
        self.den = den

    # ------------------------------------------------------------------ builders
    @classmethod
    def rational(cls, q: Rational, order: int = 1) -> "CycNum":
        q = Fraction(q)
        phi = euler_phi(order)
        return cls(order, (q.numerator,) + (0,) * (phi - 1), q.denominator)

    @classmethod
    def from_coeffs(cls, order: int, coeffs) -> "CycNum":
        """Build from exact rational coefficients in the power basis of zeta_order."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = _lcm(den, c.denominator)
        return cls(order, [c.numerator * (den // c.denominator) for c in fr], den)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    # ------------------------------------------------------------------ order handling
    def lift(self, n: int) -> "CycNum":
        """Embed into Q(zeta_n); n must be a multiple of self.order."""
        if n == self.order:
            return self
        if n % self.order:
            raise ValueError(f"cannot embed order {self.order} into order {n}")
        step = n // self.order
        tab = _tables(n)
        acc = [0] * tab.phi
        for k, c in enumerate(self.num):
            if c:
                for j, v in enumerate(tab.powers[k * step]):
                    if v:
                        acc[j] += c * v
        return CycNum(n, acc, self.den)

    def _coerce(self, other) -> tuple["CycNum", "CycNum"]:
        if isinstance(other, CycNum):
            if other.order == self.order:
                return self, other
            n = _lcm(self.order, other.order)
            return self.lift(n), other.lift(n)
        if isinstance(other, (int, Fraction)):
            return self, CycNum.rational(other, self.order)
        return NotImplemented  # type: ignore[return-value]

    # ------------------------------------------------------------------ arithmetic
    def __add__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        if a.den == b.den:
            return CycNum(a.order, [x + y for x, y in zip(a.num, b.num)], a.den)
        return CycNum(a.order, [x * b.den + y * a.den for x, y in zip(a.num, b.num)], a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.order, [-x for x in self.num], self.den)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycNum(self.order, [x * q.numerator for x in self.num], self.den * q.denominator)
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        tab = _tables(a.order)
        phi = tab.phi
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        conv[i + j] += x * y
        out = conv[:phi]
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                for j, v in enumerate(tab.powers[k]):
                    if v:
                        out[j] += c * v
        return CycNum(a.order, out, a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        """Multiplicative inverse via extended Euclid against Phi_n."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n = self.order
        phi_poly = [Fraction(c) for c in cyclotomic_poly(n)]
        a = _trim([Fraction(c) for c in self.num])
        # invariant: r_i = s_i * a (mod Phi)
        r0, r1 = phi_poly, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _trim(_poly_sub(s0, _poly_mul(q, s1)))
        if r1[0] != 0:
            inv = [c / r1[0] for c in s1]
        else:
            inv = [c / r0[0] for c in s0]
        inv = inv + [Fraction(0)] * (euler_phi(n) - len(inv))
        res = CycNum.from_coeffs(n, inv[: euler_phi(n)])
        return res * self.den

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int) -> "CycNum":
        if e < 0:
            return self.inverse() ** (-e)
        result = CycNum.rational(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # ------------------------------------------------------------------ predicates
    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return Fraction(self.num[0] if self.num else 0, self.den)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.to_fraction() == other
        if not isinstance(other, CycNum):
            return NotImplemented
        if other.order == self.order:
            return self.num == other.num and self.den == other.den
        a, b = self._coerce(other)
        return a.num == b.num and a.den == b.den

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.to_fraction())
        return hash((self.order, self.num, self.den))

    # ------------------------------------------------------------------ Galois
    def galois(self, u: int) -> "CycNum":
        """Image under the automorphism zeta_n -> zeta_n^u (u a unit mod n)."""
        n = self.order
        if gcd(u, n) != 1:
            raise ValueError("automorphism exponent must be a unit")
        tab = _tables(n)
        acc = [0] * tab.phi
        for k, c in enumerate(self.num):
            if c:
                for j, v in enumerate(tab.powers[(u * k) % n]):
                    if v:
                        acc[j] += c * v
        return CycNum(n, acc, self.den)

    def conjugate(self) -> "CycNum":
        return self.galois(-1 % self.order) if self.order > 2 else self

    def to_complex(self) -> complex:
        """Floating-point value, for display only."""
        import cmath

        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(c * z**k for k, c in enumerate(self.num)) / self.den

    def __repr__(self) -> str:
        if self.is_rational():
            return f"CycNum({self.to_fraction()})"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z{self.order}^{k}")
        return "CycNum(" + " + ".join(terms) + ")"


# ---------------------------------------------------------------------- polynomial helpers
def _trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p or [Fraction(0)]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_divmod(a, b):
    a = list(a)
    b = _trim(b)
    if len(a) < len(b):
        return [Fraction(0)], _trim(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return _trim(q), _trim(a[: len(b) - 1] or [Fraction(0)])


# ---------------------------------------------------------------------- module-level API
def zeta(n: int, k: int = 1) -> CycNum:
    """zeta_n^k in canonical reduced form."""
    if n < 1:
        raise ValueError("order must be positive")
    return CycNum(n, _tables(n).powers[k % n])


def root_of_unity(n: int, k: int, order: int | None = None) -> CycNum:
    """zeta_n^k expressed in Q(zeta_order) (default: order n).

    Works when n divides order, or when order is odd and n divides 2*order
    (then zeta_2order = -zeta_order^((order+1)/2)).
    """
    if order is None or order == n:
        return zeta(n, k)
    if order % n == 0:
        return zeta(order, k * (order // n))
    if order % 2 == 1 and (2 * order) % n == 0:
        j = (k * (2 * order // n)) % (2 * order)
        val = zeta(order, j * ((order + 1) // 2))
        return -val if j % 2 else val
    raise ValueError(f"zeta_{n} is not in Q(zeta_{order})")


def lift_to_common_order(a: CycNum, b: CycNum) -> tuple[CycNum, CycNum]:
    n = _lcm(a.order, b.order)
    return a.lift(n), b.lift(n)


def common_order(*orders: int) -> int:
    n = 1
    for o in orders:
        n = _lcm(n, o)
    return n


def field_roots_of_unity(order: int) -> int:
    """Size of the group of roots of unity inside Q(zeta_order)."""
    return _lcm(2, order)


def root_of_unity_exponent(a: CycNum) -> tuple[int, int] | None:
    """Return (L, j) with a = zeta_L^j, L the number of roots of unity in the field."""
    L = field_roots_of_unity(a.order)
    if a.is_zero() or a**L != 1:
        return None
    for j in range(L):
        if root_of_unity(L, j, a.order) == a:
            return L, j
    return None


def _rational_root(q: Fraction, k: int) -> Fraction | None:
    def iroot(v: int) -> int | None:
        r = round(v ** (1.0 / k)) if v < 2**1000 else None
        if r is None:
            lo, hi = 0, 1
            while hi**k <= v:
                hi *= 2
            while lo < hi:
                mid = (lo + hi + 1) // 2
                if mid**k <= v:
                    lo = mid
                else:
                    hi = mid - 1
            r = lo
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand**k == v:
                return cand
        return None

    sign = 1
    if q < 0:
        if k % 2 == 0:
            return None
        sign, q = -1, -q
    a, b = iroot(q.numerator), iroot(q.denominator)
    if a is None or b is None:
        return None
    return sign * Fraction(a, b)


def _field_root_exact(a: CycNum, k: int) -> CycNum | None:
    """A k-th root of a inside Q(zeta_order), found by exact factorization."""
    if a.is_rational():
        r = _rational_root(a.to_fraction(), k)
        if r is not None:
            return CycNum.rational(r, a.order)
    if a.order <= 2:
        return None
    from sympy import I, Poly, QQ, exp, pi, symbols

    x = symbols("x")
    n = a.order
    field = QQ.algebraic_field(exp(2 * pi * I / n))
    gen = field.from_sympy(exp(2 * pi * I / n))
    elem = field.zero
    for c in reversed(a.coeffs):
        elem = elem * gen + field.convert(c)
    poly = Poly([field.one] + [field.zero] * (k - 1) + [-elem], x, domain=field)
    for fac, _ in poly.factor_list()[1]:
        if fac.degree() == 1:
            lead, const = fac.all_coeffs()
            root = field.from_sympy(-const / lead)
            rep = [Fraction(int(c.numerator), int(c.denominator)) for c in root.rep]
            coeffs = list(reversed(rep)) + [Fraction(0)] * (euler_phi(n) - len(rep))
            cand = CycNum.from_coeffs(n, coeffs)
            if cand**k == a:
                return cand
    return None


def nth_root(a: CycNum, k: int) -> CycNum | None:
    """Some b with b^k = a, or None.

    Roots of unity (times rational k-th powers) get exact cyclotomic roots,
    enlarging the order when needed; other values are searched for inside the
    same field by exact factorization of x^k - a.
    """
    if k < 1:
        raise ValueError("root index must be positive")
    if a.is_zero():
        return a
    if k == 1:
        return a
    n = a.order
    L = field_roots_of_unity(n)
    # a = zeta_L^j * q with q rational
    for j in range(L):
        u = root_of_unity(L, j, n)
        q = a / u
        if q.is_rational():
            r = _rational_root(q.to_fraction(), k)
            if r is None:
                continue
            # k-th root of zeta_L^j is zeta_{kL}^j, possibly already in the field
            g = gcd(k, L)
            if j % g == 0:
                t = (j // g) * pow(k // g, -1, L // g) % (L // g)
                return root_of_unity(L, t, n) * r
            big = common_order(n, k * L)
            return root_of_unity(k * L, j, big) * r
    return _field_root_exact(a, k)
