from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from badlocus.cyclo import (CycNum, common_order, cyclotomic_poly, euler_phi, lift_to_common_order,
                            nth_root, root_of_unity, root_of_unity_exponent, zeta)

ORDERS = [1, 2, 3, 4, 5, 6, 7, 10, 12]


def cyc(order):
    phi = euler_phi(order)
    return st.builds(lambda cs, d: CycNum(order, cs, d),
                     st.lists(st.integers(-6, 6), min_size=phi, max_size=phi), st.integers(1, 4))


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert [euler_phi(n) for n in (5, 7, 12)] == [4, 6, 4]


@pytest.mark.parametrize("n", ORDERS)
def test_zeta_has_exact_order(n):
    z = zeta(n)
    assert z ** n == 1
    if n > 1:
        assert all(z ** k != 1 for k in range(1, n))
    assert sum((zeta(n, k) for k in range(n)), CycNum.rational(0, n)) == (1 if n == 1 else 0)


def test_root_of_unity_in_odd_field():
    # zeta_6 lives in Q(zeta_3)
    w = root_of_unity(6, 1, 3)
    assert w.order == 3 and w ** 6 == 1 and w ** 3 == -1
    with pytest.raises(ValueError):
        root_of_unity(4, 1, 3)


def test_lift_preserves_value():
    a = zeta(3) + 2
    b = a.lift(12)
    assert b.order == 12 and a == b
    x, y = lift_to_common_order(zeta(4), zeta(3))
    assert x.order == y.order == 12
    assert common_order(4, 6, 5) == 60


@pytest.mark.parametrize("n", [5, 7, 12])
def test_galois_and_conjugate(n):
    z = zeta(n)
    assert z.galois(n - 1) == z.inverse()
    assert (z * z.conjugate()) == 1
    assert abs(z.to_complex() - complex(__import__("cmath").exp(2j * __import__("math").pi / n))) < 1e-12


def test_nth_root():
    assert nth_root(CycNum.rational(Fraction(9, 4)), 2) == Fraction(3, 2)
    r = nth_root(zeta(3), 3)
    assert r is not None and r ** 3 == zeta(3)
    assert nth_root(CycNum.rational(2), 2) is None
    i = nth_root(CycNum.rational(-1, 4), 2)
    assert i is not None and i ** 2 == -1
    s = nth_root(zeta(5) * 32, 5)
    assert s ** 5 == zeta(5) * 32


def test_root_of_unity_exponent():
    assert root_of_unity_exponent(zeta(5, 2)) == (10, 4)
    assert root_of_unity_exponent(CycNum.rational(2, 5)) is None


@given(st.sampled_from(ORDERS).flatmap(lambda n: st.tuples(cyc(n), cyc(n), cyc(n))))
def test_field_axioms(t):
    a, b, c = t
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if not a.is_zero():
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(st.sampled_from([3, 4, 5]).flatmap(cyc), st.integers(1, 3))
def test_hash_consistent_within_order(a, k):
    b = CycNum(a.order, a.num, a.den)
    assert hash(a) == hash(b) and a == b
    assert a.lift(a.order * k) == a
