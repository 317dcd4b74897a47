import pytest

from badlocus.cyclo import zeta
from badlocus.projmat import (OrderOverflow, ProjMat, diag, identity, is_prime, mat_D_xi, mat_Mc, mat_perm,
                              mat_S, mult_perm, proj_order, scalar_commutator, vandermonde)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_commutator_identity(p):
    d, m = mat_D_xi(p), mat_Mc(p)
    for k in range(p):
        assert scalar_commutator(d, m ** k) == k


def test_canonical_form_ignores_scalars():
    a = ProjMat([[2, 4], [0, 6]])
    b = ProjMat([[1, 2], [0, 3]])
    assert a == b and hash(a) == hash(b)
    c = ProjMat([[zeta(3), 0], [0, 1]])
    assert c == diag([1, zeta(3, 2)], 3)


def test_mc_convention():
    m = mat_Mc(3)
    rows = m.rows()
    # M_c e_0 = e_1: column 0 has its one in row 1
    assert rows[1][0] == 1 and rows[0][0] == 0
    assert m.monomial_shift() == 1
    assert mat_perm([0, 1, 2]) == identity(3)


def test_orders():
    assert proj_order(mat_Mc(5), 10) == 5
    assert proj_order(mat_D_xi(5), 10) == 5
    with pytest.raises(OrderOverflow):
        proj_order(ProjMat([[1, 1], [0, 1]]), 20)


def test_vandermonde_and_s():
    p = 5
    v, s, d, m = vandermonde(p), mat_S(p), mat_D_xi(p), mat_Mc(p)
    assert v * d * v.inverse() == m.inverse()
    assert s * m * s.inverse() == d * m
    with pytest.raises(ValueError):
        mat_S(2)


def test_mult_perm_and_primes():
    assert mult_perm(5, 2) == [0, 2, 4, 1, 3]
    with pytest.raises(ValueError):
        mult_perm(5, 10)
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    with pytest.raises(ValueError):
        mat_Mc(4)


def test_non_scalar_commutator():
    a = ProjMat([[1, 1], [0, 1]])
    b = ProjMat([[1, 0], [1, 1]])
    assert scalar_commutator(a, b) is None
    assert scalar_commutator(a, a) == 0
