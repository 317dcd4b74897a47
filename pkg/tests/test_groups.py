import random

import pytest

from badlocus import pseudo
from badlocus.cyclo import zeta
from badlocus.groups import (Badness, NotBad, centralizer, classify, closure, conjugate_to_normal_form,
                             conjugators_between, default_cap, eigenspace_shift_holds, intertwiners,
                             is_irreducible, layer_decomposition, poly_mc_times_dpower)
from badlocus.modp import TooLarge
from badlocus.projmat import ProjMat, diag, mat_D_xi, mat_Mc, vandermonde
from badlocus.torus import TorsionDiag

from helpers import random_irreducible_free_rep, random_torsion


def test_closure_orders():
    assert closure([mat_D_xi(3), mat_Mc(3)]).order == 9
    assert closure([mat_Mc(5)]).order == 5
    with pytest.raises(TooLarge):
        closure([mat_D_xi(5), mat_Mc(5)], cap=10)


def test_default_cap_env(monkeypatch):
    monkeypatch.setenv("BADLOCUS_CAP", "77")
    assert default_cap() == 77
    monkeypatch.delenv("BADLOCUS_CAP")
    assert default_cap() == 100_000


def test_irreducibility():
    assert is_irreducible([mat_D_xi(3), mat_Mc(3)])
    assert not is_irreducible([mat_D_xi(3)])
    assert not is_irreducible([ProjMat([[1, 1], [0, 1]]), ProjMat([[1, 2], [0, 1]])])


@pytest.mark.parametrize("p", [2, 3, 5])
def test_heisenberg_pair_is_bad_zpzp(p):
    v = classify([mat_D_xi(p), mat_Mc(p)])
    assert v.kind == Badness.BAD_ZPZP and v.centralizer.order == p * p


def test_generic_pair_is_bad_zp():
    t = TorsionDiag(3, 6, (0, 1, 4))
    v = classify([mat_Mc(3, 6), t.to_projmat(6)])
    assert v.kind == Badness.BAD_ZP
    assert mat_D_xi(3) in v.centralizer


def test_good_and_reducible():
    a = ProjMat([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    b = ProjMat([[1, 0, 0], [1, 1, 0], [0, 1, 1]])
    assert classify([a, b]).kind == Badness.GOOD
    assert classify([diag([1, 2, 3])]).kind == Badness.NOT_IRREDUCIBLE


def test_intertwiners_with_non_root_of_unity_scalar():
    # diag(1, 2) M and its conjugate: the scalar det ratio is not a root of unity
    a = ProjMat([[0, 2], [1, 0]])
    g = ProjMat([[1, 1], [0, 1]])
    b = g * a * g.inverse()
    sols = intertwiners([a, mat_D_xi(2)], [b, g * mat_D_xi(2) * g.inverse()])
    assert g in sols


def test_normal_form():
    rng = random.Random(5)
    for p in (2, 3):
        rho = random_irreducible_free_rep(rng, p)
        g = ProjMat([[rng.randint(-2, 2) + (i == j) * 5 for j in range(p)] for i in range(p)])
        conj = rho.conjugate(g)
        nf = conjugate_to_normal_form(list(conj.images))
        assert all(h.monomial_shift() is not None for h in nf.images)
        assert nf.exact_mc
        assert tuple(nf.conjugator * h * nf.conjugator.inverse() for h in conj.images) == nf.images
    with pytest.raises(NotBad):
        conjugate_to_normal_form([ProjMat([[1, 1], [0, 1]]), ProjMat([[1, 0], [1, 1]])])


def test_conjugators_are_monomial():
    rng = random.Random(11)
    p = 3
    rho = random_irreducible_free_rep(rng, p)
    shift = random_torsion(rng, p, 6).to_projmat(6) * mat_Mc(p, 6)
    rho2 = rho.conjugate(shift)
    sols = conjugators_between(rho, rho2)
    assert shift in sols
    assert all(s.monomial_shift() is not None for s in sols)
    assert len(sols) == centralizer(list(rho.images)).order


def test_layer_decomposition_and_poly():
    p = 3
    t = TorsionDiag(3, 3, (0, 1, 1)).to_projmat(3)
    g = t * mat_Mc(3) ** 2
    layers = layer_decomposition(g)
    assert [any(not x.is_zero() for x in d) for d in layers] == [False, False, True]
    poly = ProjMat([[1, 0, 2], [2, 1, 0], [0, 2, 1]])  # 1 + 2 M_c
    a, k = poly_mc_times_dpower(poly * mat_D_xi(3) ** 2)
    assert k == 2 and a[0] == 1 and a[1] == 2 and a[2].is_zero()
    assert poly_mc_times_dpower(vandermonde(p)) is None
    assert poly_mc_times_dpower(ProjMat([[1, 1, 0], [0, 1, 0], [0, 0, 1]])) is None


def test_eigenspace_shift():
    assert eigenspace_shift_holds(mat_D_xi(3), mat_Mc(3))
    assert not eigenspace_shift_holds(ProjMat([[1, 1], [0, 1]]), ProjMat([[1, 0], [1, 1]]))
