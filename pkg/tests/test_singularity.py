from itertools import product

import pytest
from hypothesis import given, strategies as st

from badlocus import pseudo
from badlocus.modp import TooLarge
from badlocus.presentation import RepAssignment, abelian_square, free_group, surface_group
from badlocus.projmat import ProjMat, mat_D_xi, mat_Mc
from badlocus.singularity import (SINGULAR, SMOOTH, WeightProfile, biweight_min_generators, fixed_codim,
                                  invariant_min_generators, is_singular_origin, minimal_zero_sum_multisets,
                                  multichoose, psl2z_locus_size, psl2z_report, psl2z_witness, singular_verdict)
from badlocus.torus import TorsionDiag


def test_multichoose():
    assert [multichoose(3, k) for k in range(4)] == [1, 3, 6, 10]
    assert multichoose(0, 0) == 1 and multichoose(0, 2) == 0


def test_minimal_zero_sums_z3():
    mz = minimal_zero_sum_multisets([0, 1, 2], lambda a, b: (a + b) % 3, 0, 5)
    assert sorted(tuple(sorted(s.items())) for s in mz) == [((0, 1),), ((1, 1), (2, 1)), ((1, 3),), ((2, 3),)]


@pytest.mark.parametrize("mult,gens,sing", [((2, 1), 3, False), ((0, 2), 3, True), ((0, 1, 1), 3, True),
                                           ((0, 1, 0), 1, False), ((3, 0, 0), 3, False)])
def test_profiles(mult, gens, sing):
    w = WeightProfile(len(mult), mult)
    assert invariant_min_generators(w) == gens == invariant_min_generators(w, method="enumerate")
    assert is_singular_origin(w) is sing


@given(st.sampled_from([2, 3, 5]).flatmap(
    lambda p: st.lists(st.integers(0, p - 1), max_size=6).map(lambda ws: WeightProfile.from_weights(p, ws))))
def test_criteria_agree(w):
    assert (fixed_codim(w) > 1) == (invariant_min_generators(w) > w.N)
    assert invariant_min_generators(w) >= w.N


def test_enumeration_bound():
    with pytest.raises(TooLarge):
        invariant_min_generators(WeightProfile(2, (7, 7)), method="enumerate")


def test_biweight_count_matches_enumeration():
    mult = {(1, 0): 1, (0, 1): 1, (1, 1): 1}
    assert biweight_min_generators(2, mult) == biweight_min_generators(2, mult, method="enumerate")


def test_psl2z():
    r2, r3 = psl2z_report(2), psl2z_report(3)
    assert (r2.locus_size, r2.verdict, r2.block_dims) == (1, SMOOTH, (0, 1))
    assert (r3.locus_size, r3.verdict, r3.block_dims) == (1, SINGULAR, (0, 1, 1))
    assert r2.abelianization == (6,)
    for p in (5, 7):
        r = psl2z_report(p)
        assert r.locus_size == 0 and r.verdict is None and r.layer_maps == ()
    with pytest.raises(ValueError):
        psl2z_witness(5)


def test_free_verdicts():
    t = TorsionDiag(3, 6, (0, 1, 4))
    bad = singular_verdict(pseudo.build_free_bad_rep(3, 2, [t]))
    assert bad.verdict == SINGULAR and bad.centralizer_order == 3
    assert bad.profile.multiplicities == (2, 3, 3)
    ab = singular_verdict(RepAssignment(free_group(2), (mat_D_xi(3), mat_Mc(3))))
    assert ab.verdict == SINGULAR and ab.extension and ab.centralizer_order == 9


def test_smooth_verdicts():
    heis = singular_verdict(RepAssignment(abelian_square(3), (mat_D_xi(3), mat_Mc(3))))
    assert heis.verdict == SMOOTH and heis.quotient_dim == 0 and not heis.extension
    a = ProjMat([[1, 1], [0, 1]])
    b = ProjMat([[1, 0], [1, 1]])
    good = singular_verdict(RepAssignment(free_group(2), (a, b)))
    assert good.verdict == SMOOTH and good.centralizer_order == 1
    s = singular_verdict(RepAssignment(surface_group(2), (a, b, b, a)))
    assert s.verdict == SMOOTH


def test_reducible_rejected():
    with pytest.raises(ValueError):
        singular_verdict(RepAssignment(free_group(2), (mat_D_xi(3), mat_D_xi(3))))
