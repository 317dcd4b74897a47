import itertools
import random

import pytest
from hypothesis import given, strategies as st

from badlocus.modp import (FpSubspace, Lattice, LatticeQuotient, PairType, SymplecticSpace, TooLarge,
                           abelian_invariants, find_E0, fp_nullspace, howell_form, hyperplanes,
                           integer_kernel, invariants_from_order_counts, lattice_from_congruence,
                           normal_form_pair, pair_degeneracy, snf, sp_group_size,
                           sp_orbit_count_on_hyperplane_pairs, sp_orbits_on_hyperplane_pairs,
                           span_contains, span_elements, span_size)

int_matrix = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)))


def _mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


@given(int_matrix)
def test_snf_is_a_valid_smith_form(m):
    s = snf(m)
    assert [list(r) for r in _mul(_mul(s.U, m), s.V)] == [list(r) for r in s.D]
    inv = s.invariants
    assert all(d > 0 for d in inv)
    assert all(inv[i + 1] % inv[i] == 0 for i in range(len(inv) - 1))
    assert s.rank == len(inv)


def test_abelian_invariants():
    assert abelian_invariants([[2, 0], [0, 3]], 2) == (6,)
    assert abelian_invariants([[2, 4]], 2) == (2, 0)
    assert abelian_invariants([], 3) == (0, 0, 0)


def test_howell_spans():
    h = howell_form([[2, 0], [0, 2]], 4, 2)
    assert span_size(h, 4) == 4
    assert len(set(span_elements(h, 4, 2))) == 4
    assert span_contains(h, 4, (2, 2)) and not span_contains(h, 4, (1, 0))
    # Howell form catches the annihilator row: <(2, 1)> mod 4 contains (0, 2)
    h2 = howell_form([[2, 1]], 4, 2)
    assert span_size(h2, 4) == 4 and span_contains(h2, 4, (0, 2))


@given(st.lists(st.lists(st.integers(0, 5), min_size=3, max_size=3), max_size=4), st.sampled_from([4, 6, 9]))
def test_howell_size_matches_bruteforce(rows, m):
    h = howell_form(rows, m, 3)
    span = {(0, 0, 0)}
    for r in rows:
        span = {tuple((a + k * b) % m for a, b in zip(v, r)) for v in span for k in range(m)}
    assert span_size(h, m) == len(span)
    assert set(span_elements(h, m, 3)) == span


def test_fp_subspaces():
    p = 3
    a = FpSubspace.span([(1, 0, 0), (0, 1, 0)], p, 3)
    b = FpSubspace.span([(0, 1, 0), (0, 0, 1)], p, 3)
    assert a.dim == 2 and (a + b).dim == 3 and a.intersect(b).dim == 1
    assert a.contains((2, 1, 0)) and not a.contains((0, 0, 1))
    assert len(list(a.elements())) == 9
    assert all(sum(x * y for x, y in zip(v, a.covector())) % p == 0 for v in a.elements())
    assert fp_nullspace([[1, 1, 1]], 2, 3) and len(fp_nullspace([[1, 1, 1]], 2, 3)) == 2


@pytest.mark.parametrize("r,p", [(2, 2), (3, 2), (2, 3), (3, 3), (2, 5)])
def test_hyperplane_count(r, p):
    hs = hyperplanes(r, p)
    assert len(hs) == (p ** r - 1) // (p - 1)
    assert len(set(hs)) == len(hs) and all(h.dim == r - 1 for h in hs)


def test_integer_kernel_and_lattices():
    ker = integer_kernel([[1, 2, 3]], 3)
    assert len(ker) == 2 and all(v[0] + 2 * v[1] + 3 * v[2] == 0 for v in ker)
    lat = lattice_from_congruence([[1, 1]], 3, 2)
    assert lat.rank == 2 and lat.contains((1, 2)) and not lat.contains((1, 0))
    with pytest.raises(ValueError):
        lat.coords((1, 0))
    q = LatticeQuotient(Lattice([(1, 0), (0, 1)], 2), [(2, 0), (0, 6)])
    assert q.invariants == (2, 6) and q.order == 12
    assert LatticeQuotient(Lattice([(1, 0)], 1), []).invariants == (0,)


def test_invariants_from_order_counts():
    # Z/2 x Z/4: orders 1:1, 2:3, 4:4
    assert invariants_from_order_counts({1: 1, 2: 3, 4: 4}) == (2, 4)
    # Z/6 = Z/2 x Z/3
    assert invariants_from_order_counts({1: 1, 2: 1, 3: 2, 6: 2}) == (6,)
    assert invariants_from_order_counts({1: 1}) == ()


def test_symplectic_basics():
    s = SymplecticSpace(2, 3)
    assert s.dim == 4
    assert s.omega(s.x(1), s.y(1)) == 1 and s.omega(s.y(1), s.x(1)) == 2
    assert s.omega(s.x(1), s.y(2)) == 0
    assert s.sp_order() == 3 ** 4 * (3 ** 2 - 1) * (3 ** 4 - 1)
    assert sp_group_size(SymplecticSpace(2, 2)) == 720
    t = s.transvection(s.x(1))
    rng = random.Random(1)
    for _ in range(20):
        u = tuple(rng.randrange(3) for _ in range(4))
        v = tuple(rng.randrange(3) for _ in range(4))
        assert s.omega(t(u), t(v)) == s.omega(u, v)


@pytest.mark.parametrize("g,p", [(2, 2), (2, 3)])
def test_two_orbits_labelled_by_degeneracy(g, p):
    space = SymplecticSpace(g, p)
    orbits = sp_orbits_on_hyperplane_pairs(space)
    assert len(orbits) == 2
    labels = []
    for orb in orbits:
        kinds = {pair_degeneracy(FpSubspace.kernel_of([f], p, space.dim), FpSubspace.kernel_of([f2], p, space.dim),
                                 space) for f, f2 in orb}
        assert len(kinds) == 1
        labels.append(kinds.pop())
    assert sorted(labels) == [PairType.DEGENERATE, PairType.NONDEGENERATE]


def test_orbit_cap():
    with pytest.raises(TooLarge):
        sp_orbit_count_on_hyperplane_pairs(4, 5)


@pytest.mark.parametrize("g,p", [(2, 2), (2, 3), (3, 2), (3, 5)])
def test_normal_forms_and_e0(g, p):
    space = SymplecticSpace(g, p)
    for kind in (PairType.NONDEGENERATE, PairType.DEGENERATE):
        e, e2 = normal_form_pair(space, kind)
        assert pair_degeneracy(e, e2, space) == kind
        e0 = find_E0(e, e2, space)
        other = PairType.DEGENERATE if kind == PairType.NONDEGENERATE else PairType.NONDEGENERATE
        assert pair_degeneracy(e, e0, space) == other == pair_degeneracy(e2, e0, space)


@given(st.integers(0, 10 ** 6))
def test_degeneracy_is_transvection_invariant(seed):
    rng = random.Random(seed)
    p = rng.choice([2, 3])
    space = SymplecticSpace(2, p)
    hs = hyperplanes(4, p)
    e, e2 = rng.sample(hs, 2)
    v = tuple(rng.randrange(p) for _ in range(4))
    f, f2 = e.covector(), e2.covector()
    g, g2 = space.transvection_on_covector(f, v), space.transvection_on_covector(f2, v)
    img = FpSubspace.kernel_of([g], p, 4), FpSubspace.kernel_of([g2], p, 4)
    assert pair_degeneracy(*img, space) == pair_degeneracy(e, e2, space)


def test_pair_degeneracy_rejects_bad_input():
    space = SymplecticSpace(2, 2)
    e, _ = normal_form_pair(space, PairType.NONDEGENERATE)
    with pytest.raises(ValueError):
        pair_degeneracy(e, e, space)
