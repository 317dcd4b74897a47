"""The thirteen acceptance criteria, each timed against its budget and reported on one line."""
import random
import time
from contextlib import contextmanager
from itertools import product

from badlocus import pseudo
from badlocus.cocycles import block_cohomology, cyclic_h1_oracle, torsion_h1, adjoint_cohomology
from badlocus.groups import centralizer, closure, conjugators_between, is_irreducible
from badlocus.modp import (FpSubspace, PairType, SymplecticSpace, hyperplanes, normal_form_pair, pair_degeneracy,
                           sp_orbits_on_hyperplane_pairs)
from badlocus.presentation import RepAssignment, abelian_square, cyclic_group, free_group, surface_group
from badlocus.projmat import ProjMat, mat_D_xi, mat_Mc, mat_S, scalar_commutator, vandermonde
from badlocus.singularity import (SINGULAR, SMOOTH, WeightProfile, fixed_codim, invariant_min_generators,
                                  psl2z_report, singular_verdict)
from badlocus.torus import TorsionDiag, invariant_subgroups

from conftest import ACCEPTANCE_LINES
from helpers import random_irreducible_free_rep, random_torsion


@contextmanager
def criterion(number: int, title: str, budget: float):
    state = {"ok": True}
    start = time.perf_counter()
    try:
        yield state
    except AssertionError:
        state["ok"] = False
        raise
    finally:
        elapsed = time.perf_counter() - start
        ok = state["ok"] and elapsed < budget
        line = f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} {title} ({elapsed:.2f} s, budget {budget:g} s)"
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert elapsed < budget, f"criterion {number} took {elapsed:.2f} s"


def test_01_commutator_identities():
    with criterion(1, "commutator identities", 1):
        for p in (2, 3, 5, 7):
            d, m = mat_D_xi(p), mat_Mc(p)
            for k in range(p):
                assert scalar_commutator(d, m ** k) == k


def test_02_centralizer_sweep():
    with criterion(2, "centralizer sweep over invariant torsion subgroups", 60):
        for p in (2, 3, 5):
            dxi, mc = mat_D_xi(p), mat_Mc(p)
            heis = closure([dxi, mc]).elements
            cyc = closure([dxi]).elements
            for m in (p, 2 * p):
                subs = [k for k in invariant_subgroups(p, m) if not k.is_trivial()]
                assert subs
                for k in subs:
                    z = centralizer(k.projmats() + [mat_Mc(p)])
                    n = max(e.order for e in z.elements)
                    got = {e.lift(n) for e in z.elements}
                    if k.is_d_xi():
                        assert z.order == p * p and got == {e.lift(n) for e in heis}
                    else:
                        assert z.order == p and got == {e.lift(n) for e in cyc}


def _exponents(g, p):
    d, m = mat_D_xi(p), mat_Mc(p)
    for a, b in product(range(p), repeat=2):
        if d ** a * m ** b == g:
            return a, b
    raise AssertionError("not in <D(xi)> x <M_c>")


def test_03_normalizer_action():
    with criterion(3, "normalizer action on <D(xi)> x <M_c>", 5):
        for p in (3, 5, 7):
            d, m = mat_D_xi(p), mat_Mc(p)
            v, s = vandermonde(p), mat_S(p)
            assert v * d * v.inverse() == m.inverse()
            assert s * m * s.inverse() == d * m
            mats = []
            for g in (v, s):
                gi = g.inverse()
                cols = [_exponents(g * x * gi, p) for x in (d, m)]
                mat = ((cols[0][0], cols[1][0]), (cols[0][1], cols[1][1]))
                assert (mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]) % p == 1
                mats.append(mat)
            # the two induced matrices generate SL(2, F_p)
            mul = lambda x, y: tuple(tuple(sum(x[i][k] * y[k][j] for k in range(2)) % p for j in range(2))
                                     for i in range(2))
            seen = {((1, 0), (0, 1))}
            frontier = list(seen)
            while frontier:
                frontier = [h for h in {mul(x, g) for x in frontier for g in mats} if h not in seen]
                seen.update(frontier)
            assert len(seen) == p * (p * p - 1)


def test_04_component_counts():
    with criterion(4, "pseudo-component and abelian counts against oracles", 120):
        expect = {(2, 2): (3, 1), (2, 3): (7, 7), (3, 2): (4, 2), (3, 3): (13, 26), (5, 2): (6, 4)}
        for (p, r), (comps, ab) in expect.items():
            assert pseudo.count_pseudo_components(p, r) == len(hyperplanes(r, p)) == comps
            orb = pseudo.surjection_orbits(p, r)
            assert orb.free
            assert pseudo.count_abelian_irreducible(p, r) == orb.count == ab
            assert pseudo.intersection_oracle(p, r) == {p - 1}
            assert pseudo.through_abelian_oracle(p, r) == {p + 1}


def test_05_symplectic_orbits():
    with criterion(5, "two symplectic orbits on hyperplane pairs", 120):
        for g, p in ((2, 2), (2, 3)):
            space = SymplecticSpace(g, p)
            orbits = sp_orbits_on_hyperplane_pairs(space)
            assert len(orbits) == 2
            labels = set()
            for orb in orbits:
                kinds = {pair_degeneracy(FpSubspace.kernel_of([f], p, space.dim),
                                         FpSubspace.kernel_of([f2], p, space.dim), space) for f, f2 in orb}
                assert len(kinds) == 1
                labels |= kinds
            assert labels == {PairType.DEGENERATE, PairType.NONDEGENERATE}


def test_06_euler_table():
    rng = random.Random(6)
    with criterion(6, "Euler class profile of pairwise intersections", 30):
        for p in (2, 3, 5):
            for g in (2, 3):
                space = SymplecticSpace(g, p)
                pairs = [normal_form_pair(space, kind) for kind in (PairType.NONDEGENERATE, PairType.DEGENERATE)]
                hs = hyperplanes(2 * g, p)
                pairs += [tuple(rng.sample(hs, 2)) for _ in range(5)]
                for e, e2 in pairs:
                    prof = pseudo.intersection_euler_profile(e, e2, space)
                    if pair_degeneracy(e, e2, space) == PairType.NONDEGENERATE:
                        assert prof == {k: int(k != 0) for k in range(p)}
                    else:
                        assert prof == {k: (p - 1) * (k == 0) for k in range(p)}
                    assert sum(prof.values()) == p - 1


def _t(p, m, j):
    return TorsionDiag(p, m, tuple((i * i + j * i) % m for i in range(p)))


def test_07_cohomology_dimensions():
    with criterion(7, "block cohomology dimensions by Fox calculus", 60):
        for p in (2, 3):
            for r in (2, 3):
                rho = pseudo.build_free_bad_rep(p, r, [_t(p, 2 * p, j) for j in range(r - 1)])
                dims = [x.dim_H1 for x in block_cohomology(rho)]
                assert dims[1:] == [(r - 1) * p] * (p - 1)
                assert sum(dims) == (r - 1) * (p * p - 1)
            rho = pseudo.build_surface_bad_rep(p, 2, 1, [(_t(p, 2 * p, 0), _t(p, 2 * p, 1))])
            dims = [x.dim_H1 for x in block_cohomology(rho)]
            assert dims[1:] == [2 * p] * (p - 1)
            assert sum(dims) == 2 * (p * p - 1)


def test_08_torsion_cohomology():
    with criterion(8, "torsion cohomology invariant factors", 30):
        for p, m in ((2, 2), (2, 4), (3, 3)):
            for n in (2, 3):
                free = torsion_h1(free_group(n), (1,) + (0,) * (n - 1), m, p)
                want = (m,) * ((p - 1) * (n - 1))
                assert free.restriction_invariants == want == free.transgression_kernel_invariants
                assert free.inflation_invariants == (p,)
                surf = torsion_h1(surface_group(n), (1,) + (0,) * (2 * n - 1), m, p)
                want = tuple(sorted((p,) + (m,) * (2 * (p - 1) * (n - 1))))
                assert surf.restriction_invariants == want == surf.transgression_kernel_invariants
                assert surf.inflation_invariants == (p,)
            assert torsion_h1(cyclic_group(p), (1,), m, p).invariants == cyclic_h1_oracle(p, m) == (p,)


def test_09_modular_group():
    with criterion(9, "PSL(2, Z) singular locus", 10):
        for p in (5, 7):
            assert psl2z_report(p).locus_size == 0
        r3, r2 = psl2z_report(3), psl2z_report(2)
        assert (r3.locus_size, r3.verdict) == (1, SINGULAR)
        assert (r2.locus_size, r2.verdict) == (1, SMOOTH)
        assert r3.block_dims[1:] == (1, 1) and r2.block_dims[1:] == (1,)


def test_10_singularity_verdicts():
    rng = random.Random(10)
    with criterion(10, "bad implies singular, trivial centralizer implies smooth", 60):
        for p in (2, 3):
            m = 2 * p
            for _ in range(2):
                for r in (2, 3):
                    rho = pseudo.build_free_bad_rep(p, r, [random_torsion(rng, p, m) for _ in range(r - 1)])
                    if is_irreducible(list(rho.images)) and centralizer(list(rho.images)).order == p:
                        assert singular_verdict(rho).verdict == SINGULAR
                data = [(random_torsion(rng, p, m), random_torsion(rng, p, m))]
                rho = pseudo.build_surface_bad_rep(p, 2, rng.randrange(p), data)
                if is_irreducible(list(rho.images)) and centralizer(list(rho.images)).order == p:
                    assert singular_verdict(rho).verdict == SINGULAR
            for spec_rho in (pseudo.build_free_bad_rep(p, 2, [_t(p, m, 0)]),
                             pseudo.build_free_bad_rep(p, 3, [_t(p, m, 0), _t(p, m, 1)]),
                             pseudo.build_surface_bad_rep(p, 2, 1, [(_t(p, m, 0), _t(p, m, 1))])):
                assert singular_verdict(spec_rho).verdict == SINGULAR
            a = ProjMat([[int(i <= j) for j in range(p)] for i in range(p)])
            b = ProjMat([[int(i >= j) for j in range(p)] for i in range(p)])
            for rho in (RepAssignment(free_group(2), (a, b)), RepAssignment(free_group(3), (a, b, a * b)),
                        RepAssignment(surface_group(2), (a, b, b, a))):
                v = singular_verdict(rho)
                assert v.centralizer_order == 1 and v.verdict == SMOOTH
        heis = RepAssignment(abelian_square(3), (mat_D_xi(3), mat_Mc(3)))
        assert adjoint_cohomology(heis).dim_H1 == 0
        assert singular_verdict(heis).verdict == SMOOTH


def test_11_vogt_coordinates():
    from badlocus.cli import random_sl2_pair

    rng = random.Random(11)
    with criterion(11, "trace coordinates of PSL(2) pairs", 5):
        for _ in range(100):
            a, b = random_sl2_pair(rng)
            x, y, z, t = pseudo.vogt_coordinates(a, b)
            assert t * t == x * y * z
        zero = TorsionDiag.zero(2, 4)
        for layers, zero_at in (((1, 0), (0, 2, 3)), ((0, 1), (1, 2, 3)), ((1, 1), (0, 1, 3))):
            for _ in range(3):
                data = [random_torsion(rng, 2, 4), zero]
                if layers == (1, 0):
                    data.reverse()
                rho = pseudo.free_rep_with_layers(2, layers, data)
                if not is_irreducible(list(rho.images)):
                    continue
                coords = pseudo.vogt_of_rep(rho)
                assert all(coords[i].is_zero() for i in zero_at)
        ab = RepAssignment(free_group(2), (mat_D_xi(2), mat_Mc(2)))
        assert all(c.is_zero() for c in pseudo.vogt_of_rep(ab))


def test_12_conjugators_monomial():
    rng = random.Random(12)
    with criterion(12, "conjugators between same-fiber bad representations are monomial", 60):
        found = 0
        for i in range(50):
            p = 2 if i % 2 else 3
            rho = random_irreducible_free_rep(rng, p)
            if i % 3:
                g = random_torsion(rng, p, 2 * p).to_projmat(2 * p) * mat_Mc(p, 2 * p) ** rng.randrange(p)
                rho2 = rho.conjugate(g)
            else:
                data = [random_torsion(rng, p, 2 * p) for _ in range(2)]
                rho2 = pseudo.free_rep_with_layers(p, rho.mc_exponent, data)
                if not is_irreducible(list(rho2.images)):
                    continue
            sols = conjugators_between(rho, rho2)
            found += len(sols)
            for s in sols:
                assert s.is_monomial() and s.monomial_shift() is not None
                assert rho.conjugate(s).images == rho2.images
        assert found > 0


def test_13_quotient_criteria():
    with criterion(13, "codimension and generator-count criteria agree", 120):
        for p in (2, 3, 5):
            for mult in product(range(9), repeat=p):
                if sum(mult) > 8:
                    continue
                w = WeightProfile(p, mult)
                gens = invariant_min_generators(w)
                assert (fixed_codim(w) > 1) == (gens > w.N)
                if sum(mult) <= 6:
                    assert gens == invariant_min_generators(w, method="enumerate")
