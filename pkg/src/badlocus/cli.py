"""Command line entry point: verification suites with text and JSON reports.

Exit codes: 0 when every check passes, 1 when a check fails or an enumeration
cap is hit, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .groups import centralizer, closure, default_cap
from .modp import PairType, SymplecticSpace, TooLarge, hyperplanes, normal_form_pair
from .presentation import RepAssignment, free_group, parse_group_spec, surface_group
from .projmat import ProjMat, is_prime, mat_D_xi, mat_Mc
from . import pseudo, singularity
from .cocycles import block_cohomology, torsion_h1
from .torus import TorsionDiag, d_xi_subgroup, invariant_subgroups


@dataclass
class Report:
    command: str
    parameters: dict
    checks: list = field(default_factory=list)
    runtime_ms: float = 0.0

    def check(self, cid: str, expected: Any, computed: Any, ok: bool | None = None) -> bool:
        ok = (expected == computed) if ok is None else ok
        self.checks.append({"id": cid, "expected": _jsonable(expected), "computed": _jsonable(computed), "pass": bool(ok)})
        return ok

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def to_dict(self) -> dict:
        return {"command": self.command, "parameters": self.parameters, "checks": self.checks,
                "runtime_ms": self.runtime_ms}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in items]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def dumps(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, ensure_ascii=False)


def _map(fn: Callable, items: Sequence, parallel: bool) -> list:
    if parallel and len(items) > 1:
        with ProcessPoolExecutor() as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def sample_torsion(p: int, m: int, j: int = 0) -> TorsionDiag:
    """A torsion point whose shift-orbit generates more than <D(xi)>."""
    return TorsionDiag(p, m, tuple((i * i + j * i) % m for i in range(p)))


# ---------------------------------------------------------------------- commands
def _centralizer_point(args):
    p, m, howell, cap = args
    from .torus import DiagSubgroup

    k = DiagSubgroup(p, m, howell)
    gens = k.projmats() + [mat_Mc(p)]
    z = centralizer(gens, cap)
    if k.is_d_xi():
        want = closure([mat_D_xi(p), mat_Mc(p)], cap).elements
    else:
        want = closure([mat_D_xi(p)], cap).elements
    n = max(e.order for e in list(z.elements) + list(want))
    same = {e.lift(n) for e in z.elements} == {e.lift(n) for e in want}
    return k.order, k.is_d_xi(), z.order, same


def cmd_verify_centralizers(args, report: Report) -> None:
    p, m, cap = args.p, args.level, args.cap
    subs = [k for k in invariant_subgroups(p, m, cap) if not k.is_trivial()]
    results = _map(_centralizer_point, [(p, m, k.howell, cap) for k in subs], args.parallel)
    for order, is_dxi, zorder, same in results:
        label = "d-xi" if is_dxi else f"order-{order}"
        report.check(f"centralizer-classification[{label}]", p * p if is_dxi else p, zorder)
        report.check(f"centralizer-equals-expected[{label}]", True, same)


def cmd_count(args, report: Report) -> None:
    p, r = args.p, args.rank
    report.check("pseudo-component-count", pseudo.count_pseudo_components(p, r), len(hyperplanes(r, p)))
    orb = pseudo.surjection_orbits(p, r)
    report.check("abelian-irreducible-count", pseudo.count_abelian_irreducible(p, r), orb.count)
    report.check("sl2-action-free", True, orb.free)
    report.check("pairwise-intersection", [pseudo.intersection_count(p)], sorted(pseudo.intersection_oracle(p, r)))
    report.check("components-through-abelian", [pseudo.components_through_abelian(p)],
                 sorted(pseudo.through_abelian_oracle(p, r)))


def _expected_table(p: int, kind: str) -> dict:
    if kind == PairType.NONDEGENERATE:
        return {k: int(k != 0) for k in range(p)}
    return {k: (p - 1) if k == 0 else 0 for k in range(p)}


def cmd_intersections(args, report: Report) -> None:
    p, g = args.p, args.genus
    space = SymplecticSpace(g, p)
    for kind in (PairType.NONDEGENERATE, PairType.DEGENERATE):
        e, e2 = normal_form_pair(space, kind)
        prof = pseudo.intersection_euler_profile(e, e2, space)
        report.check(f"euler-intersection-table[{kind}]", _expected_table(p, kind), prof)
        report.check(f"intersection-total[{kind}]", p - 1, sum(prof.values()))
        if p in (2, 3):
            report.check(f"euler-matrix-spot-check[{kind}]", prof,
                         pseudo.intersection_profile_by_matrices(e, e2, space))


def _bad_rep(spec: str, p: int) -> RepAssignment:
    pres = parse_group_spec(spec)
    m = 2 * p
    if pres.name.startswith("free"):
        ell = pres.ngens
        return pseudo.build_free_bad_rep(p, ell, [sample_torsion(p, m, j) for j in range(ell - 1)])
    if pres.name.startswith("surface"):
        g = pres.ngens // 2
        data = [(sample_torsion(p, m, j), sample_torsion(p, m, j + 1)) for j in range(g - 1)]
        return pseudo.build_surface_bad_rep(p, g, 1, data)
    return singularity.psl2z_witness(p)


def _good_rep(spec: str, p: int) -> RepAssignment:
    """Unipotent-style integer matrices with trivial centralizer."""
    pres = parse_group_spec(spec)
    a = [[int(i <= j) for j in range(p)] for i in range(p)]
    b = [[int(i >= j) for j in range(p)] for i in range(p)]
    A, B = ProjMat(a), ProjMat(b)
    if pres.name.startswith("free"):
        imgs = [A, B] + [A * B ** (j + 1) for j in range(pres.ngens - 2)]
        return RepAssignment(pres, tuple(imgs))
    g = pres.ngens // 2
    imgs = [A, B, B, A] + [A, A] * (g - 2)
    return RepAssignment(pres, tuple(imgs))


def cmd_cohomology(args, report: Report) -> None:
    p, spec = args.p, args.group
    pres = parse_group_spec(spec)
    if pres.name == "psl2z":
        rep = singularity.psl2z_report(p)
        if not rep.layer_maps:
            report.check("psl2z-no-layer-map", 0, len(rep.layer_maps))
            return
        report.check("psl2z-block-dims", [0] + [1] * (p - 1), list(rep.block_dims))
        return
    rho = _bad_rep(spec, p)
    dims = [r.dim_H1 for r in block_cohomology(rho)]
    if pres.name.startswith("free"):
        r = pres.ngens
        report.check("block-cohomology-dims", [(r - 1) * (p - 1)] + [(r - 1) * p] * (p - 1), dims)
        report.check("free-cohomology-total", (r - 1) * (p * p - 1), sum(dims))
        m = p
        th = torsion_h1(pres, (1,) + (0,) * (r - 1), m, p)
        report.check("torsion-restriction-image", [m] * ((p - 1) * (r - 1)), list(th.restriction_invariants))
    else:
        g = pres.ngens // 2
        report.check("block-cohomology-dims", [(2 * g - 2) * (p - 1)] + [(2 * g - 2) * p] * (p - 1), dims)
        m = p
        th = torsion_h1(pres, (1,) + (0,) * (2 * g - 1), m, p)
        report.check("torsion-restriction-image", sorted([p] + [m] * (2 * (p - 1) * (g - 1))),
                     sorted(th.restriction_invariants))
    report.check("torsion-inflation-kernel", [p], list(th.inflation_invariants))
    report.check("transgression-kernel-matches-restriction", list(th.restriction_invariants),
                 list(th.transgression_kernel_invariants))


def cmd_singularity(args, report: Report) -> None:
    p, spec = args.p, args.group
    pres = parse_group_spec(spec)
    if pres.name == "psl2z":
        rep = singularity.psl2z_report(p)
        want = {2: singularity.SMOOTH, 3: singularity.SINGULAR}.get(p)
        report.check("psl2z-verdict", want, rep.verdict)
        return
    bad = singularity.singular_verdict(_bad_rep(spec, p))
    report.check("bad-implies-singular", singularity.SINGULAR, bad.verdict)
    good = singularity.singular_verdict(_good_rep(spec, p))
    report.check("good-centralizer-trivial", 1, good.centralizer_order)
    report.check("good-implies-smooth", singularity.SMOOTH, good.verdict)


def random_sl2_pair(rng: random.Random):
    """Integer determinant-one 2 x 2 matrices from products of elementary matrices."""
    def rand_mat():
        m = [[1, 0], [0, 1]]
        for _ in range(rng.randint(1, 4)):
            k = rng.randint(-3, 3)
            e = [[1, k], [0, 1]] if rng.random() < 0.5 else [[1, 0], [k, 1]]
            m = [[sum(m[i][t] * e[t][j] for t in range(2)) for j in range(2)] for i in range(2)]
        return m
    return rand_mat(), rand_mat()


def cmd_example_psl2(args, report: Report) -> None:
    rng = random.Random(args.seed)
    ok = True
    for _ in range(args.samples):
        a, b = random_sl2_pair(rng)
        X, Y, Z, T = pseudo.vogt_coordinates(a, b)
        ok &= T * T == X * Y * Z
    report.check("vogt-relation", True, ok)
    # one bad representation per pseudo-component: layer maps (1,0), (0,1), (1,1)
    t, zero = TorsionDiag(2, 4, (0, 1)), TorsionDiag.zero(2, 4)
    data = {(1, 0): [zero, t], (0, 1): [t, zero], (1, 1): [t, zero]}
    zero_pattern = {}
    for layers, diags in data.items():
        rho = pseudo.free_rep_with_layers(2, layers, diags)
        coords = pseudo.vogt_of_rep(rho)
        zero_pattern[str(layers)] = [int(c.is_zero()) for c in coords]
    report.check("vogt-branch-lines",
                 {"(1, 0)": [1, 0, 1, 1], "(0, 1)": [0, 1, 1, 1], "(1, 1)": [1, 1, 0, 1]}, zero_pattern)
    ab = RepAssignment(free_group(2), (mat_D_xi(2), mat_Mc(2)))
    report.check("vogt-abelian-origin", [1, 1, 1, 1], [int(c.is_zero()) for c in pseudo.vogt_of_rep(ab)])
    report.check("pseudo-component-count", 3, pseudo.count_pseudo_components(2, 2))
    report.check("pairwise-intersection", 1, pseudo.intersection_count(2))


def cmd_psl2z(args, report: Report) -> None:
    p = args.p
    rep = singularity.psl2z_report(p)
    report.check("psl2z-abelianization", [6], list(rep.abelianization))
    if p > 3:
        report.check("psl2z-locus-size", 0, rep.locus_size)
        return
    report.check("psl2z-locus-size", 1, rep.locus_size)
    want = singularity.SMOOTH if p == 2 else singularity.SINGULAR
    report.check("psl2z-verdict", want, rep.verdict)
    report.check("psl2z-block-dims", [0] + [1] * (p - 1), list(rep.block_dims))


COMMANDS = {
    "verify-centralizers": cmd_verify_centralizers,
    "count": cmd_count,
    "intersections": cmd_intersections,
    "cohomology": cmd_cohomology,
    "singularity": cmd_singularity,
    "example-psl2": cmd_example_psl2,
    "psl2z": cmd_psl2z,
}


def _prime(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if not is_prime(v):
        raise argparse.ArgumentTypeError(f"{v} is not prime")
    return v


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _group_spec(text: str) -> str:
    try:
        parse_group_spec(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="badlocus", description="Bad representations into PSL(p, C): checks.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write the report as JSON")
    common.add_argument("--parallel", action="store_true", help="fan out independent parameter points")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify-centralizers", parents=[common])
    s.add_argument("--p", type=_prime, required=True)
    s.add_argument("--level", type=_positive, required=True)
    s.add_argument("--cap", type=_positive, default=None)

    s = sub.add_parser("count", parents=[common])
    s.add_argument("--p", type=_prime, required=True)
    s.add_argument("--rank", type=_positive, required=True)

    s = sub.add_parser("intersections", parents=[common])
    s.add_argument("--p", type=_prime, required=True)
    s.add_argument("--genus", type=_positive, required=True)

    for name in ("cohomology", "singularity"):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("--group", type=_group_spec, required=True, metavar="SPEC",
                       help="free:L, surface:G or psl2z")
        s.add_argument("--p", type=_prime, required=True)

    s = sub.add_parser("example-psl2", parents=[common])
    s.add_argument("--samples", type=_positive, default=100)
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("psl2z", parents=[common])
    s.add_argument("--p", type=_prime, required=True)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "cap", None) is None and args.command == "verify-centralizers":
        args.cap = default_cap()
    if args.command == "count" and args.rank < 2:
        parser.error("--rank must be at least 2")
    if args.command == "intersections" and args.genus < 2:
        parser.error("--genus must be at least 2")
    params = {k: v for k, v in vars(args).items() if k not in ("command", "json", "parallel")}
    report = Report(args.command, params)
    start = time.perf_counter()
    try:
        COMMANDS[args.command](args, report)
    except TooLarge as exc:
        report.check("within-cap", "completed", f"TooLarge: {exc}", ok=False)
    report.runtime_ms = round((time.perf_counter() - start) * 1000, 3)
    for c in report.checks:
        status = "PASS" if c["pass"] else "FAIL"
        print(f"[{status}] {c['id']}: expected {c['expected']}, computed {c['computed']}", file=out)
    print(f"{report.command}: {sum(c['pass'] for c in report.checks)}/{len(report.checks)} checks passed "
          f"in {report.runtime_ms:.0f} ms", file=out)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(dumps(report))
    return 0 if report.passed and report.checks else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
