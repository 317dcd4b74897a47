"""Shared sample data for the tests."""
import random

from badlocus import pseudo
from badlocus.groups import is_irreducible
from badlocus.torus import TorsionDiag


def random_torsion(rng: random.Random, p: int, m: int) -> TorsionDiag:
    return TorsionDiag(p, m, tuple(rng.randrange(m) for _ in range(p)))


def random_irreducible_free_rep(rng: random.Random, p: int, rank: int = 2, m: int | None = None):
    """A free-group representation with monomial images and a nonzero layer map."""
    m = m or 2 * p
    while True:
        layers = [rng.randrange(p) for _ in range(rank)]
        if not any(layers):
            continue
        data = [random_torsion(rng, p, m) for _ in range(rank)]
        rho = pseudo.free_rep_with_layers(p, layers, data)
        if is_irreducible(list(rho.images)):
            return rho
