"""Finitely presented groups and projective representations of them."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .cyclo import common_order
from .projmat import ProjMat, identity

Letter = tuple[int, int]  # (generator index, +1 or -1)
Word = tuple[Letter, ...]


class RelatorNotSatisfied(ValueError):
    """A relator does not map to the identity."""


def free_reduce(word: Sequence[Letter]) -> Word:
    out: list[Letter] = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def inverse_word(word: Sequence[Letter]) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


def word_power(word: Sequence[Letter], k: int) -> Word:
    base = tuple(word) if k >= 0 else inverse_word(word)
    return free_reduce(base * abs(k))


def concat(*words: Sequence[Letter]) -> Word:
    out: list[Letter] = []
    for w in words:
        out.extend(w)
    return free_reduce(out)


_TOKEN = re.compile(r"([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?")


def parse_word(text: str, generators: Sequence[str]) -> Word:
    """Parse 'a b a^-1 b^-1' or 'a*b*a^-1' into a freely reduced word."""
    index = {name: i for i, name in enumerate(generators)}
    letters: list[Letter] = []
    for tok in re.split(r"[\s*]+", text.strip()):
        if not tok or tok == "1":
            continue
        mt = _TOKEN.fullmatch(tok)
        if not mt or mt.group(1) not in index:
            raise ValueError(f"bad token {tok!r}")
        k = int(mt.group(2)) if mt.group(2) else 1
        g = index[mt.group(1)]
        letters.extend([(g, 1 if k > 0 else -1)] * abs(k))
    return free_reduce(letters)


def format_word(word: Sequence[Letter], generators: Sequence[str]) -> str:
    if not word:
        return "1"
    return " ".join(generators[g] + ("" if e == 1 else "^-1") for g, e in word)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()
    name: str = ""

    def __post_init__(self):
        for r in self.relators:
            if free_reduce(r) != tuple(r):
                raise ValueError("relators must be freely reduced")
            if any(not 0 <= g < len(self.generators) or e not in (1, -1) for g, e in r):
                raise ValueError("relator uses an unknown generator")

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def word(self, text: str) -> Word:
        return parse_word(text, self.generators)

    def exponent_sums(self, word: Sequence[Letter]) -> list[int]:
        sums = [0] * self.ngens
        for g, e in word:
            sums[g] += e
        return sums

    def relation_matrix(self) -> list[list[int]]:
        """Rows are exponent-sum vectors of the relators (the abelianization relations)."""
        return [self.exponent_sums(r) for r in self.relators]


def free_group(rank: int, prefix: str = "x") -> Presentation:
    if rank < 1:
        raise ValueError("rank must be positive")
    return Presentation(tuple(f"{prefix}{i}" for i in range(1, rank + 1)), (), f"free:{rank}")


def surface_group(genus: int) -> Presentation:
    """<a1, b1, ..., ag, bg | [a1, b1] ... [ag, bg]>."""
    if genus < 1:
        raise ValueError("genus must be positive")
    gens = []
    for i in range(1, genus + 1):
        gens += [f"a{i}", f"b{i}"]
    rel: list[Letter] = []
    for i in range(genus):
        a, b = 2 * i, 2 * i + 1
        rel += [(a, 1), (b, 1), (a, -1), (b, -1)]
    return Presentation(tuple(gens), (tuple(rel),), f"surface:{genus}")


def modular_group() -> Presentation:
    """PSL(2, Z) = <a, b | a^2, b^3>."""
    return Presentation(("a", "b"), (((0, 1),) * 2, ((1, 1),) * 3), "psl2z")


def cyclic_group(n: int, name: str = "t") -> Presentation:
    return Presentation((name,), (((0, 1),) * n,), f"cyclic:{n}")


def abelian_square(p: int) -> Presentation:
    """Z/p x Z/p = <a, b | a^p, b^p, [a, b]>."""
    return Presentation(
        ("a", "b"),
        (((0, 1),) * p, ((1, 1),) * p, ((0, 1), (1, 1), (0, -1), (1, -1))),
        f"zp2:{p}",
    )


def parse_group_spec(spec: str) -> Presentation:
    """'free:L', 'surface:G' or 'psl2z'."""
    m = re.fullmatch(r"(free|surface):(\d+)|(psl2z)", spec.strip())
    if not m:
        raise ValueError(f"unknown group spec {spec!r}")
    if m.group(3):
        return modular_group()
    n = int(m.group(2))
    if n < 1 or (m.group(1) == "free" and n < 2) or (m.group(1) == "surface" and n < 2):
        raise ValueError(f"group spec {spec!r} out of range")
    return free_group(n) if m.group(1) == "free" else surface_group(n)


@dataclass(frozen=True)
class RepAssignment:
    """A homomorphism from a presented group to PGL(p): one ProjMat per generator."""

    presentation: Presentation
    images: tuple[ProjMat, ...]
    check: bool = field(default=True, compare=False)

    def __post_init__(self):
        if len(self.images) != self.presentation.ngens:
            raise ValueError("one image per generator required")
        if len({a.p for a in self.images}) != 1:
            raise ValueError("images must share the dimension p")
        n = common_order(*(a.order for a in self.images))
        object.__setattr__(self, "images", tuple(a.lift(n) for a in self.images))
        if self.check:
            for r in self.presentation.relators:
                if not self.image(r).is_identity():
                    raise RelatorNotSatisfied(
                        f"relator {format_word(r, self.presentation.generators)} not satisfied")

    @classmethod
    def from_mapping(cls, presentation: Presentation, images: Mapping[str, ProjMat]) -> "RepAssignment":
        return cls(presentation, tuple(images[g] for g in presentation.generators))

    @property
    def p(self) -> int:
        return self.images[0].p

    @property
    def order(self) -> int:
        return self.images[0].order

    def image_of(self, name: str) -> ProjMat:
        return self.images[self.presentation.generators.index(name)]

    def image(self, word: Sequence[Letter]) -> ProjMat:
        inv_cache: dict[int, ProjMat] = {}
        result = identity(self.p, self.order)
        for g, e in word:
            if e == 1:
                m = self.images[g]
            else:
                if g not in inv_cache:
                    inv_cache[g] = self.images[g].inverse()
                m = inv_cache[g]
            result = result * m
        return result

    @property
    def mc_exponent(self) -> tuple[int | None, ...]:
        """The M_c-layer of each image (None when the image is not cyclic-monomial)."""
        return tuple(a.monomial_shift() for a in self.images)

    def conjugate(self, g: ProjMat) -> "RepAssignment":
        ginv = g.inverse()
        return RepAssignment(self.presentation, tuple(g * a * ginv for a in self.images), check=False)
