"""Homomorphisms into the dotted circle, and monoids built from them."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

from .circle import ONE, DotCircle, Zero
from .errors import HomNotFound
from .monoid import FiniteMonoid, MonoidMorphism


@dataclass(frozen=True)
class Hom:
    """A map ``source -> Ṫ`` stored as its value vector, indexed like ``source.elements``."""

    source: FiniteMonoid = field(repr=False, compare=False, hash=False)
    values: tuple[DotCircle, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    def __call__(self, x: int) -> DotCircle:
        return self.values[x]

    def __mul__(self, other: "Hom") -> "Hom":
        return Hom(self.source, tuple(a * b for a, b in zip(self.values, other.values)))

    def key(self) -> tuple:
        return tuple(v.sort_key() for v in self.values)

    def is_hom(self) -> bool:
        S, v = self.source, self.values
        if len(v) != len(S) or v[S.unit] != ONE:
            return False
        return all(v[S.table[i][j]] == v[i] * v[j] for i, j in product(range(len(S)), repeat=2))

    def is_group_valued(self) -> bool:
        return all(not v.is_zero for v in self.values)

    def is_idempotent_valued(self) -> bool:
        return all(v == Zero or v == ONE for v in self.values)

    def compose(self, f: MonoidMorphism) -> "Hom":
        """``self ∘ f`` for a morphism ``f`` into this hom's source."""
        return Hom(f.source, tuple(self.values[f.map[x]] for x in range(len(f.source))))

    def render(self) -> list[str]:
        return [str(v) for v in self.values]


Character = Hom


def constant_one(S: FiniteMonoid) -> Hom:
    return Hom(S, (ONE,) * len(S))


@dataclass(frozen=True)
class DualMonoid:
    """Homs ``source -> Ṫ`` in canonical order, with the pointwise-product Cayley table as ``base``."""

    source: FiniteMonoid = field(repr=False)
    homs: tuple[Hom, ...]
    base: FiniteMonoid = field(repr=False)
    _lookup: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_lookup", {h.values: i for i, h in enumerate(self.homs)})

    def __len__(self) -> int:
        return len(self.homs)

    def find(self, values) -> int | None:
        return self._lookup.get(tuple(values))

    def locate(self, values) -> int:
        i = self.find(values)
        if i is None:
            raise HomNotFound("value vector is not among the computed homomorphisms")
        return i

    def value_vectors(self) -> list[tuple[DotCircle, ...]]:
        return [h.values for h in self.homs]


def build_dual(source: FiniteMonoid, homs: Iterable[Hom], prefix: str = "h") -> DualMonoid:
    """Sort ``homs`` canonically and tabulate pointwise products.

    Elements of the resulting monoid are labelled ``h0, h1, ...`` in canonical order.
    """
    uniq = {h.values: h for h in homs}
    ordered = sorted(uniq.values(), key=Hom.key)
    lookup = {h.values: i for i, h in enumerate(ordered)}
    table = []
    for a in ordered:
        row = []
        for b in ordered:
            prod = tuple(x * y for x, y in zip(a.values, b.values))
            if prod not in lookup:
                raise HomNotFound("pointwise product left the computed set of homomorphisms")
            row.append(lookup[prod])
        table.append(tuple(row))
    one = (ONE,) * len(source)
    if one not in lookup:
        raise HomNotFound("constant hom missing from the dual")
    # product closure and the unit row already hold, so skip the cubic recheck
    base = FiniteMonoid(tuple(f"{prefix}{i}" for i in range(len(ordered))), lookup[one], tuple(table))
    return DualMonoid(source, tuple(ordered), base)
