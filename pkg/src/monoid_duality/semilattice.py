"""Finite semilattice duality: characters are indicators of principal filters.

Every idempotent of a finite discrete semilattice is locally minimal, so each
upper cone is a legitimate filter and there is nothing topological to check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circle import ONE, Zero
from .errors import DualityViolation, NotASemilattice
from .homs import DualMonoid, Hom, build_dual
from .monoid import FiniteMonoid, MonoidMorphism, idempotents, is_abelian


@dataclass(frozen=True)
class Filter:
    base_semilattice: FiniteMonoid
    members: frozenset
    min_element: int

    def indicator(self) -> Hom:
        E = self.base_semilattice
        return Hom(E, tuple(ONE if f in self.members else Zero for f in range(len(E))))


def require_semilattice(E: FiniteMonoid) -> None:
    if len(idempotents(E)) != len(E) or not is_abelian(E):
        raise NotASemilattice("monoid is not an abelian idempotent monoid")


def upper_cone(E: FiniteMonoid, e: int) -> Filter:
    require_semilattice(E)
    return Filter(E, frozenset(f for f in range(len(E)) if E.table[e][f] == e), e)


def join(E: FiniteMonoid, e: int, f: int) -> int:
    """Least upper bound, read off as the minimum of the intersected cones."""
    common = [g for g in range(len(E)) if E.table[e][g] == e and E.table[f][g] == f]
    lows = [g for g in common if all(E.table[g][h] == g for h in common)]
    if len(lows) != 1:
        raise DualityViolation("cone intersection has no minimum")
    return lows[0]


def semilattice_characters(E: FiniteMonoid) -> list[Hom]:
    """One character per element e: the indicator of the upper cone of e."""
    require_semilattice(E)
    return [upper_cone(E, e).indicator() for e in range(len(E))]


def semilattice_dual(E: FiniteMonoid) -> DualMonoid:
    return build_dual(E, semilattice_characters(E))


def hms_double_dual_check(E: FiniteMonoid) -> tuple[MonoidMorphism, bool]:
    """The evaluation map E -> E:: and whether it is an isomorphism."""
    dual = semilattice_dual(E)
    bidual = semilattice_dual(dual.base)
    images = []
    for x in range(len(E)):
        i = bidual.find(tuple(h.values[x] for h in dual.homs))
        if i is None:
            raise DualityViolation("evaluation is not a character of the dual semilattice")
        images.append(i)
    m = MonoidMorphism(E, bidual.base, tuple(images))
    return m, m.is_isomorphism()
