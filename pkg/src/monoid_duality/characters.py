"""Characters of finite abelian groups (finite Pontryagin duality)."""

from __future__ import annotations

from .circle import ONE, Turn
from .errors import DualityViolation, NotAGroup
from .homs import DualMonoid, Hom, build_dual
from .monoid import FiniteMonoid, MonoidMorphism, is_group, require_abelian_group


def element_order(G: FiniteMonoid, x: int) -> int:
    if not is_group(G):
        raise NotAGroup("element orders are only defined here for groups")
    y, k = x, 1
    while y != G.unit:
        y = G.table[y][x]
        k += 1
    return k


def generating_sequence(G: FiniteMonoid) -> list[int]:
    """Greedy generators: repeatedly take an element of largest order outside the span so far."""
    orders = {x: element_order(G, x) for x in range(len(G))}
    span = {G.unit}
    gens = []
    while len(span) < len(G):
        g = max((x for x in range(len(G)) if x not in span), key=lambda x: (orders[x], -x))
        gens.append(g)
        span = _extend_span(G, span, g)
    return gens


def _extend_span(G: FiniteMonoid, span: set, g: int) -> set:
    out = set(span)
    frontier = list(span)
    while frontier:
        s = frontier.pop()
        t = G.table[s][g]
        if t not in out:
            out.add(t)
            frontier.append(t)
    return out


def characters(G: FiniteMonoid) -> list[Hom]:
    """All homomorphisms G -> T of a finite abelian group, by backtracking over generators.

    Each generator of order m gets an m-th root of unity; values spread to the
    span by multiplication, and an assignment that clashes with an earlier value
    is dropped.
    """
    require_abelian_group(G)
    gens = generating_sequence(G)
    orders = [element_order(G, g) for g in gens]
    found: list[Hom] = []

    def extend(k: int, values: dict):
        if k == len(gens):
            found.append(Hom(G, tuple(values[x] for x in range(len(G)))))
            return
        g, m = gens[k], orders[k]
        for j in range(m):
            v = Turn(j, m)
            new = dict(values)
            ok = True
            frontier = list(values)
            # walk s * g^i for every s in the old span
            while frontier and ok:
                s = frontier.pop()
                t = G.table[s][g]
                val = new[s] * v
                if t in new:
                    ok = new[t] == val
                else:
                    new[t] = val
                    frontier.append(t)
            if ok:
                extend(k + 1, new)

    extend(0, {G.unit: ONE})
    return found


def character_group(G: FiniteMonoid) -> DualMonoid:
    """The dual group of G: its characters in canonical order under pointwise product."""
    return build_dual(G, characters(G), prefix="chi")


def delta_group_iso(G: FiniteMonoid) -> tuple[MonoidMorphism, bool]:
    """The evaluation map G -> G°° and whether it is a bijective homomorphism."""
    dual = character_group(G)
    bidual = character_group(dual.base)
    images = []
    for x in range(len(G)):
        ev = tuple(chi.values[x] for chi in dual.homs)
        i = bidual.find(ev)
        if i is None:
            raise DualityViolation("evaluation at a group element is not a character of the dual")
        images.append(i)
    m = MonoidMorphism(G, bidual.base, tuple(images))
    return m, m.is_isomorphism()
