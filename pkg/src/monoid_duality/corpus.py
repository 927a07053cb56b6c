"""Deterministic generators of test monoids.

Positive instances (abelian inverse): cyclic groups, chain and boolean
semilattices, truncated dotted circles, products and strong semilattices of
these. Negative instances: symmetric inverse monoids (not abelian) and
truncated addition (not inverse once n >= 2).
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Mapping

from .circle import ONE, Turn, Zero
from .errors import LinkIncompatible, MonoidError, NotAbelianComponent
from .monoid import FiniteMonoid, MonoidMorphism, is_abelian, is_group, validate_monoid
from .semilattice import require_semilattice


def _require_positive(n: int, name: str) -> None:
    if n < 1:
        raise MonoidError(f"{name} needs n >= 1, got {n}")


def cyclic_group(n: int) -> FiniteMonoid:
    _require_positive(n, "cyclic_group")
    return validate_monoid([str(i) for i in range(n)], 0, [[(i + j) % n for j in range(n)] for i in range(n)])


def chain_semilattice(n: int) -> FiniteMonoid:
    """c_0 < ... < c_{n-1} under min; the top c_{n-1} is the unit."""
    _require_positive(n, "chain_semilattice")
    return validate_monoid([str(i) for i in range(n)], n - 1, [[min(i, j) for j in range(n)] for i in range(n)])


def boolean_semilattice(k: int) -> FiniteMonoid:
    """Subsets of a k-set (as bitmasks) under intersection."""
    if k < 0:
        raise MonoidError("boolean_semilattice needs k >= 0")
    size = 1 << k
    return validate_monoid([str(m) for m in range(size)], size - 1, [[a & b for b in range(size)] for a in range(size)])


def dot_mu(n: int) -> FiniteMonoid:
    """The n-th roots of unity with an absorbing zero: 0, 0/1, 1/n, ..., (n-1)/n."""
    _require_positive(n, "dot_mu")
    items = [Zero] + [Turn(k, n) for k in range(n)]
    return FiniteMonoid.from_function(items, ONE, lambda a, b: a * b)


def direct_product(S: FiniteMonoid, T: FiniteMonoid) -> FiniteMonoid:
    m = len(T)
    labels = [f"({a},{b})" for a in S.elements for b in T.elements]
    table = [
        [S.table[i // m][j // m] * m + T.table[i % m][j % m] for j in range(len(S) * m)]
        for i in range(len(S) * m)
    ]
    return validate_monoid(labels, S.unit * m + T.unit, table)


def adjoin_zero(S: FiniteMonoid) -> FiniteMonoid:
    """S with a new absorbing element appended last."""
    z = "0"
    while z in S.elements:
        z += "'"
    n = len(S)
    table = [list(row) + [n] for row in S.table] + [[n] * (n + 1)]
    return validate_monoid(list(S.elements) + [z], S.unit, table)


def truncated_add(n: int) -> FiniteMonoid:
    _require_positive(n, "truncated_add")
    return validate_monoid(
        [str(i) for i in range(n + 1)], 0, [[min(i + j, n) for j in range(n + 1)] for i in range(n + 1)]
    )


def symmetric_inverse_monoid(n: int) -> FiniteMonoid:
    """Partial bijections of {1..n} under composition, (x*y)(i) = x(y(i)).

    A label lists the image of 1..n in turn, with "-" where undefined.
    """
    if n not in (1, 2, 3):
        raise MonoidError("symmetric_inverse_monoid supports n in {1, 2, 3}")
    points = range(n)
    maps = []
    for k in range(n + 1):
        for dom in combinations(points, k):
            for img in permutations(points, k):
                f = [None] * n
                for d, i in zip(dom, img):
                    f[d] = i
                maps.append(tuple(f))

    def compose(x, y):
        return tuple(None if y[i] is None else x[y[i]] for i in points)

    def label(f):
        return "".join("-" if v is None else str(v + 1) for v in f)

    return FiniteMonoid.from_function(maps, tuple(points), compose, label)


def strong_semilattice(
    E: FiniteMonoid,
    groups: Mapping[int, FiniteMonoid],
    links: Mapping[tuple[int, int], tuple[int, ...]],
) -> FiniteMonoid:
    """Glue abelian groups H_e along linking homomorphisms into a Clifford monoid.

    ``links[(e, f)]`` for e > f maps H_e into H_f (as a tuple of H_f indices);
    the identity links at e = f are implied. Elements are labelled "e|g".
    """
    require_semilattice(E)
    n = len(E)
    for e in range(n):
        H = groups.get(e)
        if H is None:
            raise MonoidError(f"no group supplied for {E.elements[e]!r}")
        if not is_group(H) or not is_abelian(H):
            raise NotAbelianComponent(f"component at {E.elements[e]!r} is not an abelian group")

    def leq(e, f):
        return E.table[e][f] == e

    phi = {}
    for e in range(n):
        phi[(e, e)] = tuple(range(len(groups[e])))
    for e, f in product(range(n), repeat=2):
        if e != f and leq(f, e):
            if (e, f) not in links:
                raise LinkIncompatible(f"missing link {E.elements[e]!r} -> {E.elements[f]!r}")
            m = MonoidMorphism(groups[e], groups[f], tuple(links[(e, f)]))
            if not m.is_valid():
                raise LinkIncompatible(f"link {E.elements[e]!r} -> {E.elements[f]!r} is not a homomorphism")
            phi[(e, f)] = m.map
    for e, f, g in product(range(n), repeat=3):
        if leq(g, f) and leq(f, e):
            if tuple(phi[(f, g)][x] for x in phi[(e, f)]) != phi[(e, g)]:
                raise LinkIncompatible(
                    f"links do not compose along {E.elements[e]!r} >= {E.elements[f]!r} >= {E.elements[g]!r}"
                )

    carrier = [(e, x) for e in range(n) for x in range(len(groups[e]))]
    pos = {c: i for i, c in enumerate(carrier)}
    labels = [f"{E.elements[e]}|{groups[e].elements[x]}" for e, x in carrier]
    table = []
    for e, x in carrier:
        row = []
        for f, y in carrier:
            g = E.table[e][f]
            z = groups[g].table[phi[(e, g)][x]][phi[(f, g)][y]]
            row.append(pos[(g, z)])
        table.append(row)
    return validate_monoid(labels, pos[(E.unit, groups[E.unit].unit)], table)


def trivial_monoid() -> FiniteMonoid:
    return cyclic_group(1)


GENERATORS = {
    "cyclic_group": cyclic_group,
    "chain_semilattice": chain_semilattice,
    "boolean_semilattice": boolean_semilattice,
    "dot_mu": dot_mu,
    "truncated_add": truncated_add,
    "symmetric_inverse_monoid": symmetric_inverse_monoid,
}


def strong_semilattice_examples() -> dict[str, FiniteMonoid]:
    """Three fixed strong semilattices of abelian groups."""
    chain2 = chain_semilattice(2)  # "0" < "1" = top
    c2, c4, c1 = cyclic_group(2), cyclic_group(4), cyclic_group(1)
    out = {}
    # C_4 on top, C_2 below, linked by reduction mod 2
    out["c4_over_c2"] = strong_semilattice(chain2, {1: c4, 0: c2}, {(1, 0): (0, 1, 0, 1)})
    # diamond of C_2's with identity links and a trivial bottom
    diamond = boolean_semilattice(2)  # 3 top, 1 and 2 middle, 0 bottom
    out["diamond_c2"] = strong_semilattice(
        diamond,
        {3: c2, 1: c2, 2: c2, 0: c1},
        {(3, 1): (0, 1), (3, 2): (0, 1), (3, 0): (0, 0), (1, 0): (0, 0), (2, 0): (0, 0)},
    )
    # 3-chain: C_3 on top, trivial group in the middle, C_2 at the bottom
    chain3 = chain_semilattice(3)
    c3 = cyclic_group(3)
    out["chain3_mixed"] = strong_semilattice(
        chain3,
        {2: c3, 1: c1, 0: c2},
        {(2, 1): (0, 0, 0), (2, 0): (0, 0, 0), (1, 0): (0,)},
    )
    return out


def base_instances() -> dict[str, FiniteMonoid]:
    """The named building blocks of the acceptance corpus."""
    out = {}
    for n in range(1, 9):
        out[f"cyclic_group({n})"] = cyclic_group(n)
    for n in range(1, 6):
        out[f"chain_semilattice({n})"] = chain_semilattice(n)
    for k in range(0, 4):
        out[f"boolean_semilattice({k})"] = boolean_semilattice(k)
    for n in range(1, 7):
        out[f"dot_mu({n})"] = dot_mu(n)
    return out


def standard_corpus(max_size: int = 12) -> dict[str, FiniteMonoid]:
    """Base instances, their pairwise products up to ``max_size``, strong semilattices and negatives."""
    base = base_instances()
    out = dict(base)
    names = list(base)
    for i, a in enumerate(names):
        for b in names[i:]:
            S, T = base[a], base[b]
            if len(S) * len(T) <= max_size:
                out[f"{a} x {b}"] = direct_product(S, T)
    for name, S in strong_semilattice_examples().items():
        out[f"strong_semilattice:{name}"] = S
    out["symmetric_inverse_monoid(2)"] = symmetric_inverse_monoid(2)
    for n in range(1, 5):
        out[f"truncated_add({n})"] = truncated_add(n)
    return out
