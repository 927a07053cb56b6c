"""The dual inverse monoid Hom(S, Ṫ) of a finite monoid, and dual morphisms."""

from __future__ import annotations

from math import lcm

from .characters import characters
from .circle import Turn, Zero
from .errors import NotAbelian, NotInverse, SizeLimitExceeded
from .homs import DualMonoid, Hom, build_dual
from .monoid import (
    FiniteMonoid,
    MonoidMorphism,
    clifford_decomposition,
    idempotents,
    is_abelian,
    is_inverse_semigroup,
    is_invertible,
    submonoid,
)


def eventual_period(S: FiniteMonoid, x: int) -> tuple[int, int]:
    """Smallest (i, p) with x^(i+p) = x^i, where i, p >= 1."""
    first_seen = {}
    y, k = x, 1
    while y not in first_seen:
        first_seen[y] = k
        y = S.table[y][x]
        k += 1
    i = first_seen[y]
    return i, k - i


def enumerate_homs(S: FiniteMonoid, limit: int | None = None) -> DualMonoid:
    """All monoid homomorphisms S -> Ṫ, by backtracking in element order.

    If x^(i+p) = x^i then h(x) is Zero or a p-th root of unity; Zero is skipped
    for invertible x. A partial assignment is pruned as soon as some product
    among assigned elements disagrees. Raises SizeLimitExceeded past ``limit``.
    """
    n = len(S)
    t = S.table
    periods = [eventual_period(S, x)[1] for x in range(n)]
    N = lcm(*periods)
    # value encoding: -1 is Zero, k in [0, N) is the rotation k/N
    candidates = []
    for x in range(n):
        if x == S.unit:
            candidates.append([0])
            continue
        step = N // periods[x]
        c = [] if is_invertible(S, x) else [-1]
        c.extend(step * k for k in range(periods[x]))
        candidates.append(c)

    # checks[k]: pairs (a, b) whose operands and product are all assigned once x_k is
    checks = [[] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            checks[max(a, b, t[a][b])].append((a, b, t[a][b]))

    values = [None] * n
    found = []

    def emul(u, v):
        return -1 if u < 0 or v < 0 else (u + v) % N

    def extend(k: int):
        if k == n:
            found.append(tuple(values))
            if limit is not None and len(found) > limit:
                raise SizeLimitExceeded(f"dual has more than {limit} homomorphisms")
            return
        for v in candidates[k]:
            values[k] = v
            if all(values[c] == emul(values[a], values[b]) for a, b, c in checks[k]):
                extend(k + 1)
        values[k] = None

    extend(0)

    def decode(u):
        return Zero if u < 0 else Turn(u, N)

    return build_dual(S, (Hom(S, tuple(decode(u) for u in vec)) for vec in found))


def lambda_extension(S: FiniteMonoid, e: int, group_members, chi: Hom) -> Hom:
    """Extend a character of the maximal subgroup at e to S: x -> chi(xe) if xe lies in H_e, else Zero."""
    pos = {x: i for i, x in enumerate(sorted(group_members))}
    vals = []
    for x in range(len(S)):
        xe = S.table[x][e]
        vals.append(chi.values[pos[xe]] if xe in pos else Zero)
    return Hom(S, tuple(vals))


def clifford_dual(S: FiniteMonoid) -> DualMonoid:
    """S^⊙ for abelian inverse S, assembled from characters of the maximal subgroups."""
    if not is_abelian(S):
        raise NotAbelian("the maximal-subgroup construction is used for abelian monoids only")
    if not is_inverse_semigroup(S):
        raise NotInverse("monoid is not an inverse monoid")
    dec = clifford_decomposition(S)
    homs = []
    for e in dec.idempotents:
        members = dec.groups[e]
        H = submonoid(S, members, unit=e, require_group=True)
        homs.extend(lambda_extension(S, e, members, chi) for chi in characters(H))
    return build_dual(S, homs)


def compute_dual(S: FiniteMonoid, method: str = "auto", limit: int | None = None) -> DualMonoid:
    """Dispatch: ``brute`` always works; ``clifford`` needs abelian inverse input; ``auto`` picks."""
    if method == "brute":
        return enumerate_homs(S, limit=limit)
    if method == "clifford":
        return _checked(clifford_dual(S), limit)
    if method == "auto":
        if is_abelian(S) and is_inverse_semigroup(S):
            return _checked(clifford_dual(S), limit)
        return enumerate_homs(S, limit=limit)
    raise ValueError(f"unknown method {method!r}")


def _checked(D: DualMonoid, limit):
    if limit is not None and len(D) > limit:
        raise SizeLimitExceeded(f"dual has more than {limit} homomorphisms")
    return D


def restricted_duals(D: DualMonoid) -> tuple[list[int], list[int]]:
    """Indices of the circle-valued homs (dual group) and the {0,1}-valued homs (dual idempotent monoid)."""
    group_part = [i for i, h in enumerate(D.homs) if h.is_group_valued()]
    idem_part = [i for i, h in enumerate(D.homs) if h.is_idempotent_valued()]
    return group_part, idem_part


def dual_morphism(f: MonoidMorphism, source_dual: DualMonoid | None = None, target_dual: DualMonoid | None = None) -> MonoidMorphism:
    """For f: S -> M, the morphism M^⊙ -> S^⊙ sending g to g∘f."""
    S, M = f.source, f.target
    DS = source_dual if source_dual is not None else compute_dual(S)
    DM = target_dual if target_dual is not None else compute_dual(M)
    images = tuple(DS.locate(g.compose(f).values) for g in DM.homs)
    return MonoidMorphism(DM.base, DS.base, images)


def idempotent_submonoid(S: FiniteMonoid) -> tuple[FiniteMonoid, MonoidMorphism]:
    """E(S) as a monoid, with its inclusion into S (S must be inverse so E(S) is closed)."""
    E_idx = idempotents(S)
    E = submonoid(S, E_idx)
    return E, MonoidMorphism(E, S, tuple(E_idx))


def retraction(S: FiniteMonoid, E: FiniteMonoid | None = None) -> MonoidMorphism:
    """x -> x x^-1 as a morphism S -> E(S)."""
    if E is None:
        E, _ = idempotent_submonoid(S)
    dec = clifford_decomposition(S)
    return MonoidMorphism(S, E, tuple(E.index(S.elements[dec.pi[x]]) for x in range(len(S))))

