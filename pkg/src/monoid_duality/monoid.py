"""Finite monoids given by Cayley tables, and their structural invariants."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Hashable, Iterable, Sequence

from .errors import (
    DuplicateLabel,
    IndexOutOfRange,
    InvalidMorphism,
    MonoidError,
    NotAbelian,
    NotAGroup,
    NotAssociative,
    NotClifford,
    NotInverse,
    UnitLawViolated,
)


@dataclass(frozen=True)
class FiniteMonoid:
    """A monoid on ``range(n)``; ``table[i][j]`` is the index of ``elements[i] * elements[j]``.

    Build instances through :func:`validate_monoid` (or :meth:`from_function`);
    the constructor itself does not check the axioms.
    """

    elements: tuple[str, ...]
    unit: int
    table: tuple[tuple[int, ...], ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {label: i for i, label in enumerate(self.elements)})

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def size(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def index(self, label: str) -> int:
        return self._index[label]

    def label(self, i: int) -> str:
        return self.elements[i]

    def power(self, x: int, k: int) -> int:
        y = self.unit
        for _ in range(k):
            y = self.table[y][x]
        return y

    @classmethod
    def from_function(
        cls,
        items: Sequence[Hashable],
        unit: Hashable,
        mul: Callable[[Hashable, Hashable], Hashable],
        label: Callable[[Hashable], str] = str,
    ) -> "FiniteMonoid":
        """Tabulate ``mul`` over ``items`` and validate the result."""
        pos = {x: i for i, x in enumerate(items)}
        if len(pos) != len(items):
            raise DuplicateLabel("items are not distinct")
        try:
            table = [[pos[mul(x, y)] for y in items] for x in items]
        except KeyError as exc:
            raise IndexOutOfRange(f"product {exc.args[0]!r} lies outside the carrier") from None
        return validate_monoid([label(x) for x in items], pos[unit], table)


def validate_monoid(labels: Sequence[str], unit, raw_table: Sequence[Sequence[int]]) -> FiniteMonoid:
    """Check the monoid axioms and return a :class:`FiniteMonoid`.

    ``unit`` may be an index or one of the labels. Raises the first violated
    axiom, with a witness.
    """
    labels = tuple(str(x) for x in labels)
    n = len(labels)
    seen = set()
    for x in labels:
        if x in seen:
            raise DuplicateLabel(f"duplicate element label {x!r}")
        seen.add(x)
    if n == 0:
        raise MonoidError("a monoid has at least one element")
    if isinstance(unit, str):
        if unit not in seen:
            raise IndexOutOfRange(f"unit {unit!r} is not a declared element")
        unit = labels.index(unit)
    if not 0 <= unit < n:
        raise IndexOutOfRange(f"unit index {unit} out of range [0, {n})")
    if len(raw_table) != n:
        raise IndexOutOfRange(f"table has {len(raw_table)} rows, expected {n}")
    rows = []
    for i, row in enumerate(raw_table):
        if len(row) != n:
            raise IndexOutOfRange(f"table row {i} has {len(row)} entries, expected {n}")
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise IndexOutOfRange(f"table entry {v!r} in row {i} out of range [0, {n})")
        rows.append(tuple(row))
    table = tuple(rows)

    for i in range(n):
        if table[unit][i] != i or table[i][unit] != i:
            raise UnitLawViolated(i, labels)
    for i, j in product(range(n), repeat=2):
        ij = table[i][j]
        row_j = table[j]
        row_ij = table[ij]
        for k in range(n):
            if row_ij[k] != table[i][row_j[k]]:
                raise NotAssociative(i, j, k, labels)
    return FiniteMonoid(labels, unit, table)


def is_abelian(S: FiniteMonoid) -> bool:
    return non_commuting_pair(S) is None


def non_commuting_pair(S: FiniteMonoid) -> tuple[int, int] | None:
    n = len(S)
    for i in range(n):
        for j in range(i + 1, n):
            if S.table[i][j] != S.table[j][i]:
                return i, j
    return None


def idempotents(S: FiniteMonoid) -> list[int]:
    return [i for i in range(len(S)) if S.table[i][i] == i]


def inverse_candidates(S: FiniteMonoid, x: int) -> list[int]:
    """All y with xyx = x and yxy = y."""
    t = S.table
    return [y for y in range(len(S)) if t[t[x][y]][x] == x and t[t[y][x]][y] == y]


def try_inverse(S: FiniteMonoid, x: int) -> int | None:
    found = inverse_candidates(S, x)
    return found[0] if len(found) == 1 else None


def non_inverse_witness(S: FiniteMonoid) -> tuple[int, int] | None:
    """First element lacking a unique inverse, with its number of inverses."""
    for x in range(len(S)):
        k = len(inverse_candidates(S, x))
        if k != 1:
            return x, k
    return None


def is_inverse_semigroup(S: FiniteMonoid) -> bool:
    return non_inverse_witness(S) is None


def inverses(S: FiniteMonoid) -> list[int]:
    out = []
    for x in range(len(S)):
        y = try_inverse(S, x)
        if y is None:
            raise NotInverse(f"element {S.elements[x]!r} has no unique inverse")
        out.append(y)
    return out


def is_clifford(S: FiniteMonoid) -> bool:
    inv = inverses(S)
    t = S.table
    return all(t[x][inv[x]] == t[inv[x]][x] for x in range(len(S)))


def is_invertible(S: FiniteMonoid, x: int) -> bool:
    u = S.unit
    return any(S.table[x][y] == u and S.table[y][x] == u for y in range(len(S)))


@dataclass(frozen=True)
class CliffordDecomposition:
    idempotents: tuple[int, ...]
    order: frozenset  # pairs (e, f) with e <= f
    groups: dict  # idempotent -> tuple of element indices
    pi: tuple[int, ...]

    def leq(self, e: int, f: int) -> bool:
        return (e, f) in self.order

    def hasse(self) -> list[tuple[int, int]]:
        """Covering pairs (e, f): e < f with nothing strictly between."""
        E = self.idempotents
        out = []
        for e, f in sorted(self.order):
            if e == f:
                continue
            if not any(g not in (e, f) and (e, g) in self.order and (g, f) in self.order for g in E):
                out.append((e, f))
        return out


def clifford_decomposition(S: FiniteMonoid) -> CliffordDecomposition:
    if not is_inverse_semigroup(S) or not is_clifford(S):
        raise NotClifford("monoid is not a Clifford inverse monoid")
    inv = inverses(S)
    t = S.table
    E = idempotents(S)
    order = frozenset((e, f) for e in E for f in E if t[e][f] == e)
    pi = tuple(t[x][inv[x]] for x in range(len(S)))
    groups = {e: tuple(x for x in range(len(S)) if pi[x] == e) for e in E}
    for e, members in groups.items():
        # raises NotAGroup on failure
        submonoid(S, members, unit=e, require_group=True)
    return CliffordDecomposition(tuple(E), order, groups, pi)


def submonoid(
    S: FiniteMonoid, members: Iterable[int], unit: int | None = None, require_group: bool = False
) -> FiniteMonoid:
    """Restrict S to ``members`` (kept in S's order), with ``unit`` as the identity.

    The subset only needs to be closed and have ``unit`` as a two-sided identity;
    it need not contain S's own unit (maximal subgroups do not).
    """
    members = sorted(set(members))
    unit = S.unit if unit is None else unit
    pos = {x: i for i, x in enumerate(members)}
    if unit not in pos:
        raise MonoidError("identity is not among the members")
    try:
        table = [[pos[S.table[x][y]] for y in members] for x in members]
    except KeyError:
        raise MonoidError("subset is not closed under the product") from None
    sub = validate_monoid([S.elements[x] for x in members], pos[unit], table)
    if require_group and not is_group(sub):
        raise NotAGroup("subset is not a group")
    return sub


def is_group(G: FiniteMonoid) -> bool:
    return all(is_invertible(G, x) for x in range(len(G)))


def require_abelian_group(G: FiniteMonoid) -> None:
    if not is_group(G):
        raise NotAGroup("monoid is not a group")
    if not is_abelian(G):
        raise NotAbelian("group is not abelian")


@dataclass(frozen=True)
class MonoidMorphism:
    source: FiniteMonoid
    target: FiniteMonoid
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))

    def __call__(self, x: int) -> int:
        return self.map[x]

    def violation(self) -> str | None:
        S, T, f = self.source, self.target, self.map
        if len(f) != len(S):
            return f"map has {len(f)} entries for {len(S)} source elements"
        if any(not 0 <= y < len(T) for y in f):
            return "map leaves the target"
        if f[S.unit] != T.unit:
            return "unit is not preserved"
        for x, y in product(range(len(S)), repeat=2):
            if f[S.table[x][y]] != T.table[f[x]][f[y]]:
                return f"product of {S.elements[x]!r} and {S.elements[y]!r} is not preserved"
        return None

    def is_valid(self) -> bool:
        return self.violation() is None

    def validate(self) -> "MonoidMorphism":
        problem = self.violation()
        if problem:
            raise InvalidMorphism(problem)
        return self

    def then(self, g: "MonoidMorphism") -> "MonoidMorphism":
        """The composite ``g ∘ self``."""
        if g.source != self.target:
            raise InvalidMorphism("morphisms are not composable")
        return MonoidMorphism(self.source, g.target, tuple(g.map[y] for y in self.map))

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def is_surjective(self) -> bool:
        return len(set(self.map)) == len(self.target)

    def is_isomorphism(self) -> bool:
        return self.is_valid() and self.is_injective() and self.is_surjective()


def identity_morphism(S: FiniteMonoid) -> MonoidMorphism:
    return MonoidMorphism(S, S, tuple(range(len(S))))


def find_isomorphism(S: FiniteMonoid, T: FiniteMonoid) -> MonoidMorphism | None:
    """Backtracking search for an isomorphism S -> T, or None."""
    n = len(S)
    if n != len(T):
        return None
    order = [S.unit] + [x for x in range(n) if x != S.unit]
    f = [-1] * n
    used = [False] * n

    def consistent(upto: int) -> bool:
        assigned = order[: upto + 1]
        for a in assigned:
            for b in assigned:
                p = S.table[a][b]
                if f[p] >= 0 and f[p] != T.table[f[a]][f[b]]:
                    return False
        return True

    def extend(k: int) -> bool:
        if k == n:
            return True
        x = order[k]
        choices = [T.unit] if k == 0 else range(n)
        for y in choices:
            if used[y] or (k and y == T.unit):
                continue
            f[x] = y
            used[y] = True
            if consistent(k) and extend(k + 1):
                return True
            used[y] = False
            f[x] = -1
        return False

    if not extend(0):
        return None
    m = MonoidMorphism(S, T, tuple(f))
    return m if m.is_valid() else None
