"""Second duals, the evaluation map S -> S^⊙⊙, and reflexivity verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field

from .characters import characters
from .dual import compute_dual, dual_morphism, idempotent_submonoid, lambda_extension, retraction
from .errors import EvaluationNotAHom, NoPreimage, NotAbelian, NotInverse, SizeLimitExceeded
from .homs import DualMonoid, Hom
from .monoid import (
    FiniteMonoid,
    MonoidMorphism,
    clifford_decomposition,
    identity_morphism,
    is_clifford,
    non_commuting_pair,
    non_inverse_witness,
    submonoid,
)
from .semilattice import semilattice_characters

DEFAULT_TRIPLE_DUAL_BOUND = 4096


def delta(S: FiniteMonoid, D: DualMonoid, bidual: DualMonoid | None = None) -> MonoidMorphism:
    """x -> (h -> h(x)), located among the homs of the second dual."""
    if bidual is None:
        bidual = compute_dual(D.base)
    images = []
    for x in range(len(S)):
        ev = tuple(h.values[x] for h in D.homs)
        i = bidual.find(ev)
        if i is None:
            raise EvaluationNotAHom(f"evaluation at {S.elements[x]!r} is missing from the second dual")
        images.append(i)
    return MonoidMorphism(S, bidual.base, tuple(images))


def structural_reason(S: FiniteMonoid) -> str | None:
    """Why S cannot be reflexive, or None when it is abelian and inverse."""
    pair = non_commuting_pair(S)
    if pair is not None:
        a, b = (S.elements[i] for i in pair)
        return f"not abelian: {a}*{b} != {b}*{a}"
    bad = non_inverse_witness(S)
    if bad is not None:
        x, k = bad
        return f"not inverse: element {S.elements[x]} has {k} inverses"
    return None


@dataclass(frozen=True)
class ReflexivityReport:
    monoid_size: int
    dual_size: int
    bidual_size: int
    delta: MonoidMorphism = field(repr=False)
    is_injective: bool
    injectivity_witness: tuple[int, int] | None
    separation: str | None
    is_surjective: bool
    surjectivity_witness: int | None
    verdict: bool
    predicted: bool
    reason: str | None

    @property
    def consistent(self) -> bool:
        return self.verdict == self.predicted

    def to_dict(self) -> dict:
        S, B = self.delta.source, self.delta.target
        wit = self.injectivity_witness
        return {
            "monoid_size": self.monoid_size,
            "dual_size": self.dual_size,
            "bidual_size": self.bidual_size,
            "is_injective": self.is_injective,
            "injectivity_witness": [S.elements[i] for i in wit] if wit else None,
            "separation": self.separation,
            "is_surjective": self.is_surjective,
            "surjectivity_witness": B.elements[self.surjectivity_witness]
            if self.surjectivity_witness is not None
            else None,
            "verdict": self.verdict,
            "predicted": self.predicted,
            "reason": self.reason,
            "delta": {S.elements[x]: B.elements[y] for x, y in enumerate(self.delta.map)},
        }


def _separation(S: FiniteMonoid, x: int, y: int) -> str:
    if not is_clifford_safe(S):
        return "monoid is not Clifford; no retraction onto idempotents"
    pi = clifford_decomposition(S).pi
    if pi[x] != pi[y]:
        return "distinct idempotents x x^-1, separable by a semilattice character"
    return "same maximal subgroup, separable by a group character"


def is_clifford_safe(S: FiniteMonoid) -> bool:
    try:
        return is_clifford(S)
    except NotInverse:
        return False


def check_reflexive(S: FiniteMonoid, method: str = "auto") -> ReflexivityReport:
    D = compute_dual(S, method=method)
    B = compute_dual(D.base, method=method)
    d = delta(S, D, B)
    seen: dict[int, int] = {}
    witness = None
    for x, y in enumerate(d.map):
        if y in seen:
            witness = (seen[y], x)
            break
        seen[y] = x
    injective = witness is None
    # finite sets: injective plus equal size means bijective
    surjective = len(set(d.map)) == len(B)
    missing = None
    if not surjective:
        missing = min(set(range(len(B))) - set(d.map))
    reason = structural_reason(S)
    return ReflexivityReport(
        monoid_size=len(S),
        dual_size=len(D),
        bidual_size=len(B),
        delta=d,
        is_injective=injective,
        injectivity_witness=witness,
        separation=_separation(S, *witness) if witness else None,
        is_surjective=surjective,
        surjectivity_witness=missing,
        verdict=injective and surjective,
        predicted=reason is None,
        reason=reason,
    )


def dixmier_check(S: FiniteMonoid, bound: int = DEFAULT_TRIPLE_DUAL_BOUND) -> bool:
    """Whether dual(delta_S) ∘ delta_{S^⊙} is the identity of S^⊙."""
    D = compute_dual(S, limit=bound)
    B = compute_dual(D.base, limit=bound)
    T = compute_dual(B.base, limit=bound)
    if len(T) > bound:
        raise SizeLimitExceeded(f"third dual has {len(T)} > {bound} homomorphisms")
    d_S = delta(S, D, B)
    d_D = delta(D.base, B, T)
    back = dual_morphism(d_S, source_dual=D, target_dual=T)
    return d_D.then(back) == identity_morphism(D.base)


def constructive_preimage(
    S: FiniteMonoid, mu: Hom, D: DualMonoid | None = None
) -> int:
    """Recover z with delta(z) = mu for abelian inverse S, following the surjectivity argument.

    First the idempotent e is pinned down by how mu treats semilattice
    characters pulled back along x -> x x^-1; then z in H_e is read off from
    mu composed with the extension of characters of H_e.
    """
    if non_commuting_pair(S) is not None:
        raise NotAbelian("preimage recovery needs an abelian monoid")
    if non_inverse_witness(S) is not None:
        raise NotInverse("preimage recovery needs an inverse monoid")
    if D is None:
        D = compute_dual(S)
    dec = clifford_decomposition(S)
    E, incl = idempotent_submonoid(S)
    pi = retraction(S, E)

    def mu_at(h: Hom):
        return mu.values[D.locate(h.values)]

    # step 1: e with mu(h∘pi) = h(e) for every character h of E
    pulled = [(h, mu_at(h.compose(pi))) for h in semilattice_characters(E)]
    cands = [
        incl.map[k] for k in range(len(E)) if all(h.values[k] == v for h, v in pulled)
    ]
    if len(cands) != 1:
        raise NoPreimage(f"{len(cands)} idempotents match the semilattice part of mu")
    e = cands[0]

    # step 2: z in H_e with chi(z) = mu(extension of chi) for every character chi of H_e
    members = dec.groups[e]
    H = submonoid(S, members, unit=e, require_group=True)
    pairs = [(chi, mu_at(lambda_extension(S, e, members, chi))) for chi in characters(H)]
    zs = [members[k] for k in range(len(H)) if all(chi.values[k] == v for chi, v in pairs)]
    if len(zs) != 1:
        raise NoPreimage(f"{len(zs)} group elements match mu on the characters of H_e")
    z = zs[0]
    if tuple(h.values[z] for h in D.homs) != mu.values:
        raise NoPreimage("recovered element does not evaluate to mu")
    return z
