"""The full battery of duality identities, run against a single monoid."""

from __future__ import annotations

from .dual import (
    clifford_dual,
    dual_morphism,
    enumerate_homs,
    idempotent_submonoid,
    restricted_duals,
    retraction,
)
from .errors import DualityViolation, SizeLimitExceeded
from .homs import Hom
from .monoid import identity_morphism, idempotents, is_abelian, is_inverse_semigroup
from .reflexivity import DEFAULT_TRIPLE_DUAL_BOUND, check_reflexive, constructive_preimage, delta, dixmier_check
from .semilattice import semilattice_characters


def idempotent_correspondence(S) -> list[str]:
    """Idempotent homs of S^⊙ restrict bijectively onto E^:, and i^⊙ ∘ π^⊙ is the identity on E^⊙."""
    problems = []
    D = enumerate_homs(S)
    E, incl = idempotent_submonoid(S)
    DE = enumerate_homs(E)
    if sorted(DE.value_vectors()) != sorted(h.values for h in semilattice_characters(E)):
        problems.append("dual of E differs from its filter characters")
    i_dual = dual_morphism(incl, source_dual=DE, target_dual=D)
    _, idem = restricted_duals(D)
    images = [i_dual.map[k] for k in idem]
    if sorted(images) != list(range(len(DE))):
        problems.append("restriction to E is not a bijection from idempotent homs onto E^:")
    pi = retraction(S, E)
    pi_dual = dual_morphism(pi, source_dual=D, target_dual=DE)
    if pi_dual.then(i_dual) != identity_morphism(DE.base):
        problems.append("i^⊙ ∘ π^⊙ is not the identity of E^⊙")
    if sorted(pi_dual.map) != sorted(idem):
        problems.append("π^⊙ does not land exactly on the idempotent homs")
    return problems


def invariant_problems(S, triple_bound: int = DEFAULT_TRIPLE_DUAL_BOUND) -> list[str]:
    """Every identity that must hold for S; an empty list means all passed."""
    problems = []
    D = enumerate_homs(S)
    if not (is_abelian(D.base) and is_inverse_semigroup(D.base)):
        problems.append("dual is not an abelian inverse monoid")
    _, idem = restricted_duals(D)
    if idem != idempotents(D.base):
        problems.append("idempotents of the dual are not the {0,1}-valued homs")
    report = check_reflexive(S)
    if not report.consistent:
        problems.append(f"reflexivity verdict {report.verdict} but predicted {report.predicted}")
    try:
        if not dixmier_check(S, bound=triple_bound):
            problems.append("dual(delta_S) ∘ delta_{S^⊙} is not the identity")
    except SizeLimitExceeded:
        pass
    if report.predicted:
        if clifford_dual(S).value_vectors() != D.value_vectors():
            problems.append("backtracking and maximal-subgroup duals differ")
        if not len(S) == len(D) == report.bidual_size:
            problems.append("cardinalities of S, S^⊙, S^⊙⊙ differ")
        d = delta(S, D)
        bidual_homs = [Hom(D.base, tuple(D.homs[k].values[x] for k in range(len(D)))) for x in range(len(S))]
        try:
            for x, mu in enumerate(bidual_homs):
                if constructive_preimage(S, mu, D) != x:
                    problems.append(f"preimage recovery fails at {S.elements[x]!r}")
        except DualityViolation as exc:
            problems.append(str(exc))
        if not d.is_isomorphism():
            problems.append("delta is not an isomorphism")
        problems.extend(idempotent_correspondence(S))
    return problems
