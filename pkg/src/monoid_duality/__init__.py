"""Duality for finite monoids: homomorphisms into the unit circle with zero adjoined."""

from .circle import ONE, DotCircle, Turn, Zero
from .dual import clifford_dual, compute_dual, dual_morphism, enumerate_homs, restricted_duals
from .homs import DualMonoid, Hom
from .monoid import (
    CliffordDecomposition,
    FiniteMonoid,
    MonoidMorphism,
    clifford_decomposition,
    idempotents,
    is_abelian,
    is_clifford,
    is_inverse_semigroup,
    try_inverse,
    validate_monoid,
)
from .reflexivity import ReflexivityReport, check_reflexive, constructive_preimage, delta, dixmier_check

__version__ = "0.1.0"
