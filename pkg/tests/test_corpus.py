from math import comb, factorial

import pytest

from monoid_duality import corpus
from monoid_duality.characters import element_order
from monoid_duality.errors import LinkIncompatible, MonoidError, NotAbelianComponent
from monoid_duality.monoid import (
    clifford_decomposition,
    find_isomorphism,
    idempotents,
    is_abelian,
    is_inverse_semigroup,
    submonoid,
    validate_monoid,
)
from monoid_duality.reflexivity import structural_reason

C = corpus.cyclic_group
chain = corpus.chain_semilattice


def iso(S, T):
    return find_isomorphism(S, T) is not None


def test_cyclic():
    assert len(C(1)) == 1
    assert C(2).table == ((0, 1), (1, 0))
    assert element_order(C(6), 1) == 6
    with pytest.raises(MonoidError):
        C(0)


def test_chain():
    assert len(chain(1)) == 1
    assert chain(2).unit == 1
    assert idempotents(chain(5)) == list(range(5))
    with pytest.raises(MonoidError):
        chain(0)


def test_boolean():
    assert len(corpus.boolean_semilattice(0)) == 1
    assert iso(corpus.boolean_semilattice(1), chain(2))
    assert len(corpus.boolean_semilattice(2)) == 4
    assert not iso(corpus.boolean_semilattice(2), chain(4))


def test_dot_mu():
    assert iso(corpus.dot_mu(1), chain(2))
    assert corpus.dot_mu(2).elements == ("0", "0/1", "1/2")
    for n in range(1, 7):
        S = corpus.dot_mu(n)
        assert len(S) == n + 1
        assert is_abelian(S) and is_inverse_semigroup(S)


def test_direct_product():
    S = corpus.dot_mu(3)
    assert iso(corpus.direct_product(S, C(1)), S)
    klein = corpus.direct_product(C(2), C(2))
    assert len(klein) == 4 and all(element_order(klein, x) <= 2 for x in range(4))
    M = corpus.direct_product(chain(2), C(2))
    d = clifford_decomposition(M)
    assert [len(g) for g in d.groups.values()] == [2, 2]
    assert all(iso(submonoid(M, g, unit=e), C(2)) for e, g in d.groups.items())


class TestStrongSemilattice:
    def test_trivial_groups_recover_E(self):
        E = corpus.boolean_semilattice(2)
        groups = {e: C(1) for e in range(4)}
        links = {(e, f): (0,) for e in range(4) for f in range(4) if e != f and E.table[e][f] == f}
        assert iso(corpus.strong_semilattice(E, groups, links), E)

    def test_identity_link_is_product(self):
        S = corpus.strong_semilattice(chain(2), {0: C(2), 1: C(2)}, {(1, 0): (0, 1)})
        assert iso(S, corpus.direct_product(chain(2), C(2)))

    def test_collapse_is_dot_mu(self):
        S = corpus.strong_semilattice(chain(2), {0: C(1), 1: C(2)}, {(1, 0): (0, 0)})
        assert iso(S, corpus.dot_mu(2))

    def test_decomposition_recovered(self):
        for S in corpus.strong_semilattice_examples().values():
            d = clifford_decomposition(S)
            tops = {S.elements[e].split("|")[0] for e in d.idempotents}
            assert len(tops) == len(d.idempotents)
            for e, g in d.groups.items():
                prefix = S.elements[e].split("|")[0]
                assert {S.elements[x].split("|")[0] for x in g} == {prefix}
            for e in d.idempotents:
                for f in d.idempotents:
                    assert d.leq(e, f) == (S.table[e][f] == e)

    def test_errors(self):
        with pytest.raises(LinkIncompatible):
            corpus.strong_semilattice(chain(2), {0: C(2), 1: C(2)}, {(1, 0): (1, 0)})
        with pytest.raises(LinkIncompatible):
            corpus.strong_semilattice(chain(2), {0: C(2), 1: C(2)}, {})
        with pytest.raises(LinkIncompatible):
            corpus.strong_semilattice(
                chain(3), {0: C(2), 1: C(2), 2: C(2)}, {(2, 1): (0, 1), (1, 0): (0, 1), (2, 0): (0, 0)}
            )
        with pytest.raises(NotAbelianComponent):
            corpus.strong_semilattice(chain(2), {0: C(1), 1: chain(2)}, {(1, 0): (0, 0)})


def test_symmetric_inverse_monoid():
    for n, size in ((1, 2), (2, 7), (3, 34)):
        assert size == sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))
        assert len(corpus.symmetric_inverse_monoid(n)) == size
    assert iso(corpus.symmetric_inverse_monoid(1), chain(2))
    I2 = corpus.symmetric_inverse_monoid(2)
    assert is_inverse_semigroup(I2) and not is_abelian(I2)
    with pytest.raises(MonoidError):
        corpus.symmetric_inverse_monoid(4)


def test_truncated_add():
    assert iso(corpus.truncated_add(1), chain(2))
    assert is_inverse_semigroup(corpus.truncated_add(1))
    T = corpus.truncated_add(2)
    assert len(T) == 3 and not is_inverse_semigroup(T)
    assert [T.elements[e] for e in idempotents(T)] == ["0", "2"]


def test_adjoin_zero():
    assert iso(corpus.adjoin_zero(C(1)), chain(2))
    for n in range(1, 6):
        assert iso(corpus.adjoin_zero(C(n)), corpus.dot_mu(n))
    assert is_abelian(corpus.adjoin_zero(corpus.boolean_semilattice(2)))
    assert corpus.adjoin_zero(corpus.dot_mu(2)).elements[-1] == "0'"


def test_outputs_validate(standard_corpus):
    for S in standard_corpus.values():
        assert validate_monoid(S.elements, S.unit, S.table) == S
        assert len(set(S.elements)) == len(S)


def test_predicted_reflexivity(standard_corpus):
    for name, S in standard_corpus.items():
        negative = name.startswith(("symmetric_inverse_monoid", "truncated_add")) and name != "truncated_add(1)"
        assert (structural_reason(S) is None) == (not negative), name


def test_deterministic():
    a, b = corpus.standard_corpus(), corpus.standard_corpus()
    assert list(a) == list(b) and all(a[k] == b[k] for k in a)
