import pytest

from monoid_duality import corpus
from monoid_duality.circle import ONE, Zero
from monoid_duality.errors import NotASemilattice
from monoid_duality.semilattice import (
    hms_double_dual_check,
    join,
    semilattice_characters,
    semilattice_dual,
    upper_cone,
)

from oracles import exhaustive_01_homs

chain = corpus.chain_semilattice
diamond = corpus.boolean_semilattice(2)


def test_upper_cone():
    E = chain(3)
    assert upper_cone(E, E.unit).members == {E.unit}
    assert upper_cone(E, 1).members == {1, 2}
    assert upper_cone(E, 0).members == set(range(3))
    f = upper_cone(diamond, 1)
    assert f.members == {1, 3} and f.min_element == 1


def test_not_a_semilattice(c2):
    with pytest.raises(NotASemilattice):
        upper_cone(c2, 0)
    with pytest.raises(NotASemilattice):
        semilattice_characters(corpus.truncated_add(2))


def test_two_chain():
    vecs = sorted(h.values for h in semilattice_characters(chain(2)))
    assert vecs == [(Zero, ONE), (ONE, ONE)]
    assert vecs == exhaustive_01_homs(chain(2))


@pytest.mark.parametrize("E", [chain(3), diamond, corpus.boolean_semilattice(3)], ids=["chain3", "diamond", "bool3"])
def test_matches_brute_force(E):
    got = sorted(h.values for h in semilattice_characters(E))
    assert got == exhaustive_01_homs(E)
    assert len(got) == len(E)


def test_diamond_has_four():
    assert len(semilattice_characters(diamond)) == 4


def test_products_of_indicators():
    for E in (chain(4), diamond, corpus.boolean_semilattice(3)):
        for e in range(len(E)):
            for f in range(len(E)):
                a, b = upper_cone(E, e), upper_cone(E, f)
                j = join(E, e, f)
                assert a.members & b.members == upper_cone(E, j).members
                assert (a.indicator() * b.indicator()).values == upper_cone(E, j).indicator().values


def test_every_01_hom_is_a_cone_indicator():
    E = corpus.boolean_semilattice(3)
    for vec in exhaustive_01_homs(E):
        ones = [x for x in range(len(E)) if vec[x] == ONE]
        low = [e for e in ones if all(E.table[e][f] == e for f in ones)]
        assert len(low) == 1
        assert upper_cone(E, low[0]).indicator().values == vec


@pytest.mark.parametrize("E", [corpus.cyclic_group(1), chain(4), corpus.boolean_semilattice(3)], ids=["trivial", "chain4", "bool3"])
def test_double_dual(E):
    m, iso = hms_double_dual_check(E)
    assert iso and m.is_valid()
    assert len(semilattice_dual(E)) == len(E)
