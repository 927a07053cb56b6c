import pytest

from monoid_duality import corpus
from monoid_duality.circle import Turn
from monoid_duality.dual import compute_dual
from monoid_duality.errors import NotAbelian, NotInverse, SizeLimitExceeded
from monoid_duality.homs import Hom
from monoid_duality.reflexivity import check_reflexive, constructive_preimage, delta, dixmier_check


def bidual_point(S, x):
    D = compute_dual(S)
    B = compute_dual(D.base)
    return D, B.homs[delta(S, D, B).map[x]]


class TestDelta:
    def test_trivial(self, trivial):
        D = compute_dual(trivial)
        d = delta(trivial, D)
        assert d.map == (d.target.unit,)

    def test_c2(self, c2):
        D = compute_dual(c2)
        B = compute_dual(D.base)
        d = delta(c2, D, B)
        sign = next(i for i, h in enumerate(D.homs) if h.values[1] == Turn(1, 2))
        assert B.homs[d.map[1]].values[sign] == Turn(1, 2)

    def test_dot_mu2(self, dot_mu2):
        d = delta(dot_mu2, compute_dual(dot_mu2))
        assert len(d.target) == 3 and d.is_isomorphism()

    def test_always_a_morphism(self, standard_corpus):
        for S in standard_corpus.values():
            assert delta(S, compute_dual(S)).is_valid()


class TestCheckReflexive:
    def test_c2(self, c2):
        r = check_reflexive(c2)
        assert r.verdict and r.predicted
        assert (r.monoid_size, r.dual_size, r.bidual_size) == (2, 2, 2)

    def test_truncated_add(self):
        r = check_reflexive(corpus.truncated_add(2))
        assert not r.verdict and not r.predicted
        assert not r.is_injective
        assert r.reason == "not inverse: element 1 has 0 inverses"
        assert r.to_dict()["injectivity_witness"] == ["1", "2"]

    def test_i2(self, i2):
        r = check_reflexive(i2)
        assert not r.verdict and not r.predicted
        assert r.reason.startswith("not abelian")
        assert r.dual_size == 3

    def test_separation_cases(self):
        # injectivity witnesses only arise for non-reflexive inputs; check the reporting path directly
        from monoid_duality.reflexivity import _separation

        S = corpus.dot_mu(2)
        assert "semilattice" in _separation(S, S.index("0"), S.index("0/1"))
        assert "group character" in _separation(S, S.index("0/1"), S.index("1/2"))

    def test_reflexive_gives_isomorphism(self, standard_corpus):
        for S in standard_corpus.values():
            r = check_reflexive(S)
            if r.verdict:
                assert r.delta.is_isomorphism()


class TestDixmier:
    @pytest.mark.parametrize(
        "S", [corpus.cyclic_group(1), corpus.cyclic_group(3), corpus.truncated_add(2), corpus.symmetric_inverse_monoid(3)],
        ids=["trivial", "C3", "tadd2", "I3"],
    )
    def test_holds(self, S):
        assert dixmier_check(S)

    def test_bound(self):
        with pytest.raises(SizeLimitExceeded):
            dixmier_check(corpus.cyclic_group(8), bound=4)


class TestConstructivePreimage:
    def test_unit(self, dot_mu2):
        D, mu = bidual_point(dot_mu2, dot_mu2.unit)
        assert constructive_preimage(dot_mu2, mu, D) == dot_mu2.unit

    def test_minus_one(self, dot_mu2):
        x = dot_mu2.index("1/2")
        D, mu = bidual_point(dot_mu2, x)
        assert constructive_preimage(dot_mu2, mu, D) == x

    def test_c4(self):
        S = corpus.cyclic_group(4)
        D = compute_dual(S)
        B = compute_dual(D.base)
        d = delta(S, D, B)
        for k, mu in enumerate(B.homs):
            assert d.map[constructive_preimage(S, mu, D)] == k

    def test_rejects(self, i2):
        with pytest.raises(NotAbelian):
            constructive_preimage(i2, Hom(i2, ()))
        T = corpus.truncated_add(2)
        with pytest.raises(NotInverse):
            constructive_preimage(T, Hom(T, ()))
