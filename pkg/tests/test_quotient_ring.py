import pytest

from core.error_handler import ErrorCategory, OrbitComputationError
from core.permutations import all_permutations
from core.polynomial import Polynomial
from core.quotient_ring import QuotientRing, RingFlavor, complete_homogeneous, elementary_symmetric
from core.schubert import schubert
from orbits.verification import random_ideal_element, random_polynomial

x1, x2, x3 = Polynomial.x(1), Polynomial.x(2), Polynomial.x(3)


def test_symmetric_functions():
    assert elementary_symmetric(2, 3) == x1 * x2 + x1 * x3 + x2 * x3
    assert elementary_symmetric(0, 3) == Polynomial.one()
    assert complete_homogeneous(2, 2) == x1 ** 2 + x1 * x2 + x2 ** 2


class TestCohomologyRing:
    def test_two_variables(self):
        ring = QuotientRing(2)
        assert ring.normal_form(x2) == -x1
        assert ring.normal_form(x1 ** 2).is_zero()
        assert ring.normal_form(x1 * x2).is_zero()

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
    def test_generators_vanish(self, m):
        ring = QuotientRing(m)
        for generator in ring.generators():
            assert ring.normal_form(generator).is_zero()

    def test_standard_monomial_count(self):
        assert len(QuotientRing(4).standard_monomials()) == 24

    def test_standard_monomial_count_is_checked(self, monkeypatch):
        ring = QuotientRing(3)
        monkeypatch.setattr("core.quotient_ring.factorial", lambda m: 7)
        with pytest.raises(OrbitComputationError) as info:
            ring.standard_monomials()
        assert info.value.category == ErrorCategory.VERIFICATION

    def test_schubert_polynomials_are_normal_forms(self):
        ring = QuotientRing(4)
        for w in all_permutations(4):
            assert ring.normal_form(schubert(w)) == schubert(w)

    def test_idempotent_and_multiplicative(self, rng):
        ring = QuotientRing(4)
        for _ in range(10):
            f, g = random_polynomial(rng, 4, 5), random_polynomial(rng, 4, 5)
            nf = ring.normal_form(f)
            assert ring.normal_form(nf) == nf
            assert all(ring.is_standard(m.x) for m, _ in nf.items())
            assert ring.normal_form(f * g) == ring.normal_form(nf * ring.normal_form(g))

    def test_rejects_foreign_variables(self):
        ring = QuotientRing(3)
        with pytest.raises(OrbitComputationError):
            ring.normal_form(Polynomial.x(4))
        with pytest.raises(OrbitComputationError):
            ring.normal_form(Polynomial.y(1))

    def test_needs_a_variable(self):
        with pytest.raises(OrbitComputationError):
            QuotientRing(0)


class TestKTheoryRing:
    def test_one_variable(self):
        assert QuotientRing(1, RingFlavor.KTHEORY).normal_form(x1) == Polynomial.one()

    def test_two_variables(self):
        ring = QuotientRing(2, RingFlavor.KTHEORY)
        assert ring.normal_form(x2) == 2 - x1
        assert ring.normal_form(x1 ** 2) == 2 * x1 - 1
        assert ring.equal_mod(x1 * x2, Polynomial.one())

    @pytest.mark.parametrize("m", [2, 3, 4, 5])
    def test_generators_vanish(self, m):
        ring = QuotientRing(m, RingFlavor.KTHEORY)
        for generator in ring.generators():
            assert ring.normal_form(generator).is_zero()

    def test_demazure_image_is_not_the_unit(self):
        ring = QuotientRing(4, RingFlavor.KTHEORY)
        assert not ring.equal_mod(1 + x1 * x2, Polynomial.one())

    def test_multiplicative(self, rng):
        ring = QuotientRing(3, RingFlavor.KTHEORY)
        for _ in range(10):
            f, g = random_polynomial(rng, 3, 4), random_polynomial(rng, 3, 4)
            assert ring.normal_form(f * g) == ring.normal_form(ring.normal_form(f) * ring.normal_form(g))


@pytest.mark.parametrize("flavor", list(RingFlavor))
@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_random_ideal_elements_vanish(rng, flavor, m):
    ring = QuotientRing(m, flavor)
    for _ in range(5):
        element = random_ideal_element(rng, ring)
        assert ring.normal_form(element).is_zero()
        assert ring.equal_mod(x1 + element, x1)
