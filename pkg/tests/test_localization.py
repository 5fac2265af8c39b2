import pytest

from core.error_handler import ErrorCategory, OrbitComputationError
from core.permutations import Permutation, parse_permutation
from core.polynomial import Polynomial, parse_polynomial
from orbits.localization import (
    LaurentCharacter,
    WeightMultiset,
    check_equivariance,
    check_separation,
    closed_orbit_weights,
    expected_weight_count,
    format_weight,
    k_roots,
    restrict_class,
    rho,
    verify_closed_orbit,
)
from orbits.pairs import SymmetricPair
from orbits.upsilon import closed_orbit_upsilon_k
from orbits.verification import random_polynomial

SP4 = SymmetricPair.symplectic(4)


class TestWeights:
    def test_format(self):
        assert format_weight((1, -1)) == "Y1-Y2"
        assert format_weight((-2, 0)) == "-2*Y1"
        assert format_weight((0, 0)) == "0"

    def test_rho_even(self):
        assert [rho(SP4, i) for i in range(1, 5)] == [(1, 0), (0, 1), (0, -1), (-1, 0)]

    def test_rho_odd_has_trivial_middle(self):
        pair = SymmetricPair.orthogonal(3)
        assert [rho(pair, i) for i in range(1, 4)] == [(1,), (0,), (-1,)]

    def test_rho_out_of_range(self):
        with pytest.raises(OrbitComputationError) as info:
            rho(SP4, 5)
        assert info.value.category == ErrorCategory.INPUT

    def test_k_roots(self):
        assert len(k_roots(SP4)) == 4
        assert (-2, 0) in k_roots(SP4)
        assert len(k_roots(SymmetricPair.orthogonal(4))) == 2
        assert k_roots(SymmetricPair.orthogonal(3)) == [(-1,)]

    @pytest.mark.parametrize("pair,count", [
        (SP4, 2),
        (SymmetricPair.symplectic(6), 6),
        (SymmetricPair.orthogonal(2), 1),
        (SymmetricPair.orthogonal(3), 2),
        (SymmetricPair.orthogonal(4), 4),
        (SymmetricPair.orthogonal(5), 6),
    ], ids=lambda value: getattr(value, "label", str(value)))
    def test_expected_weight_count(self, pair, count):
        assert expected_weight_count(pair) == count


class TestCharacters:
    def test_arithmetic(self):
        one = LaurentCharacter.one(2)
        a = LaurentCharacter.one_minus((1, 0))
        assert a * one == a
        assert a - a == LaurentCharacter(2)
        assert (a + a - a) == a
        assert str(a) == "-e^(Y1) + 1"

    def test_exponentials_multiply_additively(self):
        product = LaurentCharacter.exponential((1, -1)) * LaurentCharacter.exponential((0, 1))
        assert product == LaurentCharacter.exponential((1, 0))

    def test_rank_mismatch(self):
        with pytest.raises(OrbitComputationError):
            LaurentCharacter(2, {(1,): 1})

    def test_multiset_remove_once(self):
        weights = WeightMultiset([(1, 0), (1, 0), (0, 1)])
        weights.remove_once((1, 0))
        assert len(weights) == 2
        assert weights == WeightMultiset([(0, 1), (1, 0)])
        with pytest.raises(OrbitComputationError) as info:
            weights.remove_once((2, 0))
        assert info.value.category == ErrorCategory.VERIFICATION


class TestRestriction:
    def test_closed_orbit_at_identity(self):
        restriction = restrict_class(SP4, closed_orbit_upsilon_k(SP4), Permutation.identity(4))
        expected = LaurentCharacter.one_minus((1, 1)) * LaurentCharacter.one_minus((1, -1))
        assert restriction == expected

    def test_identity_weights_match_restriction(self):
        weights = closed_orbit_weights(SP4, Permutation.identity(4))
        assert len(weights) == 2
        assert weights.self_intersection(2) == restrict_class(SP4, closed_orbit_upsilon_k(SP4),
                                                              Permutation.identity(4))

    def test_non_mirrored_point_vanishes(self):
        w = parse_permutation("2134")
        assert restrict_class(SP4, closed_orbit_upsilon_k(SP4), w).is_zero()
        with pytest.raises(OrbitComputationError):
            closed_orbit_weights(SP4, w)

    def test_restriction_is_multiplicative(self, rng):
        w = parse_permutation("4231")
        for _ in range(10):
            f, g = random_polynomial(rng, 4, 3), random_polynomial(rng, 4, 3)
            assert restrict_class(SP4, f * g, w) == restrict_class(SP4, f, w) * restrict_class(SP4, g, w)

    def test_y_variables(self):
        assert restrict_class(SP4, Polynomial.y(2), Permutation.identity(4)) == LaurentCharacter.exponential((0, 1))

    def test_rejects_foreign_input(self):
        with pytest.raises(OrbitComputationError):
            restrict_class(SP4, parse_polynomial("x5"), Permutation.identity(4))
        with pytest.raises(OrbitComputationError):
            restrict_class(SP4, Polynomial.one(), Permutation.identity(3))


class TestClosedOrbitLocalization:
    @pytest.mark.parametrize("pair,mirrored_points", [
        (SP4, 8),
        (SymmetricPair.symplectic(6), 48),
        (SymmetricPair.orthogonal(2), 2),
        (SymmetricPair.orthogonal(3), 2),
        (SymmetricPair.orthogonal(4), 8),
        (SymmetricPair.orthogonal(5), 8),
    ], ids=lambda value: getattr(value, "label", str(value)))
    def test_every_fixed_point(self, pair, mirrored_points):
        report = verify_closed_orbit(pair)
        assert report.passed, report.failures
        assert report.mirrored_pass == mirrored_points
        assert report.mirrored_pass + report.vanishing_pass == report.checked

    def test_equivariance(self):
        assert check_equivariance(SP4) == 32
        assert check_equivariance(SymmetricPair.orthogonal(3)) == 6

    def test_separation(self):
        assert check_separation(SymmetricPair.symplectic(6)) == 15

    def test_separation_is_symplectic_only(self):
        with pytest.raises(OrbitComputationError) as info:
            check_separation(SymmetricPair.orthogonal(4))
        assert info.value.category == ErrorCategory.INPUT
