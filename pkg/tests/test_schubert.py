from fractions import Fraction

import pytest

from core.error_handler import ErrorCategory, OrbitComputationError
from core.permutations import Permutation, all_permutations, compose, lehmer_code, length, parse_permutation
from core.polynomial import Polynomial, parse_polynomial
from core.schubert import (
    BasisExpansion,
    BasisKind,
    descent_independence_words,
    double_schubert,
    expand_grothendieck,
    expand_schubert,
    generate_along_word,
    grothendieck,
    kirillov_double_expand,
    length_additive_factorizations,
    schubert,
)
from orbits.verification import oracle_schubert_expansion, random_span_polynomial

x1, x2 = Polynomial.x(1), Polynomial.x(2)


def perm(text: str) -> Permutation:
    return parse_permutation(text)


class TestGeneration:
    def test_schubert_small(self):
        assert schubert(Permutation.identity(3)) == Polynomial.one()
        assert schubert(perm("321")) == x1 ** 2 * x2
        assert schubert(perm("231")) == x1 * x2
        assert schubert(perm("312")) == x1 ** 2
        assert schubert(perm("132")) == x1 + x2
        assert schubert(perm("213")) == x1

    def test_schubert_is_stable(self):
        for w in all_permutations(3):
            assert schubert(w.embed(4)) == schubert(w)

    def test_grothendieck_small(self):
        assert grothendieck(Permutation.identity(3)) == Polynomial.one()
        assert grothendieck(perm("21")) == 1 - x1

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_grothendieck_lowest_part_is_schubert(self, n):
        for w in all_permutations(n):
            assert grothendieck(w).substitute_one_minus_x().lowest_degree_part() == schubert(w)

    def test_double_schubert(self):
        assert double_schubert(perm("21")) == x1 - Polynomial.y(1)
        assert double_schubert(perm("2134")).drop_y() == x1
        for w in all_permutations(3):
            assert double_schubert(w).drop_y() == schubert(w)

    @pytest.mark.parametrize("kind", list(BasisKind))
    def test_descent_choice_independence(self, kind):
        build = {BasisKind.SCHUBERT: schubert, BasisKind.GROTHENDIECK: grothendieck,
                 BasisKind.DOUBLE_SCHUBERT: double_schubert}[kind]
        for w in all_permutations(4):
            words = descent_independence_words(w)
            assert all(len(word) == 6 - length(w) for word in words)
            for word in words:
                assert generate_along_word(w, kind, word) == build(w)

    def test_generate_along_word_rejects_bad_word(self):
        with pytest.raises(OrbitComputationError):
            generate_along_word(Permutation.identity(3), BasisKind.SCHUBERT, [1])


class TestSchubertExpansion:
    def test_closed_orbit_example(self):
        expansion = expand_schubert(parse_polynomial("2*x1*(x1+x2)"), 3)
        assert expansion.entries == {perm("231"): Polynomial.constant(2), perm("312"): Polynomial.constant(2)}
        assert expansion.is_nonnegative_integral()

    def test_basis_element(self):
        for w in all_permutations(4):
            assert expand_schubert(schubert(w), 4).entries == {w: Polynomial.one()}

    def test_zero(self):
        assert expand_schubert(Polynomial.zero(), 3).entries == {}
        assert expand_schubert(Polynomial.zero(), 3).format_lines() == ["0"]

    @pytest.mark.parametrize("text", ["x1^3", "x3", "x1*y1"])
    def test_outside_span(self, text):
        with pytest.raises(OrbitComputationError) as info:
            expand_schubert(parse_polynomial(text), 3)
        assert info.value.category == ErrorCategory.BASIS_MEMBERSHIP

    def test_agrees_with_linear_algebra_oracle(self, rng):
        for _ in range(8):
            f = random_span_polynomial(rng, 4)
            expansion = expand_schubert(f, 4)
            oracle = oracle_schubert_expansion(f, 4)
            computed = {w: c.constant_term() for w, c in expansion.entries.items()}
            assert {w: Fraction(int(c.p), int(c.q)) for w, c in oracle.items()} == computed

    def test_reconstruction(self, rng):
        for _ in range(8):
            f = random_span_polynomial(rng, 4)
            assert expand_schubert(f, 4).reconstruct() == f


class TestGrothendieckExpansion:
    def test_unit(self):
        expansion = expand_grothendieck(Polynomial.one(), 2)
        assert expansion.entries == {Permutation.identity(2): Polynomial.one()}
        assert expansion.format_lines() == ["1 * G[12]"]

    def test_basis_element(self):
        for w in all_permutations(3):
            assert expand_grothendieck(grothendieck(w), 3).entries == {w: Polynomial.one()}

    def test_symplectic_k_class(self):
        f = 1 - x1 * x2
        expansion = expand_grothendieck(f, 6)
        assert expansion.reconstruct() == f
        assert all(c.is_integral() for c in expansion.entries.values())

    def test_leading_monomial_is_lehmer_code(self):
        def padded(exponents):
            return exponents + (0,) * (4 - len(exponents))

        # reverse lexicographic: compare the last variable first
        for w in all_permutations(4):
            monomial, c = max(schubert(w).items(), key=lambda item: tuple(reversed(padded(item[0].x))))
            assert padded(monomial.x) == lehmer_code(w)
            assert c == 1

    def test_integer_combination_recovered(self):
        combination = {perm("2143"): 2, perm("1342"): -1, perm("3412"): 3, Permutation.identity(4): 1}
        f = Polynomial.zero()
        for w, c in combination.items():
            f = f + grothendieck(w).scale(c)
        expansion = expand_grothendieck(f, 4)
        assert expansion.entries == {w: Polynomial.constant(c) for w, c in combination.items()}


class TestDoubleExpansion:
    def test_factorizations_are_length_additive(self):
        for w in all_permutations(3):
            pairs = length_additive_factorizations(w)
            assert (w, Permutation.identity(3)) in pairs
            assert (Permutation.identity(3), w) in pairs
            for v, u in pairs:
                assert compose(u, v) == w
                assert length(u) + length(v) == length(w)

    def test_kirillov_identity(self):
        group = all_permutations(4)
        for w in group:
            total = Polynomial.zero()
            for v, u in length_additive_factorizations(w, group):
                total = total + schubert(u).x_to_y() * double_schubert(v)
            assert total == schubert(w)

    def test_orthogonal_closed_orbit_display(self, golden):
        expansion = kirillov_double_expand(parse_polynomial("2*x1*(x1+x2)"), 3)
        assert expansion.entries == golden.expected_terms("o3_closed_double")
        assert expansion.format_lines()[0] == "(2*y1^2 + 2*y1*y2) * S[123](x;y)"

    def test_symplectic_closed_orbit_display(self, golden):
        f = parse_polynomial("(x1+x2)*(x1+x3)")
        expansion = kirillov_double_expand(f, 4)
        assert expansion.entries == golden.expected_terms("sp4_closed_double")
        specialized = expansion.specialize_y(golden.specialization("sp4_closed_specialized"))
        assert specialized.entries == golden.expected_terms("sp4_closed_specialized")

    def test_nonnegative_in_y(self):
        expansion = kirillov_double_expand(parse_polynomial("(x1+x2)*(x1+x3)"), 4)
        assert all(c.is_nonnegative_integral() for c in expansion.entries.values())


class TestBasisExpansion:
    def test_add_drops_cancelled_terms(self):
        w = perm("213")
        expansion = BasisExpansion(BasisKind.SCHUBERT, 3, {w: Polynomial.one()})
        expansion.add(w, -Polynomial.one())
        assert expansion.entries == {}
        assert expansion.coefficient(w).is_zero()

    def test_as_dict_is_graded(self):
        expansion = expand_schubert(parse_polynomial("2*x1*(x1+x2) + x1"), 3)
        assert list(expansion.as_dict()) == ["213", "231", "312"]
