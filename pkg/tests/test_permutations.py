import pytest

from core.error_handler import ErrorCategory, OrbitComputationError
from core.permutations import (
    EdgeStyle,
    Permutation,
    SignedPermutation,
    all_mirrored,
    all_permutations,
    bruhat_leq,
    compose,
    fixed_point_free_involutions,
    format_permutation,
    from_signed,
    involutions,
    lehmer_code,
    length,
    mirrored,
    parse_permutation,
    reduced_word,
    to_signed,
    weak_action_orthogonal,
    weak_action_symplectic,
)


def perm(text: str) -> Permutation:
    return parse_permutation(text)


class TestBasics:
    def test_longest_element(self):
        assert Permutation.longest(4) == perm("4321")
        assert length(Permutation.longest(4)) == 6

    def test_compose_matches_word(self):
        s1, s2 = Permutation.simple_reflection(1, 3), Permutation.simple_reflection(2, 3)
        assert compose(s1, s2) == perm("231")
        assert Permutation.from_word([1, 2], 3) == perm("231")

    def test_compose_size_mismatch(self):
        with pytest.raises(OrbitComputationError) as info:
            compose(Permutation.identity(2), Permutation.identity(3))
        assert info.value.category == ErrorCategory.INPUT

    def test_invalid_images_rejected(self):
        with pytest.raises(OrbitComputationError):
            Permutation([1, 1, 2])

    def test_inverse(self):
        w = perm("231")
        assert compose(w, w.inverse()) == Permutation.identity(3)

    def test_embed(self):
        assert perm("21").embed(4) == perm("2134")
        with pytest.raises(OrbitComputationError):
            perm("321").embed(2)


class TestLengthAndWords:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_reduced_word_spells_w(self, n):
        for w in all_permutations(n):
            word = reduced_word(w)
            assert len(word) == length(w)
            assert Permutation.from_word(word, n) == w

    def test_lehmer_code(self):
        assert lehmer_code(perm("312")) == (2, 0, 0)
        assert lehmer_code(perm("4321")) == (3, 2, 1, 0)
        for w in all_permutations(4):
            assert sum(lehmer_code(w)) == length(w)

    def test_left_ascent(self):
        w = perm("132")
        assert w.is_left_ascent(1)
        assert not w.is_left_ascent(2)


class TestBruhat:
    def test_identity_and_longest_bound_everything(self):
        e, w0 = Permutation.identity(4), Permutation.longest(4)
        for w in all_permutations(4):
            assert bruhat_leq(e, w)
            assert bruhat_leq(w, w0)

    def test_incomparable_pair(self):
        assert not bruhat_leq(perm("213"), perm("132"))
        assert not bruhat_leq(perm("132"), perm("213"))

    def test_covers_by_reflection(self):
        assert bruhat_leq(perm("132"), perm("231"))
        assert not bruhat_leq(perm("231"), perm("132"))

    def test_compatible_with_length(self):
        group = all_permutations(3)
        for u in group:
            for v in group:
                if bruhat_leq(u, v) and u != v:
                    assert length(u) < length(v)


class TestInvolutions:
    def test_counts(self):
        assert len(involutions(4)) == 10
        assert len(fixed_point_free_involutions(6)) == 15
        assert fixed_point_free_involutions(5) == []

    def test_orthogonal_dashed_step(self):
        target, style = weak_action_orthogonal(1, perm("213"))
        assert target == Permutation.identity(3)
        assert style == EdgeStyle.DASHED

    def test_orthogonal_solid_step(self):
        target, style = weak_action_orthogonal(1, perm("321"))
        assert target == perm("132")
        assert style == EdgeStyle.SOLID

    def test_orthogonal_fixed_on_ascent(self):
        pi = Permutation.identity(3)
        assert weak_action_orthogonal(1, pi) == (pi, EdgeStyle.NONE)

    def test_symplectic_steps(self):
        w0 = Permutation.longest(4)
        assert weak_action_symplectic(1, w0) == (perm("3412"), EdgeStyle.SOLID)
        assert weak_action_symplectic(2, w0) == (w0, EdgeStyle.NONE)
        assert weak_action_symplectic(2, perm("2143"))[1] == EdgeStyle.NONE

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_orthogonal_action_stays_in_involutions(self, n):
        orbits = set(involutions(n))
        for pi in orbits:
            for i in range(1, n):
                assert weak_action_orthogonal(i, pi)[0] in orbits

    @pytest.mark.parametrize("size", [2, 4, 6, 8])
    def test_symplectic_action_stays_fixed_point_free(self, size):
        fpf = set(fixed_point_free_involutions(size))
        for pi in fpf:
            for i in range(1, size):
                target, style = weak_action_symplectic(i, pi)
                assert target in fpf
                assert style != EdgeStyle.DASHED

    def test_index_out_of_range(self):
        with pytest.raises(OrbitComputationError):
            weak_action_orthogonal(3, Permutation.identity(3))


class TestMirrored:
    def test_predicate(self):
        assert mirrored(perm("4321"))
        assert mirrored(perm("2143"), 4)
        assert not mirrored(perm("2134"))
        assert not mirrored(perm("21"), 4)

    def test_counts(self):
        # B_r has 2^r r! elements
        assert len(all_mirrored(4)) == 8
        assert len(all_mirrored(5)) == 8
        assert len(all_mirrored(6)) == 48
        assert len(all_mirrored(7)) == 48
        assert len(all_mirrored(8)) == 384

    def test_signed_encoding(self):
        sigma = to_signed(perm("4321"))
        assert sigma == SignedPermutation([-1, -2])
        assert sigma.act_on_weight((1, 0)) == (-1, 0)
        for size in (4, 5, 6, 7, 8):
            for w in all_mirrored(size):
                assert from_signed(to_signed(w), size) == w

    def test_to_signed_requires_mirrored(self):
        with pytest.raises(OrbitComputationError):
            to_signed(perm("2134"))


class TestParsing:
    def test_cycle_notation(self):
        assert parse_permutation("(1,4)(2,3)", 4) == Permutation.longest(4)
        assert parse_permutation("id", 3) == Permutation.identity(3)

    def test_one_line_notation(self):
        assert parse_permutation("4321") == Permutation.longest(4)
        assert parse_permutation("1 2 3") == Permutation.identity(3)

    @pytest.mark.parametrize("text,size", [
        ("(1,5)", 4),
        ("(1,2)(2,3)", 4),
        ("12", 3),
        ("id", None),
        ("", 3),
        ("112", 3),
    ])
    def test_rejects(self, text, size):
        with pytest.raises(OrbitComputationError) as info:
            parse_permutation(text, size)
        assert info.value.category == ErrorCategory.PARSE

    def test_format(self):
        assert format_permutation(perm("2134")) == "(1,2)"
        assert format_permutation(Permutation.identity(3)) == "id"
        assert format_permutation(perm("231")) == "231"
        assert format_permutation(Permutation.longest(4)) == "(1,4)(2,3)"
