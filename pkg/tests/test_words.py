import pytest
from hypothesis import given, settings

from conftest import equal_word_pairs, letter_words, words
from oracles import strand_component_count
from tribraid.words import (
    BurauMatrix,
    MixedAlphabetError,
    Syllable,
    Word,
    WordSyntaxError,
    burau,
    component_count,
    exponent_sum,
    format_word,
    invert,
    parse_word,
    permutation,
    reverse,
    to_classical,
)

settings.register_profile("unit", max_examples=100, derandomize=True, deadline=None)
settings.load_profile("unit")


def pairs(word):
    return [(s.subscript, s.exponent) for s in word.syllables]


class TestParse:
    def test_flype_admissible_example(self):
        assert pairs(parse_word("a1^-2 a2^-3 a1^5 a2")) == [(1, -2), (2, -3), (1, 5), (2, 1)]

    def test_empty(self):
        assert parse_word("") == Word()

    def test_merge_and_elide(self):
        assert parse_word("s1 s1^2 s2^0 s1^-3") == Word()

    def test_dot_separator(self):
        assert parse_word("a1.a2^2") == Word.from_pairs([(1, 1), (2, 2)])

    def test_syntax_error_position(self):
        with pytest.raises(WordSyntaxError) as info:
            parse_word("a1 b2")
        assert info.value.position == 3

    def test_dangling_caret(self):
        with pytest.raises(WordSyntaxError):
            parse_word("a1^")

    def test_mixed_alphabet(self):
        with pytest.raises(MixedAlphabetError):
            parse_word("a1 s2")

    def test_no_s3(self):
        with pytest.raises(WordSyntaxError):
            parse_word("s3")


class TestFormat:
    def test_band_example(self):
        word = parse_word("a1^-2 a2^-3 a1^5 a2")
        assert format_word(word) == "a1^-2 a2^-3 a1^5 a2"

    def test_classical_expansion(self):
        assert format_word(Word.from_pairs([(3, 2)]), "classical") == "s1^-1 s2^2 s1"

    @given(words())
    def test_round_trip(self, word):
        assert parse_word(format_word(word)) == word

    @given(letter_words(classical=True))
    def test_classical_round_trip(self, word):
        assert parse_word(format_word(word, "classical")) == word


class TestInvert:
    def test_example(self):
        assert pairs(invert(Word.from_pairs([(1, 2), (2, -1)]))) == [(2, 1), (1, -2)]

    def test_empty(self):
        assert invert(Word()) == Word()

    @given(words())
    def test_involution(self, word):
        assert invert(invert(word)) == word

    @given(words())
    def test_group_inverse(self, word):
        assert burau(word * invert(word)) == BurauMatrix.identity()


class TestReverse:
    def test_classical_word(self):
        assert pairs(reverse(Word.from_pairs([(1, 2), (2, 3)]))) == [(2, 3), (1, 2)]

    def test_a3_goes_through_classical(self):
        # rev(a3) = s1 s2 s1^-1, not a3 itself.
        expected = parse_word("s1 s2 s1^-1")
        assert burau(reverse(Word.from_pairs([(3, 1)]))) == burau(expected)

    @given(letter_words(classical=True))
    def test_involution_on_classical_words(self, word):
        assert reverse(reverse(word)) == word

    @given(words())
    def test_involution_as_braids(self, word):
        assert burau(reverse(reverse(word))) == burau(word)

    @given(words())
    def test_preserves_exponent_sum_and_components(self, word):
        assert exponent_sum(reverse(word)) == exponent_sum(word)
        assert component_count(reverse(word)) == component_count(word)

    @given(words())
    def test_conversion_consistency(self, word):
        assert burau(to_classical(word)) == burau(word)


class TestExponentSum:
    def test_example(self):
        assert exponent_sum(parse_word("a1^-2 a2^-3 a1^5 a2")) == 1

    def test_empty(self):
        assert exponent_sum(Word()) == 0

    @given(words())
    def test_vanishes_on_commutators(self, word):
        assert exponent_sum(word * invert(word)) == 0


class TestPermutation:
    def test_three_cycle(self):
        word = Word.from_pairs([(1, 3), (2, 1)])
        assert permutation(word) in ((2, 3, 1), (3, 1, 2))
        assert component_count(word) == 1

    def test_empty_is_identity(self):
        assert permutation(Word()) == (1, 2, 3)
        assert component_count(Word()) == 3

    def test_full_twist_on_two_strands(self):
        # a2^2 induces the identity permutation: the closure is a Hopf link
        # plus a split unknot, three components in all.
        assert permutation(Word.from_pairs([(2, 2)])) == (1, 2, 3)
        assert component_count(Word.from_pairs([(2, 2)])) == 3
        assert strand_component_count(Word.from_pairs([(2, 2)])) == 3

    @given(words())
    def test_agrees_with_strand_following(self, word):
        assert component_count(word) == strand_component_count(word)


class TestBurau:
    def test_identity(self):
        assert burau(Word()) == BurauMatrix.identity()

    def test_braid_relation(self):
        assert burau(parse_word("s1 s2 s1")) == burau(parse_word("s2 s1 s2"))

    def test_band_relations(self):
        delta = burau(parse_word("a2 a1"))
        assert burau(parse_word("a3 a2")) == delta
        assert burau(parse_word("a1 a3")) == delta

    @given(words(max_syllables=4), words(max_syllables=4))
    def test_homomorphism(self, u, v):
        assert burau(u * v) == burau(u) * burau(v)

    @given(words())
    def test_determinant_is_signed_power(self, word):
        from tribraid.laurent import LaurentPoly

        s = exponent_sum(word)
        sign = -1 if s % 2 else 1
        assert burau(word).determinant() == LaurentPoly.monomial("t", 2 * s, sign)

    @given(equal_word_pairs())
    def test_relation_rewrites_fix_the_image(self, pair):
        u, v = pair
        assert burau(u) == burau(v)
