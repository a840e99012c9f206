"""Shared hypothesis strategies for band words and normal forms."""

from __future__ import annotations

from hypothesis import strategies as st

from tribraid.normalform import NormalForm
from tribraid.words import Syllable, Word, wrap_subscript

subscripts = st.integers(1, 3)
nonzero_exponents = st.integers(-3, 3).filter(lambda e: e != 0)

BAND_LETTERS = (1, -1, 2, -2, 3, -3)
CLASSICAL_LETTERS = (1, -1, 2, -2)


def words(max_syllables: int = 6):
    return st.lists(
        st.tuples(subscripts, nonzero_exponents), max_size=max_syllables
    ).map(Word.from_pairs)


def letter_words(max_letters: int = 8, classical: bool = False):
    alphabet = CLASSICAL_LETTERS if classical else BAND_LETTERS
    return st.lists(st.sampled_from(alphabet), max_size=max_letters).map(
        Word.from_letters
    )


def _build_normal_form(power: int, start: int, lengths: list[int]) -> NormalForm:
    tail = []
    subscript = start
    for length in lengths:
        tail.append(Syllable(subscript, length))
        subscript = wrap_subscript(subscript + 1)
    return NormalForm(power, tuple(tail))


def normal_forms():
    return st.builds(
        _build_normal_form,
        st.integers(-4, 4),
        subscripts,
        st.lists(st.integers(1, 4), max_size=5),
    )


# Letter-level relation moves that preserve the braid element: the cyclic
# delta identities and their inverses, plus free cancellation.
_RELATION_MOVES = {
    (2, 1): [(3, 2), (1, 3)],
    (3, 2): [(2, 1), (1, 3)],
    (1, 3): [(2, 1), (3, 2)],
    (-1, -2): [(-2, -3), (-3, -1)],
    (-2, -3): [(-1, -2), (-3, -1)],
    (-3, -1): [(-1, -2), (-2, -3)],
}


@st.composite
def equal_word_pairs(draw):
    """Two letter sequences equal as braids, built by explicit rewrites.

    Independent of the package's normalization: only free insertions and
    the defining relations are applied, so this can referee a disagreement
    between words_equal and the Burau oracle.
    """
    base = draw(st.lists(st.sampled_from(BAND_LETTERS), max_size=6))
    letters = list(base)
    for _ in range(draw(st.integers(0, 4))):
        kind = draw(st.integers(0, 1))
        if kind == 0:
            position = draw(st.integers(0, len(letters)))
            letter = draw(st.sampled_from(BAND_LETTERS))
            letters[position:position] = [letter, -letter]
        elif len(letters) >= 2:
            position = draw(st.integers(0, len(letters) - 2))
            pair = (letters[position], letters[position + 1])
            options = _RELATION_MOVES.get(pair)
            if options:
                replacement = draw(st.sampled_from(options))
                letters[position:position + 2] = list(replacement)
    return Word.from_letters(base), Word.from_letters(letters)
