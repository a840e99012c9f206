"""Words in the 3-strand braid group over the band alphabet.

The band presentation of B3 has generators a1 = s1, a2 = s2 and
a3 = s1^-1 s2 s1 (writing s1, s2 for the classical generators) subject to

    a2 a1 = a3 a2 = a1 a3  (= delta).

Subscripts are always read mod 3 with representatives {1, 2, 3}, so
delta = a_{i+1} a_i for every i.  A :class:`Word` is a free word in the
band letters and their inverses, kept in maximal-syllable form: adjacent
syllables have distinct subscripts and no syllable has exponent zero.

The reduced Burau representation implemented here is faithful on B3 and
serves as the package's word-equality oracle: two words are equal in the
group iff their Burau matrices coincide.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Iterable, Iterator, NamedTuple

from .laurent import LaurentPoly


def wrap_subscript(i: int) -> int:
    """Reduce a subscript mod 3 into the representative set {1, 2, 3}."""
    return (i - 1) % 3 + 1


class Syllable(NamedTuple):
    subscript: int
    exponent: int


class WordSyntaxError(ValueError):
    """Raised when a word string does not match the grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class MixedAlphabetError(WordSyntaxError):
    """Raised when band (a*) and classical (s*) tokens are mixed."""


@dataclasses.dataclass(frozen=True)
class Word:
    """A free word over a1, a2, a3 in maximal-syllable form."""

    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self) -> None:
        previous = None
        for syllable in self.syllables:
            if syllable.subscript not in (1, 2, 3):
                raise ValueError(f"bad subscript {syllable.subscript}")
            if syllable.exponent == 0:
                raise ValueError("zero exponent in Word")
            if previous is not None and previous == syllable.subscript:
                raise ValueError("adjacent syllables share a subscript")
            previous = syllable.subscript

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> Word:
        """Build a Word, merging adjacent equal subscripts and eliding zeros."""
        stack: list[Syllable] = []
        for subscript, exponent in pairs:
            if exponent == 0:
                continue
            if stack and stack[-1].subscript == subscript:
                merged = stack.pop().exponent + exponent
                if merged != 0:
                    stack.append(Syllable(subscript, merged))
            else:
                stack.append(Syllable(subscript, exponent))
        return cls(tuple(stack))

    @classmethod
    def from_letters(cls, letters: Iterable[int]) -> Word:
        """Build a Word from signed letters, e.g. -2 meaning a2^-1."""
        return cls.from_pairs((abs(x), 1 if x > 0 else -1) for x in letters)

    def letters(self) -> list[int]:
        """Expand to a list of signed single letters."""
        out: list[int] = []
        for subscript, exponent in self.syllables:
            sign = 1 if exponent > 0 else -1
            out.extend([sign * subscript] * abs(exponent))
        return out

    def letter_length(self) -> int:
        return sum(abs(s.exponent) for s in self.syllables)

    def is_classical(self) -> bool:
        return all(s.subscript in (1, 2) for s in self.syllables)

    def __mul__(self, other: Word) -> Word:
        return Word.from_pairs([*self.syllables, *other.syllables])

    def __iter__(self) -> Iterator[Syllable]:
        return iter(self.syllables)


_TOKEN = re.compile(r"[\s.]+|(?P<alpha>[as])(?P<index>[123])(?:\^(?P<exp>-?\d+))?")


def parse_word(text: str) -> Word:
    """Parse the word grammar: tokens a1|a2|a3|s1|s2 with optional ^int.

    Classical tokens s1, s2 map directly to subscripts 1, 2; one alphabet
    per word.  Separators are whitespace or '.'.
    """
    pairs: list[tuple[int, int]] = []
    alphabets: set[str] = set()
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise WordSyntaxError(f"unexpected input {text[pos:pos + 4]!r}", pos)
        if match.group("alpha") is not None:
            alphabet = match.group("alpha")
            index = int(match.group("index"))
            if alphabet == "s" and index == 3:
                raise WordSyntaxError("classical alphabet has no s3", pos)
            alphabets.add(alphabet)
            if len(alphabets) > 1:
                raise MixedAlphabetError("band and classical tokens mixed", pos)
            exponent = 1 if match.group("exp") is None else int(match.group("exp"))
            pairs.append((index, exponent))
        pos = match.end()
    return Word.from_pairs(pairs)


def format_word(word: Word, alphabet: str = "band") -> str:
    """Render a Word in the grammar parse_word accepts.

    ``alphabet="classical"`` expands a3 through s1^-1 s2 s1, so the result
    is a classical word equal to the input as a braid (identical when the
    input has no a3 syllables).
    """
    if alphabet == "band":
        prefix, syllables = "a", word.syllables
    elif alphabet == "classical":
        prefix, syllables = "s", to_classical(word).syllables
    else:
        raise ValueError(f"unknown alphabet {alphabet!r}")
    tokens = []
    for subscript, exponent in syllables:
        suffix = "" if exponent == 1 else f"^{exponent}"
        tokens.append(f"{prefix}{subscript}{suffix}")
    return " ".join(tokens)


def invert(word: Word) -> Word:
    """The group inverse: reversed syllables with negated exponents."""
    return Word(tuple(Syllable(s.subscript, -s.exponent) for s in reversed(word.syllables)))


def _classical_pairs(word: Word) -> list[tuple[int, int]]:
    pairs: list[tuple[int, int]] = []
    for subscript, exponent in word.syllables:
        if subscript == 3:
            # a3^k = s1^-1 s2^k s1 for every k (the conjugating letters
            # collapse between consecutive copies of a3).
            pairs.extend([(1, -1), (2, exponent), (1, 1)])
        else:
            pairs.append((subscript, exponent))
    return pairs


def to_classical(word: Word) -> Word:
    """An equal braid word using subscripts 1, 2 only."""
    return Word.from_pairs(_classical_pairs(word))


def reverse(word: Word) -> Word:
    """The reversal anti-automorphism: rev(xy) = rev(y) rev(x), rev(si^e) = si^e.

    Reversal is defined on classical words (reading the letter sequence
    backwards, keeping signs), so a3 syllables are expanded first; naive
    band-letter reversal would be wrong for a3.
    """
    return Word.from_pairs(reversed(_classical_pairs(word)))


def exponent_sum(word: Word) -> int:
    """Algebraic sum of all exponents; the writhe of the closed diagram."""
    return sum(s.exponent for s in word.syllables)


# Image of each band generator in the symmetric group on strand positions,
# as the tuple (pi(1), pi(2), pi(3)).
_TRANSPOSITIONS = {1: (2, 1, 3), 2: (1, 3, 2), 3: (3, 2, 1)}


def permutation(word: Word) -> tuple[int, int, int]:
    """Induced strand permutation: position i goes to permutation(word)[i-1]."""
    image = (1, 2, 3)
    for subscript, exponent in word.syllables:
        if exponent % 2:
            transposition = _TRANSPOSITIONS[subscript]
            image = tuple(transposition[i - 1] for i in image)  # type: ignore[assignment]
    return image


def component_count(word: Word) -> int:
    """Number of components of the closed-braid link: cycles of the permutation."""
    image = permutation(word)
    seen: set[int] = set()
    cycles = 0
    for start in (1, 2, 3):
        if start in seen:
            continue
        cycles += 1
        current = start
        while current not in seen:
            seen.add(current)
            current = image[current - 1]
    return cycles


@dataclasses.dataclass(frozen=True)
class BurauMatrix:
    """A 2x2 matrix of exact Laurent polynomials in t."""

    e11: LaurentPoly
    e12: LaurentPoly
    e21: LaurentPoly
    e22: LaurentPoly

    @classmethod
    def identity(cls) -> BurauMatrix:
        one = LaurentPoly.one("t")
        zero = LaurentPoly.zero("t")
        return cls(one, zero, zero, one)

    def __mul__(self, other: BurauMatrix) -> BurauMatrix:
        return BurauMatrix(
            self.e11 * other.e11 + self.e12 * other.e21,
            self.e11 * other.e12 + self.e12 * other.e22,
            self.e21 * other.e11 + self.e22 * other.e21,
            self.e21 * other.e12 + self.e22 * other.e22,
        )

    def __pow__(self, exponent: int) -> BurauMatrix:
        if exponent < 0:
            raise ValueError("use the precomputed inverse generator images")
        acc = BurauMatrix.identity()
        base = self
        while exponent:
            if exponent % 2:
                acc = acc * base
            base = base * base
            exponent //= 2
        return acc

    def trace(self) -> LaurentPoly:
        return self.e11 + self.e22

    def determinant(self) -> LaurentPoly:
        return self.e11 * self.e22 - self.e12 * self.e21

    def characteristic_pair(self) -> tuple[LaurentPoly, LaurentPoly]:
        """(trace, determinant): the characteristic polynomial's coefficients."""
        return (self.trace(), self.determinant())


def _t(exp: int, coeff: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial("t", 2 * exp, coeff)


_ZERO = LaurentPoly.zero("t")
_ONE = LaurentPoly.one("t")

# Reduced Burau images: s1 -> [[-t, 1], [0, 1]], s2 -> [[1, 0], [t, -t]].
_B_S1 = BurauMatrix(_t(1, -1), _ONE, _ZERO, _ONE)
_B_S2 = BurauMatrix(_ONE, _ZERO, _t(1), _t(1, -1))
_B_S1_INV = BurauMatrix(_t(-1, -1), _t(-1), _ZERO, _ONE)
_B_S2_INV = BurauMatrix(_ONE, _ZERO, _ONE, _t(-1, -1))
_B_A3 = _B_S1_INV * _B_S2 * _B_S1
_B_A3_INV = _B_S1_INV * _B_S2_INV * _B_S1

_BURAU_GENERATORS = {
    (1, 1): _B_S1,
    (1, -1): _B_S1_INV,
    (2, 1): _B_S2,
    (2, -1): _B_S2_INV,
    (3, 1): _B_A3,
    (3, -1): _B_A3_INV,
}


def burau(word: Word) -> BurauMatrix:
    """Image under the reduced Burau representation (faithful on B3)."""
    result = BurauMatrix.identity()
    for subscript, exponent in word.syllables:
        sign = 1 if exponent > 0 else -1
        result = result * (_BURAU_GENERATORS[(subscript, sign)] ** abs(exponent))
    return result
