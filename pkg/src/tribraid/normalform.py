"""Xu's normal form: every 3-braid word equals a unique delta^q * tail.

Two consequences of the band relations drive the rewriting:

    (i)  a_i^-k = delta^-k * a_{i-k+2} a_{i-k+3} ... a_i a_{i+1}
         (k ascending letters ending at a_{i+1}),
    (ii) a_j delta^m = delta^m a_{j+m}.

Rule (i) trades every inverse letter for a power of delta^-1, rule (ii)
collects all delta powers on the left, and finally every descent
a_{i+1} a_i inside the positive part is itself a delta and gets pushed
left as well.  The result delta^q * (positive tail) with cyclically
ascending tail subscripts is unique, which solves the word problem.
"""

from __future__ import annotations

import dataclasses

from .words import Syllable, Word, burau, wrap_subscript


@dataclasses.dataclass(frozen=True)
class NormalForm:
    """delta^power times a positive tail with cyclically ascending subscripts."""

    power: int
    tail: tuple[Syllable, ...] = ()

    def __post_init__(self) -> None:
        previous = None
        for syllable in self.tail:
            if syllable.exponent < 1:
                raise ValueError("tail exponents must be >= 1")
            if syllable.subscript not in (1, 2, 3):
                raise ValueError(f"bad subscript {syllable.subscript}")
            if previous is not None and syllable.subscript != wrap_subscript(previous + 1):
                raise ValueError("tail subscripts must ascend cyclically")
            previous = syllable.subscript

    def exponent_sum(self) -> int:
        return 2 * self.power + sum(s.exponent for s in self.tail)

    def tail_letters(self) -> list[int]:
        letters: list[int] = []
        for subscript, exponent in self.tail:
            letters.extend([subscript] * exponent)
        return letters

    def text(self) -> str:
        tokens = [f"d^{self.power}"]
        for subscript, exponent in self.tail:
            suffix = "" if exponent == 1 else f"^{exponent}"
            tokens.append(f"a{subscript}{suffix}")
        return " ".join(tokens)

    def json_dict(self) -> dict:
        return {"power": self.power, "tail": [[s.subscript, s.exponent] for s in self.tail]}


def group_letters(letters: list[int]) -> tuple[Syllable, ...]:
    """Group a positive letter sequence into maximal syllables."""
    syllables: list[Syllable] = []
    for letter in letters:
        if syllables and syllables[-1].subscript == letter:
            syllables[-1] = Syllable(letter, syllables[-1].exponent + 1)
        else:
            syllables.append(Syllable(letter, 1))
    return tuple(syllables)


def extract_deltas(letters: list[int]) -> tuple[int, list[int]]:
    """Remove every descent a_{i+1} a_i from a positive letter sequence.

    Each descent is a copy of delta; pushing it to the left shifts the
    subscripts of everything before it by +1 (rule (ii)).  Returns the
    number of deltas extracted and the descent-free remainder.  Each
    extraction shortens the sequence by two letters, so this terminates.
    """
    letters = list(letters)
    count = 0
    i = 0
    while i < len(letters) - 1:
        if letters[i] == wrap_subscript(letters[i + 1] + 1):
            count += 1
            letters = [wrap_subscript(x + 1) for x in letters[:i]] + letters[i + 2:]
            i = max(i - 1, 0)
        else:
            i += 1
    return count, letters


def normalize(word: Word) -> NormalForm:
    """Rewrite any word into its unique normal form."""
    power = 0
    letters: list[int] = []
    for subscript, exponent in word.syllables:
        if exponent > 0:
            letters.extend([subscript] * exponent)
        else:
            k = -exponent
            # Rule (i) introduces delta^-k on the right of the prefix built
            # so far; rule (ii) moves it left, shifting the prefix by -k.
            letters = [wrap_subscript(x - k) for x in letters]
            power -= k
            start = subscript - k + 2
            letters.extend(wrap_subscript(start + j) for j in range(k))
    extracted, letters = extract_deltas(letters)
    return NormalForm(power + extracted, group_letters(letters))


def to_word(form: NormalForm) -> Word:
    """Expand delta^power * tail back into a Word (delta = a2 a1)."""
    pairs: list[tuple[int, int]] = []
    if form.power >= 0:
        pairs.extend([(2, 1), (1, 1)] * form.power)
    else:
        pairs.extend([(1, -1), (2, -1)] * (-form.power))
    pairs.extend(form.tail)
    return Word.from_pairs(pairs)


def words_equal(u: Word, v: Word) -> bool:
    """Decide the word problem: equal iff the normal forms coincide."""
    return normalize(u) == normalize(v)


def burau_equal(u: Word, v: Word) -> bool:
    """Independent equality oracle through the faithful Burau representation."""
    return burau(u) == burau(v)
