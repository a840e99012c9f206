"""Conjugacy in B3: cycling, summit sets, and the canonical class symbol.

The summit set SS(w) consists of the conjugates of w whose normal forms
attain the maximal delta power of the class.  An element delta^m a_{i_1}^{l_1}
... a_{i_t}^{l_t} of the summit set carries the symbol (m; (l_1, ..., l_t)),
and the canonical symbol of the class is the minimal symbol over the whole
summit set: fewest syllables first, then lexicographically smallest, taken
over all cyclic rotations of the exponent sequence.  Two 3-braids are
conjugate iff their canonical symbols agree, which is Xu's solution to the
conjugacy problem in the band presentation.

Cycling here conjugates by one canonical factor at a time: for
w = delta^q a_r ... the factor delta^q a_r delta^-q = a_{r-q} is removed
from the front and appended at the back.  Single letters are exactly the
nontrivial canonical factors of a descent-free tail in the dual Garside
structure, and iterated cycling by canonical factors provably attains the
maximal power.  Cycling whole syllables (several equal letters at once)
can overshoot the normal-form cascade that raises the power and stall
below the summit: delta a1^2 cycles to delta a3^2 at power 1 forever,
while letter cycling reaches delta a1 a3 = delta^2.  The whole-syllable
move is still provided as :func:`tail_move` since several worked examples
use it; only the orbit machinery insists on letter granularity.
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Iterable

from .normalform import NormalForm, extract_deltas, group_letters, normalize, to_word
from .words import Syllable, Word, invert, wrap_subscript


class SymbolPowerMismatch(ValueError):
    """symbol_compare is only defined within a single summit set."""


class SummitBoundExceeded(ValueError):
    """summit_set_full refused a word longer than its configured bound."""


@dataclasses.dataclass(frozen=True)
class XuSymbol:
    """(power; exponent sequence) - the conjugacy class invariant."""

    power: int
    exponents: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(e < 1 for e in self.exponents):
            raise ValueError("symbol exponents must be >= 1")

    def __str__(self) -> str:
        inner = ",".join(str(e) for e in self.exponents)
        return f"({self.power}; ({inner}))"

    def json_dict(self) -> dict:
        return {"power": self.power, "exponents": list(self.exponents)}


def symbol_of(form: NormalForm) -> XuSymbol:
    return XuSymbol(form.power, tuple(s.exponent for s in form.tail))


def least_rotation(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically smallest cyclic rotation (Booth's algorithm)."""
    n = len(seq)
    if n <= 1:
        return seq
    doubled = seq + seq
    failure = [-1] * (2 * n)
    best = 0
    for i in range(1, 2 * n):
        c = doubled[i]
        j = failure[i - best - 1]
        while j != -1 and c != doubled[best + j + 1]:
            if c < doubled[best + j + 1]:
                best = i - j - 1
            j = failure[j]
        if c != doubled[best + j + 1]:
            if c < doubled[best]:
                best = i
            failure[i - best] = -1
        else:
            failure[i - best] = j + 1
    return doubled[best:best + n]


def symbol_compare(x: XuSymbol, y: XuSymbol) -> int:
    """-1, 0 or +1: fewer syllables first, then lexicographic."""
    if x.power != y.power:
        raise SymbolPowerMismatch(f"powers differ: {x.power} vs {y.power}")
    kx = (len(x.exponents), x.exponents)
    ky = (len(y.exponents), y.exponents)
    return (kx > ky) - (kx < ky)


def tail_move(form: NormalForm) -> NormalForm:
    """Conjugate by delta^q a_{t1}^{s1} delta^-q: cycle the whole first syllable.

    The first tail syllable is removed and a_{t1 - q}^{s1} is appended, then
    the result is renormalized (a descent at the seam is a delta and pushing
    it left can cascade).  Identity on an empty tail.
    """
    if not form.tail:
        return form
    first = form.tail[0]
    letters = []
    for subscript, exponent in form.tail[1:]:
        letters.extend([subscript] * exponent)
    letters.extend([wrap_subscript(first.subscript - form.power)] * first.exponent)
    extracted, letters = extract_deltas(letters)
    return NormalForm(form.power + extracted, group_letters(letters))


def cycle_once(form: NormalForm) -> NormalForm:
    """Cycle by a single canonical factor: one letter of the first syllable."""
    if not form.tail:
        return form
    letters = form.tail_letters()
    first = letters.pop(0)
    letters.append(wrap_subscript(first - form.power))
    extracted, letters = extract_deltas(letters)
    return NormalForm(form.power + extracted, group_letters(letters))


def summit_orbit(word: Word) -> frozenset[NormalForm]:
    """Iterate cycling with cycle detection; keep the maximal-power states.

    The power never decreases along the orbit and is bounded above by half
    the exponent sum, and at a fixed power only finitely many normal forms
    share an exponent sum, so the orbit always closes up.  The returned
    maximal-power states lie in the summit set.
    """
    form = normalize(word)
    seen = {form}
    while True:
        form = cycle_once(form)
        if form in seen:
            break
        seen.add(form)
    top = max(f.power for f in seen)
    return frozenset(f for f in seen if f.power == top)


@functools.lru_cache(maxsize=1 << 16)
def xu_invariant(word: Word) -> XuSymbol:
    """The canonical conjugacy-class symbol of the closed word.

    Minimal under symbol_compare over all summit states visited by the
    cycling orbit and all cyclic rotations of their exponent sequences.
    Complete: xu_invariant(u) == xu_invariant(v) iff u and v are conjugate.
    """
    orbit = summit_orbit(word)
    power = next(iter(orbit)).power
    best: tuple[int, tuple[int, ...]] | None = None
    for form in orbit:
        exponents = least_rotation(tuple(s.exponent for s in form.tail))
        key = (len(exponents), exponents)
        if best is None or key < best:
            best = key
    assert best is not None
    return XuSymbol(power, best[1])


def are_conjugate(u: Word, v: Word) -> bool:
    return xu_invariant(u) == xu_invariant(v)


_SIMPLE_CONJUGATORS = (
    Word.from_pairs([(1, 1)]),
    Word.from_pairs([(2, 1)]),
    Word.from_pairs([(3, 1)]),
    Word.from_pairs([(2, 1), (1, 1)]),  # delta
)


def summit_set_full(word: Word, max_letters: int = 10) -> frozenset[NormalForm]:
    """The full summit set, by breadth-first search (verification oracle).

    Starting from a maximal-power state of the cycling orbit, close under
    conjugation by the simple elements a1, a2, a3, delta, keeping the
    states whose power equals the maximum.  If a conjugation ever exceeds
    the current maximum the search restarts there (it should not, once the
    cycling orbit has done its job, but the restart keeps the oracle
    honest).  Exponential in word length, hence the bound.
    """
    if word.letter_length() > max_letters:
        raise SummitBoundExceeded(
            f"word has {word.letter_length()} letters, bound is {max_letters}"
        )
    start = min(summit_orbit(word), key=lambda f: (f.tail, f.power))
    while True:
        seen = {start}
        queue = [start]
        restarted = False
        while queue:
            form = queue.pop()
            form_word = to_word(form)
            for conjugator in _SIMPLE_CONJUGATORS:
                conjugate = normalize(invert(conjugator) * form_word * conjugator)
                if conjugate.power > start.power:
                    start = conjugate
                    restarted = True
                    break
                if conjugate.power == start.power and conjugate not in seen:
                    seen.add(conjugate)
                    queue.append(conjugate)
            if restarted:
                break
        if not restarted:
            return frozenset(seen)
