"""Decision procedures for closed 3-braids.

A braid in the flype position s1^u s2^v s1^w s2^e (e = +-1) and its partner
s1^w s2^v s1^u s2^e close to the same link.  The flype is non-degenerate
when the two braids lie in distinct conjugacy classes, which happens iff

    |v| >= 2,  u, v+e, w pairwise distinct,  u, w not in {0, e, 2e};

a negative flype-admissible class also contains a positive flype-admissible
braid iff u = 1 or w = 1 or v = 2 (literal signed values: Table III style
examples with v = -2 must survive this test).

The canonical symbols of all non-degenerate flype-admissible classes follow
eight closed-form rows, one per sign pattern of (u, v, w) with at most one
negative entry; the remaining eight sign patterns are recognized through
the inverse word, since a braid admits a non-degenerate flype iff its own
symbol or its inverse's matches one of the eight rows.

On top of flype recognition this module decides braid index (a closed
3-braid has braid index < 3 iff it is conjugate to s1^k s2^+-1, and the
exponent sum pins k down to two candidates), link classification,
invertibility, and transversal non-simplicity.
"""

from __future__ import annotations

import dataclasses
from typing import Callable, Iterable, Optional, Union

from .conjugacy import XuSymbol, are_conjugate, least_rotation, xu_invariant
from .words import Word, component_count, exponent_sum, invert, reverse


class DegenerateTripleError(ValueError):
    """table2_symbol only covers non-degenerate flype triples."""


class UnsupportedSignPattern(ValueError):
    """The sign pattern has no direct row; query the inverse word instead."""


@dataclasses.dataclass(frozen=True)
class FlypeTriple:
    """Parameters (u, v, w, epsilon) of the flype form s1^u s2^v s1^w s2^eps."""

    u: int
    v: int
    w: int
    epsilon: int

    def __post_init__(self) -> None:
        if 0 in (self.u, self.v, self.w):
            raise ValueError("flype parameters u, v, w must be nonzero")
        if self.epsilon not in (1, -1):
            raise ValueError("epsilon must be +1 or -1")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.u, self.v, self.w, self.epsilon)

    def json_dict(self) -> dict:
        return {"u": self.u, "v": self.v, "w": self.w, "epsilon": self.epsilon}


def flype_word(triple: FlypeTriple) -> Word:
    return Word.from_pairs(
        [(1, triple.u), (2, triple.v), (1, triple.w), (2, triple.epsilon)]
    )


def flype_partner(triple: FlypeTriple) -> FlypeTriple:
    return FlypeTriple(triple.w, triple.v, triple.u, triple.epsilon)


def inverse_triple(triple: FlypeTriple) -> FlypeTriple:
    """The flype form of the inverse braid, up to conjugacy."""
    return FlypeTriple(-triple.w, -triple.v, -triple.u, -triple.epsilon)


def is_nondegenerate(triple: FlypeTriple) -> bool:
    u, v, w, e = triple.as_tuple()
    if abs(v) < 2:
        return False
    if len({u, v + e, w}) < 3:
        return False
    excluded = {0, e, 2 * e}
    return u not in excluded and w not in excluded


def admits_positive_variant(triple: FlypeTriple) -> bool:
    """Whether a negative flype-admissible class also admits a positive flype."""
    if triple.epsilon != -1:
        raise ValueError("positive-variant test applies to epsilon = -1 only")
    return triple.u == 1 or triple.w == 1 or triple.v == 2


@dataclasses.dataclass(frozen=True)
class _Row:
    """One symbol row: a sign pattern and the closed form of its symbol."""

    signs: tuple[int, int, int]
    epsilon: int
    make: Callable[[int, int, int], tuple[int, tuple[int, ...]]]
    unify: Callable[[int, tuple[int, ...]], Optional[tuple[int, int, int]]]


def _ones_tail(rotation: tuple[int, ...], count: int) -> bool:
    return all(x == 1 for x in rotation[len(rotation) - count:])


_ROWS: tuple[_Row, ...] = (
    # epsilon = +1
    _Row((1, 1, 1), 1,
         lambda p, q, r: (3, (p - 2, q - 1, r - 2)),
         lambda m, rot: (rot[0] + 2, rot[1] + 1, rot[2] + 2)
         if m == 3 and len(rot) == 3 else None),
    _Row((-1, 1, 1), 1,
         lambda p, q, r: (1 - p, (q, r - 1) + (1,) * p),
         lambda m, rot: (1 - m, rot[0], rot[1] + 1)
         if len(rot) >= 3 and m == 1 - (len(rot) - 2) and _ones_tail(rot, len(rot) - 2)
         else None),
    _Row((1, -1, 1), 1,
         lambda p, q, r: (2 - q, (p - 1,) + (1,) * (q - 1) + (r - 1,)),
         lambda m, rot: (rot[0] + 1, 2 - m, rot[-1] + 1)
         if 2 - m >= 1 and len(rot) == (2 - m) + 1
         and all(x == 1 for x in rot[1:-1]) else None),
    _Row((1, 1, -1), 1,
         lambda p, q, r: (1 - r, (p - 1, q) + (1,) * r),
         lambda m, rot: (rot[0] + 1, rot[1], 1 - m)
         if 1 - m >= 1 and len(rot) == (1 - m) + 2 and _ones_tail(rot, len(rot) - 2)
         else None),
    # epsilon = -1
    _Row((1, 1, 1), -1,
         lambda p, q, r: (0, (p, q - 1, r)),
         lambda m, rot: (rot[0], rot[1] + 1, rot[2])
         if m == 0 and len(rot) == 3 else None),
    _Row((-1, 1, 1), -1,
         lambda p, q, r: (-p, (q, r + 1) + (1,) * (p - 2)),
         lambda m, rot: (-m, rot[0], rot[1] - 1)
         if -m >= 2 and len(rot) == -m and _ones_tail(rot, len(rot) - 2) else None),
    _Row((1, -1, 1), -1,
         lambda p, q, r: (-q - 1, (r + 1, p + 1) + (1,) * (q - 1)),
         lambda m, rot: (rot[1] - 1, -m - 1, rot[0] - 1)
         if -m - 1 >= 1 and len(rot) == -m and _ones_tail(rot, len(rot) - 2) else None),
    _Row((1, 1, -1), -1,
         lambda p, q, r: (-r, (p + 1, q) + (1,) * (r - 2)),
         lambda m, rot: (rot[0] - 1, rot[1], -m)
         if -m >= 2 and len(rot) == -m and _ones_tail(rot, len(rot) - 2) else None),
)


def _sign(x: int) -> int:
    return 1 if x > 0 else -1


def _row_for(triple: FlypeTriple) -> Optional[_Row]:
    pattern = (_sign(triple.u), _sign(triple.v), _sign(triple.w))
    for row in _ROWS:
        if row.signs == pattern and row.epsilon == triple.epsilon:
            return row
    return None


def table2_symbol(triple: FlypeTriple) -> XuSymbol:
    """Closed-form canonical symbol of a non-degenerate flype triple.

    Only the eight directly tabulated sign patterns are evaluated; for the
    others, compute the symbol of the inverse word.  Degenerate triples are
    refused rather than extrapolated.
    """
    if not is_nondegenerate(triple):
        raise DegenerateTripleError(f"degenerate flype triple {triple.as_tuple()}")
    row = _row_for(triple)
    if row is None:
        raise UnsupportedSignPattern(
            f"sign pattern of {triple.as_tuple()} is reached via the inverse word"
        )
    power, exponents = row.make(abs(triple.u), abs(triple.v), abs(triple.w))
    if any(e < 1 for e in exponents):
        raise AssertionError(f"row produced a non-positive entry for {triple}")
    return XuSymbol(power, least_rotation(exponents))


def _rotations(seq: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    if not seq:
        yield seq
        return
    for i in range(len(seq)):
        yield seq[i:] + seq[:i]


def _match_rows(symbol: XuSymbol) -> tuple[set[FlypeTriple], set[FlypeTriple]]:
    """All triples whose row symbol unifies with the given canonical symbol.

    Returns (verified non-degenerate matches, degenerate candidates).  The
    non-degenerate matches are confirmed by evaluating the row forwards.
    """
    nondegenerate: set[FlypeTriple] = set()
    degenerate: set[FlypeTriple] = set()
    for row in _ROWS:
        for rotation in _rotations(symbol.exponents):
            params = row.unify(symbol.power, rotation)
            if params is None:
                continue
            p, q, r = params
            if min(p, q, r) < 1:
                continue
            su, sv, sw = row.signs
            triple = FlypeTriple(su * p, sv * q, sw * r, row.epsilon)
            if not is_nondegenerate(triple):
                degenerate.add(triple)
            elif table2_symbol(triple) == symbol:
                nondegenerate.add(triple)
    return nondegenerate, degenerate


def detect_flype(word: Word, include_degenerate: bool = False):
    """All non-degenerate flype triples whose closed form is conjugate to word.

    Matches the class symbol and the inverse word's symbol against the eight
    rows (triples found through the inverse are inverted back).  An empty
    list means the class admits no non-degenerate flype.  With
    ``include_degenerate`` a second list of degenerate raw matches is also
    returned as a diagnostic; theorems only ever consume the first list.
    """
    direct_nd, direct_dg = _match_rows(xu_invariant(word))
    inverse_nd, inverse_dg = _match_rows(xu_invariant(invert(word)))
    nondegenerate = sorted(
        direct_nd | {inverse_triple(t) for t in inverse_nd},
        key=FlypeTriple.as_tuple,
    )
    if not include_degenerate:
        return nondegenerate
    degenerate = sorted(
        direct_dg | {inverse_triple(t) for t in inverse_dg},
        key=FlypeTriple.as_tuple,
    )
    return nondegenerate, degenerate


@dataclasses.dataclass(frozen=True)
class BraidIndexResult:
    index: int
    reduced_k: Optional[int] = None
    reduced_sign: Optional[int] = None

    def json_dict(self) -> dict:
        return {
            "index": self.index,
            "reduced_k": self.reduced_k,
            "reduced_sign": self.reduced_sign,
        }


def braid_index(word: Word) -> BraidIndexResult:
    """Braid index of the closure: 3 unless conjugate to s1^k s2^+-1.

    The exponent sum s leaves only two candidates, k = s - 1 with s2 and
    k = s + 1 with s2^-1.  A match closes to the (2, k) torus link family:
    the unknot for |k| = 1 (index 1), otherwise an index-2 link.
    """
    s = exponent_sum(word)
    for k, sign in ((s - 1, 1), (s + 1, -1)):
        candidate = Word.from_pairs([(1, k), (2, sign)])
        if are_conjugate(word, candidate):
            return BraidIndexResult(1 if abs(k) == 1 else 2, k, sign)
    return BraidIndexResult(3)


@dataclasses.dataclass(frozen=True)
class BraidIndexLow:
    """Classification case: the closure has braid index 1 or 2."""

    index: int
    reduced_k: int
    reduced_sign: int

    def json_dict(self) -> dict:
        return {
            "kind": "braid_index_low",
            "index": self.index,
            "reduced_form": {"k": self.reduced_k, "sign": self.reduced_sign},
        }


@dataclasses.dataclass(frozen=True)
class UniqueClass:
    """Classification case: index 3 and a single conjugacy class."""

    symbol: XuSymbol

    def json_dict(self) -> dict:
        return {"kind": "unique_class", "symbol": self.symbol.json_dict()}


@dataclasses.dataclass(frozen=True)
class FlypePair:
    """Classification case: index 3 with exactly two classes, swapped by a flype."""

    triple: FlypeTriple
    own_symbol: XuSymbol
    partner_symbol: XuSymbol

    def json_dict(self) -> dict:
        return {
            "kind": "flype_pair",
            "triple": self.triple.json_dict(),
            "own_symbol": self.own_symbol.json_dict(),
            "partner_symbol": self.partner_symbol.json_dict(),
        }


LinkClassification = Union[BraidIndexLow, UniqueClass, FlypePair]


def classify(word: Word) -> LinkClassification:
    """Sort the closed braid into the three-way classification."""
    index = braid_index(word)
    if index.index < 3:
        assert index.reduced_k is not None and index.reduced_sign is not None
        return BraidIndexLow(index.index, index.reduced_k, index.reduced_sign)
    triples = detect_flype(word)
    if triples:
        triple = triples[0]
        own = xu_invariant(word)
        partner_symbol = xu_invariant(flype_word(flype_partner(triple)))
        if own == partner_symbol:
            raise AssertionError(
                f"non-degenerate flype {triple.as_tuple()} with equal partner symbols"
            )
        return FlypePair(triple, own, partner_symbol)
    return UniqueClass(xu_invariant(word))


SYMBOLS_EQUAL = "symbols_equal"
FLYPE_ADMISSIBLE = "flype_admissible"
NEITHER = "neither"


@dataclasses.dataclass(frozen=True)
class InvertibilityReport:
    applicable: bool
    invertible: Optional[bool] = None
    reason: Optional[str] = None

    def json_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "invertible": self.invertible,
            "reason": self.reason,
        }


def is_invertible(word: Word) -> InvertibilityReport:
    """Invertibility of an index-3 closed braid.

    The closure is invertible iff the word is conjugate to its reversal or
    its class admits a non-degenerate flype; inapplicable below index 3.
    """
    if braid_index(word).index < 3:
        return InvertibilityReport(applicable=False)
    if are_conjugate(word, reverse(word)):
        return InvertibilityReport(True, True, SYMBOLS_EQUAL)
    if detect_flype(word):
        return InvertibilityReport(True, True, FLYPE_ADMISSIBLE)
    return InvertibilityReport(True, False, NEITHER)


@dataclasses.dataclass(frozen=True)
class TransversalPair:
    """A negative flype pair closing to two distinct transversal knot types."""

    triple: FlypeTriple
    partner: FlypeTriple
    bennequin: int
    c_b: int

    def __post_init__(self) -> None:
        u, v, w, _ = self.triple.as_tuple()
        if self.bennequin != u + v + w - 4:
            raise ValueError("bennequin must equal u + v + w - 4")
        if self.c_b != abs(u) + abs(v) + abs(w) + 1:
            raise ValueError("c_b must equal |u| + |v| + |w| + 1")
        if self.partner != flype_partner(self.triple):
            raise ValueError("partner must be (w, v, u, epsilon)")

    def json_dict(self) -> dict:
        return {
            "triple": self.triple.json_dict(),
            "partner": self.partner.json_dict(),
            "bennequin": self.bennequin,
            "c_b": self.c_b,
        }


def transversal_pair(triple: FlypeTriple) -> Optional[TransversalPair]:
    """The not-transversally-simple pair for a negative flype triple, if any.

    Present iff the flype is non-degenerate, the class admits no positive
    flype, and the closure is a knot.
    """
    if triple.epsilon != -1:
        raise ValueError("transversal pairs arise from negative flypes only")
    if not is_nondegenerate(triple):
        return None
    if admits_positive_variant(triple):
        return None
    if component_count(flype_word(triple)) != 1:
        return None
    u, v, w, _ = triple.as_tuple()
    return TransversalPair(
        triple,
        flype_partner(triple),
        bennequin=u + v + w - 4,
        c_b=abs(u) + abs(v) + abs(w) + 1,
    )


def bennequin(word: Word) -> int:
    """Self-linking number of the closure: writhe minus the strand count."""
    return exponent_sum(word) - 3
