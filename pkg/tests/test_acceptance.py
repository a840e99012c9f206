"""Acceptance suite: one test per criterion, one printed PASS/FAIL line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines.  All comparisons are exact; the full suite is meant to stay well
under a minute.

Criterion 4 is implemented exactly as specified and fails honestly: the
printed low-braid-index table carries two further errata beyond the one the
criterion anticipates, and the anticipated row's corrected value differs
from the criterion's prediction as well.  See the repository notes and
``tribraid verify-tables`` for the witnesses; weakening the check to make
it pass would defeat its purpose.
"""

from __future__ import annotations

import random

from hypothesis import given, settings

from conftest import equal_word_pairs, letter_words, words
from tribraid.classify import (
    FlypeTriple,
    detect_flype,
    flype_partner,
    flype_word,
    is_invertible,
    is_nondegenerate,
    table2_symbol,
)
from tribraid.conjugacy import (
    XuSymbol,
    are_conjugate,
    least_rotation,
    summit_orbit,
    summit_set_full,
    xu_invariant,
)
from tribraid.jones import jones_closure, torus_jones
from tribraid.laurent import LaurentPoly
from tribraid.normalform import NormalForm, normalize
from tribraid.tables import enumerate_table3, printed_table1_symbol, verify_table1
from tribraid.words import (
    Syllable,
    Word,
    burau,
    exponent_sum,
    invert,
    parse_word,
    reverse,
)

settings.register_profile(
    "acceptance", max_examples=1000, derandomize=True, deadline=None
)
settings.load_profile("acceptance")


def report(number: int, passed: bool, detail: str) -> None:
    status = "PASS" if passed else "FAIL"
    print(f"CRITERION {number:2d}: {status} - {detail}")
    assert passed, f"criterion {number}: {detail}"


def nf(power, *tail):
    return NormalForm(power, tuple(Syllable(s, e) for s, e in tail))


def test_criterion_01_normal_form_golden_vector():
    form = normalize(parse_word("a1^-2 a2^-3 a1^5 a2"))
    expected = nf(-4, (2, 2), (3, 1), (1, 5), (2, 1))
    report(
        1,
        form == expected,
        f"normalize(a1^-2 a2^-3 a1^5 a2) = {form.text()}",
    )


def test_criterion_02_conjugacy_golden_vector():
    word = parse_word("a1^-1 a2^-1 a1^-1 a2^-1 a1^-1 a2^-1 a1^4 a2 a3^3 a1^2 a2")
    symbol = xu_invariant(word)
    intermediate = nf(-1, (1, 1), (2, 3), (3, 1), (1, 2))
    orbit_hits = intermediate in summit_orbit(word)
    ok = symbol == XuSymbol(-1, (1, 2, 1, 3)) and orbit_hits
    report(2, ok, f"symbol {symbol}, orbit contains d^-1 a1 a2^3 a3 a1^2: {orbit_hits}")


def test_criterion_03_conjugate_triple():
    w1 = parse_word("s1^-5 s2^3 s1^-3 s2^-1")
    w2 = parse_word("s1^2 s2^-2 s1^-5 s2^-1")
    w3 = parse_word("s1^-3 s2^-4 s1^2 s2^-1")
    ok = are_conjugate(w1, w2) and are_conjugate(w2, w3) and are_conjugate(w1, w3)
    report(3, ok, f"pairwise conjugate, shared symbol {xu_invariant(w1)}")


def test_criterion_04_table1_reproduction():
    """Exactly as specified; fails honestly on the extra printed errata.

    The criterion expects every printed row to confirm except a1^k a2 for
    k >= 3, with computed replacement (1; (k-1)).  Recomputation finds
    instead: that row's true value is (2; (k-3)) (d a1^(k-1) is conjugate
    to d^2 a2^(k-3) by a3, which the criterion's predicted value misses),
    and two further printed families fail although they conserve:
    a1^k a2^-1 equals d^-1 a3^(k+1) exactly for k >= 2, and for k <= -3
    the printed power sits below the summit since d^3 is central.  Every
    claim is certified by explicit conjugations and the Burau oracle; see
    the decisions ledger.
    """
    report_rows = verify_table1(8)
    mismatched = {c.label for c in report_rows.mismatches()}
    expected_mismatches = {f"a1^{k} a2" for k in range(3, 9)}
    replacement_ok = all(
        xu_invariant(Word.from_pairs([(1, k), (2, 1)])) == XuSymbol(1, (k - 1,))
        for k in range(3, 9)
    )
    conservation_ok = all(
        2 * printed_table1_symbol(k, 1).power
        + sum(printed_table1_symbol(k, 1).exponents)
        != k + 1
        for k in range(3, 9)
    )
    ok = mismatched == expected_mismatches and replacement_ok and conservation_ok
    report(
        4,
        ok,
        "expected only the a1^k a2 (k>=3) erratum with replacement (1;(k-1)); "
        f"recomputation flags {sorted(mismatched)} and gives "
        f"{xu_invariant(Word.from_pairs([(1, 3), (2, 1)]))} for k=3 "
        "(see decisions ledger: two additional printed errata, certified)",
    )


def test_criterion_05_table2_oracle_equivalence():
    checked = 0
    for eps in (1, -1):
        for su, sv, sw in ((1, 1, 1), (-1, 1, 1), (1, -1, 1), (1, 1, -1)):
            for p in range(1, 6):
                for q in range(1, 6):
                    for r in range(1, 6):
                        triple = FlypeTriple(su * p, sv * q, sw * r, eps)
                        if not is_nondegenerate(triple):
                            continue
                        checked += 1
                        symbol = table2_symbol(triple)
                        assert symbol == xu_invariant(flype_word(triple)), triple
                        partner = flype_partner(triple)
                        assert symbol != xu_invariant(flype_word(partner)), triple
    report(5, checked > 0, f"{checked} nondegenerate triples, zero exceptions")


PRINTED_TABLE3 = [
    (-1, 8, (3, -2, 2)), (1, 10, (5, -2, 2)), (1, 10, (3, -2, 4)),
    (-3, 10, (3, -4, 2)), (-9, 10, (-5, -2, 2)), (-7, 10, (3, -2, -4)),
    (7, 12, (5, 3, 3)), (3, 12, (7, -2, 2)), (3, 12, (5, -2, 4)),
    (3, 12, (3, -2, 6)), (-5, 12, (3, -6, 2)), (-1, 12, (5, -4, 2)),
    (-1, 12, (3, -4, 4)), (1, 12, (5, -3, 3)), (-11, 12, (-7, -2, 2)),
    (-9, 12, (-5, -3, 3)), (-7, 12, (-3, -4, 4)), (-5, 12, (-3, -3, 5)),
    (-15, 12, (-3, -4, -4)), (-9, 12, (-3, -5, 3)),
]


def _pair(u, v, w):
    return frozenset(((u, v, w), (w, v, u)))


def test_criterion_06_table3_reproduction():
    rows = enumerate_table3(12)
    got = {
        _pair(r.triple.u, r.triple.v, r.triple.w): (r.bennequin, r.c_b) for r in rows
    }
    expected = {_pair(*t): (b, c) for b, c, t in PRINTED_TABLE3}
    named = {
        _pair(3, -2, 2): (-1, 8),
        _pair(-5, -2, 2): (-9, 10),
        _pair(-3, -4, -4): (-15, 12),
    }
    ok = (
        len(rows) == 20
        and got == expected
        and all(got[k] == v for k, v in named.items())
    )
    report(6, ok, f"{len(rows)} rows; triple pairs, beta and c_b all match the catalogue")


def test_criterion_07_jones_cross_validation():
    trefoil = LaurentPoly.from_half_units("t", {8: -1, 6: 1, 2: 1})
    ok = torus_jones(2, 3) == trefoil
    for s in range(2, 10):
        ok = ok and torus_jones(2, s) == jones_closure(Word.from_pairs([(1, s), (2, 1)]))
    for s in range(2, 7):
        delta_power = Word.from_pairs([(2, 1), (1, 1)] * s)
        ok = ok and torus_jones(3, s) == jones_closure(delta_power)
    report(7, ok, "closed form equals the trace engine for (2,2..9) and (3,2..6)")


def test_criterion_08_flype_pair_jones_equality():
    rows = enumerate_table3(12)
    ok = all(
        jones_closure(flype_word(r.triple)) == jones_closure(flype_word(r.partner))
        for r in rows
    )
    report(8, ok, f"partner Jones polynomials coincide on all {len(rows)} rows")


class TestCriterion09PropertySuites:
    @given(words(), letter_words())
    def test_conjugation_invariance(self, word, conjugator):
        conjugate = invert(conjugator) * word * conjugator
        assert xu_invariant(word) == xu_invariant(conjugate)

    @given(equal_word_pairs(), words(max_syllables=4))
    def test_burau_oracle_agreement(self, pair, other):
        u, v = pair
        assert burau(u) == burau(v)
        assert normalize(u) == normalize(v)
        assert (normalize(u) == normalize(other)) == (burau(u) == burau(other))

    @given(words())
    def test_conservation(self, word):
        total = exponent_sum(word)
        form = normalize(word)
        symbol = xu_invariant(word)
        assert form.exponent_sum() == total
        assert 2 * symbol.power + sum(symbol.exponents) == total

    @given(words())
    def test_involutions(self, word):
        assert invert(invert(word)) == word
        assert burau(reverse(reverse(word))) == burau(word)

    @given(letter_words(max_letters=6))
    def test_summit_orbit_against_full_summit_set(self, word):
        full = summit_set_full(word, max_letters=6)
        assert summit_orbit(word) <= full
        symbol = xu_invariant(word)
        assert max(f.power for f in full) == symbol.power
        best = min(
            (len(f.tail), least_rotation(tuple(s.exponent for s in f.tail)))
            for f in full
        )
        assert best == (len(symbol.exponents), symbol.exponents)

    def test_report_line(self):
        report(9, True, "five property suites at 1000 derandomized cases each")


def test_criterion_10_invertibility_behavior():
    rows = enumerate_table3(12)
    flype_ok = True
    for row in rows:
        for triple in (row.triple, row.partner):
            verdict = is_invertible(flype_word(triple))
            flype_ok = flype_ok and verdict.invertible and (
                verdict.reason == "flype_admissible"
            )

    rng = random.Random(20260810)
    alphabet = (1, -1, 2, -2, 3, -3)
    non_invertible: dict[XuSymbol, Word] = {}
    seen: set[XuSymbol] = set()
    for _ in range(60000):
        word = Word.from_letters(rng.choice(alphabet) for _ in range(8))
        symbol = xu_invariant(word)
        if symbol in seen:
            continue
        seen.add(symbol)
        verdict = is_invertible(word)
        if verdict.applicable and verdict.invertible is False:
            non_invertible[symbol] = word
        if len(non_invertible) >= 10:
            break
    certified = all(
        xu_invariant(w) != xu_invariant(reverse(w)) and detect_flype(w) == []
        for w in non_invertible.values()
    )
    ok = flype_ok and len(non_invertible) >= 10 and certified
    report(
        10,
        ok,
        f"catalogue words all flype-invertible; {len(non_invertible)} distinct "
        "non-invertible classes found and certified",
    )
