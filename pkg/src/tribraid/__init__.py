"""tribraid: exact decision procedures for links that are closed 3-braids.

Words over the band generators a1, a2, a3 of B3 are rewritten into the
unique normal form delta^q * (positive ascending tail); cycling through the
summit set yields a complete conjugacy invariant; on top of that sit flype
detection, braid-index recognition, the link classification trichotomy,
invertibility and transversal-simplicity tests, and an exact Jones
polynomial engine used to fingerprint the enumeration of all
non-transversally-simple examples through braid crossing number 12.
"""

from .classify import (
    BraidIndexLow,
    BraidIndexResult,
    DegenerateTripleError,
    FlypePair,
    FlypeTriple,
    InvertibilityReport,
    LinkClassification,
    TransversalPair,
    UniqueClass,
    UnsupportedSignPattern,
    admits_positive_variant,
    bennequin,
    braid_index,
    classify,
    detect_flype,
    flype_partner,
    flype_word,
    is_invertible,
    is_nondegenerate,
    table2_symbol,
    transversal_pair,
)
from .conjugacy import (
    SummitBoundExceeded,
    SymbolPowerMismatch,
    XuSymbol,
    are_conjugate,
    summit_orbit,
    summit_set_full,
    symbol_compare,
    tail_move,
    xu_invariant,
)
from .jones import TLElement, bracket_closure, jones_closure, tl_image, torus_jones
from .laurent import LaurentPoly
from .normalform import NormalForm, normalize, to_word, words_equal
from .tables import (
    Table3Row,
    VerificationReport,
    enumerate_table3,
    verify_table1,
    verify_table2,
)
from .words import (
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
)

__version__ = "0.1.0"
