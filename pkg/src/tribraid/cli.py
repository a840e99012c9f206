"""Command-line interface.

Subcommands mirror the library: normalize, symbol, conjugate, classify,
invertible, bennequin, jones, torus-jones, table3, verify-tables.  Words
are quoted in the a1/a2/a3 (or s1/s2) grammar, e.g. "a1^-2 a2^-3 a1^5 a2".
Exit codes: 0 success, 1 refused computation (precondition), 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .classify import bennequin, classify, is_invertible
from .conjugacy import are_conjugate, xu_invariant
from .jones import jones_closure, torus_jones
from .normalform import normalize
from .tables import (
    CSV_COLUMNS,
    enumerate_table3,
    table1_known_errata,
    verify_table1,
    verify_table2,
)
from .words import Word, WordSyntaxError, parse_word


def _cmd_normalize(args: argparse.Namespace) -> int:
    print(normalize(parse_word(args.word)).text())
    return 0


def _cmd_symbol(args: argparse.Namespace) -> int:
    print(xu_invariant(parse_word(args.word)))
    return 0


def _cmd_conjugate(args: argparse.Namespace) -> int:
    result = are_conjugate(parse_word(args.word1), parse_word(args.word2))
    print(f"conjugate: {'true' if result else 'false'}")
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    print(json.dumps(classify(parse_word(args.word)).json_dict()))
    return 0


def _cmd_invertible(args: argparse.Namespace) -> int:
    print(json.dumps(is_invertible(parse_word(args.word)).json_dict()))
    return 0


def _cmd_bennequin(args: argparse.Namespace) -> int:
    print(bennequin(parse_word(args.word)))
    return 0


def _cmd_jones(args: argparse.Namespace) -> int:
    print(jones_closure(parse_word(args.word)))
    return 0


def _cmd_torus_jones(args: argparse.Namespace) -> int:
    print(torus_jones(args.r, args.s))
    return 0


def _cmd_table3(args: argparse.Namespace) -> int:
    rows = enumerate_table3(args.max_cb)
    if args.format == "json":
        print(json.dumps([row.json_dict() for row in rows]))
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow(row.csv_fields())
        sys.stdout.write(buffer.getvalue())
    return 0


def _cmd_verify_tables(args: argparse.Namespace) -> int:
    report1 = verify_table1(args.range)
    report2 = verify_table2()
    for line in report1.lines():
        print(line)
    for line in report2.lines():
        print(line)
    mismatched = {check.label for check in report1.mismatches()}
    expected = table1_known_errata(args.range)
    ok = mismatched == expected and not report2.mismatches()
    print("verification: " + ("ok (only the documented errata mismatch)" if ok else "FAILED"))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tribraid",
        description="Decision procedures for links that are closed 3-braids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="normal form of a word")
    p.add_argument("word")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("symbol", help="canonical conjugacy-class symbol")
    p.add_argument("word")
    p.set_defaults(func=_cmd_symbol)

    p = sub.add_parser("conjugate", help="decide conjugacy of two words")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=_cmd_conjugate)

    p = sub.add_parser("classify", help="link classification of the closure")
    p.add_argument("word")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("invertible", help="invertibility of the closure")
    p.add_argument("word")
    p.set_defaults(func=_cmd_invertible)

    p = sub.add_parser("bennequin", help="self-linking number of the closure")
    p.add_argument("word")
    p.set_defaults(func=_cmd_bennequin)

    p = sub.add_parser("jones", help="Jones polynomial of the closure")
    p.add_argument("word")
    p.set_defaults(func=_cmd_jones)

    p = sub.add_parser("torus-jones", help="Jones polynomial of the (r, s) torus link")
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)
    p.set_defaults(func=_cmd_torus_jones)

    p = sub.add_parser("table3", help="enumerate non-transversally-simple flype pairs")
    p.add_argument("--max-cb", type=int, default=12)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_table3)

    p = sub.add_parser("verify-tables", help="recompute the closed-form symbol tables")
    p.add_argument("--range", type=int, default=8)
    p.set_defaults(func=_cmd_verify_tables)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except WordSyntaxError as exc:
        print(f"tribraid: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"tribraid: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())
