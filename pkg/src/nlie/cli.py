"""Command-line surface: counts, enumeration, rewriting, table
reproduction, and the cross-method discrepancy report.

CSV output uses RFC-4180-style quoting (via the csv module).  The
comparison report documents its reference policy in a leading comment
line; empty fields mean "not applicable" or "uncomputed", never 0.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from math import comb

from . import basis, counting, oracle, rewrite, terms

DEFAULT_COMPARE_ORACLE_CEILING = 2_000

_METHOD_NAMES = {
    "witt": counting.WITT,
    "necklace-bound": counting.NECKLACE_BOUND,
    "weight2": counting.WEIGHT2,
    "ladder": counting.LADDER,
    "ladder-recursive": counting.LADDER_RECURSIVE,
    "eq14": counting.EQ14,
    "eq15": counting.EQ15,
    "eq16": counting.EQ16,
    "via-lie": counting.VIA_LIE,
    "enum-full": counting.ENUM_FULL,
    "enum-left": counting.ENUM_LEFT,
    "oracle": counting.ORACLE,
}


def _cell_value(tag: str, n: int, d: int, w: int, oracle_ceiling: int):
    """Value of one method on one cell, or None when not applicable /
    uncomputable."""
    if tag == counting.ENUM_FULL:
        try:
            return basis.count_by_enumeration(n, d, w, basis.EnumerationMode.FULL_RULE3)
        except basis.EnumerationCapExceeded:
            return None
    if tag == counting.ENUM_LEFT:
        try:
            return basis.count_by_enumeration(n, d, w, basis.EnumerationMode.LEFT_NORMED)
        except basis.EnumerationCapExceeded:
            return None
    if tag == counting.ORACLE:
        try:
            return oracle.graded_dimension(n, d, w, ceiling=oracle_ceiling)
        except oracle.InstanceCeilingExceeded:
            return None
    try:
        return counting.count_by_method(tag, n, d, w)
    except ValueError:
        return None


def cmd_count(args) -> int:
    tag = _METHOD_NAMES[args.method]
    value = _cell_value(tag, args.n, args.d, args.w, args.oracle_ceiling)
    if value is None:
        print(
            f"method {args.method} does not apply to (n={args.n}, d={args.d}, w={args.w})",
            file=sys.stderr,
        )
        return 1
    print(value)
    return 0


def cmd_enumerate(args) -> int:
    mode = (
        basis.EnumerationMode.LEFT_NORMED
        if args.mode == "left"
        else basis.EnumerationMode.FULL_RULE3
    )
    try:
        items = basis.enumerate_basic(args.n, args.d, args.w, mode)
    except basis.EnumerationCapExceeded as exc:
        print(str(exc), file=sys.stderr)
        return 1
    for bc in items:
        if args.format == "json":
            print(
                json.dumps(
                    {
                        "term": terms.format_term(bc.term),
                        "weight": bc.weight,
                        "length": bc.length,
                    }
                )
            )
        else:
            print(terms.format_term(bc.term))
    return 0


def cmd_rewrite(args) -> int:
    try:
        t = terms.parse(args.expr, args.n)
    except ValueError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    lc, trace = rewrite.collect(t, args.n, cap=args.budget)
    print(terms.lc_format(lc, args.n))
    if trace.capped:
        print("warning: step budget exhausted; residual terms may be non-basic", file=sys.stderr)
        return 2
    return 0


def _table2_rows():
    yield ["n"] + [str(w) for w in range(1, 9)]
    for n in range(2, 9):
        yield [str(n)] + [
            str(1 if w == 1 else counting.commutator_length(n, w))
            for w in range(1, 9)
        ]


def _table3_rows():
    yield ["w"] + [f"a{i}" for i in range(1, 9)]
    for w in range(4, 11):
        coeffs = {i: a for a, i in counting._ladder_coeffs(w)}
        yield [str(w)] + [str(coeffs[i]) if i in coeffs else "" for i in range(1, 9)]


def _table4_rows():
    yield ["w"] + [str(n) for n in range(2, 11)]
    for w in range(1, 11):
        row = [str(w)]
        for n in range(2, 11):
            row.append(str(counting.witt(2, w) if n == 2 else counting.ladder(n, w)))
        yield row


def _table5_rows():
    yield ["n"] + [f"l{s}" for s in range(2, 11)]
    for n in range(2, 11):
        exp = counting.lie_expansion(n)
        row = [str(n)]
        for s in range(2, 11):
            row.append(str(exp.coefficients[s]) if s <= n else "")
        yield row


def cmd_table(args) -> int:
    rows = {2: _table2_rows, 3: _table3_rows, 4: _table4_rows, 5: _table5_rows}[
        args.which
    ]()
    writer = csv.writer(sys.stdout, lineterminator="\n")
    if args.which == 4:
        print("# n=2 column: Witt formula; n>=3 columns: ladder closed form")
    for row in rows:
        writer.writerow(row)
    return 0


_COMPARE_COLUMNS = (
    counting.WITT,
    counting.NECKLACE_BOUND,
    counting.WEIGHT2,
    counting.LADDER,
    counting.LADDER_RECURSIVE,
    counting.EQ14,
    counting.EQ15,
    counting.EQ16,
    counting.VIA_LIE,
    counting.ENUM_FULL,
    counting.ENUM_LEFT,
    counting.ORACLE,
)

_COUNT_METHODS = tuple(
    t for t in _COMPARE_COLUMNS if t != counting.NECKLACE_BOUND
)


def _reference_method(n: int, d: int, values: dict):
    if n == 2 and values.get(counting.WITT) is not None:
        return counting.WITT
    if n == d and values.get(counting.LADDER) is not None:
        return counting.LADDER
    for tag in (counting.ORACLE, counting.ENUM_FULL):
        if values.get(tag) is not None:
            return tag
    return None


def discrepancy_flags(n: int, d: int, values: dict) -> list[str]:
    """Flag strings for one cell: every populated count that disagrees
    with the reference, and every count exceeding the necklace bound."""
    flags = []
    ref = _reference_method(n, d, values)
    if ref is not None:
        rv = values[ref]
        for tag in _COUNT_METHODS:
            v = values.get(tag)
            if tag != ref and v is not None and v != rv:
                flags.append(f"{tag}={v} vs {ref}={rv}")
    bound = values.get(counting.NECKLACE_BOUND)
    if bound is not None:
        for tag in _COUNT_METHODS:
            v = values.get(tag)
            if v is not None and v > bound:
                flags.append(f"{tag}={v} exceeds NECKLACE_BOUND={bound}")
    return flags


def compare_rows(n: int, d: int, w_max: int, oracle_ceiling: int):
    """Rows of the comparison report: header, then one row per weight."""
    yield ["n", "d", "w"] + list(_COMPARE_COLUMNS) + ["flags"]
    for w in range(1, w_max + 1):
        values = {
            tag: _cell_value(tag, n, d, w, oracle_ceiling)
            for tag in _COMPARE_COLUMNS
        }
        flags = discrepancy_flags(n, d, values)
        row = [str(n), str(d), str(w)]
        row += ["" if values[t] is None else str(values[t]) for t in _COMPARE_COLUMNS]
        row.append("; ".join(flags))
        yield row


def cmd_compare(args) -> int:
    print("# reference count: WITT for n=2, LADDER for n=d, else ORACLE/ENUM_FULL")
    print("# empty fields: method not applicable or instance above the oracle ceiling")
    writer = csv.writer(sys.stdout, lineterminator="\n")
    for row in compare_rows(args.n, args.d, args.w_max, args.oracle_ceiling):
        writer.writerow(row)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="nlie",
        description="Basic commutators of free n-Lie algebras: counting, "
        "enumeration, rewriting, and exact validation.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="evaluate one counting method on one cell")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--w", type=int, required=True)
    c.add_argument("--method", choices=sorted(_METHOD_NAMES), required=True)
    c.add_argument("--oracle-ceiling", type=int, default=DEFAULT_COMPARE_ORACLE_CEILING)
    c.set_defaults(func=cmd_count)

    e = sub.add_parser("enumerate", help="list basic commutators")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--d", type=int, required=True)
    e.add_argument("--w", type=int, required=True)
    e.add_argument("--mode", choices=["full", "left"], default="full")
    e.add_argument("--format", choices=["text", "json"], default="text")
    e.set_defaults(func=cmd_enumerate)

    r = sub.add_parser("rewrite", help="collect a bracket expression into basic form")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--budget", type=int, default=rewrite.DEFAULT_STEP_BUDGET)
    r.add_argument("expr")
    r.set_defaults(func=cmd_rewrite)

    t = sub.add_parser("table", help="reproduce a reference table as CSV")
    t.add_argument("--which", type=int, choices=[2, 3, 4, 5], required=True)
    t.set_defaults(func=cmd_table)

    m = sub.add_parser("compare", help="cross-method discrepancy report")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--d", type=int, required=True)
    m.add_argument("--w-max", type=int, required=True)
    m.add_argument("--oracle-ceiling", type=int, default=DEFAULT_COMPARE_ORACLE_CEILING)
    m.set_defaults(func=cmd_compare)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
