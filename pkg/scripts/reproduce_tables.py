#!/usr/bin/env python3
"""Desk-scale reproduction of the 1682 chord tables.

Solves the chord problem for diameter 2 at 30 working digits, prints the
10-digit table exactly as the original reported it, the exact 20-digit
products of those rounded values with misprint annotations, and the same
products taken from the unrounded root for contrast.
"""

import argparse

from mesolabe.proportio import (
    chord_table,
    reproduce_table,
    solve_continued_chords,
    true_product_rows,
)
from mesolabe.scalar import DecimalScalar, PrecisionContext


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--diameter", default="2")
    parser.add_argument("--work-digits", type=int, default=30)
    args = parser.parse_args()

    ctx = PrecisionContext(args.work_digits, args.work_digits - 10, 10)
    full = solve_continued_chords(DecimalScalar.from_str(args.diameter), ctx)
    table_cfg = full.table_values(10)

    print("chord lengths, truncated at 10 digits as the original extracted them")
    for row in chord_table(table_cfg).rows:
        flag = "" if row.printed in (None, row.grouped) else "  (print differs!)"
        print(f"  {row.label:<5} {row.grouped:>16}{flag}")

    print("\nexact products of the 10-digit values")
    for row in reproduce_table(table_cfg).rows:
        print(f"  {row.label:<5} {row.grouped:>28}")
        if row.is_misprint:
            print(f"        printed as {row.printed}  <- misprint")

    print(f"\nproducts of the unrounded root at {args.work_digits} digits, for contrast")
    for row in true_product_rows(full).rows:
        print(f"  {row.label:<5} {row.grouped:>28}")

    print("\nfull working-precision chords")
    for label, value in (("AB", full.ab), ("BC", full.bc), ("BD", full.bd)):
        print(f"  {label} = {value}")


if __name__ == "__main__":
    main()
