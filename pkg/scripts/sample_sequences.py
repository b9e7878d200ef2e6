#!/usr/bin/env python3
"""Sample per-family cardinality sequences for small vertex counts.

The printed prefixes are suitable for manual lookup against published
integer sequences (no network access here).
"""

import argparse

from ncdigraph.digraphs import parse_property_set
from ncdigraph.ontology import count_family

DEFAULT_FAMILIES = [
    "",
    "CONN_W",
    "ACYC_D",
    "ACYC_U",
    "UNAMB_S",
    "ORIENTED",
    "INV",
    "INV,CONN_W,ACYC_U",
    "wc-dag",
    "multitree",
    "polytree",
    "out-tree",
]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--family", action="append", default=None,
                    help="repeatable; defaults to a standard selection")
    args = ap.parse_args()

    families = args.family if args.family is not None else DEFAULT_FAMILIES
    for name in families:
        req = parse_property_set(name)
        seq = [count_family(n, req) for n in range(1, args.max_n + 1)]
        label = name or "(unrestricted)"
        print(f"{label:24s} {', '.join(str(c) for c in seq)}")


if __name__ == "__main__":
    main()
