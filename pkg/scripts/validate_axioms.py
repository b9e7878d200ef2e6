#!/usr/bin/env python3
"""Cross-validate the bracket-pattern axioms against the direct checkers.

For every noncrossing digraph up to --max-n, compare constraint_accepts on
the latent encoding with check_property for all eight properties, and
count family members along the way.  Any disagreement is printed.
"""

import argparse
import sys
import time
from collections import Counter

from ncdigraph.digraphs import (ALL_PROPERTIES, check_property,
                                enumerate_noncrossing_digraphs)
from ncdigraph.latent import constraint_accepts, latent_encode, latent_to_str


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()

    ok = True
    for n in range(1, args.max_n + 1):
        t0 = time.time()
        totals = Counter()
        checked = 0
        mismatches = 0
        for g in enumerate_noncrossing_digraphs(n):
            checked += 1
            s = latent_encode(g)
            for p in ALL_PROPERTIES:
                direct = check_property(g, p)
                scanned = constraint_accepts(p, s)
                if direct:
                    totals[p] += 1
                if direct != scanned:
                    mismatches += 1
                    ok = False
                    print(f"MISMATCH n={n} {p.value} arcs={sorted(g.arcs)} "
                          f"latent={latent_to_str(s)}", file=sys.stderr)
        counts = " ".join(f"{p.value}={totals[p]}" for p in ALL_PROPERTIES)
        print(f"n={n}: {checked} digraphs, {mismatches} disagreements "
              f"({time.time() - t0:.1f}s)")
        print(f"      {counts}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
