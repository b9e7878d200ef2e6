#!/usr/bin/env python3
"""Build the family ontology for a given vertex count and print the classes
with their Hasse order."""

import argparse

from ncdigraph.ontology import build_lattice, signature_string


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=5)
    args = ap.parse_args()

    lat = build_lattice(args.n)
    print(f"{len(lat.classes)} classes, "
          f"{sum(c.count for c in lat.classes)} digraphs on {args.n} vertices")
    for i, cls in enumerate(lat.classes):
        name = cls.name or ""
        print(f"{i:3d}  {signature_string(cls.signature)}  {cls.count:8d}  {name}")
    print("hasse edges (sub -> super):")
    for (i, j) in lat.order:
        print(f"  {signature_string(lat.classes[i].signature)} -> "
              f"{signature_string(lat.classes[j].signature)}")


if __name__ == "__main__":
    main()
