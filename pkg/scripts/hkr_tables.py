#!/usr/bin/env python3
"""Print log Hochschild homology tables for a family of pairs.

Projective pairs stay in the scalar regime ({0: 1}); pointed curves of
positive genus pick up g-dimensional pieces in degrees -1 and +1.
"""

from logfan.hkr import hkr_homology
from logfan.logproduct import LogPair, format_pair


def main():
    pairs = [LogPair("P1:pt")]
    pairs += [LogPair("Pn:H", n) for n in range(2, 5)]
    pairs += [LogPair("Cg:pt", g) for g in range(1, 4)]
    for pair in pairs:
        table = hkr_homology(pair)
        cells = "  ".join(f"{d}:{v}" for d, v in sorted(table.items()))
        print(f"{format_pair(pair):>6}   {cells}")


if __name__ == "__main__":
    main()
