#!/usr/bin/env python3
"""Walk through the Euler pairing of a transversal degree-1 graph kernel
with itself, printing every intermediate rewriting step.

The pairing routes through the right adjoint, the excess bundle of the
self-intersection, and the Sym decomposition, and lands on -1 + 1 = 0.
"""

import argparse

from logfan.kernels import euler_pairing, format_kernel, graph_kernel
from logfan.logproduct import LogPair, format_pair, parse_pair


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--target", default="P2:H",
                        help="target pair (default P2:H)")
    parser.add_argument("--degree", type=int, default=1)
    args = parser.parse_args()

    source = LogPair("P1:pt")
    target = parse_pair(args.target)
    kernel = graph_kernel(source, target, args.degree)
    print(f"pairing {format_kernel(kernel)} against itself, "
          f"{format_pair(source)} -> {format_pair(target)}")
    trace = []
    value = euler_pairing(kernel, kernel, trace)
    for line in trace:
        print("  " + line)
    print(f"euler pairing = {value}")


if __name__ == "__main__":
    main()
