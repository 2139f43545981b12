#!/usr/bin/env python3
"""Build the triple (A^1, 0) log product and print its fan.

The result is the barycentric subdivision of the positive octant: 7 rays
and 6 smooth maximal cones.  Run with --json for the machine-readable fan.
"""

import argparse
import json

from logfan.fans import fan_to_json, is_smooth
from logfan.logproduct import LogPair, log_product


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    space = log_product([LogPair("A1:0")] * 3)
    if args.json:
        print(json.dumps(fan_to_json(space.fan), sort_keys=True))
        return

    print(f"rays ({len(space.fan.rays())}):")
    labels = space.fan.label_map()
    for ray in space.fan.rays():
        tag = labels.get(ray)
        note = f"  [{tag.kind} {tag.arg}]" if tag else ""
        print(f"  {ray}{note}")
    print(f"maximal cones ({len(space.fan.cones)}):")
    for cone in space.fan.cones:
        print(f"  {cone.rays}  smooth={is_smooth(cone, 3)}")


if __name__ == "__main__":
    main()
