#!/usr/bin/env python3
"""Replay every built-in CLI demo and print its transcript.

Usage: python3 scripts/run_demos.py [NAME ...]
With no arguments all demos run in registry order.
"""

import sys

from skewnorm.cli import DEMOS, run_demo_result


def main(argv):
    names = argv or list(DEMOS)
    for name in names:
        result = run_demo_result(name)
        print(f"== {name} ==")
        for line in result["transcript"]:
            print(f"  {line}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
