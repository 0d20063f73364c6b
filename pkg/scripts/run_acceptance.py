#!/usr/bin/env python3
"""Print one PASS/FAIL line per acceptance criterion."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

import test_acceptance  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("criteria", nargs="*", type=int, default=list(range(1, 11)))
    args = ap.parse_args()
    failed = 0
    for n in args.criteria:
        ok, line = test_acceptance.evaluate(n)
        print(line, flush=True)
        failed += not ok
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
