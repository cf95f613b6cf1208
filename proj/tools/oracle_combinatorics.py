#!/usr/bin/env python3
"""Independent exact-arithmetic oracle for TEP counts and per-bit complexity.

Computes the same quantities as the C++ complexity module but from scratch:
Python big integers and fractions.Fraction, math.comb for binomials. Used by
the acceptance suite to cross-check the C++ big-integer implementation.

Usage:
  oracle_combinatorics.py tep_count <k> <num>/<den>
  oracle_combinatorics.py per_bit <n> <k> <q> <num>/<den>

tep_count prints a single integer. per_bit prints the exact value as a
reduced fraction "p/q" (denominator 1 included for uniform parsing).
"""

import sys
from fractions import Fraction
from math import comb


def parse_order(text):
    if "/" in text:
        num, den = text.split("/", 1)
        num, den = int(num), int(den)
    else:
        num, den = int(text), 1
    if den <= 0 or num < 0:
        raise ValueError(f"bad order {text!r}")
    return num, den


def tep_count(k, num, den):
    if num > k * den:
        raise ValueError("order exceeds k")
    fl, rem = divmod(num, den)
    total = sum(comb(k, i) for i in range(fl + 1))
    if rem:
        # fractional tail: floor of (frac * next binomial)
        total += (rem * comb(k, fl + 1)) // den
    return total


def per_bit(n, k, q, num, den):
    if k < 1 or n < k:
        raise ValueError("need n >= k >= 1")
    l = tep_count(k, num, den)
    return Fraction(n * k) + Fraction(l * (k * (n - q) + q * n), 2 * k)


def main(argv):
    if len(argv) < 2:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    cmd = argv[1]
    if cmd == "tep_count" and len(argv) == 4:
        k = int(argv[2])
        num, den = parse_order(argv[3])
        print(tep_count(k, num, den))
        return 0
    if cmd == "per_bit" and len(argv) == 6:
        n, k, q = int(argv[2]), int(argv[3]), int(argv[4])
        num, den = parse_order(argv[5])
        v = per_bit(n, k, q, num, den)
        print(f"{v.numerator}/{v.denominator}")
        return 0
    print(f"unknown or malformed command: {' '.join(argv[1:])}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main(sys.argv))
