#!/usr/bin/env python3
"""Sweep the Hermitian families and print the verified parameters.

Covers, for odd prime powers q up to --max-q:
  * GRS codes for every even length n <= q (base fields up to --grs-q),
  * the length q + 1 shift-constant route,
  * the [6, 3, 4] family over fields with 5 | q^2 + 1,
  * extended duadic codes for every n | q - 1 with gcd(n, q + 1) = 1.
"""
import argparse
import math
import sys

from selfdual import (
    build_hermitian_extended_duadic,
    build_hermitian_n5,
    exists_hermitian_dispatch,
)


def odd_prime_powers(limit):
    out = []
    for p in range(3, limit + 1):
        if any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            continue
        q, t = p, 1
        while q <= limit:
            out.append((q, p, t))
            q, t = q * p, t + 1
    return sorted(out)


def show(tag, q, res):
    rep = res.report
    if rep.distance_exact is not None:
        dist = "d = %d" % rep.distance_exact
    else:
        dist = "d >= %d" % rep.distance_lower_bound
    print("%-10s q=%-4d [%d, %d] %s via %s (%s)"
          % (tag, q, res.code.n, res.code.k, dist,
             res.construction, rep.mds.status))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-q", type=int, default=49,
                    help="largest base field order for the cyclic families")
    ap.add_argument("--grs-q", type=int, default=13,
                    help="largest base field order for the GRS sweep")
    args = ap.parse_args(argv)

    for q, p, t in odd_prime_powers(args.grs_q):
        for n in range(2, q + 2, 2):
            show("dispatch", q, exists_hermitian_dispatch(p, t, n))

    for q, p, t in odd_prime_powers(args.max_q):
        if (q * q + 1) % 5 == 0:
            show("length-6", q, build_hermitian_n5(p, t))

    for q, p, t in odd_prime_powers(args.max_q):
        for n in range(3, q, 2):
            if (q - 1) % n == 0 and math.gcd(n, q + 1) == 1:
                show("duadic", q, build_hermitian_extended_duadic(p, t, n))
    return 0


if __name__ == "__main__":
    sys.exit(main())
