#!/usr/bin/env python3
"""Sweep the direct construction families over a range of sizes and report
verification, support, diagonal structure, and global simplicity."""

import argparse
import sys
import time
from dataclasses import dataclass

from relheffter.constructions import (
    build_h7,
    build_h9,
    build_h_2n_3,
    build_h_n_3,
    h7_support,
    h9_support,
    h_2n_3_support,
    h_n_3_support,
)
from relheffter.heffter import HeffterParams, verify_integer
from relheffter.orderings import is_globally_simple
from relheffter.pfarray import classify_diagonals, support


@dataclass(frozen=True)
class Family:
    name: str
    build: callable
    expected_support: callable
    k: int
    t_of_n: callable
    admissible: callable


FAMILIES = {
    "h-n-3": Family("h-n-3", build_h_n_3, h_n_3_support, 3,
                    lambda n: n, lambda n: n >= 3 and n % 2 == 1),
    "h-2n-3": Family("h-2n-3", build_h_2n_3, h_2n_3_support, 3,
                     lambda n: 2 * n, lambda n: n >= 3 and n % 2 == 1),
    "h7": Family("h7", build_h7, h7_support, 7,
                 lambda n: 7, lambda n: n >= 7 and n % 4 == 3),
    "h9": Family("h9", build_h9, h9_support, 9,
                 lambda n: 9, lambda n: n >= 11 and n % 4 == 3),
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--families", nargs="+", default=list(FAMILIES),
                        choices=list(FAMILIES))
    parser.add_argument("--max-n", type=int, default=103)
    args = parser.parse_args()

    failures = 0
    for name in args.families:
        fam = FAMILIES[name]
        t0 = time.time()
        count = 0
        for n in range(3, args.max_n + 1):
            if not fam.admissible(n):
                continue
            a = fam.build(n)
            report = verify_integer(a, HeffterParams.square(n, fam.k, fam.t_of_n(n)))
            ok = (report.valid
                  and support(a) == fam.expected_support(n)
                  and is_globally_simple(a)
                  and classify_diagonals(a).is_k_diagonal)
            count += 1
            if not ok:
                failures += 1
                print(f"{name} n={n}: FAIL {report.to_json()}")
        print(f"{name}: {count} sizes verified in {time.time() - t0:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
