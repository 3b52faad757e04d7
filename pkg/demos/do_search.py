"""Seeded random search over Dembowski-Ostrom polynomials.

Can a DO polynomial have exactly 2^(n-2) vanishing flats, the minimum allowed
by translation closure? This script samples random DO polynomials and reports
the smallest nonzero counts it sees. At n = 5 random search finds exact hits
quickly (a single rank-deficient direction suffices); larger n is harder.

Run with: python3 demos/do_search.py [n] [trials]
"""

import sys
from collections import Counter

from vanishingflats import GF, random_do_polynomial


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 6
    trials = int(sys.argv[2]) if len(sys.argv) > 2 else 300
    gf = GF(n)
    target = 1 << (n - 2)
    print(f"searching GF(2^{n}), target count {target}, {trials} seeds")

    best = None
    histogram = Counter()
    for seed in range(trials):
        f = random_do_polynomial(gf, 2 + seed % 5, seed=seed)
        count = f.count_vanishing_flats()
        histogram[count] += 1
        if count and (best is None or count < best[0]):
            best = (count, seed, dict(f.coeffs))
            print(f"  new best: count {count} at seed {seed} ({f.coeffs})")
        if count == target:
            print(f"  exact hit at seed {seed}: {f.coeffs}")
            return

    print("no exact hit; count histogram (count: occurrences):")
    for count in sorted(histogram):
        print(f"  {count}: {histogram[count]}")


if __name__ == "__main__":
    main()
