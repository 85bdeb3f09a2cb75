"""Empirical ratio of the bi-hedge 2-approximation against brute force.

    python3 demos/approximation_survey.py [samples]
"""

import sys
from collections import Counter
from fractions import Fraction

from hedgecluster.generators import InstanceFamily, generate
from hedgecluster.solvers import solve_approx2_bihedge, solve_bruteforce

samples = int(sys.argv[1]) if len(sys.argv) > 1 else 300
ratios = Counter()
for seed in range(samples):
    H = generate(InstanceFamily("bihedge", seed=seed, n=3 + seed % 30, ell=1 + seed % 12))
    opt = len(solve_bruteforce(H))
    got = len(solve_approx2_bihedge(H))
    ratios[Fraction(got, opt) if opt else Fraction(1)] += 1

print(f"{samples} instances")
for r in sorted(ratios):
    print(f"  ratio {str(r):>5}  {ratios[r]:4d}  {'#' * (60 * ratios[r] // samples)}")
