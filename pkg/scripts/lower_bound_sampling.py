"""Sample apolar elements of monomials and look for products of distinct real forms.

Any hit would contradict the real lower bound; the expected count is zero.

    python3 scripts/lower_bound_sampling.py --trials 200 --max-degree 12
"""

import argparse
from collections import Counter

from binwaring.realroots import has_distinct_real_factors
from binwaring.sampling import case_rng, random_monomial_perp_element
from binwaring.selftest import monomial_pairs
from binwaring.waring import real_lower_bound_certificate


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--max-degree", type=int, default=12)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    reasons = Counter()
    hits = checked = 0
    for a, b in monomial_pairs(args.max_degree):
        for r in range(1, a + b):
            cert = real_lower_bound_certificate(a, b, r)
            reasons[cert.reason] += 1
            for k in range(args.trials):
                op = random_monomial_perp_element(case_rng(args.seed, "perp", a, b, r, k), a, b, r)
                checked += 1
                if has_distinct_real_factors(op):
                    hits += 1
                    print(f"counterexample: a={a} b={b} r={r} op={op}")
    print(f"certificates by reason: {dict(reasons)}")
    print(f"{checked} elements sampled, {hits} products of distinct real forms")


if __name__ == "__main__":
    main()
