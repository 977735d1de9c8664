"""Distribution of complex ranks of random rational binary forms per degree.

    python3 scripts/generic_rank_survey.py --trials 100 --max-degree 9
"""

import argparse
import math
from collections import Counter

from binwaring.sampling import case_rng, random_form
from binwaring.waring import complex_rank


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--max-degree", type=int, default=9)
    parser.add_argument("--bound", type=int, default=1000, help="numerator/denominator bound for coefficients")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    for d in range(2, args.max_degree + 1):
        ranks = Counter(
            complex_rank(random_form(case_rng(args.seed, "generic", d, k), d, args.bound)).rank for k in range(args.trials)
        )
        expected = math.ceil((d + 1) / 2)
        print(f"d={d:>2}  expected {expected}  observed {dict(sorted(ranks.items()))}")


if __name__ == "__main__":
    main()
