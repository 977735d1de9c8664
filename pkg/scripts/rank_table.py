"""Print complex and real ranks of x0^a x1^b with their witnesses checked.

    python3 scripts/rank_table.py --max-degree 12
"""

import argparse
import time

from binwaring.decomposition import verify_decomposition
from binwaring.selftest import monomial_pairs
from binwaring.waring import monomial_complex_rank, monomial_real_rank


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-degree", type=int, default=12)
    parser.add_argument("--precision", type=int, default=128)
    args = parser.parse_args()

    print(f"{'a':>3} {'b':>3} {'complex':>8} {'real':>5} {'complex residual':>18} {'seconds':>8}")
    for a, b in monomial_pairs(args.max_degree):
        start = time.perf_counter()
        c = monomial_complex_rank(a, b, args.precision)
        r = monomial_real_rank(a, b)
        ok_c, res = verify_decomposition(c.witness)
        ok_r, _ = verify_decomposition(r.witness)
        elapsed = time.perf_counter() - start
        flag = "" if ok_c and ok_r else "  UNVERIFIED"
        print(f"{a:>3} {b:>3} {c.rank:>8} {r.rank:>5} {float(res):>18.3e} {elapsed:>8.3f}{flag}")


if __name__ == "__main__":
    main()
