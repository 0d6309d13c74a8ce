#!/usr/bin/env python3
"""Survey w2 heights: unoriented vs oriented vs the closed-form table.

The oriented column is the height of the degree-2 class in the characteristic
subalgebra; doubling it gives the largest even degree where a pure power
survives, which drives the sharpest generic upper bounds.
"""

import argparse
import sys

from cuplength.gf2poly import Gf2Polynomial
from cuplength.grassmann import GrassmannPresentation, SizeCapExceeded, SizeCaps
from cuplength.heights import closed_form_w2_height, height_direct, tabulated_w2_height


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=3)
    parser.add_argument("--n-min", type=int, default=None)
    parser.add_argument("--n-max", type=int, default=20)
    parser.add_argument("--max-dim", type=int, default=200)
    args = parser.parse_args()
    k = args.k
    n_min = args.n_min if args.n_min is not None else 2 * k
    if k < 3 or n_min < 2 * k:
        parser.error("need n >= 2k >= 6")

    print(f"{'n':>3} {'k':>2} {'dim':>4} | {'direct':>6} {'closed':>6} {'quoted':>6} | {'oriented':>8}")
    caps = SizeCaps(max_formal_dim=args.max_dim, max_basis=200000)
    for n in range(n_min, args.n_max + 1):
        try:
            pres = GrassmannPresentation(n, k, caps)
            w2 = Gf2Polynomial.variable(pres.weights, 2)
            direct = height_direct(pres, w2).height
            ctx = pres.oriented()
            oriented = height_direct(ctx, Gf2Polynomial.variable(ctx.weights, 2)).height
        except SizeCapExceeded:
            print(f"{n:>3} {k:>2} {k * (n - k):>4} | skipped (over --max-dim)")
            continue
        closed = closed_form_w2_height(n, k)
        quoted = tabulated_w2_height(n, k)
        flag = "" if closed == direct else "  <-- closed form mismatch"
        print(
            f"{n:>3} {k:>2} {k * (n - k):>4} | {direct:>6} {closed:>6} {quoted:>6} | {oriented:>8}{flag}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
