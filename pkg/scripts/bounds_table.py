#!/usr/bin/env python3
"""Print side-by-side closed-form and engine-sharpened bound tables.

Each row shows the table values next to the engine-verified values, so the
sharpening (and the remaining gap) is visible at a glance.  Slow pairs are
skipped by the size caps rather than hanging the run.
"""

import argparse
import sys

from cuplength.bounds import full_report
from cuplength.grassmann import SizeCapExceeded, SizeCaps


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=3)
    parser.add_argument("--n-min", type=int, default=None)
    parser.add_argument("--n-max", type=int, default=20)
    parser.add_argument("--max-dim", type=int, default=200, help="skip rings above this formal dimension")
    args = parser.parse_args()
    k = args.k
    n_min = args.n_min if args.n_min is not None else 2 * k
    if k < 3 or n_min < 2 * k:
        parser.error("need n >= 2k >= 6")

    header = (
        f"{'n':>3} {'k':>2} {'dim':>4} | {'table':>11} | {'engine':>11} "
        f"{'gap':>3} | {'cat':>9} | methods"
    )
    print(header)
    print("-" * len(header))
    caps = SizeCaps(max_formal_dim=args.max_dim, max_basis=200000)
    for n in range(n_min, args.n_max + 1):
        try:
            r = full_report(n, k, caps=caps)
        except SizeCapExceeded:
            print(f"{n:>3} {k:>2} {k * (n - k):>4} | skipped (over --max-dim)")
            continue
        print(
            f"{n:>3} {k:>2} {k * (n - k):>4} | "
            f"{r.paper_lower:>4} .. {r.paper_upper:>4} | "
            f"{r.lower:>4} .. {r.upper:>4} {r.upper - r.lower:>3} | "
            f"{r.cat_lower:>3} .. {r.cat_upper:>3} | "
            f"{r.lower_method} / {r.upper_method}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
