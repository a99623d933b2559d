"""Effect of the pending tuple width on code size.

Compares a single fixed pending dot per cell (``--pending-width 1``) with the
adaptive width (all pending dots of the first pending cell in a family).

    python scripts/pending_width_survey.py --q 2 3 --n 7 8 9 10
"""

from __future__ import annotations

import argparse

from subspace_codec.algebra import field
from subspace_codec.multilevel import construct_classic, construct_improved


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--n", type=int, nargs="+", default=[7, 8, 9, 10])
    ap.add_argument("--k", type=int, default=3)
    args = ap.parse_args()
    print(f"{'q':>2} {'n':>3} {'classic':>10} {'width 1':>10} {'adaptive':>10}  adaptive polynomial")
    for q in args.q:
        f = field(q)
        for n in args.n:
            c = construct_classic(n, args.k, 2, f)
            one = construct_improved(n, args.k, 2, f, pending_width=1)
            ada = construct_improved(n, args.k, 2, f)
            print(f"{q:>2} {n:>3} {c.size:>10} {one.size:>10} {ada.size:>10}  {ada.size_polynomial()}")


if __name__ == "__main__":
    main()
