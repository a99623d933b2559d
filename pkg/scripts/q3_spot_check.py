"""Exhaustive full-scan verification of the pending-dot code (7,3,4) over GF(3).

    SUBSPACE_CODEC_JOBS=4 python scripts/q3_spot_check.py
"""

from __future__ import annotations

import argparse

from subspace_codec.algebra import field
from subspace_codec.multilevel import construct_improved
from subspace_codec.verify import default_jobs, verify_code


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=7)
    ap.add_argument("--q", type=int, default=3)
    ap.add_argument("--jobs", type=int, default=None)
    args = ap.parse_args()
    code = construct_improved(args.n, 3, 2, field(args.q))
    print(f"size polynomial {code.size_polynomial()} = {code.size}")
    report = verify_code(code, jobs=args.jobs or default_jobs(), full_scan=True)
    print(report.to_text())


if __name__ == "__main__":
    main()
