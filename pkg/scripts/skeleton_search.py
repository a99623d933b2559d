"""Which size polynomials can a d_H >= 2*delta skeleton produce at all?

Enumerates every constant-weight code (not only lexicodes) of length n,
weight k and minimum distance 2*delta that contains 1^k 0^(n-k), fills each
word with a bound-attaining Ferrers code, and reports the reachable size
polynomials.  A target polynomial can be tested for reachability.

    python scripts/skeleton_search.py --n 7 --k 3 --target "q^8+q^4+q^3+2q^2+1"
"""

from __future__ import annotations

import argparse
from collections import Counter

from subspace_codec.ferrers import diagram_from_vector, ferrers_bound
from subspace_codec.multilevel import SizePolynomial
from subspace_codec.skeleton import constant_weight_lexicode, hamming_distance, scan_order


def reachable_polynomials(n: int, k: int, delta: int) -> Counter:
    words = list(scan_order(n, k))
    dims = [ferrers_bound(diagram_from_vector(v), delta) for v in words]
    far = [[hamming_distance(a, b) >= 2 * delta for b in words] for a in words]
    found: Counter = Counter()

    def extend(chosen: list[int], start: int) -> None:
        found[tuple(sorted((dims[i] for i in chosen), reverse=True))] += 1
        for j in range(start, len(words)):
            if all(far[i][j] for i in chosen):
                chosen.append(j)
                extend(chosen, j + 1)
                chosen.pop()

    extend([0], 1)
    return found


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=7)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--dist", type=int, default=4)
    ap.add_argument("--target", default="q^8+q^4+q^3+2q^2+1")
    ap.add_argument("--q", type=int, default=2)
    args = ap.parse_args()
    delta = args.dist // 2

    found = reachable_polynomials(args.n, args.k, delta)
    polys = {str(SizePolynomial(Counter(d))): n_codes for d, n_codes in found.items()}
    target = SizePolynomial.parse(args.target)
    hit = any(SizePolynomial(Counter(d)) == target for d in found)
    best = max(polys, key=lambda p: SizePolynomial.parse(p).evaluate(args.q))

    lex = constant_weight_lexicode(args.n, args.k, args.dist)
    lex_poly = SizePolynomial(Counter(ferrers_bound(diagram_from_vector(v), delta) for v in lex))
    print(f"skeletons searched      {sum(found.values())} (all containing {'1' * args.k + '0' * (args.n - args.k)})")
    print(f"distinct polynomials    {len(polys)}")
    print(f"lexicode skeleton       {' '.join(map(str, lex))}")
    print(f"lexicode polynomial     {lex_poly} = {lex_poly.evaluate(args.q)}")
    print(f"largest at q={args.q}          {best} = {SizePolynomial.parse(best).evaluate(args.q)}")
    print(f"target {target} reachable: {'yes' if hit else 'no'}")


if __name__ == "__main__":
    main()
