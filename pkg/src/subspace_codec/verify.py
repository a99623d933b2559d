"""Exhaustive certification of constant-dimension codes.

The pairwise minimum subspace distance is a reduction by minimum over the
upper-triangular pair range.  Row ``i`` against rows ``i+1..N-1`` is one
vectorised batch; batches are spread over worker processes by row index.
"""

from __future__ import annotations

import itertools
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field as dc_field

import numpy as np

from .algebra import GF, batched_rank, gf2_pack, gf2_rank_packed, rref_array
from .ferrers import diagram_from_vector, embed_array, pending_analysis
from .multilevel import SubspaceCode
from .rank_metric import build_ferrers_code
from .skeleton import IdentifyingVector, hamming_distance, scan_order

CODEWORD_GUARD = 10**5


@dataclass
class VerifyReport:
    n_codewords: int
    k: int
    designed_distance: int
    distinct: bool
    expected_size: int | None
    min_distance: int | None
    pairs_checked: int
    early_exit: bool
    seconds: float
    full_rank: bool = True
    notes: list[str] = dc_field(default_factory=list)

    @property
    def size_ok(self) -> bool:
        return self.expected_size is None or self.expected_size == self.n_codewords

    @property
    def passed(self) -> bool:
        dist_ok = self.min_distance is None or self.min_distance >= self.designed_distance
        return self.distinct and self.full_rank and self.size_ok and dist_ok

    def to_dict(self) -> dict:
        out = asdict(self)
        out["size_ok"] = self.size_ok
        out["passed"] = self.passed
        return out

    def to_text(self) -> str:
        md = "n/a" if self.min_distance is None else str(self.min_distance)
        if self.early_exit:
            md += " (early exit, upper bound)"
        lines = [
            f"codewords         {self.n_codewords}",
            f"expected size     {self.expected_size if self.expected_size is not None else 'n/a'}"
            f"  [{'ok' if self.size_ok else 'MISMATCH'}]",
            f"distinct          {'yes' if self.distinct else 'NO'}",
            f"full rank         {'yes' if self.full_rank else 'NO'}",
            f"pairs checked     {self.pairs_checked}",
            f"min distance      {md}  (designed {self.designed_distance})",
            f"time              {self.seconds:.2f} s",
            f"result            {'PASS' if self.passed else 'FAIL'}",
        ]
        lines += [f"note              {n}" for n in self.notes]
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _row_distances(f: GF, words: np.ndarray, packed: np.ndarray | None, i: int) -> np.ndarray:
    """Subspace distances from codeword ``i`` to every later codeword."""
    k = words.shape[1]
    if packed is not None:
        rest = packed[i + 1 :]
        stack = np.concatenate([np.broadcast_to(packed[i], (len(rest), k)), rest], axis=1)
        return 2 * gf2_rank_packed(stack) - 2 * k
    u = words[i]
    v = words[i + 1 :].copy()
    pivots = [int(np.flatnonzero(row)[0]) for row in u]
    for r, p in enumerate(pivots):
        v = f.sub_arr(v, f.mul_arr(v[:, :, p : p + 1], u[r][None, None, :]))
    free = [c for c in range(words.shape[2]) if c not in set(pivots)]
    # rank [U; V] = k + rank of V reduced modulo U
    return 2 * batched_rank(f, v[:, :, free])


def _scan_rows(args) -> tuple[int | None, int, bool]:
    q, words, rows, threshold = args
    from .algebra import field

    f = field(q)
    packed = gf2_pack(words) if q == 2 and words.shape[2] <= 63 else None
    best, pairs = None, 0
    for i in rows:
        if i >= len(words) - 1:
            continue
        d = _row_distances(f, words, packed, i)
        pairs += len(d)
        m = int(d.min())
        best = m if best is None else min(best, m)
        if threshold is not None and best < threshold:
            return best, pairs, True
    return best, pairs, False


def min_pairwise_distance(
    f: GF,
    words: np.ndarray,
    threshold: int | None = None,
    jobs: int = 1,
) -> tuple[int | None, int, bool]:
    """Exact minimum subspace distance over all pairs of RREF codewords.

    Returns ``(minimum, pairs_checked, early_exit)``.  With ``threshold`` set,
    scanning stops at the first distance below it.  Words must be full-rank
    RREF arrays of shape ``(N, k, n)``.
    """
    words = np.ascontiguousarray(words, dtype=np.int64)
    N = len(words)
    if N < 2:
        return None, 0, False
    if jobs <= 1:
        return _scan_rows((f.q, words, range(N - 1), threshold))
    # interleave rows so workers see similar pair counts
    tasks = [(f.q, words, range(j, N - 1, jobs), threshold) for j in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_scan_rows, tasks))
    mins = [r[0] for r in results if r[0] is not None]
    return (min(mins) if mins else None), sum(r[1] for r in results), any(r[2] for r in results)


def canonicalize(f: GF, words: np.ndarray) -> tuple[np.ndarray, bool]:
    """RREF of every word; the flag is False if any word is rank deficient."""
    words = np.asarray(words, dtype=np.int64)
    out = np.empty_like(words)
    full = True
    for idx, w in enumerate(words):
        reduced, pivots = rref_array(f, w)
        out[idx] = reduced
        full &= len(pivots) == w.shape[0]
    return out, full


def verify_codewords(
    f: GF,
    words: np.ndarray,
    designed_distance: int,
    expected_size: int | None = None,
    *,
    jobs: int = 1,
    full_scan: bool = False,
    guard: int = CODEWORD_GUARD,
    assume_rref: bool = False,
) -> VerifyReport:
    start = time.perf_counter()
    words = np.asarray(words, dtype=np.int64)
    if len(words) > guard:
        raise ValueError(f"{len(words)} codewords exceed the guard of {guard}")
    full_rank = True
    if not assume_rref:
        words, full_rank = canonicalize(f, words)
    N = len(words)
    k = words.shape[1] if words.ndim == 3 else 0
    distinct = len(np.unique(words.reshape(N, -1), axis=0)) == N if N else True
    threshold = None if full_scan else designed_distance
    md, pairs, early = min_pairwise_distance(f, words, threshold, jobs) if full_rank else (None, 0, False)
    report = VerifyReport(N, k, designed_distance, distinct, expected_size, md, pairs, early,
                          time.perf_counter() - start, full_rank)
    if not full_rank:
        report.notes.append("some codewords are not full rank; distance scan skipped")
    return report


def verify_code(
    code: SubspaceCode,
    *,
    jobs: int = 1,
    full_scan: bool = False,
    guard: int = CODEWORD_GUARD,
) -> VerifyReport:
    """Materialise ``code`` and check size, distinctness and minimum distance."""
    expected = code.size_polynomial().evaluate(code.q)
    if expected > guard:
        raise ValueError(f"{expected} codewords exceed the guard of {guard}")
    words = code.materialize()
    return verify_codewords(code.field, words, code.min_distance, expected, jobs=jobs,
                            full_scan=full_scan, guard=guard, assume_rref=True)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("SUBSPACE_CODEC_JOBS", "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------------------
# proposition checks


@dataclass
class CheckResult:
    name: str
    instances: int = 0
    exhaustive: bool = True
    counterexamples: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


@dataclass
class PropositionReport:
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            mode = "exhaustive" if c.exhaustive else "sampled"
            lines.append(f"{c.name:<26} {c.instances:>9} instances ({mode})  "
                         f"{len(c.counterexamples)} counterexamples")
            for ce in c.counterexamples[:5]:
                lines.append(f"    {ce}")
        return "\n".join(lines)


def _cell_words(v: IdentifyingVector, f: GF, fixed: dict | None = None) -> np.ndarray:
    """Every RREF matrix in the Schubert cell of ``v`` (pending entries optionally fixed)."""
    code = build_ferrers_code(diagram_from_vector(v), 1, f, fixed)
    return embed_array(v, code.codewords())


def _pairs(na: int, nb: int, limit: int | None, rng, same: bool) -> tuple[np.ndarray, np.ndarray, bool]:
    total = na * (na - 1) // 2 if same else na * nb
    if limit is None or total <= limit:
        if same:
            a, b = np.triu_indices(na, 1)
        else:
            a, b = np.divmod(np.arange(na * nb), nb)
        return a, b, True
    a = rng.integers(0, na, limit)
    b = rng.integers(0, nb, limit)
    if same:
        keep = a != b
        a, b = a[keep], b[keep]
    return a, b, False


def _stack_distance(f: GF, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    k = a.shape[1]
    return 2 * batched_rank(f, np.concatenate([a, b], axis=1)) - 2 * k


def verify_propositions(
    n: int,
    k: int,
    delta: int,
    f: GF,
    samples: int | None = None,
    *,
    vectors: list[IdentifyingVector] | None = None,
    seed: int = 0,
) -> PropositionReport:
    """Check the structural facts the construction relies on.

    * same cell: ``d_S = 2 * rank`` of the difference of the non-pivot parts;
    * different cells: ``d_S >= d_H`` of the identifying vectors;
    * pending fixing: cells with a common first pivot, Hamming distance
      ``2*delta - 2`` and different pending values give ``rank[U; V] >= k + delta``.

    ``samples`` caps the pairs examined per cell or cell pair (``None`` means
    exhaustive).  Counterexamples are reported as nested lists.
    """
    rng = np.random.default_rng(seed)
    vectors = list(vectors) if vectors is not None else list(scan_order(n, k))
    cells = {v: _cell_words(v, f) for v in vectors}

    same = CheckResult("same-cell d_S = 2 d_R")
    for v, words in cells.items():
        a, b, exh = _pairs(len(words), len(words), samples, rng, True)
        if not len(a):
            continue
        same.exhaustive &= exh
        nonpiv = [c for c in range(n) if not v.bits[c]]
        ds = _stack_distance(f, words[a], words[b])
        diff = f.sub_arr(words[a][:, :, nonpiv], words[b][:, :, nonpiv])
        dr = batched_rank(f, diff)
        same.instances += len(a)
        for idx in np.flatnonzero(ds != 2 * dr)[:10]:
            same.counterexamples.append(
                {"U": words[a[idx]].tolist(), "V": words[b[idx]].tolist(),
                 "d_S": int(ds[idx]), "d_R": int(dr[idx])})

    cross = CheckResult("cross-cell d_S >= d_H")
    for v1, v2 in itertools.combinations(vectors, 2):
        w1, w2 = cells[v1], cells[v2]
        a, b, exh = _pairs(len(w1), len(w2), samples, rng, False)
        cross.exhaustive &= exh
        ds = _stack_distance(f, w1[a], w2[b])
        dh = hamming_distance(v1, v2)
        cross.instances += len(a)
        for idx in np.flatnonzero(ds < dh)[:10]:
            cross.counterexamples.append(
                {"U": w1[a[idx]].tolist(), "V": w2[b[idx]].tolist(), "d_S": int(ds[idx]), "d_H": dh})

    pend = CheckResult("pending rank >= k + delta")
    counts = {v: pending_analysis(v, delta).count for v in vectors}
    for v1, v2 in itertools.combinations(vectors, 2):
        if (v1.first_one != v2.first_one or hamming_distance(v1, v2) != 2 * delta - 2
                or counts[v1] < 1 or counts[v2] < 1):
            continue
        for mu, nu in itertools.permutations(range(f.q), 2):
            if samples is not None and (mu, nu) != (0, 1):
                continue
            w1 = _cell_words(v1, f, {(0, 0): mu})
            w2 = _cell_words(v2, f, {(0, 0): nu})
            a, b, exh = _pairs(len(w1), len(w2), samples, rng, False)
            pend.exhaustive &= exh
            r = batched_rank(f, np.concatenate([w1[a], w2[b]], axis=1))
            pend.instances += len(a)
            for idx in np.flatnonzero(r < k + delta)[:10]:
                pend.counterexamples.append(
                    {"U": w1[a[idx]].tolist(), "V": w2[b[idx]].tolist(), "rank": int(r[idx])})
    return PropositionReport([same, cross, pend])
