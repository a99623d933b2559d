from __future__ import annotations

import itertools

import numpy as np
import pytest

ACCEPTANCE_LINES: list[str] = []


def record_criterion(label: str, checks: list[tuple[str, bool, str]]) -> None:
    """Store one summary line for an acceptance criterion and fail if any check failed."""
    ok = all(passed for _, passed, _ in checks)
    details = "; ".join(f"{name}: {'ok' if passed else 'FAIL'} ({info})" for name, passed, info in checks)
    line = f"{'PASS' if ok else 'FAIL'}  {label}  -- {details}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    failed = [f"{name} ({info})" for name, passed, info in checks if not passed]
    assert not failed, "failed checks: " + ", ".join(failed)


@pytest.fixture
def criterion():
    return record_criterion


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


# ---------------------------------------------------------------------------------------
# independent oracles (no use of the library's elimination code)


def span_set(f, rows) -> set[tuple[int, ...]]:
    """Every GF(q)-combination of ``rows``, via the field's scalar ops only."""
    rows = [list(map(int, r)) for r in rows]
    n = len(rows[0]) if rows else 0
    out = set()
    for coeffs in itertools.product(range(f.q), repeat=len(rows)):
        vec = [0] * n
        for c, row in zip(coeffs, rows):
            if c:
                vec = [f.add(a, f.mul(c, b)) for a, b in zip(vec, row)]
        out.add(tuple(vec))
    return out


def rank_by_span(f, rows) -> int:
    size = len(span_set(f, rows))
    r = 0
    while f.q**r < size:
        r += 1
    assert f.q**r == size
    return r


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
