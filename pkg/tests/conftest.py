"""Shared brute-force oracles, kept independent of the package's enumerators."""

from __future__ import annotations

from collections import Counter

import pytest

_ACCEPTANCE_KEY = pytest.StashKey[list]()


def brute_partitions(n, largest=None):
    """All partitions of n as decreasing tuples (plain recursion, no pruning)."""
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in brute_partitions(n - first, first):
            out.append((first,) + rest)
    return out


def oracle_member(parts, family, k=2, variant="proof"):
    """Class membership written straight from the definitions."""
    c = Counter(parts)
    m = max(parts) if parts else None
    if family == "A":
        return all(v <= k - 1 for v in c.values())
    if family == "B":
        return all(p % k for p in parts)
    if family == "Bp":
        return m is not None and all(p % k for p in parts) and (m + 1) % k == 0
    if family == "C":
        if m is None or m % k:
            return False
        return all(c[v] <= k - 1 for v in range(1, m // k + 1))
    if family == "E":
        if m is None or m % k == 0:
            return False
        i = (m + k - 1) // k
        limit = i - 1 if variant == "proof" else m // k - 1
        return all(c[v] <= k - 1 for v in range(1, limit + 1))
    raise ValueError(family)


def brute_d(n):
    """Class D by brute force: positive partitions of n, optionally with two zeros appended."""
    out = []
    for p in brute_partitions(n):
        for zeros in (0, 1, 2, 3):
            q = p + (0,) * zeros
            if not q:
                continue
            c = Counter(q)
            s = min(q)
            if c[s] == 2 and all(v == 1 for x, v in c.items() if x != s):
                out.append(q)
    return sorted(out, reverse=True)


@pytest.fixture
def acceptance_log(request):
    log = request.config.stash.setdefault(_ACCEPTANCE_KEY, [])
    return log.append


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
