"""Membership tests and exhaustive enumerators for the partition families.

Families (``k >= 2`` throughout):

* ``A``  k-distinct: every value appears at most ``k-1`` times.
* ``B``  k-regular: no part divisible by ``k``.
* ``BPRIME``  k-regular with largest part ``= -1 (mod k)``.
* ``C``  largest part ``m = ki`` and values ``<= i`` appear at most ``k-1`` times.
* ``E``  largest part ``m = ki - r`` (``1 <= r <= k-1``) and values up to a
  threshold appear at most ``k-1`` times.  The threshold is ``i - 1`` for the
  ``"proof"`` variant and ``m // k - 1`` for the ``"literal"`` variant.
* ``D``  nonnegative parts, smallest value exactly twice, every other value once.

Enumeration order is lexicographically decreasing on the part tuple.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from typing import Callable, Iterator

from .partition import Partition

__all__ = [
    "Family",
    "ClassSpec",
    "ScaleBoundError",
    "DEFAULT_MAX_N",
    "max_n",
    "parse_family",
    "violation",
    "is_member",
    "iter_class",
    "enumerate_class",
    "count",
    "iter_all_partitions",
    "all_partitions",
]

DEFAULT_MAX_N = 80
EK_THRESHOLDS = ("proof", "literal")

_UNBOUNDED = 1 << 62


class Family(enum.Enum):
    A = "Ak"
    B = "Bk"
    BPRIME = "Bpk"
    C = "Ck"
    D = "D"
    E = "Ek"


_FAMILY_ALIASES = {
    "ak": Family.A, "a": Family.A,
    "bk": Family.B, "b": Family.B,
    "bpk": Family.BPRIME, "bprime": Family.BPRIME, "bprimek": Family.BPRIME, "b'k": Family.BPRIME,
    "ck": Family.C, "c": Family.C,
    "d": Family.D,
    "ek": Family.E, "e": Family.E,
}


def parse_family(name: str) -> Family:
    try:
        return _FAMILY_ALIASES[name.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown partition class {name!r}") from None


class ScaleBoundError(ValueError):
    """Requested ``n`` is beyond the configured enumeration bound."""


def max_n() -> int:
    """Enumeration bound; ``PARTLAB_MAX_N`` overrides the default of 80."""
    raw = os.environ.get("PARTLAB_MAX_N")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"PARTLAB_MAX_N must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class ClassSpec:
    family: Family
    k: int = 2
    ek_threshold: str | None = None

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", parse_family(self.family))
        if self.family is not Family.D and self.k < 2:
            raise ValueError(f"modulus k must be >= 2, got {self.k}")
        if self.family is Family.E:
            if self.ek_threshold is None:
                object.__setattr__(self, "ek_threshold", "proof")
            elif self.ek_threshold not in EK_THRESHOLDS:
                raise ValueError(f"ek_threshold must be one of {EK_THRESHOLDS}")
        elif self.ek_threshold is not None:
            raise ValueError("ek_threshold applies only to family E")

    @property
    def label(self) -> str:
        if self.family is Family.D:
            return "D"
        name = f"{_DISPLAY[self.family]}_{self.k}"
        if self.family is Family.E and self.ek_threshold == "literal":
            name += "[literal]"
        return name


_DISPLAY = {Family.A: "A", Family.B: "B", Family.BPRIME: "B'", Family.C: "C", Family.E: "E"}


def _e_threshold(m: int, k: int, variant: str) -> int:
    # m = k*i - r with 1 <= r <= k-1, so i = ceil(m / k) and m // k = i - 1
    if variant == "proof":
        return -(-m // k) - 1
    return m // k - 1


def violation(p: Partition, spec: ClassSpec) -> str | None:
    """First violated membership condition, or ``None`` when ``p`` belongs."""
    fam, k = spec.family, spec.k
    parts = p.parts
    if fam is not Family.D and parts and parts[-1] == 0:
        raise ValueError(f"zero parts are only meaningful for class D, got {parts}")
    counts = p.counts()

    if fam is Family.A:
        for v in sorted(counts):
            if counts[v] > k - 1:
                return f"value {v} appears {counts[v]} times (> {k - 1})"
        return None

    if fam is Family.B or fam is Family.BPRIME:
        for v in sorted(counts):
            if v % k == 0:
                return f"part {v} is divisible by {k}"
        if fam is Family.BPRIME:
            if not parts:
                return "empty partition has no largest part"
            if parts[0] % k != k - 1:
                return f"largest part {parts[0]} is not -1 mod {k}"
        return None

    if fam is Family.C:
        if not parts:
            return "empty partition has no largest part"
        m = parts[0]
        if m % k != 0:
            return f"largest part {m} is not divisible by {k}"
        i = m // k
        for v in sorted(counts):
            if v > i:
                break
            if counts[v] > k - 1:
                return f"value {v} <= {i} appears {counts[v]} times (> {k - 1})"
        return None

    if fam is Family.E:
        if not parts:
            return "empty partition has no largest part"
        m = parts[0]
        if m % k == 0:
            return f"largest part {m} is divisible by {k}"
        bound = _e_threshold(m, k, spec.ek_threshold)
        for v in sorted(counts):
            if v > bound:
                break
            if counts[v] > k - 1:
                return f"value {v} <= {bound} appears {counts[v]} times (> {k - 1})"
        return None

    # Family.D
    if not parts:
        return "class D partitions are nonempty"
    smallest = parts[-1]
    if counts[smallest] != 2:
        return f"smallest part {smallest} appears {counts[smallest]} times (expected 2)"
    for v in sorted(counts):
        if v != smallest and counts[v] != 1:
            return f"value {v} appears {counts[v]} times (expected 1)"
    return None


def is_member(p: Partition, spec: ClassSpec) -> bool:
    return violation(p, spec) is None


def _gen(n: int, max_part: int, cap: Callable[[int], int]) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` with parts ``<= max_part``, value ``v`` used at most ``cap(v)`` times."""
    if n < 0:
        return
    # reach[u] bounds the largest total attainable from values <= u
    top = min(n, max_part)
    reach = [0] * (top + 1)
    for u in range(1, top + 1):
        reach[u] = reach[u - 1] + u * min(cap(u), n // u)

    def rec(rest: int, hi: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        hi = min(hi, rest)
        if reach[hi] < rest:
            return
        for v in range(hi, 0, -1):
            if reach[v] < rest:
                return
            c_max = min(cap(v), rest // v)
            for c in range(c_max, 0, -1):
                head = (v,) * c
                for tail in rec(rest - c * v, v - 1):
                    yield head + tail

    yield from rec(n, top)


def _capped_below(bound: int, k: int):
    def cap(v: int) -> int:
        return k - 1 if v <= bound else _UNBOUNDED
    return cap


def _iter_with_largest(n: int, largest_values, cap_for) -> Iterator[tuple[int, ...]]:
    # largest_values must be decreasing; cap_for(m) bounds the parts below m
    for m in largest_values:
        cap = cap_for(m)
        for c in range(min(cap(m), n // m), 0, -1):
            head = (m,) * c
            for tail in _gen(n - c * m, m - 1, cap):
                yield head + tail


def _iter_d(n: int) -> list[tuple[int, ...]]:
    out = []
    # smallest value s >= 1 appears twice, larger values distinct
    for s in range(1, n // 2 + 1):
        def cap(v, s=s):
            return 1 if v > s else 0
        for tail in _gen(n - 2 * s, n, cap):
            out.append(tail + (s, s))
    for tail in _gen(n, n, lambda v: 1):
        out.append(tail + (0, 0))
    out.sort(reverse=True)
    return out


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    bound = max_n()
    if n > bound:
        raise ScaleBoundError(f"n={n} exceeds the scale bound {bound} (set PARTLAB_MAX_N to change)")


def _iter_tuples(spec: ClassSpec, n: int) -> Iterator[tuple[int, ...]]:
    fam, k = spec.family, spec.k
    if fam is Family.A:
        return _gen(n, n, lambda v: k - 1)
    if fam is Family.B:
        return _gen(n, n, lambda v: 0 if v % k == 0 else _UNBOUNDED)
    if fam is Family.BPRIME:
        capb = lambda v: 0 if v % k == 0 else _UNBOUNDED  # noqa: E731
        top = n - (n + 1) % k  # largest m <= n with m = -1 (mod k)
        return _iter_with_largest(n, range(top, 0, -k), lambda m: capb)
    if fam is Family.C:
        top = n - n % k
        return _iter_with_largest(n, range(top, 0, -k), lambda m: _capped_below(m // k, k))
    if fam is Family.E:
        largest = [m for m in range(n, 0, -1) if m % k]
        variant = spec.ek_threshold
        return _iter_with_largest(n, largest, lambda m: _capped_below(_e_threshold(m, k, variant), k))
    return iter(_iter_d(n))


def iter_class(spec: ClassSpec, n: int) -> Iterator[Partition]:
    """Members of ``spec`` with weight ``n`` in lexicographically decreasing order."""
    _check_n(n)
    zero = spec.family is Family.D
    for parts in _iter_tuples(spec, n):
        yield Partition._trusted(parts, zero)


def enumerate_class(spec: ClassSpec, n: int) -> list[Partition]:
    return list(iter_class(spec, n))


def count(spec: ClassSpec, n: int) -> int:
    """Number of members of weight ``n`` (cardinality of the enumeration)."""
    _check_n(n)
    return sum(1 for _ in _iter_tuples(spec, n))


def iter_all_partitions(n: int) -> Iterator[Partition]:
    """Every partition of ``n`` into positive parts, lexicographically decreasing."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    for parts in _gen(n, n, lambda v: _UNBOUNDED):
        yield Partition._trusted(parts)


def all_partitions(n: int) -> list[Partition]:
    return list(iter_all_partitions(n))
