"""Immutable integer partitions and the multiset operations used by the maps."""

from __future__ import annotations

import re
from collections import Counter
from typing import Iterable

__all__ = [
    "Partition",
    "FrequencyView",
    "from_parts",
    "frequency",
    "union",
    "largest_part",
    "num_parts",
    "weight",
    "frequency_view",
    "expand",
    "parse_partition",
    "format_partition",
]

FrequencyView = tuple[tuple[int, int], ...]


class Partition:
    """A weakly decreasing tuple of parts with its weight cached.

    Zero parts are rejected unless ``allow_zero`` is set; only the
    nonnegative-parts family needs them.
    """

    __slots__ = ("parts", "weight", "allow_zero")

    parts: tuple[int, ...]
    weight: int
    allow_zero: bool

    def __init__(self, parts: Iterable[int] = (), allow_zero: bool = False) -> None:
        values = tuple(parts)
        for v in values:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"parts must be integers, got {v!r}")
            if v < 0:
                raise ValueError(f"negative part {v}")
            if v == 0 and not allow_zero:
                raise ValueError("zero part given but allow_zero is unset")
        values = tuple(sorted(values, reverse=True))
        object.__setattr__(self, "parts", values)
        object.__setattr__(self, "weight", sum(values))
        object.__setattr__(self, "allow_zero", bool(allow_zero))

    @classmethod
    def _trusted(cls, parts: tuple[int, ...], allow_zero: bool = False) -> Partition:
        # caller guarantees ``parts`` is already weakly decreasing and valid
        self = object.__new__(cls)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "weight", sum(parts))
        object.__setattr__(self, "allow_zero", allow_zero)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __delattr__(self, name):
        raise AttributeError("Partition is immutable")

    def __reduce__(self):
        return (Partition, (self.parts, self.allow_zero))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: Partition) -> bool:
        return self.parts < other.parts

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, idx):
        return self.parts[idx]

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def __str__(self) -> str:
        return format_partition(self)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def counts(self) -> Counter:
        return Counter(self.parts)


def from_parts(values: Iterable[int], allow_zero: bool = False) -> Partition:
    """Build a partition from parts in any order."""
    return Partition(values, allow_zero=allow_zero)


def frequency(p: Partition, t: int) -> int:
    """Multiplicity of the value ``t`` in ``p``."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return p.parts.count(t)


def union(a: Partition, b: Partition) -> Partition:
    """Multiset union: multiplicities add, weights add."""
    if a.allow_zero != b.allow_zero:
        raise ValueError("cannot union partitions with different zero-part flags")
    merged = tuple(sorted(a.parts + b.parts, reverse=True))
    return Partition._trusted(merged, a.allow_zero)


def largest_part(p: Partition) -> int:
    return p.largest


def num_parts(p: Partition) -> int:
    return len(p.parts)


def weight(p: Partition) -> int:
    return p.weight


def frequency_view(p: Partition) -> FrequencyView:
    """``(value, multiplicity)`` pairs in increasing value order."""
    return tuple(sorted(Counter(p.parts).items()))


def expand(view: FrequencyView, allow_zero: bool = False) -> Partition:
    parts = []
    for value, mult in view:
        if mult < 1:
            raise ValueError(f"multiplicity of {value} must be positive")
        parts.extend([value] * mult)
    return Partition(parts, allow_zero=allow_zero)


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


def parse_partition(text: str, allow_zero: bool = False) -> Partition:
    """Parse ``"7,6,6,3"`` or exponent form such as ``"8,2^2,1^14"``.

    An empty or blank string is the empty partition.
    """
    text = text.strip()
    if text in ("", "()", "empty"):
        return Partition((), allow_zero=allow_zero)
    text = text.strip("()")
    parts: list[int] = []
    for token in text.split(","):
        m = _TOKEN.match(token)
        if m is None:
            raise ValueError(f"malformed partition token {token.strip()!r}")
        value = int(m.group(1))
        reps = int(m.group(2)) if m.group(2) is not None else 1
        parts.extend([value] * reps)
    return Partition(parts, allow_zero=allow_zero)


def format_partition(p: Partition, compact: bool = False) -> str:
    """Comma-separated parts, largest first; ``compact`` uses ``v^m`` for repeats."""
    if not compact:
        return ",".join(str(v) for v in p.parts)
    out = []
    for value, mult in reversed(frequency_view(p)):
        out.append(str(value) if mult == 1 else f"{value}^{mult}")
    return ",".join(out)
