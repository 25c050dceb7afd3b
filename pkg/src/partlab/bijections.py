"""Constructive maps between the partition families, with audit traces.

``psi``/``psi_inv`` connect E_k(n) and B_k(n); ``phi``/``phi_inv`` connect
C_k(n+1) and B'_k(n); the Glaisher pair connects A_k(n) and B_k(n).  Every
map has a ``*_trace`` form returning a :class:`BijectionTrace`; the plain
form returns only the image.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Union

from .classes import ClassSpec, Family, violation
from .partition import Partition, format_partition

__all__ = [
    "DomainError",
    "AlphaStep",
    "BetaStep",
    "LargestPartStep",
    "MergeStep",
    "BijectionTrace",
    "k_free_decomposition",
    "base_k_digits",
    "alpha_split",
    "beta_regroup",
    "psi",
    "psi_inv",
    "phi",
    "phi_inv",
    "glaisher_to_regular",
    "glaisher_to_distinct",
    "psi_trace",
    "psi_inv_trace",
    "phi_trace",
    "phi_inv_trace",
    "glaisher_to_regular_trace",
    "glaisher_to_distinct_trace",
    "BIJECTIONS",
]


class DomainError(ValueError):
    """A map was applied outside the family it is defined on."""

    def __init__(self, map_name: str, spec: ClassSpec, p: Partition, reason: str):
        self.map_name = map_name
        self.spec = spec
        self.partition = p
        self.reason = reason
        super().__init__(f"{map_name}: ({format_partition(p)}) is not in {spec.label}: {reason}")


@dataclass(frozen=True)
class AlphaStep:
    """Part ``source = k**power * kfree`` split into ``k**power`` copies of ``kfree``."""

    source: int
    power: int
    kfree: int
    emitted: Partition

    def to_dict(self) -> dict:
        return {
            "kind": "alpha",
            "source": self.source,
            "power": self.power,
            "kfree": self.kfree,
            "emitted": list(self.emitted.parts),
        }


@dataclass(frozen=True)
class BetaStep:
    """Block ``value**multiplicity`` regrouped by the base-k digits of the multiplicity."""

    value: int
    multiplicity: int
    digits: tuple[int, ...]
    threshold_exponent: int
    emitted: Partition

    def to_dict(self) -> dict:
        return {
            "kind": "beta",
            "source": self.value,
            "multiplicity": self.multiplicity,
            "digits": list(self.digits),
            "threshold_exponent": self.threshold_exponent,
            "emitted": list(self.emitted.parts),
        }


@dataclass(frozen=True)
class LargestPartStep:
    """One copy of the largest part mapped to the single part ``target``."""

    source: int
    target: int
    emitted: Partition

    def to_dict(self) -> dict:
        return {
            "kind": "largest",
            "source": self.source,
            "target": self.target,
            "emitted": list(self.emitted.parts),
        }


@dataclass(frozen=True)
class MergeStep:
    """``merged_groups`` groups of ``k`` copies of ``value`` become parts ``merged_into``."""

    value: int
    multiplicity: int
    merged_groups: int
    merged_into: int
    emitted: Partition

    def to_dict(self) -> dict:
        return {
            "kind": "merge",
            "source": self.value,
            "multiplicity": self.multiplicity,
            "merged_groups": self.merged_groups,
            "merged_into": self.merged_into,
            "emitted": list(self.emitted.parts),
        }


Step = Union[AlphaStep, BetaStep, LargestPartStep, MergeStep]


@dataclass(frozen=True)
class BijectionTrace:
    map_name: str
    direction: str
    k: int
    input: Partition
    steps: tuple[Step, ...] = field(default_factory=tuple)
    output: Partition = Partition()

    @property
    def emitted_weight(self) -> int:
        return sum(s.emitted.weight for s in self.steps)

    def to_dict(self) -> dict:
        return {
            "map": self.map_name,
            "direction": self.direction,
            "k": self.k,
            "input": list(self.input.parts),
            "steps": [s.to_dict() for s in self.steps],
            "output": list(self.output.parts),
            "weight": {
                "input": self.input.weight,
                "emitted": self.emitted_weight,
                "output": self.output.weight,
            },
        }


def k_free_decomposition(t: int, k: int) -> tuple[int, int]:
    """Return ``(a, b)`` with ``t == k**a * b`` and ``k`` not dividing ``b``."""
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    a = 0
    while t % k == 0:
        t //= k
        a += 1
    return a, t


def base_k_digits(f: int, k: int) -> tuple[int, ...]:
    """Digits ``f_0, f_1, ...`` of ``f`` in base ``k``, least significant first."""
    if f < 0:
        raise ValueError("f must be nonnegative")
    digits = []
    while f:
        f, d = divmod(f, k)
        digits.append(d)
    return tuple(digits) or (0,)


def _alpha_step(t: int, k: int) -> AlphaStep:
    a, b = k_free_decomposition(t, k)
    return AlphaStep(t, a, b, Partition._trusted((b,) * k**a))


def alpha_split(t: int, k: int) -> Partition:
    """``k**a`` copies of ``b`` where ``t = k**a * b``."""
    return _alpha_step(t, k).emitted


def _threshold_exponent(s: int, i: int, k: int, strict: bool) -> int:
    t, v = 0, s
    while (v <= i) if strict else (v < i):
        v *= k
        t += 1
    return t


def _beta_step(s: int, f: int, i: int, k: int, strict: bool) -> BetaStep:
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if s < 1 or s % k == 0:
        raise ValueError(f"beta needs a positive part not divisible by {k}, got {s}")
    if f < 1:
        raise ValueError(f"multiplicity must be positive, got {f}")
    if i < 1:
        raise ValueError(f"threshold base must be positive, got {i}")
    digits = base_k_digits(f, k)
    t = _threshold_exponent(s, i, k, strict)
    parts: list[int] = []
    top = f // k**t  # sum_j k**j * f_{t+j}
    parts.extend([k**t * s] * top)
    for j in range(min(t, len(digits)) - 1, -1, -1):
        parts.extend([k**j * s] * digits[j])
    return BetaStep(s, f, digits, t, Partition._trusted(tuple(parts)))


def beta_regroup(s: int, f: int, i: int, k: int, strict: bool = False) -> Partition:
    """Regroup ``s**f`` by the base-k digits of ``f``.

    With ``t`` the least ``j >= 0`` such that ``k**j * s >= i`` (``> i`` when
    ``strict``), digit ``f_j`` for ``j < t`` becomes ``f_j`` copies of
    ``k**j * s`` and all higher digits collapse into ``f // k**t`` copies of
    ``k**t * s``.  The weight ``f * s`` is preserved.
    """
    return _beta_step(s, f, i, k, strict).emitted


def _require(map_name: str, p: Partition, spec: ClassSpec) -> None:
    if not isinstance(p, Partition):
        raise TypeError(f"{map_name} expects a Partition, got {type(p).__name__}")
    if p.allow_zero and p.parts and p.parts[-1] == 0:
        raise DomainError(map_name, spec, p, "zero parts are not allowed")
    reason = violation(p, spec)
    if reason is not None:
        raise DomainError(map_name, spec, p, reason)


def _union_steps(steps) -> Partition:
    parts: list[int] = []
    for s in steps:
        parts.extend(s.emitted.parts)
    parts.sort(reverse=True)
    return Partition._trusted(tuple(parts))


def psi_trace(lam: Partition, k: int) -> BijectionTrace:
    _require("psi", lam, ClassSpec(Family.E, k, "proof"))
    steps = tuple(_alpha_step(t, k) for t in lam.parts)
    return BijectionTrace("psi", "forward", k, lam, steps, _union_steps(steps))


def psi_inv_trace(mu: Partition, k: int) -> BijectionTrace:
    spec = ClassSpec(Family.B, k)
    _require("psi_inv", mu, spec)
    if not mu.parts:
        raise DomainError("psi_inv", spec, mu, "the map is defined for n >= 1")
    i = -(-mu.parts[0] // k)  # largest part = k*i - r
    counts = Counter(mu.parts)
    steps = tuple(_beta_step(s, counts[s], i, k, False) for s in sorted(counts))
    return BijectionTrace("psi", "inverse", k, mu, steps, _union_steps(steps))


def phi_trace(lam: Partition, k: int) -> BijectionTrace:
    _require("phi", lam, ClassSpec(Family.C, k))
    top = lam.parts[0]
    steps: list[Step] = [LargestPartStep(top, top - 1, Partition._trusted((top - 1,)))]
    steps.extend(_alpha_step(t, k) for t in lam.parts[1:])
    return BijectionTrace("phi", "forward", k, lam, tuple(steps), _union_steps(steps))


def phi_inv_trace(mu: Partition, k: int) -> BijectionTrace:
    _require("phi_inv", mu, ClassSpec(Family.BPRIME, k))
    top = mu.parts[0]
    i = (top + 1) // k
    steps: list[Step] = [LargestPartStep(top, k * i, Partition._trusted((k * i,)))]
    # remaining copies of the largest part stay in nu and are regrouped with it
    rest = Counter(mu.parts[1:])
    steps.extend(_beta_step(s, rest[s], i, k, True) for s in sorted(rest))
    return BijectionTrace("phi", "inverse", k, mu, tuple(steps), _union_steps(steps))


def glaisher_to_regular_trace(lam: Partition, k: int) -> BijectionTrace:
    _require("glaisher_to_regular", lam, ClassSpec(Family.A, k))
    steps = tuple(_alpha_step(t, k) for t in lam.parts)
    return BijectionTrace("glaisher", "forward", k, lam, steps, _union_steps(steps))


def glaisher_to_distinct_trace(mu: Partition, k: int) -> BijectionTrace:
    _require("glaisher_to_distinct", mu, ClassSpec(Family.B, k))
    counts = Counter(mu.parts)
    steps = []
    # increasing order: when v is reached, nothing smaller can still feed it
    while counts:
        v = min(counts)
        f = counts.pop(v)
        groups, keep = divmod(f, k)
        if groups:
            counts[k * v] += groups
        steps.append(MergeStep(v, f, groups, k * v, Partition._trusted((v,) * keep)))
    steps = tuple(steps)
    return BijectionTrace("glaisher", "inverse", k, mu, steps, _union_steps(steps))


def psi(lam: Partition, k: int) -> Partition:
    """Split every part of an E_k partition into its k-free pieces."""
    return psi_trace(lam, k).output


def psi_inv(mu: Partition, k: int) -> Partition:
    return psi_inv_trace(mu, k).output


def phi(lam: Partition, k: int) -> Partition:
    """C_k(n+1) -> B'_k(n): the largest part ``ki`` drops to ``ki - 1``, the rest split."""
    return phi_trace(lam, k).output


def phi_inv(mu: Partition, k: int) -> Partition:
    return phi_inv_trace(mu, k).output


def glaisher_to_regular(lam: Partition, k: int) -> Partition:
    return glaisher_to_regular_trace(lam, k).output


def glaisher_to_distinct(mu: Partition, k: int) -> Partition:
    """Merge ``k`` equal parts into one until every multiplicity is below ``k``."""
    return glaisher_to_distinct_trace(mu, k).output


# name -> trace function, as exposed on the command line
BIJECTIONS = {
    "psi": psi_trace,
    "psi-inv": psi_inv_trace,
    "phi": phi_trace,
    "phi-inv": phi_inv_trace,
    "glaisher": glaisher_to_regular_trace,
    "glaisher-inv": glaisher_to_distinct_trace,
}
