"""Truncated integer power series in ``q`` and the generating functions for B'_k and C_k.

All arithmetic is on Python ints, so coefficients never overflow.  A series of
order ``N`` is known modulo ``q**(N+1)``; combining two series truncates to
the smaller order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "TruncatedSeries",
    "series",
    "one",
    "monomial",
    "mul",
    "add",
    "invert",
    "poch",
    "gf_Bprime",
    "gf_C",
    "gf_A",
    "gf_B",
    "first_difference",
    "Discrepancy",
    "TelescopingResult",
    "verify_telescoping",
    "SERIES",
]

DEFAULT_ORDER = 50


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def shift(self, m: int) -> TruncatedSeries:
        """Multiply by ``q**m`` keeping the order."""
        if m < 0:
            raise ValueError("shift must be nonnegative")
        n = self.order
        return TruncatedSeries(((0,) * m + self.coeffs)[: n + 1])

    def __add__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries((other,) + (0,) * self.order)
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries((other,) + (0,) * self.order)
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(tuple(other * c for c in self.coeffs))
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: TruncatedSeries) -> TruncatedSeries:
        return mul(self, invert(other))

    def __repr__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if n == 0 else f"{c}*q^{n}")
        body = " + ".join(terms) or "0"
        return f"TruncatedSeries({body} + O(q^{self.order + 1}))"


def series(coeffs: Iterable[int], order: int | None = None) -> TruncatedSeries:
    """Series from leading coefficients, zero-padded (or cut) to ``order``."""
    cs = [int(c) for c in coeffs]
    if order is None:
        order = max(len(cs) - 1, 0)
    cs = (cs + [0] * (order + 1))[: order + 1]
    return TruncatedSeries(tuple(cs))


def one(order: int) -> TruncatedSeries:
    return series([1], order)


def monomial(m: int, order: int, coeff: int = 1) -> TruncatedSeries:
    """``coeff * q**m``; vanishes when ``m > order``."""
    cs = [0] * (order + 1)
    if m <= order:
        cs[m] = coeff
    return TruncatedSeries(tuple(cs))


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(tuple(a.coeffs[j] + b.coeffs[j] for j in range(n + 1)))


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    out = [0] * (n + 1)
    ac, bc = a.coeffs, b.coeffs
    for i in range(n + 1):
        ai = ac[i]
        if ai:
            for j in range(n + 1 - i):
                out[i + j] += ai * bc[j]
    return TruncatedSeries(tuple(out))


def invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; the constant term must be 1 or -1."""
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise ZeroDivisionError(f"series with constant term {c0} is not a unit over the integers")
    n = a.order
    b = [0] * (n + 1)
    b[0] = c0
    for m in range(1, n + 1):
        acc = 0
        for j in range(1, m + 1):
            acc += a.coeffs[j] * b[m - j]
        b[m] = -c0 * acc
    return TruncatedSeries(tuple(b))


def poch(c: int, step: int, count: int, order: int) -> TruncatedSeries:
    """``prod_{j<count} (1 - q**(c + j*step))`` modulo ``q**(order+1)``.

    ``poch(1, 1, m, N)`` is ``(q;q)_m``; ``poch(k, k, m, N)`` is ``(q^k;q^k)_m``;
    ``poch(i+1, 1, m, N)`` is ``(q^{i+1};q)_m``.
    """
    if c < 1 or step < 1:
        raise ValueError("poch needs positive exponent and step")
    if count < 0:
        raise ValueError("count must be nonnegative")
    cs = [0] * (order + 1)
    cs[0] = 1
    for j in range(count):
        e = c + j * step
        if e > order:
            break
        for n in range(order, e - 1, -1):
            cs[n] -= cs[n - e]
    return TruncatedSeries(tuple(cs))


def _bprime_term(k: int, i: int, order: int) -> TruncatedSeries:
    # (q^k;q^k)_{i-1} q^{ki-1} / (q;q)_{ki-1}
    num = poch(k, k, i - 1, order).shift(k * i - 1)
    return num / poch(1, 1, k * i - 1, order)


def _c_term(k: int, i: int, order: int) -> TruncatedSeries:
    # (q^k;q^k)_i / (q;q)_i * q^{ki} / (q^{i+1};q)_{(k-1)i}
    num = poch(k, k, i, order).shift(k * i)
    den = mul(poch(1, 1, i, order), poch(i + 1, 1, (k - 1) * i, order))
    return num / den


def _merged_term(k: int, i: int, order: int) -> TruncatedSeries:
    # (q^k;q^k)_i q^{ki} / (q;q)_{ki}
    return poch(k, k, i, order).shift(k * i) / poch(1, 1, k * i, order)


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")


def gf_Bprime(k: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Generating function of B'_k: sum over the largest part ``ki - 1``."""
    _check_k(k)
    total = series([0], order)
    i = 1
    while k * i - 1 <= order:
        total = total + _bprime_term(k, i, order)
        i += 1
    return total


def gf_C(k: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Generating function of C_k including the constant 1 from ``i = 0``."""
    _check_k(k)
    total = series([0], order)
    i = 0
    while k * i <= order:
        total = total + _c_term(k, i, order)
        i += 1
    return total


def gf_B(k: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``prod_{k does not divide j} 1/(1 - q**j)``."""
    _check_k(k)
    den = one(order)
    for j in range(1, order + 1):
        if j % k:
            den = mul(den, poch(j, 1, 1, order))
    return invert(den)


def gf_A(k: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``prod_j (1 - q**(kj)) / (1 - q**j)``."""
    _check_k(k)
    return poch(k, k, order // k + 1, order) / poch(1, 1, order, order)


def first_difference(a: Sequence[int], b: Sequence[int]) -> int | None:
    """Index of the first differing coefficient over the common length, else ``None``."""
    for n, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return n
    return None


@dataclass(frozen=True)
class Discrepancy:
    check: str
    i: int | None
    n: int
    lhs: int
    rhs: int

    def __str__(self) -> str:
        where = "" if self.i is None else f" (i={self.i})"
        return f"{self.check}{where}: coefficient of q^{self.n} is {self.lhs} vs {self.rhs}"


@dataclass(frozen=True)
class TelescopingResult:
    k: int
    order: int
    checks_run: int
    discrepancy: Discrepancy | None

    @property
    def passed(self) -> bool:
        return self.discrepancy is None

    def __bool__(self) -> bool:
        return self.passed


def verify_telescoping(
    k: int,
    order: int = DEFAULT_ORDER,
    bprime: TruncatedSeries | None = None,
    c_series: TruncatedSeries | None = None,
) -> TelescopingResult:
    """Check the series manipulation relating B'_k and C_k term by term.

    (a) for each ``i >= 1`` the B'_k summand times ``q`` equals
        ``(q^k;q^k)_i q^{ki} / (q;q)_{ki}``;
    (b) ``q * gf_Bprime == gf_C - 1``;
    (c) for each ``i >= 0`` the C_k summand equals the same merged term.

    ``bprime`` and ``c_series`` replace the computed series in (b), which is
    how a perturbed input is shown to be caught.
    """
    _check_k(k)
    checks = 0

    def compare(name, i, lhs, rhs):
        nonlocal checks
        checks += 1
        n = first_difference(lhs, rhs)
        if n is None:
            return None
        return Discrepancy(name, i, n, lhs[n], rhs[n])

    i = 1
    while k * i <= order:
        lhs = poch(k, k, i - 1, order).shift(k * i) / poch(1, 1, k * i - 1, order)
        bad = compare("bprime-summand", i, lhs, _merged_term(k, i, order))
        if bad:
            return TelescopingResult(k, order, checks, bad)
        i += 1

    bp = gf_Bprime(k, order) if bprime is None else bprime
    cs = gf_C(k, order) if c_series is None else c_series
    bad = compare("shifted-sum", None, bp.shift(1), cs - 1)
    if bad:
        return TelescopingResult(k, order, checks, bad)

    i = 0
    while k * i <= order:
        bad = compare("c-summand", i, _c_term(k, i, order), _merged_term(k, i, order))
        if bad:
            return TelescopingResult(k, order, checks, bad)
        i += 1
    return TelescopingResult(k, order, checks, None)


# CLI selector -> builder(k, order)
SERIES = {
    "A": gf_A,
    "B": gf_B,
    "Bprime": gf_Bprime,
    "C": gf_C,
}
