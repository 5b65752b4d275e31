"""Truncated formal power series with exact rational coefficients.

One and two variable versions, truncated per variable at a fixed order
(inclusive).  Coefficients are fractions.Fraction throughout; no floats ever
enter, so equality is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

Scalar = Union[int, Fraction]


def _frac(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction coefficient, got {type(x).__name__}")


class TruncatedSeries1:
    """Univariate series sum_{k<=order} c_k t^k, exact rationals."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[Scalar] = ()):
        if order < 0:
            raise ValueError(f"series order must be >= 0, got {order}")
        if len(coeffs) > order + 1:
            raise ValueError(f"{len(coeffs)} coefficients exceed order {order}")
        cs = [_frac(c) for c in coeffs]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries1":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries1":
        return cls(order, [1])

    @classmethod
    def monomial(cls, order: int, degree: int, coeff: Scalar = 1) -> "TruncatedSeries1":
        if not 0 <= degree <= order:
            raise ValueError(f"monomial degree {degree} outside truncation order {order}")
        cs = [Fraction(0)] * (degree + 1)
        cs[degree] = _frac(coeff)
        return cls(order, cs)

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise ValueError(f"coefficient index {k} outside truncation order {self.order}")
        return self.coeffs[k]

    def _check_order(self, other: "TruncatedSeries1") -> None:
        if self.order != other.order:
            raise ValueError(f"series order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries1") -> "TruncatedSeries1":
        self._check_order(other)
        return TruncatedSeries1(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "TruncatedSeries1") -> "TruncatedSeries1":
        self._check_order(other)
        return TruncatedSeries1(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "TruncatedSeries1":
        return TruncatedSeries1(self.order, [-a for a in self.coeffs])

    def scalar_mul(self, c: Scalar) -> "TruncatedSeries1":
        c = _frac(c)
        return TruncatedSeries1(self.order, [c * a for a in self.coeffs])

    def __mul__(self, other: "TruncatedSeries1 | Scalar") -> "TruncatedSeries1":
        if isinstance(other, (int, Fraction)):
            return self.scalar_mul(other)
        self._check_order(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries1(n, out)

    def __rmul__(self, other: Scalar) -> "TruncatedSeries1":
        return self.scalar_mul(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries1):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
                continue
            t = "t" if k == 1 else f"t^{k}"
            parts.append(t if c == 1 else f"{c}*{t}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"TruncatedSeries1(order={self.order}, {self})"

    def to_json_obj(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}


def expand_rational(numer: Sequence[Scalar], denom: Sequence[Scalar], order: int) -> TruncatedSeries1:
    """Series of the rational function numer(t)/denom(t) to the given order.

    Coefficient lists are ascending; denom must have a nonzero constant term.
    Long division recurrence: c_k = (a_k - sum_{j>=1} b_j c_{k-j}) / b_0.
    """
    a = [_frac(x) for x in numer]
    b = [_frac(x) for x in denom]
    if not b or not b[0]:
        raise ValueError("expand_rational: denominator needs a nonzero constant term")
    out: list[Fraction] = []
    for k in range(order + 1):
        acc = a[k] if k < len(a) else Fraction(0)
        for j in range(1, min(k, len(b) - 1) + 1):
            acc -= b[j] * out[k - j]
        out.append(acc / b[0])
    return TruncatedSeries1(order, out)


def log1p_series(u: TruncatedSeries1) -> TruncatedSeries1:
    """log(1 + u) for a series u with zero constant term."""
    if u.coeffs[0]:
        raise ValueError("log1p_series: argument must have zero constant term")
    n = u.order
    acc = TruncatedSeries1.zero(n)
    power = TruncatedSeries1.one(n)
    for k in range(1, n + 1):
        power = power * u
        if power.is_zero():
            break
        acc = acc + power.scalar_mul(Fraction((-1) ** (k + 1), k))
    return acc


def exp_series(u: TruncatedSeries1) -> TruncatedSeries1:
    """exp(u) for a series u with zero constant term."""
    if u.coeffs[0]:
        raise ValueError("exp_series: argument must have zero constant term")
    n = u.order
    acc = TruncatedSeries1.one(n)
    power = TruncatedSeries1.one(n)
    fact = 1
    for k in range(1, n + 1):
        power = power * u
        if power.is_zero():
            break
        fact *= k
        acc = acc + power.scalar_mul(Fraction(1, fact))
    return acc


class TruncatedSeries2:
    """Bivariate series sum c_{p,m} s^p t^m truncated per variable.

    grid[p][m] is the coefficient of s^p t^m.
    """

    __slots__ = ("s_order", "t_order", "grid")

    def __init__(self, s_order: int, t_order: int, grid: Sequence[Sequence[Scalar]] = ()):
        if s_order < 0 or t_order < 0:
            raise ValueError("series orders must be >= 0")
        rows: list[tuple[Fraction, ...]] = []
        for p in range(s_order + 1):
            src = grid[p] if p < len(grid) else ()
            if len(src) > t_order + 1:
                raise ValueError("grid row longer than t truncation order")
            row = [_frac(c) for c in src]
            row.extend([Fraction(0)] * (t_order + 1 - len(row)))
            rows.append(tuple(row))
        if len(grid) > s_order + 1:
            raise ValueError("grid has more rows than s truncation order")
        self.s_order = s_order
        self.t_order = t_order
        self.grid = tuple(rows)

    @classmethod
    def zero(cls, s_order: int, t_order: int) -> "TruncatedSeries2":
        return cls(s_order, t_order)

    @classmethod
    def one(cls, s_order: int, t_order: int) -> "TruncatedSeries2":
        return cls(s_order, t_order, [[1]])

    @classmethod
    def outer(cls, s_part: TruncatedSeries1, t_part: TruncatedSeries1) -> "TruncatedSeries2":
        """Product f(s)*g(t) laid out on the grid."""
        grid = [[a * b for b in t_part.coeffs] for a in s_part.coeffs]
        return cls(s_part.order, t_part.order, grid)

    def coefficient(self, p: int, m: int) -> Fraction:
        if not (0 <= p <= self.s_order and 0 <= m <= self.t_order):
            raise ValueError(f"coefficient ({p},{m}) outside truncation ({self.s_order},{self.t_order})")
        return self.grid[p][m]

    def _check_orders(self, other: "TruncatedSeries2") -> None:
        if (self.s_order, self.t_order) != (other.s_order, other.t_order):
            raise ValueError("series order mismatch")

    def __add__(self, other: "TruncatedSeries2") -> "TruncatedSeries2":
        self._check_orders(other)
        grid = [
            [a + b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.grid, other.grid)
        ]
        return TruncatedSeries2(self.s_order, self.t_order, grid)

    def __sub__(self, other: "TruncatedSeries2") -> "TruncatedSeries2":
        return self + other.scalar_mul(-1)

    def scalar_mul(self, c: Scalar) -> "TruncatedSeries2":
        c = _frac(c)
        return TruncatedSeries2(self.s_order, self.t_order, [[c * a for a in row] for row in self.grid])

    def __mul__(self, other: "TruncatedSeries2 | Scalar") -> "TruncatedSeries2":
        if isinstance(other, (int, Fraction)):
            return self.scalar_mul(other)
        self._check_orders(other)
        ns, nt = self.s_order, self.t_order
        out = [[Fraction(0)] * (nt + 1) for _ in range(ns + 1)]
        for p1 in range(ns + 1):
            row1 = self.grid[p1]
            for m1 in range(nt + 1):
                a = row1[m1]
                if not a:
                    continue
                for p2 in range(ns + 1 - p1):
                    row2 = other.grid[p2]
                    for m2 in range(nt + 1 - m1):
                        b = row2[m2]
                        if b:
                            out[p1 + p2][m1 + m2] += a * b
        return TruncatedSeries2(ns, nt, out)

    def __rmul__(self, other: Scalar) -> "TruncatedSeries2":
        return self.scalar_mul(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries2):
            return NotImplemented
        return (self.s_order, self.t_order, self.grid) == (other.s_order, other.t_order, other.grid)

    def __hash__(self) -> int:
        return hash((self.s_order, self.t_order, self.grid))

    def __str__(self) -> str:
        parts = []
        for p, row in enumerate(self.grid):
            for m, c in enumerate(row):
                if not c:
                    continue
                factors = []
                if c != 1 or (p == 0 and m == 0):
                    factors.append(str(c))
                if p:
                    factors.append("s" if p == 1 else f"s^{p}")
                if m:
                    factors.append("t" if m == 1 else f"t^{m}")
                parts.append("*".join(factors))
        return " + ".join(parts) if parts else "0"

    def to_json_obj(self) -> dict:
        return {
            "s_order": self.s_order,
            "t_order": self.t_order,
            "coeffs": [[str(c) for c in row] for row in self.grid],
        }
