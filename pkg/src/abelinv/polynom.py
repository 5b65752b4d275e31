"""Multivariate integer polynomials and exact cyclotomic integer arithmetic.

IntPolynomial stores terms as {exponent tuple: int coefficient} with zero
coefficients dropped, which is the shape the permanent and determinant
kernels want.  CyclotomicInt is Z[zeta_e] reduced modulo the e-th cyclotomic
polynomial; CycPolynomial combines the two for the factored determinant.
"""

from __future__ import annotations

from functools import lru_cache
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence

from .numtheory import divisors

if TYPE_CHECKING:
    from .groups import Element, FiniteAbelianGroup


def _poly_mul_int(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod_exact(num: Sequence[int], den: Sequence[int]) -> list[int]:
    """Exact division of integer polynomials (monic divisor); raises if inexact."""
    num = list(num)
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for j, y in enumerate(den):
                num[k + j] -= c * y
    if any(num):
        raise ValueError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the e-th cyclotomic polynomial.

    Built by the division chain: (x^e - 1) / prod of the d-th polynomials
    over proper divisors d of e.  Exact integer arithmetic throughout.
    """
    if e < 1:
        raise ValueError(f"need e >= 1, got {e}")
    if e == 1:
        return (-1, 1)
    num = [0] * (e + 1)
    num[0], num[e] = -1, 1
    den = [1]
    for d in divisors(e)[:-1]:
        den = _poly_mul_int(den, cyclotomic_polynomial(d))
    return tuple(_poly_divmod_exact(num, den))


@lru_cache(maxsize=None)
def _reduction_table(e: int) -> tuple[tuple[int, ...], ...]:
    """Row k: coefficients of x^k reduced mod the e-th cyclotomic polynomial.

    Covers k up to max(e - 1, 2*deg - 2), enough for root powers and for
    folding the tails of degree-(2*deg-2) products.
    """
    phi_poly = cyclotomic_polynomial(e)
    deg = len(phi_poly) - 1
    top = max(e - 1, 2 * deg - 2)
    rows: list[tuple[int, ...]] = []
    cur = [0] * deg
    if deg:
        cur[0] = 1
    rows.append(tuple(cur))
    for _ in range(top):
        nxt = [0] * deg
        lead = cur[deg - 1]
        for j in range(deg - 1):
            nxt[j + 1] = cur[j]
        if lead:
            # x^deg = -(phi_poly minus leading term)
            for j in range(deg):
                nxt[j] -= lead * phi_poly[j]
        cur = nxt
        rows.append(tuple(cur))
    return tuple(rows)


class CyclotomicInt:
    """Element of Z[zeta_e], coordinates in the power basis 1, zeta, ..., zeta^(deg-1)."""

    __slots__ = ("e", "coeffs")

    def __init__(self, e: int, coeffs: Sequence[int]):
        deg = len(cyclotomic_polynomial(e)) - 1
        cs = list(coeffs)
        if len(cs) != deg:
            raise ValueError(f"Z[zeta_{e}] needs {deg} coordinates, got {len(cs)}")
        self.e = e
        self.coeffs = tuple(int(c) for c in cs)

    @classmethod
    def integer(cls, e: int, value: int) -> "CyclotomicInt":
        deg = len(cyclotomic_polynomial(e)) - 1
        cs = [0] * deg
        cs[0] = value
        return cls(e, cs)

    @classmethod
    def zero(cls, e: int) -> "CyclotomicInt":
        return cls.integer(e, 0)

    @classmethod
    def zeta_power(cls, e: int, t: int) -> "CyclotomicInt":
        return cls(e, _reduction_table(e)[t % e])

    def _check(self, other: "CyclotomicInt") -> None:
        if self.e != other.e:
            raise ValueError(f"mixed cyclotomic orders {self.e} and {other.e}")

    def __add__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        return CyclotomicInt(self.e, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        return CyclotomicInt(self.e, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "CyclotomicInt":
        return CyclotomicInt(self.e, [-a for a in self.coeffs])

    def __mul__(self, other: "CyclotomicInt | int") -> "CyclotomicInt":
        if isinstance(other, int):
            return CyclotomicInt(self.e, [other * a for a in self.coeffs])
        self._check(other)
        deg = len(self.coeffs)
        conv = [0] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[i + j] += a * b
        out = list(conv[:deg])
        table = _reduction_table(self.e)
        for k in range(deg, 2 * deg - 1):
            c = conv[k]
            if c:
                row = table[k]
                for j in range(deg):
                    if row[j]:
                        out[j] += c * row[j]
        return CyclotomicInt(self.e, out)

    def __rmul__(self, other: int) -> "CyclotomicInt":
        return self * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        return self.e == other.e and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.e, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def integer_value(self) -> int:
        if not self.is_integer():
            raise ValueError(f"not a rational integer: {self!r}")
        return self.coeffs[0]

    def __repr__(self) -> str:
        return f"CyclotomicInt(e={self.e}, {list(self.coeffs)})"


class IntPolynomial:
    """Polynomial in nvars variables x0..x{nvars-1} over Z, sparse by exponent vector."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] = {}):
        if nvars < 1:
            raise ValueError("need at least one variable")
        clean: dict[tuple[int, ...], int] = {}
        for exp, c in terms.items():
            if len(exp) != nvars or any(k < 0 for k in exp):
                raise ValueError(f"bad exponent vector {exp!r} for {nvars} variables")
            if c:
                clean[tuple(exp)] = int(c)
        self.nvars = nvars
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "IntPolynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: int) -> "IntPolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "IntPolynomial":
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): 1})

    def _check(self, other: "IntPolynomial") -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        self._check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, 0) + c
        return IntPolynomial(self.nvars, out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(self.nvars, {e: other * c for e, c in self.terms.items()})
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return IntPolynomial(self.nvars, out)

    def __rmul__(self, other: int) -> "IntPolynomial":
        return self * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, exp: Sequence[int]) -> int:
        return self.terms.get(tuple(exp), 0)

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.terms)

    def term_count(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def coefficient_sum(self) -> int:
        """Value at x0 = x1 = ... = 1."""
        return sum(self.terms.values())

    def permute_variables(self, perm: Sequence[int]) -> "IntPolynomial":
        """Substitute x_i -> x_{perm[i]}."""
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError("not a permutation of the variables")
        out: dict[tuple[int, ...], int] = {}
        for exp, c in self.terms.items():
            new = [0] * self.nvars
            for i, k in enumerate(exp):
                new[perm[i]] = k
            out[tuple(new)] = c
        return IntPolynomial(self.nvars, out)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        # descending lex reads like a conventional leading-term-first layout
        for exp, c in sorted(self.terms.items(), reverse=True):
            factors = []
            if abs(c) != 1 or not any(exp):
                factors.append(str(abs(c)))
            for i, k in enumerate(exp):
                if k == 1:
                    factors.append(f"x{i}")
                elif k > 1:
                    factors.append(f"x{i}^{k}")
            term = "*".join(factors)
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial({self.nvars}, {self})"

    def to_json_obj(self) -> list[dict]:
        """Ascending-lex list of {exponents, coeff}; coeff as decimal string."""
        return [{"exponents": list(e), "coeff": str(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json_obj(cls, nvars: int, data: Iterable[Mapping]) -> "IntPolynomial":
        return cls(nvars, {tuple(item["exponents"]): int(item["coeff"]) for item in data})


class CycPolynomial:
    """Polynomial with CyclotomicInt coefficients, same sparse layout."""

    __slots__ = ("e", "nvars", "terms")

    def __init__(self, e: int, nvars: int, terms: Mapping[tuple[int, ...], CyclotomicInt] = {}):
        self.e = e
        self.nvars = nvars
        self.terms = {tuple(exp): c for exp, c in terms.items() if c}

    @classmethod
    def one(cls, e: int, nvars: int) -> "CycPolynomial":
        return cls(e, nvars, {(0,) * nvars: CyclotomicInt.integer(e, 1)})

    def __mul__(self, other: "CycPolynomial") -> "CycPolynomial":
        if (self.e, self.nvars) != (other.e, other.nvars):
            raise ValueError("mismatched cyclotomic polynomial rings")
        out: dict[tuple[int, ...], CyclotomicInt] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                if key in out:
                    out[key] = out[key] + prod
                else:
                    out[key] = prod
        return CycPolynomial(self.e, self.nvars, out)

    def to_integer_polynomial(self) -> IntPolynomial:
        """Convert when every coefficient is a rational integer; error otherwise."""
        out: dict[tuple[int, ...], int] = {}
        for exp, c in self.terms.items():
            out[exp] = c.integer_value()
        return IntPolynomial(self.nvars, out)


def apply_group_action(group: "FiniteAbelianGroup", gamma: "Element", poly: IntPolynomial) -> IntPolynomial:
    """Translate variables by gamma: x_i -> x_{index(element_i + gamma)}."""
    if poly.nvars != group.order:
        raise ValueError("polynomial variable count does not match group order")
    perm = [group.index(group.add(a, gamma)) for a in group.elements()]
    return poly.permute_variables(perm)
