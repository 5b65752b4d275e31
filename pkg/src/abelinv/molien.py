"""Isotypic dimensions and Molien-style series for regular representations.

For the cyclic group C_n acting on its regular representation R, the
multiplicity of the weight-i character in S^m(R), Lambda^m(R) and
S^p(R) (x) Lambda^m(R) has a closed form as a Ramanujan-sum weighted divisor
sum.  This module implements those closed forms, independent enumeration
oracles for them, the generating series (including general finite abelian
groups via character sums, and order profiles for the invariant part), and
the reciprocity/log-identity checkers.
"""

from __future__ import annotations

import itertools
import math
import time
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

from .errors import GuardExceeded
from .groups import FiniteAbelianGroup, OrderProfile, parse_order_profile
from .numtheory import divisors, euler_phi, multinomial, ramanujan_sum, weak_compositions
from .polynom import CyclotomicInt
from .report import CheckReport
from .series import TruncatedSeries1, TruncatedSeries2, expand_rational, log1p_series

ENUM_GUARD = 10**7

SeriesSource = Union[FiniteAbelianGroup, Mapping[int, int]]


# ---------------------------------------------------------------------------
# closed-form dimensions

def sym_dim(n: int, m: int, i: int) -> int:
    """Multiplicity of weight i in S^m of the regular representation of C_n.

        (1/(n+m)) * sum_{d | gcd(n,m)} c_d(i) * binom((n+m)/d, n/d)

    Defined for n, m >= 0 with (n, m) != (0, 0) and symmetric under swapping
    n and m; n = 0 degenerates to [m divides i].
    """
    if n < 0 or m < 0 or (n == 0 and m == 0):
        raise ValueError(f"sym_dim: need n, m >= 0 and (n, m) != (0, 0), got ({n}, {m})")
    g = math.gcd(n, m)
    total = n + m
    acc = 0
    for d in divisors(g):
        acc += ramanujan_sum(d, i) * math.comb(total // d, n // d)
    q, r = divmod(acc, total)
    if r or q < 0:
        raise AssertionError(f"sym_dim({n}, {m}, {i}): non-integral or negative value {acc}/{total}")
    return q


def ext_dim(n: int, m: int, i: int) -> int:
    """Multiplicity of weight i in Lambda^m of the regular representation of C_n.

        ((-1)^m / n) * sum_{d | gcd(n,m)} (-1)^(m/d) c_d(i) * binom(n/d, m/d)

    Zero for m > n (the wedge power vanishes).
    """
    if n < 1:
        raise ValueError(f"ext_dim: need n >= 1, got {n}")
    if m < 0:
        raise ValueError(f"ext_dim: need m >= 0, got {m}")
    if m > n:
        return 0
    acc = 0
    for d in divisors(math.gcd(n, m)):
        acc += (-1) ** (m // d) * ramanujan_sum(d, i) * math.comb(n // d, m // d)
    acc *= (-1) ** m
    q, r = divmod(acc, n)
    if r or q < 0:
        raise AssertionError(f"ext_dim({n}, {m}, {i}): non-integral or negative value {acc}/{n}")
    return q


def sym_ext_dim(n: int, p: int, m: int, i: int) -> int:
    """Multiplicity of weight i in S^p (x) Lambda^m of the regular repr of C_n.

        ((-1)^m / (p+n)) * sum_{d | gcd(n,p,m)} (-1)^(m/d) c_d(i)
                            * multinom((n+p)/d; m/d, p/d, (n-m)/d)

    Zero for m > n.
    """
    if n < 1:
        raise ValueError(f"sym_ext_dim: need n >= 1, got {n}")
    if p < 0 or m < 0:
        raise ValueError(f"sym_ext_dim: need p, m >= 0, got p={p}, m={m}")
    if m > n:
        return 0
    return sym_ext_dim_by_parts(p, n - m, m, i)


def sym_ext_dim_by_parts(p: int, q: int, m: int, i: int) -> int:
    """Same dimension in the symmetric parameters (p, q, m), with n = q + m.

        ((-1)^m / (p+q+m)) * sum_{d | gcd(p,q,m)} (-1)^(m/d) c_d(i)
                              * multinom((p+q+m)/d; m/d, p/d, q/d)

    Symmetric under swapping p and q; requires p + q + m >= 1.
    """
    if p < 0 or q < 0 or m < 0 or p + q + m < 1:
        raise ValueError(f"sym_ext_dim_by_parts: bad parameters ({p}, {q}, {m})")
    total = p + q + m
    g = math.gcd(math.gcd(p, q), m)
    acc = 0
    for d in divisors(g):
        acc += (-1) ** (m // d) * ramanujan_sum(d, i) * multinomial([m // d, p // d, q // d])
    acc *= (-1) ** m
    quo, rem = divmod(acc, total)
    if rem or quo < 0:
        raise AssertionError(
            f"sym_ext_dim_by_parts({p}, {q}, {m}, {i}): non-integral or negative value {acc}/{total}"
        )
    return quo


# ---------------------------------------------------------------------------
# enumeration oracles (independent of the closed forms above)

@lru_cache(maxsize=None)
def _sym_weight_histogram(n: int, m: int) -> tuple[int, ...]:
    """Count exponent vectors of degree m in n variables by weight sum(j*k_j) mod n."""
    size = math.comb(n + m - 1, m)
    if size > ENUM_GUARD:
        raise GuardExceeded("monomial enumeration", size, ENUM_GUARD)
    hist = [0] * n
    for comp in weak_compositions(m, n):
        w = sum(j * k for j, k in enumerate(comp)) % n
        hist[w] += 1
    return tuple(hist)


def sym_dim_oracle(n: int, m: int, i: int) -> int:
    """Enumeration oracle for sym_dim: count degree-m monomials of weight i mod n."""
    if n < 1:
        raise ValueError(f"sym_dim_oracle: need n >= 1, got {n}")
    if m < 0:
        raise ValueError(f"sym_dim_oracle: need m >= 0, got {m}")
    return _sym_weight_histogram(n, m)[i % n]


@lru_cache(maxsize=None)
def _subset_weight_histogram(n: int) -> tuple[tuple[int, ...], ...]:
    """[m][r]: number of m-element subsets of {0..n-1} with sum congruent to r mod n."""
    if 2**n > ENUM_GUARD:
        raise GuardExceeded("subset enumeration", 2**n, ENUM_GUARD)
    hist = [[0] * n for _ in range(n + 1)]
    for m in range(n + 1):
        for sub in itertools.combinations(range(n), m):
            hist[m][sum(sub) % n] += 1
    return tuple(tuple(row) for row in hist)


def ext_dim_oracle(n: int, m: int, i: int) -> int:
    """Enumeration oracle for ext_dim: count m-subsets of {0..n-1} with sum i mod n."""
    if n < 1:
        raise ValueError(f"ext_dim_oracle: need n >= 1, got {n}")
    if m < 0:
        raise ValueError(f"ext_dim_oracle: need m >= 0, got {m}")
    if m > n:
        return 0
    return _subset_weight_histogram(n)[m][i % n]


@lru_cache(maxsize=None)
def _sym_ext_joint_histogram(n: int, p: int) -> tuple[tuple[int, ...], ...]:
    """[m][r]: degree-p monomial and m-subset pairs with combined weight r mod n."""
    size = math.comb(n + p - 1, p) * 2**n
    if size > ENUM_GUARD:
        raise GuardExceeded("monomial x subset enumeration", size, ENUM_GUARD)
    subsets: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    for m in range(n + 1):
        for sub in itertools.combinations(range(n), m):
            subsets[m].append((m, sum(sub) % n))
    hist = [[0] * n for _ in range(n + 1)]
    for comp in weak_compositions(p, n):
        w = sum(j * k for j, k in enumerate(comp)) % n
        for m in range(n + 1):
            for _, ws in subsets[m]:
                hist[m][(w + ws) % n] += 1
    return tuple(tuple(row) for row in hist)


def sym_ext_dim_oracle(n: int, p: int, m: int, i: int) -> int:
    """Enumeration oracle for sym_ext_dim over monomial x subset basis pairs."""
    if n < 1 or p < 0 or m < 0:
        raise ValueError(f"sym_ext_dim_oracle: bad parameters ({n}, {p}, {m})")
    if m > n:
        return 0
    return _sym_ext_joint_histogram(n, p)[m][i % n]


# ---------------------------------------------------------------------------
# character sums and series

def character_order_sums(group: FiniteAbelianGroup, i: int) -> dict[int, int]:
    """S_d = sum over elements g of order d of chi_i(g^{-1}), for each order d.

    Each slice is Galois-stable, so the sums are rational integers; they are
    accumulated in Z[zeta_e] and the integrality is asserted.
    """
    e = group.exponent
    chi = group.elements()[i]
    acc: dict[int, CyclotomicInt] = {}
    for a in group.elements():
        d = group.element_order(a)
        z = CyclotomicInt.zeta_power(e, group.char_exponent(chi, group.neg(a)))
        acc[d] = acc[d] + z if d in acc else z
    out: dict[int, int] = {}
    for d in sorted(acc):
        v = acc[d]
        if not v.is_integer():
            raise AssertionError(f"non-integer character sum for order {d} in {group}")
        out[d] = v.integer_value()
    return out


def _order_sums(source: SeriesSource, i: int) -> tuple[int, dict[int, int]]:
    """(group order, {d: S_d}) for a group or an order profile (profiles need i = 0)."""
    if isinstance(source, FiniteAbelianGroup):
        n = source.order
        if not 0 <= i < n:
            raise ValueError(f"character index {i} out of range for {source}")
        if source.is_cyclic_presentation:
            return n, {d: ramanujan_sum(d, i) for d in divisors(n)}
        return n, character_order_sums(source, i)
    prof = parse_order_profile(source)
    if i != 0:
        raise ValueError("order profiles carry no character data; only i = 0 is defined")
    total = sum(prof.values())
    for d in prof:
        if total % d:
            raise ValueError(f"order profile entry {d} does not divide the total order {total}")
    return total, prof


def _power_binomial_coeffs(d: int, k: int, inner: int, cap: int | None = None) -> list[int]:
    """Coefficients of (1 + inner*t^d)^k, optionally truncated at degree cap."""
    top = d * k if cap is None else min(d * k, cap)
    out = [0] * (top + 1)
    for a in range(k + 1):
        if d * a > top:
            break
        out[d * a] = math.comb(k, a) * inner**a
    return out


def sym_series(source: SeriesSource, i: int = 0, order: int = 10) -> TruncatedSeries1:
    """Symmetric-algebra series (1/|G|) sum_d S_d(chi_i) / (1 - t^d)^(|G|/d).

    Coefficient of t^m is the multiplicity of chi_i in S^m of the regular
    representation; i = 0 gives the invariant Molien series.  Accepts a group
    or a bare order profile (invariants only).
    """
    total, sums = _order_sums(source, i)
    acc = TruncatedSeries1.zero(order)
    for d in sorted(sums):
        s = sums[d]
        if not s:
            continue
        denom = _power_binomial_coeffs(d, total // d, -1)
        acc = acc + expand_rational([1], denom, order).scalar_mul(s)
    out = acc.scalar_mul(Fraction(1, total))
    if isinstance(source, FiniteAbelianGroup):
        for k, c in enumerate(out.coeffs):
            if c.denominator != 1:
                raise AssertionError(f"sym_series({source}, {i}): non-integer coefficient at t^{k}")
    return out


def ext_series(source: SeriesSource, i: int = 0, order: int | None = None) -> TruncatedSeries1:
    """Exterior-algebra series (1/|G|) sum_d S_d(chi_i) (1 - (-t)^d)^(|G|/d).

    A polynomial of degree at most |G|; the default truncation keeps all of it.
    Divisible by (1 + t): every summand vanishes at t = -1.
    """
    total, sums = _order_sums(source, i)
    if order is None:
        order = total
    coeffs = [Fraction(0)] * (order + 1)
    for d in sorted(sums):
        s = sums[d]
        if not s:
            continue
        # (1 - (-t)^d)^k = sum_a binom(k,a) (-1)^((d+1)a) t^(da)
        for da, c in enumerate(_power_binomial_coeffs(d, total // d, (-1) ** (d + 1), order)):
            if c:
                coeffs[da] += s * c
    out = TruncatedSeries1(order, coeffs).scalar_mul(Fraction(1, total))
    if isinstance(source, FiniteAbelianGroup):
        for k, c in enumerate(out.coeffs):
            if c.denominator != 1:
                raise AssertionError(f"ext_series({source}, {i}): non-integer coefficient at t^{k}")
    return out


def bigraded_series(n: int, i: int, s_order: int, t_order: int) -> TruncatedSeries2:
    """Bigraded series (1/n) sum_{d|n} c_d(i) ((1-(-t)^d)/(1-s^d))^(n/d).

    Coefficient of s^p t^m is sym_ext_dim(n, p, m, i): each summand is an
    outer product of a pure-s expansion and a pure-t polynomial.
    """
    if n < 1:
        raise ValueError(f"bigraded_series: need n >= 1, got {n}")
    acc = TruncatedSeries2.zero(s_order, t_order)
    for d in divisors(n):
        c = ramanujan_sum(d, i)
        if not c:
            continue
        k = n // d
        s_part = expand_rational([1], _power_binomial_coeffs(d, k, -1), s_order)
        t_part = TruncatedSeries1(t_order, _power_binomial_coeffs(d, k, (-1) ** (d + 1), t_order))
        acc = acc + TruncatedSeries2.outer(s_part, t_part).scalar_mul(c)
    return acc.scalar_mul(Fraction(1, n))


def ext_total_dim(n: int, i: int) -> int:
    """Total multiplicity of weight i across the whole exterior algebra of C_n:

        (1/n) * sum_{d | n, d odd} c_d(i) * 2^(n/d)
    """
    if n < 1:
        raise ValueError(f"ext_total_dim: need n >= 1, got {n}")
    acc = sum(ramanujan_sum(d, i) * 2 ** (n // d) for d in divisors(n) if d % 2)
    q, r = divmod(acc, n)
    if r or q < 0:
        raise AssertionError(f"ext_total_dim({n}, {i}): non-integral or negative value {acc}/{n}")
    return q


def ext_total_dim_invariants(profile: Mapping[int, int]) -> int:
    """Invariant dimension of the full exterior algebra from an order profile:

        (1/|G|) * sum_{d odd} count_d * 2^(|G|/d)
    """
    prof = parse_order_profile(profile)
    total = sum(prof.values())
    for d in prof:
        if total % d:
            raise ValueError(f"order profile entry {d} does not divide the total order {total}")
    acc = sum(c * 2 ** (total // d) for d, c in prof.items() if d % 2)
    q, r = divmod(acc, total)
    if r:
        raise ValueError(f"profile {dict(prof)} gives the non-integer value {acc}/{total}")
    return q


def zero_sum_subset_count(group: FiniteAbelianGroup) -> int:
    """Closed-form count of zero-sum subsets of the group (empty set included).

    Equals the invariant dimension of the exterior algebra of the regular
    representation; the enumeration cross-check lives in
    groups.subset_sum_zero_count.
    """
    return ext_total_dim_invariants(group.order_profile())


# ---------------------------------------------------------------------------
# reciprocity checker

def check_reciprocity(max_total: int = 10, fredman_total: int = 16) -> CheckReport:
    """Swap symmetry of the dimension formulas.

    sym_ext_dim(q+m, p, m, i) == sym_ext_dim(p+m, q, m, i) over all
    p+q+m <= max_total with both sides defined, and
    sym_dim(n, m, i) == sym_dim(m, n, i) over n+m <= fredman_total.
    """
    t0 = time.perf_counter()
    failures: list[dict] = []
    for total in range(1, max_total + 1):
        for p in range(total + 1):
            for q in range(total + 1 - p):
                m = total - p - q
                if q + m < 1 or p + m < 1:
                    continue
                for i in range(max(q + m, p + m)):
                    lhs = sym_ext_dim(q + m, p, m, i)
                    rhs = sym_ext_dim(p + m, q, m, i)
                    if lhs != rhs:
                        failures.append({"p": p, "q": q, "m": m, "i": i, "lhs": lhs, "rhs": rhs})
    for total in range(1, fredman_total + 1):
        for n in range(total + 1):
            m = total - n
            for i in range(max(n, m)):
                lhs = sym_dim(n, m, i)
                rhs = sym_dim(m, n, i)
                if lhs != rhs:
                    failures.append({"n": n, "m": m, "i": i, "lhs": lhs, "rhs": rhs})
    elapsed = time.perf_counter() - t0
    return CheckReport(
        "reciprocity",
        {"max_total": max_total, "fredman_total": fredman_total},
        failures,
        elapsed,
    )


# ---------------------------------------------------------------------------
# log identities (sparse total-degree-truncated series on the right sides)

def _sp_scale_add(acc: dict, other: dict, factor: Fraction) -> None:
    for exp, c in other.items():
        val = acc.get(exp, Fraction(0)) + factor * c
        if val:
            acc[exp] = val
        elif exp in acc:
            del acc[exp]


def _sp_mul(a: dict, b: dict, cutoff: int) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        d1 = sum(e1)
        for e2, c2 in b.items():
            if d1 + sum(e2) > cutoff:
                continue
            key = tuple(x + y for x, y in zip(e1, e2))
            val = out.get(key, Fraction(0)) + c1 * c2
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return out


def _sp_log1p(u: dict, cutoff: int) -> dict:
    """log(1 + u) for a sparse series u with no constant term, truncated by total degree."""
    acc: dict = {}
    power = dict(u)
    k = 1
    while power and k <= cutoff:
        _sp_scale_add(acc, power, Fraction((-1) ** (k + 1), k))
        k += 1
        power = _sp_mul(power, u, cutoff)
    return acc


def _identity_a(order: int, i_max: int) -> list[dict]:
    """Top-wedge diagonal: sum_m ext_dim(m, m, i) z^m = -sum_d (c_d(i)/d) log(1 + (-z)^d).

    For i = 0 this is the classical z/(1-z^2) = sum_d (phi(d)/d) log(1+z^d).
    """
    failures = []
    for i in range(i_max + 1):
        lhs = TruncatedSeries1(order, [0] + [ext_dim(m, m, i) for m in range(1, order + 1)])
        rhs = TruncatedSeries1.zero(order)
        for d in range(1, order + 1):
            u = TruncatedSeries1.monomial(order, d, (-1) ** d)
            rhs = rhs + log1p_series(u).scalar_mul(Fraction(-ramanujan_sum(d, i), d))
        if lhs != rhs:
            for k in range(order + 1):
                if lhs.coeffs[k] != rhs.coeffs[k]:
                    failures.append(
                        {"identity": "A", "i": i, "degree": k,
                         "lhs": str(lhs.coeffs[k]), "rhs": str(rhs.coeffs[k])}
                    )
    closed = expand_rational([0, 1], [1, 0, -1], order)  # z/(1-z^2)
    alt = TruncatedSeries1.zero(order)
    for d in range(1, order + 1):
        alt = alt + log1p_series(TruncatedSeries1.monomial(order, d, 1)).scalar_mul(
            Fraction(euler_phi(d), d)
        )
    if closed != alt:
        for k in range(order + 1):
            if closed.coeffs[k] != alt.coeffs[k]:
                failures.append(
                    {"identity": "A", "i": 0, "form": "z/(1-z^2)", "degree": k,
                     "lhs": str(closed.coeffs[k]), "rhs": str(alt.coeffs[k])}
                )
    return failures


def _identity_b(order: int, i_max: int) -> list[dict]:
    """Pure-symmetric specialization: -sum_d (c_d(i)/d) log(1 - y^d).

    Three independent routes must agree: the series machinery, the n = 0 row
    of sym_dim, and the divisibility indicator [j | i] (coefficient of y^j).
    For i = 0 the value is y/(1-y); for i != 0 it is the finite divisor
    polynomial sum over j | i of y^j.
    """
    failures = []
    for i in range(i_max + 1):
        logs = TruncatedSeries1.zero(order)
        for d in range(1, order + 1):
            u = TruncatedSeries1.monomial(order, d, -1)
            logs = logs + log1p_series(u).scalar_mul(Fraction(-ramanujan_sum(d, i), d))
        dims = TruncatedSeries1(order, [0] + [sym_dim(0, m, i) for m in range(1, order + 1)])
        indic = TruncatedSeries1(order, [0] + [1 if i % m == 0 else 0 for m in range(1, order + 1)])
        for k in range(order + 1):
            vals = {"series": logs.coeffs[k], "dims": dims.coeffs[k], "indicator": indic.coeffs[k]}
            if len(set(vals.values())) != 1:
                failures.append(
                    {"identity": "B", "i": i, "degree": k,
                     **{route: str(v) for route, v in vals.items()}}
                )
    closed = expand_rational([0, 1], [1, -1], order)  # y/(1-y)
    logs0 = TruncatedSeries1.zero(order)
    for d in range(1, order + 1):
        logs0 = logs0 + log1p_series(TruncatedSeries1.monomial(order, d, -1)).scalar_mul(
            Fraction(-ramanujan_sum(d, 0), d)
        )
    if logs0 != closed:
        failures.append({"identity": "B", "i": 0, "form": "y/(1-y)", "detail": "mismatch"})
    return failures


def _identity_log2var(order: int, i_list: tuple[int, ...]) -> list[dict]:
    """Two-variable log identity: the full sym_dim grid against

        -sum_d (c_d(i)/d) log(1 - x^d - y^d)

    compared coefficientwise to total degree `order`.
    """
    failures = []
    for i in i_list:
        rhs: dict = {}
        for d in range(1, order + 1):
            u = {(d, 0): Fraction(-1), (0, d): Fraction(-1)}
            _sp_scale_add(rhs, _sp_log1p(u, order), Fraction(-ramanujan_sum(d, i), d))
        for total in range(1, order + 1):
            for n in range(total + 1):
                m = total - n
                lhs = Fraction(sym_dim(n, m, i))
                rv = rhs.get((n, m), Fraction(0))
                if lhs != rv:
                    failures.append(
                        {"identity": "log2var", "i": i, "n": n, "m": m,
                         "lhs": str(lhs), "rhs": str(rv)}
                    )
    return failures


def _identity_log3var(order: int, i_list: tuple[int, ...]) -> list[dict]:
    """Three-variable log identity: sym_ext_dim_by_parts against

        -sum_d (c_d(i)/d) log(1 - x^d - y^d + (-z)^d)

    compared coefficientwise to total degree `order` (z tracks the wedge
    degree as the third exponent).
    """
    failures = []
    for i in i_list:
        rhs: dict = {}
        for d in range(1, order + 1):
            u = {
                (d, 0, 0): Fraction(-1),
                (0, d, 0): Fraction(-1),
                (0, 0, d): Fraction((-1) ** d),
            }
            _sp_scale_add(rhs, _sp_log1p(u, order), Fraction(-ramanujan_sum(d, i), d))
        for total in range(1, order + 1):
            for p in range(total + 1):
                for q in range(total + 1 - p):
                    m = total - p - q
                    lhs = Fraction(sym_ext_dim_by_parts(p, q, m, i))
                    rv = rhs.get((p, q, m), Fraction(0))
                    if lhs != rv:
                        failures.append(
                            {"identity": "log3var", "i": i, "p": p, "q": q, "m": m,
                             "lhs": str(lhs), "rhs": str(rv)}
                        )
    return failures


IDENTITY_DEFAULT_ORDERS = {"A": 20, "B": 20, "log2var": 20, "log3var": 8}


def check_identity(which: str, order: int | None = None, i_max: int = 5) -> CheckReport:
    """Run one of the log/exp identity checks: A, B, log2var or log3var."""
    if which not in IDENTITY_DEFAULT_ORDERS:
        raise ValueError(f"unknown identity {which!r}; expected one of {sorted(IDENTITY_DEFAULT_ORDERS)}")
    if order is None:
        order = IDENTITY_DEFAULT_ORDERS[which]
    t0 = time.perf_counter()
    if which == "A":
        failures = _identity_a(order, i_max)
    elif which == "B":
        failures = _identity_b(order, i_max)
    elif which == "log2var":
        failures = _identity_log2var(order, tuple(range(min(i_max, 2) + 1)))
    else:
        failures = _identity_log3var(order, tuple(range(min(i_max, 2) + 1)))
    elapsed = time.perf_counter() - t0
    return CheckReport(f"identity-{which}", {"order": order, "i_max": i_max}, failures, elapsed)
