"""Symbolic Cayley tables and their permanents and determinants.

Entries are variables x_k indexed by group element; the table variants are

    plain     n x n,  entry x_(g_i + g_j)      (symmetric)
    hat       n x n,  entry x_(g_i - g_j)      (neutral diagonal)
    extended  (n+1)^2 over the list g_0..g_{n-1}, g_0 (neutral repeated)
    block2n   (2n)^2  over the doubled list g_0..g_{n-1}, g_0..g_{n-1}
    toeplitz  l x l   entry x_((j-i) mod n), single-factor cyclic groups only

The permanent's monomial support is governed by the zero-sum condition
(degree-n exponent vectors k with sum k_j * g_j = 0); the determinant
factors into character linear forms.  Checkers for these facts live here.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from typing import Sequence

from .errors import GuardExceeded
from .groups import Element, FiniteAbelianGroup
from .molien import ENUM_GUARD, sym_dim, sym_series
from .numtheory import weak_compositions
from .polynom import CyclotomicInt, CycPolynomial, IntPolynomial, apply_group_action
from .report import CheckReport

VARIANTS = ("plain", "hat", "extended", "block2n", "toeplitz")

LEIBNIZ_GUARD = 9
RYSER_GUARD = 16
LEHMER_PRIMES = (3, 5, 7)


@dataclass(frozen=True)
class CayleyMatrix:
    """A table of variable indices over a fixed group."""

    group: FiniteAbelianGroup
    variant: str
    grid: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.grid)

    @property
    def nvars(self) -> int:
        return self.group.order

    def format_table(self) -> str:
        return "\n".join(" ".join(f"x{k}" for k in row) for row in self.grid)

    def to_json_obj(self) -> dict:
        return {
            "group": self.group.spec_string,
            "variant": self.variant,
            "size": self.size,
            "grid": [list(row) for row in self.grid],
        }


def build_table(
    group: FiniteAbelianGroup,
    variant: str,
    size: int | None = None,
    element_order: Sequence[int] | None = None,
) -> CayleyMatrix:
    """Build one of the table variants.

    size applies to toeplitz only (l >= n, default n).  element_order permutes
    the element listing used for rows/columns (relabeling-invariance tests);
    entries always use canonical variable indices, so permanents are reorder
    invariant and determinants pick up the square of the row/column sign.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    n = group.order
    els = list(group.elements())
    if element_order is not None:
        if variant == "toeplitz":
            raise ValueError("toeplitz tables have a fixed index layout")
        if sorted(element_order) != list(range(n)):
            raise ValueError("element_order must be a permutation of the element indices")
        els = [els[k] for k in element_order]

    if variant == "toeplitz":
        if not group.is_cyclic_presentation:
            raise ValueError(
                f"toeplitz tables need a single-factor cyclic presentation, got {group}"
                " (present the group as Cn)"
            )
        if size is None:
            size = n
        if size < n:
            raise ValueError(f"toeplitz size must be at least the group order {n}, got {size}")
        grid = tuple(tuple((j - i) % n for j in range(size)) for i in range(size))
        return CayleyMatrix(group, variant, grid)

    if size is not None:
        raise ValueError("size is only meaningful for the toeplitz variant")
    if variant == "plain":
        listing = els
        entry = group.add
    elif variant == "hat":
        listing = els
        entry = group.sub
    elif variant == "extended":
        listing = els + [group.zero()]
        entry = group.add
    else:  # block2n
        listing = els + els
        entry = group.add
    grid = tuple(
        tuple(group.index(entry(a, b)) for b in listing) for a in listing
    )
    return CayleyMatrix(group, variant, grid)


def _perm_sign(perm: Sequence[int]) -> int:
    """Permutation sign without input validation (hot path)."""
    n = len(perm)
    seen = [False] * n
    sign = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _accumulate_leibniz(matrix: CayleyMatrix, signed: bool) -> IntPolynomial:
    l = matrix.size
    if l > LEIBNIZ_GUARD:
        raise GuardExceeded("Leibniz expansion", l, LEIBNIZ_GUARD)
    rows = matrix.grid
    nvars = matrix.nvars
    counts: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(l)):
        exp = [0] * nvars
        for r in range(l):
            exp[rows[r][perm[r]]] += 1
        key = tuple(exp)
        delta = _perm_sign(perm) if signed else 1
        counts[key] = counts.get(key, 0) + delta
    return IntPolynomial(nvars, counts)


def _mul_linear(poly: dict[tuple[int, ...], int], counts: Sequence[int]) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for exp, c in poly.items():
        for v, k in enumerate(counts):
            if k:
                key = exp[:v] + (exp[v] + 1,) + exp[v + 1 :]
                out[key] = out.get(key, 0) + c * k
    return out


def _per_ryser(matrix: CayleyMatrix) -> IntPolynomial:
    """Inclusion-exclusion permanent over the polynomial ring.

    per(A) = sum over nonempty column sets S of (-1)^(l-|S|) prod_i (row sums),
    with the column sets walked in Gray-code order so each step updates the
    per-row variable counts in O(l).
    """
    l = matrix.size
    if l > RYSER_GUARD:
        raise GuardExceeded("Ryser expansion", l, RYSER_GUARD)
    rows = matrix.grid
    nvars = matrix.nvars
    rowcounts = [[0] * nvars for _ in range(l)]
    in_set = [False] * l
    set_size = 0
    acc: dict[tuple[int, ...], int] = {}
    one = (0,) * nvars
    for step in range(1, 1 << l):
        j = (step & -step).bit_length() - 1
        if in_set[j]:
            for i in range(l):
                rowcounts[i][rows[i][j]] -= 1
            in_set[j] = False
            set_size -= 1
        else:
            for i in range(l):
                rowcounts[i][rows[i][j]] += 1
            in_set[j] = True
            set_size += 1
        prod: dict[tuple[int, ...], int] = {one: 1}
        for i in range(l):
            prod = _mul_linear(prod, rowcounts[i])
        sgn = -1 if (l - set_size) % 2 else 1
        for exp, c in prod.items():
            acc[exp] = acc.get(exp, 0) + sgn * c
    return IntPolynomial(nvars, acc)


def permanent(matrix: CayleyMatrix, algorithm: str = "auto") -> IntPolynomial:
    """Permanent as an integer polynomial; algorithm in {auto, leibniz, ryser}."""
    if algorithm == "auto":
        algorithm = "leibniz" if matrix.size <= 8 else "ryser"
    if algorithm == "leibniz":
        return _accumulate_leibniz(matrix, signed=False)
    if algorithm == "ryser":
        return _per_ryser(matrix)
    raise ValueError(f"unknown permanent algorithm {algorithm!r}")


def character_matrix(group: FiniteAbelianGroup) -> list[list[CyclotomicInt]]:
    """K[i][j] = chi_j(g_i) as elements of Z[zeta_e]."""
    e = group.exponent
    els = group.elements()
    return [
        [CyclotomicInt.zeta_power(e, group.char_exponent(chi, a)) for chi in els]
        for a in els
    ]


def _det_factored(matrix: CayleyMatrix) -> IntPolynomial:
    """Determinant via the character factorization.

    det(plain) = sign(inversion permutation) * prod_j v_j with the linear
    forms v_j = sum_i chi_j(g_i) x_i; the hat table is the plain one with
    columns permuted by the inversion, so its determinant is prod_j v_j.
    """
    group = matrix.group
    if matrix.variant not in ("plain", "hat"):
        raise ValueError("factored determinant applies to plain and hat tables only")
    e = group.exponent
    n = group.order
    kmat = character_matrix(group)
    prod = CycPolynomial.one(e, n)
    for j in range(n):
        form = {
            tuple(1 if t == i else 0 for t in range(n)): kmat[i][j]
            for i in range(n)
        }
        prod = prod * CycPolynomial(e, n, form)
    poly = prod.to_integer_polynomial()
    if matrix.variant == "plain":
        poly = poly * group.inversion_sign()
    return poly


def determinant(matrix: CayleyMatrix, algorithm: str = "auto") -> IntPolynomial:
    """Determinant as an integer polynomial; algorithm in {auto, leibniz, factored}.

    Extended and block2n tables have repeated rows/columns, so auto and
    factored short-circuit them to the zero polynomial; an explicit leibniz
    run computes the cancellation honestly.
    """
    if algorithm == "auto":
        if matrix.variant in ("extended", "block2n"):
            return IntPolynomial.zero(matrix.nvars)
        algorithm = "factored" if matrix.variant in ("plain", "hat") else "leibniz"
    if algorithm == "leibniz":
        return _accumulate_leibniz(matrix, signed=True)
    if algorithm == "factored":
        if matrix.variant in ("extended", "block2n"):
            return IntPolynomial.zero(matrix.nvars)
        return _det_factored(matrix)
    raise ValueError(f"unknown determinant algorithm {algorithm!r}")


def hall_support(group: FiniteAbelianGroup, degree: int) -> set[tuple[int, ...]]:
    """Exponent vectors of the given degree whose weighted element sum is zero.

    These are exactly the monomials the permanent of the (possibly extended)
    table can contain.
    """
    if degree < 0:
        raise ValueError(f"hall_support: need degree >= 0, got {degree}")
    n = group.order
    size = math.comb(degree + n - 1, n - 1)
    if size > ENUM_GUARD:
        raise GuardExceeded("support enumeration", size, ENUM_GUARD)
    els = group.elements()
    zero = group.zero()
    out: set[tuple[int, ...]] = set()
    for comp in weak_compositions(degree, n):
        acc = zero
        for idx, k in enumerate(comp):
            if k:
                acc = group.add(acc, group.scale(els[idx], k))
        if acc == zero:
            out.add(comp)
    return out


def permanent_term_count(group: FiniteAbelianGroup) -> int:
    """Number of distinct monomials in the permanent of the plain table."""
    return len(hall_support(group, group.order))


def determinant_term_count(group: FiniteAbelianGroup) -> int:
    """Number of distinct monomials in the determinant of the plain table."""
    return determinant(build_table(group, "plain"), "factored").term_count()


# ---------------------------------------------------------------------------
# checkers

def _dual_weight_character(group: FiniteAbelianGroup) -> Element:
    """Sum of all characters of the group (as an index tuple); values are +-1."""
    psi = group.zero()
    for chi in group.characters():
        psi = group.add(psi, chi)
    return psi


def check_invariance(group: FiniteAbelianGroup) -> CheckReport:
    """Translation action on variables: the permanent is invariant, the
    determinant is semi-invariant with character psi = sum of all characters
    (so gamma . det = psi(gamma) * det with psi(gamma) = +-1)."""
    t0 = time.perf_counter()
    failures: list[dict] = []
    per = permanent(build_table(group, "plain"))
    det = determinant(build_table(group, "plain"))
    psi = _dual_weight_character(group)
    e = group.exponent
    for gamma in group.elements():
        if apply_group_action(group, gamma, per) != per:
            failures.append({"gamma": list(gamma), "what": "permanent not invariant"})
        t = group.char_exponent(psi, gamma)
        if t == 0:
            sgn = 1
        elif 2 * t == e:
            sgn = -1
        else:
            failures.append({"gamma": list(gamma), "what": f"psi value zeta^{t} is not +-1"})
            continue
        if apply_group_action(group, gamma, det) != det * sgn:
            failures.append({"gamma": list(gamma), "what": "determinant not semi-invariant"})
    elapsed = time.perf_counter() - t0
    return CheckReport("invariance", {"group": group.spec_string}, failures, elapsed)


def _table_monomial(group: FiniteAbelianGroup, perm: Sequence[int]) -> tuple[int, ...]:
    """Exponent vector of prod_i x_(g_i + g_perm(i))."""
    els = group.elements()
    exp = [0] * group.order
    for i, j in enumerate(perm):
        exp[group.index(group.add(els[i], els[j]))] += 1
    return tuple(exp)


def _translation_permutations(group: FiniteAbelianGroup) -> dict[Element, tuple[int, ...]]:
    els = group.elements()
    return {
        gamma: tuple(group.index(group.add(a, gamma)) for a in els)
        for gamma in els
    }


def check_action_identities(
    group: FiniteAbelianGroup,
    samples: int | None = None,
    seed: int = 0,
) -> CheckReport:
    """Structural identities of the translation action on permutations.

    For sigma_gamma the translation permutation and the star action
    gamma * pi = sigma_gamma pi sigma_gamma:

      - star preserves both sign and table monomial;
      - translating the monomial of pi gives the monomial of pi o sigma_gamma^{-1};
      - pi and pi^{-1} share a monomial (the table is symmetric);
      - every (position, value) pair consistent with a supported monomial is
        realized by some permutation with that monomial.

    Exhaustive over all permutations when samples is None (group order <= 8
    required); otherwise a deterministic sample, with realization verified by
    walking the star-action orbit of each sampled permutation.
    """
    t0 = time.perf_counter()
    n = group.order
    els = group.elements()
    sigma = _translation_permutations(group)
    sigma_inv = {g: _invert(p) for g, p in sigma.items()}
    failures: list[dict] = []

    exhaustive = samples is None
    if exhaustive:
        if n > 8:
            raise GuardExceeded("exhaustive permutation sweep", math.factorial(n), math.factorial(8))
        perms = list(itertools.permutations(range(n)))
    else:
        rng = random.Random(seed)
        perms = [tuple(rng.sample(range(n), n)) for _ in range(samples)]

    realized: set[tuple[tuple[int, ...], int, int]] = set()
    for pi in perms:
        mono = _table_monomial(group, pi)
        s_pi = _perm_sign(pi)
        for gamma in els:
            sg = sigma[gamma]
            star = tuple(sg[pi[sg[i]]] for i in range(n))
            if _perm_sign(star) != s_pi:
                failures.append({"pi": list(pi), "gamma": list(gamma), "what": "star changed sign"})
            if _table_monomial(group, star) != mono:
                failures.append({"pi": list(pi), "gamma": list(gamma), "what": "star changed monomial"})
            sginv = sigma_inv[gamma]
            translated = _translate_exponents(mono, sg)
            composed = tuple(pi[sginv[i]] for i in range(n))
            if translated != _table_monomial(group, composed):
                failures.append(
                    {"pi": list(pi), "gamma": list(gamma), "what": "translate/compose mismatch"}
                )
        inv = _invert(pi)
        if _table_monomial(group, inv) != mono:
            failures.append({"pi": list(pi), "what": "inverse changed monomial"})
        if exhaustive:
            for i, j in enumerate(pi):
                realized.add((mono, i, j))

    if exhaustive:
        support = hall_support(group, n)
        for mono in sorted(support):
            for k, mult in enumerate(mono):
                if not mult:
                    continue
                target = els[k]
                for i in range(n):
                    j = group.index(group.sub(target, els[i]))
                    if (mono, i, j) not in realized:
                        failures.append(
                            {"monomial": list(mono), "i": i, "j": j, "what": "pair not realized"}
                        )
    else:
        # constructive realization along the star orbit of each sample
        for pi in perms:
            mono = _table_monomial(group, pi)
            positions = {}
            for alpha in range(n):
                positions.setdefault(group.index(group.add(els[alpha], els[pi[alpha]])), alpha)
            for k, mult in enumerate(mono):
                if not mult:
                    continue
                alpha = positions[k]
                for i in range(n):
                    gamma = group.sub(els[alpha], els[i])
                    sg = sigma[gamma]
                    star = tuple(sg[pi[sg[t]]] for t in range(n))
                    j = group.index(group.sub(els[k], els[i]))
                    if star[i] != j or _table_monomial(group, star) != mono:
                        failures.append(
                            {"monomial": list(mono), "i": i, "j": j, "what": "orbit construction failed"}
                        )
    elapsed = time.perf_counter() - t0
    params = {"group": group.spec_string, "mode": "exhaustive" if exhaustive else f"sampled-{len(perms)}"}
    return CheckReport("action-identities", params, failures, elapsed)


def _invert(perm: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(perm)
    for i, j in enumerate(perm):
        out[j] = i
    return tuple(out)


def _translate_exponents(exp: Sequence[int], perm: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(exp)
    for i, k in enumerate(exp):
        out[perm[i]] = k
    return tuple(out)


def check_lehmer_congruence(p: int) -> CheckReport:
    """For prime p in {3, 5, 7}: permanent and (hat form) determinant of the
    C_p table both equal sum x_i^p plus p times an integer polynomial."""
    if p not in LEHMER_PRIMES:
        raise ValueError(f"supported primes are {LEHMER_PRIMES}, got {p}")
    t0 = time.perf_counter()
    group = FiniteAbelianGroup((p,))
    hat = build_table(group, "hat")
    per = permanent(hat)
    det = determinant(hat, "factored")
    target = IntPolynomial(
        p, {tuple(p if t == i else 0 for t in range(p)): 1 for i in range(p)}
    )
    failures: list[dict] = []
    for name, poly in (("permanent", per), ("determinant", det)):
        diff = poly - target
        for exp, c in diff.sorted_terms():
            if c % p:
                failures.append(
                    {"polynomial": name, "exponents": list(exp), "coeff": c, "modulus": p}
                )
    elapsed = time.perf_counter() - t0
    return CheckReport("lehmer", {"p": p}, failures, elapsed)


def check_extended_counts(group: FiniteAbelianGroup) -> CheckReport:
    """Distinct-monomial counts of the extended and doubled tables match the
    symmetric-power dimensions at degrees n+1 and 2n."""
    t0 = time.perf_counter()
    n = group.order
    failures: list[dict] = []

    per_ext = permanent(build_table(group, "extended"))
    got_ext = per_ext.term_count()
    want_ext = int(sym_series(group, 0, n + 1).coefficient(n + 1))
    if got_ext != want_ext:
        failures.append({"table": "extended", "count": got_ext, "dimension": want_ext})

    per_blk = permanent(build_table(group, "block2n"))
    got_blk = per_blk.term_count()
    want_blk = int(sym_series(group, 0, 2 * n).coefficient(2 * n))
    if got_blk != want_blk:
        failures.append({"table": "block2n", "count": got_blk, "dimension": want_blk})

    elapsed = time.perf_counter() - t0
    return CheckReport("extended-counts", {"group": group.spec_string}, failures, elapsed)


def check_hall(max_order: int = 6, max_order_ext: int = 5) -> CheckReport:
    """Support of the permanent equals the zero-sum prediction.

    Plain tables at degree n for every abelian group of order <= max_order,
    extended tables at degree n+1 for order <= max_order_ext.
    """
    from .groups import abelian_groups_up_to

    t0 = time.perf_counter()
    failures: list[dict] = []
    for group in abelian_groups_up_to(max_order):
        got = set(permanent(build_table(group, "plain")).terms)
        want = hall_support(group, group.order)
        for exp in sorted(got.symmetric_difference(want)):
            failures.append(
                {"group": group.spec_string, "table": "plain", "exponents": list(exp),
                 "what": "missing" if exp in want else "unexpected"}
            )
    for group in abelian_groups_up_to(max_order_ext):
        got = set(permanent(build_table(group, "extended")).terms)
        want = hall_support(group, group.order + 1)
        for exp in sorted(got.symmetric_difference(want)):
            failures.append(
                {"group": group.spec_string, "table": "extended", "exponents": list(exp),
                 "what": "missing" if exp in want else "unexpected"}
            )
    elapsed = time.perf_counter() - t0
    return CheckReport(
        "hall-support", {"max_order": max_order, "max_order_ext": max_order_ext}, failures, elapsed
    )


def check_toeplitz_conjecture(n: int, l: int) -> CheckReport:
    """Support of the permanent of the l x l toeplitz table over C_n against
    the zero-sum prediction: all degree-l vectors with sum j*k_j = 0 mod n."""
    if n < 1 or l < n:
        raise ValueError(f"need l >= n >= 1, got n={n}, l={l}")
    t0 = time.perf_counter()
    group = FiniteAbelianGroup((n,))
    per = permanent(build_table(group, "toeplitz", size=l))
    got = set(per.terms)
    want = hall_support(group, l)
    failures: list[dict] = []
    for exp in sorted(want - got):
        failures.append({"exponents": list(exp), "what": "predicted monomial missing"})
    for exp in sorted(got - want):
        failures.append({"exponents": list(exp), "what": "unexpected monomial present"})
    if len(want) != sym_dim(n, l, 0):
        failures.append(
            {"what": "prediction size mismatch", "count": len(want), "dimension": sym_dim(n, l, 0)}
        )
    elapsed = time.perf_counter() - t0
    return CheckReport("toeplitz-conjecture", {"n": n, "l": l}, failures, elapsed)
