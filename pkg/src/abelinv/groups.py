"""Finite abelian groups presented as direct sums of cyclic factors.

A group is a tuple of factor sizes (n_1, ..., n_r); elements are residue
tuples (a_1, ..., a_r) with 0 <= a_j < n_j, enumerated lexicographically so
that index 0 is the neutral element.  Characters are indexed by the same
residue tuples: chi_k(a) = zeta_e^t with e the group exponent and

    t = sum_j k_j * a_j * (e / n_j)  (mod e).
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import GuardExceeded

Element = tuple[int, ...]
OrderProfile = dict[int, int]

SUBSET_ENUM_GUARD = 24

_GROUP_RE = re.compile(r"c(\d+)(?:xc(\d+))*", re.IGNORECASE)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Direct sum of cyclic groups C_{n_1} + ... + C_{n_r}.

    The factor list is kept exactly as given (no canonicalization), so C6 and
    C2xC3 are distinct presentations of isomorphic groups.
    """

    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("group needs at least one cyclic factor")
        for n in self.factors:
            if not isinstance(n, int) or n < 1:
                raise ValueError(f"cyclic factor sizes must be positive ints, got {n!r}")

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def is_cyclic_presentation(self) -> bool:
        """True when presented as a single factor C_n (element index i <-> residue i)."""
        return len(self.factors) == 1

    @property
    def spec_string(self) -> str:
        return "x".join(f"C{n}" for n in self.factors)

    def __str__(self) -> str:
        return self.spec_string

    @cached_property
    def _strides(self) -> tuple[int, ...]:
        out = []
        s = 1
        for n in reversed(self.factors):
            out.append(s)
            s *= n
        return tuple(reversed(out))

    @cached_property
    def _elements(self) -> tuple[Element, ...]:
        return tuple(itertools.product(*(range(n) for n in self.factors)))

    def elements(self) -> tuple[Element, ...]:
        """All elements in lexicographic order; index 0 is the neutral element."""
        return self._elements

    def element(self, idx: int) -> Element:
        return self._elements[idx]

    def index(self, a: Element) -> int:
        self._validate(a)
        return sum(ai * si for ai, si in zip(a, self._strides))

    def _validate(self, a: Element) -> None:
        if len(a) != len(self.factors):
            raise ValueError(f"element {a!r} does not belong to {self} (rank mismatch)")
        for ai, n in zip(a, self.factors):
            if not 0 <= ai < n:
                raise ValueError(f"element {a!r} has residue {ai} out of range for {self}")

    def add(self, a: Element, b: Element) -> Element:
        self._validate(a)
        self._validate(b)
        return tuple((x + y) % n for x, y, n in zip(a, b, self.factors))

    def neg(self, a: Element) -> Element:
        self._validate(a)
        return tuple((-x) % n for x, n in zip(a, self.factors))

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    def scale(self, a: Element, k: int) -> Element:
        """k-fold sum of a (k may be any integer)."""
        self._validate(a)
        return tuple((k * x) % n for x, n in zip(a, self.factors))

    def zero(self) -> Element:
        return (0,) * len(self.factors)

    def element_order(self, a: Element) -> int:
        """Least k >= 1 with k*a = 0."""
        self._validate(a)
        return math.lcm(*(n // math.gcd(ai, n) for ai, n in zip(a, self.factors)))

    def order_profile(self) -> OrderProfile:
        """Map d -> number of elements of order d, keys ascending."""
        prof: dict[int, int] = {}
        for a in self._elements:
            d = self.element_order(a)
            prof[d] = prof.get(d, 0) + 1
        return dict(sorted(prof.items()))

    def characters(self) -> tuple[Element, ...]:
        """Character index tuples; the dual group uses the same enumeration."""
        return self._elements

    def char_exponent(self, chi: Element, a: Element) -> int:
        """Exponent t with chi(a) = zeta_e^t, e the group exponent."""
        self._validate(chi)
        self._validate(a)
        e = self.exponent
        return sum(k * x * (e // n) for k, x, n in zip(chi, a, self.factors)) % e

    def dual_sum(self, chi1: Element, chi2: Element) -> Element:
        """Pointwise product of characters, as index tuples."""
        return self.add(chi1, chi2)

    def inversion_permutation(self) -> list[int]:
        """Permutation sending each element index to the index of its negative."""
        return [self.index(self.neg(a)) for a in self._elements]

    def inversion_sign(self) -> int:
        return permutation_sign(self.inversion_permutation())


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given in one-line form, via cycle decomposition."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation")
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


def parse_group(spec: str) -> FiniteAbelianGroup:
    """Parse "C4", "c2xC3", "C2 x C2" (case-insensitive, whitespace ignored)."""
    cleaned = re.sub(r"\s+", "", spec)
    if not cleaned or not _GROUP_RE.fullmatch(cleaned):
        raise ValueError(f"malformed group spec {spec!r}; expected e.g. C6 or C2xC3")
    factors = tuple(int(part[1:]) for part in cleaned.lower().split("x"))
    if any(n == 0 for n in factors):
        raise ValueError(f"group spec {spec!r} contains a zero factor")
    return FiniteAbelianGroup(factors)


def _partitions(k: int, largest: int | None = None) -> Iterable[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    top = k if largest is None else min(k, largest)
    for first in range(top, 0, -1):
        for rest in _partitions(k - first, first):
            yield (first,) + rest


def abelian_groups_of_order(n: int) -> list[FiniteAbelianGroup]:
    """All isomorphism classes of abelian groups of order n, primary form.

    Factors are prime-power cyclic pieces sorted ascending, e.g. order 12 ->
    [C3xC4, C2xC2xC3].
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n == 1:
        return [FiniteAbelianGroup((1,))]
    from .numtheory import prime_factorization

    per_prime: list[list[tuple[int, ...]]] = []
    for p, k in prime_factorization(n):
        per_prime.append([tuple(p**e for e in part) for part in _partitions(k)])
    out = []
    for combo in itertools.product(*per_prime):
        factors = tuple(sorted(f for part in combo for f in part))
        out.append(FiniteAbelianGroup(factors))
    out.sort(key=lambda g: g.factors)
    return out


def abelian_groups_up_to(max_order: int) -> list[FiniteAbelianGroup]:
    out: list[FiniteAbelianGroup] = []
    for n in range(1, max_order + 1):
        out.extend(abelian_groups_of_order(n))
    return out


def subset_sum_zero_count(group: FiniteAbelianGroup) -> int:
    """Number of subsets of the group (empty set included) summing to zero.

    Walks all 2^n subsets in Gray-code order, one group add or sub per step.
    Guarded at order 24.
    """
    n = group.order
    if n > SUBSET_ENUM_GUARD:
        raise GuardExceeded("subset enumeration", n, SUBSET_ENUM_GUARD)
    els = group.elements()
    zero = group.zero()
    cur = zero
    count = 1  # empty subset
    member = [False] * n
    for step in range(1, 1 << n):
        k = (step & -step).bit_length() - 1
        if member[k]:
            cur = group.sub(cur, els[k])
            member[k] = False
        else:
            cur = group.add(cur, els[k])
            member[k] = True
        if cur == zero:
            count += 1
    return count


def parse_order_profile(data: Mapping[str, int] | Mapping[int, int]) -> OrderProfile:
    """Validate a JSON-style order profile {"1": 1, "2": 3, ...} -> {1: 1, 2: 3}."""
    prof: OrderProfile = {}
    for key, val in data.items():
        d = int(key)
        c = int(val)
        if d < 1:
            raise ValueError(f"order profile key {key!r} is not a positive order")
        if c < 0:
            raise ValueError(f"order profile count for {key!r} is negative")
        if c:
            prof[d] = c
    if not prof:
        raise ValueError("order profile is empty")
    return dict(sorted(prof.items()))
