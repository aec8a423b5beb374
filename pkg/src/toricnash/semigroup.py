"""Generator sets of toric curves and numerical semigroup primitives.

A toric curve is determined by a finite set of positive integers
``0 < a_1 < ... < a_n`` with ``gcd = 1``.  All arithmetic is done on Python
integers, so inputs of any size are handled exactly.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Optional, Sequence

from .errors import EmptyInput, GcdNotOne, NonPositiveElement


@dataclass(frozen=True)
class CurveGenerators:
    """Strictly increasing positive integers with gcd 1.

    Use :func:`make` to build one from unsorted data with repeats; the
    constructor itself only validates.
    """

    elements: tuple[int, ...]

    def __post_init__(self):
        els = self.elements
        if not els:
            raise EmptyInput("a curve generator set needs at least one element")
        if els[0] <= 0:
            raise NonPositiveElement(f"non-positive element {els[0]} in {list(els)}")
        if any(b <= a for a, b in zip(els, els[1:])):
            raise ValueError(f"elements must be strictly increasing: {list(els)}")
        g = gcd(*els)
        if g != 1:
            raise GcdNotOne(f"gcd of {list(els)} is {g}, expected 1")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __getitem__(self, i):
        return self.elements[i]

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.elements)) + "}"

    @property
    def min(self) -> int:
        return self.elements[0]

    @property
    def is_smooth(self) -> bool:
        return self.elements[0] == 1


@dataclass(frozen=True)
class MembershipWitness:
    """Nonnegative coefficients with ``sum(c * a) == target``."""

    coefficients: tuple[int, ...]
    target: int

    def verify(self, A: CurveGenerators) -> bool:
        return (len(self.coefficients) == len(A)
                and all(c >= 0 for c in self.coefficients)
                and sum(c * a for c, a in zip(self.coefficients, A)) == self.target)


def make(raw: Iterable[int]) -> CurveGenerators:
    """Sort and deduplicate ``raw`` and check the gcd condition."""
    values = [operator.index(v) for v in raw]
    if not values:
        raise EmptyInput("a curve generator set needs at least one element")
    bad = [v for v in values if v <= 0]
    if bad:
        raise NonPositiveElement(f"non-positive element {bad[0]} in {values}")
    return CurveGenerators(tuple(sorted(set(values))))


def normalize(A: CurveGenerators) -> CurveGenerators:
    """Drop every proper multiple of ``min(A)``; the semigroup is unchanged."""
    a1 = A.min
    return CurveGenerators((a1,) + tuple(a for a in A.elements[1:] if a % a1))


def _represent(gens: Sequence[int], x: int) -> Optional[list[int]]:
    # gens ascending, all positive
    if x < 0:
        return None
    if x == 0:
        return [0] * len(gens)
    if not gens:
        return None
    if len(gens) == 1:
        q, r = divmod(x, gens[0])
        return None if r else [q]
    if len(gens) == 2:
        a, b = gens
        g = gcd(a, b)
        if x % g:
            return None
        a_, b_, x_ = a // g, b // g, x // g
        lam_b = (x_ * pow(b_, -1, a_)) % a_ if a_ > 1 else 0
        if lam_b * b > x:
            return None
        return [(x - lam_b * b) // a, lam_b]
    # c * (g0 / gcd(g0, c)) == g0 * (c / gcd(g0, c)), so some representation
    # uses c fewer than g0 / gcd(g0, c) times
    c, g0 = gens[-1], gens[0]
    top = min(x // c, g0 // gcd(g0, c) - 1)
    for lam in range(top + 1):
        rest = _represent(gens[:-1], x - lam * c)
        if rest is not None:
            return rest + [lam]
    return None


def is_member(A: CurveGenerators, x: int) -> Optional[MembershipWitness]:
    """Return a witness that ``x`` lies in the semigroup generated by ``A``.

    Returns ``None`` when ``x`` is not a member.  The search is complete: the
    last two generators are solved in closed form and every other coefficient
    is bounded by the trade-off ``c * g0 = g0 * c``.
    """
    x = operator.index(x)
    if x < 0:
        raise ValueError(f"membership is only defined for x >= 0, got {x}")
    coeffs = _represent(A.elements, x)
    if coeffs is None:
        return None
    return MembershipWitness(tuple(coeffs), x)


def minimal_generators(A: CurveGenerators) -> CurveGenerators:
    """The unique minimal subset of ``A`` generating the same semigroup."""
    kept = []
    for i, a in enumerate(A.elements):
        # only smaller elements can appear in a representation of a
        if _represent(A.elements[:i], a) is None:
            kept.append(a)
    return CurveGenerators(tuple(kept))


def embedding_dimension(A: CurveGenerators) -> int:
    return len(minimal_generators(A))


def multiplicity(A: CurveGenerators) -> int:
    """Multiplicity of the curve at the origin, i.e. ``min(A)``."""
    return A.min
