"""Iterated Nash modification of toric curves.

On generator sets one Nash modification is
``A -> {a_1} U {a_2 - a_1, ..., a_n - a_1}``; iterating until the set
contains 1 resolves the curve.  The iteration splits into runs governed by
one division with remainder each, which :func:`division_summary` records.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import AlreadySmooth, IterationCap, SingletonInput
from .semigroup import CurveGenerators, embedding_dimension, make

DEFAULT_CAP = 10**6


def nash_step(A: CurveGenerators) -> CurveGenerators:
    """One Nash modification.  Does not normalize; collisions merge."""
    if len(A) == 1:
        if A.min == 1:
            return A
        raise SingletonInput(f"cannot step the singleton {A}")
    a1 = A.min
    return make([a1] + [a - a1 for a in A.elements[1:]])


@dataclass(frozen=True)
class ResolutionTrace:
    steps: tuple[CurveGenerators, ...]
    eta: int
    per_step_multiplicity: tuple[int, ...]
    per_step_embedding_dim: tuple[int, ...]

    @property
    def initial(self) -> CurveGenerators:
        return self.steps[0]

    @property
    def final(self) -> CurveGenerators:
        return self.steps[-1]

    @property
    def resolved(self) -> bool:
        return self.steps[-1].is_smooth


def resolve(A: CurveGenerators, cap: int = DEFAULT_CAP) -> ResolutionTrace:
    """Iterate :func:`nash_step` until 1 appears, keeping every set.

    ``eta`` is the number of steps taken, so a set already containing 1 has
    ``eta == 0``.  Termination is guaranteed; exceeding ``cap`` steps raises
    :class:`IterationCap`.
    """
    steps = [A]
    cur = A
    while not cur.is_smooth:
        if len(steps) > cap:
            raise IterationCap(f"no resolution of {A} within {cap} steps")
        cur = nash_step(cur)
        steps.append(cur)
    return ResolutionTrace(
        steps=tuple(steps),
        eta=len(steps) - 1,
        per_step_multiplicity=tuple(s.min for s in steps),
        per_step_embedding_dim=tuple(embedding_dimension(s) for s in steps),
    )


@dataclass(frozen=True)
class DivisionRow:
    a1: int
    a2: int
    q: int
    r: int
    set_after: CurveGenerators


@dataclass(frozen=True)
class DivisionSummary:
    rows: tuple[DivisionRow, ...]

    @property
    def delta(self) -> int:
        return len(self.rows)

    @property
    def quotients(self) -> tuple[int, ...]:
        return tuple(row.q for row in self.rows)

    @property
    def eta(self) -> int:
        return sum(row.q for row in self.rows)

    @property
    def final(self) -> CurveGenerators:
        return self.rows[-1].set_after


def _first_division(A: CurveGenerators) -> tuple[int, int, int, int]:
    a1 = A.min
    # some element is not a multiple of a1 because gcd(A) == 1 and a1 > 1
    a2 = next(a for a in A.elements[1:] if a % a1)
    q, r = divmod(a2, a1)
    return a1, a2, q, r


def division_summary(A: CurveGenerators) -> DivisionSummary:
    """Split the resolution of ``A`` into division algorithms.

    Each row divides the smallest element that is not a multiple of the
    minimum by the minimum.  The ``q`` single steps of a row are taken at
    once: every element above ``q * a1`` drops by ``q * a1`` and the smaller
    multiples of ``a1`` have merged into ``a1`` along the way.
    """
    if A.is_smooth:
        raise AlreadySmooth(f"{A} already contains 1")
    rows = []
    cur = A
    while not cur.is_smooth:
        a1, a2, q, r = _first_division(cur)
        shift = q * a1
        after = make([a1] + [a - shift for a in cur.elements[1:] if a > shift])
        rows.append(DivisionRow(a1, a2, q, r, after))
        cur = after
    return DivisionSummary(tuple(rows))


def min_drop_steps(A: CurveGenerators) -> int:
    """Smallest k with ``min(A^k) < min(A)``: the first quotient in the summary."""
    if A.is_smooth:
        raise AlreadySmooth(f"{A} already contains 1")
    return _first_division(A)[2]


@dataclass(frozen=True)
class TraceReport:
    multiplicities: tuple[int, ...]
    embedding_dims: tuple[int, ...]
    multiplicity_nonincreasing: bool
    embedding_nonincreasing: bool

    @property
    def ok(self) -> bool:
        return self.multiplicity_nonincreasing and self.embedding_nonincreasing

    @property
    def multiplicity_drops(self) -> tuple[int, ...]:
        """Step indices at which the multiplicity strictly decreases."""
        m = self.multiplicities
        return tuple(k for k in range(1, len(m)) if m[k] < m[k - 1])


def _nonincreasing(seq) -> bool:
    return all(b <= a for a, b in zip(seq, seq[1:]))


def trace_invariants(t: ResolutionTrace) -> TraceReport:
    mult = tuple(s.min for s in t.steps)
    emb = tuple(embedding_dimension(s) for s in t.steps)
    return TraceReport(mult, emb, _nonincreasing(mult), _nonincreasing(emb))
