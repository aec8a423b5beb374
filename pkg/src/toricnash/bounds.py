"""Bounds on the resolution length and on the number of division runs."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .curve import division_summary
from .errors import AlreadySmooth, InvalidInput
from .semigroup import CurveGenerators


def v_of(A: CurveGenerators) -> int:
    """Smallest ``a_i`` whose prefix ``a_1, ..., a_i`` already has gcd 1."""
    g = 0
    for a in A.elements:
        g = gcd(g, a)
        if g == 1:
            return a
    raise AssertionError("unreachable: CurveGenerators has gcd 1")


def eta_upper_bound(A: CurveGenerators) -> int:
    if A.is_smooth:
        raise AlreadySmooth(f"{A} already contains 1")
    return v_of(A) // 2


def fibonacci(m: int) -> int:
    """Fibonacci numbers indexed as 1, 2, 3, 5, 8, ... starting at ``m = 1``."""
    if m < 1:
        raise ValueError(f"index must be >= 1, got {m}")
    a, b = 1, 2
    for _ in range(m - 1):
        a, b = b, a + b
    return a


def _two_smallest(A: CurveGenerators) -> tuple[int, int]:
    if A.is_smooth:
        raise AlreadySmooth(f"{A} already contains 1")
    return A.elements[0], A.elements[1]


def check_fib_lower(A: CurveGenerators, delta: int) -> bool:
    """``a1 >= F(delta + 1)`` and ``a2 >= F(delta + 2)``."""
    a1, a2 = _two_smallest(A)
    return a1 >= fibonacci(delta + 1) and a2 >= fibonacci(delta + 2)


def _check_pair(a1: int, a2: int):
    if not 1 < a1 < a2:
        raise InvalidInput(f"need 1 < a1 < a2, got ({a1}, {a2})")


def delta_upper_fib(a1: int, a2: int) -> int:
    """Smallest m with ``a1 < F(m + 1)`` or ``a2 < F(m + 2)``.

    The number of division runs is strictly below the returned value.
    """
    _check_pair(a1, a2)
    m = 1
    f1, f2 = 2, 3  # F(m + 1), F(m + 2)
    while a1 >= f1 and a2 >= f2:
        m += 1
        f1, f2 = f2, f1 + f2
    return m


def digits(x: int) -> int:
    return len(str(abs(x)))


def delta_upper_digits(a1: int, a2: int) -> int:
    _check_pair(a1, a2)
    return min(5 * digits(a1), 5 * digits(a2) - 1)


@dataclass(frozen=True)
class BoundReport:
    a1: int
    a2: int
    v_value: int
    eta_bound: int
    fib_lower_a1: int
    fib_lower_a2: int
    delta_fib_bound: int
    delta_digit_bound: int
    eta: int
    delta: int

    @property
    def fib_lower_holds(self) -> bool:
        return self.a1 >= self.fib_lower_a1 and self.a2 >= self.fib_lower_a2


def bound_report(A: CurveGenerators) -> BoundReport:
    """Every bound next to the actual resolution length and run count."""
    a1, a2 = _two_smallest(A)
    summary = division_summary(A)
    v = v_of(A)
    return BoundReport(
        a1=a1,
        a2=a2,
        v_value=v,
        eta_bound=v // 2,
        fib_lower_a1=fibonacci(summary.delta + 1),
        fib_lower_a2=fibonacci(summary.delta + 2),
        delta_fib_bound=delta_upper_fib(a1, a2),
        delta_digit_bound=delta_upper_digits(a1, a2),
        eta=summary.eta,
        delta=summary.delta,
    )
