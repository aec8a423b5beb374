"""Shared hypothesis strategies and small enumerations for the tests."""
from itertools import combinations
from math import gcd

from hypothesis import strategies as st

from toricnash import CurveGenerators


def curve_sets(max_value=60, max_size=5, min_value=1):
    return (st.lists(st.integers(min_value, max_value), min_size=1, max_size=max_size)
            .map(lambda xs: sorted(set(xs)))
            .filter(lambda xs: gcd(*xs) == 1)
            .map(lambda xs: CurveGenerators(tuple(xs))))


def singular_curve_sets(max_value=60, max_size=5):
    """Valid curve sets with ``min >= 2``."""
    return curve_sets(max_value, max_size, min_value=2)


def all_sets(max_value, max_size, min_value=1):
    for n in range(1, max_size + 1):
        for c in combinations(range(min_value, max_value + 1), n):
            if gcd(*c) == 1:
                yield CurveGenerators(c)
