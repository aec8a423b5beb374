import pytest
from hypothesis import given, settings, strategies as st

from toricnash import (AlreadySmooth, InvalidInput, bound_report, check_fib_lower,
                       delta_upper_digits, delta_upper_fib, division_summary, eta_upper_bound,
                       fibonacci, make, nash_step, resolve, v_of)
from toricnash.bounds import digits

from helpers import singular_curve_sets
from oracles import fib_seq


def S(*xs):
    return make(xs)


@pytest.mark.parametrize("raw, v", [((12, 28, 33), 33), ((20, 165, 172), 172), ((5, 7), 7), ((1, 4), 1)])
def test_v_of(raw, v):
    assert v_of(make(raw)) == v


class TestEtaBound:
    def test_examples(self):
        assert eta_upper_bound(S(10**10, 2 * 10**10 + 1)) == 10**10
        assert eta_upper_bound(S(12, 28, 33)) == 16
        assert eta_upper_bound(S(2, 3)) == 1

    def test_smooth(self):
        with pytest.raises(AlreadySmooth):
            eta_upper_bound(S(1, 2))

    @given(singular_curve_sets(500, 5))
    @settings(deadline=None)
    def test_bound_and_v_drop(self, A):
        assert resolve(A).eta <= eta_upper_bound(A)
        B = nash_step(A)
        if not B.is_smooth:
            assert v_of(B) <= v_of(A) - 2


class TestFibonacci:
    def test_values(self):
        assert [fibonacci(m) for m in range(1, 31)] == fib_seq(30)
        assert (fibonacci(1), fibonacci(2), fibonacci(5)) == (1, 2, 8)

    def test_index(self):
        with pytest.raises(ValueError):
            fibonacci(0)

    def test_increasing(self):
        vals = [fibonacci(m) for m in range(1, 200)]
        assert all(a < b for a, b in zip(vals, vals[1:]))

    @pytest.mark.parametrize("k", range(1, 7))
    def test_fibonacci_digit_growth(self, k):
        for m in range(5 * k, 5 * k + 40):
            assert digits(fibonacci(m + 1)) >= k + 1


class TestFibLower:
    def test_examples(self):
        assert check_fib_lower(S(20, 165, 172), 3)
        assert check_fib_lower(S(12, 28, 33), 2)
        assert check_fib_lower(S(2, 3), 1)
        assert not check_fib_lower(S(2, 3), 2)

    def test_extremal_pairs(self):
        # consecutive Fibonacci pairs meet the bound with equality
        for m in range(1, 25):
            a1, a2 = fibonacci(m + 1), fibonacci(m + 2)
            d = division_summary(S(a1, a2)).delta
            assert d == m and a1 == fibonacci(d + 1) and a2 == fibonacci(d + 2)

    @given(singular_curve_sets(500, 5))
    @settings(deadline=None)
    def test_holds(self, A):
        d = division_summary(A).delta
        assert check_fib_lower(A, d)
        assert d < delta_upper_fib(A[0], A[1])
        assert d < delta_upper_digits(A[0], A[1])


class TestDeltaBounds:
    @pytest.mark.parametrize("pair, m", [((20, 165), 6), ((2, 3), 2), ((12, 28), 5)])
    def test_fib(self, pair, m):
        assert delta_upper_fib(*pair) == m

    @pytest.mark.parametrize("pair, b", [((20, 165), 10), ((7, 17), 5),
                                         ((10**10, 2 * 10**10 + 1), 54)])
    def test_digits(self, pair, b):
        assert delta_upper_digits(*pair) == b

    @given(st.integers(2, 10**40), st.integers(1, 10**40))
    def test_fib_is_smallest(self, a1, gap):
        a2 = a1 + gap
        m = delta_upper_fib(a1, a2)
        assert a1 < fibonacci(m + 1) or a2 < fibonacci(m + 2)
        assert m == 1 or (a1 >= fibonacci(m) and a2 >= fibonacci(m + 1))

    def test_pair_checked(self):
        for bad in [(1, 5), (5, 5), (6, 3)]:
            with pytest.raises(InvalidInput):
                delta_upper_fib(*bad)
            with pytest.raises(InvalidInput):
                delta_upper_digits(*bad)

    def test_digit_count_exact(self):
        assert [digits(x) for x in (9, 10, 99, 100, 10**15 - 1, 10**15)] == [1, 2, 2, 3, 15, 16]


def test_report():
    r = bound_report(S(20, 165, 172))
    assert (r.v_value, r.eta_bound, r.eta, r.delta) == (172, 86, 12, 3)
    assert (r.fib_lower_a1, r.fib_lower_a2, r.delta_fib_bound, r.delta_digit_bound) == (5, 8, 6, 10)
    assert r.fib_lower_holds
    r = bound_report(S(10**10, 2 * 10**10 + 1))
    assert r.eta_bound == 10**10 and r.eta == 2
    with pytest.raises(AlreadySmooth):
        bound_report(S(1, 9))
    # huge quotients are summarized without stepping
    r = bound_report(S(3, 3 * 10**12 + 2))
    assert r.eta == 10**12 + 1 and r.delta == 2
