"""Collapsing a trace into division steps and comparing with the bounds."""
from toricnash import bound_report, division_summary, fibonacci, make, resolve

A = make([20, 165, 172])

# --- Division rows ---
s = division_summary(A)
for row in s.rows:
    print(f"{row.a2} = {row.a1}*{row.q} + {row.r}   -> {row.set_after}")
print("rows:", s.delta, " quotients:", s.quotients, " sum:", s.eta)
print("direct iteration:", resolve(A).eta)

# --- Bounds next to the actual values ---
r = bound_report(A)
print(f"eta = {r.eta} <= floor(v/2) = {r.eta_bound}")
print(f"a1 = {r.a1} >= {r.fib_lower_a1} and a2 = {r.a2} >= {r.fib_lower_a2}")
print(f"delta = {r.delta} < {r.delta_fib_bound} (Fibonacci) and < {r.delta_digit_bound} (digits)")

# consecutive Fibonacci numbers need the most division rows for their size
for m in range(1, 8):
    pair = make([fibonacci(m + 1), fibonacci(m + 2)])
    print(pair, "rows:", division_summary(pair).delta)

# huge quotients cost nothing: the rows jump over whole runs of steps
print(division_summary(make([3, 3 * 10**12 + 2])).quotients)
