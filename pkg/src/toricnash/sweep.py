"""Exhaustive compiled sweep over all curve generator sets up to a size.

Every set ``{a_1 < ... < a_n}`` with ``n <= 4``, ``a_n <= N`` and gcd 1 is
visited once and checked against the single-step and whole-trace claims of
the curve algorithm.  Per-set results are memoized in tables indexed by
lexicographic rank:

* ``eta`` from the direct recurrence ``eta(A) = 1 + eta(A^1)``;
* ``sumq`` and ``delta`` from the division recurrence
  ``sumq(A) = q + sumq(A^q)``, ``delta(A) = 1 + delta(A^q)``;
* the step at which the minimum first drops, from
  ``k(A) = 1`` if ``min(A^1) < a_1`` else ``1 + k(A^1)``.

Sets are visited block by block in increasing minimum, sizes 2, 3, 4 within
a block, lexicographically within a size.  ``A^1`` and ``A^q`` are always
visited before ``A``: either their minimum is smaller, or it is equal and
they are smaller in size or lexicographically.  Every pair of consecutive
sets of a trace starting in the domain is itself ``(B, B^1)`` for some ``B``
in the domain, so single-step monotonicity covers whole traces.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np
from numba import njit

CHECKS = (
    "min_step",       # min(A^1) <= min(A)
    "min_drop",       # min first drops after exactly q_1 direct steps
    "v_drop",         # v(A^1) <= v(A) - 2
    "eta_bound",      # eta(A) <= v(A) // 2
    "fib_lower",      # a1 >= F(delta + 1) and a2 >= F(delta + 2)
    "delta_fib",      # delta < smallest m with a1 < F(m+1) or a2 < F(m+2)
    "delta_digits",   # delta < min(5 k1, 5 k2 - 1)
    "mult_monotone",  # multiplicity of A^1 <= multiplicity of A
    "emb_monotone",   # embedding dimension of A^1 <= that of A
    "eta_sumq",       # direct eta == sum of quotients
    "delta_le_eta",   # delta <= eta
    "remainder",      # min(A^q) == r
)
MAX_SIZE = 4
MAX_ELEMENT = 500  # keeps eta <= 250 in uint8 tables


@njit(cache=True)
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def _tables(N):
    g = np.zeros((N + 1, N + 1), np.int16)
    for a in range(N + 1):
        for b in range(N + 1):
            g[a, b] = _gcd(a, b)
    # rep[a, b, x]: x in N{a, b} for a <= b
    rep = np.zeros((N + 1, N + 1, N + 1), np.bool_)
    for a in range(1, N + 1):
        for b in range(a, N + 1):
            for i in range(N // a + 1):
                x = i * a
                while x <= N:
                    rep[a, b, x] = True
                    x += b
    fib = np.zeros(64, np.int64)
    fib[1] = 1
    fib[2] = 2
    for i in range(3, 64):
        fib[i] = fib[i - 1] + fib[i - 2]
    fibub = np.zeros((N + 1, N + 1), np.int64)
    digub = np.zeros((N + 1, N + 1), np.int64)
    for a1 in range(2, N + 1):
        k1 = 0
        x = a1
        while x:
            x //= 10
            k1 += 1
        for a2 in range(a1 + 1, N + 1):
            m = 1
            while a1 >= fib[m + 1] and a2 >= fib[m + 2]:
                m += 1
            fibub[a1, a2] = m
            k2 = 0
            x = a2
            while x:
                x //= 10
                k2 += 1
            digub[a1, a2] = min(5 * k1, 5 * k2 - 1)
    return g, rep, fib, fibub, digub


@njit(cache=True)
def _offsets(N):
    # lexicographic rank offsets for subsets of {1..N}
    off1 = np.zeros(N + 2, np.int64)
    for c0 in range(1, N + 1):
        off1[c0 + 1] = off1[c0] + (N - c0)
    off23 = np.zeros((N + 1, N + 1), np.int64)
    off24 = np.zeros((N + 1, N + 1), np.int64)
    r3 = 0
    r4 = 0
    for c0 in range(1, N + 1):
        for c1 in range(c0 + 1, N + 1):
            off23[c0, c1] = r3
            r3 += N - c1
            off24[c0, c1] = r4
            m = N - c1
            r4 += m * (m - 1) // 2
    return off1, off23, off24


@njit(inline="always")
def _rank2(c0, c1, off1):
    return off1[c0] + c1 - c0 - 1


@njit(inline="always")
def _rank3(c0, c1, c2, off23):
    return off23[c0, c1] + c2 - c1 - 1


@njit(inline="always")
def _rank4(c0, c1, c2, c3, N, off24):
    m = N - c1
    i = c2 - c1 - 1
    return off24[c0, c1] + i * (m - 1) - i * (i - 1) // 2 + c3 - c2 - 1


@njit(inline="always")
def _step(src, n, dst):
    a1 = src[0]
    m = 0
    placed = False
    for i in range(1, n):
        d = src[i] - a1
        if not placed and a1 <= d:
            dst[m] = a1
            m += 1
            placed = True
            if d == a1:
                continue
        dst[m] = d
        m += 1
    if not placed:
        dst[m] = a1
        m += 1
    return m


@njit(inline="always")
def _in3(x, a, b, c, rep):
    # x in N{a, b, c} with a < b < c
    y = x
    while y >= 0:
        if rep[a, b, y]:
            return True
        y -= c
    return False


@njit(inline="always")
def _emb(s, n, rep):
    e = 1
    for i in range(1, n):
        x = s[i]
        if i == 1:
            inside = x % s[0] == 0
        elif i == 2:
            inside = rep[s[0], s[1], x]
        else:
            inside = _in3(x, s[0], s[1], s[2], rep)
        if not inside:
            e += 1
    return e


@njit(inline="always")
def _v(s, n, g):
    acc = s[0]
    if acc == 1:
        return 1
    for i in range(1, n):
        acc = g[acc, s[i]]
        if acc == 1:
            return s[i]
    return -1


@njit(inline="always")
def _index(t, n, N, off1, off23, off24):
    if n == 2:
        return _rank2(t[0], t[1], off1)
    if n == 3:
        return _rank3(t[0], t[1], t[2], off23)
    return _rank4(t[0], t[1], t[2], t[3], N, off24)


@njit(inline="always")
def _check(a1, b2, min1, v0, v1, e0, e1, eta, sq, dl, kd, q1, r_ok, fib, fibub, digub, viol):
    if min1 > a1:
        viol[0] += 1
        viol[7] += 1
    if kd != q1:
        viol[1] += 1
    if v1 > v0 - 2:
        viol[2] += 1
    if eta > v0 // 2:
        viol[3] += 1
    if a1 < fib[dl + 1] or b2 < fib[dl + 2]:
        viol[4] += 1
    if dl >= fibub[a1, b2]:
        viol[5] += 1
    if dl >= digub[a1, b2]:
        viol[6] += 1
    if e1 > e0:
        viol[8] += 1
    if eta != sq:
        viol[9] += 1
    if dl > eta:
        viol[10] += 1
    if not r_ok:
        viol[11] += 1


@njit(cache=True)
def _visit(s, n, t1, t2, N, g, rep, fib, fibub, digub, off1, off23, off24,
           eta2, eta3, eta4, sq2, sq3, sq4, dl2, dl3, dl4, kd2, kd3, kd4, viol):
    a1 = s[0]
    n1 = _step(s, n, t1)
    v0 = _v(s, n, g)
    v1 = _v(t1, n1, g)
    e0 = _emb(s, n, rep)
    e1 = _emb(t1, n1, rep)
    if t1[0] == 1:
        eta = 1
    else:
        j = _index(t1, n1, N, off1, off23, off24)
        if n1 == 2:
            eta = 1 + int(eta2[j])
        elif n1 == 3:
            eta = 1 + int(eta3[j])
        else:
            eta = 1 + int(eta4[j])
    if t1[0] < a1:
        kd = 1
    elif n1 == 2:
        kd = 1 + int(kd2[t1[1]])
    elif n1 == 3:
        kd = 1 + int(kd3[t1[1], t1[2]])
    else:
        kd = 1 + int(kd4[t1[1], t1[2], t1[3]])
    # jump over one whole division run
    astar = -1
    for i in range(1, n):
        if s[i] % a1 != 0:
            astar = s[i]
            break
    q = astar // a1
    r = astar - q * a1
    shift = q * a1
    nb = 0
    placed = False
    for i in range(1, n):
        d = s[i] - shift
        if d <= 0:
            continue
        if not placed and a1 <= d:
            t2[nb] = a1
            nb += 1
            placed = True
            if d == a1:
                continue
        t2[nb] = d
        nb += 1
    if not placed:
        t2[nb] = a1
        nb += 1
    if t2[0] == 1:
        sq = q
        dl = 1
    else:
        j = _index(t2, nb, N, off1, off23, off24)
        if nb == 2:
            sq = q + int(sq2[j])
            dl = 1 + int(dl2[j])
        elif nb == 3:
            sq = q + int(sq3[j])
            dl = 1 + int(dl3[j])
        else:
            sq = q + int(sq4[j])
            dl = 1 + int(dl4[j])
    j = _index(s, n, N, off1, off23, off24)
    if n == 2:
        eta2[j] = eta
        sq2[j] = sq
        dl2[j] = dl
        kd2[s[1]] = kd
    elif n == 3:
        eta3[j] = eta
        sq3[j] = sq
        dl3[j] = dl
        kd3[s[1], s[2]] = kd
    else:
        eta4[j] = eta
        sq4[j] = sq
        dl4[j] = dl
        kd4[s[1], s[2], s[3]] = kd
    _check(a1, s[1], t1[0], v0, v1, e0, e1, eta, sq, dl, kd, q, t2[0] == r,
           fib, fibub, digub, viol)


@njit(cache=True)
def _kernel(N, max_size, fast, g, rep, fib, fibub, digub, off1, off23, off24,
            eta2, eta3, eta4, sq2, sq3, sq4, dl2, dl3, dl4, kd2, kd3, kd4, viol):
    s = np.zeros(4, np.int64)
    t1 = np.zeros(4, np.int64)
    t2 = np.zeros(4, np.int64)
    count = 0
    for a1 in range(2, N + 1):
        s[0] = a1
        for a2 in range(a1 + 1, N + 1):
            if g[a1, a2] == 1:
                s[1] = a2
                count += 1
                _visit(s, 2, t1, t2, N, g, rep, fib, fibub, digub, off1, off23, off24,
                       eta2, eta3, eta4, sq2, sq3, sq4, dl2, dl3, dl4, kd2, kd3, kd4, viol)
        if max_size < 3:
            continue
        for a2 in range(a1 + 1, N + 1):
            s[1] = a2
            g2 = g[a1, a2]
            for a3 in range(a2 + 1, N + 1):
                if g[g2, a3] == 1:
                    s[2] = a3
                    count += 1
                    _visit(s, 3, t1, t2, N, g, rep, fib, fibub, digub, off1, off23, off24,
                           eta2, eta3, eta4, sq2, sq3, sq4, dl2, dl3, dl4, kd2, kd3, kd4, viol)
        if max_size < 4:
            continue
        for a2 in range(a1 + 1, N + 1):
            s[1] = a2
            g2 = g[a1, a2]
            for a3 in range(a2 + 1, N + 1):
                s[2] = a3
                g3 = g[g2, a3]
                count += _inner4(a1, a2, a3, g3, fast, s, t1, t2, N, g, rep, fib, fibub, digub,
                                 off1, off23, off24, eta2, eta3, eta4, sq2, sq3, sq4,
                                 dl2, dl3, dl4, kd2, kd3, kd4, viol)
    return count


@njit(cache=True)
def _inner4(a1, a2, a3, g3, fast, s, t1, t2, N, g, rep, fib, fibub, digub,
            off1, off23, off24, eta2, eta3, eta4, sq2, sq3, sq4, dl2, dl3, dl4,
            kd2, kd3, kd4, viol):
    # all 4-sets {a1, a2, a3, a4}; data not depending on a4 is hoisted
    d2 = a2 - a1
    d3 = a3 - a1
    # prefix P of A^1: sorted {a1, d2, d3}
    if a1 < d2:
        p0, p1, p2, np_ = a1, d2, d3, 3
    elif a1 == d2:
        p0, p1, p2, np_ = a1, d3, 0, 2
    elif a1 < d3:
        p0, p1, p2, np_ = d2, a1, d3, 3
    elif a1 == d3:
        p0, p1, p2, np_ = d2, d3, 0, 2
    else:
        p0, p1, p2, np_ = d2, d3, a1, 3
    pmax = p2 if np_ == 3 else p1
    # when a1 is the largest element of P, A^1 may end in (.., d4, a1)
    g23 = g[d2, d3]
    if d2 == 1:
        v23 = 1
    elif g23 == 1:
        v23 = d3
    else:
        v23 = -1
    emb23 = 1 if d3 % d2 == 0 else 2
    acc = _gcd(p0, p1)
    vP = -1
    if p0 == 1:
        vP = 1
    elif acc == 1:
        vP = p1
    elif np_ == 3:
        acc = _gcd(acc, p2)
        if acc == 1:
            vP = p2
    embP = 1
    if p1 % p0 != 0:
        embP += 1
    if np_ == 3 and not rep[p0, p1, p2]:
        embP += 1
    if np_ == 3:
        baseP = _rank4(p0, p1, p2, p2 + 1, N, off24)
    else:
        baseP = _rank3(p0, p1, p1 + 1, off23)
    # v and embedding dimension of the prefix of A itself
    g2 = g[a1, a2]
    if g2 == 1:
        v0p = a2
    elif g3 == 1:
        v0p = a3
    else:
        v0p = -1
    emb3 = 1
    if a2 % a1 != 0:
        emb3 += 1
    if not rep[a1, a2, a3]:
        emb3 += 1
    # first division run when its divisor is in the prefix
    if a2 % a1 != 0:
        astar = a2
    elif a3 % a1 != 0:
        astar = a3
    else:
        astar = -1
    q = 0
    r = 0
    q0 = 0
    q1_ = 0
    q2 = 0
    nq = 0
    qmax = 0
    baseQ = 0
    jQ = 0
    if astar > 0:
        q = astar // a1
        r = astar - q * a1
        shift = q * a1
        b2 = a2 - shift
        b3 = a3 - shift
        # Q: sorted {a1} U {b2, b3 if positive}; b2 < b3 and b3 > 0
        if b2 > 0:
            if a1 < b2:
                q0, q1_, q2, nq = a1, b2, b3, 3
            elif a1 == b2:
                q0, q1_, q2, nq = a1, b3, 0, 2
            elif a1 < b3:
                q0, q1_, q2, nq = b2, a1, b3, 3
            elif a1 == b3:
                q0, q1_, q2, nq = b2, b3, 0, 2
            else:
                q0, q1_, q2, nq = b2, b3, a1, 3
        else:
            if a1 < b3:
                q0, q1_, q2, nq = a1, b3, 0, 2
            elif a1 == b3:
                q0, q1_, q2, nq = a1, 0, 0, 1
            else:
                q0, q1_, q2, nq = b3, a1, 0, 2
        qmax = q2 if nq == 3 else q1_
        if nq == 3:
            baseQ = _rank4(q0, q1_, q2, q2 + 1, N, off24)
            jQ = _rank3(q0, q1_, q2, off23)
        elif nq == 2:
            baseQ = _rank3(q0, q1_, q1_ + 1, off23)
            jQ = _rank2(q0, q1_, off1)
    base4 = _rank4(a1, a2, a3, a3 + 1, N, off24)
    count = 0
    for a4 in range(a3 + 1, N + 1):
        if g[g3, a4] != 1:
            continue
        count += 1
        d4 = a4 - a1
        e4 = a4 - q * a1
        if not (fast and astar > 0 and nq >= 2):
            s[3] = a4
            _visit(s, 4, t1, t2, N, g, rep, fib, fibub, digub, off1, off23, off24,
                   eta2, eta3, eta4, sq2, sq3, sq4, dl2, dl3, dl4, kd2, kd3, kd4, viol)
            continue
        v0 = v0p if v0p > 0 else a4
        e0 = emb3 + (0 if _in3(a4, a1, a2, a3, rep) else 1)
        if d4 > pmax:
            # A^1 = P + (d4,)
            v1 = vP if vP > 0 else d4
            if np_ == 3:
                e1 = embP + (0 if _in3(d4, p0, p1, p2, rep) else 1)
            else:
                e1 = embP + (0 if rep[p0, p1, d4] else 1)
            if p0 == 1:
                eta = 1
            elif np_ == 3:
                eta = 1 + int(eta4[baseP + d4 - p2 - 1])
            else:
                eta = 1 + int(eta3[baseP + d4 - p1 - 1])
            if p0 < a1:
                kd = 1
            elif np_ == 3:
                kd = 1 + int(kd4[p1, p2, d4])
            else:
                kd = 1 + int(kd3[p1, d4])
        else:
            # d3 < d4 <= a1: A^1 = (d2, d3, d4, a1), or P when d4 == a1
            kd = 1
            if d4 == a1:
                v1 = vP
                e1 = embP
                eta = 1 if d2 == 1 else 1 + int(eta3[_rank3(d2, d3, a1, off23)])
            else:
                if v23 > 0:
                    v1 = v23
                elif g[g23, d4] == 1:
                    v1 = d4
                else:
                    v1 = a1
                e1 = emb23 + (0 if rep[d2, d3, d4] else 1) + (0 if _in3(a1, d2, d3, d4, rep) else 1)
                eta = 1 if d2 == 1 else 1 + int(eta4[_rank4(d2, d3, d4, a1, N, off24)])
        if e4 > qmax:
            # A^q = Q + (e4,)
            if q0 == 1:
                sq = q
                dl = 1
            elif nq == 3:
                j = baseQ + e4 - q2 - 1
                sq = q + int(sq4[j])
                dl = 1 + int(dl4[j])
            else:
                j = baseQ + e4 - q1_ - 1
                sq = q + int(sq3[j])
                dl = 1 + int(dl3[j])
        elif q0 == 1:
            sq = q
            dl = 1
        else:
            # e4 <= a1 == max(Q): A^q = Q, or Q with e4 just below a1
            if e4 == a1:
                j = jQ
                m = nq
            elif nq == 3:
                j = _rank4(q0, q1_, e4, a1, N, off24)
                m = 4
            else:
                j = _rank3(q0, e4, a1, off23)
                m = 3
            if m == 4:
                sq = q + int(sq4[j])
                dl = 1 + int(dl4[j])
            elif m == 3:
                sq = q + int(sq3[j])
                dl = 1 + int(dl3[j])
            else:
                sq = q + int(sq2[j])
                dl = 1 + int(dl2[j])
        j = base4 + a4 - a3 - 1
        eta4[j] = eta
        sq4[j] = sq
        dl4[j] = dl
        kd4[a2, a3, a4] = kd
        _check(a1, a2, min(d2, a1), v0, v1, e0, e1, eta, sq, dl, kd, q, q0 == r,
               fib, fibub, digub, viol)
    return count


@dataclass
class SweepResult:
    max_element: int
    max_size: int
    sets_checked: int
    smooth_sets: int
    violations: dict[str, int]
    tables: dict = field(default_factory=dict, repr=False)

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def lookup(self, elements) -> tuple[int, int, int]:
        """``(eta, sum of quotients, delta)`` recorded for a set with ``a_1 > 1``."""
        t = sorted(elements)
        n = len(t)
        if not self.tables:
            raise ValueError("sweep was run without keep_tables")
        if t[0] == 1:
            return 0, 0, 0
        off1, off23, off24 = self.tables["offsets"]
        N = self.max_element
        if n == 2:
            j = _rank2(t[0], t[1], off1)
        elif n == 3:
            j = _rank3(t[0], t[1], t[2], off23)
        else:
            j = _rank4(t[0], t[1], t[2], t[3], N, off24)
        return tuple(int(self.tables[name][n][j]) for name in ("eta", "sumq", "delta"))


def curve_sweep(max_element: int, max_size: int = MAX_SIZE, fast: bool = True,
                keep_tables: bool = False) -> SweepResult:
    """Check every curve set with ``n <= max_size`` and ``a_n <= max_element``.

    ``fast=False`` routes every set through the general visitor, which is
    slower and exists to cross-check the hoisted inner loop.
    """
    N = max_element
    if not 2 <= max_size <= MAX_SIZE:
        raise ValueError(f"max_size must be in 2..{MAX_SIZE}, got {max_size}")
    if not 2 <= N <= MAX_ELEMENT:
        raise ValueError(f"max_element must be in 2..{MAX_ELEMENT}, got {N}")
    g, rep, fib, fibub, digub = _tables(N)
    off1, off23, off24 = _offsets(N)

    def table(k):
        return np.zeros(comb(N, k) if k <= max_size else 1, np.uint8)

    eta = {k: table(k) for k in (2, 3, 4)}
    sq = {k: table(k) for k in (2, 3, 4)}
    dl = {k: table(k) for k in (2, 3, 4)}
    kd2 = np.zeros(N + 1, np.uint8)
    kd3 = np.zeros((N + 1, N + 1), np.uint8)
    kd4 = np.zeros((N + 1, N + 1, N + 1) if max_size >= 4 else (1, 1, 1), np.uint8)
    viol = np.zeros(len(CHECKS), np.int64)
    count = _kernel(N, max_size, fast, g, rep, fib, fibub, digub, off1, off23, off24,
                    eta[2], eta[3], eta[4], sq[2], sq[3], sq[4], dl[2], dl[3], dl[4],
                    kd2, kd3, kd4, viol)
    # every set containing 1 has gcd 1 and is already smooth
    smooth = sum(comb(N - 1, k) for k in range(max_size))
    result = SweepResult(N, max_size, int(count), smooth,
                         {name: int(v) for name, v in zip(CHECKS, viol)})
    if keep_tables:
        result.tables = {"eta": eta, "sumq": sq, "delta": dl, "offsets": (off1, off23, off24)}
    return result
