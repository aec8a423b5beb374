from fractions import Fraction
from itertools import combinations, permutations, product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from toricnash import (BinomialRelation, DimensionMismatch, DuplicateVector, EmptyInput,
                       LatticeNotFull, OriginInHull, SingularPivot, UnsupportedDimension,
                       all_charts, chart, is_smooth, iterate_multidim, kernel_binomials,
                       log_jacobian, minimal_generators, nash_step, validate,
                       verify_binomial)
from toricnash import toric as T

from helpers import all_sets, singular_curve_sets
from oracles import binomial_pairs, box_separator, lattice_full

XZ_Y4 = [(1, 0), (1, 1), (3, 4)]
XZ_Y3 = [(1, 0), (1, 1), (2, 3)]
XZ_Y2 = [(1, 0), (1, 1), (1, 2)]


def configs_2d(lo, hi, max_n):
    vecs = [v for v in product(range(lo, hi + 1), repeat=2) if any(v)]
    for n in range(2, max_n + 1):
        for combo in combinations(vecs, n):
            yield combo


def valid_2d(lo, hi, max_n):
    for combo in configs_2d(lo, hi, max_n):
        try:
            yield validate(combo)
        except (LatticeNotFull, OriginInHull):
            continue


def pair_smooth(vectors) -> bool:
    # some lattice basis taken from the vectors generates all of them
    for b, c in combinations(vectors, 2):
        dt = b[0] * c[1] - b[1] * c[0]
        if abs(dt) != 1:
            continue
        if all((a[0] * c[1] - a[1] * c[0]) * dt >= 0 and (b[0] * a[1] - b[1] * a[0]) * dt >= 0
               for a in vectors):
            return True
    return False


class TestLinearAlgebra:
    def test_det_matches_exact_elimination(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            k = int(rng.integers(1, 6))
            M = rng.integers(-9, 10, size=(k, k))
            assert T.det(M.tolist()) == round(np.linalg.det(M.astype(float)))

    def test_det_big(self):
        M = [[10**20, 1], [3, 10**20 + 7]]
        assert T.det(M) == 10**20 * (10**20 + 7) - 3

    def test_minor_gcd(self):
        assert T.minor_gcd([(2, 0), (0, 2)], 2) == 4
        assert T.minor_gcd(XZ_Y4, 2) == 1


class TestValidate:
    def test_examples(self):
        c = validate(XZ_Y3)
        assert c.separator == (1, 0) and c.dim == 2 and c.n == 3
        with pytest.raises(LatticeNotFull, match="minors is 4"):
            validate([(2, 0), (0, 2)])
        with pytest.raises(OriginInHull, match=r"1/2\*\(1,0\) \+ 1/2\*\(-1,0\)"):
            validate([(1, 0), (-1, 0)])

    def test_errors(self):
        with pytest.raises(EmptyInput):
            validate([])
        with pytest.raises(DimensionMismatch):
            validate([(1, 0), (1,)])
        with pytest.raises(DuplicateVector):
            validate([(1, 0), (1, 0), (0, 1)])
        with pytest.raises(LatticeNotFull):
            validate([4, 6])
        with pytest.raises(OriginInHull):
            validate([(1, 0), (0, 1), (-1, -1)])

    def test_curve_and_negative_curve(self):
        assert validate([12, 28, 33]).separator == (1,)
        assert validate([-3, -5]).separator == (-1,)

    def test_sweep_against_oracles(self):
        # every configuration of 2..3 distinct nonzero vectors in [-2, 2]^2
        seen = 0
        for combo in configs_2d(-2, 2, 3):
            sep = box_separator(combo, 8)
            full = lattice_full(combo)
            if sep is None:
                with pytest.raises(OriginInHull):
                    validate(combo)
                cert = T.hull_certificate(combo)
                idx, lam = cert
                assert sum(lam) == 1 and all(x >= 0 for x in lam)
                assert all(sum(w * combo[i][k] for i, w in zip(idx, lam)) == 0 for k in range(2))
            elif not full:
                with pytest.raises(LatticeNotFull):
                    validate(combo)
            else:
                c = validate(combo)
                assert all(T.dot(c.separator, v) > 0 for v in combo)
                seen += 1
        assert seen > 500

    @given(st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6)),
                    min_size=3, max_size=6, unique=True))
    @settings(deadline=None)
    def test_3d_separator_or_certificate(self, vecs):
        if any(not any(v) for v in vecs):
            return
        if T.minor_gcd(vecs, 3) == 0:
            return
        cert = T.hull_certificate(vecs)
        sep = T.separating_functional(vecs)
        # exactly one of the two certificates exists
        assert (cert is None) != (sep is None)
        if sep is not None:
            assert all(T.dot(sep, v) > 0 for v in vecs)
        else:
            idx, lam = cert
            assert all(sum(Fraction(w) * vecs[i][k] for i, w in zip(idx, lam)) == 0 for k in range(3))


class TestCharts:
    def test_surface_examples(self):
        c = chart(validate(XZ_Y4), (0, 1))
        assert c.generators == ((1, 0), (1, 1), (2, 3), (2, 4)) and c.retained
        cfg = validate(XZ_Y3)
        charts = all_charts(cfg)
        assert [ch.pivot for ch in charts] == [(0, 1), (0, 2), (1, 2)]
        assert charts[0].generators == ((1, 0), (1, 1), (1, 2), (1, 3)) and charts[0].retained
        assert not charts[1].retained
        # difference formula: a1 - a3 = (-1, -3)
        assert charts[2].generators == ((-1, -3), (0, -1), (1, 1), (2, 3)) and charts[2].retained

    def test_curve_examples(self):
        charts = all_charts(validate([12, 28, 33]))
        kept = [ch for ch in charts if ch.retained]
        assert len(kept) == 1 and kept[0].generators == ((12,), (16,), (21,))
        kept = [ch for ch in all_charts(validate([2, 3])) if ch.retained]
        assert [ch.generators for ch in kept] == [((1,), (2,))]

    def test_unit_basis(self):
        cfg = validate([(1, 0), (0, 1)])
        charts = all_charts(cfg)
        assert len(charts) == 1 and charts[0].generators == ((0, 1), (1, 0))
        assert is_smooth(charts[0].config)

    def test_pivot_errors(self):
        cfg = validate([(1, 0), (2, 0), (0, 1)])
        with pytest.raises(SingularPivot):
            chart(cfg, (0, 1))
        with pytest.raises(DimensionMismatch):
            chart(cfg, (0,))
        with pytest.raises(DimensionMismatch):
            chart(cfg, (0, 5))

    def test_curve_chart_is_nash_step(self):
        for A in all_sets(30, 4, min_value=2):
            if len(A) == 1:
                continue
            cfg = T.curve_config(A)
            ch = chart(cfg, (0,))
            assert ch.retained and T.as_curve(ch.config) == nash_step(A), A
            # every other pivot mixes signs
            assert not any(c.retained for c in all_charts(cfg)[1:])

    def test_retained_charts_validate(self):
        for cfg in valid_2d(0, 3, 3):
            for ch in all_charts(cfg):
                assert ch.retained == (box_separator(ch.generators, 30) is not None)
                if ch.retained:
                    assert validate(ch.generators) == ch.config
                    assert T.pivot_det(cfg, ch.pivot) != 0

    def test_permutation_invariance(self):
        for base in (XZ_Y4, XZ_Y3, [(1, 0), (1, 1), (1, 2), (1, 3)], [(2, 1), (1, 2), (1, 1)]):
            ref = {frozenset(base[i] for i in ch.pivot): (ch.generators, ch.retained)
                   for ch in all_charts(validate(base))}
            for perm in permutations(base):
                got = {frozenset(perm[i] for i in ch.pivot): (ch.generators, ch.retained)
                       for ch in all_charts(validate(list(perm)))}
                assert got == ref


class TestSmooth:
    def test_examples(self):
        assert is_smooth(validate([1, 4]))
        assert not is_smooth(validate([(1, 0), (1, 1), (1, 2), (1, 3)]))
        assert is_smooth(validate([(1, 0), (0, 1)]))
        assert T.minimal_generators(validate([(1, 0), (1, 1), (1, 2), (1, 3)])) == (
            (1, 0), (1, 1), (1, 2), (1, 3))
        with pytest.raises(UnsupportedDimension):
            is_smooth(validate([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))

    def test_curves_against_semigroup(self):
        sets = [A for A in all_sets(100, 2)] + [A for A in all_sets(50, 3) if len(A) == 3]
        for A in sets:
            assert is_smooth(T.curve_config(A)) == (1 in minimal_generators(A)), A

    @given(singular_curve_sets(100, 5))
    @settings(deadline=None)
    def test_curve_embedding_dimension(self, A):
        assert T.embedding_dimension(T.curve_config(A)) == len(minimal_generators(A))

    def test_surfaces_against_pair_oracle(self):
        count = 0
        for cfg in valid_2d(-1, 3, 4):
            assert is_smooth(cfg) == pair_smooth(cfg.vectors), cfg
            count += 1
        assert count > 1000


class TestIdeals:
    def test_log_jacobian(self):
        assert log_jacobian(validate(XZ_Y2)).render() == ["u1*u2", "u1*u3", "u2*u3"]
        assert log_jacobian(validate([12, 28, 33])).render() == ["u1", "u2", "u3"]
        assert log_jacobian(validate([(1, 0), (2, 0), (0, 1)])).render() == ["u1*u3", "u2*u3"]

    def test_binomial_examples(self):
        rels = kernel_binomials(validate(XZ_Y4), 4)
        assert BinomialRelation((1, 0, 1), (0, 4, 0)) in rels
        assert [r.render() for r in rels] == ["u1*u3 - u2^4"]
        assert BinomialRelation((3, 0), (0, 2)) in kernel_binomials(validate([2, 3]), 3)
        assert kernel_binomials(validate([(1, 0), (0, 1)]), 6) == []

    def test_verify(self):
        cfg = validate(XZ_Y3)
        assert verify_binomial(cfg, BinomialRelation((1, 0, 1), (0, 3, 0)))
        assert not verify_binomial(cfg, BinomialRelation((1, 0, 0), (0, 1, 0)))
        assert verify_binomial(validate([4, 9]), BinomialRelation((9, 0), (0, 4)))
        with pytest.raises(DimensionMismatch):
            verify_binomial(cfg, BinomialRelation((1, 0), (0, 1)))

    def test_render_grammar(self):
        assert BinomialRelation((2, 0, 1), (0, 3, 0)).render() == "u1^2*u3 - u2^3"

    @given(singular_curve_sets(12, 3), st.integers(1, 6))
    @settings(max_examples=40, deadline=None)
    def test_curves_against_oracle(self, A, deg):
        cfg = T.curve_config(A)
        got = {(r.alpha, r.beta) for r in kernel_binomials(cfg, deg)}
        assert got == binomial_pairs(cfg.vectors, deg)

    def test_sorted(self):
        rels = kernel_binomials(validate(XZ_Y2), 5)
        keys = [(r.degree, r.alpha, r.beta) for r in rels]
        assert keys == sorted(keys) and len(set(keys)) == len(keys)
        assert all(r.alpha > r.beta for r in rels)


class TestIteration:
    def test_curve_path(self):
        tree = iterate_multidim(validate([12, 28, 33]), 10)
        nodes = tree.nodes()
        assert len(nodes) == 5 and [n.depth for n in nodes] == [0, 1, 2, 3, 4]
        assert [T.as_curve(n.config).elements for n in nodes][-1] == (1, 4)
        assert tree.leaves()[0].status == "smooth" and not tree.truncated

    def test_smooth_root(self):
        tree = iterate_multidim(validate([(1, 0), (0, 1)]), 5)
        assert tree.nodes() == [tree.root] and tree.root.status == "smooth"

    def test_surface_first_level(self):
        tree = iterate_multidim(validate(XZ_Y4), 1)
        kids = [n.config.vectors for n in tree.root.children]
        assert ((1, 0), (1, 1), (2, 3), (2, 4)) in kids
        assert all(n.status in ("smooth", "unresolved") for n in tree.leaves())

    def test_depth_and_budget(self):
        tree = iterate_multidim(validate(XZ_Y4), 0)
        assert tree.root.status == "unresolved" and not tree.root.children
        tree = iterate_multidim(validate(XZ_Y4), 8, max_nodes=4)
        assert tree.truncated and len(tree.nodes()) <= 4
        full = iterate_multidim(validate(XZ_Y4), 8)
        assert not full.truncated and all(n.status == "smooth" for n in full.leaves())

    def test_dimension(self):
        with pytest.raises(UnsupportedDimension):
            iterate_multidim(validate([(1, 0, 0), (0, 1, 0), (0, 0, 1)]), 2)

    @given(singular_curve_sets(60, 4))
    @settings(max_examples=40, deadline=None)
    def test_curve_tree_follows_resolution(self, A):
        from toricnash import resolve
        t = resolve(A)
        tree = iterate_multidim(T.curve_config(A), t.eta + 1)
        path = [T.as_curve(n.config) for n in tree.nodes()]
        assert path == list(t.steps)
