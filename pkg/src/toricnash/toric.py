"""Charts of the Nash modification of a general affine toric variety.

A toric variety is given by vectors ``a_1, ..., a_n`` in ``Z^d`` that span
the lattice and whose convex hull misses the origin.  The Nash modification
is covered by charts ``A_J0`` built from pivots ``J0`` (``d`` indices with
nonzero determinant) by adding the differences ``a_j - a_k`` for every swap
``k -> j`` of one pivot index that keeps the determinant nonzero.

Indices are 0-based throughout the Python API; rendered monomials use the
1-based variable names ``u1, ..., un``.
"""
from __future__ import annotations

import operator
from collections import defaultdict, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from math import gcd
from typing import Optional, Sequence

from .errors import (
    DimensionMismatch,
    DuplicateVector,
    EmptyInput,
    LatticeNotFull,
    OriginInHull,
    SingularPivot,
    UnsupportedDimension,
)
from .semigroup import CurveGenerators

Vector = tuple[int, ...]


def det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def minor_gcd(vectors: Sequence[Vector], d: int) -> int:
    """gcd of all ``d x d`` minors; 1 iff the vectors span ``Z^d``."""
    g = 0
    for rows in combinations(vectors, d):
        g = gcd(g, det(rows))
        if g == 1:
            break
    return g


def _normal(rows: Sequence[Vector], d: int) -> Vector:
    # n with <n, x> == det(rows + [x]) for every x
    out = []
    for k in range(d):
        e = tuple(1 if i == k else 0 for i in range(d))
        out.append(det(list(rows) + [e]))
    return tuple(out)


def _primitive(v: Vector) -> Vector:
    g = gcd(*v)
    return tuple(x // g for x in v) if g > 1 else v


@lru_cache(maxsize=None)
def _small_functionals(d: int, radius: int) -> tuple[Vector, ...]:
    # integer vectors by increasing 1-norm, lexicographically largest first
    ws = [w for w in product(range(-radius, radius + 1), repeat=d) if any(w)]
    ws = [w for w in ws if sum(map(abs, w)) <= radius]
    ws.sort(key=lambda w: (sum(map(abs, w)), tuple(-x for x in w)))
    return tuple(ws)


def _small_separator(vectors: Sequence[Vector], radius: int = 3) -> Optional[Vector]:
    d = len(vectors[0])
    if d > 3:
        return None
    for w in _small_functionals(d, radius):
        if all(dot(w, a) > 0 for a in vectors):
            return w
    return None


def separating_functional(vectors: Sequence[Vector], radius: int = 3) -> Optional[Vector]:
    """Integer ``w`` with ``<w, a> > 0`` for every vector, or ``None``.

    Small functionals (1-norm up to ``radius``, only for ``d <= 3``) are
    tried first so that simple cones get simple gradings.  Otherwise the
    vectors must span ``R^d``: facets of the cone they generate are cut out
    by ``d - 1`` of the vectors, and the sum of all facet normals is strictly
    positive on the cone minus the origin whenever the cone is pointed.
    """
    d = len(vectors[0])
    w = _small_separator(vectors, radius)
    if w is not None:
        return w
    normals = set()
    for rows in combinations(vectors, d - 1):
        n = _normal(rows, d)
        if not any(n):
            continue
        vals = [dot(n, a) for a in vectors]
        if all(v >= 0 for v in vals):
            normals.add(_primitive(n))
        elif all(v <= 0 for v in vals):
            normals.add(_primitive(tuple(-x for x in n)))
    if not normals:
        return None
    w = _primitive(tuple(sum(col) for col in zip(*sorted(normals))))
    if all(dot(w, a) > 0 for a in vectors):
        return w
    return None


def _solve_affine(points: Sequence[Vector]) -> Optional[list[Fraction]]:
    # unique solution of sum(l_i p_i) = 0, sum(l_i) = 1, else None
    k, d = len(points), len(points[0])
    rows = [[Fraction(p[r]) for p in points] + [Fraction(0)] for r in range(d)]
    rows.append([Fraction(1)] * k + [Fraction(1)])
    piv_cols = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            return None
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(row[-1] != 0 for row in rows[r:]):
        return None
    return [rows[i][-1] for i in range(k)]


def hull_certificate(vectors: Sequence[Vector]) -> Optional[tuple[tuple[int, ...], tuple[Fraction, ...]]]:
    """Convex weights exhibiting ``0`` in the hull, or ``None``.

    Exhaustive over affinely independent subsets of at most ``d + 1`` points,
    which suffices by Caratheodory's theorem.  Returns ``(indices, weights)``.
    """
    d = len(vectors[0])
    for k in range(1, min(d + 1, len(vectors)) + 1):
        for idx in combinations(range(len(vectors)), k):
            lam = _solve_affine([vectors[i] for i in idx])
            if lam is not None and all(x >= 0 for x in lam):
                return idx, tuple(lam)
    return None


def _as_vectors(vectors) -> tuple[Vector, ...]:
    out = []
    for v in vectors:
        if isinstance(v, int):
            v = (v,)
        out.append(tuple(operator.index(x) for x in v))
    return tuple(out)


@dataclass(frozen=True)
class LatticeConfig:
    """Vectors spanning ``Z^d`` with a certificate that ``0`` is not in their hull."""

    vectors: tuple[Vector, ...]
    separator: Vector

    @property
    def dim(self) -> int:
        return len(self.vectors[0])

    @property
    def n(self) -> int:
        return len(self.vectors)

    def grade(self, x: Sequence[int]) -> int:
        return dot(self.separator, x)

    def __str__(self) -> str:
        return "{" + ", ".join(format_vector(v) for v in self.vectors) + "}"


def format_vector(v: Vector) -> str:
    if len(v) == 1:
        return str(v[0])
    return "(" + ",".join(map(str, v)) + ")"


def validate(vectors) -> LatticeConfig:
    """Check ``0`` outside the convex hull, then ``ZA = Z^d``.

    Plain integers are accepted as 1-dimensional vectors.
    """
    vecs = _as_vectors(vectors)
    if not vecs:
        raise EmptyInput("need at least one vector")
    d = len(vecs[0])
    if d == 0 or any(len(v) != d for v in vecs):
        raise DimensionMismatch(f"inconsistent vector dimensions in {list(vecs)}")
    if len(set(vecs)) != len(vecs):
        raise DuplicateVector(f"repeated vector in {list(vecs)}")
    # a small separator settles the hull question without the exact search
    w = _small_separator(vecs)
    if w is None:
        cert = hull_certificate(vecs)
        if cert is not None:
            idx, lam = cert
            combo = " + ".join(f"{x}*{format_vector(vecs[i])}" for i, x in zip(idx, lam))
            raise OriginInHull(f"0 = {combo}")
    g = minor_gcd(vecs, d)
    if g != 1:
        raise LatticeNotFull(f"gcd of the {d}x{d} minors is {g}, expected 1")
    if w is None:
        w = separating_functional(vecs)
    if w is None:  # pragma: no cover - excluded by the hull test above
        raise AssertionError(f"no separating functional found for {list(vecs)}")
    return LatticeConfig(vecs, w)


def curve_config(A: CurveGenerators) -> LatticeConfig:
    return LatticeConfig(tuple((a,) for a in A.elements), (1,))


def as_curve(config: LatticeConfig) -> CurveGenerators:
    """The curve generator set of a 1-dimensional configuration."""
    if config.dim != 1:
        raise DimensionMismatch(f"expected a 1-dimensional configuration, got d={config.dim}")
    vals = [v[0] for v in config.vectors]
    if vals[0] < 0:
        vals = [-x for x in vals]
    return CurveGenerators(tuple(sorted(vals)))


def pivot_det(config: LatticeConfig, pivot: Sequence[int]) -> int:
    return det([config.vectors[i] for i in pivot])


@dataclass(frozen=True)
class Chart:
    pivot: tuple[int, ...]
    generators: tuple[Vector, ...]
    retained: bool
    config: Optional[LatticeConfig] = None

    def __str__(self) -> str:
        return "{" + ", ".join(format_vector(v) for v in self.generators) + "}"


def chart(config: LatticeConfig, pivot: Sequence[int]) -> Chart:
    """The chart ``A_J0`` for the pivot ``J0`` (0-based indices)."""
    d, vecs = config.dim, config.vectors
    J0 = tuple(sorted(pivot))
    if len(J0) != d or len(set(J0)) != d or not all(0 <= i < config.n for i in J0):
        raise DimensionMismatch(f"pivot must be {d} distinct indices below {config.n}, got {pivot}")
    if pivot_det(config, J0) == 0:
        raise SingularPivot(f"det of pivot {J0} is 0")
    gens = {vecs[k] for k in J0}
    for k in J0:
        for j in range(config.n):
            if j in J0:
                continue
            J = [j if i == k else i for i in J0]
            if det([vecs[i] for i in J]):
                gens.add(tuple(x - y for x, y in zip(vecs[j], vecs[k])))
    gens = tuple(sorted(gens))
    w = separating_functional(gens)
    if w is None:
        return Chart(J0, gens, False)
    return Chart(J0, gens, True, validate(gens))


def all_charts(config: LatticeConfig) -> list[Chart]:
    """One chart per nonsingular pivot, pivots in lexicographic order."""
    return [chart(config, J0) for J0 in combinations(range(config.n), config.dim)
            if pivot_det(config, J0)]


def _member(gens: tuple[Vector, ...], grades: tuple[int, ...], x: Vector, gx: int) -> bool:
    @lru_cache(maxsize=None)
    def search(i: int, y: Vector, gy: int) -> bool:
        if gy == 0:
            return not any(y)
        if i == len(gens):
            return False
        b, gb = gens[i], grades[i]
        for lam in range(gy // gb + 1):
            z = tuple(p - lam * q for p, q in zip(y, b))
            if search(i + 1, z, gy - lam * gb):
                return True
        return False

    return search(0, tuple(x), gx)


def semigroup_member(config: LatticeConfig, x: Sequence[int],
                     gens: Optional[Sequence[Vector]] = None) -> bool:
    """Whether ``x`` is a nonnegative integer combination of ``gens``.

    ``gens`` defaults to all vectors of ``config``.  Coefficients are bounded
    through the separating functional, so the search is exhaustive.
    """
    gens = config.vectors if gens is None else tuple(gens)
    gx = config.grade(x)
    if gx < 0:
        return False
    grades = tuple(config.grade(b) for b in gens)
    return _member(tuple(gens), grades, tuple(x), gx)


def minimal_generators(config: LatticeConfig) -> tuple[Vector, ...]:
    """Vectors of ``config`` not representable by the other vectors."""
    kept = []
    for a in config.vectors:
        ga = config.grade(a)
        # only strictly lower grades can contribute to a representation of a
        others = [b for b in config.vectors if config.grade(b) < ga]
        if not semigroup_member(config, a, others):
            kept.append(a)
    return tuple(kept)


def embedding_dimension(config: LatticeConfig) -> int:
    return len(minimal_generators(config))


def is_smooth(config: LatticeConfig) -> bool:
    """Whether the semigroup is generated by ``d`` elements (only ``d <= 2``)."""
    if config.dim > 2:
        raise UnsupportedDimension(f"smoothness test implemented for d <= 2, got d={config.dim}")
    return embedding_dimension(config) == config.dim


def _render_monomial(exps: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(f"u{i + 1}")
        elif e > 1:
            parts.append(f"u{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    monomials: tuple[tuple[int, ...], ...]

    def render(self) -> list[str]:
        return ["*".join(f"u{i + 1}" for i in idx) for idx in self.monomials]


def log_jacobian(config: LatticeConfig) -> MonomialIdeal:
    """Products ``u_i1 ... u_id`` over index sets with nonzero determinant."""
    return MonomialIdeal(tuple(J for J in combinations(range(config.n), config.dim)
                               if pivot_det(config, J)))


@dataclass(frozen=True)
class BinomialRelation:
    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    @property
    def degree(self) -> int:
        return max(sum(self.alpha), sum(self.beta))

    def render(self) -> str:
        return f"{_render_monomial(self.alpha)} - {_render_monomial(self.beta)}"


def project(config: LatticeConfig, exps: Sequence[int]) -> Vector:
    if len(exps) != config.n:
        raise DimensionMismatch(f"expected {config.n} exponents, got {len(exps)}")
    if any(e < 0 for e in exps):
        raise DimensionMismatch(f"exponents must be nonnegative, got {list(exps)}")
    return tuple(sum(e * v[k] for e, v in zip(exps, config.vectors)) for k in range(config.dim))


def verify_binomial(config: LatticeConfig, rel: BinomialRelation) -> bool:
    return project(config, rel.alpha) == project(config, rel.beta)


def _exponents(n: int, max_degree: int):
    for t in range(max_degree + 1):
        for combo in combinations_with_replacement(range(n), t):
            e = [0] * n
            for i in combo:
                e[i] += 1
            yield tuple(e)


def kernel_binomials(config: LatticeConfig, degree_bound: int) -> list[BinomialRelation]:
    """Every binomial ``x^alpha - x^beta`` of the toric ideal up to a degree.

    Complete for ``max(|alpha|, |beta|) <= degree_bound`` with disjoint
    supports, one orientation per pair (``alpha`` lexicographically larger).
    This is a bounded enumeration, not a generating set of the ideal.
    """
    fibres = defaultdict(list)
    for e in _exponents(config.n, degree_bound):
        fibres[project(config, e)].append(e)
    out = []
    for exps in fibres.values():
        for a, b in combinations(exps, 2):
            if any(x and y for x, y in zip(a, b)):
                continue
            alpha, beta = (a, b) if a > b else (b, a)
            out.append(BinomialRelation(alpha, beta))
    out.sort(key=lambda r: (r.degree, r.alpha, r.beta))
    return out


@dataclass
class ChartNode:
    config: LatticeConfig
    depth: int
    pivot: Optional[tuple[int, ...]] = None
    status: str = "unresolved"  # smooth | expanded | unresolved
    children: list["ChartNode"] = field(default_factory=list)

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()


@dataclass
class ChartTree:
    root: ChartNode
    max_depth: int
    truncated: bool = False

    def nodes(self):
        return list(self.root.walk())

    def leaves(self):
        return [n for n in self.root.walk() if not n.children]


def iterate_multidim(config: LatticeConfig, max_depth: int, max_nodes: int = 10_000) -> ChartTree:
    """Expand retained, non-smooth charts breadth first.

    Leaves are labelled ``smooth`` or ``unresolved``; the latter when the
    depth cap, or the ``max_nodes`` budget (which sets ``truncated``), stops
    the expansion.
    """
    if config.dim > 2:
        raise UnsupportedDimension(f"iteration implemented for d <= 2, got d={config.dim}")
    root = ChartNode(config, 0)
    tree = ChartTree(root, max_depth)
    count = 1
    queue = deque([root])
    while queue:
        node = queue.popleft()
        if is_smooth(node.config):
            node.status = "smooth"
            continue
        if node.depth >= max_depth:
            continue
        kids = [c for c in all_charts(node.config) if c.retained]
        if count + len(kids) > max_nodes:
            tree.truncated = True
            continue
        node.status = "expanded"
        for c in kids:
            child = ChartNode(c.config, node.depth + 1, c.pivot)
            node.children.append(child)
            queue.append(child)
        count += len(kids)
    return tree
