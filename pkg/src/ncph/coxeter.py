"""Finite Coxeter systems realized exactly.

A diagram is a Coxeter matrix; the system realizes its simple roots as unit
inward normals in R^n over a number field chosen from a small catalog, with
the simple roots permuted into a bipartite order (an orthonormal block
followed by another orthonormal block).  The rotation c is the product of
the simple reflections in that order.  The group is generated breadth-first
as exact orthogonal matrices; reflection length comes from fixed-space
codimension and is cross-checked elsewhere against a breadth-first word
oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

from .fields import (FieldError, NumberField, Scalar, biquadratic_field,
                     cosine_field, quadratic_field, rationals)
from .linalg import Matrix, Vector, dot, vec_neg

DEFAULT_GROUP_CAP = 2_000_000


class NotFiniteTypeError(ValueError):
    """The Coxeter matrix does not define a finite reflection group."""


class RealizationError(ValueError):
    """No catalog field realizes the simple roots of this diagram."""


class BudgetExceededError(RuntimeError):
    """A configured enumeration budget was hit."""


# ---------------------------------------------------------------------------
# diagrams
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoxeterDiagram:
    matrix: tuple[tuple[int, ...], ...]
    label: str = "custom"

    def __post_init__(self):
        m = self.matrix
        n = len(m)
        if n == 0:
            raise ValueError("empty diagram")
        for i in range(n):
            if len(m[i]) != n:
                raise ValueError("Coxeter matrix must be square")
            if m[i][i] != 1:
                raise ValueError("diagonal entries must be 1")
            for j in range(n):
                if m[i][j] != m[j][i]:
                    raise ValueError("Coxeter matrix must be symmetric")
                if i != j and m[i][j] < 2:
                    raise ValueError("off-diagonal entries must be >= 2")

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def edges(self) -> list[tuple[int, int, int]]:
        n = self.rank
        return [(i, j, self.matrix[i][j])
                for i in range(n) for j in range(i + 1, n)
                if self.matrix[i][j] >= 3]

    @staticmethod
    def from_matrix(rows, label="custom") -> "CoxeterDiagram":
        return CoxeterDiagram(tuple(tuple(int(e) for e in row) for row in rows), label)

    @staticmethod
    def from_type(letter: str, rank: int) -> "CoxeterDiagram":
        letter = letter.upper()
        if letter == "I":
            # the second CLI argument is the dihedral order parameter m
            m = rank
            if m < 2:
                raise ValueError("I2(m) needs m >= 2")
            return CoxeterDiagram(((1, m), (m, 1)), f"I2({m})")
        if letter == "G":
            if rank != 2:
                raise ValueError("type G has rank 2")
            return CoxeterDiagram(((1, 6), (6, 1)), "G2")
        if letter == "A":
            if rank < 1:
                raise ValueError("type A needs rank >= 1")
            return CoxeterDiagram(_path_matrix(rank, {}), f"A{rank}")
        if letter in ("B", "C"):
            if rank < 2:
                raise ValueError("type B needs rank >= 2")
            return CoxeterDiagram(_path_matrix(rank, {0: 4}), f"{letter}{rank}")
        if letter == "D":
            if rank < 4:
                raise ValueError("type D needs rank >= 4")
            rows = [list(r) for r in _path_matrix(rank - 1, {})]
            for row in rows:
                row.append(2)
            rows.append([2] * rank)
            rows[-1][-1] = 1
            rows[rank - 3][rank - 1] = rows[rank - 1][rank - 3] = 3
            return CoxeterDiagram.from_matrix(rows, f"D{rank}")
        if letter == "F":
            if rank != 4:
                raise ValueError("type F has rank 4")
            return CoxeterDiagram(_path_matrix(4, {1: 4}), "F4")
        if letter == "H":
            if rank not in (3, 4):
                raise ValueError("type H has rank 3 or 4")
            return CoxeterDiagram(_path_matrix(rank, {0: 5}), f"H{rank}")
        raise ValueError(f"unsupported type {letter!r}")


def _path_matrix(n: int, special: dict[int, int]) -> tuple[tuple[int, ...], ...]:
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        m = special.get(i, 3)
        rows[i][i + 1] = rows[i + 1][i] = m
    return tuple(tuple(r) for r in rows)


def bipartite_order(diagram: CoxeterDiagram, swap: bool = False) -> tuple[tuple[int, ...], int]:
    """Permutation of the nodes so the first s roots are pairwise orthogonal
    and the last n-s are too; original order is kept inside each class.
    """
    n = diagram.rank
    color = [None] * n
    for start in range(n):
        if color[start] is not None:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and diagram.matrix[i][j] >= 3:
                    if color[j] is None:
                        color[j] = 1 - color[i]
                        stack.append(j)
                    elif color[j] == color[i]:
                        raise NotFiniteTypeError(
                            "diagram graph is not 2-colorable")
    first = [i for i in range(n) if color[i] == 0]
    second = [i for i in range(n) if color[i] == 1]
    if swap:
        first, second = second, first
    if not first:
        first, second = second, first
    return tuple(first + second), len(first)


# ---------------------------------------------------------------------------
# field ladder and root realization
# ---------------------------------------------------------------------------

def _candidate_fields(labels: set[int]) -> Iterator[NumberField]:
    needed = {m for m in labels if m not in (1, 2, 3)}
    if not needed:
        yield rationals()
    for d, cover in ((2, {4}), (3, {6}), (5, {5})):
        if needed <= cover:
            yield quadratic_field(d)
    for (a, b), cover in (((2, 3), {4, 6}), ((2, 5), {4, 5}), ((3, 5), {5, 6})):
        if needed <= cover:
            yield biquadratic_field(a, b)
    base = math.lcm(*needed) if needed else 1
    seen = set()
    for mult in (1, 2, 4):
        k = base * mult
        if k % 2:
            k *= 2
        if k < 4 or k in seen:
            continue
        seen.add(k)
        field = cosine_field(k)
        if field.degree <= 16:
            yield field


class _SqrtMissing(Exception):
    pass


def _cholesky(field: NumberField, b_rows: list[list[Scalar]]) -> list[list[Scalar]]:
    """Lower-triangular L with L L^T = B; pivots must be positive."""
    k = len(b_rows)
    lower = [[field.zero] * k for _ in range(k)]
    for i in range(k):
        for j in range(i):
            acc = b_rows[i][j]
            for t in range(j):
                acc = acc - lower[i][t] * lower[j][t]
            lower[i][j] = acc / lower[j][j]
        pivot = b_rows[i][i]
        for t in range(i):
            pivot = pivot - lower[i][t] * lower[i][t]
        s = pivot.sign()
        if s <= 0:
            raise NotFiniteTypeError("Gram matrix is not positive definite")
        root = field.sqrt(pivot)
        if root is None:
            raise _SqrtMissing
        lower[i][i] = root
    return lower


def realize_roots(diagram: CoxeterDiagram, perm: tuple[int, ...], s: int
                  ) -> tuple[NumberField, list[Vector]]:
    """Unit simple roots (in the permuted order) over the smallest catalog
    field that supports the construction.
    """
    n = diagram.rank
    labels = {diagram.matrix[i][j] for i in range(n) for j in range(i + 1, n)}
    last_err: Optional[Exception] = None
    for field in _candidate_fields(labels):
        try:
            gram = [[_gram_entry(field, diagram.matrix[perm[i]][perm[j]])
                     for j in range(n)] for i in range(n)]
        except FieldError as err:
            last_err = err
            continue
        try:
            b_rows = [[gram[s + i][s + j] -
                       _sum_products(gram, s, s + i, s + j, field)
                       for j in range(n - s)] for i in range(n - s)]
            lower = _cholesky(field, b_rows)
        except _SqrtMissing:
            last_err = RealizationError(
                f"{field.name} lacks a needed square root")
            continue
        roots = []
        for i in range(s):
            roots.append(tuple(field.one if j == i else field.zero
                               for j in range(n)))
        for i in range(n - s):
            coords = [gram[t][s + i] for t in range(s)]
            coords += [lower[i][t] for t in range(n - s)]
            roots.append(tuple(coords))
        _check_gram(roots, gram)
        return field, roots
    raise (last_err or RealizationError("field catalog exhausted"))


def _gram_entry(field: NumberField, m: int) -> Scalar:
    if m == 1:
        return field.one
    from .fields import cos_pi_over
    return -cos_pi_over(field, m)


def _sum_products(gram, s, a, b, field) -> Scalar:
    acc = field.zero
    for t in range(s):
        acc = acc + gram[t][a] * gram[t][b]
    return acc


def _check_gram(roots, gram):
    for i, u in enumerate(roots):
        for j, v in enumerate(roots):
            if dot(u, v) != gram[i][j]:
                raise RealizationError("realized roots fail the Gram identities")


# ---------------------------------------------------------------------------
# the system
# ---------------------------------------------------------------------------

def reflection_matrix(field: NumberField, root: Vector) -> Matrix:
    """Orthogonal reflection in the hyperplane normal to a unit root."""
    n = len(root)
    rows = [[(field.one if i == j else field.zero) - 2 * root[i] * root[j]
             for j in range(n)] for i in range(n)]
    return Matrix(field, rows)


class CoxeterSystem:
    """A realized finite Coxeter system with its generated group."""

    def __init__(self, diagram: CoxeterDiagram, swap_classes: bool = False,
                 group_cap: int = DEFAULT_GROUP_CAP):
        self.diagram = diagram
        self.rank = diagram.rank
        self.perm, self.s = bipartite_order(diagram, swap=swap_classes)
        self.field, self.simple_roots = realize_roots(diagram, self.perm, self.s)
        self.simple_reflections = [reflection_matrix(self.field, a)
                                   for a in self.simple_roots]
        c = self.simple_reflections[0]
        for r in self.simple_reflections[1:]:
            c = c * r
        self.coxeter_element = c
        self.identity = Matrix.identity(self.field, self.rank)
        self.h = self._order_of(c)

        root_matrix = Matrix(self.field, self.simple_roots)
        inv = root_matrix.inverse()
        self.dual_rays = [tuple(inv.rows[r][i] for r in range(self.rank))
                          for i in range(self.rank)]
        ones = tuple(self.field.one for _ in range(self.rank))
        self.interior_point = inv.apply(ones)

        self._generate_group(group_cap)
        self._find_reflections()
        self._product_cache: dict[tuple[int, int], int] = {}

    # -- construction helpers -------------------------------------------------

    def _order_of(self, mat: Matrix) -> int:
        power = mat
        for k in range(1, 1000):
            if power == self.identity:
                return k
            power = power * mat
        raise NotFiniteTypeError("rotation c has unbounded order")

    def _generate_group(self, cap: int):
        mats = [self.identity]
        index = {self.identity.key(): 0}
        head = 0
        while head < len(mats):
            w = mats[head]
            head += 1
            for r in self.simple_reflections:
                p = w * r
                key = p.key()
                if key not in index:
                    if len(mats) >= cap:
                        raise BudgetExceededError(
                            f"group generation exceeded cap {cap}")
                    index[key] = len(mats)
                    mats.append(p)
        self.elements = mats
        self.index_of = index
        self.e_index = 0
        self.c_index = index[self.coxeter_element.key()]
        self.lengths = [self._fixed_space_length(w) for w in mats]
        self.inverses = [index[w.transpose().key()] for w in mats]

    def _fixed_space_length(self, w: Matrix) -> int:
        return (w - self.identity).rank()

    def _find_reflections(self):
        seen = {}
        queue = []
        for a in self.simple_roots:
            t = reflection_matrix(self.field, a)
            i = self.index_of[t.key()]
            if i not in seen:
                seen[i] = self._positive_side(a)
                queue.append(i)
        head = 0
        while head < len(queue):
            i = queue[head]
            head += 1
            root = seen[i]
            for g in self.simple_reflections:
                conj = g * self.elements[i] * g
                j = self.index_of[conj.key()]
                if j not in seen:
                    seen[j] = self._positive_side(g.apply(root))
                    queue.append(j)
        expected = self.rank * self.h // 2
        if len(seen) != expected:
            raise RealizationError(
                f"found {len(seen)} reflections, expected nh/2 = {expected}")
        self.reflections = sorted(seen.items())
        self.root_of_reflection = dict(self.reflections)

    def _positive_side(self, root: Vector) -> Vector:
        side = dot(root, self.interior_point).sign()
        if side == 0:
            raise RealizationError("root orthogonal to the chamber interior")
        return root if side > 0 else vec_neg(root)

    # -- group queries ---------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    def length(self, i: int) -> int:
        return self.lengths[i]

    def product(self, i: int, j: int) -> int:
        key = (i, j)
        hit = self._product_cache.get(key)
        if hit is None:
            hit = self.index_of[(self.elements[i] * self.elements[j]).key()]
            self._product_cache[key] = hit
        return hit

    def precedes(self, u: int, w: int) -> bool:
        """Absolute order: l(w) == l(u) + l(u^-1 w)."""
        rest = self.product(self.inverses[u], w)
        return self.lengths[w] == self.lengths[u] + self.lengths[rest]

    def reflection_of_root(self, root: Vector) -> int:
        return self.index_of[reflection_matrix(self.field, root).key()]

    def element_sort_key(self, i: int):
        return (self.lengths[i], self.elements[i].key())

    def bfs_reflection_lengths(self) -> list[int]:
        """Independent oracle: minimal word length over all reflections."""
        dist = [-1] * self.order
        dist[self.e_index] = 0
        frontier = [self.e_index]
        refl = [i for i, _ in self.reflections]
        while frontier:
            nxt = []
            for i in frontier:
                for t in refl:
                    j = self.product(i, t)
                    if dist[j] < 0:
                        dist[j] = dist[i] + 1
                        nxt.append(j)
            frontier = nxt
        return dist

    def __repr__(self):
        return (f"CoxeterSystem({self.diagram.label}, |W|={self.order}, "
                f"h={self.h}, field={self.field.name})")
