"""Noncrossing partition lattices and their geometric companions.

Builds the interval below the rotation c in absolute order, the flag
complex on the ordered positive roots, the order complexes of posets with
their reduced rational homology, the facet-boundary cycles that give an
explicit homology basis, and the Moebius number.

Homology is computed over the rationals from exact boundary-matrix ranks.
The reduced chain complex carries the empty simplex in degree -1, so the
degenerate rank-1 cases fall out of the same formulas.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Callable, Iterable, Optional, Sequence

from .coxeter import BudgetExceededError, CoxeterSystem
from .fields import rationals
from .linalg import Matrix
from .rootorder import OrderedRoots

DEFAULT_SIMPLEX_BUDGET = 5_000_000


class ComplexError(ValueError):
    """A structural expectation of the construction failed."""


# ---------------------------------------------------------------------------
# simplicial complexes presented by facets
# ---------------------------------------------------------------------------

class SimplicialComplex:
    """Vertex labels are integers; simplices are sorted label tuples."""

    def __init__(self, vertices: Iterable[int], facets: Iterable[Sequence[int]]):
        self.vertices = tuple(sorted(set(vertices)))
        vertex_set = set(self.vertices)
        seen = set()
        for f in facets:
            t = tuple(sorted(f))
            if not set(t) <= vertex_set:
                raise ComplexError("facet uses unknown vertices")
            seen.add(t)
        # drop faces that are contained in another declared facet
        self.facets = tuple(sorted(t for t in seen
                                   if not any(set(t) < set(o) for o in seen)))

    @property
    def dim(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-1)

    def simplices_by_dim(self, budget: Optional[int] = None) -> dict[int, list[tuple]]:
        """All nonempty faces, keyed by dimension; deterministic order."""
        by_dim: dict[int, set] = {}
        count = 0
        for f in self.facets:
            for k in range(1, len(f) + 1):
                level = by_dim.setdefault(k - 1, set())
                for sub in combinations(f, k):
                    if sub not in level:
                        level.add(sub)
                        count += 1
                        if budget is not None and count > budget:
                            raise BudgetExceededError(
                                f"simplex budget {budget} exceeded")
        return {k: sorted(v) for k, v in sorted(by_dim.items())}

    def all_simplices(self, budget: Optional[int] = None) -> list[tuple]:
        out = []
        for _, level in sorted(self.simplices_by_dim(budget).items()):
            out.extend(level)
        return out

    def has_simplex(self, simplex: Sequence[int]) -> bool:
        s = set(simplex)
        return any(s <= set(f) for f in self.facets)

    def __repr__(self):
        return (f"SimplicialComplex({len(self.vertices)} vertices, "
                f"{len(self.facets)} facets, dim {self.dim})")


def full_subcomplex(complex_: SimplicialComplex, keep: Iterable[int]) -> SimplicialComplex:
    """The subcomplex induced on a vertex subset."""
    keep = set(keep)
    traces = {tuple(v for v in f if v in keep) for f in complex_.facets}
    traces.discard(())
    return SimplicialComplex(keep & set(complex_.vertices), traces)


def _max_cliques(neighbors: dict[int, set[int]]) -> list[tuple[int, ...]]:
    """Bron-Kerbosch with pivoting; deterministic output order."""
    cliques: list[tuple[int, ...]] = []

    def expand(r: set, p: set, x: set):
        if not p and not x:
            cliques.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda v: len(neighbors[v] & p))
        for v in sorted(p - neighbors[pivot]):
            expand(r | {v}, p & neighbors[v], x & neighbors[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(neighbors), set())
    return sorted(cliques)


# ---------------------------------------------------------------------------
# the noncrossing partition lattice
# ---------------------------------------------------------------------------

@dataclass
class NcpLattice:
    """The interval [e, c] of the absolute order, graded by reflection length."""

    system: CoxeterSystem
    elements: list[int]            # group indices, sorted by (length, matrix)
    position: dict[int, int]       # group index -> position in `elements`
    leq: list[list[bool]]          # absolute order restricted to the interval

    @property
    def size(self) -> int:
        return len(self.elements)

    def length(self, pos: int) -> int:
        return self.system.lengths[self.elements[pos]]

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.size - 1

    def proper_positions(self) -> list[int]:
        return [p for p in range(self.size)
                if p not in (self.bottom, self.top)]

    def hasse_edges(self) -> list[tuple[int, int]]:
        out = []
        for a in range(self.size):
            for b in range(self.size):
                if a != b and self.leq[a][b] \
                        and self.length(b) == self.length(a) + 1:
                    out.append((a, b))
        return out

    def mobius_number(self) -> int:
        order = sorted(range(self.size), key=self.length)
        mu = [0] * self.size
        for pos in order:
            below = sum(mu[q] for q in range(self.size)
                        if q != pos and self.leq[q][pos])
            mu[pos] = 1 if pos == self.bottom else -below
        return mu[self.top]


def build_ncp(system: CoxeterSystem) -> NcpLattice:
    members = [i for i in range(system.order) if system.precedes(i, system.c_index)]
    members.sort(key=system.element_sort_key)
    position = {g: p for p, g in enumerate(members)}
    leq = [[system.precedes(a, b) for b in members] for a in members]
    lattice = NcpLattice(system, members, position, leq)
    if lattice.length(lattice.bottom) != 0 or lattice.length(lattice.top) != system.rank:
        raise ComplexError("interval is not graded from e to c")
    return lattice


# ---------------------------------------------------------------------------
# the flag complex on the ordered positive roots
# ---------------------------------------------------------------------------

def build_root_complex(system: CoxeterSystem, ordered: OrderedRoots) -> SimplicialComplex:
    """Vertices are root positions 0..nh/2-1; i < j are joined when the
    product r(rho_j) r(rho_i) has reflection length 2 and precedes c; the
    simplices are the cliques.  Facets must all have exactly n vertices.
    """
    count = ordered.count
    refl = ordered.reflection_index
    neighbors: dict[int, set[int]] = {i: set() for i in range(count)}
    for i in range(count):
        for j in range(i + 1, count):
            prod = system.product(refl[j], refl[i])
            if system.lengths[prod] == 2 and system.precedes(prod, system.c_index):
                neighbors[i].add(j)
                neighbors[j].add(i)
    facets = _max_cliques(neighbors)
    for f in facets:
        if len(f) != system.rank:
            raise ComplexError(
                f"maximal clique {f} has size {len(f)}, expected rank {system.rank}")
    return SimplicialComplex(range(count), facets)


def simplex_element(system: CoxeterSystem, ordered: OrderedRoots,
                    simplex: Sequence[int]) -> int:
    """Group index of r(tau_k) ... r(tau_1) for the ascending vertex list."""
    result = system.e_index
    for v in sorted(simplex, reverse=True):
        result = system.product(result, ordered.reflection_index[v])
    return result


def restricted_complex(system: CoxeterSystem, ordered: OrderedRoots,
                       xc: SimplicialComplex, w: int) -> SimplicialComplex:
    """Full subcomplex on the roots whose reflections precede w."""
    if not system.precedes(w, system.c_index):
        raise ComplexError("element is not below c in absolute order")
    keep = [i for i in range(ordered.count)
            if system.precedes(ordered.reflection_index[i], w)]
    return full_subcomplex(xc, keep)


def simplex_length_rule_failures(system: CoxeterSystem, ordered: OrderedRoots,
                                 xc: SimplicialComplex) -> list[tuple]:
    """Simplices violating l(r(tau_1)...r(tau_k) c) = n - k."""
    bad = []
    for simplex in xc.all_simplices():
        u = system.e_index
        for v in simplex:
            u = system.product(u, ordered.reflection_index[v])
        u = system.product(u, system.c_index)
        if system.lengths[u] != system.rank - len(simplex):
            bad.append((simplex, system.lengths[u]))
    return bad


@dataclass
class PosetMapReport:
    monotone_failures: list = dataclass_field(default_factory=list)
    length_failures: list = dataclass_field(default_factory=list)
    facet_failures: list = dataclass_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.monotone_failures or self.length_failures
                    or self.facet_failures)


def poset_map_report(system: CoxeterSystem, ordered: OrderedRoots,
                     xc: SimplicialComplex) -> PosetMapReport:
    """Order preservation and grading of the simplex-to-element map."""
    report = PosetMapReport()
    for simplex in xc.all_simplices():
        image = simplex_element(system, ordered, simplex)
        if system.lengths[image] != len(simplex):
            report.length_failures.append(simplex)
        if len(simplex) == system.rank and image != system.c_index:
            report.facet_failures.append(simplex)
        for drop in range(len(simplex)):
            face = simplex[:drop] + simplex[drop + 1:]
            if face and not system.precedes(
                    simplex_element(system, ordered, face), image):
                report.monotone_failures.append((face, simplex))
    return report


@dataclass
class FiberReport:
    checked: int = 0
    mismatches: list = dataclass_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def fiber_report(system: CoxeterSystem, ordered: OrderedRoots,
                 xc: SimplicialComplex, ncp: NcpLattice) -> FiberReport:
    """For every proper w: the simplices of the (n-2)-skeleton whose image
    precedes w are exactly the simplices of the restricted complex.
    """
    report = FiberReport()
    skeleton = [s for s in xc.all_simplices() if len(s) <= system.rank - 1]
    image = {s: simplex_element(system, ordered, s) for s in skeleton}
    for pos in ncp.proper_positions():
        w = ncp.elements[pos]
        lhs = {s for s in skeleton if system.precedes(image[s], w)}
        rhs = set(restricted_complex(system, ordered, xc, w).all_simplices())
        if lhs != rhs:
            report.mismatches.append((w, sorted(lhs ^ rhs)))
        report.checked += 1
    return report


# ---------------------------------------------------------------------------
# order complexes and rational homology
# ---------------------------------------------------------------------------

def order_complex(size: int, leq: Callable[[int, int], bool]) -> SimplicialComplex:
    """Chains of a poset on labels 0..size-1 (labels must already be sorted
    by a linear extension); facets are the maximal chains.
    """
    covers: dict[int, list[int]] = {a: [] for a in range(size)}
    strictly_less = [[a != b and leq(a, b) for b in range(size)] for a in range(size)]
    for a in range(size):
        for b in range(size):
            if strictly_less[a][b] and not any(
                    strictly_less[a][m] and strictly_less[m][b] for m in range(size)):
                covers[a].append(b)
    minimal = [a for a in range(size)
               if not any(strictly_less[b][a] for b in range(size))]
    chains: list[tuple[int, ...]] = []

    def extend(chain):
        last = chain[-1]
        if not covers[last]:
            chains.append(tuple(chain))
            return
        for nxt in covers[last]:
            extend(chain + [nxt])

    for a in minimal:
        extend([a])
    return SimplicialComplex(range(size), chains)


class Chain:
    """Formal rational combination of oriented simplices (sorted tuples)."""

    def __init__(self, coefficients: Optional[dict] = None):
        self.coefficients = {k: Fraction(v) for k, v in (coefficients or {}).items()
                             if v != 0}

    def add_term(self, simplex: tuple, coeff) -> None:
        new = self.coefficients.get(simplex, Fraction(0)) + coeff
        if new:
            self.coefficients[simplex] = new
        else:
            self.coefficients.pop(simplex, None)

    def boundary(self) -> "Chain":
        out = Chain()
        for simplex, coeff in self.coefficients.items():
            if len(simplex) == 0:
                continue
            for i in range(len(simplex)):
                face = simplex[:i] + simplex[i + 1:]
                out.add_term(face, coeff if i % 2 == 0 else -coeff)
        return out

    def is_zero(self) -> bool:
        return not self.coefficients

    def support_dim(self) -> int:
        return max((len(s) - 1 for s in self.coefficients), default=-2)

    def __repr__(self):
        return f"Chain({len(self.coefficients)} terms, dim {self.support_dim()})"


def boundary_matrix(lower: list[tuple], upper: list[tuple]) -> Matrix:
    """Boundary map from span(upper) to span(lower), over the rationals."""
    qq = rationals()
    pos = {s: i for i, s in enumerate(lower)}
    rows = [[qq.zero for _ in upper] for _ in lower]
    for j, simplex in enumerate(upper):
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1:]
            rows[pos[face]][j] = qq.from_rational(1 if i % 2 == 0 else -1)
    return Matrix(qq, rows)


def betti_numbers(complex_: SimplicialComplex,
                  budget: int = DEFAULT_SIMPLEX_BUDGET) -> dict[int, int]:
    """Reduced rational Betti numbers; includes degree -1 (empty complex)."""
    by_dim = complex_.simplices_by_dim(budget)
    by_dim[-1] = [()]
    top = max(by_dim)
    ranks = {}
    for k in range(0, top + 1):
        ranks[k] = boundary_matrix(by_dim[k - 1], by_dim[k]).rank()
    ranks[top + 1] = 0
    betti = {}
    for k in range(-1, top + 1):
        betti[k] = len(by_dim.get(k, ())) - ranks.get(k, 0) - ranks[k + 1]
    return betti


def proper_part_betti(lattice_size: int, leq, budget: int = DEFAULT_SIMPLEX_BUDGET
                      ) -> dict[int, int]:
    return betti_numbers(order_complex(lattice_size, leq), budget)


# ---------------------------------------------------------------------------
# the explicit homology basis
# ---------------------------------------------------------------------------

def facet_boundary_cycles(system: CoxeterSystem, ordered: OrderedRoots,
                          xc: SimplicialComplex, ncp: NcpLattice
                          ) -> list[Chain]:
    """One cycle per facet: the fundamental cycle of the barycentric sphere
    of the facet boundary, pushed into the order complex of the proper part.

    Chains live on the proper part's labels (positions after removing bottom
    and top); each returned chain has zero boundary, and together they have
    full rank in top reduced homology.
    """
    proper = ncp.proper_positions()
    label_of = {ncp.elements[pos]: lab for lab, pos in enumerate(proper)}
    n = system.rank
    cycles = []
    for facet in xc.facets:
        chain = Chain()
        for perm in permutations(range(n)):
            sign = _parity(perm)
            labels = []
            seen = set()
            for k in range(1, n):
                prefix = tuple(sorted(facet[p] for p in perm[:k]))
                element = simplex_element(system, ordered, prefix)
                if element in seen:
                    raise ComplexError(
                        "face chain degenerated: map not strictly monotone")
                seen.add(element)
                labels.append(label_of[element])
            chain.add_term(tuple(labels), sign)
        cycles.append(chain)
    return cycles


def _parity(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm))
                     for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def cycle_space_rank(cycles: list[Chain], complex_: SimplicialComplex,
                     dim: int) -> int:
    """Rank of the cycle images in reduced homology of the given dimension."""
    qq = rationals()
    by_dim = complex_.simplices_by_dim()
    basis = by_dim.get(dim, [()] if dim == -1 else [])
    pos = {s: i for i, s in enumerate(basis)}
    rows = []
    boundary_rows = []
    for upper in by_dim.get(dim + 1, []):
        chain = Chain({upper: 1}).boundary()
        boundary_rows.append(_chain_row(chain, pos, qq))
    for cy in cycles:
        rows.append(_chain_row(cy, pos, qq))
    if not rows:
        return 0
    total = Matrix(qq, rows + boundary_rows).rank() if (rows + boundary_rows) else 0
    base = Matrix(qq, boundary_rows).rank() if boundary_rows else 0
    return total - base


def _chain_row(chain: Chain, pos: dict, qq):
    row = [qq.zero] * len(pos)
    for simplex, coeff in chain.coefficients.items():
        row[pos[simplex]] = qq.from_rational(coeff)
    return row


def mobius_number(ncp: NcpLattice) -> int:
    return ncp.mobius_number()
