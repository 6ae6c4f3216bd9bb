"""Embedding the lattice homology basis into the intersection lattice.

The operator 2(I - c)^(-1) carries the ordered roots to the vertex
configuration of a simplicial cone complex whose facet walls lie in
reflection hyperplanes.  Expressing chamber rays in a facet's vertex basis
decides, exactly, which chambers a facet cone contains; the resulting 0/1
facet-chamber incidence matrix realizes the homology embedding, and its
rank certifies injectivity.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Optional

from .arrangement import Chamber, bounded_slice
from .complexes import SimplicialComplex, order_complex
from .coxeter import CoxeterSystem
from .linalg import Matrix, Vector, dot, vec_key, vec_scale
from .rootorder import OrderedRoots


class EmbedError(ValueError):
    """A geometric expectation of the embedding construction failed."""


def vertex_operator(system: CoxeterSystem) -> Matrix:
    """The exact matrix 2 (I - c)^(-1); c has no eigenvalue 1, so I - c is
    invertible whenever the action is essential.
    """
    delta = system.identity - system.coxeter_element
    if delta.det().sign() == 0:
        raise EmbedError("I - c is singular: the action is not essential")
    return delta.inverse().scale(2)


@dataclass
class VertexComplex:
    """Vertices 2(I-c)^(-1) rho_i with the facet combinatorics of the root
    complex (positions are shared 0-based root indices)."""

    operator: Matrix
    vertices: list[Vector]
    complex: SimplicialComplex


def vertex_complex(system: CoxeterSystem, ordered: OrderedRoots,
                   xc: SimplicialComplex) -> VertexComplex:
    op = vertex_operator(system)
    return VertexComplex(op, [op.apply(rho) for rho in ordered.roots], xc)


@dataclass
class DotPropertyReport:
    negative_pairs: list = dataclass_field(default_factory=list)
    nonzero_band: list = dataclass_field(default_factory=list)
    nonpositive_slice: list = dataclass_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.negative_pairs or self.nonzero_band
                    or self.nonpositive_slice)


def dot_property_report(system: CoxeterSystem, ordered: OrderedRoots,
                        vc: VertexComplex, v: Optional[Vector] = None
                        ) -> DotPropertyReport:
    """Exhaustive exact checks of the vertex-root pairing:
    mu(rho_i) . rho_j >= 0 for i <= j; mu(rho_(i+t)) . rho_i = 0 for
    1 <= t <= n-1; and mu(rho_i) . v > 0 when a slice direction is given.
    """
    report = DotPropertyReport()
    count = ordered.count
    n = system.rank
    for i in range(count):
        for j in range(i, count):
            if dot(vc.vertices[i], ordered.roots[j]).sign() < 0:
                report.negative_pairs.append((i, j))
    for i in range(count):
        for t in range(1, n):
            if i + t < count:
                if dot(vc.vertices[i + t], ordered.roots[i]).sign() != 0:
                    report.nonzero_band.append((i + t, i))
    if v is not None:
        for i in range(count):
            if dot(vc.vertices[i], v).sign() <= 0:
                report.nonpositive_slice.append(i)
    return report


def project_to_slice(x: Vector, v: Vector) -> Vector:
    """Central projection of x onto the affine hyperplane through v normal
    to v: the positive rescaling of x with v . (scaled x) = v . v.
    """
    t = dot(v, x)
    if t.sign() <= 0:
        raise EmbedError("projection needs v . x > 0")
    return vec_scale(x, dot(v, v) / t)


# ---------------------------------------------------------------------------
# the intersection lattice
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Flat:
    """An intersection of reflection hyperplanes, canonically the reduced
    echelon basis of the span of its defining normals."""

    normals: tuple   # tuple of Vectors, RREF rows
    key: tuple

    @property
    def codim(self) -> int:
        return len(self.normals)


def _make_flat(field, rows) -> Flat:
    if rows:
        rref = Matrix(field, rows).rref()
        reduced = tuple(r for r in rref.rows if not all(e.is_zero() for e in r))
    else:
        reduced = ()
    return Flat(reduced, tuple(vec_key(r) for r in reduced))


def intersection_lattice(system: CoxeterSystem) -> list[Flat]:
    """All intersections of subfamilies of the arrangement, from the whole
    space (codim 0) down to the origin (codim n), by iterated closure.
    Ordered by (codim, canonical key).
    """
    field = system.field
    normals = [root for _, root in system.reflections]
    whole = _make_flat(field, [])
    hyperplanes = []
    seen = {whole.key: whole}
    for h in normals:
        f = _make_flat(field, [h])
        if f.key not in seen:
            seen[f.key] = f
            hyperplanes.append(f)
    frontier = list(hyperplanes)
    while frontier:
        nxt = []
        for flat in frontier:
            for h in normals:
                cand = _make_flat(field, list(flat.normals) + [h])
                if cand.codim == flat.codim:
                    continue
                if cand.key not in seen:
                    seen[cand.key] = cand
                    nxt.append(cand)
        frontier = nxt
    return sorted(seen.values(), key=lambda f: (f.codim, f.key))


def flat_leq(field, a: Flat, b: Flat) -> bool:
    """Reverse inclusion order: a <= b when a contains b as a subspace."""
    if a.codim > b.codim:
        return False
    if not a.normals:
        return True
    stacked = Matrix(field, list(b.normals) + list(a.normals))
    return stacked.rank() == b.codim


def intersection_lattice_proper_betti(system: CoxeterSystem,
                                      budget: int = 5_000_000) -> dict[int, int]:
    """Reduced Betti numbers of the order complex of the proper part."""
    flats = intersection_lattice(system)
    proper = [f for f in flats if 0 < f.codim < system.rank]
    from .complexes import betti_numbers
    cx = order_complex(len(proper),
                       lambda i, j: flat_leq(system.field, proper[i], proper[j]))
    return betti_numbers(cx, budget)


def rays_as_flats_check(system: CoxeterSystem, rays: list[Vector]) -> bool:
    """The canonical rays are exactly the codim n-1 flats."""
    flats = intersection_lattice(system)
    lines = [f for f in flats if f.codim == system.rank - 1]
    from .arrangement import canonical_ray
    ray_keys = {vec_key(r) for r in rays}
    line_keys = set()
    for f in lines:
        kernel = Matrix(system.field, list(f.normals)).kernel()
        if len(kernel) != 1:
            return False
        line_keys.add(vec_key(canonical_ray(kernel[0])))
    return ray_keys == line_keys


# ---------------------------------------------------------------------------
# facet-chamber incidence
# ---------------------------------------------------------------------------

def facet_chambers(system: CoxeterSystem, vc: VertexComplex,
                   facet: tuple[int, ...], chamber_list: list[Chamber]
                   ) -> list[int]:
    """Positions of the chambers whose closed cone lies inside the simplicial
    cone spanned by the facet's vertices.  Membership is decided exactly in
    the facet's vertex basis.
    """
    field = system.field
    columns = [vc.vertices[i] for i in facet]
    basis = Matrix(field, list(zip(*columns)))
    try:
        inv = basis.inverse()
    except ValueError:
        raise EmbedError(f"facet {facet} has linearly dependent vertices")
    contained = []
    for pos, chamber in enumerate(chamber_list):
        inside = True
        for ray in chamber.rays:
            if any(c.sign() < 0 for c in inv.apply(ray)):
                inside = False
                break
        if inside:
            if any(c.sign() <= 0 for c in inv.apply(chamber.interior)):
                raise EmbedError(
                    "chamber rays inside the cone but interior on its wall")
            contained.append(pos)
    return contained


@dataclass
class EmbeddingReport:
    """Incidence of bounded-slice chambers with facet cones, plus the
    verdicts that make the induced homology map injective."""

    facets: list[tuple[int, ...]]
    bounded_positions: list[int]          # positions into the chamber list
    incidence: list[list[int]]            # rows = bounded chambers, cols = facets
    column_weights: list[int]
    rank: int
    injective: bool
    columns_nonempty: bool
    columns_disjoint: bool
    incident_all_bounded: bool
    covered_chambers: int
    bounded_count: int

    @property
    def ok(self) -> bool:
        return (self.injective and self.columns_nonempty
                and self.columns_disjoint and self.incident_all_bounded)


def embedding_report(system: CoxeterSystem, vc: VertexComplex,
                     chamber_list: list[Chamber], v: Vector) -> EmbeddingReport:
    facets = list(vc.complex.facets)
    bounded_flags = [bounded_slice(ch, v) for ch in chamber_list]
    bounded_positions = [p for p, b in enumerate(bounded_flags) if b]
    row_of = {p: r for r, p in enumerate(bounded_positions)}

    incidence = [[0] * len(facets) for _ in bounded_positions]
    incident_all_bounded = True
    hits_per_chamber = [0] * len(chamber_list)
    column_weights = []
    for col, facet in enumerate(facets):
        members = facet_chambers(system, vc, facet, chamber_list)
        column_weights.append(len(members))
        for pos in members:
            hits_per_chamber[pos] += 1
            if not bounded_flags[pos]:
                incident_all_bounded = False
            else:
                incidence[row_of[pos]][col] = 1

    columns_disjoint = all(h <= 1 for h in hits_per_chamber)
    columns_nonempty = all(w >= 1 for w in column_weights)
    qq_field = _rational_field()
    rank = Matrix(qq_field, [[qq_field.from_rational(e) for e in row]
                             for row in incidence]).rank() if incidence else 0
    return EmbeddingReport(
        facets=facets,
        bounded_positions=bounded_positions,
        incidence=incidence,
        column_weights=column_weights,
        rank=rank,
        injective=(rank == len(facets)),
        columns_nonempty=columns_nonempty,
        columns_disjoint=columns_disjoint,
        incident_all_bounded=incident_all_bounded,
        covered_chambers=sum(column_weights),
        bounded_count=len(bounded_positions),
    )


def _rational_field():
    from .fields import rationals
    return rationals()
