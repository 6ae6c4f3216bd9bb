"""The vertex operator, its dot identities, flats, and the incidence matrix."""

import pytest

from ncph.embed import (EmbedError, dot_property_report, facet_chambers,
                        flat_leq, intersection_lattice,
                        intersection_lattice_proper_betti, project_to_slice,
                        rays_as_flats_check, vertex_operator)
from ncph.linalg import dot, vec_scale
from conftest import bundle_for


def test_rank_one_operator_is_identity():
    bundle = bundle_for("A", 1)
    op = vertex_operator(bundle.system)
    assert op == bundle.system.identity


def test_a2_operator_exists(a2):
    delta = a2.system.identity - a2.system.coxeter_element
    assert delta.det() == a2.system.field.from_rational(3)
    vertex_operator(a2.system)


@pytest.mark.parametrize("label,rank", [("A", 2), ("B", 3)])
def test_dot_identities_exhaustive(label, rank):
    bundle = bundle_for(label, rank)
    report = dot_property_report(bundle.system, bundle.ordered,
                                 bundle.vertex_complex, bundle.generic.vector)
    assert report.ok


def test_projection_properties(a2):
    v = a2.generic.vector
    field = a2.system.field
    assert project_to_slice(v, v) == v
    x = a2.vertex_complex.vertices[0]
    assert project_to_slice(vec_scale(x, field.from_rational(2)), v) \
        == project_to_slice(x, v)
    for vertex in a2.vertex_complex.vertices:
        project_to_slice(vertex, v)  # defined for every vertex
    with pytest.raises(EmbedError):
        project_to_slice(vec_scale(v, field.from_rational(-1)), v)


def test_intersection_lattice_a2(a2):
    flats = intersection_lattice(a2.system)
    assert [f.codim for f in flats] == [0, 1, 1, 1, 2]
    betti = intersection_lattice_proper_betti(a2.system)
    assert betti == {-1: 0, 0: 2}


def test_intersection_lattice_rank_one():
    bundle = bundle_for("A", 1)
    flats = intersection_lattice(bundle.system)
    assert [f.codim for f in flats] == [0, 1]  # proper part empty


def test_intersection_lattice_b3(b3):
    flats = intersection_lattice(b3.system)
    by_codim = {}
    for f in flats:
        by_codim[f.codim] = by_codim.get(f.codim, 0) + 1
    assert by_codim == {0: 1, 1: 9, 2: 13, 3: 1}
    assert intersection_lattice_proper_betti(b3.system) == {-1: 0, 0: 0, 1: 15}
    assert rays_as_flats_check(b3.system, b3.rays)


def test_flat_order_is_reverse_inclusion(a2):
    flats = intersection_lattice(a2.system)
    whole, line = flats[0], flats[1]
    assert flat_leq(a2.system.field, whole, line)
    assert not flat_leq(a2.system.field, line, whole)


def test_facet_chambers_properties(b3):
    bounded = set(b3.embedding.bounded_positions)
    total = 0
    for facet in b3.vertex_complex.complex.facets:
        members = facet_chambers(b3.system, b3.vertex_complex, facet,
                                 b3.chamber_list)
        assert len(members) >= 1
        assert set(members) <= bounded   # contained chambers are bounded-slice
        total += len(members)
    assert total == b3.embedding.covered_chambers


def test_b3_marked_facet_contains_two_chambers(b3):
    # 1-based vertex labels {2, 4, 8}: internal 0-based {1, 3, 7}
    marked = (1, 3, 7)
    assert marked in b3.vertex_complex.complex.facets
    members = facet_chambers(b3.system, b3.vertex_complex, marked,
                             b3.chamber_list)
    assert len(members) == 2


def test_embedding_report_a2(a2):
    report = a2.embedding
    assert report.bounded_count == 2
    assert report.rank == 2
    assert report.ok


def test_embedding_report_b3(b3):
    report = b3.embedding
    assert report.bounded_count == 15
    assert len(report.facets) == 10
    assert len(report.incidence) == 15
    assert report.rank == 10
    assert report.injective
    assert report.columns_disjoint
    assert report.columns_nonempty
    assert report.incident_all_bounded
    assert sorted(report.column_weights) == [1] * 9 + [2]
