"""Rays, the separation bound, the generic direction, bounded slices."""

from fractions import Fraction

import pytest

from ncph.arrangement import GenericityError, canonical_ray, generic_vector
from ncph.linalg import dot, vec_key, vec_neg
from conftest import bundle_for


def test_rank_one_has_no_rays():
    bundle = bundle_for("A", 1)
    assert bundle.rays == []
    assert bundle.separation == Fraction(1)
    assert bundle.generic.vector == tuple(bundle.ordered.tau[0])


def test_a2_rays(a2):
    assert len(a2.rays) == 3
    for ray in a2.rays:
        first = next(x for x in ray if not x.is_zero())
        assert first == a2.system.field.one


def test_b3_rays(b3):
    assert len(b3.rays) == 13
    assert len({vec_key(r) for r in b3.rays}) == 13


def test_chamber_rays_lie_in_ray_set(b3):
    ray_keys = {vec_key(r) for r in b3.rays}
    for chamber in b3.chamber_list:
        for ray in chamber.rays:
            assert vec_key(canonical_ray(ray)) in ray_keys


def test_a2_separation_bound(a2):
    lam = a2.separation
    # exact minimum of (r.rho)^2/(r.r) over nonzero pairings is 3/4
    assert lam * lam <= Fraction(3, 4)
    assert lam >= Fraction(6, 7)  # 6/7 is a valid bound, the max is at least it
    assert lam > 0


@pytest.mark.parametrize("label,rank", [("A", 2), ("B", 3), ("H", 3)])
def test_separation_inequality_certificate(label, rank):
    bundle = bundle_for(label, rank)
    lam2 = bundle.separation * bundle.separation
    v = bundle.generic.vector
    for ray in bundle.rays:
        p = dot(ray, v)
        assert p.sign() != 0
        assert (p * p - dot(ray, ray) * lam2).sign() >= 0


def test_generic_vector_geometric_weights(a2):
    gv = a2.generic
    assert gv.base == 1 + 1 / gv.lam
    t1, t2 = a2.ordered.tau
    expected = tuple(x + y * gv.base for x, y in zip(t1, t2))
    assert gv.vector == expected


def test_generic_vector_rejects_bad_bound(a2):
    with pytest.raises(GenericityError):
        generic_vector(a2.system, a2.ordered.tau, Fraction(0))
    with pytest.raises(GenericityError):
        # a wildly large bound fails the exact re-verification
        generic_vector(a2.system, a2.ordered.tau, Fraction(10), a2.rays)


def test_bounded_slice_counts(a2, b3):
    assert sum(a2.bounded_flags) == 2
    assert sum(b3.bounded_flags) == 15


def test_chamber_count_is_group_order(b3):
    assert len(b3.chamber_list) == b3.system.order
    seen = {vec_key(c.interior) for c in b3.chamber_list}
    assert len(seen) == b3.system.order


def _direction_key(ray):
    # canonical per directed ray: positive rescaling only
    from ncph.linalg import vec_scale
    first = next(x for x in ray if not x.is_zero())
    scale = first.inverse() if first.sign() > 0 else (-first).inverse()
    return vec_key(vec_scale(ray, scale))


@pytest.mark.parametrize("label,rank", [("A", 2), ("B", 3)])
def test_antipodal_chamber_not_bounded(label, rank):
    bundle = bundle_for(label, rank)
    by_rayset = {frozenset(_direction_key(r) for r in c.rays): i
                 for i, c in enumerate(bundle.chamber_list)}
    assert len(by_rayset) == len(bundle.chamber_list)
    for chamber, bounded in zip(bundle.chamber_list, bundle.bounded_flags):
        if not bounded:
            continue
        # the antipodal cone is a chamber of the (centrally symmetric)
        # arrangement; v cannot be positive on all its rays too
        antipode = frozenset(_direction_key(vec_neg(r)) for r in chamber.rays)
        assert not bundle.bounded_flags[by_rayset[antipode]]
