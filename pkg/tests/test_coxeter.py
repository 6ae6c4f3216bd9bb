"""Coxeter systems: bipartite order, realization, group, lengths, order."""

import pytest

from fractions import Fraction

from ncph.coxeter import (BudgetExceededError, CoxeterDiagram, CoxeterSystem,
                          NotFiniteTypeError, bipartite_order,
                          reflection_matrix)
from ncph.linalg import dot


def test_bipartite_order_examples():
    assert bipartite_order(CoxeterDiagram.from_type("A", 2)) == ((0, 1), 1)
    assert bipartite_order(CoxeterDiagram.from_type("A", 3)) == ((0, 2, 1), 2)
    for m in (3, 5, 8):
        assert bipartite_order(CoxeterDiagram.from_type("I", m)) == ((0, 1), 1)


def test_bipartite_swap():
    perm, s = bipartite_order(CoxeterDiagram.from_type("A", 3), swap=True)
    assert perm == (1, 0, 2) and s == 1


def test_bipartite_classes_are_orthonormal():
    for label, rank in (("A", 3), ("B", 3), ("H", 3), ("D", 4)):
        system = CoxeterSystem(CoxeterDiagram.from_type(label, rank))
        s = system.s
        roots = system.simple_roots
        for i in range(len(roots)):
            assert dot(roots[i], roots[i]) == system.field.one
        for block in (range(s), range(s, len(roots))):
            for i in block:
                for j in block:
                    if i != j:
                        assert dot(roots[i], roots[j]).is_zero()


def test_a2_gram_entry():
    system = CoxeterSystem(CoxeterDiagram.from_type("A", 2))
    a1, a2 = system.simple_roots
    assert dot(a1, a2) == system.field.from_rational(Fraction(-1, 2))


def test_orthogonal_labels_give_zero_inner_product():
    system = CoxeterSystem(CoxeterDiagram.from_type("A", 3))
    # permuted order (0, 2, 1): the first two simple roots commute
    assert dot(system.simple_roots[0], system.simple_roots[1]).is_zero()


def test_b3_needs_sqrt2():
    system = CoxeterSystem(CoxeterDiagram.from_type("B", 3))
    assert system.field.name == "Q(sqrt2)"


def test_group_sizes():
    assert CoxeterSystem(CoxeterDiagram.from_type("A", 1)).order == 2
    assert CoxeterSystem(CoxeterDiagram.from_type("A", 2)).order == 6
    assert CoxeterSystem(CoxeterDiagram.from_type("B", 3)).order == 48  # 2^3 3!


def test_reflection_counts_match_nh2():
    for label, rank, expected in (("A", 2, 3), ("B", 3, 9), ("A", 1, 1)):
        system = CoxeterSystem(CoxeterDiagram.from_type(label, rank))
        assert len(system.reflections) == expected
        assert expected == system.rank * system.h // 2


def test_group_elements_are_orthogonal():
    system = CoxeterSystem(CoxeterDiagram.from_type("B", 2))
    for w in system.elements:
        assert w.transpose() * w == system.identity


def test_reflection_lengths():
    for label, rank, c_len in (("A", 2, 2), ("B", 3, 3)):
        system = CoxeterSystem(CoxeterDiagram.from_type(label, rank))
        assert system.lengths[system.e_index] == 0
        for t, _ in system.reflections:
            assert system.lengths[t] == 1
        assert system.lengths[system.c_index] == c_len


@pytest.mark.parametrize("label,rank", [("A", 2), ("A", 3), ("B", 2), ("B", 3)])
def test_length_equals_bfs_word_length(label, rank):
    system = CoxeterSystem(CoxeterDiagram.from_type(label, rank))
    assert system.bfs_reflection_lengths() == system.lengths


def test_precedes_basics():
    system = CoxeterSystem(CoxeterDiagram.from_type("A", 2))
    for w in range(system.order):
        assert system.precedes(system.e_index, w)
        assert system.precedes(w, w)
    for t, _ in system.reflections:
        assert system.precedes(t, system.c_index)


@pytest.mark.parametrize("label,rank", [("A", 2), ("B", 2), ("B", 3)])
def test_absolute_order_is_partial_order(label, rank):
    system = CoxeterSystem(CoxeterDiagram.from_type(label, rank))
    n = system.order
    leq = [[system.precedes(u, w) for w in range(n)] for u in range(n)]
    for u in range(n):
        assert leq[u][u]
        for w in range(n):
            if u != w and leq[u][w]:
                assert not leq[w][u]
    for u in range(n):
        for v in range(n):
            if leq[u][v]:
                for w in range(n):
                    if leq[v][w]:
                        assert leq[u][w]


@pytest.mark.parametrize("label,rank", [("A", 2), ("B", 2), ("B", 3), ("H", 3)])
def test_reflection_conjugation_identity(label, rank):
    # r(rho) r(tau) = r(tau) r(rho') with rho' = r(tau) applied to rho
    system = CoxeterSystem(CoxeterDiagram.from_type(label, rank))
    roots = [root for _, root in system.reflections]
    for rho in roots:
        r_rho = reflection_matrix(system.field, rho)
        for tau in roots:
            r_tau = reflection_matrix(system.field, tau)
            conj = reflection_matrix(system.field, r_tau.apply(rho))
            assert r_rho * r_tau == r_tau * conj


def test_odd_cycle_diagram_rejected():
    triangle = CoxeterDiagram.from_matrix([[1, 3, 3], [3, 1, 3], [3, 3, 1]])
    with pytest.raises(NotFiniteTypeError):
        CoxeterSystem(triangle)   # not 2-colorable


def test_affine_and_hyperbolic_paths_rejected():
    # bipartite paths whose Gram matrix is not positive definite
    affine = CoxeterDiagram.from_matrix([[1, 4, 2], [4, 1, 4], [2, 4, 1]])
    with pytest.raises(NotFiniteTypeError):
        CoxeterSystem(affine)
    hyperbolic = CoxeterDiagram.from_matrix([[1, 5, 2], [5, 1, 5], [2, 5, 1]])
    with pytest.raises(NotFiniteTypeError):
        CoxeterSystem(hyperbolic)


def test_group_cap():
    with pytest.raises(BudgetExceededError):
        CoxeterSystem(CoxeterDiagram.from_type("B", 3), group_cap=10)


def test_invalid_diagrams():
    with pytest.raises(ValueError):
        CoxeterDiagram.from_matrix([[1, 2], [3, 1]])    # asymmetric
    with pytest.raises(ValueError):
        CoxeterDiagram.from_matrix([[2, 3], [3, 1]])    # diagonal
    with pytest.raises(ValueError):
        CoxeterDiagram.from_matrix([[1, 1], [1, 1]])    # off-diagonal < 2
    with pytest.raises(ValueError):
        CoxeterDiagram.from_type("E", 6)


def test_c_is_alias_of_b():
    b = CoxeterSystem(CoxeterDiagram.from_type("B", 3))
    c = CoxeterSystem(CoxeterDiagram.from_type("C", 3))
    assert [m.key() for m in b.elements] == [m.key() for m in c.elements]


def test_positive_roots_pair_with_reflections():
    system = CoxeterSystem(CoxeterDiagram.from_type("B", 3))
    for t, root in system.reflections:
        assert system.lengths[t] == 1
        assert dot(root, root) == system.field.one
        assert dot(root, system.interior_point).sign() > 0
        assert reflection_matrix(system.field, root) == system.elements[t]
