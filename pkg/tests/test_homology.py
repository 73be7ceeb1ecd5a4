import itertools
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from salcom.errors import UsageError
from salcom.homology import (
    SparseMatrix,
    betti,
    boundary_matrices,
    is_reduced_acyclic,
    smith_normal_form,
    try_collapse,
)
from salcom.poset import FinitePoset, SimplicialComplex, order_complex


def oracle_factors(rows):
    m = sympy.Matrix(rows)
    if m.rows == 0 or m.cols == 0:
        return ()
    d = sympy_snf(m, domain=sympy.ZZ)
    return tuple(sorted(abs(int(d[i, i])) for i in range(min(d.shape)) if d[i, i] != 0))


def rational_rank(rows):
    return sympy.Matrix(rows).rank() if rows and rows[0] else 0


def sphere(k):
    """Boundary of the (k+1)-simplex."""
    return SimplicialComplex.from_facets(range(k + 2), itertools.combinations(range(k + 2), k + 1))


def hollow_triangle():
    return sphere(1)


# 6-vertex triangulation of the real projective plane
RP2 = SimplicialComplex.from_facets(
    range(6),
    [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5), (1, 2, 4), (2, 4, 5), (2, 3, 5), (1, 3, 5), (1, 3, 4)],
)


def test_single_edge_boundary():
    ch = boundary_matrices(SimplicialComplex("ab", [(0,), (1,), (0, 1)]))
    assert ch.boundaries[1].to_dense() == [[-1], [1]]


def test_hollow_triangle_boundary():
    d1 = boundary_matrices(hollow_triangle()).boundaries[1]
    assert (d1.nrows, d1.ncols) == (3, 3)
    assert smith_normal_form(d1)[1] == 2


def test_point_has_no_nontrivial_boundaries():
    ch = boundary_matrices(SimplicialComplex("a", [(0,)]))
    assert ch.sizes == [1]
    assert all(b.nnz == 0 for b in ch.boundaries)


def test_boundary_squares_to_zero():
    assert boundary_matrices(RP2).check()
    assert boundary_matrices(sphere(3)).check()


def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 3]]) == ((1, 6), 2)
    assert smith_normal_form(np.eye(4, dtype=int).tolist()) == ((1, 1, 1, 1), 4)
    assert smith_normal_form([[0, 0], [0, 0]]) == ((), 0)
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == ((2, 6, 12), 3)


@st.composite
def int_matrices(draw):
    r = draw(st.integers(1, 6))
    c = draw(st.integers(1, 6))
    return [[draw(st.integers(-6, 6)) for _ in range(c)] for _ in range(r)]


@given(int_matrices())
def test_snf_matches_sympy(rows):
    factors, rank = smith_normal_form(rows)
    assert factors == oracle_factors(rows)
    assert rank == rational_rank(rows)
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))


def test_sparse_matmul():
    a = SparseMatrix.from_dense([[1, 2], [0, 1]])
    b = SparseMatrix.from_dense([[3], [4]])
    assert (a @ b).to_dense() == [[11], [4]]
    with pytest.raises(UsageError):
        b @ b


def test_homology_examples():
    assert betti(hollow_triangle()).betti == (1, 1)
    assert betti(sphere(2)).betti == (1, 0, 1)
    assert not is_reduced_acyclic(sphere(2))
    two_points = SimplicialComplex("ab", [(0,), (1,)])
    assert betti(two_points).betti == (2,)
    assert not is_reduced_acyclic(two_points)
    with pytest.raises(UsageError):
        is_reduced_acyclic(SimplicialComplex(()))


def test_projective_plane_has_two_torsion():
    h = betti(RP2)
    assert h.betti == (1, 0, 0)
    assert h.torsion == ((), (2,), ())
    assert not h.torsion_free()
    assert not h.reduced_acyclic()


def test_csv_report():
    assert betti(hollow_triangle()).to_csv() == "degree,betti,reduced_betti,torsion\n0,1,0,\n1,1,1,\n"
    assert betti(RP2).to_csv().splitlines()[2] == "1,0,0,2"


def test_collapse_examples():
    assert try_collapse(SimplicialComplex.from_facets(range(4), [(0, 1, 2, 3)]))
    assert not try_collapse(hollow_triangle())
    cone = order_complex(FinitePoset.from_relation([1, 2, 3, 6], lambda a, b: b % a == 0))
    assert try_collapse(cone)
    assert is_reduced_acyclic(cone)


@st.composite
def complexes(draw):
    n = draw(st.integers(1, 7))
    facets = draw(
        st.lists(st.lists(st.integers(0, n - 1), min_size=1, max_size=4, unique=True), min_size=1, max_size=8)
    )
    return SimplicialComplex.from_facets(range(n), facets)


@given(complexes())
def test_betti_matches_rational_ranks(cx):
    ch = boundary_matrices(cx)
    ranks = [0] + [rational_rank(b.to_dense()) for b in ch.boundaries[1:]] + [0]
    expected = tuple(ch.sizes[k] - ranks[k] - ranks[k + 1] for k in range(len(ch.sizes)))
    h = betti(cx)
    assert h.betti == expected
    assert h.euler_characteristic == cx.euler_characteristic()


@given(complexes())
def test_torsion_matches_sympy(cx):
    ch = boundary_matrices(cx)
    h = betti(cx)
    for k in range(1, len(ch.sizes)):
        want = tuple(d for d in oracle_factors(ch.boundaries[k].to_dense()) if d > 1)
        assert h.torsion[k - 1] == want


@given(complexes())
def test_collapsible_implies_acyclic(cx):
    if try_collapse(cx):
        assert betti(cx).reduced_acyclic()


@given(complexes(), st.randoms(use_true_random=False))
def test_homology_ignores_vertex_order(cx, rnd):
    perm = list(range(len(cx.vertices)))
    rnd.shuffle(perm)
    assert betti(cx.relabel(perm)) == betti(cx)
