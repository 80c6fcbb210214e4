from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from periplectic import gf

P = 5


def matrices(rows=st.integers(0, 6), cols=st.integers(1, 6), p=P):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.integers(0, p - 1), min_size=rc[0] * rc[1], max_size=rc[0] * rc[1])
        .map(lambda xs: np.array(xs, dtype=np.int64).reshape(rc)))


def test_is_prime():
    assert [q for q in range(30) if gf.is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("p", [5, 7, 11])
def test_inverse(p):
    for a in range(1, p):
        assert a * gf.inv(a, p) % p == 1
    with pytest.raises(ZeroDivisionError):
        gf.inv(0, p)


def test_rank_small():
    m = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert gf.rank(m, 5) == 2
    assert gf.rank(m, 7) == 2


def test_rank_depends_on_characteristic():
    m = np.array([[1, 1], [1, 6]])
    assert gf.rank(m, 5) == 1
    assert gf.rank(m, 7) == 2


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    assert gf.rank(m, P) + gf.kernel(m, P).dim == m.shape[1]


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_kernel_is_annihilated(m):
    k = gf.kernel(m, P)
    if m.shape[0] and k.dim:
        assert not (m @ k.basis.T % P).any()


@settings(max_examples=60, deadline=None)
@given(matrices(rows=st.integers(0, 4), cols=st.just(5)),
       matrices(rows=st.integers(0, 4), cols=st.just(5)))
def test_sum_and_intersection_dims(a, b):
    A = gf.Subspace.span(a, 5, P)
    B = gf.Subspace.span(b, 5, P)
    assert (A + B).dim + gf.intersect(A, B).dim == A.dim + B.dim
    assert A.contains_subspace(gf.intersect(A, B))


@settings(max_examples=60, deadline=None)
@given(matrices(rows=st.integers(0, 4), cols=st.just(6)))
def test_annihilator_dimension(a):
    A = gf.Subspace.span(a, 6, P)
    ann = A.annihilator()
    assert A.dim + ann.dim == 6
    if A.dim and ann.dim:
        assert not (A.basis @ ann.basis.T % P).any()


@settings(max_examples=60, deadline=None)
@given(matrices(rows=st.integers(1, 4), cols=st.just(5)), st.lists(st.integers(0, P - 1),
                                                                    min_size=5, max_size=5))
def test_reduce_is_a_normal_form(a, w):
    A = gf.Subspace.span(a, 5, P)
    w = np.array(w, dtype=np.int64)
    r = A.reduce(w)
    assert A.contains((w - r) % P)
    assert all(r[c] == 0 for c in A.pivots)
    shifted = (w + A.basis.sum(axis=0)) % P if A.dim else w
    assert np.array_equal(A.reduce(shifted), r)


def test_subspace_equality_ignores_spanning_set():
    a = gf.Subspace.span([[1, 2, 0], [0, 1, 1]], 3, 7)
    b = gf.Subspace.span([[1, 3, 1], [2, 5, 1], [1, 2, 0]], 3, 7)
    assert a == b
    assert a.dim == 2


@pytest.mark.parametrize("p", [5, 7, 65537])
def test_matmul_matches_integer_product(p):
    rng = np.random.default_rng(0)
    a = rng.integers(0, p, size=(7, 9))
    b = rng.integers(0, p, size=(9, 4))
    assert np.array_equal(gf.matmul(a, b, p), (a @ b) % p)


def test_preimage():
    op = np.array([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    target = gf.Subspace.coordinate([0], 3, 5)
    pre = gf.preimage(op, target)
    assert pre == gf.Subspace.coordinate([0, 1], 3, 5)


def test_spin_and_largest_invariant_subspace():
    # nilpotent shift on F^4
    shift = np.diag([1, 1, 1], k=-1).astype(np.int64)
    e0 = np.array([1, 0, 0, 0])
    assert gf.spin([e0], [shift], 4, 5).dim == 4
    assert gf.spin([np.array([0, 0, 1, 0])], [shift], 4, 5).dim == 2
    within = gf.Subspace.coordinate([1, 2, 3], 4, 5)
    inv = gf.largest_invariant_subspace([shift], within)
    assert inv == within
    assert gf.is_invariant(inv, shift)
    within = gf.Subspace.coordinate([0, 1, 2], 4, 5)
    assert gf.largest_invariant_subspace([shift], within).dim == 0


@settings(max_examples=40, deadline=None)
@given(matrices(rows=st.just(4), cols=st.just(4)), matrices(rows=st.integers(1, 3), cols=st.just(4)))
def test_spin_is_smallest_invariant(op, seeds):
    S = gf.spin(seeds, [op], 4, P)
    assert gf.is_invariant(S, op)
    assert S.contains_subspace(gf.Subspace.span(seeds, 4, P))
    big = gf.largest_invariant_subspace([op], gf.Subspace.full(4, P))
    assert big.dim == 4


def test_shape_errors():
    with pytest.raises(ValueError):
        gf.spin([[1, 0]], [np.eye(3, dtype=np.int64)], 2, 5)
    a = gf.Subspace.full(2, 5)
    b = gf.Subspace.full(3, 5)
    with pytest.raises(ValueError):
        gf.intersect(a, b)
