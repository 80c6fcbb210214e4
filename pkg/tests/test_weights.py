from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from periplectic import weights as wts
from periplectic.hpoly import HPoly, evaluation_matrix
from periplectic.gf import rank


def test_rho():
    assert wts.rho(2, 5) == (1, 0)
    assert wts.rho(3, 7) == (2, 1, 0)


def test_parse_and_format():
    assert wts.parse_weight("3,1", 2, 5) == (3, 1)
    assert wts.parse_weight("7, -1", 2, 5) == (2, 4)
    assert wts.format_weight((3, 1)) == "3,1"
    with pytest.raises(ValueError):
        wts.parse_weight("1,2,3", 2, 5)


def test_weyl_group():
    assert len(wts.weyl_group(3)) == 6
    s = wts.transposition(3, 0, 2)
    assert wts.compose(s, s) == wts.identity(3)
    for w in wts.weyl_group(3):
        assert wts.compose(w, wts.inverse(w)) == wts.identity(3)


def test_dot_action_n2():
    s = wts.transposition(2, 0, 1)
    # s.(mu1, mu2) = (mu2 - 1, mu1 + 1)
    assert wts.dot(s, (1, 0), 5) == (4, 2)
    assert wts.dot(s, (0, 1), 5) == (0, 1)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=3, max_size=3),
       st.permutations(range(3)), st.permutations(range(3)))
def test_dot_is_an_action(mu, a, b):
    p = 7
    a, b = tuple(a), tuple(b)
    assert wts.dot(wts.compose(a, b), mu, p) == wts.dot(a, wts.dot(b, mu, p), p)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=3, max_size=3), st.permutations(range(3)),
       st.integers(0, 6))
def test_dot_independent_of_rho_shift(mu, w, c):
    """Replacing rho by rho + c(1,...,1) gives the same dot action."""
    p = 7
    shift = tuple((r + c) % p for r in wts.rho(3, p))
    assert wts.dot(tuple(w), mu, p, shift=shift) == wts.dot(tuple(w), mu, p)


def test_theta_values():
    assert wts.theta((0, 0), 5) == 0
    assert wts.delta((0, 0), 5) == 0
    # Theta_12 = mu1 - mu2, Theta_21 = mu2 - mu1 - 2
    assert wts.theta_ij(1, 2, (3, 1), 5) == 2
    assert wts.theta_ij(2, 1, (3, 1), 5) == (1 - 3 - 2) % 5
    assert wts.delta((1, 0), 5) == 1


def test_atypical_counts_n2p5():
    assert len(wts.atypical_set(2, 5)) == 10
    assert sum(wts.is_typical(mu, 5) for mu in wts.all_weights(2, 5)) == 15
    assert sum(wts.delta(mu, 5) != 0 for mu in wts.all_weights(2, 5)) == 20


def test_walls():
    wall = wts.atypical_wall_members(1, 2, 2, 5)
    assert wall == {(a, a) for a in range(5)}
    wall21 = wts.atypical_wall_members(2, 1, 2, 5)
    assert wall21 == {(a, (a + 2) % 5) for a in range(5)}


@pytest.mark.parametrize("n,p,count", [(2, 5, 15), (2, 7, 28), (3, 7, 84)])
def test_orbit_counts(n, p, count):
    assert len(wts.orbits(n, p)) == count


def test_orbits_partition():
    n, p = 3, 5
    seen = [mu for cls in wts.orbits(n, p) for mu in cls]
    assert sorted(seen) == wts.all_weights(n, p)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=3, max_size=3), st.permutations(range(3)))
def test_linkage_class_is_group_orbit(mu, w):
    p = 7
    cls = wts.linkage_class(mu, p)
    assert wts.dot(tuple(w), mu, p) in cls
    assert cls == frozenset(wts.dot(v, mu, p) for v in wts.weyl_group(3))
    assert wts.linked(mu, wts.dot(tuple(w), mu, p), p)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=3, max_size=3), st.permutations(range(3)))
def test_typicality_is_linkage_invariant(mu, w):
    p = 7
    assert wts.is_typical(mu, p) == wts.is_typical(wts.dot(tuple(w), mu, p), p)


def test_polynomials_match_values():
    n, p = 2, 5
    th, de = wts.theta_poly(n, p), wts.delta_poly(n, p)
    for mu in wts.all_weights(n, p):
        assert th(mu) == wts.theta(mu, p)
        assert de(mu) == wts.delta(mu, p)
        assert wts.theta_ij_poly(2, 1, n, p)(mu) == wts.theta_ij(2, 1, mu, p)


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(1, 4),
                       max_size=4), st.permutations(range(2)))
def test_dot_action_on_uh_matches_evaluation(coeffs, w):
    """(w.f)(lam) = f(w^-1 . lam)."""
    n, p = 2, 5
    f = HPoly(n, p, coeffs)
    w = tuple(w)
    g = wts.dot_action_on_uh(w, f)
    for lam in wts.all_weights(n, p):
        assert g(lam) == f(wts.dot(wts.inverse(w), lam, p))


def test_invariants_uh_dimension():
    # one invariant per dot-orbit, since evaluation is injective on u(h)
    assert wts.invariants_uh(2, 5).dim == 15
    assert rank(evaluation_matrix(2, 5), 5) == 25


def test_theta_is_invariant():
    n, p = 2, 5
    th = wts.theta_poly(n, p)
    for s in wts.simple_reflections(n):
        assert wts.dot_action_on_uh(s, th) == th
    assert wts.invariants_uh(n, p).contains(th.to_vector())
