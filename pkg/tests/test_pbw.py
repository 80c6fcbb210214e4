from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from periplectic.center import weight_zero_decomposition
from periplectic.grammar import ParseError
from periplectic.pbw import (FULL, QUOTIENT, TRUNCATED, Element, PBWAlgebra, SizeLimitExceeded,
                             associativity_failures, grading_failures, hc_project,
                             ideal_closure_violations, ideal_I_generators, random_element,
                             super_commutator, weight_zero_monomials, z_grade_decompose)
from periplectic.structure import build_structure


def test_monomial_counts(full25, trunc25, quot25):
    assert full25.count_monomials() == 2 * 5 ** 4 * 8
    assert trunc25.count_monomials() == 5000
    assert sum(1 for _ in trunc25.monomials()) == 5000
    assert quot25.count_monomials() == 5000


def test_restricted_powers(full25):
    h1 = full25.basis_element("H", 1)
    e12 = full25.basis_element("E", 1, 2)
    assert h1 ** 5 == h1
    assert e12 ** 5 == full25.zero()
    assert e12 ** 4 != full25.zero()


def test_power_of_h_inside_a_word(full25):
    # regression: x^p must drop every copy of x, not one
    h1, e12 = full25.basis_element("H", 1), full25.basis_element("E", 1, 2)
    assert (h1 ** 4) * (h1 * e12) == h1 * e12


def test_odd_squares_vanish(full25):
    for g in full25.table.y_indices + full25.table.z_indices:
        x = full25.gen(g)
        assert x * x == full25.zero()


@pytest.mark.parametrize("n,p", [(2, 5), (3, 5)])
def test_defining_relations(n, p):
    """x y - (-1)^{|x||y|} y x = [x, y] for every pair of basis vectors."""
    t = build_structure(n, p)
    A = PBWAlgebra(t, FULL)
    for a, b in itertools.product(range(t.dim), repeat=2):
        lhs = super_commutator(a, A.gen(b))
        rhs = sum((A.gen(k) * c for k, c in t.bracket(a, b).items()), A.zero())
        assert lhs == rhs, (t.basis[a].label, t.basis[b].label)


def test_associativity_full_seeded(full25):
    assert associativity_failures(full25, random.Random(7), 300) == []


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_associativity_full_n3(seed):
    A = _full(3, 5)
    rng = random.Random(seed)
    a, b, c = (random_element(A, rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)


_ALGEBRAS: dict = {}


def _full(n, p):
    if (n, p) not in _ALGEBRAS:
        _ALGEBRAS[n, p] = PBWAlgebra(build_structure(n, p), FULL)
    return _ALGEBRAS[n, p]


def test_grading_multiplicativity(full25):
    assert grading_failures(full25, random.Random(3), 200) == []


def test_truncated_product_is_not_associative(trunc25, quot25, full25):
    """Right multiplication by y lowers z-length, so dropping long monomials is not an ideal."""
    def triple(A):
        return A.basis_element("Z", 1, 1), A.basis_element("Z", 1, 2), A.basis_element("Y", 1, 2)

    z11, z12, y = triple(trunc25)
    assert (z11 * z12) * y == trunc25.zero()
    assert z11 * (z12 * y) != trunc25.zero()
    z11, z12, y = triple(quot25)
    assert (z11 * z12) * y == z11 * (z12 * y) == quot25.zero()
    z11, z12, y = triple(full25)
    assert (z11 * z12) * y == z11 * (z12 * y)


def test_ideal_dimensions(quot25):
    red = quot25.ideal
    assert red.dim() == 2480
    assert red.quotient_dim() == 2520
    assert red.space((0, 0)).dim == 200
    assert red.quotient_dim((0, 0)) == 250


def test_ideal_generators(full25):
    gens = ideal_I_generators(full25)
    assert len(gens) == 3
    with pytest.raises(ValueError):
        ideal_I_generators(PBWAlgebra(full25.table, QUOTIENT))


def test_ideal_is_two_sided(quot25):
    assert ideal_closure_violations(quot25) == []


def test_quotient_kills_generators_of_I(quot25):
    t = quot25.table
    for a, b in itertools.combinations(t.z_indices, 2):
        assert quot25.product([a, b]) == quot25.zero()
        for c in t.y_indices:
            assert quot25.product([a, b, c]) == quot25.zero()
            assert quot25.product([c, a, b]) == quot25.zero()


def test_quotient_associativity_sample(quot25):
    assert associativity_failures(quot25, random.Random(11), 5) == []


def test_size_limit():
    Q = PBWAlgebra(build_structure(3, 5), QUOTIENT)
    with pytest.raises(SizeLimitExceeded):
        Q.ideal


def test_weight_zero_monomials_have_grade_zero(trunc25):
    W0 = weight_zero_monomials(trunc25)
    assert len(W0) == 450
    assert all(trunc25.z_grade(m) == 0 for m in W0)


@pytest.mark.parametrize("mode,total,ell", [(TRUNCATED, 450, 425), (QUOTIENT, 250, 225)])
def test_weight_zero_decomposition(t25, mode, total, ell):
    dec = weight_zero_decomposition(t25, mode)
    assert dec["dim_ubar_T"] == total
    assert dec["dim_uh"] == 25
    assert dec["dim_l"] == ell
    assert dec["intersection"] == 0
    assert dec["spans"]


def test_hc_projection(full25):
    u = full25.parse("h(1)^2 + 3*y(1,2).z(1,2) + e(2,1).e(1,2)")
    f = hc_project(u)
    assert f((2, 0)) == 4
    with pytest.raises(ValueError):
        hc_project(full25.parse("e(1,2)"))


def test_z_grade_decomposition(full25):
    u = full25.parse("z(1,1) + y(1,2) + h(1) + y(1,2).z(1,1).z(1,2)")
    parts = z_grade_decompose(u)
    assert sorted(parts) == [-1, 0, 1]
    assert sum((v for v in parts.values()), full25.zero()) == u


def test_weight_and_parity(full25):
    m = full25.parse("y(1,2).z(1,1)")
    (mono,) = m.terms
    assert full25.weight(mono) == (1, -1)
    assert m.parity() == 0
    assert full25.parse("z(1,2) + y(1,2)").parity() == 1


def test_parse_errors(full25):
    for bad in ["", "q(1,2)", "y(1,1)", "y(2,1)", "z(1,3)", "h(1,2)", "2*"]:
        with pytest.raises(ParseError):
            full25.parse(bad)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_format_parse_roundtrip(seed):
    A = _full(2, 5)
    u = random_element(A, random.Random(seed))
    assert A.parse(A.format(u)) == u


def test_unordered_words_are_multiplied(full25):
    assert full25.parse("z(1,2).y(1,2)") == full25.parse("-y(1,2).z(1,2) + h(2) - h(1)")


def test_elements_from_different_algebras_do_not_mix(full25, trunc25):
    with pytest.raises(ValueError):
        full25.one() + trunc25.one()


def test_element_is_immutable_value(full25):
    u = full25.parse("h(1)")
    v = Element(full25, dict(u.terms))
    assert u == v and hash(u) == hash(v)
