from __future__ import annotations

import pytest

from periplectic import center as ctr
from periplectic import weights as wts
from periplectic.pbw import FULL, TRUNCATED, PBWAlgebra, super_commutator
from periplectic.reps import baby_verma, kac_module
from periplectic.structure import build_structure

TYPICAL25 = [mu for mu in wts.all_weights(2, 5) if wts.is_typical(mu, 5)]


def test_center_dimensions(center25):
    s = center25.stats
    assert s["weight_zero_monomials"] == 450
    assert s["ideal_weight_zero_dim"] == 200
    assert s["kernel_dim"] == 241
    assert s["center_dim"] == len(center25.elements) == 41
    assert center25.image_space.dim == 11


def test_no_conditions_gives_whole_weight_zero_part(t25, quot25):
    cb = ctr.compute_center(t25, quot25, conditions=[])
    assert len(cb.elements) == 250


def test_center_needs_quotient_mode(t25):
    with pytest.raises(ValueError):
        ctr.compute_center(t25, PBWAlgebra(t25, TRUNCATED))


def test_hc_projection_well_defined(quot25):
    assert ctr.hc_kernel_on_ideal(quot25).ok


def test_contents(center25):
    c = ctr.verify_center_contents(center25)
    assert c.ok, c.details
    assert c.details["one_in_center"] and not c.details["hbar_in_center"]


def test_hc_image_is_dot_invariant(center25):
    assert ctr.verify_hc_w_invariance(center25).ok


def test_wall_constancy(center25):
    c = ctr.verify_wall_constancy(center25)
    assert c.ok and c.details["atypical_weights"] == 10


def test_theta_factorisation_both_ways(center25):
    checks = {c.name: c for c in ctr.verify_theta_factorization(center25)}
    assert checks["center.theta_inclusion"].ok
    assert checks["center.theta_reverse_inclusion"].ok
    assert checks["center.theta_reverse_inclusion"].details["theta_in_image"]
    assert checks["center.theta_ij_divisibility"].ok


def test_theta_target_dimension():
    # F + Theta * u(h)^{W.}: 1 plus one direction per typical orbit
    assert ctr.theta_target(2, 5).dim == 11


def test_image_is_a_subalgebra(center25):
    assert ctr.verify_subalgebra(center25).ok


def test_invariance_under_truncated_exponentials(center25):
    assert ctr.verify_exp_invariance(center25).ok


def test_scalar_action_on_kac_and_baby_verma_modules(center25):
    c = ctr.verify_scalar_action(center25)
    assert c.ok and c.details["modules"] == 50


def test_linkage_theorem(center25):
    c = ctr.verify_linkage_theorem(center25)
    assert c.ok, c.details
    assert c.details["pairs"] == 625
    assert c.details["counterexamples"] == 0
    assert c.details["distinct_characters"] == 11


def test_character_partition_matches_orbits(center25):
    parts = ctr.character_partition(center25)
    atyp = sorted(wts.atypical_set(2, 5))
    assert atyp in parts
    typical_orbits = [cls for cls in wts.orbits(2, 5) if wts.is_typical(cls[0], 5)]
    assert sorted(p for p in parts if p != atyp) == sorted(typical_orbits)


def test_characters_do_not_depend_on_basis(center25):
    assert ctr.verify_character_basis_independence(center25, seed=3).ok


def test_odd_lowering_commutators(center25):
    """[y, u] need not vanish for u in Z; the failures come only from y and the
    super-central part still has the full Harish-Chandra image."""
    c = ctr.verify_super_centrality(center25)
    assert c.details["failing_elements_by_vector"] == {"y(1,2)": 40}
    assert c.details["supercentral_dim"] == 36
    assert ctr.supercentral_subspace(center25).dim == 36
    assert ctr.verify_supercentral_image(center25).ok


def test_odd_lowering_commutators_act_as_zero(t25, center25):
    """[y, u] kills every Kac and baby Verma module, so it lies in the radical."""
    full = PBWAlgebra(t25, FULL)
    y = t25.idx("Y", 1, 2)
    brackets = [super_commutator(y, u) for u in center25.elements]
    assert any(brackets)
    for mu in wts.all_weights(2, 5):
        for M in (kac_module(t25, mu, full), baby_verma(t25, mu, full)):
            for b in brackets:
                assert not M.element_matrix(b).any()


def test_root_subgroup_invariance(center25):
    c = ctr.verify_root_subgroup_invariance(center25)
    assert c.details["center_dim"] == 41
    assert c.details["invariant_dim"] == 36
    assert c.details["max_degree"] == 5


def test_center_with_divided_power_conditions(t25, quot25, center25):
    strict = ctr.compute_center(t25, quot25, root_subgroups=True)
    assert len(strict.elements) == 36
    assert strict.image_space == center25.image_space
    assert ctr.verify_root_subgroup_invariance(strict).ok
    assert ctr.verify_linkage_theorem(strict).ok
    # the odd lowering obstruction survives the stronger invariance
    assert ctr.verify_super_centrality(strict).details["supercentral_dim"] == 31
    c = ctr.verify_root_subgroup_center(center25)
    assert c.ok and c.details["center_dim"] == 36


def test_hasse_images_of_root_vector(t25):
    e12 = t25.idx("E", 1, 2)
    images = ctr.hasse_images(t25, e12)
    # ad(e12) on e21 reaches degree 2: e21 -> h1 - h2 -> -2 e12, divided by 2!
    degrees = [j for j, _ in images[t25.idx("E", 2, 1)]]
    assert degrees == [0, 1, 2]
    assert images[t25.idx("E", 2, 1)][2][1] == {e12: 4}


def test_g0_invariants(t25):
    images = ctr.g0_invariants(t25)
    assert len(images) == 35
    # characters of u(g_0)^G separate exactly the linkage classes
    for mu in TYPICAL25:
        same = {lam for lam in wts.all_weights(2, 5)
                if ctr.g0_character(images, lam) == ctr.g0_character(images, mu)}
        assert same == set(wts.linkage_class(mu, 5))


@pytest.mark.parametrize("mu", [(1, 0), (2, 3), (4, 0)])
def test_typical_equivalence(center25, mu):
    checks = ctr.verify_typical_equivalence(center25, mu)
    assert len(checks) == 4
    assert all(c.ok for c in checks), [c for c in checks if not c.ok]


def test_typical_equivalence_rejects_atypical(center25):
    with pytest.raises(ValueError):
        ctr.verify_typical_equivalence(center25, (0, 0))


def test_typical_count():
    assert len(TYPICAL25) == 15


@pytest.mark.parametrize("n,products", [(2, 3), (3, 20)])
def test_yz_projection_nonzero(n, products):
    c = ctr.verify_yz_projection_nonzero(build_structure(n, 5))
    assert c.ok
    assert c.details["products"] == products
    assert c.details["nonzero"] == products


def test_yz_example(t25):
    proj = dict(ctr.yz_projections(t25))
    assert repr(proj["z(1,1)"]) == "e(1,2)"

