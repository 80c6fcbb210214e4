"""The invariant central subalgebra of the quotient u(g)/I, its image under
the Harish-Chandra projection, central characters, and the checks built on
them.

Invariance under G is imposed generator by generator: weight zero for the
torus, and ``[x, u] = 0`` for every even root vector x (root subgroups act
by ``exp(c ad x)``, which fixes u for all c exactly when ad x kills u).
Together with ``[z, u] = 0`` for z in g_1 this gives a finite linear
system on the weight-zero part of the quotient.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import numpy as np

from . import gf, weights as wts
from .hpoly import HPoly, multiplication_matrix
from .pbw import (FULL, QUOTIENT, TRUNCATED, Element, PBWAlgebra, hc_project,
                  super_commutator, weight_zero_monomials)
from .reports import INCONCLUSIVE, PASS, Check
from .reps import (baby_verma, fixed_points_g1, is_simple, kac_module, simple_g0_module,
                   top_layer)
from .structure import StructureTable

# compute_center refuses tables with more weight-zero monomials than this
CENTER_LIMIT = 20_000


@dataclass
class CenterBasis:
    table: StructureTable
    alg: PBWAlgebra
    elements: list[Element]
    hc_images: list[HPoly]
    stats: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.table.n

    @property
    def p(self) -> int:
        return self.table.p

    @cached_property
    def image_space(self) -> gf.Subspace:
        size = self.p ** self.n
        vecs = [f.to_vector() for f in self.hc_images]
        return gf.Subspace.span(np.array(vecs).reshape(-1, size), size, self.p)


def _vector(monos_index: dict, terms: dict, size: int) -> np.ndarray:
    v = np.zeros(size, dtype=np.int64)
    for m, c in terms.items():
        v[monos_index[m]] = c
    return v


def commutator_matrix(alg: PBWAlgebra, x: int) -> np.ndarray:
    """Matrix of u -> [x, u] from the weight-zero monomials of the quotient to
    the weight space of x, in normal form modulo the ideal."""
    table = alg.table
    red = alg.ideal
    key = ("commutator", x)
    hit = red.cache.get(key)
    if hit is not None:
        return hit
    trunc = PBWAlgebra(table, TRUNCATED)
    W0 = red.monos.get((0,) * table.n, [])
    w = table.weights[x]
    size = len(red.monos.get(w, []))
    cols = []
    for m in W0:
        br = super_commutator(x, Element(trunc, {m: 1}))
        cols.append(_vector(red.index[w], red.reduce(br.terms), size) if size
                    else np.zeros(0, dtype=np.int64))
    out = np.array(cols, dtype=np.int64).reshape(len(W0), size).T
    red.cache[key] = out
    return out


def compute_center(table: StructureTable, alg: PBWAlgebra | None = None,
                   conditions: list[int] | None = None,
                   root_subgroups: bool = False) -> CenterBasis:
    """Basis of Z and its Harish-Chandra images.

    ``conditions`` lists the basis vectors x imposing ``[x, u] = 0``; the
    default is every even root vector and every z.  With ``root_subgroups``
    the divided powers of ad x for even root vectors are imposed as well, so
    the result is invariant under the whole root subgroups.
    """
    alg = alg or PBWAlgebra(table, QUOTIENT)
    if alg.mode != QUOTIENT:
        raise ValueError("the center lives in quotient mode")
    if alg.count_monomials() > CENTER_LIMIT * 50:
        raise ValueError(f"quotient spanned by {alg.count_monomials()} monomials is too large")
    p = table.p
    red = alg.ideal
    zero = (0,) * table.n
    W0 = red.monos.get(zero, [])
    if len(W0) > CENTER_LIMIT:
        raise ValueError(f"{len(W0)} weight-zero monomials exceed the limit {CENTER_LIMIT}")
    if conditions is None:
        conditions = table.root_vectors_even + table.z_indices
    blocks = [commutator_matrix(alg, x) for x in conditions]
    if root_subgroups:
        blocks += [m for x in table.root_vectors_even for m in root_subgroup_matrices(alg, x)]
    blocks = [b for b in blocks if b.shape[0]]
    cond = np.vstack(blocks) if blocks else np.zeros((0, len(W0)), dtype=np.int64)
    kernel = gf.kernel(cond, p)
    ideal0 = red.space(zero)
    # normal forms of the kernel modulo the ideal, then a fresh echelon basis
    reduced = [ideal0.reduce(v) for v in kernel.basis]
    span = gf.Subspace.span(np.array(reduced).reshape(-1, len(W0)), len(W0), p)
    elements = [Element(alg, {W0[k]: int(c) for k, c in enumerate(v) if c}) for v in span.basis]
    images = [hc_project(u) for u in elements]
    stats = {
        "weight_zero_monomials": len(W0),
        "ideal_weight_zero_dim": ideal0.dim,
        "kernel_dim": kernel.dim,
        "center_dim": span.dim,
        "conditions": [table.basis[x].label for x in conditions],
        "root_subgroups": root_subgroups,
    }
    return CenterBasis(table, alg, elements, images, stats)


# ----- targets in u(h) ------------------------------------------------------------

def theta_target(n: int, p: int) -> gf.Subspace:
    """F*1 + Theta * u(h)^{W.}."""
    inv = wts.invariants_uh(n, p)
    tm = multiplication_matrix(wts.theta_poly(n, p))
    rows = [HPoly.constant(n, p, 1).to_vector()] + [tm @ v % p for v in inv.basis]
    return gf.Subspace.span(np.array(rows), p ** n, p)


def central_character(cb: CenterBasis, mu) -> tuple[int, ...]:
    return tuple(f(mu) for f in cb.hc_images)


# ----- checks --------------------------------------------------------------------------

def verify_super_centrality(cb: CenterBasis) -> Check:
    """[b, u] = 0 for every basis vector b of g, including g_-1."""
    t = cb.table
    coords = np.array([_coords(cb, u) for u in cb.elements]).T
    bad = []
    failing: dict[str, int] = {}
    for b in range(t.dim):
        images = commutator_matrix(cb.alg, b) @ coords % cb.p
        for k in np.nonzero(images.any(axis=0))[0]:
            bad.append((int(k), t.basis[b].label))
            failing[t.basis[b].label] = failing.get(t.basis[b].label, 0) + 1
    central = supercentral_subspace(cb)
    return Check.of("center.super_centrality", not bad, elements=len(cb.elements),
                    basis_vectors=t.dim, failing_elements_by_vector=failing,
                    supercentral_dim=central.dim)


def supercentral_subspace(cb: CenterBasis) -> gf.Subspace:
    """Coefficient vectors c (over the center basis) with sum c_k u_k super-central."""
    coords = np.array([_coords(cb, u) for u in cb.elements]).T
    blocks = [commutator_matrix(cb.alg, b) @ coords % cb.p for b in range(cb.table.dim)]
    blocks = [b for b in blocks if b.shape[0]]
    return gf.kernel(np.vstack(blocks), cb.p)


def verify_supercentral_image(cb: CenterBasis) -> Check:
    """The super-central part of Z has the same Harish-Chandra image as Z."""
    central = supercentral_subspace(cb)
    size = cb.p ** cb.n
    imgs = np.array([f.to_vector() for f in cb.hc_images]).reshape(-1, size)
    sub = gf.Subspace.span(central.basis @ imgs % cb.p, size, cb.p)
    return Check.of("center.supercentral_hc_image", sub == cb.image_space,
                    supercentral_dim=central.dim, center_dim=len(cb.elements),
                    image_dim=cb.image_space.dim, supercentral_image_dim=sub.dim)


def verify_root_subgroup_center(cb: CenterBasis) -> Check:
    """Recompute Z with the divided-power conditions; its image must not shrink."""
    strict = compute_center(cb.table, cb.alg, root_subgroups=True)
    return Check.of("center.root_subgroup_center", strict.image_space == cb.image_space,
                    center_dim=len(strict.elements), image_dim=strict.image_space.dim,
                    supercentral_dim=supercentral_subspace(strict).dim)


def verify_scalar_action(cb: CenterBasis, alg: PBWAlgebra | None = None) -> Check:
    """Each element of Z acts on Z(mu) and K(L(mu)) as the scalar chi_mu(u)."""
    t, p = cb.table, cb.p
    alg = alg or PBWAlgebra(t, FULL)
    bad = []
    for mu in wts.all_weights(t.n, p):
        chi = central_character(cb, mu)
        for M in (baby_verma(t, mu, alg), kac_module(t, mu, alg)):
            eye = np.eye(M.dim, dtype=np.int64)
            for k, (u, c) in enumerate(zip(cb.elements, chi)):
                if ((M.element_matrix(u) - c * eye) % p).any():
                    bad.append((M.tag, k))
    return Check.of("center.scalar_action", not bad, modules=2 * p ** t.n,
                    violations=bad[:20])


def verify_hc_w_invariance(cb: CenterBasis) -> Check:
    n, p = cb.n, cb.p
    bad = []
    for k, f in enumerate(cb.hc_images):
        for s in wts.simple_reflections(n):
            if wts.dot_action_on_uh(s, f) != f:
                bad.append(k)
    # evaluation form over the whole group
    eval_bad = 0
    for f in cb.hc_images:
        for mu in wts.all_weights(n, p):
            v = f(mu)
            for w in wts.weyl_group(n):
                if f(wts.dot(w, mu, p)) != v:
                    eval_bad += 1
    return Check.of("center.hc_w_invariance", not bad and not eval_bad,
                    images=len(cb.hc_images), violations=sorted(set(bad)),
                    evaluation_violations=eval_bad)


def verify_wall_constancy(cb: CenterBasis) -> Check:
    n, p = cb.n, cb.p
    union = sorted(wts.atypical_set(n, p))
    bad = [k for k, f in enumerate(cb.hc_images) if len({f(mu) for mu in union}) > 1]
    # shifts along eps_{n-1} + eps_n inside the wall mu_{n-1} = mu_n
    shift_bad = 0
    for f in cb.hc_images:
        for mu in wts.all_weights(n, p):
            if mu[n - 2] != mu[n - 1]:
                continue
            for s in range(p):
                nu = mu[:n - 2] + ((mu[n - 2] + s) % p, (mu[n - 1] + s) % p)
                if f(nu) != f(mu):
                    shift_bad += 1
    return Check.of("center.wall_constancy", not bad and not shift_bad,
                    atypical_weights=len(union), violations=bad, shift_violations=shift_bad)


def verify_theta_factorization(cb: CenterBasis) -> list[Check]:
    """Both inclusions between h(Z) and F + Theta u(h)^{W.}, plus divisibility by
    each Theta_ij of every image made to vanish on the walls."""
    n, p = cb.n, cb.p
    image = cb.image_space
    target = theta_target(n, p)
    forward = target.contains_subspace(image)
    backward = image.contains_subspace(target)
    theta_in = image.contains(wts.theta_poly(n, p).to_vector())
    out = [
        Check.of("center.theta_inclusion", forward, image_dim=image.dim, target_dim=target.dim),
        Check("center.theta_reverse_inclusion", PASS if backward else INCONCLUSIVE,
              {"image_dim": image.dim, "target_dim": target.dim, "theta_in_image": theta_in}),
    ]
    union = sorted(wts.atypical_set(n, p))
    bad = []
    for k, f in enumerate(cb.hc_images):
        g = f - (f(union[0]) if union else 0)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                m = multiplication_matrix(wts.theta_ij_poly(i, j, n, p))
                col = gf.Subspace.span(m.T, p ** n, p)
                if not col.contains(g.to_vector()):
                    bad.append((k, i, j))
    out.append(Check.of("center.theta_ij_divisibility", not bad, violations=bad[:20]))
    return out


def verify_subalgebra(cb: CenterBasis) -> Check:
    image = cb.image_space
    one = image.contains(HPoly.constant(cb.n, cb.p, 1).to_vector())
    closed = all(image.contains((f * g).to_vector())
                 for f, g in combinations(cb.hc_images, 2))
    return Check.of("center.hc_image_subalgebra", one and closed, contains_one=one,
                    closed_under_products=closed)


def character_partition(cb: CenterBasis) -> list[list[tuple[int, ...]]]:
    groups: dict = {}
    for mu in wts.all_weights(cb.n, cb.p):
        groups.setdefault(central_character(cb, mu), []).append(mu)
    return sorted(groups.values())


def verify_linkage_theorem(cb: CenterBasis) -> Check:
    """chi_mu = chi_nu iff both atypical or both typical and linked, over all pairs."""
    n, p = cb.n, cb.p
    lam = wts.all_weights(n, p)
    chars = {mu: central_character(cb, mu) for mu in lam}
    typ = {mu: wts.is_typical(mu, p) for mu in lam}
    orbit = wts.orbit_ids(n, p)
    bad = []
    for mu in lam:
        for nu in lam:
            expect = (not typ[mu] and not typ[nu]) or (typ[mu] and typ[nu]
                                                      and orbit[mu] == orbit[nu])
            if (chars[mu] == chars[nu]) != expect:
                bad.append((mu, nu))
    classes = {orbit[mu] for mu in lam if typ[mu]}
    expected = len(classes) + (1 if any(not typ[mu] for mu in lam) else 0)
    distinct = len(set(chars.values()))
    return Check.of("center.linkage_theorem", not bad and distinct == expected,
                    pairs=len(lam) ** 2, counterexamples=len(bad), examples=bad[:10],
                    distinct_characters=distinct, expected_characters=expected)


def verify_character_basis_independence(cb: CenterBasis, seed: int = 0) -> Check:
    """A random change of center basis gives the same partition of weights."""
    rng = random.Random(seed)
    k = len(cb.hc_images)
    p = cb.p
    while True:
        mat = np.array([[rng.randrange(p) for _ in range(k)] for _ in range(k)], dtype=np.int64)
        if gf.rank(mat, p) == k:
            break
    mixed = []
    for row in mat:
        f = HPoly.constant(cb.n, p, 0)
        for c, g in zip(row, cb.hc_images):
            f = f + g * int(c)
        mixed.append(f)
    other = CenterBasis(cb.table, cb.alg, cb.elements, mixed)
    same = character_partition(cb) == character_partition(other)
    return Check.of("center.character_basis_independence", same)


def _truncated_exp(u: Element, x: int, c: int) -> Element:
    """sum_{k<p} c^k (ad x)^k u / k!"""
    p = u.alg.p
    out = u
    term = u
    fact = 1
    for k in range(1, p):
        term = super_commutator(x, term)
        if not term:
            break
        fact = fact * k % p
        out = out + term * (pow(c, k, p) * gf.inv(fact, p) % p)
    return out


def verify_exp_invariance(cb: CenterBasis) -> Check:
    """exp(c ad x) u = u for every even root vector x and c in F_p."""
    bad = []
    for k, u in enumerate(cb.elements):
        for x in cb.table.root_vectors_even:
            for c in range(1, cb.p):
                if _truncated_exp(u, x, c) != u:
                    bad.append((k, cb.table.basis[x].label, c))
    return Check.of("center.exp_invariance", not bad, violations=bad[:20])


def verify_center_contents(cb: CenterBasis) -> Check:
    """1 is in Z, h_1 + ... + h_n is not, and every element is even of weight zero."""
    alg = cb.alg
    t = cb.table
    span = gf.Subspace.span(
        np.array([_coords(cb, u) for u in cb.elements]).reshape(-1, len(_w0(cb))),
        len(_w0(cb)), cb.p)
    one_in = span.contains(_coords(cb, alg.one()))
    hbar = alg.zero()
    for g in t.h_indices:
        hbar = hbar + alg.gen(g)
    hbar_in = span.contains(_coords(cb, hbar))
    even = all(u.parity() == 0 for u in cb.elements)
    zero = (0,) * t.n
    weight0 = all(alg.weight(m) == zero for u in cb.elements for m in u.terms)
    return Check.of("center.contents", one_in and not hbar_in and even and weight0,
                    one_in_center=one_in, hbar_in_center=hbar_in, even=even,
                    weight_zero=weight0, dim=len(cb.elements),
                    hc_image_dim=cb.image_space.dim)


def _w0(cb: CenterBasis) -> list:
    return cb.alg.ideal.monos.get((0,) * cb.n, [])


def _coords(cb: CenterBasis, u: Element) -> np.ndarray:
    ms = _w0(cb)
    return _vector(cb.alg.ideal.index[(0,) * cb.n], u.terms, len(ms))


def hc_kernel_on_ideal(alg: PBWAlgebra) -> Check:
    """The ideal has no pure-h part at weight zero, so the projection is well defined."""
    zero = (0,) * alg.n
    bad = sum(1 for v in alg.ideal.elements(zero) if not hc_project(Element(alg, v)).is_zero())
    return Check.of("center.hc_well_defined", bad == 0, ideal_vectors=alg.ideal.space(zero).dim,
                    with_pure_h_part=bad)


def hasse_images(table: StructureTable, x: int) -> dict[int, list[tuple[int, dict]]]:
    """For each basis vector g: the pairs (j, (ad x)^j g / j!) with nonzero image.

    For an even root vector x, Ad(exp(c x)) g = sum_j c^j (ad x)^j g / j!
    (the sum stops at j = 2 on g)."""
    p = table.p
    out = {}
    for g in range(table.dim):
        cur = {g: 1}
        terms = [(0, dict(cur))]
        j, fact = 0, 1
        while True:
            j += 1
            fact = fact * j % p
            nxt: dict = {}
            for b, c in cur.items():
                for k, v in table.bracket_table[x][b]:
                    nxt[k] = (nxt.get(k, 0) + c * v) % p
            nxt = {k: v for k, v in nxt.items() if v}
            if not nxt:
                break
            scale = gf.inv(fact, p)
            terms.append((j, {k: v * scale % p for k, v in nxt.items()}))
            cur = nxt
        out[g] = terms
    return out


def root_subgroup_coefficients(full: PBWAlgebra, images: dict, m) -> dict[int, dict]:
    """Ad(exp(c x)) of a monomial as a polynomial in c: degree -> terms in u(g)."""
    p = full.p
    poly = {0: {full.one_mono: 1}}
    for g in reversed(full.word(m)):
        nxt: dict = {}
        for a, coords in images[g]:
            for j, terms in poly.items():
                acc = nxt.setdefault(a + j, {})
                for b, cb in coords.items():
                    for mm, cm in terms.items():
                        for r, cr in full.lmul(b, mm).items():
                            acc[r] = (acc.get(r, 0) + cb * cm * cr) % p
        poly = {j: {k: v for k, v in d.items() if v} for j, d in nxt.items()}
        poly = {j: d for j, d in poly.items() if d}
    return poly


def root_subgroup_matrices(alg: PBWAlgebra, x: int) -> list[np.ndarray]:
    """Matrices of the coefficients of c^j, j >= 1, in Ad(exp(c x)) restricted to
    the weight-zero part of the quotient, for an even root vector x.  The c^j
    coefficient lands in weight j * wt(x)."""
    red = alg.ideal
    key = ("root_subgroup", x)
    if key in red.cache:
        return red.cache[key]
    t, p = alg.table, alg.p
    zero = (0,) * t.n
    W0 = red.monos.get(zero, [])
    full = PBWAlgebra(t, FULL)
    images = hasse_images(t, x)
    polys = [root_subgroup_coefficients(full, images, m) for m in W0]
    out = []
    for j in sorted({j for poly in polys for j in poly if j >= 1}):
        w = tuple(j * a for a in t.weights[x])
        size = len(red.monos.get(w, []))
        if not size:
            continue
        cols = [red.reduce(alg._truncate(poly.get(j, {}))) for poly in polys]
        mat = np.array([_vector(red.index[w], c, size) for c in cols],
                       dtype=np.int64).reshape(len(W0), size).T
        if mat.any():
            out.append(mat % p)
    red.cache[key] = out
    return out


def verify_root_subgroup_invariance(cb: CenterBasis) -> Check:
    """Invariance under the full root subgroups, polynomially in c.

    The coefficient of c^j for j < p is (ad x)^j / j!, already killed by the
    ad conditions; the coefficients with j >= p (divided powers of ad x) are
    extra conditions.  Reports the dimension of the invariant part.
    """
    p = cb.p
    coords = np.array([_coords(cb, u) for u in cb.elements]).T
    blocks = [m @ coords % p for x in cb.table.root_vectors_even
              for m in root_subgroup_matrices(cb.alg, x)]
    inv = gf.kernel(np.vstack(blocks), p) if blocks else gf.Subspace.full(len(cb.elements), p)
    degree = max((len(root_subgroup_matrices(cb.alg, x)) for x in cb.table.root_vectors_even),
                 default=0)
    return Check.of("center.root_subgroup_invariance", inv.dim == len(cb.elements),
                    center_dim=len(cb.elements), invariant_dim=inv.dim, max_degree=degree)


# ----- u(g_0)^G and chi^0 ------------------------------------------------------------------

def g0_invariants(table: StructureTable, alg: PBWAlgebra | None = None) -> list[HPoly]:
    """HC images of u(g_0)^G: weight-zero even monomials killed by ad of every root vector."""
    alg = alg or PBWAlgebra(table, FULL)
    p = table.p
    zero = (0,) * table.n
    odd = set(alg.y_pos) | set(alg.z_pos)
    W0 = [m for m in alg.monomials([0]) if not any(m[k] for k in odd) and alg.weight(m) == zero]
    blocks = []
    for x in table.root_vectors_even:
        cols = []
        keys: dict = {}
        for m in W0:
            br = super_commutator(x, Element(alg, {m: 1}))
            cols.append(br.terms)
            for mm in br.terms:
                keys.setdefault(mm, len(keys))
        mat = np.zeros((len(keys), len(W0)), dtype=np.int64)
        for j, terms in enumerate(cols):
            for mm, c in terms.items():
                mat[keys[mm], j] = c
        blocks.append(mat)
    kernel = gf.kernel(np.vstack(blocks), p)
    return [hc_project(Element(alg, {W0[k]: int(c) for k, c in enumerate(v) if c}))
            for v in kernel.basis]


def g0_character(images: list[HPoly], mu) -> tuple[int, ...]:
    return tuple(f(mu) for f in images)


def verify_typical_equivalence(cb: CenterBasis, mu, alg: PBWAlgebra | None = None,
                               g0_images: list[HPoly] | None = None) -> list[Check]:
    """For typical mu and each lambda in its dot-class: K(L(lambda)) is simple and killed
    by ker chi_mu, and its g_1-fixed points are exactly 1 (x) L(lambda)."""
    t, p = cb.table, cb.p
    mu = tuple(int(x) % p for x in mu)
    if not wts.is_typical(mu, p):
        raise ValueError(f"{mu} is atypical")
    alg = alg or PBWAlgebra(t, FULL)
    g0_images = g0_images if g0_images is not None else g0_invariants(t, alg)
    cls = sorted(wts.linkage_class(mu, p))
    chi0 = g0_character(g0_images, mu)
    g0_class = sorted(lam for lam in wts.all_weights(t.n, p)
                      if g0_character(g0_images, lam) == chi0)
    chi = central_character(cb, mu)
    name = wts.format_weight(mu)
    simple_bad, annihilate_bad, fixed_bad = [], [], []
    for lam in cls:
        L = simple_g0_module(t, lam, alg)
        K = kac_module(t, lam, alg)
        if not is_simple(K):
            simple_bad.append(lam)
        for u, c in zip(cb.elements, chi):
            m = (K.element_matrix(u) - c * np.eye(K.dim, dtype=np.int64)) % p
            if m.any():
                annihilate_bad.append(lam)
                break
        fixed = fixed_points_g1(K)
        if fixed.dim != L.dim or fixed != top_layer(K, L.dim):
            fixed_bad.append(lam)
    return [
        Check.of(f"typical.{name}.g0_class", g0_class == cls, linkage_class=cls,
                 g0_character_class=g0_class),
        Check.of(f"typical.{name}.kac_simple", not simple_bad, weights=cls, failures=simple_bad),
        Check.of(f"typical.{name}.kernel_annihilates", not annihilate_bad, failures=annihilate_bad),
        Check.of(f"typical.{name}.fixed_points", not fixed_bad, failures=fixed_bad),
    ]


# ----- (Y z)_0 ------------------------------------------------------------------------------

def z_first_order(table: StructureTable) -> list[int]:
    """Generator order z's, then g_0 (f, h, e), then y's."""
    even = table.negative_even + table.h_indices + table.positive_even
    return list(table.z_indices) + even + list(table.y_indices)


def yz_projections(table: StructureTable) -> list[tuple[str, Element]]:
    """(Y z)_0 for every product z of d distinct z's: the part of Y.z with
    no z and no y once rewritten in z-first order."""
    alg = PBWAlgebra(table, FULL, order=z_first_order(table))
    Y = alg.product(table.y_indices)
    out = []
    for combo in combinations(table.z_indices, table.d):
        prod = Y * alg.product(combo)
        keep = {m: c for m, c in prod.terms.items()
                if not any(m[k] for k in alg.z_pos) and not any(m[k] for k in alg.y_pos)}
        label = ".".join(table.basis[g].label for g in combo)
        out.append((label, Element(alg, keep)))
    return out


def verify_yz_projection_nonzero(table: StructureTable) -> Check:
    proj = yz_projections(table)
    nonzero = [label for label, e in proj if e]
    sample = next((f"{label}: {e!r}" for label, e in proj if e), None)
    return Check.of("pbw.yz_projection_nonzero", bool(nonzero), n=table.n, products=len(proj),
                    nonzero=len(nonzero), example=sample)


# ----- ubar^T = u(h) + l ----------------------------------------------------------------------

def weight_zero_decomposition(table: StructureTable, mode: str = TRUNCATED) -> dict:
    """Dimensions in ubar^T = u(h) (+) l with l = (ubar n^+) cap ubar^T.

    l is spanned by products m * x with x a positive root vector (e~_ij, i < j,
    or any z) and m a monomial of weight -wt(x).  ``mode`` selects the
    truncated spanning model or the quotient by I.
    """
    p = table.p
    alg = PBWAlgebra(table, mode)
    zero = (0,) * table.n
    monos: dict = {}
    for m in alg.monomials():
        monos.setdefault(alg.weight(m), []).append(m)
    W0 = monos.get(zero, [])
    index = {m: k for k, m in enumerate(W0)}
    rows = []
    for x in table.positive_even + table.z_indices:
        target = tuple(-c for c in table.weights[x])
        gx = alg.gen(x)
        for m in monos.get(target, []):
            prod = Element(alg, alg.normal_form({m: 1})) * gx
            if prod:
                rows.append(_vector(index, prod.terms, len(W0)))
    ideal = alg.ideal.space(zero) if mode == QUOTIENT else gf.Subspace.zero(len(W0), p)
    ell = gf.Subspace.span(np.array(rows).reshape(-1, len(W0)), len(W0), p) + ideal
    pure_h = [index[m] for m in W0 if alg.is_pure_h(m)]
    uh = gf.Subspace.coordinate(pure_h, len(W0), p)
    total = ell + uh
    return {
        "mode": mode,
        "dim_ubar_T": len(W0) - ideal.dim,
        "dim_uh": uh.dim,
        "dim_l": ell.dim - ideal.dim,
        "intersection": uh.dim + ell.dim - total.dim,
        "spans": total.dim == len(W0),
    }
