"""Weights in F_p^n, the Weyl group S_n with its dot action, and the
atypicality polynomials Theta_ij, Theta and delta.

A weight is a tuple of residues ``(mu_1, ..., mu_n)``.  A Weyl element is a
permutation ``w`` of ``range(n)`` stored as the tuple of images; it acts on
coordinates by ``(w x)_{w(k)} = x_k``.  The dot action is
``w . mu = w(mu + rho) - rho`` with ``rho = (n-1, ..., 1, 0)``.
"""

from __future__ import annotations

from collections import deque
from functools import reduce
from itertools import permutations, product

import numpy as np

from . import gf
from .hpoly import HPoly, all_exponents, exp_from_index

Weight = tuple


# ----- weights and rho ---------------------------------------------------------

def all_weights(n: int, p: int) -> list[Weight]:
    return [tuple(w) for w in product(range(p), repeat=n)]


def rho(n: int, p: int) -> Weight:
    return tuple((n - 1 - k) % p for k in range(n))


def parse_weight(text: str, n: int, p: int) -> Weight:
    parts = [s for s in text.replace(" ", "").split(",") if s]
    if len(parts) != n:
        raise ValueError(f"weight {text!r} needs {n} coordinates")
    return tuple(int(s) % p for s in parts)


def format_weight(mu) -> str:
    return ",".join(str(int(x)) for x in mu)


# ----- Weyl group -----------------------------------------------------------------

def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def transposition(n: int, i: int, j: int) -> tuple[int, ...]:
    """The reflection s_{ij} swapping coordinates i and j (0-based)."""
    w = list(range(n))
    w[i], w[j] = w[j], w[i]
    return tuple(w)


def simple_reflections(n: int) -> list[tuple[int, ...]]:
    return [transposition(n, k, k + 1) for k in range(n - 1)]


def compose(a, b) -> tuple[int, ...]:
    """``a * b``: apply b first."""
    return tuple(a[b[k]] for k in range(len(a)))


def inverse(w) -> tuple[int, ...]:
    out = [0] * len(w)
    for k, x in enumerate(w):
        out[x] = k
    return tuple(out)


def weyl_group(n: int) -> list[tuple[int, ...]]:
    return [tuple(w) for w in permutations(range(n))]


def act(w, x, p: int) -> Weight:
    out = [0] * len(x)
    for k, v in enumerate(x):
        out[w[k]] = v % p
    return tuple(out)


def dot(w, mu, p: int, shift=None) -> Weight:
    """``w(mu + rho) - rho``; ``shift`` replaces rho (the result does not depend on it
    as long as the shift differs from rho by a W-fixed vector)."""
    r = shift if shift is not None else rho(len(mu), p)
    moved = act(w, [m + s for m, s in zip(mu, r)], p)
    return tuple((m - s) % p for m, s in zip(moved, r))


# ----- Theta -------------------------------------------------------------------------

def theta_ij(i: int, j: int, mu, p: int) -> int:
    """``mu_i - mu_j + j - i - 1`` with 1-based i, j."""
    return (mu[i - 1] - mu[j - 1] + j - i - 1) % p


def theta(mu, p: int) -> int:
    n = len(mu)
    out = 1
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                out = out * theta_ij(i, j, mu, p) % p
    return out


def delta(mu, p: int) -> int:
    n = len(mu)
    out = 1
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * theta_ij(i, j, mu, p) % p
    return out


def is_typical(mu, p: int) -> bool:
    return theta(mu, p) != 0


def atypical_wall_members(i: int, j: int, n: int, p: int) -> set[Weight]:
    """The wall s_ij = {mu : Theta_ij(mu) = 0}."""
    return {mu for mu in all_weights(n, p) if theta_ij(i, j, mu, p) == 0}


def atypical_set(n: int, p: int) -> set[Weight]:
    out: set = set()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                out |= atypical_wall_members(i, j, n, p)
    return out


# ----- linkage -------------------------------------------------------------------------

def linkage_class(mu, p: int) -> frozenset:
    """Dot-orbit of mu, by breadth-first closure under simple reflections."""
    mu = tuple(x % p for x in mu)
    gens = simple_reflections(len(mu))
    seen = {mu}
    todo = deque([mu])
    while todo:
        cur = todo.popleft()
        for s in gens:
            nxt = dot(s, cur, p)
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return frozenset(seen)


def linked(mu, nu, p: int) -> bool:
    return tuple(x % p for x in nu) in linkage_class(mu, p)


def orbits(n: int, p: int) -> list[list[Weight]]:
    """Dot-orbits of F_p^n, each sorted, listed by smallest member."""
    done: set = set()
    out = []
    for mu in all_weights(n, p):
        if mu not in done:
            cls = sorted(linkage_class(mu, p))
            done.update(cls)
            out.append(cls)
    return out


def orbit_ids(n: int, p: int) -> dict[Weight, int]:
    return {mu: k for k, cls in enumerate(orbits(n, p)) for mu in cls}


# ----- polynomials in u(h) -----------------------------------------------------------

def theta_ij_poly(i: int, j: int, n: int, p: int) -> HPoly:
    coeffs = [0] * n
    coeffs[i - 1] += 1
    coeffs[j - 1] -= 1
    return HPoly.linear(n, p, coeffs, j - i - 1)


def theta_poly(n: int, p: int) -> HPoly:
    factors = [theta_ij_poly(i, j, n, p)
               for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    return reduce(lambda a, b: a * b, factors, HPoly.constant(n, p, 1))


def delta_poly(n: int, p: int) -> HPoly:
    factors = [theta_ij_poly(i, j, n, p)
               for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return reduce(lambda a, b: a * b, factors, HPoly.constant(n, p, 1))


def dot_action_on_uh(w, f: HPoly) -> HPoly:
    """``(w . f)(lam) = f(w^-1 . lam)``, by substituting
    ``h_k -> h_{w(k)} + rho_{w(k)} - rho_k``."""
    n, p = f.n, f.p
    r = rho(n, p)
    images = []
    for k in range(n):
        c = [0] * n
        c[w[k]] = 1
        images.append(HPoly.linear(n, p, c, r[w[k]] - r[k]))
    return f.substitute(images)


def dot_action_matrix(w, n: int, p: int) -> np.ndarray:
    size = p ** n
    m = np.zeros((size, size), dtype=np.int64)
    for col in range(size):
        img = dot_action_on_uh(w, HPoly(n, p, {exp_from_index(col, n, p): 1}))
        m[:, col] = img.to_vector()
    return m


def invariants_uh(n: int, p: int) -> gf.Subspace:
    """u(h)^{W.}: kernel of the stacked maps f -> s.f - f over simple reflections."""
    size = p ** n
    eye = np.eye(size, dtype=np.int64)
    blocks = [(dot_action_matrix(s, n, p) - eye) % p for s in simple_reflections(n)]
    if not blocks:
        return gf.Subspace.full(size, p)
    return gf.kernel(np.vstack(blocks), p)


def hpoly_basis(n: int, p: int) -> list[tuple[int, ...]]:
    return list(all_exponents(n, p))
