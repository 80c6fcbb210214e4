"""Dense linear algebra over a prime field F_p.

Matrices are numpy ``int64`` arrays with entries in ``[0, p)``.  Vectors act
as columns (``A @ v``); subspaces are stored by a basis of row vectors in
reduced row-echelon form, so two subspaces are equal exactly when their
bases are equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def inv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(a, p - 2, p)


def as_matrix(m, p: int) -> np.ndarray:
    a = np.array(m, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
    return a % p


def rref(m, p: int) -> tuple[np.ndarray, int]:
    """Reduced row-echelon form of ``m`` over F_p and its rank."""
    r, pivots = _rref(as_matrix(m, p), p)
    return r, len(pivots)


def _rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    a = a.copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * inv(int(a[r, c]), p)) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of F_p^ambient given by an RREF basis of row vectors."""

    basis: np.ndarray
    ambient: int
    p: int
    pivots: tuple[int, ...] = field(default=())

    @classmethod
    def span(cls, vectors, ambient: int, p: int) -> Subspace:
        a = np.asarray(vectors, dtype=np.int64).reshape(-1, ambient) % p
        r, pivots = _rref(a, p)
        return cls(r[: len(pivots)], ambient, p, tuple(pivots))

    @classmethod
    def zero(cls, ambient: int, p: int) -> Subspace:
        return cls(np.zeros((0, ambient), dtype=np.int64), ambient, p, ())

    @classmethod
    def full(cls, ambient: int, p: int) -> Subspace:
        return cls(np.eye(ambient, dtype=np.int64), ambient, p, tuple(range(ambient)))

    @classmethod
    def coordinate(cls, indices, ambient: int, p: int) -> Subspace:
        idx = sorted(set(indices))
        b = np.zeros((len(idx), ambient), dtype=np.int64)
        b[np.arange(len(idx)), idx] = 1
        return cls(b, ambient, p, tuple(idx))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient == other.ambient and self.p == other.p
                and np.array_equal(self.basis, other.basis))

    def __hash__(self):
        return hash((self.ambient, self.p, self.basis.tobytes()))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, p={self.p})"

    def contains(self, v) -> bool:
        return not self.reduce(v).any()

    def reduce(self, v) -> np.ndarray:
        """Remainder of ``v`` after clearing the pivot coordinates."""
        w = np.asarray(v, dtype=np.int64) % self.p
        w = w.copy()
        for row, c in zip(self.basis, self.pivots):
            if w[c]:
                w = (w - w[c] * row) % self.p
        return w

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.basis)

    def annihilator(self) -> Subspace:
        """Row vectors c with c . v = 0 for every v in the subspace."""
        return kernel(self.basis if self.dim else
                      np.zeros((0, self.ambient), dtype=np.int64), self.p)

    def __add__(self, other: Subspace) -> Subspace:
        _check_ambient(self, other)
        return Subspace.span(np.vstack([self.basis, other.basis]), self.ambient, self.p)


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient != b.ambient or a.p != b.p:
        raise ValueError(f"ambient mismatch: {a.ambient} (p={a.p}) vs {b.ambient} (p={b.p})")


def kernel(m, p: int) -> Subspace:
    """Right kernel ``{v : m @ v = 0}``."""
    a = np.asarray(m, dtype=np.int64)
    cols = a.shape[1]
    if a.shape[0] == 0:
        return Subspace.full(cols, p)
    r, pivots = _rref(a % p, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for row, c in enumerate(pivots):
            basis[k, c] = (-r[row, f]) % p
    return Subspace.span(basis, cols, p)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """``a @ b mod p``, through float64 BLAS when the sums stay exact."""
    inner = a.shape[-1] if a.ndim else 1
    if inner * (p - 1) ** 2 < 2 ** 52:
        out = np.asarray(a, dtype=np.float64) @ np.asarray(b, dtype=np.float64)
        return (out % p).astype(np.int64)
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % p


def rank(m, p: int) -> int:
    return rref(m, p)[1]


def intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    conditions = np.vstack([a.annihilator().basis, b.annihilator().basis])
    return kernel(conditions, a.p)


def preimage(op: np.ndarray, target: Subspace) -> Subspace:
    """``{v : op @ v in target}``."""
    ann = target.annihilator().basis
    return kernel(ann @ op % target.p, target.p)


def _check_square(ops, n: int) -> None:
    for op in ops:
        if op.shape != (n, n):
            raise ValueError(f"operator of shape {op.shape} on ambient dimension {n}")


def largest_invariant_subspace(ops, within: Subspace) -> Subspace:
    """Largest ``N`` inside ``within`` with ``op(N)`` contained in ``N`` for all ops.

    Iterates ``N <- N cap op^-1(N)``; the dimension strictly drops until it
    stabilises, so at most ``within.dim + 1`` rounds run.
    """
    p = within.p
    ops = [np.asarray(o, dtype=np.int64) % p for o in ops]
    _check_square(ops, within.ambient)
    current = within
    while current.dim:
        ann = current.annihilator().basis
        if ann.shape[0] == 0:
            return current
        # v = c @ B lies in op^-1(N) iff ann @ op @ B^T @ c = 0
        blocks = [ann @ op % p @ current.basis.T % p for op in ops]
        if not blocks:
            return current
        coeffs = kernel(np.vstack(blocks), p)
        if coeffs.dim == current.dim:
            return current
        current = Subspace.span(coeffs.basis @ current.basis % p, within.ambient, p)
    return current


def spin(seeds, ops, ambient: int, p: int) -> Subspace:
    """Smallest subspace containing ``seeds`` and stable under every op."""
    ops = [np.asarray(o, dtype=np.int64) % p for o in ops]
    _check_square(ops, ambient)
    seeds = np.asarray(seeds, dtype=np.int64).reshape(-1, ambient) % p
    current = Subspace.span(seeds, ambient, p)
    fresh = current.basis
    while fresh.shape[0]:
        images = [fresh @ op.T % p for op in ops]
        if not images:
            break
        candidates = np.vstack(images)
        grown = Subspace.span(np.vstack([current.basis, candidates]), ambient, p)
        if grown.dim == current.dim:
            break
        # new directions only: reduce candidates against the old space
        reduced = [current.reduce(v) for v in candidates]
        fresh = Subspace.span([v for v in reduced if v.any()] or
                              np.zeros((0, ambient), dtype=np.int64), ambient, p).basis
        current = grown
    return current


def is_invariant(space: Subspace, op: np.ndarray) -> bool:
    return all(space.contains(op @ v % space.p) for v in space.basis)
