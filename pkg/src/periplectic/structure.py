"""The restricted Lie superalgebra p(n) over F_p.

Basis vectors are realised as 2n x 2n integer matrices

    e~_ij = e_ij - e_{j+n,i+n}                     (even, degree 0)
    y_ij  = e_{i+n,j} - e_{j+n,i},      i < j      (odd, degree -1)
    z_ij  = e_{i,j+n} + e_{j,i+n},      i < j      (odd, degree +1)
    z_ii  = e_{i,i+n}

and the structure constants are read off super-commutators of these
matrices.  Weights are the eigenvalues of ad h_k, recorded as integer
vectors: e~_ij has weight eps_i - eps_j, y_ij has -(eps_i + eps_j) and z_ij
has eps_i + eps_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

from . import gf

EVEN, ODD = 0, 1


@dataclass(frozen=True)
class BasisVector:
    kind: str  # "Y", "E" or "Z"; E(i, i) is h_i
    i: int
    j: int
    n: int

    @property
    def parity(self) -> int:
        return EVEN if self.kind == "E" else ODD

    @property
    def z_degree(self) -> int:
        return {"Y": -1, "E": 0, "Z": 1}[self.kind]

    @property
    def is_cartan(self) -> bool:
        return self.kind == "E" and self.i == self.j

    @property
    def weight(self) -> tuple[int, ...]:
        w = [0] * self.n
        i, j = self.i - 1, self.j - 1
        if self.kind == "E":
            w[i] += 1
            w[j] -= 1
        elif self.kind == "Y":
            w[i] -= 1
            w[j] -= 1
        else:
            w[i] += 1
            w[j] += 1
        return tuple(w)

    @property
    def label(self) -> str:
        if self.is_cartan:
            return f"h({self.i})"
        return f"{self.kind.lower()}({self.i},{self.j})"

    def __str__(self):
        return self.label

    def matrix(self) -> np.ndarray:
        n = self.n
        m = np.zeros((2 * n, 2 * n), dtype=np.int64)
        i, j = self.i - 1, self.j - 1
        if self.kind == "E":
            m[i, j] += 1
            m[j + n, i + n] -= 1
        elif self.kind == "Y":
            m[i + n, j] += 1
            m[j + n, i] -= 1
        elif i == j:
            m[i, i + n] = 1
        else:
            m[i, j + n] += 1
            m[j, i + n] += 1
        return m


def basis_vectors(n: int) -> list[BasisVector]:
    """Global basis order: y's, then e~_ji (i<j), h's, e~_ij (i<j), then z's."""
    pairs = list(combinations(range(1, n + 1), 2))
    out = [BasisVector("Y", i, j, n) for i, j in pairs]
    out += [BasisVector("E", j, i, n) for i, j in pairs]
    out += [BasisVector("E", i, i, n) for i in range(1, n + 1)]
    out += [BasisVector("E", i, j, n) for i, j in pairs]
    out += [BasisVector("Z", i, j, n) for i in range(1, n + 1) for j in range(i, n + 1)]
    return out


def _coordinates(m: np.ndarray, basis: list[BasisVector]) -> dict[int, int]:
    """Exact integer coordinates of a matrix of p(n) in the basis."""
    n = basis[0].n
    out = {}
    for k, b in enumerate(basis):
        i, j = b.i - 1, b.j - 1
        if b.kind == "E":
            c = m[i, j]
        elif b.kind == "Y":
            c = m[i + n, j]
        else:
            c = m[i, j + n]
        if c:
            out[k] = int(c)
    back = sum((c * basis[k].matrix() for k, c in out.items()),
               np.zeros_like(m))
    if not np.array_equal(back, m):
        raise ValueError("matrix does not lie in p(n)")
    return out


def super_commutator_matrix(a: np.ndarray, pa: int, b: np.ndarray, pb: int) -> np.ndarray:
    sign = -1 if pa and pb else 1
    return a @ b - sign * (b @ a)


class StructureTable:
    """Brackets and p-map of p(n) over F_p in the fixed basis order."""

    def __init__(self, n: int, p: int):
        if n < 2:
            raise ValueError(f"rank n must be at least 2, got {n}")
        if not gf.is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if p <= 3:
            raise ValueError(f"p must exceed 3, got {p}")
        self.n, self.p = n, p
        self.basis = basis_vectors(n)
        self.dim = len(self.basis)
        self.index = {(b.kind, b.i, b.j): k for k, b in enumerate(self.basis)}
        self.parity = [b.parity for b in self.basis]
        self.weights = [b.weight for b in self.basis]
        self.d = n * (n - 1) // 2
        mats = [b.matrix() for b in self.basis]
        self.integral_bracket: dict[tuple[int, int], dict[int, int]] = {}
        self.bracket_table: list[list[tuple[tuple[int, int], ...]]] = []
        for a in range(self.dim):
            row = []
            for b in range(self.dim):
                m = super_commutator_matrix(mats[a], self.parity[a], mats[b], self.parity[b])
                coords = _coordinates(m, self.basis)
                self.integral_bracket[a, b] = coords
                row.append(tuple(sorted((k, c % p) for k, c in coords.items() if c % p)))
            self.bracket_table.append(row)
        self.p_power: dict[int, tuple[tuple[int, int], ...]] = {}
        for k, b in enumerate(self.basis):
            if b.parity == EVEN:
                mp = np.linalg.matrix_power(mats[k], p)
                coords = _coordinates(mp, self.basis)
                self.p_power[k] = tuple(sorted((i, c % p) for i, c in coords.items() if c % p))

    def __repr__(self):
        return f"StructureTable(n={self.n}, p={self.p})"

    def idx(self, kind: str, i: int, j: int | None = None) -> int:
        """Index of a basis vector; ``idx("H", i)`` is h_i."""
        if kind.upper() == "H":
            return self.index["E", i, i]
        kind = kind.upper()
        if kind == "Z" and i > j:
            i, j = j, i
        return self.index[kind, i, j]

    def bracket(self, a: int, b: int) -> dict[int, int]:
        return dict(self.bracket_table[a][b])

    def of_kind(self, kind: str) -> list[int]:
        return [k for k, b in enumerate(self.basis) if b.kind == kind]

    @cached_property
    def y_indices(self) -> list[int]:
        return self.of_kind("Y")

    @cached_property
    def z_indices(self) -> list[int]:
        return self.of_kind("Z")

    @cached_property
    def h_indices(self) -> list[int]:
        return [k for k, b in enumerate(self.basis) if b.is_cartan]

    @cached_property
    def positive_even(self) -> list[int]:
        """Root vectors e~_ij with i < j (spanning n_0^+)."""
        return [k for k, b in enumerate(self.basis) if b.kind == "E" and b.i < b.j]

    @cached_property
    def negative_even(self) -> list[int]:
        return [k for k, b in enumerate(self.basis) if b.kind == "E" and b.i > b.j]

    @cached_property
    def even_indices(self) -> list[int]:
        return [k for k in range(self.dim) if self.parity[k] == EVEN]

    @cached_property
    def root_vectors_even(self) -> list[int]:
        return self.negative_even + self.positive_even

    def graded_dims(self) -> dict[int, int]:
        out = {-1: 0, 0: 0, 1: 0}
        for b in self.basis:
            out[b.z_degree] += 1
        return out

    def ad_matrix(self, x: int) -> np.ndarray:
        """Matrix of ad x on g (columns are images of basis vectors)."""
        m = np.zeros((self.dim, self.dim), dtype=np.int64)
        for b in range(self.dim):
            for k, c in self.bracket_table[x][b]:
                m[k, b] = c
        return m

    def element_matrix(self, coords: dict[int, int]) -> np.ndarray:
        return sum((c * self.basis[k].matrix() for k, c in coords.items()),
                   np.zeros((2 * self.n, 2 * self.n), dtype=np.int64))


def build_structure(n: int, p: int) -> StructureTable:
    return StructureTable(n, p)


def _lin_bracket(t: StructureTable, a: int, v: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for b, c in v.items():
        for k, d in t.bracket_table[a][b]:
            out[k] = (out.get(k, 0) + c * d) % t.p
    return {k: c for k, c in out.items() if c}


def _lin_bracket_left(t: StructureTable, v: dict[int, int], b: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for a, c in v.items():
        for k, d in t.bracket_table[a][b]:
            out[k] = (out.get(k, 0) + c * d) % t.p
    return {k: c for k, c in out.items() if c}


def _parity_of(t: StructureTable, v: dict[int, int]) -> int | None:
    ps = {t.parity[k] for k in v}
    return ps.pop() if len(ps) == 1 else None


def antisymmetry_violations(t: StructureTable) -> list[tuple[str, str]]:
    bad = []
    for a in range(t.dim):
        for b in range(t.dim):
            sign = 1 if t.parity[a] and t.parity[b] else -1
            lhs = t.bracket(a, b)
            rhs = {k: (sign * c) % t.p for k, c in t.bracket(b, a).items()}
            rhs = {k: c for k, c in rhs.items() if c}
            if lhs != rhs:
                bad.append((t.basis[a].label, t.basis[b].label))
    return bad


def jacobi_violations(t: StructureTable) -> list[tuple[str, str, str]]:
    """Triples failing [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]."""
    bad = []
    p = t.p
    for a in range(t.dim):
        for b in range(t.dim):
            ab = t.bracket(a, b)
            sign = -1 if t.parity[a] and t.parity[b] else 1
            for c in range(t.dim):
                lhs = _lin_bracket(t, a, t.bracket(b, c))
                r1 = _lin_bracket_left(t, ab, c)
                r2 = _lin_bracket(t, b, t.bracket(a, c))
                rhs = dict(r1)
                for k, v in r2.items():
                    rhs[k] = (rhs.get(k, 0) + sign * v) % p
                rhs = {k: v for k, v in rhs.items() if v}
                if lhs != rhs:
                    bad.append((t.basis[a].label, t.basis[b].label, t.basis[c].label))
    return bad


def grading_violations(t: StructureTable) -> list[tuple[str, str]]:
    bad = []
    for a in range(t.dim):
        for b in range(t.dim):
            deg = t.basis[a].z_degree + t.basis[b].z_degree
            for k in t.bracket(a, b):
                if t.basis[k].z_degree != deg:
                    bad.append((t.basis[a].label, t.basis[b].label))
                    break
    return bad


def weight_violations(t: StructureTable) -> list[tuple[str, str]]:
    """Brackets [a, b] must have weight wt(a) + wt(b)."""
    bad = []
    for a in range(t.dim):
        for b in range(t.dim):
            w = tuple(x + y for x, y in zip(t.weights[a], t.weights[b]))
            if any(t.weights[k] != w for k in t.bracket(a, b)):
                bad.append((t.basis[a].label, t.basis[b].label))
    return bad


def matrix_oracle_violations(t: StructureTable) -> list[tuple[str, str]]:
    """Compare table brackets, mapped back to matrices, with matrix super-commutators mod p."""
    bad = []
    mats = [b.matrix() for b in t.basis]
    for a in range(t.dim):
        for b in range(t.dim):
            direct = super_commutator_matrix(mats[a], t.parity[a], mats[b], t.parity[b]) % t.p
            via = t.element_matrix(t.bracket(a, b)) % t.p
            if not np.array_equal(direct, via):
                bad.append((t.basis[a].label, t.basis[b].label))
    return bad


def check_restrictedness(t: StructureTable) -> list[str]:
    """Even basis vectors x where (ad x)^p differs from ad(x^[p])."""
    bad = []
    p = t.p
    for x in t.even_indices:
        adx = t.ad_matrix(x)
        power = np.eye(t.dim, dtype=np.int64)
        for _ in range(p):
            power = power @ adx % p
        target = np.zeros_like(power)
        for k, c in t.p_power[x]:
            target = (target + c * t.ad_matrix(k)) % p
        if not np.array_equal(power, target):
            bad.append(t.basis[x].label)
    return bad


def roots_table(t: StructureTable) -> list[dict]:
    return [{"vector": b.label, "parity": "odd" if b.parity else "even",
             "degree": b.z_degree, "weight": list(b.weight)} for b in t.basis]
