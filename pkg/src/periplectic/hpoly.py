"""Elements of u(h): polynomials in h_1..h_n with h_i^p = h_i, over F_p."""

from __future__ import annotations

from itertools import product

import numpy as np


def _reduce_exp(e: int, p: int) -> int:
    # h^p = h, so any exponent e >= p folds to e - (p - 1)
    while e >= p:
        e -= p - 1
    return e


class HPoly:
    """Sparse map from h-exponent tuples (each < p) to F_p coefficients."""

    __slots__ = ("n", "p", "coeffs")

    def __init__(self, n: int, p: int, coeffs: dict | None = None):
        self.n, self.p = n, p
        clean = {}
        for e, c in (coeffs or {}).items():
            e = tuple(_reduce_exp(x, p) for x in e)
            clean[e] = (clean.get(e, 0) + c) % p
        self.coeffs = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, n: int, p: int, c: int) -> HPoly:
        return cls(n, p, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, p: int, i: int) -> HPoly:
        """h_i, with i counted from 1."""
        e = [0] * n
        e[i - 1] = 1
        return cls(n, p, {tuple(e): 1})

    @classmethod
    def linear(cls, n: int, p: int, coeffs, const: int = 0) -> HPoly:
        out = {(0,) * n: const}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            out[tuple(e)] = c
        return cls(n, p, out)

    def _new(self, coeffs):
        return HPoly(self.n, self.p, coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = HPoly.constant(self.n, self.p, other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = HPoly.constant(self.n, self.p, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self._new({e: c * other for e, c in self.coeffs.items()})
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(_reduce_exp(a + b, self.p) for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = HPoly.constant(self.n, self.p, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = HPoly.constant(self.n, self.p, other)
        if not isinstance(other, HPoly):
            return NotImplemented
        return (self.n, self.p, self.coeffs) == (other.n, other.p, other.coeffs)

    def __hash__(self):
        return hash((self.n, self.p, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, mu) -> int:
        return evaluate(self, mu)

    def __repr__(self):
        return f"HPoly({format_hpoly(self)})"

    def to_vector(self) -> np.ndarray:
        v = np.zeros(self.p ** self.n, dtype=np.int64)
        for e, c in self.coeffs.items():
            v[exp_index(e, self.p)] = c
        return v

    @classmethod
    def from_vector(cls, v, n: int, p: int) -> HPoly:
        return cls(n, p, {exp_from_index(k, n, p): int(c) for k, c in enumerate(v) if c})

    def substitute(self, images: list[HPoly]) -> HPoly:
        """Replace h_i by ``images[i]`` and re-reduce."""
        out = HPoly(self.n, self.p)
        for e, c in self.coeffs.items():
            term = HPoly.constant(self.n, self.p, c)
            for img, k in zip(images, e):
                if k:
                    term = term * img ** k
            out = out + term
        return out


def exp_index(e, p: int) -> int:
    k = 0
    for x in e:
        k = k * p + x
    return k


def exp_from_index(k: int, n: int, p: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        out.append(k % p)
        k //= p
    return tuple(reversed(out))


def all_exponents(n: int, p: int):
    return product(range(p), repeat=n)


def evaluate(f: HPoly, mu) -> int:
    """Substitute h_i -> mu_i in F_p."""
    p = f.p
    total = 0
    for e, c in f.coeffs.items():
        term = c
        for x, k in zip(mu, e):
            term = term * pow(int(x), k, p) % p
        total += term
    return total % p


def evaluation_matrix(n: int, p: int, weights=None) -> np.ndarray:
    """Rows indexed by weights, columns by monomials of u(h)."""
    weights = list(weights) if weights is not None else list(all_exponents(n, p))
    cols = list(all_exponents(n, p))
    m = np.zeros((len(weights), len(cols)), dtype=np.int64)
    for r, mu in enumerate(weights):
        for c, e in enumerate(cols):
            v = 1
            for x, k in zip(mu, e):
                v = v * pow(int(x), k, p) % p
            m[r, c] = v
    return m


def multiplication_matrix(f: HPoly) -> np.ndarray:
    """Matrix of g -> f*g on u(h) in the monomial basis."""
    n, p = f.n, f.p
    size = p ** n
    m = np.zeros((size, size), dtype=np.int64)
    for col, e in enumerate(all_exponents(n, p)):
        prod = f * HPoly(n, p, {e: 1})
        for e2, c in prod.coeffs.items():
            m[exp_index(e2, p), col] = c
    return m


def format_hpoly(f: HPoly) -> str:
    if not f.coeffs:
        return "0"
    parts = []
    for e in sorted(f.coeffs):
        c = f.coeffs[e]
        factors = []
        for i, k in enumerate(e, start=1):
            if k == 1:
                factors.append(f"h({i})")
            elif k:
                factors.append(f"h({i})^{k}")
        word = ".".join(factors)
        if not word:
            parts.append(str(c))
        elif c == 1:
            parts.append(word)
        else:
            parts.append(f"{c}*{word}")
    return " + ".join(parts)
