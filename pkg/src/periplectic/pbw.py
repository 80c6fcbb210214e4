"""Restricted enveloping superalgebra u(g) of p(n) and its truncation.

Elements are sparse linear combinations of PBW monomials.  A monomial is a
tuple of exponents, one slot per basis vector of g in the algebra's
generator order (by default the global basis order: y's, e~_ji, h's,
e~_ij, z's).  Odd exponents are 0/1 and even exponents are < p.

Products are normal-ordered by left multiplication with single generators.
For ``g * m`` with m = x * m' and x the leading generator of m:

    g x m' = (-1)^{|g||x|} x (g m') + [g, x] m'

together with the reductions x^2 = [x, x]/2 for odd x, e~_ij^p = 0 and
h_i^p = h_i.  Each ``(g, m)`` result is memoised.

Three modes share one monomial engine:

* ``full``: u(g) itself.
* ``truncated``: monomials with more than d = n(n-1)/2 z-factors are
  dropped.  Their span J is a left ideal of u(g), so truncated left
  multiplication agrees with full multiplication followed by truncation.
  J is not a right ideal (right multiplication by y lowers the z-length),
  so this product is not associative; it is kept as a spanning model.
* ``quotient``: the quotient of u(g) by the two-sided ideal I generated by
  products of d+1 z's.  I = J * u(g_-1) (J is stable under right
  multiplication by g_0 and g_1), so the truncated monomials span the
  quotient and elements are kept in normal form modulo the image of I,
  one weight space at a time.  This product is associative.
"""

from __future__ import annotations

import sys
from collections.abc import Iterable, Iterator
from itertools import combinations, product

import numpy as np

from . import gf
from .hpoly import HPoly
from .structure import EVEN, StructureTable

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

FULL, TRUNCATED, QUOTIENT = "full", "truncated", "quotient"

# cap on the number of monomials of J enumerated to build the ideal
IDEAL_LIMIT = 400_000


class SizeLimitExceeded(RuntimeError):
    pass


class PBWAlgebra:
    """u(g) (``mode="full"``), its z-length truncation, or the quotient by I."""

    def __init__(self, table: StructureTable, mode: str = FULL, order: list[int] | None = None):
        if mode not in (FULL, TRUNCATED, QUOTIENT):
            raise ValueError(f"unknown mode {mode!r}")
        self.table = table
        self.n, self.p, self.d = table.n, table.p, table.d
        self.mode = mode
        self.order = list(order) if order is not None else list(range(table.dim))
        if sorted(self.order) != list(range(table.dim)):
            raise ValueError("order must be a permutation of the basis")
        if mode != FULL and self.order != list(range(table.dim)):
            raise ValueError(f"{mode} mode requires the canonical generator order")
        self.size = table.dim
        self.pos = {g: k for k, g in enumerate(self.order)}
        self.odd_pos = frozenset(self.pos[g] for g in range(table.dim) if table.parity[g])
        self.z_pos = tuple(self.pos[g] for g in table.z_indices)
        self.y_pos = tuple(self.pos[g] for g in table.y_indices)
        self.h_pos = tuple(self.pos[g] for g in table.h_indices)
        self.f_pos = tuple(self.pos[g] for g in table.negative_even)
        self.e_pos = tuple(self.pos[g] for g in table.positive_even)
        self.half = gf.inv(2, self.p)
        self.one_mono = (0,) * self.size
        self._lmul_memo: dict = {}
        self._mul_memo: dict = {}
        self._ideal: IdealReducer | None = None

    def __repr__(self):
        return f"PBWAlgebra(n={self.n}, p={self.p}, mode={self.mode})"

    # ----- monomials -------------------------------------------------------

    def generator_mono(self, g: int) -> tuple[int, ...]:
        m = [0] * self.size
        m[self.pos[g]] = 1
        return tuple(m)

    def z_length(self, m) -> int:
        return sum(m[k] for k in self.z_pos)

    def y_length(self, m) -> int:
        return sum(m[k] for k in self.y_pos)

    def z_grade(self, m) -> int:
        return self.z_length(m) - self.y_length(m)

    def parity_of(self, m) -> int:
        return sum(m[k] for k in self.odd_pos) % 2

    def weight(self, m) -> tuple[int, ...]:
        w = [0] * self.n
        for k, e in enumerate(m):
            if e:
                for i, x in enumerate(self.table.weights[self.order[k]]):
                    w[i] += e * x
        return tuple(w)

    def is_pure_h(self, m) -> bool:
        hs = set(self.h_pos)
        return all(e == 0 or k in hs for k, e in enumerate(m))

    def h_exponents(self, m) -> tuple[int, ...]:
        return tuple(m[k] for k in self.h_pos)

    def valid(self, m) -> bool:
        if len(m) != self.size:
            return False
        for k, e in enumerate(m):
            top = 1 if k in self.odd_pos else self.p - 1
            if not 0 <= e <= top:
                return False
        return self.mode == FULL or self.z_length(m) <= self.d

    def word(self, m) -> list[int]:
        """Generators of ``m`` left to right, with repetition."""
        out = []
        for k, e in enumerate(m):
            out.extend([self.order[k]] * e)
        return out

    def monomials(self, z_lengths: Iterable[int] | None = None) -> Iterator[tuple[int, ...]]:
        """Canonical monomials in lexicographic exponent order.

        ``z_lengths`` restricts the number of z-factors; by default every
        length allowed by the mode.
        """
        if z_lengths is None:
            nz = len(self.z_pos)
            z_lengths = range(nz + 1 if self.mode == FULL else self.d + 1)
        allowed = frozenset(z_lengths)
        ranges = [range(2) if k in self.odd_pos else range(self.p) for k in range(self.size)]
        zset = set(self.z_pos)
        if sorted(self.z_pos) == list(range(self.size - len(self.z_pos), self.size)):
            head = [r for k, r in enumerate(ranges) if k not in zset]
            tails = [t for t in product(range(2), repeat=len(self.z_pos)) if sum(t) in allowed]
            for m in product(*head):
                for t in tails:
                    yield m + t
            return
        for m in product(*ranges):
            if self.z_length(m) in allowed:
                yield m

    def count_monomials(self) -> int:
        from math import comb
        t = self.table
        nz = len(t.z_indices)
        even = self.p ** len(t.even_indices)
        zs = sum(comb(nz, k) for k in range(nz + 1 if self.mode == FULL else self.d + 1))
        return 2 ** len(t.y_indices) * even * zs

    # ----- multiplication --------------------------------------------------

    def _truncate(self, terms: dict) -> dict:
        if self.mode == FULL:
            return terms
        return {m: c for m, c in terms.items() if self.z_length(m) <= self.d}

    def lmul(self, g: int, m: tuple[int, ...]) -> dict:
        """Normal form of ``g * m`` for a basis vector g and canonical monomial m."""
        key = (g, m)
        hit = self._lmul_memo.get(key)
        if hit is not None:
            return hit
        p = self.p
        gp = self.pos[g]
        lead = next((k for k, e in enumerate(m) if e), None)
        res: dict = {}
        if lead is None or gp < lead:
            mm = list(m)
            mm[gp] = 1
            res = self._truncate({tuple(mm): 1})
        elif gp == lead:
            rest = list(m)
            rest[gp] -= 1
            rest = tuple(rest)
            if gp in self.odd_pos:
                # x^2 = [x, x] / 2
                for b, c in self.table.bracket_table[g][g]:
                    _axpy(res, self.lmul(b, rest), c * self.half, p)
            elif m[gp] + 1 < p:
                mm = list(m)
                mm[gp] += 1
                res = self._truncate({tuple(mm): 1})
            else:
                # x^p = x^[p]; strip the remaining x^(p-2) from rest as well
                free = list(m)
                free[gp] = 0
                free = tuple(free)
                for b, c in self.table.p_power[g]:
                    _axpy(res, self.lmul(b, free), c, p)
        else:
            x = self.order[lead]
            rest = list(m)
            rest[lead] -= 1
            rest = tuple(rest)
            sign = -1 if (gp in self.odd_pos and lead in self.odd_pos) else 1
            for t, c in self.lmul(g, rest).items():
                _axpy(res, self.lmul(x, t), sign * c, p)
            for b, c in self.table.bracket_table[g][x]:
                _axpy(res, self.lmul(b, rest), c, p)
        res = {k: v for k, v in res.items() if v}
        self._lmul_memo[key] = res
        return res

    def mono_mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> dict:
        key = (a, b)
        hit = self._mul_memo.get(key)
        if hit is not None:
            return hit
        last_a = max((k for k, e in enumerate(a) if e), default=-1)
        first_b = next((k for k, e in enumerate(b) if e), self.size)
        if last_a < first_b:
            res = self._truncate({tuple(x + y for x, y in zip(a, b)): 1})
        else:
            cur = {b: 1}
            for g in reversed(self.word(a)):
                nxt: dict = {}
                for t, c in cur.items():
                    _axpy(nxt, self.lmul(g, t), c, self.p)
                cur = {k: v for k, v in nxt.items() if v}
            res = cur
        self._mul_memo[key] = res
        return res

    # ----- element construction ---------------------------------------------

    @property
    def ideal(self) -> IdealReducer:
        """Reduction modulo I (quotient mode only); built on first use."""
        if self.mode != QUOTIENT:
            raise ValueError("the ideal reducer belongs to quotient mode")
        if self._ideal is None:
            self._ideal = IdealReducer(self)
        return self._ideal

    def normal_form(self, terms: dict) -> dict:
        if self.mode != QUOTIENT:
            return terms
        return self.ideal.reduce(terms)

    def element(self, terms: dict | None = None) -> Element:
        terms = {tuple(m): c % self.p for m, c in (terms or {}).items()}
        terms = {m: c for m, c in terms.items() if c}
        for m in terms:
            if not self.valid(m):
                raise ValueError(f"monomial {m} is not canonical in {self.mode} mode")
        return Element(self, self.normal_form(terms))

    def one(self) -> Element:
        return Element(self, {self.one_mono: 1})

    def zero(self) -> Element:
        return Element(self, {})

    def scalar(self, c: int) -> Element:
        return self.element({self.one_mono: c})

    def gen(self, g: int) -> Element:
        return Element(self, self.normal_form(self._truncate({self.generator_mono(g): 1})))

    def basis_element(self, kind: str, i: int, j: int | None = None) -> Element:
        return self.gen(self.table.idx(kind, i, j))

    def from_hpoly(self, f: HPoly) -> Element:
        terms = {}
        for e, c in f.coeffs.items():
            m = [0] * self.size
            for k, x in zip(self.h_pos, e):
                m[k] = x
            terms[tuple(m)] = c
        return self.element(terms)

    def product(self, gens: Iterable[int]) -> Element:
        out = self.one()
        for g in gens:
            out = out * self.gen(g)
        return out

    def parse(self, text: str) -> Element:
        from .grammar import parse_element
        return parse_element(self, text)

    def format(self, u: Element) -> str:
        from .grammar import format_element
        return format_element(u)

    # ----- named elements -----------------------------------------------------

    def Y(self) -> Element:
        """Product of all y_ij, i < j, in lexicographic order."""
        return self.product(self.table.y_indices)

    def Zbar(self) -> Element:
        """Product of all z_ij, i < j, in lexicographic order."""
        t = self.table
        return self.product([g for g in t.z_indices if t.basis[g].i < t.basis[g].j])


class IdealReducer:
    """The image of I in the span of truncated monomials, split by weight.

    Spanned by the truncations of ``m * y^S`` for monomials m with more
    than d z-factors and subsets S of the y's.  Vectors are reduced against
    an echelon basis per weight, which gives a normal form in the quotient.
    """

    def __init__(self, alg: PBWAlgebra):
        t = alg.table
        from math import comb
        nz = len(t.z_indices)
        count = (2 ** len(t.y_indices) * alg.p ** len(t.even_indices)
                 * sum(comb(nz, k) for k in range(t.d + 1, nz + 1)))
        if count > IDEAL_LIMIT:
            raise SizeLimitExceeded(
                f"ideal needs {count} generating monomials (limit {IDEAL_LIMIT})")
        self.alg = alg
        self.p = alg.p
        full = PBWAlgebra(t, FULL)
        self.spaces: dict[tuple, gf.Subspace] = {}
        self.monos: dict[tuple, list] = {}
        # per-algebra linear maps derived from the reducer (see center.py)
        self.cache: dict = {}
        self.index: dict[tuple, dict] = {}
        for m in alg.monomials():
            self.monos.setdefault(alg.weight(m), []).append(m)
        for w, ms in self.monos.items():
            self.index[w] = {m: k for k, m in enumerate(ms)}
        ysubsets = [c for k in range(1, len(t.y_indices) + 1)
                    for c in combinations(t.y_indices, k)]
        ymonos = [full.product(c) for c in ysubsets]
        rows: dict[tuple, list] = {}
        for m in full.monomials(range(t.d + 1, nz + 1)):
            for ym in ymonos:
                (ymono,) = ym.terms
                prod = alg._truncate(full.mono_mul(m, ymono))
                if prod:
                    w = alg.weight(next(iter(prod)))
                    rows.setdefault(w, []).append(self._vector(w, prod))
        for w, vs in rows.items():
            self.spaces[w] = gf.Subspace.span(np.array(vs), len(self.monos[w]), self.p)

    def _vector(self, w, terms) -> np.ndarray:
        v = np.zeros(len(self.monos[w]), dtype=np.int64)
        ix = self.index[w]
        for m, c in terms.items():
            v[ix[m]] = c
        return v

    def space(self, w) -> gf.Subspace:
        w = tuple(w)
        if w in self.spaces:
            return self.spaces[w]
        return gf.Subspace.zero(len(self.monos.get(w, ())), self.p)

    def dim(self) -> int:
        return sum(s.dim for s in self.spaces.values())

    def quotient_dim(self, w=None) -> int:
        if w is None:
            return sum(len(ms) for ms in self.monos.values()) - self.dim()
        return len(self.monos.get(tuple(w), ())) - self.space(w).dim

    def elements(self, w) -> list[dict]:
        """Echelon basis of the ideal image at weight w, as term dicts."""
        ms = self.monos.get(tuple(w), [])
        return [{ms[k]: int(c) for k, c in enumerate(row) if c} for row in self.space(w).basis]

    def reduce(self, terms: dict) -> dict:
        groups: dict[tuple, dict] = {}
        for m, c in terms.items():
            groups.setdefault(self.alg.weight(m), {})[m] = c
        out = {}
        for w, part in groups.items():
            sp = self.spaces.get(w)
            if sp is None or not sp.dim:
                out.update(part)
                continue
            r = sp.reduce(self._vector(w, part))
            ms = self.monos[w]
            for k in np.nonzero(r)[0]:
                out[ms[k]] = int(r[k])
        return out

    def contains(self, terms: dict) -> bool:
        return not self.reduce(terms)


def _axpy(acc: dict, terms: dict, c: int, p: int) -> None:
    if not c % p:
        return
    for m, v in terms.items():
        acc[m] = (acc.get(m, 0) + c * v) % p


class Element:
    """Immutable sparse F_p-combination of canonical monomials."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: PBWAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def _coerce(self, other) -> Element:
        if isinstance(other, Element):
            if other.alg is not self.alg:
                if (other.alg.mode != self.alg.mode or other.alg.table is not self.alg.table
                        or other.alg.order != self.alg.order):
                    raise ValueError("elements live in different algebras")
            return other
        if isinstance(other, int):
            return self.alg.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        p = self.alg.p
        for m, c in other.terms.items():
            out[m] = (out.get(m, 0) + c) % p
        return Element(self.alg, {m: c for m, c in out.items() if c})

    __radd__ = __add__

    def __neg__(self):
        p = self.alg.p
        return Element(self.alg, {m: (-c) % p for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            p = self.alg.p
            return Element(self.alg, {m: c * other % p for m, c in self.terms.items()
                                      if c * other % p})
        other = self._coerce(other)
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.alg.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return self.alg.format(self)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def parity(self) -> int | None:
        """0 or 1 for homogeneous elements, None when mixed (0 for zero)."""
        ps = {self.alg.parity_of(m) for m in self.terms}
        if not ps:
            return EVEN
        return ps.pop() if len(ps) == 1 else None

    def parity_components(self) -> dict[int, Element]:
        out: dict[int, dict] = {}
        for m, c in self.terms.items():
            out.setdefault(self.alg.parity_of(m), {})[m] = c
        return {k: Element(self.alg, v) for k, v in out.items()}

    def coefficient(self, m) -> int:
        return self.terms.get(tuple(m), 0)


def multiply(a: Element, b: Element) -> Element:
    """Normal-ordered product; raises on mode mismatch."""
    if a.alg.mode != b.alg.mode:
        raise ValueError(f"mode mismatch: {a.alg.mode} vs {b.alg.mode}")
    alg = a.alg
    out: dict = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            _axpy(out, alg.mono_mul(ma, mb), ca * cb, alg.p)
    return Element(alg, alg.normal_form({m: c for m, c in out.items() if c}))


def random_monomial(alg: PBWAlgebra, rng, max_factors: int = 4) -> tuple[int, ...]:
    """A canonical monomial with a few random nonzero exponents."""
    while True:
        m = [0] * alg.size
        for _ in range(rng.randint(0, max_factors)):
            k = rng.randrange(alg.size)
            m[k] = 1 if k in alg.odd_pos else rng.randrange(alg.p)
        if alg.valid(tuple(m)):
            return tuple(m)


def random_element(alg: PBWAlgebra, rng, terms: int = 3) -> Element:
    return alg.element({random_monomial(alg, rng): rng.randrange(1, alg.p)
                        for _ in range(rng.randint(1, terms))})


def random_homogeneous(alg: PBWAlgebra, rng, terms: int = 3) -> Element:
    """Random element whose monomials all share one z-grade."""
    first = random_monomial(alg, rng)
    grade = alg.z_grade(first)
    out = {first: rng.randrange(1, alg.p)}
    for _ in range(50 * terms):
        if len(out) >= terms:
            break
        m = random_monomial(alg, rng)
        if alg.z_grade(m) == grade:
            out[m] = rng.randrange(1, alg.p)
    return alg.element(out)


def associativity_failures(alg: PBWAlgebra, rng, trials: int) -> list[tuple[str, str, str]]:
    bad = []
    for _ in range(trials):
        a, b, c = (random_element(alg, rng) for _ in range(3))
        if (a * b) * c != a * (b * c):
            bad.append((repr(a), repr(b), repr(c)))
    return bad


def grading_failures(alg: PBWAlgebra, rng, trials: int) -> list[tuple[str, str]]:
    """Pairs of z-homogeneous elements whose product is not homogeneous of the summed grade."""
    bad = []
    for _ in range(trials):
        a, b = random_homogeneous(alg, rng), random_homogeneous(alg, rng)
        ga = {alg.z_grade(m) for m in a.terms}
        gb = {alg.z_grade(m) for m in b.terms}
        prod = a * b
        expect = {x + y for x in ga for y in gb}
        if len(expect) != 1 or any(alg.z_grade(m) not in expect for m in prod.terms):
            bad.append((repr(a), repr(b)))
    return bad


def z_grade_decompose(u: Element) -> dict[int, Element]:
    out: dict[int, dict] = {}
    for m, c in u.terms.items():
        out.setdefault(u.alg.z_grade(m), {})[m] = c
    return {k: Element(u.alg, v) for k, v in sorted(out.items())}


def ideal_I_generators(alg: PBWAlgebra) -> list[Element]:
    """Products of d+1 distinct z's: a spanning set of the wedge power generating I."""
    if alg.mode != FULL:
        raise ValueError("the generators of I are taken in u(g)")
    return [alg.product(c) for c in combinations(alg.table.z_indices, alg.d + 1)]


def ideal_closure_violations(alg: PBWAlgebra) -> list[tuple[str, str]]:
    """Check that the ideal image is two-sided: g*v and v*g vanish in the
    quotient for every generator g and every echelon vector v.  Together with
    associativity of u(g) this makes the quotient product associative."""
    if alg.mode != QUOTIENT:
        raise ValueError("closure is checked in quotient mode")
    red = alg.ideal
    trunc = PBWAlgebra(alg.table, TRUNCATED)
    bad = []
    for w in sorted(red.spaces):
        for v in red.elements(w):
            e = Element(trunc, v)
            for g in range(alg.table.dim):
                gx = trunc.gen(g)
                for side, prod in (("left", gx * e), ("right", e * gx)):
                    if red.reduce(prod.terms):
                        bad.append((side, alg.table.basis[g].label))
    return bad


def weight_zero_monomials(alg: PBWAlgebra) -> list[tuple[int, ...]]:
    """Canonical monomials whose integral weight is exactly zero (spanning the T-invariants)."""
    zero = (0,) * alg.n
    return [m for m in alg.monomials() if alg.weight(m) == zero]


t_weight_zero_basis = weight_zero_monomials


def hc_project(u: Element) -> HPoly:
    """Harish-Chandra projection: keep the pure-h terms of a weight-zero element."""
    alg = u.alg
    zero = (0,) * alg.n
    out = {}
    for m, c in u.terms.items():
        if alg.weight(m) != zero:
            raise ValueError(f"term {m} has nonzero weight {alg.weight(m)}")
        if alg.is_pure_h(m):
            out[alg.h_exponents(m)] = c
    return HPoly(alg.n, alg.p, out)


def super_commutator(x: int, u: Element) -> Element:
    """[x, u] = x u - (-1)^{|x||u|} u x, taken on each parity component of u."""
    alg = u.alg
    gx = alg.gen(x)
    out = alg.zero()
    for par, comp in u.parity_components().items():
        sign = -1 if alg.table.parity[x] and par else 1
        out = out + gx * comp - (comp * gx) * sign
    return out


def element_super_commutator(a: Element, b: Element) -> Element:
    out = a.alg.zero()
    for pa, ca in a.parity_components().items():
        for pb, cb in b.parity_components().items():
            sign = -1 if pa and pb else 1
            out = out + ca * cb - (cb * ca) * sign
    return out


def evaluate_h(f: HPoly, mu) -> int:
    return f(mu)
