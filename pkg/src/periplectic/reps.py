"""Explicit matrix modules: simple restricted g_0-modules L(mu), Kac modules
K(M), baby Verma modules Z(mu), and tests on them (maximal vectors,
simplicity, g_1-fixed points).

Every module is given by one F_p matrix per basis vector of g, a parity
and an integral weight per module basis vector.  Actions are read off by
straightening ``g * (monomial)`` in u(g) and letting the leftover
parabolic part act on the inducing module.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np

from . import gf
from .pbw import FULL, Element, PBWAlgebra
from .structure import EVEN, StructureTable
from .weights import format_weight

KAC, BOREL = "kac", "borel"

# exhaustive maximal-vector enumeration runs while p^k stays below this
ENUMERATION_BOUND = 5_000
RANDOM_SAMPLES = 100


@dataclass
class ModuleRep:
    table: StructureTable
    dim: int
    action: dict[int, np.ndarray]
    grading: tuple[int, ...]
    t_weights: tuple[tuple[int, ...], ...]
    tag: str
    # index of the generating highest-weight vector, when there is one
    highest: int | None = None
    _word_cache: dict = field(default_factory=dict, repr=False)

    @property
    def p(self) -> int:
        return self.table.p

    def matrix(self, g: int) -> np.ndarray:
        a = self.action.get(g)
        if a is None:
            raise KeyError(f"{self.tag} has no action of {self.table.basis[g].label}")
        return a

    def word_matrix(self, word) -> np.ndarray:
        """Matrix of the product ``g_1 g_2 ... g_k`` (g_k acts first)."""
        word = tuple(word)
        hit = self._word_cache.get(word)
        if hit is not None:
            return hit
        if not word:
            out = np.eye(self.dim, dtype=np.int64)
        else:
            out = gf.matmul(self.matrix(word[0]), self.word_matrix(word[1:]), self.p)
        self._word_cache[word] = out
        return out

    def element_matrix(self, u: Element) -> np.ndarray:
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for m, c in u.terms.items():
            out = (out + c * self.word_matrix(u.alg.word(m))) % self.p
        return out

    def weight_mod_p(self, k: int) -> tuple[int, ...]:
        return tuple(x % self.p for x in self.t_weights[k])

    def weight_spaces(self) -> dict[tuple[int, ...], list[int]]:
        out: dict = {}
        for k in range(self.dim):
            out.setdefault(self.weight_mod_p(k), []).append(k)
        return out

    def unit(self, k: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[k] = 1
        return v

    def summary(self, matrices: bool = False) -> dict:
        out = {
            "tag": self.tag,
            "dim": self.dim,
            "grading": list(self.grading),
            "weights": [list(w) for w in self.t_weights],
        }
        if matrices:
            out["matrices"] = {self.table.basis[g].label: a.tolist()
                               for g, a in sorted(self.action.items())}
        return out


def _mu(mu, p: int) -> tuple[int, ...]:
    return tuple(int(x) % p for x in mu)


def _split(m, first: tuple[int, ...]):
    """Split a monomial into the exponents at positions ``first`` and the rest."""
    head = tuple(m[k] for k in first)
    rest = list(m)
    for k in first:
        rest[k] = 0
    return head, tuple(rest)


def _embed(size: int, positions, exps) -> tuple[int, ...]:
    m = [0] * size
    for k, e in zip(positions, exps):
        m[k] = e
    return tuple(m)


def _weight_of(alg: PBWAlgebra, m, base) -> tuple[int, ...]:
    w = alg.weight(m)
    return tuple(a + b for a, b in zip(w, base))


def _algebra(table: StructureTable, alg: PBWAlgebra | None) -> PBWAlgebra:
    if alg is None:
        return PBWAlgebra(table, FULL)
    if alg.mode != FULL or alg.table is not table or alg.order != list(range(table.dim)):
        raise ValueError("modules are built from u(g) in the canonical order")
    return alg


# ----- g_0-modules ---------------------------------------------------------------

def g0_baby_verma(table: StructureTable, mu, alg: PBWAlgebra | None = None) -> ModuleRep:
    """u(g_0) (x) over u(b_0) of F_mu, with basis the f-monomials (f acting freely)."""
    alg = _algebra(table, alg)
    p = table.p
    mu = _mu(mu, p)
    fpos = alg.f_pos
    monos = [_embed(alg.size, fpos, e) for e in product(range(p), repeat=len(fpos))]
    index = {m: k for k, m in enumerate(monos)}
    dim = len(monos)
    action = {}
    for g in table.even_indices:
        a = np.zeros((dim, dim), dtype=np.int64)
        for col, m in enumerate(monos):
            for t, c in alg.lmul(g, m).items():
                head, rest = _split(t, fpos)
                if any(rest[k] for k in alg.e_pos):
                    continue
                scalar = c
                for k, x in zip(alg.h_pos, alg.h_exponents(rest)):
                    scalar = scalar * pow(mu[alg.h_pos.index(k)], x, p) % p
                row = index[_embed(alg.size, fpos, head)]
                a[row, col] = (a[row, col] + scalar) % p
        action[g] = a
    weights = tuple(_weight_of(alg, m, mu) for m in monos)
    return ModuleRep(table, dim, action, (EVEN,) * dim, weights,
                     f"Z0({format_weight(mu)})", highest=index[alg.one_mono])


def quotient_module(M: ModuleRep, sub: gf.Subspace, tag: str) -> ModuleRep:
    """M / sub, with basis the non-pivot coordinates of ``sub``."""
    p = M.p
    keep = [k for k in range(M.dim) if k not in set(sub.pivots)]
    # row k of R is the remainder of e_k modulo sub
    R = np.eye(M.dim, dtype=np.int64)
    for row, c in zip(sub.basis, sub.pivots):
        R[c] = (R[c] - row) % p
    proj = R[:, keep].T.copy()
    action = {g: gf.matmul(proj, a[:, keep], p) for g, a in M.action.items()}
    highest = keep.index(M.highest) if M.highest in keep else None
    return ModuleRep(M.table, len(keep), action, tuple(M.grading[k] for k in keep),
                     tuple(M.t_weights[k] for k in keep), tag, highest=highest)


def simple_g0_module(table: StructureTable, mu, alg: PBWAlgebra | None = None) -> ModuleRep:
    """L(mu): the head of the g_0 baby Verma module.

    The action is graded by integral weight and the mu-weight space is the
    line through v_mu, so the maximal submodule is the largest invariant
    subspace of the coordinate complement of v_mu.
    """
    Z0 = g0_baby_verma(table, mu, alg)
    others = [k for k in range(Z0.dim) if k != Z0.highest]
    within = gf.Subspace.coordinate(others, Z0.dim, table.p)
    radical = gf.largest_invariant_subspace(list(Z0.action.values()), within)
    return quotient_module(Z0, radical, f"L({format_weight(_mu(mu, table.p))})")


def weight_line(table: StructureTable, mu) -> ModuleRep:
    """F_mu as a module over b_0 + g_1 (n_0^+ and g_1 act by 0)."""
    p = table.p
    mu = _mu(mu, p)
    action = {}
    for g in table.h_indices:
        action[g] = np.array([[mu[table.basis[g].i - 1]]], dtype=np.int64)
    for g in table.positive_even + table.z_indices:
        action[g] = np.zeros((1, 1), dtype=np.int64)
    return ModuleRep(table, 1, action, (EVEN,), (mu,), f"F({format_weight(mu)})", highest=0)


# ----- induction -------------------------------------------------------------------

def induce(M: ModuleRep, kind: str = KAC, alg: PBWAlgebra | None = None) -> ModuleRep:
    """Induce M from g_0 + g_1 (``kind="kac"``) or from b_0 + g_1 (``"borel"``).

    The induced space has basis (complement monomial, basis vector of M),
    where the complement is spanned by y-monomials (and f-monomials in the
    Borel case).  A generator acts by straightening g * (complement
    monomial) and applying the remaining factors to M; any factor of g_1
    left over kills M.
    """
    table = M.table
    alg = _algebra(table, alg)
    p = table.p
    for g in table.z_indices:
        if g in M.action and M.action[g].any():
            raise ValueError(f"g_1 does not annihilate {M.tag}")
    if kind == KAC:
        comp = tuple(alg.y_pos)
    elif kind == BOREL:
        comp = tuple(alg.y_pos) + tuple(alg.f_pos)
    else:
        raise ValueError(f"unknown induction {kind!r}")
    ranges = [range(2) if k in alg.odd_pos else range(p) for k in comp]
    heads = list(product(*ranges))
    monos = [_embed(alg.size, comp, h) for h in heads]
    index = {h: k for k, h in enumerate(heads)}
    z_pos = set(alg.z_pos)
    rest_cache: dict = {}

    def rest_matrix(rest):
        hit = rest_cache.get(rest)
        if hit is None:
            if any(rest[k] for k in z_pos):
                hit = 0
            else:
                hit = M.word_matrix(alg.word(rest))
            rest_cache[rest] = hit
        return hit

    d = M.dim
    dim = len(monos) * d
    action = {}
    for g in range(table.dim):
        a = np.zeros((dim, dim), dtype=np.int64)
        for col, m in enumerate(monos):
            for t, c in alg.lmul(g, m).items():
                head, rest = _split(t, comp)
                r = rest_matrix(rest)
                if isinstance(r, int):
                    continue
                row = index[head]
                blk = a[row * d:(row + 1) * d, col * d:(col + 1) * d]
                blk[:] = (blk + c * r) % p
        action[g] = a
    grading = tuple((sum(h[k] for k in range(len(alg.y_pos))) + M.grading[j]) % 2
                    for h in heads for j in range(d))
    weights = tuple(_weight_of(alg, m, M.t_weights[j]) for m in monos for j in range(d))
    if kind == KAC:
        tag = f"K({M.tag})"
    else:
        tag = "Z" + M.tag[1:] if M.tag.startswith("F(") else f"Ind({M.tag})"
    highest = M.highest if M.highest is not None else None
    return ModuleRep(table, dim, action, grading, weights, tag, highest=highest)


def kac_module(table: StructureTable, mu, alg: PBWAlgebra | None = None) -> ModuleRep:
    """K(L(mu))."""
    alg = _algebra(table, alg)
    return induce(simple_g0_module(table, mu, alg), KAC, alg)


def baby_verma(table: StructureTable, mu, alg: PBWAlgebra | None = None) -> ModuleRep:
    """Z(mu), induced from the weight line of b_0 + g_1."""
    return induce(weight_line(table, mu), BOREL, alg)


# ----- checks on modules -------------------------------------------------------------

def representation_violations(M: ModuleRep) -> list[str]:
    """Bracket law, restrictedness, parity of odd actions and the h-diagonal."""
    t, p = M.table, M.p
    keys = sorted(M.action)
    out = []
    zero = np.zeros((M.dim, M.dim), dtype=np.int64)
    for a in keys:
        for b in keys:
            coords = t.bracket_table[a][b]
            if any(k not in M.action for k, _ in coords):
                continue
            lhs = zero.copy()
            for k, c in coords:
                lhs = (lhs + c * M.action[k]) % p
            sign = -1 if t.parity[a] and t.parity[b] else 1
            ab = gf.matmul(M.action[a], M.action[b], p)
            ba = gf.matmul(M.action[b], M.action[a], p)
            if not np.array_equal(lhs, (ab - sign * ba) % p):
                out.append(f"bracket {t.basis[a].label},{t.basis[b].label}")
    for x in keys:
        if t.parity[x] != EVEN:
            continue
        power = np.eye(M.dim, dtype=np.int64)
        for _ in range(p):
            power = gf.matmul(power, M.action[x], p)
        image = zero.copy()
        for k, c in t.p_power[x]:
            image = (image + c * M.action[k]) % p
        if not np.array_equal(power, image):
            out.append(f"p-power {t.basis[x].label}")
    par = np.array(M.grading)
    for x in keys:
        rows, cols = np.nonzero(M.action[x])
        if np.any(par[rows] != (par[cols] + t.parity[x]) % 2):
            out.append(f"parity {t.basis[x].label}")
    for x in t.h_indices:
        if x not in M.action:
            continue
        a = M.action[x]
        i = t.basis[x].i - 1
        diag = np.array([w[i] % p for w in M.t_weights], dtype=np.int64)
        if not np.array_equal(a, np.diag(diag)):
            out.append(f"weight {t.basis[x].label}")
    return out


def maximal_vectors(M: ModuleRep) -> dict[tuple[int, ...], gf.Subspace]:
    """Per h-eigenweight, the vectors killed by n_0^+ and g_1 (nonzero spaces only)."""
    t, p = M.table, M.p
    ops = [M.matrix(g) for g in t.positive_even + t.z_indices if g in M.action]
    out = {}
    for w, coords in sorted(M.weight_spaces().items()):
        if ops:
            cond = np.vstack([a[:, coords] for a in ops])
            k = gf.kernel(cond, p)
        else:
            k = gf.Subspace.full(len(coords), p)
        if not k.dim:
            continue
        emb = np.zeros((k.dim, M.dim), dtype=np.int64)
        emb[:, coords] = k.basis
        out[w] = gf.Subspace.span(emb, M.dim, p)
    return out


@dataclass
class SimplicityResult:
    status: str  # "simple", "not_simple" or "inconclusive"
    witness: np.ndarray | None = None
    weight: tuple[int, ...] | None = None
    sampled: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def simple(self) -> bool | None:
        return {"simple": True, "not_simple": False}.get(self.status)

    def __bool__(self):
        return self.status == "simple"


def _projective_points(k: int, p: int):
    """One nonzero vector per line of F_p^k."""
    for lead in range(k):
        for tail in product(range(p), repeat=k - lead - 1):
            v = [0] * k
            v[lead] = 1
            v[lead + 1:] = tail
            yield np.array(v, dtype=np.int64)


def is_simple(M: ModuleRep, bound: int = ENUMERATION_BOUND, allow_sampling: bool = True,
              seed: int = 0) -> SimplicityResult:
    """Decide simplicity by spinning up every maximal vector.

    Each nonzero submodule contains a simple one, which has a maximal vector,
    so M is simple iff every maximal vector generates M.  Maximal-vector
    spaces with p^k above ``bound`` are sampled (basis plus random vectors)
    when ``allow_sampling`` is set, otherwise reported as inconclusive.
    """
    p = M.p
    if M.dim <= 1:
        return SimplicityResult("simple" if M.dim == 1 else "not_simple")
    ops = list(M.action.values())
    rng = random.Random(seed)
    sampled = False
    notes = []
    for w, V in maximal_vectors(M).items():
        k = V.dim
        if p ** k <= bound:
            coeffs = _projective_points(k, p)
        elif allow_sampling:
            sampled = True
            msg = f"weight {w}: {k}-dim maximal space sampled, not enumerated"
            notes.append(msg)
            warnings.warn(msg, stacklevel=2)
            rand = [np.array([rng.randrange(p) for _ in range(k)], dtype=np.int64)
                    for _ in range(RANDOM_SAMPLES)]
            coeffs = list(np.eye(k, dtype=np.int64)) + [c for c in rand if c.any()]
        else:
            return SimplicityResult("inconclusive", weight=w,
                                    notes=[f"weight {w}: p^{k} exceeds bound {bound}"])
        for c in coeffs:
            v = gf.matmul(c.reshape(1, -1), V.basis, p)[0]
            if gf.spin([v], ops, M.dim, p).dim < M.dim:
                return SimplicityResult("not_simple", witness=v, weight=w,
                                        sampled=sampled, notes=notes)
    return SimplicityResult("simple", sampled=sampled, notes=notes)


def fixed_points_g1(M: ModuleRep) -> gf.Subspace:
    """Joint kernel of the g_1 actions."""
    ops = [M.matrix(g) for g in M.table.z_indices]
    return gf.kernel(np.vstack(ops), M.p)


def top_layer(M: ModuleRep, base_dim: int) -> gf.Subspace:
    """1 (x) M inside an induced module: the first ``base_dim`` coordinates."""
    return gf.Subspace.coordinate(range(base_dim), M.dim, M.p)


def ideal_annihilation_violations(M: ModuleRep) -> list[str]:
    """Products of d+1 distinct z's that act nonzero on M (expected none)."""
    t = M.table
    out = []
    for combo in combinations(t.z_indices, t.d + 1):
        if M.word_matrix(combo).any():
            out.append(".".join(t.basis[g].label for g in combo))
    return out


def zy_scalar(table: StructureTable, mu, alg: PBWAlgebra | None = None,
              module: ModuleRep | None = None) -> int:
    """The scalar by which Z.Y acts on 1 (x) v_mu in K(L(mu)).

    Z and Y are the lex-ordered products of the z_ij and y_ij with i < j.
    """
    alg = _algebra(table, alg)
    K = module if module is not None else kac_module(table, mu, alg)
    zs = [g for g in table.z_indices if table.basis[g].i < table.basis[g].j]
    word = tuple(zs) + tuple(table.y_indices)
    v = K.unit(K.highest)
    image = gf.matmul(K.word_matrix(word), v.reshape(-1, 1), table.p)[:, 0]
    c = int(image[K.highest])
    if not np.array_equal(image, (c * v) % table.p):
        raise ArithmeticError("Z.Y (1 x v_mu) is not a multiple of 1 x v_mu")
    return c
