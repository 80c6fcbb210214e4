"""Verification suites: each builds a Report of named checks for one (n, p).

Suites are independent, so ``run_suites`` can fan them out over a process
pool; checks are sorted by name when a report is serialised, which makes
the output independent of scheduling.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import center as ctr
from . import gf
from . import weights as wts
from .hpoly import evaluation_matrix
from .pbw import (FULL, QUOTIENT, TRUNCATED, PBWAlgebra, SizeLimitExceeded,
                  associativity_failures, grading_failures, ideal_closure_violations,
                  weight_zero_monomials)
from .reports import INCONCLUSIVE, Check, Report
from .reps import (fixed_points_g1, ideal_annihilation_violations, is_simple, kac_module,
                   baby_verma, representation_violations, simple_g0_module, zy_scalar)
from .structure import (antisymmetry_violations, build_structure, check_restrictedness,
                        grading_violations, jacobi_violations, matrix_oracle_violations,
                        weight_violations)

SUITES = ("structure", "pbw", "kac", "center", "linkage", "typical")
WORKERS_ENV = "PERIPLECTIC_WORKERS"

# default size caps; --allow-large lifts them
MAX_MONOMIALS = 20_000      # canonical monomials of the truncated model for pbw enumerations
MAX_WEIGHTS = 125           # p^n for weight sweeps over modules
CENTER_PARAMS = (2, 5)      # largest (n, p) the center-based suites run at by default


@dataclass(frozen=True)
class RunConfig:
    n: int = 2
    p: int = 5
    seed: int = 0
    allow_large: bool = False
    associativity_trials: int = 1000
    grading_trials: int = 500

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.p <= 3 or not gf.is_prime(self.p):
            raise ValueError(f"p = {self.p} must be a prime > 3")


def _inconclusive(name: str, reason: str) -> Check:
    return Check(name, INCONCLUSIVE, {"reason": reason})


def _center_too_large(cfg: RunConfig) -> bool:
    return not cfg.allow_large and (cfg.n > CENTER_PARAMS[0] or cfg.p > CENTER_PARAMS[1])


# ----- structure -------------------------------------------------------------------

def structure_checks(t) -> list[Check]:
    dims = t.graded_dims()
    n = t.n
    expected = {-1: n * (n - 1) // 2, 0: n * n, 1: n * (n + 1) // 2}
    return [
        Check.of("structure.graded_dims", dims == expected, dims=dims, expected=expected),
        Check.of("structure.antisymmetry", not (v := antisymmetry_violations(t)), violations=v[:10]),
        Check.of("structure.jacobi", not (v := jacobi_violations(t)), violations=v[:10]),
        Check.of("structure.grading", not (v := grading_violations(t)), violations=v[:10]),
        Check.of("structure.weights", not (v := weight_violations(t)), violations=v[:10]),
        Check.of("structure.matrix_oracle", not (v := matrix_oracle_violations(t)), violations=v[:10]),
        Check.of("structure.restrictedness", not (v := check_restrictedness(t)), violations=v),
    ]


def suite_structure(cfg: RunConfig) -> Report:
    t = build_structure(cfg.n, cfg.p)
    return Report("structure", cfg.n, cfg.p, structure_checks(t))


# ----- pbw ---------------------------------------------------------------------------

def suite_pbw(cfg: RunConfig) -> Report:
    t = build_structure(cfg.n, cfg.p)
    rep = Report("pbw", cfg.n, cfg.p)
    full = PBWAlgebra(t, FULL)
    rng = random.Random(cfg.seed)
    bad = associativity_failures(full, rng, cfg.associativity_trials)
    rep.add(Check.of("pbw.associativity", not bad, mode=FULL,
                     trials=cfg.associativity_trials, failures=len(bad), examples=bad[:3]))
    bad = grading_failures(full, rng, cfg.grading_trials)
    rep.add(Check.of("pbw.grading_multiplicativity", not bad, trials=cfg.grading_trials,
                     failures=len(bad), examples=bad[:3]))

    trunc = PBWAlgebra(t, TRUNCATED)
    count = trunc.count_monomials()
    small = count <= MAX_MONOMIALS or cfg.allow_large
    if small:
        listed = sum(1 for _ in trunc.monomials())
        rep.add(Check.of("pbw.monomial_count", listed == count, count=count, enumerated=listed))
    else:
        rep.add(Check("pbw.monomial_count", INCONCLUSIVE, {"count": count, "enumerated": None}))
    rep.add(ctr.verify_yz_projection_nonzero(t))
    size = cfg.p ** cfg.n
    rank = gf.rank(evaluation_matrix(cfg.n, cfg.p), cfg.p)
    rep.add(Check.of("pbw.evaluation_rank", rank == size, rank=rank, expected=size))
    if not small:
        reason = f"{count} truncated monomials exceed the cap {MAX_MONOMIALS}"
        for name in ("pbw.weight_zero_grade", "pbw.weight_zero_decomposition",
                     "pbw.quotient_weight_zero_decomposition", "pbw.ideal_closure",
                     "pbw.quotient_associativity"):
            rep.add(_inconclusive(name, reason))
        return rep

    W0 = weight_zero_monomials(trunc)
    off = [m for m in W0 if trunc.z_grade(m) != 0]
    rep.add(Check.of("pbw.weight_zero_grade", not off, weight_zero_monomials=len(W0),
                     exceptions=len(off)))
    dec = ctr.weight_zero_decomposition(t, TRUNCATED)
    rep.add(Check.of("pbw.weight_zero_decomposition", _decomposes(dec), **dec))
    quot = PBWAlgebra(t, QUOTIENT)
    try:
        dec = ctr.weight_zero_decomposition(t, QUOTIENT)
        rep.add(Check.of("pbw.quotient_weight_zero_decomposition", _decomposes(dec),
                         ideal_dim=quot.ideal.dim(), quotient_dim=quot.ideal.quotient_dim(), **dec))
        bad = ideal_closure_violations(quot)
        rep.add(Check.of("pbw.ideal_closure", not bad, violations=bad[:10]))
        trials = 10
        bad = associativity_failures(quot, random.Random(cfg.seed + 1), trials)
        rep.add(Check.of("pbw.quotient_associativity", not bad, mode=QUOTIENT, trials=trials,
                         failures=len(bad)))
    except SizeLimitExceeded as exc:
        for name in ("pbw.quotient_weight_zero_decomposition", "pbw.ideal_closure",
                     "pbw.quotient_associativity"):
            rep.add(_inconclusive(name, str(exc)))
    return rep


def _decomposes(dec: dict) -> bool:
    return (dec["spans"] and dec["intersection"] == 0
            and dec["dim_ubar_T"] == dec["dim_uh"] + dec["dim_l"])


# ----- kac -----------------------------------------------------------------------------

def kac_checks(t, alg: PBWAlgebra | None = None, seed: int = 0) -> list[Check]:
    """Sweep over all weights: simplicity where delta != 0, (ZY)^2 = delta^2,
    I acting as zero on K(L(mu)) and Z(mu), and dim K(L(mu))^{g_1} = dim L(mu)
    where delta != 0."""
    p = t.p
    alg = alg or PBWAlgebra(t, FULL)
    lam = wts.all_weights(t.n, p)
    rep_bad, simple_bad, zy_bad, ideal_bad, fixed_bad, fixed_larger = [], [], [], [], [], []
    typical_delta, simple_count, nonsimple_atypical, sampled = 0, 0, 0, 0
    dims = {}
    for mu in lam:
        L = simple_g0_module(t, mu, alg)
        K = kac_module(t, mu, alg)
        Z = baby_verma(t, mu, alg)
        dims[wts.format_weight(mu)] = [L.dim, K.dim, Z.dim]
        for M in (L, K, Z):
            if representation_violations(M):
                rep_bad.append(M.tag)
        d = wts.delta(mu, p)
        res = is_simple(K, seed=seed)
        sampled += res.sampled
        if d:
            typical_delta += 1
            if res.simple:
                simple_count += 1
            else:
                simple_bad.append(mu)
        elif res.simple is False:
            nonsimple_atypical += 1
        c = zy_scalar(t, mu, alg, K)
        if (c * c - d * d) % p:
            zy_bad.append((mu, c, d))
        for M in (K, Z):
            if ideal_annihilation_violations(M):
                ideal_bad.append(M.tag)
        fixed = fixed_points_g1(K).dim
        if d and fixed != L.dim:
            fixed_bad.append(mu)
        elif not d and fixed != L.dim:
            fixed_larger.append(mu)
    return [
        Check.of("kac.representations", not rep_bad, modules=3 * len(lam), violations=rep_bad[:10]),
        Check.of("kac.simple_when_delta_nonzero", not simple_bad, delta_nonzero=typical_delta,
                 simple=simple_count, failures=simple_bad, sampled_searches=sampled,
                 not_simple_with_delta_zero=nonsimple_atypical),
        Check.of("kac.zy_scalar_squared", not zy_bad, weights=len(lam), violations=zy_bad[:10]),
        Check.of("kac.ideal_annihilates", not ideal_bad, modules=2 * len(lam),
                 violations=ideal_bad[:10]),
        Check.of("kac.fixed_points", not fixed_bad, delta_nonzero=typical_delta,
                 violations=fixed_bad[:10], delta_zero_with_extra_fixed_points=fixed_larger),
        Check.of("kac.module_dims", True, dims=dims),
    ]


def suite_kac(cfg: RunConfig) -> Report:
    t = build_structure(cfg.n, cfg.p)
    rep = Report("kac", cfg.n, cfg.p)
    if cfg.p ** cfg.n > MAX_WEIGHTS and not cfg.allow_large:
        reason = f"p^n = {cfg.p ** cfg.n} weights exceed the cap {MAX_WEIGHTS}"
        rep.extend(_inconclusive(f"kac.{k}", reason) for k in
                   ("representations", "simple_when_delta_nonzero", "zy_scalar_squared",
                    "ideal_annihilates", "fixed_points"))
        return rep
    rep.extend(kac_checks(t, seed=cfg.seed))
    return rep


# ----- center, linkage, typical ----------------------------------------------------------

def center_checks(cb: ctr.CenterBasis) -> list[Check]:
    return [
        Check.of("center.computed", True, **cb.stats),
        ctr.hc_kernel_on_ideal(cb.alg),
        ctr.verify_center_contents(cb),
        ctr.verify_super_centrality(cb),
        ctr.verify_supercentral_image(cb),
        ctr.verify_hc_w_invariance(cb),
        ctr.verify_wall_constancy(cb),
        *ctr.verify_theta_factorization(cb),
        ctr.verify_subalgebra(cb),
        ctr.verify_exp_invariance(cb),
        ctr.verify_root_subgroup_invariance(cb),
        ctr.verify_root_subgroup_center(cb),
        ctr.verify_scalar_action(cb),
    ]


def linkage_checks(cb: ctr.CenterBasis, seed: int = 0) -> list[Check]:
    return [ctr.verify_linkage_theorem(cb),
            ctr.verify_character_basis_independence(cb, seed=seed)]


def typical_checks(cb: ctr.CenterBasis) -> list[Check]:
    t = cb.table
    alg = PBWAlgebra(t, FULL)
    g0 = ctr.g0_invariants(t, alg)
    out = []
    for mu in wts.all_weights(t.n, t.p):
        if wts.is_typical(mu, t.p):
            out.extend(ctr.verify_typical_equivalence(cb, mu, alg, g0))
    return out


def _center_suite(name: str, cfg: RunConfig, build) -> Report:
    rep = Report(name, cfg.n, cfg.p)
    if _center_too_large(cfg):
        rep.add(_inconclusive(f"{name}.gated", f"(n, p) = ({cfg.n}, {cfg.p}) needs --allow-large"))
        return rep
    try:
        cb = ctr.compute_center(build_structure(cfg.n, cfg.p))
    except (ValueError, SizeLimitExceeded) as exc:
        rep.add(_inconclusive(f"{name}.size", str(exc)))
        return rep
    rep.extend(build(cb))
    return rep


def suite_center(cfg: RunConfig) -> Report:
    return _center_suite("center", cfg, center_checks)


def suite_linkage(cfg: RunConfig) -> Report:
    return _center_suite("linkage", cfg, lambda cb: linkage_checks(cb, cfg.seed))


def suite_typical(cfg: RunConfig) -> Report:
    return _center_suite("typical", cfg, typical_checks)


_RUNNERS = {
    "structure": suite_structure,
    "pbw": suite_pbw,
    "kac": suite_kac,
    "center": suite_center,
    "linkage": suite_linkage,
    "typical": suite_typical,
}


def run_suite(name: str, cfg: RunConfig, timing: bool = False) -> Report:
    start = time.perf_counter()
    rep = _RUNNERS[name](cfg)
    if timing:
        rep.timing = {"seconds": round(time.perf_counter() - start, 3)}
    return rep


def _job(args):
    return run_suite(*args)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def run_suites(names, cfg: RunConfig, timing: bool = False, workers: int | None = None) -> Report:
    """Run several suites and merge them into one report named after the selection."""
    names = list(names)
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(names))) as pool:
            parts = list(pool.map(_job, [(nm, cfg, timing) for nm in names]))
    else:
        parts = [run_suite(nm, cfg, timing) for nm in names]
    if len(parts) == 1:
        return parts[0]
    out = Report("all", cfg.n, cfg.p)
    for part in parts:
        out.extend(part.checks)
    if timing:
        out.timing = {part.suite: part.timing["seconds"] for part in parts}
    return out


def atypical_rows(n: int, p: int) -> list[dict]:
    """Theta, delta, typicality and linkage class for every weight."""
    ids = wts.orbit_ids(n, p)
    return [{"weight": wts.format_weight(mu), "theta": wts.theta(mu, p), "delta": wts.delta(mu, p),
             "typical": wts.is_typical(mu, p), "class": ids[mu]}
            for mu in wts.all_weights(n, p)]

