"""Aggregate verification: one pass/fail line per suite, used by the CLI.

Mirrors the pytest acceptance suite at reduced size so a clean build checks
out in about a minute; the heavy versions live in tests/.
"""

from __future__ import annotations

import math
import random
import warnings
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import numpy as np

from .surd import HalfInt, half, hrange
from . import compact, structure, action, decomposition, intertwine


def _wigner_identities(jmax_twice: int = 4) -> tuple:
    grid = np.linspace(0.0, 3.1, 19)
    worst = 0.0
    for jt in range(jmax_twice + 1):
        j = HalfInt(jt)
        for m1 in hrange(-j, j):
            for m2 in hrange(-j, j):
                if compact.little_d(j, m1, m2) != compact.little_d_jacobi_trig(j, m1, m2):
                    return False, "exact trig/Jacobi identity failed"
                d = compact.little_d(j, m1, m2)
                for t in grid:
                    worst = max(worst,
                                abs(d.eval(t) - compact.little_d_hyper(j, m1, m2, t)),
                                abs(d.eval(t) - compact.little_d_jacobi(j, m1, m2, t)))
    return worst < 1e-11, f"three little-d routes, max pointwise {worst:.1e}"


def _unitarity(pairs: int = 25) -> tuple:
    rng = random.Random(20240902)
    worst_u = worst_m = 0.0
    for _ in range(pairs):
        a1, a2 = (_rand_angles(rng) for _ in range(2))
        k1, k2 = compact.matrix_from_euler(a1), compact.matrix_from_euler(a2)
        for jt in range(0, 6):
            j, n = HalfInt(jt), HalfInt(jt)
            ms = hrange(-j, j)
            for m1 in ms:
                for m2 in ms:
                    s = sum(compact.wigner_D(compact.WignerIndex(j, n, m1, m3), a1)
                            * compact.wigner_D(compact.WignerIndex(j, n, m2, m3), a1).conjugate()
                            for m3 in ms)
                    worst_u = max(worst_u, abs(s - (1.0 if m1 == m2 else 0.0)))
                    prod = compact.wigner_D_matrix_arg(
                        compact.WignerIndex(j, n, m1, m2), k1 @ k2)
                    tot = sum(
                        compact.wigner_D_matrix_arg(compact.WignerIndex(j, n, m1, m3), k1)
                        * compact.wigner_D_matrix_arg(compact.WignerIndex(j, n, m3, m2), k2)
                        for m3 in ms)
                    worst_m = max(worst_m, abs(prod - tot))
    ok = worst_u < 1e-10 and worst_m < 1e-9
    return ok, f"unitarity {worst_u:.1e}, multiplicativity {worst_m:.1e}"


def _rand_angles(rng):
    return compact.EulerAngles(rng.uniform(-2 * math.pi, 2 * math.pi),
                               rng.uniform(-math.pi, 3 * math.pi),
                               rng.uniform(0.02, math.pi - 0.02),
                               rng.uniform(-math.pi, math.pi))


def _cg_tables() -> tuple:
    from .surd import Surd
    for jt in range(1, 6):
        j = half(Fraction(jt, 2))
        jf = j.as_fraction()
        for m1 in hrange(-j, j):
            m = m1.as_fraction()
            checks = [
                (compact.cg(j, m1, half("1/2"), half("-1/2"), j - half("1/2"), m1 - half("1/2")),
                 Surd.sqrt((jf + m) / (2 * jf + 1))),
                (compact.cg(j, m1, half("1/2"), half("1/2"), j - half("1/2"), m1 + half("1/2")),
                 -Surd.sqrt((jf - m) / (2 * jf + 1))),
                (compact.cg(j, m1, half("1/2"), half("-1/2"), j + half("1/2"), m1 - half("1/2")),
                 Surd.sqrt((jf - m + 1) / (2 * jf + 1))),
                (compact.cg(j, m1, half("1/2"), half("1/2"), j + half("1/2"), m1 + half("1/2")),
                 Surd.sqrt((jf + m + 1) / (2 * jf + 1))),
            ]
            if jt >= 2:
                checks += [
                    (compact.cg(j, m1, 1, 0, j, m1),
                     Surd.of(m) / Surd.sqrt(jf * (jf + 1))),
                    (compact.cg(j, m1, 1, -1, j - 1, m1 - 1),
                     Surd.sqrt((jf + m) * (jf + m - 1) / (2 * jf * (2 * jf + 1)))),
                    (compact.cg(j, m1, 1, 1, j - 1, m1 + 1),
                     Surd.sqrt((jf - m) * (jf - m - 1) / (2 * jf * (2 * jf + 1)))),
                    (compact.cg(j, m1, 1, 0, j - 1, m1),
                     -Surd.sqrt((jf - m) * (jf + m) / (jf * (2 * jf + 1)))),
                    (compact.cg(j, m1, 1, -1, j, m1 - 1),
                     Surd.sqrt((jf + m) * (jf - m + 1) / (2 * jf * (jf + 1)))),
                    (compact.cg(j, m1, 1, 1, j, m1 + 1),
                     -Surd.sqrt((jf - m) * (jf + m + 1) / (2 * jf * (jf + 1)))),
                    (compact.cg(j, m1, 1, -1, j + 1, m1 - 1),
                     Surd.sqrt((jf - m + 1) * (jf - m + 2) / ((2 * jf + 2) * (2 * jf + 1)))),
                    (compact.cg(j, m1, 1, 0, j + 1, m1),
                     Surd.sqrt((jf - m + 1) * (jf + m + 1) / ((jf + 1) * (2 * jf + 1)))),
                    (compact.cg(j, m1, 1, 1, j + 1, m1 + 1),
                     Surd.sqrt((jf + m + 1) * (jf + m + 2) / ((2 * jf + 2) * (2 * jf + 1)))),
                ]
            for got, want in checks:
                if got != want:
                    return False, f"table entry failed at j={j}, m1={m1}"
    return True, "both coupling tables, all j <= 5/2"


def _structure() -> tuple:
    results = structure.structure_identity_suite()
    bad = [n for n, ok in results if not ok]
    return not bad, (f"{len(results)} identities" if not bad else f"failed: {bad}")


def _ladder_vs_raw(jmax=2) -> tuple:
    for delta in (-2, 0, 1, 3):
        for idx in action.principal_indices(delta, jmax):
            for root in structure.ROOT_TAGS:
                if dict(action.dl_valpha(root, idx)) != dict(action.dl_valpha_raw(root, idx)):
                    return False, f"mismatch at {idx}, root {root}"
    return True, f"closed tables = product-expansion route, j <= {jmax}"


def _brackets(jmax) -> tuple:
    for delta in (0, 1):
        rep = action.verify_brackets(delta, jmax)
        if not rep.ok:
            return False, f"delta={delta}: {len(rep.failures)} failures"
    return True, f"all generator pairs, interior rows, jmax={jmax}"


def _casimir(jmax) -> tuple:
    for delta in (0, 1, 2):
        rep = action.casimir2_apply(action.InductionChar(delta, mode="formal"), jmax)
        if not rep.ok:
            return False, f"formal check failed at delta={delta}"
    num = action.casimir2_apply(action.InductionChar(0, 4, mode="decomposition"), jmax)
    scal = action.casimir2_scalar(action.InductionChar(0, 4, mode="decomposition"))
    return num.ok and scal == 1, f"formal scalar; numeric value {scal} at (0,4)"


def _decomposition(kmax) -> tuple:
    for (d, l) in decomposition.SAMPLE_CHARACTERS:
        if not decomposition.partition_ok(d, l, kmax + 4):
            return False, f"partition failed at ({d},{l})"
        rep = decomposition.verify_closure(d, l, kmax)
        if not rep.ok:
            return False, f"closure failed at ({d},{l}): {rep.violations[:1]}"
        table = decomposition.lowest_ktype_table(d, l)
        for tag, want in table.items():
            if decomposition.lowest_ktype(tag, d, l) != want:
                return False, f"lowest K-type mismatch at ({d},{l}) {tag}"
    fd = [decomposition.finite_dim_check(0, 4), decomposition.finite_dim_check(2, 4),
          decomposition.finite_dim_check(0, -4)]
    if not all(r.ok for r in fd) or [r.dimension for r in fd] != [8, 6, 8]:
        return False, "finite-dimension cross-check failed"
    return True, f"six sample characters, closure to k <= {kmax}"


def _intertwine(threads: int) -> tuple:
    rng = random.Random(20240903)
    worst = 0.0
    for _ in range(60):
        jt = rng.randint(0, 5)
        j = half(Fraction(jt, 2))
        m1 = half(Fraction(rng.randint(0, jt) * 2 - jt, 2))
        d = rng.randint(-4, 4)
        lam = rng.uniform(0.5, 6.0) if rng.random() < 0.8 else \
            complex(rng.uniform(0.5, 6.0), rng.uniform(-3.0, 3.0))
        a = intertwine.a_closed(j, m1, d, lam)
        b = intertwine.a_gammasum(j, m1, d, lam)
        worst = max(worst, abs(a - b) / max(abs(a), 1e-300))
    if worst >= 1e-10:
        return False, f"closed vs gammasum {worst:.1e}"
    spot = abs(intertwine.a_quadrature(compact.WignerIndex(0, 0, 0, 0), 0, 2.0)
               - math.pi**2 / 8)
    jobs = []
    for d in (0, 1, 2):
        for lam in (2.0, 2.5, 3.5):
            for jt in (0, 1, 2, 3):
                j = HalfInt(jt)
                for m1 in hrange(-j, j):
                    jobs.append((j, m1, d, lam))

    def one(job):
        j, m1, d, lam = job
        n = half(3 * m1.as_fraction() - d)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            q = intertwine.a_quadrature(compact.WignerIndex(j, n, m1, m1), d, lam)
        c = intertwine.a_closed(j, m1, d, lam)
        return abs(q - c) / max(abs(c), 1e-6)

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        quad_worst = max(pool.map(one, jobs))
    ok = spot < 1e-8 and quad_worst < 1e-6
    return ok, (f"paths agree: gammasum {worst:.1e}, spot {spot:.1e}, "
                f"quadrature grid {quad_worst:.1e}")


def _zero_pole_ledger() -> tuple:
    for (d, l) in decomposition.SAMPLE_CHARACTERS:
        nontrivial = False
        for kt in range(0, 9):
            j = half(Fraction(kt, 2))
            for m1 in hrange(-j, j):
                if intertwine.a_closed_exact(j, m1, d, l).order != 0:
                    nontrivial = True
                    break
            if nontrivial:
                break
        if not nontrivial:
            return False, f"trivial ledger at reducible ({d},{l})"
    return True, "nontrivial zero/pole rows at all six reducible samples"


def run_all(kmax: int = 8, jmax=None, threads: int = 1) -> list:
    """Run every suite; returns [(name, ok, note), ...]."""
    jmax = jmax or half(2)
    suites = [
        ("wigner little-d identities", lambda: _wigner_identities(4)),
        ("wigner unitarity/multiplicativity", _unitarity),
        ("clebsch-gordan tables", _cg_tables),
        ("structure identities", _structure),
        ("ladder action vs product route", _ladder_vs_raw),
        ("bracket consistency", lambda: _brackets(jmax)),
        ("quadratic casimir", lambda: _casimir(jmax)),
        ("composition series", lambda: _decomposition(kmax)),
        ("intertwining three paths", lambda: _intertwine(threads)),
        ("zero/pole ledger vs reducibility", _zero_pole_ledger),
    ]
    out = []
    for name, fn in suites:
        try:
            ok, note = fn()
        except Exception as exc:  # a crash is a failure, not an abort
            ok, note = False, f"exception: {exc}"
        out.append((name, ok, note))
    return out
