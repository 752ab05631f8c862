"""Seeded verification suites exposed through the CLI and the service.

Each suite returns a list of case records (fixed key order for stable JSON)
plus an overall pass flag.  The random draws are fully determined by the
seed, so reports are byte-identical across runs.
"""

from __future__ import annotations

import math
import random

from . import eisenstein as ei
from . import oracle as oc
from .errors import DomainError
from .halfplane import make_point, z_to_point
from .specfun import DEFAULT_QUADRATURE, gamma_integral_check, k_integral

SUITES = (
    "poisson",
    "gamma-integral",
    "k-half",
    "hecke",
    "eta",
    "residue",
    "const-term",
    "fast-vs-direct",
)


def _case(name, error, tolerance):
    return {
        "case": name,
        "error": error,
        "tolerance": tolerance,
        "passed": bool(error <= tolerance),
    }


def random_point(rng: random.Random, n: int, y_lo=0.8, y_hi=1.5, x_span=0.5):
    x = {
        (i, j): rng.uniform(-x_span, x_span)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    }
    y = tuple(rng.uniform(y_lo, y_hi) for _ in range(n - 1))
    return make_point(n, x, y)


def suite_poisson(seed: int):
    rng = random.Random(seed)
    cases = []
    for i in range(100):
        t = rng.uniform(0.3, 3.0)
        b = rng.uniform(-1.0, 1.0)
        c = rng.uniform(0.5, 3.0)
        lhs, rhs = oc.poisson_check(t, b, c, cutoff=60)
        cases.append(_case(f"poisson[{i}] t={t:.4f} b={b:.4f} c={c:.4f}", abs(lhs - rhs), 1e-12))
    return cases


def suite_gamma_integral(seed: int):
    rng = random.Random(seed)
    cases = []
    for i in range(100):
        s = rng.uniform(0.5, 5.0)
        a = rng.uniform(0.5, 5.0)
        lhs, rhs = gamma_integral_check(s, a)
        cases.append(_case(f"gamma-integral[{i}] s={s:.4f} a={a:.4f}", abs(lhs - rhs) / abs(lhs), 1e-11))
    return cases


def suite_k_half(seed: int):
    rng = random.Random(seed)
    cases = []
    for i in range(50):
        a = rng.uniform(0.2, 4.0)
        b = rng.uniform(0.2, 4.0)
        closed = math.sqrt(math.pi) / a * math.exp(-2.0 * a * b)
        val = k_integral(0.5, a, b)
        cases.append(_case(f"k-half[{i}] a={a:.4f} b={b:.4f}", abs(val - closed) / closed, 1e-12))
    return cases


def suite_hecke(seed: int):
    rng = random.Random(seed)
    cases = []
    for r, s_c, s in ((0, 2, 1.5), (1, 1, 1.2), (2, 1, 1.5), (3, 0, 1.7)):
        sig = oc.Signature(r, s_c)
        for i in range(5):
            a = tuple(rng.uniform(0.5, 3.0) for _ in range(sig.m + 1))
            lhs, rhs = oc.hecke_scaling_check(sig, a, s)
            cases.append(
                _case(f"hecke[r={r},s_c={s_c}][{i}]", abs(lhs - rhs) / abs(lhs), 1e-8)
            )
    return cases


def suite_eta(seed: int):
    rng = random.Random(seed)
    cases = []
    for i in range(10):
        x = rng.uniform(-0.5, 0.5)
        y = rng.uniform(0.7, 2.0)
        g = ei.g_of_tau(z_to_point(x, y))
        eta = oc.dedekind_eta_abs(x, y)
        cases.append(_case(f"eta[{i}] z={x:.4f}+{y:.4f}i", abs(g - eta), 1e-8))
    return cases


def suite_residue(seed: int):
    rng = random.Random(seed)
    eps = 1e-3
    cases = []
    for n in (2, 3, 4):
        points = [make_point(n, {}, (1.0,) * (n - 1))] + [random_point(rng, n) for _ in range(3)]
        for i, p in enumerate(points):
            plus = ei.e_star_fast(p, 1.0 + eps)
            minus = ei.e_star_fast(p, 1.0 - eps)
            residue = eps * (plus - minus) / 2.0
            cases.append(_case(f"residue[n={n}][{i}]", abs(residue - 2.0 / n), 5e-6))
    return cases


def suite_const_term(seed: int):
    rng = random.Random(seed)
    cases = []
    for n in (2, 3):
        points = [random_point(rng, n) for _ in range(5)]
        for i, p in enumerate(points):
            const = ei.laurent_at_1(p, ei.SeriesTag.E_STAR).constant_term
            for eps in (1e-2, 1e-3):
                avg = (ei.e_star_fast(p, 1.0 + eps) + ei.e_star_fast(p, 1.0 - eps)) / 2.0
                cases.append(
                    _case(f"const-term[n={n}][{i}] eps={eps:g}", abs(avg - const), 10.0 * eps * eps)
                )
    return cases


def suite_fast_vs_direct(seed: int):
    rng = random.Random(seed)
    trunc = ei.TruncationSpec(lattice_radius=120)
    cases = []
    for n in (2, 3):
        points = [random_point(rng, n) for _ in range(5)]
        for i, p in enumerate(points):
            for s in (1.8, 2.0, 2.5):
                fast = ei.e_star_fast(p, s)
                direct = ei.e_star_direct(p, s, trunc)
                prefactor = ei.completion_prefactor(n, s)
                tol = prefactor * ei.direct_tail_bound(p, s, trunc.lattice_radius) + 1e-8
                cases.append(_case(f"fast-vs-direct[n={n}][{i}] s={s}", abs(fast - direct), tol))
    return cases


_SUITE_FNS = {
    "poisson": suite_poisson,
    "gamma-integral": suite_gamma_integral,
    "k-half": suite_k_half,
    "hecke": suite_hecke,
    "eta": suite_eta,
    "residue": suite_residue,
    "const-term": suite_const_term,
    "fast-vs-direct": suite_fast_vs_direct,
}


def run_suite(suite: str, seed: int = 0):
    """Run one named suite; returns (cases, all_passed, max_error)."""
    try:
        fn = _SUITE_FNS[suite]
    except KeyError:
        raise DomainError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}") from None
    cases = fn(seed)
    max_error = max(c["error"] for c in cases)
    return cases, all(c["passed"] for c in cases), max_error
