"""Eisenstein series evaluators, the recursive expansion, g(tau) and Laurent data.

Three routes to the same function:

* direct lattice sums (``e_prime_direct``, ``e_primitive_direct``,
  ``e_star_direct``), valid for s > 1 only;
* the recursive Poisson/Bessel expansion ``e_star_fast``, which continues
  the completed series meromorphically past s = 1;
* closed-form Laurent data at s = 1 (``laurent_at_1``) built from the
  generalized eta function ``g_of_tau``.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, PoleError, ShapeError
from .halfplane import HalfPlanePoint, det_tau, truncate
from .specfun import (
    DEFAULT_QUADRATURE,
    EULER_GAMMA,
    QuadratureSpec,
    gamma_real,
    k_integral_batch,
    riemann_zeta,
)

_TWO_PI = 2.0 * math.pi
_SQRT_PI = math.sqrt(math.pi)


class SeriesTag(enum.Enum):
    E_STAR = "estar"
    E_PRIME = "eprime"


@dataclass(frozen=True)
class TruncationSpec:
    lattice_radius: int = 120
    tail_threshold: float = 1e-14
    m1_max: int = 64

    def __post_init__(self):
        if self.lattice_radius < 1 or self.m1_max < 1 or self.tail_threshold <= 0:
            raise DomainError("truncation parameters must be positive")


DEFAULT_TRUNCATION = TruncationSpec()


@dataclass(frozen=True)
class LaurentData:
    pole_coefficient: float
    constant_term: float
    series_tag: SeriesTag


def _require_convergent(s: float):
    if s <= 1:
        raise DomainError("direct sum diverges at and below s=1")


def _direct_sum(p: HalfPlanePoint, s: float, radius: int, primitive: bool) -> float:
    """Truncated lattice sum of (det tau)^s / |m tau|^{ns/2} over the box |m_i| <= radius."""
    n = p.n
    mat = p.matrix()
    rng = np.arange(-radius, radius + 1)
    grids = np.meshgrid(*([rng] * (n - 1)), indexing="ij")
    rest = np.stack([g.ravel() for g in grids], axis=-1)  # (K, n-1): m_2..m_n
    rows_rest = rest @ mat[1:, :]
    zero_rest = np.all(rest == 0, axis=1)
    if primitive:
        gcd_rest = np.gcd.reduce(np.abs(rest), axis=1)
    power = -n * s / 2.0
    parts = []
    for m1 in rng:
        rows = rows_rest + m1 * mat[0]
        norm2 = np.einsum("ij,ij->i", rows, rows)
        if primitive:
            keep = np.gcd(gcd_rest, abs(m1)) == 1
        else:
            keep = ~zero_rest if m1 == 0 else np.ones(len(norm2), dtype=bool)
        parts.append(float(np.sum(norm2[keep] ** power)))
    return det_tau(p) ** s * math.fsum(parts)


def e_prime_direct(p: HalfPlanePoint, s: float, t: TruncationSpec = DEFAULT_TRUNCATION) -> float:
    """Full-lattice series zeta(ns) E_n, summed over |m_i| <= lattice_radius."""
    _require_convergent(s)
    return _direct_sum(p, s, t.lattice_radius, primitive=False)


def e_primitive_direct(p: HalfPlanePoint, s: float, t: TruncationSpec = DEFAULT_TRUNCATION) -> float:
    """Primitive-vector series (gcd of entries = 1), truncated as above."""
    _require_convergent(s)
    return _direct_sum(p, s, t.lattice_radius, primitive=True)


def completion_prefactor(n: int, s: float) -> float:
    """pi^{-ns/2} Gamma(ns/2), turning the full-lattice series into the completed one."""
    return math.pi ** (-n * s / 2.0) * gamma_real(n * s / 2.0)


def e_star_direct(p: HalfPlanePoint, s: float, t: TruncationSpec = DEFAULT_TRUNCATION) -> float:
    """Completed series via the direct sum: prefactor times ``e_prime_direct``."""
    _require_convergent(s)
    return completion_prefactor(p.n, s) * e_prime_direct(p, s, t)


def direct_tail_bound(p: HalfPlanePoint, s: float, radius: int) -> float:
    """Upper bound on the truncation error of the direct sums beyond the box."""
    n = p.n
    mat = p.matrix()
    lam = float(np.linalg.eigvalsh(mat @ mat.T)[0])
    ns2 = n * s / 2.0
    dets = det_tau(p) ** s
    acc = 0.0
    r_stop = radius + 500
    for r in range(radius + 1, r_stop + 1):
        count = (2 * r + 1) ** n - (2 * r - 1) ** n
        acc += count * (lam * r * r) ** (-ns2)
    # integral remainder with (2r+1)^{n-1} <= (3r)^{n-1}
    acc += 2 * n * 3 ** (n - 1) * lam ** (-ns2) * r_stop ** (n - n * s) / (n * s - n)
    return dets * acc


def _shell_vectors(r: int, dim: int) -> np.ndarray:
    """Integer vectors in Z^dim with infinity-norm exactly r, in lexicographic order."""
    pts = [
        v
        for v in itertools.product(range(-r, r + 1), repeat=dim)
        if max(abs(c) for c in v) == r
    ]
    return np.array(pts, dtype=float)


class _DualGeometry:
    """Dual-lattice geometry of the Poisson-summed coordinates.

    For tau with truncated block T (tau minus its first row and column) the
    multidimensional Poisson summation produces dual vectors xi with norm
    |T^{-1} xi| and a phase linear in m_1 with slope (tau_row1[2:] T^{-1}) . xi.
    This reduces to sum xi_j^2 / c_j^2 and the b_j/c_j phase only when T is
    diagonal; for a general unipotent part the inverse matrix is required
    (checked against the direct sums).
    """

    def __init__(self, p: HalfPlanePoint):
        mat = p.matrix()
        self.y11 = float(mat[0, 0])
        t_block = mat[1:, 1:]
        self.t_inv = np.linalg.inv(t_block)
        self.slope_row = mat[0, 1:] @ self.t_inv
        # |T^{-1} xi| >= |xi| / opnorm(T)
        self.min_gain = 1.0 / float(np.linalg.norm(t_block, 2))

    def norms_and_slopes(self, vecs: np.ndarray):
        imgs = vecs @ self.t_inv.T
        return np.sqrt(np.einsum("ij,ij->i", imgs, imgs)), vecs @ self.slope_row


def _bessel_tail_sum(
    p: HalfPlanePoint,
    weight,
    t: TruncationSpec,
    q: QuadratureSpec,
    label: str,
) -> float:
    """sum over m_1 != 0 and dual vectors xi != 0 of the weighted phase terms.

    ``weight(k, m_norm, slope, q)`` returns (real contribution for
    |m_1| = k with both signs folded into a cosine, observed scale of the
    kernel relative to exp(-2ab)).  Shells of xi are added in increasing
    infinity-norm order until the exp(-2ab) bound times the next shell's
    cardinality drops below the tail threshold.
    """
    n = p.n
    geom = _DualGeometry(p)
    y11 = geom.y11
    total = 0.0
    scale_obs = 1.0
    max_shells = 600
    for r in range(1, max_shells + 1):
        vecs = _shell_vectors(r, n - 1)
        m_norm, slope = geom.norms_and_slopes(vecs)
        m_min = float(m_norm.min())
        parts = []
        for k in range(1, t.m1_max + 1):
            bound = scale_obs * len(vecs) * math.exp(-_TWO_PI * k * y11 * m_min)
            if k > 1 and bound < t.tail_threshold:
                break
            contrib, obs = weight(k, m_norm, slope, q)
            scale_obs = max(scale_obs, obs)
            parts.append(contrib)
        total += math.fsum(parts)
        next_min = (r + 1) * geom.min_gain
        next_count = (2 * r + 3) ** (n - 1) - (2 * r + 1) ** (n - 1)
        if scale_obs * next_count * math.exp(-_TWO_PI * y11 * next_min) < t.tail_threshold:
            return total
    raise ConvergenceError(f"{label}: lattice shells did not close by radius {max_shells}")


def _domain_check(n: int, s: float):
    if s == 1:
        raise PoleError("pole at s=1")
    if s <= 1.0 - 1.0 / (2 * n):
        raise DomainError(f"s must exceed 1 - 1/(2n) = {1 - 1 / (2 * n)} for n={n}")


def _e_star_continued(p: HalfPlanePoint, s: float, t: TruncationSpec, q: QuadratureSpec) -> float:
    if p.n == 1:
        # base of the recursion: completed zeta, doubled
        return 2.0 * math.pi ** (-s / 2.0) * gamma_real(s / 2.0) * riemann_zeta(s)
    n = p.n
    y = p.y
    y11 = math.prod(y)
    dety = det_tau(p)
    cprod = dety / y11  # product of diagonal entries below the first
    ypow = math.prod(yi ** (i / (n - 1)) for i, yi in enumerate(y, start=1))

    term1 = ypow ** s * _e_star_continued(truncate(p), n * s / (n - 1), t, q)

    u = n * (s - 1)
    term2 = (
        2.0
        * dety ** s
        / cprod
        * y11 ** (-(u + 1.0))
        * math.pi ** (-(u / 2.0 + 0.5))
        * gamma_real(u / 2.0 + 0.5)
        * riemann_zeta(u + 1.0)
    )

    sigma = u / 2.0 + 0.5
    term3 = dety ** s / cprod * _bessel_tail_sum(
        p, _k_weight(sigma, y11), t, q, "e_star_fast"
    )
    return term1 + term2 + term3


def _k_weight(sigma: float, y11: float):
    """Weight callback: paired-sign K-Bessel terms for |m_1| = k."""

    def weight(k, m_norm, slope, quad):
        a = _SQRT_PI * k * y11
        b = _SQRT_PI * m_norm
        vals = k_integral_batch(sigma, a, b, quad)
        obs = float(np.max(vals * np.exp(2.0 * a * b)))
        contrib = float(np.sum(2.0 * np.cos(_TWO_PI * k * slope) * vals))
        return contrib, obs

    return weight


def e_star_fast(
    p: HalfPlanePoint,
    s: float,
    t: TruncationSpec = DEFAULT_TRUNCATION,
    q: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """Meromorphically continued completed series via the recursive expansion."""
    _domain_check(p.n, s)
    return _e_star_continued(p, s, t, q)


def e_prime_fast(
    p: HalfPlanePoint,
    s: float,
    t: TruncationSpec = DEFAULT_TRUNCATION,
    q: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """Continued full-lattice series, normalized term by term.

    Same expansion as :func:`e_star_fast` but with the completion prefactor
    divided out at assembly time, so the code path (and rounding) differs
    from multiplying the completed value afterwards.
    """
    _domain_check(p.n, s)
    inv = 1.0 / completion_prefactor(p.n, s)
    if p.n == 1:
        return inv * _e_star_continued(p, s, t, q)
    n = p.n
    y = p.y
    y11 = math.prod(y)
    dety = det_tau(p)
    cprod = dety / y11
    ypow = math.prod(yi ** (i / (n - 1)) for i, yi in enumerate(y, start=1))
    term1 = inv * ypow ** s * _e_star_continued(truncate(p), n * s / (n - 1), t, q)
    u = n * (s - 1)
    term2 = inv * (
        2.0 * dety ** s / cprod * y11 ** (-(u + 1.0))
        * math.pi ** (-(u / 2.0 + 0.5)) * gamma_real(u / 2.0 + 0.5) * riemann_zeta(u + 1.0)
    )
    sigma = u / 2.0 + 0.5
    term3 = inv * dety ** s / cprod * _bessel_tail_sum(
        p, _k_weight(sigma, y11), t, q, "e_prime_fast"
    )
    return term1 + term2 + term3


def g_of_tau(
    p: HalfPlanePoint,
    t: TruncationSpec = DEFAULT_TRUNCATION,
    q: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """Generalized eta function g(tau); equals |eta(z)| for n = 2."""
    if p.n < 2:
        raise DomainError("g_of_tau requires n >= 2")
    n = p.n
    y = p.y
    y11 = math.prod(y)
    ypow = math.prod(yi ** (i / (n - 1)) for i, yi in enumerate(y, start=1))
    head = ypow * _e_star_continued(truncate(p), n / (n - 1), t, q)

    def weight(k, m_norm, slope, quad):
        damp = np.exp(-_TWO_PI * k * y11 * m_norm)
        contrib = float(np.sum((2.0 / k) * np.cos(_TWO_PI * k * slope) * damp))
        return contrib, 1.0

    tail = _bessel_tail_sum(p, weight, t, q, "g_of_tau")
    return math.exp(-0.25 * (head + tail))


def laurent_at_1(
    p: HalfPlanePoint,
    which: SeriesTag,
    t: TruncationSpec = DEFAULT_TRUNCATION,
    q: QuadratureSpec = DEFAULT_QUADRATURE,
) -> LaurentData:
    """Pole coefficient and constant term at s = 1, in closed form."""
    n = p.n
    log_weighted = sum(i * math.log(yi) for i, yi in enumerate(p.y, start=1))
    log_g = math.log(g_of_tau(p, t, q))
    if which is SeriesTag.E_STAR:
        pole = 2.0 / n
        const = EULER_GAMMA - math.log(4.0 * math.pi) - (2.0 / n) * log_weighted - 4.0 * log_g
    elif which is SeriesTag.E_PRIME:
        pole = 2.0 * math.pi / n
        const = math.pi * (
            2.0 * EULER_GAMMA - math.log(4.0) - (2.0 / n) * log_weighted - 4.0 * log_g
        )
    else:
        raise ShapeError(f"unknown series tag {which!r}")
    return LaurentData(pole_coefficient=pole, constant_term=const, series_tag=which)
