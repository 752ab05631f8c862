"""Independent verification oracles.

These deliberately avoid the evaluation machinery in :mod:`eisenstein`:
the eta oracle is a plain q-product, the Poisson checker sums both sides
of the identity term by term, and the Hecke scaling checker does nested
quadrature on the raw integrals.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .specfun import DEFAULT_QUADRATURE, QuadratureSpec, _bracket, _refine_trapezoid


@dataclass(frozen=True)
class Signature:
    """Embedding signature of a number field: r real, s_c complex-conjugate pairs.

    ``delta`` lists the scaling exponent of each of the m+1 = r+s_c archimedean
    places, complex pairs first; when r >= 1 the last place is real.
    """

    r: int
    s_c: int
    delta: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if self.r < 0 or self.s_c < 0:
            raise DomainError("embedding counts must be nonnegative")
        if self.r + self.s_c < 2:
            raise DomainError("need r + s_c > 1 (unit rank at least 1)")
        object.__setattr__(self, "delta", (2,) * self.s_c + (1,) * self.r)

    @property
    def n_field(self) -> int:
        return self.r + 2 * self.s_c

    @property
    def m(self) -> int:
        return self.r + self.s_c - 1


def dedekind_eta_abs(x_coord: float, y_coord: float, terms: int = 200) -> float:
    """|eta(z)| via the q-product, truncated after ``terms`` factors."""
    if y_coord <= 0:
        raise DomainError("y-coordinate must be positive")
    if terms < 1:
        raise DomainError("need at least one product term")
    z = complex(x_coord, y_coord)
    q = cmath.exp(2j * math.pi * z)
    log_abs = -math.pi * y_coord / 12.0
    qk = 1.0 + 0.0j
    for _ in range(terms):
        qk *= q
        log_abs += math.log(abs(1.0 - qk))
    return math.exp(log_abs)


def poisson_check(t: float, b: float, c: float, cutoff: int = 60):
    """Both sides of the one-dimensional Poisson summation identity.

    lhs = sum exp(-pi t (b + c m)^2); rhs = its dual theta sum.  Imaginary
    parts of the dual cancel in +-m pairs, so the cosine form is summed.
    """
    if t <= 0 or c <= 0:
        raise DomainError("poisson_check requires t > 0 and c > 0")
    if cutoff < 1:
        raise DomainError("cutoff must be >= 1")
    ms = np.arange(-cutoff, cutoff + 1)
    lhs = float(np.sum(np.exp(-math.pi * t * (b + c * ms) ** 2)))
    rhs = float(
        np.sum(np.cos(2.0 * math.pi * b * ms / c) * np.exp(-math.pi * ms ** 2 / (t * c * c)))
        / (c * math.sqrt(t))
    )
    return lhs, rhs


def _hecke_integral_1d(a1, a2, delta1, exponent, q: QuadratureSpec):
    def phi(u):
        return exponent * math.log(a1 * a1 * math.exp(2 * u) + a2 * a2 * math.exp(-2 * delta1 * u))

    lo, hi, pmin = _bracket(phi, 0.0, drop=50.0)

    def integrand(grid):
        inner = a1 * a1 * np.exp(2 * grid) + a2 * a2 * np.exp(-2 * delta1 * grid)
        return np.exp(-(exponent * np.log(inner)) + pmin)

    return float(_refine_trapezoid(integrand, lo, hi, q, "hecke 1d")) * math.exp(-pmin)


def _hecke_integral_2d(a, delta, exponent, q: QuadratureSpec):
    a1, a2, a3 = a
    d1, d2 = delta

    def inner_min(u):
        # denominator along the diagonal u1 = u2 = u; used only for bracketing
        return exponent * math.log(
            a1 * a1 * math.exp(2 * u) + a2 * a2 * math.exp(2 * u)
            + a3 * a3 * math.exp(-2 * (d1 + d2) * u)
        )

    lo, hi, _ = _bracket(inner_min, 0.0, drop=60.0)
    half = max(abs(lo), abs(hi)) + 4.0
    npts = 192
    est = prev = None
    for _ in range(q.max_refinements):
        grid = np.linspace(-half, half, npts + 1)
        u1, u2 = np.meshgrid(grid, grid, indexing="ij")
        denom = (
            a1 * a1 * np.exp(2 * u1)
            + a2 * a2 * np.exp(2 * u2)
            + a3 * a3 * np.exp(-2 * (d1 * u1 + d2 * u2))
        )
        vals = denom ** (-exponent)
        prev, est = est, float(np.trapezoid(np.trapezoid(vals, grid, axis=1), grid))
        if prev is not None and abs(est - prev) <= max(q.relative_tolerance, 1e-11) * abs(est):
            return est
        npts *= 2
    from .errors import ConvergenceError

    raise ConvergenceError("hecke 2d quadrature did not converge", previous=prev, last=est)


def hecke_scaling_check(
    sig: Signature, a, s: float, q: QuadratureSpec = DEFAULT_QUADRATURE
):
    """Both sides of the unit-integral scaling identity for signature ``sig``.

    lhs is the integral with the given positive scale factors a_1..a_{m+1};
    rhs is (prod a_i^{delta_i})^{-s} times the same integral at all a_i = 1.
    """
    a = tuple(float(v) for v in a)
    if len(a) != sig.m + 1:
        raise DomainError(f"need {sig.m + 1} scale factors, got {len(a)}")
    if any(v <= 0 for v in a):
        raise DomainError("scale factors must be positive")
    n = sig.n_field
    if n * s / 2.0 <= 1.0:
        raise DomainError(f"need ns/2 > 1 for convergence (n={n}, s={s})")
    if sig.m > 2:
        raise DomainError(f"only m <= 2 supported, got m={sig.m}")
    exponent = n * s / 2.0
    scale = math.prod(ai ** di for ai, di in zip(a, sig.delta)) ** (-s)
    # all-complex fields use the plain product (t_1...t_m)^{-2} in the last
    # term; only mixed signatures carry the delta powers inside the integral
    inner_delta = sig.delta if sig.r >= 1 else (1,) * sig.m
    if sig.m == 1:
        lhs = _hecke_integral_1d(a[0], a[1], inner_delta[0], exponent, q)
        base = _hecke_integral_1d(1.0, 1.0, inner_delta[0], exponent, q)
    else:
        lhs = _hecke_integral_2d(a, inner_delta[:2], exponent, q)
        base = _hecke_integral_2d((1.0, 1.0, 1.0), inner_delta[:2], exponent, q)
    return lhs, scale * base
