"""Real-argument special functions: Gamma, Riemann zeta, the K-integral kernel.

The zeta implementation is Euler-Maclaurin away from the pole and switches
to the Stieltjes expansion inside |x - 1| < 1e-4, so values arbitrarily
close to 1 stay accurate.  The K-integral uses the substitution t = e^u,
after which the integrand decays double-exponentially and the doubling
trapezoid rule converges spectrally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, PoleError

EULER_GAMMA = 0.5772156649015329

# Stieltjes constants gamma_1 .. gamma_4; zeta(1+u) = 1/u + sum (-u)^k gamma_k / k!
_STIELTJES = (
    -0.07281584548367673,
    -0.009690363192872318,
    0.0020538344203033458,
    0.0023253700654673,
)

# B_2, B_4, ..., B_16
_BERNOULLI = (
    1.0 / 6,
    -1.0 / 30,
    1.0 / 42,
    -1.0 / 30,
    5.0 / 66,
    -691.0 / 2730,
    7.0 / 6,
    -3617.0 / 510,
)


@dataclass(frozen=True)
class QuadratureSpec:
    relative_tolerance: float = 1e-12
    max_refinements: int = 12

    def __post_init__(self):
        if self.relative_tolerance < 1e-14:
            raise DomainError("relative_tolerance must be >= 1e-14")
        if self.max_refinements < 1:
            raise DomainError("max_refinements must be >= 1")


DEFAULT_QUADRATURE = QuadratureSpec()


def euler_gamma() -> float:
    """The Euler-Mascheroni constant."""
    return EULER_GAMMA


def gamma_real(x: float) -> float:
    """Gamma(x) for positive real x."""
    if x <= 0:
        raise DomainError(f"gamma_real requires x > 0, got {x}")
    return math.gamma(x)


def riemann_zeta(x: float) -> float:
    """zeta(x) for real x > 0, x != 1, by analytic continuation."""
    if x == 1:
        raise PoleError("zeta has a pole at x = 1")
    if x <= 0:
        raise DomainError(f"riemann_zeta requires x > 0, got {x}")
    u = x - 1.0
    if abs(u) < 1e-4:
        acc = 1.0 / u + EULER_GAMMA
        term = 1.0
        for k, g in enumerate(_STIELTJES, start=1):
            term *= -u / k
            acc += g * term
        return acc
    # Euler-Maclaurin with N leading terms and Bernoulli corrections
    big_n = 32
    acc = sum(k ** (-x) for k in range(1, big_n))
    acc += big_n ** (1.0 - x) / (x - 1.0) + 0.5 * big_n ** (-x)
    rising = x
    power = big_n ** (-x - 1.0)
    for j, b2j in enumerate(_BERNOULLI, start=1):
        acc += b2j / math.factorial(2 * j) * rising * power
        rising *= (x + 2 * j - 1) * (x + 2 * j)
        power /= big_n * big_n
    return acc


def _refine_trapezoid(values_on, lo, hi, q: QuadratureSpec, label: str):
    """Doubling trapezoid rule for a vectorized integrand on [lo, hi].

    ``values_on`` maps a grid array to integrand values (last axis = grid);
    the result keeps any leading batch axes.
    """
    npts = max(64, int((hi - lo) / 0.5))
    grid = np.linspace(lo, hi, npts + 1)
    vals = values_on(grid)
    est = np.trapezoid(vals, grid, axis=-1)
    prev = None
    for _ in range(q.max_refinements):
        npts *= 2
        grid = np.linspace(lo, hi, npts + 1)
        vals = values_on(grid)
        prev, est = est, np.trapezoid(vals, grid, axis=-1)
        scale = np.maximum(np.abs(est), 1e-300)
        if np.all(np.abs(est - prev) <= q.relative_tolerance * scale):
            return est
    raise ConvergenceError(
        f"{label}: trapezoid did not converge in {q.max_refinements} refinements",
        previous=prev,
        last=est,
    )


def _bracket(phi, u_center: float, drop: float = 48.0):
    """Expand [lo, hi] around u_center until phi exceeds its minimum by `drop`."""
    # walk downhill to the minimum first: the center is only an estimate
    lo = hi = u_center
    pmin = phi(u_center)
    step = 1.0
    while phi(lo - step) < pmin:
        lo -= step
        pmin = phi(lo)
    while phi(hi + step) < pmin:
        hi += step
        pmin = phi(hi)
    while phi(lo) - pmin < drop:
        lo -= step
        step *= 1.5
    step = 1.0
    while phi(hi) - pmin < drop:
        hi += step
        step *= 1.5
    return lo, hi, pmin


def k_integral_batch(s: float, a: float, b, q: QuadratureSpec = DEFAULT_QUADRATURE):
    """K_s(a, b_i) for one a and an array of b values, on a shared grid."""
    b = np.asarray(b, dtype=float)
    if a <= 0 or np.any(b <= 0):
        raise DomainError("k_integral requires a > 0 and b > 0")
    bmin, bmax = float(b.min()), float(b.max())

    def phi_of(bv):
        return lambda u: a * a * math.exp(u) + bv * bv * math.exp(-u) - s * u

    # smallest b sets the left cutoff, largest b the right one
    lo, hi, _ = _bracket(phi_of(bmin), math.log(bmin / a))
    lo2, hi2, _ = _bracket(phi_of(bmax), math.log(bmax / a))
    lo = min(lo, lo2)
    hi = max(hi, hi2)
    # per-element exponent shift keeps tiny results at full relative accuracy
    shift = -2.0 * a * b + s * np.log(b / a)

    def integrand(grid):
        eu = np.exp(grid)
        expo = (
            -a * a * eu[np.newaxis, :]
            - np.outer(b * b, np.exp(-grid))
            + s * grid[np.newaxis, :]
            - shift[:, np.newaxis]
        )
        return np.exp(expo)

    core = _refine_trapezoid(integrand, lo, hi, q, "k_integral")
    return core * np.exp(shift)


def k_integral(s: float, a: float, b: float, q: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """K_s(a,b) = int_0^inf exp(-(a^2 t + b^2/t)) t^s dt/t."""
    return float(k_integral_batch(s, a, np.array([b]), q)[0])


def gamma_integral_check(s: float, a: float, q: QuadratureSpec = DEFAULT_QUADRATURE):
    """Both sides of pi^{-s} Gamma(s) / a^s = int_0^inf exp(-pi a t) t^s dt/t.

    Returns (closed_form, quadrature); comparing them is the caller's job.
    """
    if s <= 0 or a <= 0:
        raise DomainError("gamma_integral_check requires s > 0 and a > 0")
    lhs = math.pi ** (-s) * math.gamma(s) / a ** s

    def phi(u):
        return math.pi * a * math.exp(u) - s * u

    lo, hi, pmin = _bracket(phi, math.log(s / (math.pi * a)), drop=60.0)

    def integrand(grid):
        return np.exp(-(math.pi * a * np.exp(grid) - s * grid) + pmin)

    rhs = float(_refine_trapezoid(integrand, lo, hi, q, "gamma_integral")) * math.exp(-pmin)
    return lhs, rhs
