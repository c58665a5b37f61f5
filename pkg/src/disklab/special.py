"""Bespoke near-boundary constructions and their sweeps.

The bump G(z) = (delta/(1 - zeta_bar z))^theta splits as G = G1 G2 with
G1 = G Lam^(-3/4), G2 = Lam^(3/4), Lam = 3i - log(1 - zeta_bar z); the
offset keeps Im(Lam) > 1 so every real power is single valued.  The two
factor norms scale like |log delta|^(-3/2) and |log delta|^(1/2), so their
product tracks L^(-1/2).

Also here: the slowly growing witness H, the square root of the
reproducing kernel, and the exact power-growth arithmetic for monomials.
All integrals run in coordinates centered at the boundary point 1, where
the integrands live.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .carleson import x_norm_monomial
from .geometry import DiskPoint
from .quadrature import QuadratureSpec, disk_integral_boundary, IntegralResult

__all__ = [
    "BumpSpec",
    "bump_g1",
    "bump_g2",
    "bump_g1_prime",
    "bump_g2_prime",
    "bump_factor_norms",
    "BumpNorms",
    "bump_derivative_pairing",
    "h_function",
    "HFunctionValue",
    "sqrt_kernel_norm",
    "SqrtKernelNorm",
    "power_growth_check",
    "PowerGrowthCell",
]


@dataclass(frozen=True)
class BumpSpec:
    center: DiskPoint
    theta: float
    offset: complex = 3j

    def __post_init__(self):
        if self.theta <= 0.0:
            raise ValueError("theta must be positive")
        if self.offset.imag <= 1.0 + 0.5 * math.pi:
            raise ValueError("offset too small to keep Im(Lam) > 1")

    @property
    def gamma(self):
        """1 - zeta for the real center of modulus |center|."""
        return self.center.delta / (1.0 + self.center.radius)


def _one_minus(spec, w):
    # 1 - zeta z at z = 1 + w, zeta real: gamma - zeta w
    return spec.gamma - spec.center.radius * w


def bump_g1(spec, w):
    """G1 at z = 1 + w."""
    om = _one_minus(spec, w)
    lam = spec.offset - np.log(om)
    return spec.center.delta**spec.theta * om ** (-spec.theta) * lam ** (-0.75)


def bump_g2(spec, w):
    """G2 at z = 1 + w."""
    om = _one_minus(spec, w)
    return (spec.offset - np.log(om)) ** 0.75


def bump_g1_prime(spec, w):
    """d/dz of G1 at z = 1 + w (chain rule gives the minus on the log term)."""
    zeta = spec.center.radius
    om = _one_minus(spec, w)
    lam = spec.offset - np.log(om)
    base = spec.center.delta**spec.theta * om ** (-spec.theta - 1.0)
    return zeta * base * (spec.theta * lam ** (-0.75) - 0.75 * lam ** (-1.75))


def bump_g2_prime(spec, w):
    zeta = spec.center.radius
    om = _one_minus(spec, w)
    lam = spec.offset - np.log(om)
    return 0.75 * zeta / (om * lam**0.25)


def _boundary_spec(gamma, rho_floor_factor=1e-6, nodes=12, angular=24):
    rho_min = max(rho_floor_factor * gamma, 1e-290)
    layers = max(8, int(math.ceil(math.log2(2.0 / rho_min))))
    return QuadratureSpec(
        radial_layers=layers,
        nodes_per_layer=nodes,
        angular_nodes=angular,
        inner_cutoff=1.0 - rho_min,
    )


@dataclass(frozen=True)
class BumpNorms:
    g1_sq: float
    g2_sq: float
    product_bound: float
    reference: float
    g1_error: float
    g2_error: float


def bump_factor_norms(spec, quad=None):
    """Squared factor norms |.(0)|^2 + int |.'|^2 dA plus the product bound.

    product_bound = sqrt(g1_sq * g2_sq) dominates the weak-product norm of
    the bump; reference = L^(-1/2).
    """
    quad = quad or _boundary_spec(spec.gamma)
    i1 = disk_integral_boundary(
        lambda w: np.abs(bump_g1_prime(spec, w)) ** 2, quad
    )
    i2 = disk_integral_boundary(
        lambda w: np.abs(bump_g2_prime(spec, w)) ** 2, quad
    )
    d = spec.center.delta
    g1_sq = d ** (2.0 * spec.theta) * 3.0**-1.5 + i1.value
    g2_sq = 3.0**1.5 + i2.value
    return BumpNorms(
        g1_sq=g1_sq,
        g2_sq=g2_sq,
        product_bound=math.sqrt(g1_sq * g2_sq),
        reference=1.0 / math.sqrt(spec.center.L),
        g1_error=i1.error_estimate,
        g2_error=i2.error_estimate,
    )


def bump_derivative_pairing(spec):
    """|dG/dz| at the center itself: theta |zeta| / delta, against 1/delta."""
    value = spec.theta * spec.center.radius / spec.center.delta
    reference = 1.0 / spec.center.delta
    return value, reference, value / reference


@dataclass(frozen=True)
class HFunctionValue:
    value: float
    reference: float
    deviation: float
    error_estimate: float


def h_function(zeta, panels=12, nodes=32, u_pad=40.0):
    """H(zeta) = int_{1/2}^1 log(1/(1 - zeta x)) dx/((1-x) log^2(1-x)).

    Evaluated in u = -log(1-x); the integral is cut at u* + u_pad with
    u* = -log(1-zeta), and the analytic remainder bound joins the error
    estimate.  Tracks log|log(1-zeta)| with bounded deviation.
    """
    if not 0.0 <= zeta < 1.0:
        raise ValueError("zeta must lie in [0, 1)")
    gamma = 1.0 - zeta
    u_a = math.log(2.0)
    u_star = -math.log1p(-zeta) if zeta > 0.0 else 0.0
    u_max = u_star + u_pad

    def integrand(u):
        val = gamma + zeta * np.exp(-u)
        return -np.log(val) / u**2

    def run(p, n):
        knots = [u_a]
        if u_a < u_star < u_max:
            knots.append(u_star)
        knots.append(u_max)
        xg, wg = np.polynomial.legendre.leggauss(n)
        total = 0.0
        for a, b in zip(knots[:-1], knots[1:]):
            bounds = a * (b / a) ** (np.arange(p + 1) / p)
            for lo, hi in zip(bounds[:-1], bounds[1:]):
                half = 0.5 * (hi - lo)
                u = lo + half * (xg + 1.0)
                total += float(np.sum(integrand(u) * half * wg))
        return total

    coarse = run(panels, nodes)
    fine = run(2 * panels, 2 * nodes)
    tail = (abs(math.log(gamma)) + math.log(2.0)) / u_max if zeta > 0.0 else 0.0
    reference = math.log(u_star) if u_star > 0.0 else -math.inf
    return HFunctionValue(
        value=fine,
        reference=reference,
        deviation=fine - reference,
        error_estimate=abs(fine - coarse) + tail,
    )


_PHI_TERMS = 56
_PHI_COEFFS = 1.0 / np.arange(1, _PHI_TERMS + 2)          # phi(y) = sum y^n/(n+1)
_PHI_PRIME_COEFFS = np.arange(1, _PHI_TERMS + 1) / np.arange(2, _PHI_TERMS + 2)


def _phi(y):
    """-log(1-y)/y continued through y = 0."""
    y = np.asarray(y, dtype=complex)
    out = np.empty_like(y)
    small = np.abs(y) < 0.5
    ys = y[small]
    acc = np.zeros_like(ys)
    for c in _PHI_COEFFS[::-1]:
        acc = acc * ys + c
    out[small] = acc
    yl = y[~small]
    out[~small] = -np.log(1.0 - yl) / yl
    return out


def _phi_prime(y):
    y = np.asarray(y, dtype=complex)
    out = np.empty_like(y)
    small = np.abs(y) < 0.5
    ys = y[small]
    acc = np.zeros_like(ys)
    for c in _PHI_PRIME_COEFFS[::-1]:
        acc = acc * ys + c
    out[small] = acc
    yl = y[~small]
    out[~small] = (1.0 / (1.0 - yl) + np.log(1.0 - yl) / yl) / yl
    return out


@dataclass(frozen=True)
class SqrtKernelNorm:
    value_sq: float
    reference: float
    ratio: float
    error_estimate: float


def sqrt_kernel_norm(center, quad=None):
    """Squared norm of the principal square root of the kernel at the center.

    value_sq = |k(0)| + int |k'|^2/(4|k|) dA, compared against log(1 + L).
    The kernel never vanishes on the disk, so the integrand is smooth.
    """
    zeta = center.radius
    gamma = center.delta / (1.0 + zeta)
    if zeta == 0.0:
        res = IntegralResult(0.0, 0.0)
    else:

        def integrand(w):
            y = zeta * (1.0 + w)
            kp = zeta * _phi_prime(y)
            return np.abs(kp) ** 2 / (4.0 * np.abs(_phi(y)))

        quad_spec = quad or _boundary_spec(gamma, rho_floor_factor=1e-5)
        res = disk_integral_boundary(integrand, quad_spec)
    value_sq = 1.0 + res.value
    reference = math.log1p(center.L)
    return SqrtKernelNorm(
        value_sq=value_sq,
        reference=reference,
        ratio=value_sq / reference,
        error_estimate=res.error_estimate,
    )


@dataclass(frozen=True)
class PowerGrowthCell:
    k: int
    lhs: int
    rhs: int

    @property
    def ok(self):
        return self.lhs <= self.rhs


def power_growth_check(n, k_max):
    """Exact integer growth chain for powers of z^n.

    lhs is the gradient form of z^(n(k+1)), namely n(k+1); rhs is
    (k+1)^2 times the squared derivative-measure norm of z^n (exactly n)
    times the pinned form of z^(nk) (nk for k >= 1, 1 for k = 0).  The
    inequality lhs <= rhs holds on the whole grid with equality at k = 0.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    x_sq = x_norm_monomial(n) ** 2
    if abs(x_sq - n) > 1e-9 * n:
        raise AssertionError("monomial norm drifted from its exact value")
    cells = []
    for k in range(k_max + 1):
        lhs = n * (k + 1)
        rhs = (k + 1) ** 2 * n * (n * k if k >= 1 else 1)
        cells.append(PowerGrowthCell(k=k, lhs=lhs, rhs=rhs))
    return cells
