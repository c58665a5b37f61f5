"""Deterministic quadrature on the disk and on radial segments.

Area measure is Lebesgue/pi, so the disk has measure one and
int |z|^(2k) dA = 1/(k+1).

Two disk modes:

  * disk_integral: polar about the origin, radial layers graded
    geometrically toward |z| = 1, Gauss-Legendre radially, uniform
    trapezoid angularly.  Right for integrands whose angular profile is a
    trigonometric polynomial or smooth (moment checks, weighted symbol
    integrals).
  * disk_integral_boundary: polar about the boundary point 1, with dyadic
    annuli in w = z - 1 shrinking toward w = 0 and Gauss-Legendre nodes in
    both the modulus and the arc.  Right for integrands concentrated at a
    boundary point; the integrand callback receives w itself so no
    precision is lost re-deriving it from z.

Every integral is evaluated on the requested grid and once more with
doubled node counts; the difference is the reported error estimate.
No randomness anywhere.
"""

import math
from dataclasses import dataclass, asdict
from functools import lru_cache

import numpy as np

__all__ = [
    "QuadratureSpec",
    "QuadratureError",
    "IntegralResult",
    "disk_integral",
    "disk_integral_boundary",
    "radial_integral",
]


class QuadratureError(RuntimeError):
    """Raised when successive refinements disagree beyond the requested tolerance."""


@dataclass(frozen=True)
class QuadratureSpec:
    radial_layers: int = 12
    nodes_per_layer: int = 32
    angular_nodes: int = 64
    inner_cutoff: float = 1.0 - 2.0**-11

    def __post_init__(self):
        if min(self.radial_layers, self.nodes_per_layer, self.angular_nodes) < 1:
            raise ValueError("all node counts must be >= 1")
        if not 0.0 < self.inner_cutoff < 1.0:
            raise ValueError("inner_cutoff must lie in (0, 1)")

    def refined(self):
        return QuadratureSpec(
            self.radial_layers,
            2 * self.nodes_per_layer,
            2 * self.angular_nodes,
            self.inner_cutoff,
        )

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, d):
        return cls(**d)


@dataclass(frozen=True)
class IntegralResult:
    value: float
    error_estimate: float


@lru_cache(maxsize=128)
def _gauss(n):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def _layer_boundaries(spec, lo, hi):
    """lo plus points approaching hi with geometrically shrinking gaps."""
    L = spec.radial_layers
    if L == 1:
        return np.array([lo, hi])
    gap_min = 1.0 - spec.inner_cutoff
    q = gap_min ** (1.0 / (L - 1))
    bounds = [lo]
    width = hi - lo
    for m in range(1, L):
        bounds.append(hi - width * q**m)
    bounds.append(hi)
    return np.asarray(bounds)


def _radial_mesh(spec, lo, hi):
    bounds = _layer_boundaries(spec, lo, hi)
    x, w = _gauss(spec.nodes_per_layer)
    nodes, weights = [], []
    for a, b in zip(bounds[:-1], bounds[1:]):
        half = 0.5 * (b - a)
        nodes.append(a + half * (x + 1.0))
        weights.append(half * w)
    return np.concatenate(nodes), np.concatenate(weights)


def _disk_value(F, spec):
    r, wr = _radial_mesh(spec, 0.0, 1.0)
    K = spec.angular_nodes
    theta = 2.0 * np.pi * np.arange(K) / K
    z = r[:, None] * np.exp(1j * theta)[None, :]
    vals = np.asarray(F(z), dtype=float)
    # (1/pi) * int F r dr dtheta, trapezoid weight 2pi/K
    return float(np.sum(vals.sum(axis=1) * r * wr) * 2.0 / K)


def disk_integral(F, spec=None, tol=None):
    """Integrate F over the disk against normalized area measure.

    F is called with a complex ndarray and must return real values of the
    same shape.
    """
    spec = spec or QuadratureSpec()
    coarse = _disk_value(F, spec)
    fine = _disk_value(F, spec.refined())
    err = abs(fine - coarse)
    if tol is not None and err > tol:
        raise QuadratureError(f"refinement gap {err:.3e} exceeds tolerance {tol:.3e}")
    return IntegralResult(value=fine, error_estimate=err)


def _boundary_value(Fw, spec):
    rho_min = 1.0 - spec.inner_cutoff
    L = spec.radial_layers
    # geometric layers up to |w| = 1, then quadratically refined layers
    # toward |w| = 2 where the arc length has a square-root edge
    bounds = list(rho_min * (1.0 / rho_min) ** (np.arange(L + 1) / L))
    bounds[-1] = 1.0
    bounds.extend(2.0 - 4.0 ** -np.arange(1, 11, dtype=float))
    bounds.append(2.0)
    bounds = np.asarray(bounds)
    xr, wr = _gauss(spec.nodes_per_layer)
    xs, ws = _gauss(spec.angular_nodes)
    s = 0.5 * (xs + 1.0)
    total = 0.0
    for a, b in zip(bounds[:-1], bounds[1:]):
        half = 0.5 * (b - a)
        rho = a + half * (xr + 1.0)
        psi0 = np.arccos(np.clip(-0.5 * rho, -1.0, 1.0))
        span = 2.0 * np.pi - 2.0 * psi0
        psi = psi0[:, None] + span[:, None] * s[None, :]
        w = rho[:, None] * np.exp(1j * psi)
        vals = np.asarray(Fw(w), dtype=float)
        inner = vals @ (0.5 * ws)
        total += float(np.sum(inner * rho * span * (half * wr)))
    return total / np.pi


def disk_integral_boundary(Fw, spec=None, tol=None):
    """Integrate F over the disk in coordinates w = z - 1 centered at the
    boundary point 1.

    Fw is called with the offset w (complex ndarray with |1 + w| < 1) and
    must return real values.  The cap |w| < 1 - inner_cutoff is not meshed;
    its worst sampled value times its area is folded into the error
    estimate.
    """
    spec = spec or QuadratureSpec(radial_layers=40, inner_cutoff=1.0 - 1e-12)
    coarse = _boundary_value(Fw, spec)
    fine = _boundary_value(Fw, spec.refined())
    rho_min = 1.0 - spec.inner_cutoff
    psi_s = np.linspace(0.55 * np.pi, 1.45 * np.pi, 9)
    samples = np.asarray(Fw(0.5 * rho_min * np.exp(1j * psi_s)), dtype=float)
    neglect = 0.5 * rho_min**2 * float(np.max(np.abs(samples)))
    err = abs(fine - coarse) + neglect
    if tol is not None and err > tol:
        raise QuadratureError(f"refinement gap {err:.3e} exceeds tolerance {tol:.3e}")
    return IntegralResult(value=fine, error_estimate=err)


def _segment_value(G, spec, lo, hi, weight):
    x, w = _radial_mesh(spec, lo, hi)
    vals = np.asarray(G(x), dtype=float)
    if weight is not None:
        vals = vals * np.asarray(weight(x), dtype=float)
    return float(np.sum(vals * w))


def _log_sub_value(G, spec, lo, hi, weight, u_max):
    ua = -math.log1p(-lo)
    ub = u_max if hi >= 1.0 else -math.log1p(-hi)
    if ub <= ua:
        return 0.0
    if ua <= 0.0:
        raise ValueError("log substitution needs a positive lower endpoint gap")
    L = spec.radial_layers
    bounds = ua * (ub / ua) ** (np.arange(L + 1) / L)
    xg, wg = _gauss(spec.nodes_per_layer)
    total = 0.0
    for a, b in zip(bounds[:-1], bounds[1:]):
        half = 0.5 * (b - a)
        u = a + half * (xg + 1.0)
        gap = np.exp(-u)
        vals = np.asarray(G(gap), dtype=float)
        if weight is not None:
            vals = vals * np.asarray(weight(gap), dtype=float)
        total += float(np.sum(vals * gap * half * wg))
    return total


def radial_integral(
    G,
    spec=None,
    weight=None,
    interval=(0.0, 1.0),
    log_substitution=False,
    u_max=None,
    tol=None,
):
    """Integrate G(x) * weight(x) over a subinterval of [0, 1).

    With log_substitution=True the variable u = -log(1-x) is used, which
    tames weights with log singularities at 1; an open right endpoint then
    requires u_max.  In that mode G (and weight) receive the exact boundary
    gap 1-x instead of x, since x itself saturates at 1 in floating point.
    """
    spec = spec or QuadratureSpec()
    lo, hi = interval
    if not 0.0 <= lo < hi <= 1.0:
        raise ValueError("interval must satisfy 0 <= lo < hi <= 1")
    if log_substitution:
        if hi >= 1.0 and u_max is None:
            raise ValueError("u_max is required when the interval reaches 1")
        coarse = _log_sub_value(G, spec, lo, hi, weight, u_max)
        fine = _log_sub_value(G, spec.refined(), lo, hi, weight, u_max)
    else:
        if hi >= 1.0:
            hi = 1.0
        coarse = _segment_value(G, spec, lo, hi, weight)
        fine = _segment_value(G, spec.refined(), lo, hi, weight)
    err = abs(fine - coarse)
    if tol is not None and err > tol:
        raise QuadratureError(f"refinement gap {err:.3e} exceeds tolerance {tol:.3e}")
    return IntegralResult(value=fine, error_estimate=err)
