"""Interpolating-sequence diagnostics and kernel interpolation.

A sequence is workable for interpolation when its points stay apart in the
hyperbolic metric relative to their distance from the origin and when the
associated measure sum 1/L(z_j) delta_{z_j} embeds.  Both are computed
here, with Gram matrices assembled from closed-form kernel pairings so
that gaps as small as exp(-2^j) cost nothing in accuracy.
"""

import math
from dataclasses import dataclass

import numpy as np

from .carleson import ComplexAtomicMeasure, RadialMeasure
from .geometry import ORIGIN, DiskPoint, hyperbolic
from .kernels import kernel_dot

__all__ = [
    "PointSequence",
    "GramError",
    "separation_constant",
    "mu_Z",
    "mu_Z_radial",
    "gram",
    "interp_diagnostics",
    "d_interpolate",
    "dd_interpolate",
]


class GramError(RuntimeError):
    pass


class PointSequence:
    """Pairwise distinct points of the open disk, with 1/L weights cached."""

    def __init__(self, points):
        pts = tuple(points)
        if not pts:
            raise ValueError("need at least one point")
        seen = set()
        for p in pts:
            key = (p.arg, p.delta)
            if key in seen:
                raise ValueError("points must be pairwise distinct")
            seen.add(key)
        self.points = pts
        self.weights = np.asarray([1.0 / p.L for p in pts])

    def __len__(self):
        return len(self.points)

    def collinear(self):
        return all(p.arg == self.points[0].arg for p in self.points)


def separation_constant(Z):
    """max over ordered pairs of beta(0, z_i) / beta(z_i, z_j).

    The symmetric maximum is used; duplicates would make it infinite and
    are already excluded by construction.
    """
    pts = Z.points
    if len(pts) < 2:
        raise ValueError("need at least two points")
    beta0 = [hyperbolic(ORIGIN, p) for p in pts]
    worst = 0.0
    for i in range(len(pts)):
        for j in range(len(pts)):
            if i == j:
                continue
            gap = hyperbolic(pts[i], pts[j])
            if gap == 0.0:
                return math.inf
            worst = max(worst, beta0[i] / gap)
    return worst


def mu_Z(Z):
    """The associated measure: weight 1/L(z_j) at each point."""
    return ComplexAtomicMeasure(Z.points, Z.weights.astype(complex))


def mu_Z_radial(Z):
    """Radial projection for a sequence on one ray, gaps kept exact."""
    if not Z.collinear():
        raise ValueError("radial projection needs points on a common ray")
    atoms = []
    gaps = []
    for p, w in zip(Z.points, Z.weights):
        atoms.append((p.radius, w))
        gaps.append(-math.expm1(p.log_gap) if p.radius > 0.99 else 1.0 - p.radius)
    return RadialMeasure(atoms, gaps=np.asarray(gaps))


def gram(Z, normalize=False):
    """G_ij = <k_{z_j}, k_{z_i}> through closed forms; optionally normalized."""
    n = len(Z)
    G = np.empty((n, n), dtype=complex)
    for i, p in enumerate(Z.points):
        for j, q in enumerate(Z.points):
            if j < i:
                G[i, j] = np.conj(G[j, i])
            else:
                G[i, j] = kernel_dot(q, p)
    if normalize:
        scale = 1.0 / np.sqrt(np.real(np.diag(G)))
        G = G * scale[:, None] * scale[None, :]
    return G


@dataclass(frozen=True)
class InterpDiagnostics:
    lambda_min: float
    lambda_max: float
    onto_constant: float


def interp_diagnostics(Z):
    """Extreme eigenvalues of the normalized Gram; 1/sqrt(lambda_min) gauges
    how far restriction is from being onto."""
    Ghat = gram(Z, normalize=True)
    evals = np.linalg.eigvalsh(Ghat)
    lam_min, lam_max = float(evals[0]), float(evals[-1])
    if lam_min <= 0.0:
        raise GramError(f"normalized Gram not positive definite: {lam_min:.3e}")
    return InterpDiagnostics(
        lambda_min=lam_min, lambda_max=lam_max, onto_constant=1.0 / math.sqrt(lam_min)
    )


@dataclass(frozen=True)
class DInterpolant:
    sequence: PointSequence
    coefficients: np.ndarray
    values: np.ndarray
    norm: float
    residuals: np.ndarray
    condition: float

    def node_values(self):
        return self.values

    def evaluate(self, z):
        """Value of sum c_j k_{z_j} at an interior point."""
        pt = z if isinstance(z, DiskPoint) else DiskPoint.from_complex(z)
        ks = np.asarray([kernel_dot(p, pt) for p in self.sequence.points])
        return complex(np.sum(self.coefficients * ks))


def d_interpolate(Z, values, cond_cap=1e12):
    """Minimum-norm interpolant in the span of the kernels at Z.

    Solves G c = v; the interpolant F = sum c_j k_{z_j} matches the data at
    every node and has squared norm v* G^{-1} v.
    """
    v = np.asarray(values, dtype=complex)
    if v.size != len(Z):
        raise ValueError("one value per point")
    G = gram(Z)
    cond = float(np.linalg.cond(G))
    if not np.isfinite(cond) or cond > cond_cap:
        raise GramError(f"Gram condition {cond:.3e} beyond {cond_cap:.1e}")
    c = np.linalg.solve(G, v)
    fitted = G @ c
    norm_sq = float(np.real(np.vdot(v, c)))
    return DInterpolant(
        sequence=Z,
        coefficients=c,
        values=fitted,
        norm=math.sqrt(max(norm_sq, 0.0)),
        residuals=np.abs(fitted - v),
        condition=cond,
    )


@dataclass(frozen=True)
class DDInterpolant:
    b: DInterpolant
    g: DInterpolant
    product_bound: float
    pointwise_errors: np.ndarray

    def evaluate(self, z):
        return self.b.evaluate(z) * self.g.evaluate(z)


def dd_interpolate(Z, alpha):
    """Product interpolant through the square-root trick.

    Targets split as beta_i = |alpha_i|^(1/2) and
    gamma_i = |alpha_i|^(1/2) alpha_i/|alpha_i| (zero stays zero); the two
    minimum-norm interpolants multiply back to alpha at every node, and
    ||b|| ||g|| bounds the weak-product norm of one interpolant of the data.
    """
    a = np.asarray(alpha, dtype=complex)
    if a.size != len(Z):
        raise ValueError("one target per point")
    mod = np.abs(a)
    beta = np.sqrt(mod)
    with np.errstate(invalid="ignore", divide="ignore"):
        phase = np.where(mod > 0.0, a / np.where(mod > 0.0, mod, 1.0), 0.0)
    gamma = beta * phase
    b = d_interpolate(Z, beta)
    g = d_interpolate(Z, gamma)
    errors = np.abs(b.values * g.values - a)
    return DDInterpolant(
        b=b, g=g, product_bound=b.norm * g.norm, pointwise_errors=errors
    )
