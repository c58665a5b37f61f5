"""Carleson data for rotation-invariant measures, and measure transforms.

A RadialMeasure stands for the rotation-invariant measure whose radial
marginal is a finite atomic measure on [0, 1).  For such measures the
embedding constant against the Dirichlet norm diagonalizes over monomials:

    norm^2 = max_k m_k / (k+1),   m_k = sum_i w_i r_i^(2k),

and the scan below certifies the maximum before stopping.  Measures backed
by an exact moment formula (for instance |d(z^n)/dz|^2 dA, with
m_k = n^2/(k+n)) go through the same scan.

Also here: the segment sufficient condition sup_x mu([x,1)) |log(1-x)|,
coefficient membership surrogates, the analytic projection of an atomic
measure, its balayage, and the coefficient majorant of a factorization.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from .geometry import DiskPoint
from .series import (
    AnalyticPoly,
    dirichlet_norm,
    modulus_coeffs,
    multiply,
)

__all__ = [
    "RadialMeasure",
    "RadialMomentSequence",
    "ComplexAtomicMeasure",
    "CarlesonNorm",
    "cm_norm_radial",
    "cm_embedding_check",
    "segment_sufficient_constant",
    "x_norm_monomial",
    "x_norm_monomial_sq",
    "monomial_derivative_measure",
    "x_sufficient_tests",
    "dirichlet_projection",
    "balayage",
    "majorant",
    "load_radial_measure",
    "load_atomic_measure",
]


class RadialMeasure:
    """Nonnegative atoms (r_i, w_i) with r_i in [0, 1).

    gaps optionally stores 1 - r_i exactly for atoms produced from
    near-boundary points, where r_i itself has rounded to within an ulp
    of 1.
    """

    def __init__(self, atoms, gaps=None):
        atoms = list(atoms)
        self.radii = np.asarray([a[0] for a in atoms], dtype=float)
        self.weights = np.asarray([a[1] for a in atoms], dtype=float)
        if np.any(self.weights < 0.0):
            raise ValueError("weights must be nonnegative")
        if np.any((self.radii < 0.0) | (self.radii >= 1.0)):
            raise ValueError("radii must lie in [0, 1)")
        if gaps is not None:
            gaps = np.asarray(gaps, dtype=float)
            if gaps.shape != self.radii.shape or np.any(gaps <= 0.0):
                raise ValueError("gaps must be positive, one per atom")
        self.gaps = gaps

    @property
    def r_sup(self):
        return float(self.radii.max()) if self.radii.size else 0.0

    def mass(self):
        return float(self.weights.sum())

    def moment(self, k):
        return float(np.sum(self.weights * self.radii ** (2 * k)))

    def moments(self, ks):
        ks = np.asarray(ks)
        if self.radii.size == 0:
            return np.zeros(ks.shape)
        return self.weights @ (self.radii[:, None] ** (2 * ks[None, :]))

    def scaled(self, c):
        if c < 0.0:
            raise ValueError("scale must be nonnegative")
        return RadialMeasure(list(zip(self.radii, c * self.weights)), gaps=self.gaps)


class RadialMomentSequence:
    """Rotation-invariant measure known through its exact moments m_k."""

    def __init__(self, moment_fn, r_sup=1.0, description=""):
        self.moment_fn = moment_fn
        self.r_sup = float(r_sup)
        self.description = description

    def mass(self):
        return self.moment(0)

    def moment(self, k):
        return float(self.moment_fn(np.asarray(k, dtype=float)))

    def moments(self, ks):
        return np.asarray(self.moment_fn(np.asarray(ks, dtype=float)), dtype=float)


@dataclass(frozen=True)
class CarlesonNorm:
    norm: float
    norm_sq: float
    argmax_k: int


def cm_norm_radial(mu, block=4096):
    """Exact embedding constant of a rotation-invariant measure.

    Scans A_k^2 = m_k/(k+1); since m_k is nonincreasing and bounded by
    m_0 * r_sup^(2k), the remainder beyond k is at most
    m_0 * min(1, r_sup^(2(k+1)))/(k+2), and the scan stops as soon as that
    certificate falls to the running maximum.
    """
    m0 = mu.moment(0)
    if m0 == 0.0:
        return CarlesonNorm(0.0, 0.0, 0)
    r2 = min(mu.r_sup * mu.r_sup, 1.0)
    best = -math.inf
    best_k = 0
    k0 = 0
    while True:
        ks = np.arange(k0, k0 + block)
        vals = mu.moments(ks) / (ks + 1.0)
        i = int(np.argmax(vals))
        if vals[i] > best:
            best = float(vals[i])
            best_k = int(ks[i])
        k_last = k0 + block - 1
        decay = r2 ** (k_last + 1) if r2 < 1.0 else 1.0
        if m0 * decay / (k_last + 2) <= best:
            break
        k0 += block
    return CarlesonNorm(norm=math.sqrt(best), norm_sq=best, argmax_k=best_k)


@dataclass(frozen=True)
class EmbeddingCheck:
    worst_ratio: float
    norm: float
    argmax_ratio: float


def cm_embedding_check(mu, trials=1000, seed=0, degree=48):
    """Worst embedding ratio over random polynomials; never exceeds the norm.

    The monomial z^argmax attains the norm exactly and is always included.
    """
    cn = cm_norm_radial(mu)
    ks = np.arange(max(degree, cn.argmax_k) + 1)
    mk = mu.moments(ks)
    weights = ks + 1.0
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        a = rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)
        num = math.sqrt(float(np.sum(np.abs(a[: ks.size]) ** 2 * mk[: a.size])))
        den = math.sqrt(float(np.sum(weights[: a.size] * np.abs(a) ** 2)))
        worst = max(worst, num / den)
    argmax_ratio = math.sqrt(mk[cn.argmax_k] / (cn.argmax_k + 1.0))
    worst = max(worst, argmax_ratio)
    return EmbeddingCheck(worst_ratio=worst, norm=cn.norm, argmax_ratio=argmax_ratio)


def segment_sufficient_constant(mu):
    """sup over atom radii x of mu([x, 1)) * |log(1-x)| for atoms in [1/2, 1).

    Finiteness certifies the embedding property for segment-supported
    measures; no relation to the exact norm is claimed.
    """
    if not isinstance(mu, RadialMeasure):
        raise TypeError("segment condition needs an atomic radial measure")
    if mu.radii.size == 0 or mu.mass() == 0.0:
        return 0.0
    if np.any(mu.radii < 0.5):
        raise ValueError("all atoms must lie in [1/2, 1)")
    gaps = mu.gaps if mu.gaps is not None else 1.0 - mu.radii
    order = np.argsort(mu.radii)[::-1]
    tails = np.cumsum(mu.weights[order])
    return float(np.max(tails * (-np.log(gaps[order]))))


def monomial_derivative_measure(n):
    """The measure |d(z^n)/dz|^2 dA, through its exact moments n^2/(k+n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return RadialMomentSequence(
        lambda ks: float(n) ** 2 / (ks + float(n)),
        r_sup=1.0,
        description=f"|d(z^{n})/dz|^2 dA",
    )


def x_norm_monomial(n, c=1.0):
    """Norm of c z^n in the Carleson-derivative scale: |c| sqrt(n) exactly."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return abs(c)
    cn = cm_norm_radial(monomial_derivative_measure(n))
    return abs(c) * cn.norm


def x_norm_monomial_sq(n):
    """Squared norm of z^n: exactly n, with the certified argmax at k = 0."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return cm_norm_radial(monomial_derivative_measure(n))


@dataclass(frozen=True)
class XSufficiency:
    cond_2a: float
    cond_2b: float


def x_sufficient_tests(b):
    """Surrogates for the two coefficient-decay membership conditions.

    cond_2a = sup_n |b_n| (n+1)(1+log(n+1)); cond_2b = sum n log(n+1)|b_n|^2.
    """
    a = np.abs(b.coeffs)
    n = np.arange(a.size, dtype=float)
    cond_a = float(np.max(a * (n + 1.0) * (1.0 + np.log(n + 1.0)))) if a.size else 0.0
    cond_b = float(np.sum(n * np.log(n + 1.0) * a**2))
    return XSufficiency(cond_2a=cond_a, cond_2b=cond_b)


class ComplexAtomicMeasure:
    """Finite atomic measure with complex weights at disk points."""

    def __init__(self, points, weights):
        self.points = tuple(points)
        self.weights = np.asarray(weights, dtype=complex)
        if len(self.points) != self.weights.size:
            raise ValueError("one weight per point")

    def mass(self):
        return complex(self.weights.sum())

    def total_variation(self):
        return float(np.sum(np.abs(self.weights)))

    def scaled(self, c):
        return ComplexAtomicMeasure(self.points, c * self.weights)

    def locations(self):
        return np.asarray([p.z for p in self.points], dtype=complex)


def dirichlet_projection(mu, N):
    """Analytic projection of the conjugated measure, truncated at degree N.

    Coefficients: c_n = conj(sum_i w_i z_i^n)/n for n = 1..N, c_0 = 0.
    A unit atom at a yields the tilde kernel -log(1 - conj(a) w).
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    zs = mu.locations()
    coeffs = np.zeros(N + 1, dtype=complex)
    if zs.size:
        ns = np.arange(1, N + 1)
        powers = zs[:, None] ** ns[None, :]
        coeffs[1:] = np.conj(mu.weights @ powers) / ns
    return AnalyticPoly(coeffs)


def balayage(mu, point):
    """int (pi + arg(1 - w conj(z))) dmu(z) at w = point, principal branch.

    Requires real nonnegative weights.  Against the projection it satisfies
    balayage + Im(projection at w) = pi * mass.
    """
    w = np.asarray(mu.weights)
    if np.any(np.abs(w.imag) > 0.0) or np.any(w.real < 0.0):
        raise ValueError("balayage needs real nonnegative weights")
    z = point.z if isinstance(point, DiskPoint) else complex(point)
    args = np.angle(1.0 - z * np.conj(mu.locations()))
    return float(np.sum(w.real * (np.pi + args)))


@dataclass(frozen=True)
class Majorant:
    b: AnalyticPoly
    bound: float


def majorant(factorization):
    """Coefficientwise majorant of a factorization.

    b = sum of products of modulus series; every coefficient of the target
    is dominated by the matching coefficient of b, and the factorization
    bound carries over unchanged.
    """
    pairs = factorization.pairs
    if not pairs:
        raise ValueError("factorization must have at least one pair")
    b = AnalyticPoly([0.0])
    bound = 0.0
    for f, g in pairs:
        b = b + multiply(modulus_coeffs(f), modulus_coeffs(g))
        bound += dirichlet_norm(f) * dirichlet_norm(g)
    return Majorant(b=b, bound=bound)


def load_radial_measure(path):
    """Read a radial measure file: JSON list of {"r": ..., "w": ...}."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, list):
        raise ValueError("measure file must hold a JSON array")
    atoms = []
    for k, rec in enumerate(raw):
        if not isinstance(rec, dict) or "r" not in rec or "w" not in rec:
            raise ValueError(f"record {k} must carry 'r' and 'w'")
        if not (math.isfinite(rec["r"]) and math.isfinite(rec["w"])):
            raise ValueError(f"record {k} is not finite")
        atoms.append((rec["r"], rec["w"]))
    return RadialMeasure(atoms)


def load_atomic_measure(path):
    """Read an atomic measure file: JSON list of {"arg","delta","w_re","w_im"}."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, list):
        raise ValueError("measure file must hold a JSON array")
    points, weights = [], []
    for k, rec in enumerate(raw):
        keys = {"arg", "delta", "w_re", "w_im"}
        if not isinstance(rec, dict) or not keys <= set(rec):
            raise ValueError(f"record {k} must carry {sorted(keys)}")
        points.append(DiskPoint(rec["arg"], rec["delta"]))
        weights.append(complex(rec["w_re"], rec["w_im"]))
    return ComplexAtomicMeasure(points, weights)
