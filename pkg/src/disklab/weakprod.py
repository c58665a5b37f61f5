"""Weak-product norm machinery: factorizations, an alternating optimizer,
and one-sided certificates.

The weak-product norm of h is the infimum of sum ||f_j|| ||g_j|| over
representations h = sum f_j g_j.  Everything here brackets that infimum:

  * upper_bound: the sum for any exact representation;
  * optimize_factorization: alternating weighted least-norm solves over the
    f block and the g block, with per-pair rebalancing, restarts, and a
    final exact-feasibility projection;
  * lower_certificate_measure: rigorous, constant-one lower bound through a
    rotation-invariant embedding measure (Cauchy-Schwarz per pair);
  * lower_certificate_duality: a constant-free diagnostic through the
    monomial pairing, reported separately because the duality constant is
    not explicit.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .carleson import cm_norm_radial, x_norm_monomial
from .series import AnalyticPoly, coeffs_from_json, dirichlet_norm, multiply, one

__all__ = [
    "Factorization",
    "NormBracket",
    "OptimizationError",
    "OptimizationResult",
    "upper_bound",
    "rebalance",
    "polarize",
    "optimize_factorization",
    "lower_certificate_measure",
    "lower_certificate_duality",
    "best_duality_certificate",
    "hardy_type_sum",
    "paley_sum",
    "is_lacunary",
    "lacunarity_ratio",
    "load_factorization",
]


class OptimizationError(RuntimeError):
    pass


class Factorization:
    """Pairs (f_j, g_j) meant to represent a target as sum f_j g_j."""

    def __init__(self, pairs, target):
        self.pairs = [(f, g) for f, g in pairs]
        self.target = target

    def product_sum(self):
        acc = AnalyticPoly([0.0])
        for f, g in self.pairs:
            acc = acc + multiply(f, g)
        return acc

    @property
    def residual(self):
        return self.target - self.product_sum()

    def is_valid(self):
        return self.residual.is_zero()

    @property
    def bound(self):
        return sum(dirichlet_norm(f) * dirichlet_norm(g) for f, g in self.pairs)


@dataclass(frozen=True)
class NormBracket:
    lower: float
    upper: float
    lower_kind: str
    certificate: str = ""

    def __post_init__(self):
        if self.lower_kind not in ("radial-measure", "duality"):
            raise ValueError("lower_kind must be 'radial-measure' or 'duality'")
        if self.lower_kind == "radial-measure" and self.lower > self.upper + 1e-12:
            raise ValueError("rigorous lower certificate exceeds the upper bound")


def upper_bound(F):
    """Certified upper bound sum ||f_j|| ||g_j||; the representation must be exact."""
    if not F.is_valid():
        raise ValueError("factorization has nonzero residual")
    return F.bound


def rebalance(F):
    """Scale each pair by t = sqrt(||g||/||f||); the bound is unchanged."""
    pairs = []
    for f, g in F.pairs:
        nf, ng = dirichlet_norm(f), dirichlet_norm(g)
        if nf == 0.0 or ng == 0.0:
            pairs.append((f, g))
            continue
        t = math.sqrt(ng / nf)
        pairs.append((t * f, (1.0 / t) * g))
    return Factorization(pairs, F.target)


def _absorb_residual(pairs, target):
    """Append a (residual, 1) pair so the identity holds to the last bit."""
    F = Factorization(pairs, target)
    r = F.residual
    if not r.is_zero():
        F = Factorization(list(pairs) + [(r, one())], target)
    return F


def polarize(F):
    """Rewrite with squares only via fg = ((f+g)^2 - (f-g)^2)/4.

    Pairs are rebalanced first, so the bound is preserved up to rounding
    (and never more than doubled).
    """
    balanced = rebalance(F)
    pairs = []
    for f, g in balanced.pairs:
        a = 0.5 * (f + g)
        b = 0.5j * (f - g)
        if not a.is_zero():
            pairs.append((a, a))
        if not b.is_zero():
            pairs.append((b, b))
    return _absorb_residual(pairs, F.target)


@dataclass
class OptimizationResult:
    factorization: Factorization
    bound: float
    residual_norm: float
    restart_bounds: list = field(default_factory=list)
    surrogate_path: list = field(default_factory=list)
    converged: bool = True


def _half_step(fixed, target_vec, d, w_sqrt):
    """Least Dirichlet-norm solve of sum x_j * fixed_j = target."""
    rows = target_vec.size
    cols = len(fixed) * (d + 1)
    A = np.zeros((rows, cols), dtype=complex)
    for j, g in enumerate(fixed):
        gc = g.coeffs
        base = j * (d + 1)
        for k in range(gc.size):
            n = np.arange(min(d + 1, rows - k))
            A[n + k, base + n] = gc[k]
    B = A / w_sqrt[None, :]
    y, *_ = np.linalg.lstsq(B, target_vec, rcond=None)
    x = y / w_sqrt
    return [AnalyticPoly(x[j * (d + 1) : (j + 1) * (d + 1)]) for j in range(len(fixed))]


def _power_series_sqrt(h, d):
    """Degree-d square root of h by the standard recurrence, or None."""
    a = h.padded(d + 1)
    if abs(a[0]) == 0.0:
        return None
    s = np.zeros(d + 1, dtype=complex)
    s[0] = np.sqrt(a[0])
    scale = float(np.max(np.abs(a))) or 1.0
    for n in range(1, d + 1):
        acc = a[n] - np.dot(s[1:n], s[n - 1 : 0 : -1])
        s[n] = acc / (2.0 * s[0])
        if abs(s[n]) > 1e8 * scale:
            return None
    return AnalyticPoly(s)


def optimize_factorization(
    h, pairs=2, restarts=4, iters=30, seed=0, tol=1e-9, degree=None
):
    """Search for a low-bound exact representation of h with a fixed pair count.

    Restart 0 is the trivial split (h, 1); restart 1 is a square-root split
    when the constant term allows one; later restarts perturb the g block
    with seeded noise.  Each sweep solves the f block exactly as a weighted
    least-norm problem with the g block frozen, then swaps roles, then
    rebalances.  A restart is kept only if its residual is below
    tol * ||h||; the tiny final residual is absorbed into an appended
    (residual, 1) pair so the returned factorization is exact.
    """
    if pairs < 1:
        raise ValueError("pair count must be >= 1")
    norm_h = dirichlet_norm(h)
    if norm_h == 0.0:
        return OptimizationResult(Factorization([], h), 0.0, 0.0, [0.0], [0.0])
    d = max(h.degree, 1) if degree is None else degree
    if h.degree > 2 * d:
        raise ValueError("factor degree too small for the target")
    m = pairs
    t_vec = h.padded(2 * d + 1)
    w_sqrt = np.sqrt(np.tile(np.arange(1, d + 2, dtype=float), m))
    rng = np.random.default_rng(seed)

    def _noise(scale):
        return AnalyticPoly(
            scale * (rng.standard_normal(d + 1) + 1j * rng.standard_normal(d + 1))
        )

    zero_poly = AnalyticPoly([0.0])
    starts = []
    trivial = ([h] + [zero_poly] * (m - 1), [one()] + [zero_poly] * (m - 1))
    starts.append(trivial)
    s = _power_series_sqrt(h, (h.degree + 1) // 2 if h.degree else 1)
    if s is not None:
        starts.append(([s] + [zero_poly] * (m - 1), [s] + [zero_poly] * (m - 1)))
    while len(starts) < restarts:
        gs = [one() + _noise(0.3)] + [_noise(0.3) for _ in range(m - 1)]
        starts.append((None, gs))

    best = None
    restart_bounds = []
    surrogate_path = []
    # the untouched trivial split is exactly feasible and sets the ceiling
    baseline = Factorization([(h, one())], h)
    best = (baseline.bound, baseline, 0.0, [baseline.bound])
    for fs, gs in starts[:restarts]:
        if fs is None:
            fs = _half_step(gs, t_vec, d, w_sqrt)
        path = []
        for _ in range(iters):
            fs = _half_step(gs, t_vec, d, w_sqrt)
            gs = _half_step(fs, t_vec, d, w_sqrt)
            norms_f = [dirichlet_norm(f) for f in fs]
            norms_g = [dirichlet_norm(g) for g in gs]
            fs2, gs2 = [], []
            for f, g, nf, ng in zip(fs, gs, norms_f, norms_g):
                if nf > 0.0 and ng > 0.0:
                    t = math.sqrt(ng / nf)
                    fs2.append(t * f)
                    gs2.append((1.0 / t) * g)
                else:
                    fs2.append(f)
                    gs2.append(g)
            fs, gs = fs2, gs2
            phi = 0.5 * sum(
                dirichlet_norm(f) ** 2 + dirichlet_norm(g) ** 2 for f, g in zip(fs, gs)
            )
            if path and path[-1] - phi < 1e-13 * max(1.0, path[-1]):
                path.append(phi)
                break
            path.append(phi)
        cand = Factorization(
            [(f, g) for f, g in zip(fs, gs) if not (f.is_zero() and g.is_zero())], h
        )
        res_norm = dirichlet_norm(cand.residual)
        if res_norm <= tol * norm_h:
            final = _absorb_residual(cand.pairs, h)
            b = final.bound
            restart_bounds.append(b)
            if best is None or b < best[0]:
                best = (b, final, res_norm, path)
        else:
            restart_bounds.append(math.inf)
    if not any(math.isfinite(b) for b in restart_bounds):
        raise OptimizationError("no restart reached the feasibility tolerance")
    bound, fact, res_norm, surrogate_path = best
    return OptimizationResult(
        factorization=fact,
        bound=bound,
        residual_norm=res_norm,
        restart_bounds=restart_bounds,
        surrogate_path=surrogate_path,
    )


def angular_average_abs(h, radii, oversample=4):
    """Mean of |h| over circles of the given radii, by FFT on a uniform grid."""
    radii = np.atleast_1d(np.asarray(radii, dtype=float))
    deg = h.degree
    K = max(256, 1 << int(math.ceil(math.log2(oversample * (deg + 1)))))
    out = np.empty(radii.size)
    for i, r in enumerate(radii):
        scaled = h.coeffs * r ** np.arange(deg + 1)
        out[i] = float(np.mean(np.abs(np.fft.fft(scaled, K))))
    return out


def lower_certificate_measure(h, mu):
    """Rigorous lower bound for the weak-product norm, constant exactly one.

    For an embedding measure mu with constant C, each pair obeys
    int |f g| dmu <= C^2 ||f|| ||g||, so int |h| dmu / C^2 sits below every
    representation bound.
    """
    cn = cm_norm_radial(mu)
    if cn.norm == 0.0:
        raise ValueError("certificate needs a nonzero measure")
    avg = angular_average_abs(h, mu.radii)
    return float(np.sum(mu.weights * avg)) / cn.norm**2


def lower_certificate_duality(h, n):
    """(n+1)|h_n| / ||z^n||_X: a lower diagnostic up to the duality constant."""
    if n < 1:
        raise ValueError("n must be >= 1")
    hn = h.coeff(n)
    if hn == 0:
        return 0.0
    return (n + 1) * abs(hn) / x_norm_monomial(n)


def best_duality_certificate(h):
    """Maximizing monomial diagnostic over 1 <= n <= deg h."""
    best_val, best_n = 0.0, 0
    for n in range(1, h.degree + 1):
        v = lower_certificate_duality(h, n)
        if v > best_val:
            best_val, best_n = v, n
    return best_val, best_n


def hardy_type_sum(a):
    """sum |a_n| / (1 + log(n+1))."""
    c = np.abs(a.coeffs)
    n = np.arange(c.size, dtype=float)
    return float(np.sum(c / (1.0 + np.log(n + 1.0))))


def paley_sum(f, indices):
    """sum over the index set of n |f_n|^2."""
    return float(
        sum(n * abs(f.coeff(n)) ** 2 for n in indices if 1 <= n <= f.degree)
    )


def lacunarity_ratio(indices):
    """Smallest consecutive ratio; the largest admissible gap parameter."""
    ns = sorted(indices)
    if len(ns) < 2:
        return math.inf
    if ns[0] < 1:
        raise ValueError("indices must be positive")
    return min(b / a for a, b in zip(ns[:-1], ns[1:]))


def is_lacunary(indices, q):
    """Whether every consecutive ratio reaches q (q > 1)."""
    if q <= 1.0:
        raise ValueError("q must exceed 1")
    return lacunarity_ratio(indices) >= q


def load_factorization(path):
    """Read {"target": coeffs, "pairs": [[coeffs, coeffs], ...]}."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict) or "target" not in raw or "pairs" not in raw:
        raise ValueError("factorization file must carry 'target' and 'pairs'")
    target = AnalyticPoly(coeffs_from_json(raw["target"]))
    pairs = []
    for k, pair in enumerate(raw["pairs"]):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ValueError(f"pair {k} must be a two-element list")
        pairs.append(
            (
                AnalyticPoly(coeffs_from_json(pair[0])),
                AnalyticPoly(coeffs_from_json(pair[1])),
            )
        )
    return Factorization(pairs, target)
