"""Reproducing kernels for the Dirichlet norm and its tilde companion.

Coefficient expansions (w = conj(zeta) z):

    dirichlet:        c_n = conj(zeta)^n / (n+1),       n >= 0
    tilde:            c_n = conj(zeta)^n / n,           n >= 1
    dbar-derivative:  c_n = n conj(zeta)^(n-1) / (n+1), n >= 1

Pairing a polynomial against the first kernel recovers its value at zeta,
against the third its derivative.  The squared tilde norm of a kernel
difference has the closed form -log(1 - rho^2) = beta - 2 log(1 + rho),
checked here against direct series summation.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .geometry import DiskPoint, _metric_parts, hyperbolic, pseudo_hyperbolic
from .series import AnalyticPoly, dirichlet_pair, differentiate, evaluate

__all__ = [
    "KernelSpec",
    "TruncationError",
    "tail_bound",
    "required_truncation",
    "kernel_poly",
    "kernel_norms",
    "kernel_diff_norm",
    "reproduce",
    "kernel_dot",
    "tilde_dot",
]

KINDS = ("dirichlet", "tilde", "dbar-derivative")

# Centers with a smaller gap use closed forms only; series would need
# millions of terms.
SERIES_GAP_FLOOR = 1e-9


class TruncationError(ValueError):
    pass


@dataclass(frozen=True)
class KernelSpec:
    center: DiskPoint
    kind: str = "dirichlet"
    truncation: int = 64

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        if self.truncation < 1:
            raise ValueError("truncation must be >= 1")


def tail_bound(center, truncation):
    """Geometric tail bound |zeta|^(N+1) / (1 - |zeta|)."""
    r = center.radius
    if r == 0.0:
        return 0.0
    log_tail = (truncation + 1) * 0.5 * math.log1p(-center.delta) - center.log_gap
    return math.exp(log_tail)


def required_truncation(center, tol):
    """Smallest N with tail_bound below tol."""
    r = center.radius
    if r == 0.0:
        return 1
    n = (math.log(tol) + center.log_gap) / (0.5 * math.log1p(-center.delta)) - 1.0
    return max(1, int(math.ceil(n)))


def kernel_poly(spec, tail_tol=None):
    """Coefficient expansion of the requested kernel, truncated at spec.truncation."""
    if tail_tol is not None and tail_bound(spec.center, spec.truncation) > tail_tol:
        raise TruncationError(
            f"truncation {spec.truncation} leaves tail "
            f"{tail_bound(spec.center, spec.truncation):.3e} > {tail_tol:.3e}"
        )
    N = spec.truncation
    zbar = np.conj(spec.center.z)
    n = np.arange(N + 1)
    powers = zbar ** n
    if spec.kind == "dirichlet":
        return AnalyticPoly(powers / (n + 1))
    coeffs = np.zeros(N + 1, dtype=complex)
    if spec.kind == "tilde":
        coeffs[1:] = powers[1:] / n[1:]
    else:
        coeffs[1:] = n[1:] * powers[:-1] / (n[1:] + 1.0)
    return AnalyticPoly(coeffs)


@dataclass(frozen=True)
class KernelNorms:
    norm_D: float
    norm_dbar: float
    exact_tilde_norm: float
    ratio_norm_sq_over_L: float
    ratio_dbar_times_gap: float
    truncation: int
    tail: float


def _closed_norm_sq(center):
    # sum x^n/(n+1) = -log(1-x)/x with x = |zeta|^2
    x = 1.0 - center.delta
    return (center.L - 1.0) / x if x > 0.0 else 1.0


def _closed_dbar_norm_sq(center):
    # sum_{n>=1} n^2 x^(n-1)/(n+1)
    #   = 1/delta^2 - 1/delta + ((L-1) - x)/x^2
    d = center.delta
    x = 1.0 - d
    if x == 0.0:
        return 0.25
    return 1.0 / d**2 - 1.0 / d + ((center.L - 1.0) - x) / x**2


def kernel_norms(center, truncation=None):
    """Norm data for k_center: series values where feasible, closed forms always.

    ratio_norm_sq_over_L tracks norm_D^2 / L; it stays inside [1/2, 2].
    ratio_dbar_times_gap tracks norm_dbar * delta, bounded over sweeps.
    """
    use_series = center.delta >= SERIES_GAP_FLOOR
    if use_series:
        N = truncation or required_truncation(center, 1e-14)
        x = 1.0 - center.delta
        n = np.arange(N + 1, dtype=float)
        xpow = x**n
        norm_sq = float(np.sum(xpow / (n + 1.0)))
        dbar_sq = float(np.sum(n[1:] ** 2 * xpow[:-1] / (n[1:] + 1.0)))
        tail = tail_bound(center, N)
    else:
        N = 0
        norm_sq = _closed_norm_sq(center)
        dbar_sq = _closed_dbar_norm_sq(center)
        tail = 0.0
    norm_d = math.sqrt(norm_sq)
    norm_dbar = math.sqrt(dbar_sq)
    return KernelNorms(
        norm_D=norm_d,
        norm_dbar=norm_dbar,
        exact_tilde_norm=math.sqrt(center.L - 1.0) if center.delta < 1.0 else 0.0,
        ratio_norm_sq_over_L=norm_sq / center.L,
        ratio_dbar_times_gap=norm_dbar * center.delta,
        truncation=N,
        tail=tail,
    )


@dataclass(frozen=True)
class KernelDiff:
    series_sq: float
    closed_sq: float
    series_value: float
    closed_form: float
    terms: int
    tail: float


_CHUNK = 1 << 20


def kernel_diff_norm(p, q, tol=1e-9):
    """Squared tilde norm of k~_p - k~_q, by series and by closed form.

    series_sq sums |conj(p)^n - conj(q)^n|^2 / n to a truncation whose tail
    is below tol; closed_sq = -log(1 - rho^2) = beta - 2 log(1 + rho).
    """
    num, den = _metric_parts(p, q)
    if num == 0.0:
        return KernelDiff(0.0, 0.0, 0.0, 0.0, 0, 0.0)
    rho = math.sqrt(num / den)
    # 1 - rho^2 = delta_p delta_q / den, in log form
    closed_sq = math.log(den) - math.log(p.delta) - math.log(q.delta)
    r = max(p.radius, q.radius)
    N = _diff_truncation(r, tol)
    series_sq = 0.0
    logs = []
    for pt in (p, q):
        logs.append(0.5 * math.log1p(-pt.delta) if pt.radius > 0.0 else -math.inf)
    start = 1
    while start <= N:
        stop = min(start + _CHUNK, N + 1)
        n = np.arange(start, stop, dtype=float)
        terms = np.zeros(n.size, dtype=complex)
        for sign, pt, lg in ((1.0, p, logs[0]), (-1.0, q, logs[1])):
            if pt.radius > 0.0:
                terms += sign * np.exp(n * (lg - 1j * pt.arg))
        series_sq += float(np.sum((terms.real**2 + terms.imag**2) / n))
        start = stop
    x = r * r
    tail = 4.0 * x ** (N + 1) / ((N + 1) * (1.0 - x)) if r > 0.0 else 0.0
    return KernelDiff(
        series_sq=series_sq,
        closed_sq=closed_sq,
        series_value=math.sqrt(series_sq),
        closed_form=math.sqrt(closed_sq),
        terms=N,
        tail=tail,
    )


def _diff_truncation(r, tol):
    if r == 0.0:
        return 1
    x = r * r
    target = 0.5 * tol * (1.0 - x) / 4.0
    n = 8.0
    for _ in range(60):
        n_new = (math.log(1.0 / target) - math.log(n)) / (2.0 * abs(math.log(r)))
        if abs(n_new - n) < 1.0:
            n = n_new
            break
        n = max(n_new, 1.0)
    return max(4, int(math.ceil(n)))


@dataclass(frozen=True)
class Reproduction:
    pairing: complex
    point_value: complex


def reproduce(f, center, kind="dirichlet"):
    """Pair f against a kernel and compare with direct evaluation.

    kind 'dirichlet' targets f(center), 'dbar-derivative' targets f'(center).
    """
    if kind not in ("dirichlet", "dbar-derivative"):
        raise ValueError("kind must be 'dirichlet' or 'dbar-derivative'")
    trunc = max(f.degree, 1)
    k = kernel_poly(KernelSpec(center, kind, trunc))
    pairing = dirichlet_pair(f, k)
    if kind == "dirichlet":
        value = evaluate(f, center.z)
    else:
        value = evaluate(differentiate(f), center.z)
    return Reproduction(pairing=pairing, point_value=value)


def _one_minus_product(p, q):
    """1 - conj(z_p) z_q with full relative accuracy near the boundary."""
    rp, rq = p.radius, q.radius
    u = p.delta + q.delta - p.delta * q.delta
    one_minus_rr = u / (1.0 + math.sqrt(max(1.0 - u, 0.0)))
    dtheta = q.arg - p.arg
    half = 0.5 * dtheta
    angular = -2j * math.sin(half) * cmath.exp(1j * half)
    return one_minus_rr + rp * rq * angular


def kernel_dot(p, q):
    """<k_p, k_q> for the Dirichlet pairing: -log(1 - conj(z_p) z_q) / (conj(z_p) z_q)."""
    w = np.conj(p.z) * q.z
    if w == 0:
        return 1.0 + 0j
    return -cmath.log(_one_minus_product(p, q)) / w


def tilde_dot(p, q):
    """<k~_p, k~_q> for the tilde pairing: -log(1 - conj(z_p) z_q)."""
    return -cmath.log(_one_minus_product(p, q))
