"""Truncated power series on the unit disk and their Dirichlet-type norms.

A finite Taylor series a_0 + a_1 z + ... + a_N z^N is the carrier for every
analytic object in this package.  Norms are coefficient sums, so they are
exact up to floating-point rounding:

    dirichlet_norm(f)^2 = sum (n+1) |a_n|^2
    hardy_norm(f)^2     = sum |a_n|^2
    tilde_norm(f)^2     = sum_{n>=1} n |a_n|^2

Area measure throughout the package is Lebesgue measure divided by pi, so
the disk has measure 1, int |z|^(2m) dA = 1/(m+1), and tilde_norm(f)^2
equals int |f'|^2 dA exactly.
"""

import json
import math

import numpy as np

__all__ = [
    "AnalyticPoly",
    "zero",
    "one",
    "monomial",
    "dirichlet_norm",
    "dirichlet_pair",
    "hardy_norm",
    "tilde_norm",
    "q2_form",
    "multiply",
    "differentiate",
    "evaluate",
    "modulus_coeffs",
    "multiplier_norm_truncated",
    "coeffs_from_json",
    "load_coeffs",
    "dump_coeffs",
]

# Above this coefficient-product count, multiplication switches to FFT.
_FFT_THRESHOLD = 1 << 20


class AnalyticPoly:
    """Dense coefficient vector with trailing zeros normalized away.

    Instances are immutable; the backing array is write-protected.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.atleast_1d(np.asarray(coeffs, dtype=complex)).ravel()
        if arr.size == 0:
            arr = np.zeros(1, dtype=complex)
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        nz = np.flatnonzero(arr)
        arr = arr[: nz[-1] + 1].copy() if nz.size else np.zeros(1, dtype=complex)
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("AnalyticPoly is immutable")

    @property
    def degree(self):
        return self.coeffs.size - 1

    def is_zero(self):
        return self.coeffs.size == 1 and self.coeffs[0] == 0

    def coeff(self, n):
        """Coefficient of z^n, zero beyond the stored degree."""
        if n < 0:
            raise ValueError("negative index")
        return complex(self.coeffs[n]) if n <= self.degree else 0j

    def padded(self, length):
        """First `length` coefficients, zero-extended or truncated."""
        out = np.zeros(length, dtype=complex)
        k = min(length, self.coeffs.size)
        out[:k] = self.coeffs[:k]
        return out

    def __add__(self, other):
        other = _coerce(other)
        n = max(self.coeffs.size, other.coeffs.size)
        return AnalyticPoly(self.padded(n) + other.padded(n))

    def __sub__(self, other):
        other = _coerce(other)
        n = max(self.coeffs.size, other.coeffs.size)
        return AnalyticPoly(self.padded(n) - other.padded(n))

    def __neg__(self):
        return AnalyticPoly(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, AnalyticPoly):
            return multiply(self, other)
        return AnalyticPoly(self.coeffs * complex(other))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, AnalyticPoly):
            return NotImplemented
        return self.coeffs.shape == other.coeffs.shape and bool(
            np.all(self.coeffs == other.coeffs)
        )

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __repr__(self):
        return f"AnalyticPoly(degree={self.degree})"


def _coerce(x):
    return x if isinstance(x, AnalyticPoly) else AnalyticPoly([complex(x)])


def zero():
    return AnalyticPoly([0.0])


def one():
    return AnalyticPoly([1.0])


def monomial(n, c=1.0):
    """c * z^n."""
    coeffs = np.zeros(n + 1, dtype=complex)
    coeffs[n] = c
    return AnalyticPoly(coeffs)


def _dirichlet_weights(size):
    return np.arange(1, size + 1, dtype=float)


def dirichlet_norm(f):
    """sqrt(sum (n+1)|a_n|^2)."""
    a = f.coeffs
    return math.sqrt(float(np.sum(_dirichlet_weights(a.size) * (a.real**2 + a.imag**2))))


def dirichlet_pair(f, g):
    """sum (n+1) a_n conj(b_n); sesquilinear, conjugate symmetric."""
    n = max(f.coeffs.size, g.coeffs.size)
    a, b = f.padded(n), g.padded(n)
    return complex(np.sum(_dirichlet_weights(n) * a * np.conj(b)))


def hardy_norm(f):
    return float(np.linalg.norm(f.coeffs))


def tilde_norm(f):
    """sqrt(sum_{n>=1} n|a_n|^2); the constant term is ignored."""
    a = f.coeffs[1:]
    if a.size == 0:
        return 0.0
    w = np.arange(1, a.size + 1, dtype=float)
    return math.sqrt(float(np.sum(w * (a.real**2 + a.imag**2))))


def q2_form(f):
    """|a_0|^2 + sum_{n>=1} n|a_n|^2, the pinned companion of the squared norm.

    Sandwich: q2_form(f) <= dirichlet_norm(f)^2 <= 2*q2_form(f).
    """
    return abs(f.coeffs[0]) ** 2 + tilde_norm(f) ** 2


def multiply(f, g):
    """Full product of degree deg f + deg g; never truncated."""
    a, b = f.coeffs, g.coeffs
    if a.size * b.size > _FFT_THRESHOLD:
        n = a.size + b.size - 1
        m = 1 << (n - 1).bit_length()
        out = np.fft.ifft(np.fft.fft(a, m) * np.fft.fft(b, m))[:n]
    else:
        out = np.convolve(a, b)
    return AnalyticPoly(out)


def differentiate(f):
    a = f.coeffs
    if a.size == 1:
        return zero()
    return AnalyticPoly(a[1:] * np.arange(1, a.size, dtype=float))


def evaluate(f, z):
    """Horner evaluation at points of the open disk; rejects |z| >= 1."""
    zs = np.asarray(z, dtype=complex)
    if np.any(np.abs(zs) >= 1.0):
        raise ValueError("evaluation requires |z| < 1")
    acc = np.zeros_like(zs)
    for c in f.coeffs[::-1]:
        acc = acc * zs + c
    return complex(acc) if zs.ndim == 0 else acc


def modulus_coeffs(f):
    """Replace every coefficient by its modulus; Dirichlet norm is unchanged."""
    return AnalyticPoly(np.abs(f.coeffs).astype(complex))


def multiplier_norm_truncated(d, N):
    """Operator norm of multiplication by d on polynomials of degree <= N.

    The map goes from degree <= N into degree <= N + deg d, both sides with
    the Dirichlet norm; the value is the top singular value of the weighted
    multiplication matrix and is nondecreasing in N.
    """
    if N < d.degree:
        raise ValueError("N must be at least deg d")
    dd = d.coeffs
    K = d.degree
    rows, cols = N + K + 1, N + 1
    mat = np.zeros((rows, cols), dtype=complex)
    col_idx = np.arange(cols)
    for k in range(K + 1):
        m = col_idx + k
        mat[m, col_idx] = dd[k] * np.sqrt((m + 1) / (col_idx + 1))
    return float(np.linalg.svd(mat, compute_uv=False)[0])


def coeffs_from_json(raw):
    """Validate a JSON array of [re, im] pairs and return complex values."""
    if not isinstance(raw, list):
        raise ValueError("coefficients must form a JSON array")
    out = []
    for k, item in enumerate(raw):
        if not (isinstance(item, list) and len(item) == 2):
            raise ValueError(f"entry {k} is not an [re, im] pair")
        re, im = item
        if not (isinstance(re, (int, float)) and isinstance(im, (int, float))):
            raise ValueError(f"entry {k} has non-numeric parts")
        if not (math.isfinite(re) and math.isfinite(im)):
            raise ValueError(f"entry {k} is not finite")
        out.append(complex(re, im))
    return out if out else [0.0]


def load_coeffs(path):
    """Read a coefficient file: JSON array of [re, im] pairs, index = degree."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    return AnalyticPoly(coeffs_from_json(raw))


def dump_coeffs(f, path):
    data = [[float(c.real), float(c.imag)] for c in f.coeffs]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh)
