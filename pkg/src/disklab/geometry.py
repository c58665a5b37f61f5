"""Disk points and the two standard metrics.

A point carries its boundary gap delta = 1 - |z|^2 as the source of truth,
because |z| rounds to 1.0 in floating point long before delta underflows.
The log scale L = 1 + log(1/delta) comes with it.

The pseudohyperbolic metric rho and the hyperbolic distance beta are
computed from (delta, arg) data so that pairs of points with doubly
exponentially small gaps keep full relative accuracy.
"""

import cmath
import json
import math

__all__ = ["DiskPoint", "ORIGIN", "pseudo_hyperbolic", "hyperbolic", "load_points"]


class DiskPoint:
    """Point of the open unit disk addressed by (arg, delta)."""

    __slots__ = ("arg", "delta")

    def __init__(self, arg, delta):
        arg = float(arg)
        delta = float(delta)
        if not (0.0 < delta <= 1.0):
            raise ValueError("delta must lie in (0, 1]")
        if not math.isfinite(arg):
            raise ValueError("arg must be finite")
        object.__setattr__(self, "arg", arg)
        object.__setattr__(self, "delta", delta)

    def __setattr__(self, name, value):
        raise AttributeError("DiskPoint is immutable")

    @classmethod
    def from_complex(cls, z):
        z = complex(z)
        r = abs(z)
        if r >= 1.0:
            raise ValueError("point must lie in the open disk")
        return cls(cmath.phase(z) if r > 0 else 0.0, (1.0 - r) * (1.0 + r))

    @property
    def radius(self):
        return math.sqrt(1.0 - self.delta)

    @property
    def z(self):
        return self.radius * cmath.exp(1j * self.arg)

    @property
    def L(self):
        """1 + log(1/delta)."""
        return 1.0 - math.log(self.delta)

    @property
    def log_gap(self):
        """log(1 - radius), exact even when radius rounds to 1."""
        # 1 - r = delta / (1 + r)
        return math.log(self.delta) - math.log1p(self.radius)

    def __eq__(self, other):
        if not isinstance(other, DiskPoint):
            return NotImplemented
        return self.arg == other.arg and self.delta == other.delta

    def __hash__(self):
        return hash((self.arg, self.delta))

    def __repr__(self):
        return f"DiskPoint(arg={self.arg!r}, delta={self.delta!r})"


ORIGIN = DiskPoint(0.0, 1.0)


def _metric_parts(p, q):
    """Return (|p-q|^2, |1 - conj(p) q|^2) without boundary cancellation.

    Uses r_p - r_q = (delta_q - delta_p)/(r_p + r_q) and
    1 - r_p r_q = u / (1 + sqrt(1-u)) with u = delta_p + delta_q
    - delta_p delta_q, plus the angular term 4 r_p r_q sin^2(dtheta/2).
    """
    dp, dq = p.delta, q.delta
    rp, rq = p.radius, q.radius
    u = dp + dq - dp * dq
    one_minus_rr = u / (1.0 + math.sqrt(max(1.0 - u, 0.0)))
    dr = (dq - dp) / (rp + rq) if rp + rq > 0.0 else 0.0
    s = math.sin(0.5 * (p.arg - q.arg))
    cross = 4.0 * rp * rq * s * s
    return dr * dr + cross, one_minus_rr * one_minus_rr + cross


def pseudo_hyperbolic(p, q):
    """rho(p, q) = |p - q| / |1 - conj(p) q|, in [0, 1)."""
    num, den = _metric_parts(p, q)
    if num == 0.0:
        return 0.0
    return math.sqrt(num / den)


def hyperbolic(p, q):
    """beta(p, q) = log((1 + rho)/(1 - rho)).

    1 - rho is recovered from the identity
    |1 - conj(p) q|^2 - |p - q|^2 = delta_p delta_q, and points on a common
    ray take a pure-gap branch, so collinear near-boundary pairs never
    cancel.
    """
    if p.arg == q.arg:
        # log(delta_in (1+r_out)^2 / (delta_out (1+r_in)^2)) for the two
        # points ordered by gap; exact in the gaps.
        lo, hi = (p, q) if p.delta >= q.delta else (q, p)
        return (
            math.log(lo.delta)
            - math.log(hi.delta)
            + 2.0 * (math.log1p(hi.radius) - math.log1p(lo.radius))
        )
    num, den = _metric_parts(p, q)
    if num == 0.0:
        return 0.0
    rho = math.sqrt(num / den)
    # 1 - rho = (delta_p delta_q / den) / (1 + rho)
    log_one_minus_rho = (
        math.log(p.delta) + math.log(q.delta) - math.log(den) - math.log1p(rho)
    )
    return math.log1p(rho) - log_one_minus_rho


def load_points(path):
    """Read a point file: JSON array of {"arg": ..., "delta": ...} records."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, list):
        raise ValueError("point file must hold a JSON array")
    pts = []
    for k, rec in enumerate(raw):
        if not isinstance(rec, dict) or "arg" not in rec or "delta" not in rec:
            raise ValueError(f"record {k} must carry 'arg' and 'delta'")
        pts.append(DiskPoint(rec["arg"], rec["delta"]))
    return pts
