"""Gamma-function tools: Stirling quotient, digamma estimate, reference evaluators.

The reference evaluators shift the argument upward by the recurrence until
|z| > 20 and then apply the Stirling series with ten Bernoulli corrections.
They are independent of scipy's implementations so that the explicit bounds
can be checked against something that was not used to derive them.
"""
from dataclasses import dataclass
import cmath
import math

from .errors import DomainError

# B_{2k}/(2k(2k-1)) for k = 1..10, the Stirling coefficients of log Γ
_B2K = [
    1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66,
    -691 / 2730, 7 / 6, -3617 / 510, 43867 / 798, -174611 / 330,
]
_STIRLING = [b / (2 * k * (2 * k - 1)) for k, b in enumerate(_B2K, start=1)]
_HALF_LOG_2PI = 0.5 * math.log(2 * math.pi)
_SHIFT_RADIUS = 20.0


def _check_pole(z):
    if z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real):
        raise DomainError(f"Γ has a pole at {z.real:g}")


def _shift(z):
    """Return (w, n) with w = z + n and |w| > 20, Re w > 0."""
    n = 0
    w = z
    while abs(w) <= _SHIFT_RADIUS or w.real <= 0:
        w += 1
        n += 1
    return w, n


def reference_log_gamma(z, precision_terms=10):
    """log Γ(z) on the principal branch continued from the positive axis.

    log Γ(z) = log Γ(z+n) − Σ_{k<n} log(z+k), with the Stirling series for
    log Γ(z+n).  For real positive z the result is real.
    """
    z = complex(z)
    _check_pole(z)
    precision_terms = max(1, min(int(precision_terms), len(_STIRLING)))
    w, n = _shift(z)
    inv = 1 / w
    inv2 = inv * inv
    series = 0j
    p = inv
    for c in _STIRLING[:precision_terms]:
        series += c * p
        p *= inv2
    out = (w - 0.5) * cmath.log(w) - w + _HALF_LOG_2PI + series
    # subtract log of the product z(z+1)…(z+n−1), summing logs to track the branch
    out -= math.fsum(cmath.log(z + k).real for k in range(n)) + 1j * math.fsum(
        cmath.log(z + k).imag for k in range(n)
    )
    if z.imag == 0 and z.real > 0:
        return complex(out.real, 0.0)
    return out


def reference_digamma(z, precision_terms=10):
    """ψ(z) = Γ'/Γ(z) by recurrence shift and the asymptotic series."""
    z = complex(z)
    _check_pole(z)
    precision_terms = max(1, min(int(precision_terms), len(_B2K)))
    w, n = _shift(z)
    inv2 = 1 / (w * w)
    series = 0j
    p = inv2
    for k, b in enumerate(_B2K[:precision_terms], start=1):
        series += b / (2 * k) * p
        p *= inv2
    out = cmath.log(w) - 0.5 / w - series
    out -= sum(1 / (z + k) for k in range(n))
    return out


@dataclass(frozen=True)
class GammaQuotientResult:
    main_term: float
    R_bound: float


def log_gamma_quotient(x1, x2, y):
    """Main term and remainder bound for log|Γ(x1+iy)/Γ(x2+iy)|."""
    if not (x1 > 0 and x2 > 0):
        raise DomainError("x1 and x2 must be positive")
    if y == 0:
        raise DomainError("y must be nonzero")
    z1sq = x1 * x1 + y * y
    z2sq = x2 * x2 + y * y
    main = (
        (x1 - 0.5) * 0.5 * math.log(z1sq)
        - (x2 - 0.5) * 0.5 * math.log(z2sq)
        + (x1 - x2) * (y * y - x1 * x2) / (12 * z1sq * z2sq)
        + x1 * x2 * (x2 - x1) / (y * y + x1 * x2)
    )
    R = abs(x2 - x1) ** 3 / y**2 + 1 / (90 * abs(y) ** 3)
    return GammaQuotientResult(main, R)


def digamma_real_estimate(z):
    """(log|z|, A) with |Re ψ(z) − log|z|| ≤ A for Re z > 0."""
    z = complex(z)
    if z.real <= 0:
        raise DomainError("needs Re z > 0")
    a2 = abs(z) ** 2
    A = 0.5 * (z.real + 1 / 6 + math.sqrt(2) / (15 * a2)) / a2
    return math.log(abs(z)), A


def arctan_remainder_ok(u):
    """|arctan u − u| ≤ |u|³."""
    return abs(math.atan(u) - u) <= abs(u) ** 3
