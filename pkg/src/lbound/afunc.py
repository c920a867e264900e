"""The closed-form auxiliary functions A₁–A₆ and the helpers θ₁, θ₂, Θ."""
import math

import numpy as np

from .errors import DomainError

_SERIES_CUT = 1e-4


def theta1(u):
    """(e^u − u − 1)/u², with the Taylor branch 1/2 + u/6 + u²/24 near 0."""
    u = np.asarray(u, dtype=float)
    small = np.abs(u) <= _SERIES_CUT
    safe = np.where(small, 1.0, u)
    out = (np.expm1(safe) - safe) / (safe * safe)
    out = np.where(small, 0.5 + u / 6 + u * u / 24, out)
    return float(out) if out.ndim == 0 else out


def theta2(u):
    """(e^u − 1)/u, with the Taylor branch 1 + u/2 + u²/6 near 0."""
    u = np.asarray(u, dtype=float)
    small = np.abs(u) <= _SERIES_CUT
    safe = np.where(small, 1.0, u)
    out = np.expm1(safe) / safe
    out = np.where(small, 1 + u / 2 + u * u / 6, out)
    return float(out) if out.ndim == 0 else out


def Theta(theta, eps, sigma):
    return 0.5 + max(theta, eps) - sigma


def _check_x(x):
    if not x >= 2:
        raise DomainError(f"x must be at least 2, got {x}")


def A1(a, eps, sigma):
    if not (sigma + eps > 0 and 1 - sigma + eps > 0):
        raise DomainError("A1 needs σ+ε > 0 and 1−σ+ε > 0")
    return a * (2 * sigma - 1) * (1 + eps) / ((sigma + eps) * (1 - sigma + eps))


def A2(a, eps, theta, sigma, x):
    _check_x(x)
    T = Theta(theta, eps, sigma)
    L = math.log(x)
    cap = L * L if T == 0 else min(1 / (T * T), L * L)
    return a * (1 + abs(T) * x**T * L) * cap


def A3(a, b, eps, theta, sigma, x):
    _check_x(x)
    if not 1 - sigma + eps > 0:
        raise DomainError("A3 needs 1−σ+ε > 0")
    L = math.log(x)
    return a * x ** (1 - sigma + eps) / ((1 - sigma + eps) ** 2 * L * L) + A2(b, eps, theta, sigma, x)


def _gamma_shape(inv):
    return inv.d * (1 + inv.a_plus + inv.b_plus) * inv.lambda_plus / min(1.0, inv.lambda_minus**4)


def A4(inv, m_L, t, loglogtau):
    """A₄ at (d, a⁺, b⁺, λ⁺, λ⁻, m_L, f, t) with loglog τ supplied."""
    if not loglogtau > 0:
        raise DomainError("A4 needs loglog τ > 0")
    t = abs(t)
    ll = loglogtau
    logtau = math.exp(ll)
    return (
        _gamma_shape(inv) * math.sqrt(ll / t) * math.log1p(math.sqrt(t * ll))
        + m_L * logtau * ll / t
        + inv.f / (inv.lambda_minus**3 * t * ll)
    )


def A5(sigma, inv, m_L, t, loglogtau):
    if not sigma > 0.5:
        raise DomainError("A5 needs σ > 1/2")
    if not loglogtau > 0:
        raise DomainError("A5 needs loglog τ > 0")
    t = abs(t)
    ll = loglogtau
    logtau = math.exp(ll)
    first = _gamma_shape(inv) * inv.d * math.log(t) / (ll**1.5 * math.sqrt(t))
    return (first + m_L * logtau / (t * t * ll * ll)) * math.log(2 / (sigma - 0.5))


def A6(a, sigma, x):
    _check_x(x)
    if not sigma < 1:
        raise DomainError("A6 needs σ < 1")
    L = math.log(x)
    return a * (L + (1 - sigma) * L * math.log(L) + x ** (1 - sigma) / ((1 - sigma) * L))


def A_functions(i, *args):
    """Dispatch A_i(args) for i in 1..6."""
    table = {1: A1, 2: A2, 3: A3, 4: A4, 5: A5, 6: A6}
    if i not in table:
        raise DomainError(f"no A-function with index {i}")
    return table[i](*args)
