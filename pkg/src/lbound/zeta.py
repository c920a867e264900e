"""Reference evaluation of ζ(s) and log ζ(s) at desk-scale heights.

Euler–Maclaurin summation with an explicit remainder bound.  The logarithm
is continued along the horizontal segment from 3 + it down to σ + it, which
is the branch used throughout the package.
"""
import cmath
import math

import numpy as np
from scipy.special import bernoulli

from .errors import ConvergenceError, DomainError

_B = bernoulli(60)  # B_0..B_60


def _rising(s, k):
    """s(s+1)...(s+k-1)."""
    out = 1.0 + 0j
    for j in range(k):
        out *= s + j
    return out


def zeta_em(s, N=None, K=None, tol=1e-13):
    """ζ(s) by Euler–Maclaurin.  Returns (value, remainder_bound).

    ζ(s) = Σ_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
           + Σ_{k=1}^{K} B_{2k}/(2k)! s(s+1)…(s+2k-2) N^{-s-2k+1} + R_K,
    |R_K| ≤ |s(s+1)…(s+2K)| N^{-σ-2K-1} |B_{2K+2}|/((2K+2)! (σ+2K+1)).
    """
    s = complex(s)
    if s == 1:
        raise DomainError("ζ has a pole at s = 1")
    sigma, t = s.real, abs(s.imag)
    if sigma <= -1:
        raise DomainError("reference evaluator supports Re s > -1 only")
    if N is None:
        N = max(20, int(t / 3) + 20)
    N = int(N)
    n = np.arange(1, N, dtype=float)
    head = np.exp(-s * np.log(n))
    total = complex(math.fsum(head.real), math.fsum(head.imag))
    logN = math.log(N)
    total += cmath.exp((1 - s) * logN) / (s - 1) + 0.5 * cmath.exp(-s * logN)
    Nms = cmath.exp(-s * logN)
    kmax = K if K is not None else 28
    bound = math.inf
    for k in range(1, kmax + 1):
        term = _B[2 * k] / math.factorial(2 * k) * _rising(s, 2 * k - 1) * Nms * N ** (1 - 2 * k)
        total += term
        bound = (
            abs(_rising(s, 2 * k + 1))
            * N ** (-sigma - 2 * k - 1)
            * abs(_B[2 * k + 2])
            / (math.factorial(2 * k + 2) * (sigma + 2 * k + 1))
        )
        if K is None and bound < tol * max(1.0, abs(total)):
            break
    return total, bound


def zeta(s, tol=1e-13):
    value, bound = zeta_em(s, tol=tol)
    if bound > 1e3 * tol * max(1.0, abs(value)):
        raise ConvergenceError(f"Euler–Maclaurin remainder {bound:.3g} above tolerance")
    return value


def log_zeta(sigma, t, tol=1e-13, start=3.0):
    """log ζ(σ+it) continued horizontally from start + it.

    The imaginary part is tracked by stepping in σ and unwrapping the
    argument; a step is halved whenever the argument moves by more than π/4.
    """
    if t == 0:
        raise DomainError("log ζ is continued along horizontal lines with t ≠ 0")
    if not 0.6 <= sigma <= start:
        raise DomainError("sigma outside the reference range [0.6, 3]")
    s0 = complex(start, t)
    v0 = zeta(s0, tol)
    cur = complex(math.log(abs(v0)), cmath.phase(v0))  # |arg ζ(3+it)| < π/2
    x = start
    step = 0.05
    while x > sigma:
        nxt = max(sigma, x - step)
        v = zeta(complex(nxt, t), tol)
        if v == 0:
            raise DomainError("zero of ζ on the continuation path")
        ph = cmath.phase(v)
        delta = (ph - cur.imag + math.pi) % (2 * math.pi) - math.pi
        if abs(delta) > math.pi / 4 and step > 1e-6:
            step /= 2
            continue
        cur = complex(math.log(abs(v)), cur.imag + delta)
        x = nxt
        step = min(0.05, step * 1.5)
    return cur


def log_abs_zeta(sigma, t, tol=1e-13):
    return math.log(abs(zeta(complex(sigma, t), tol)))


def zeta_reference(sigma, t, terms=None, tol=1e-10):
    """log ζ(σ+it) with every evaluation done by Euler–Maclaurin on `terms` terms.

    Desk range only: σ ∈ [0.6, 3], 2 ≤ |t| ≤ 10³.  Raises ConvergenceError
    when `terms` is too small for the remainder to drop below tol.
    """
    if not (0.6 <= sigma <= 3 and 2 <= abs(t) <= 1e3):
        raise DomainError("zeta_reference covers σ ∈ [0.6, 3], 2 ≤ |t| ≤ 1000")

    def ev(s):
        value, bound = zeta_em(s, N=terms)
        if bound >= tol:
            raise ConvergenceError(f"{terms} terms leave a remainder bound {bound:.3g} ≥ {tol:g}")
        return value

    v = ev(complex(3.0, t))
    cur = complex(math.log(abs(v)), cmath.phase(v))
    x, step = 3.0, 0.05
    while x > sigma:
        nxt = max(sigma, x - step)
        v = ev(complex(nxt, t))
        delta = (cmath.phase(v) - cur.imag + math.pi) % (2 * math.pi) - math.pi
        if abs(delta) > math.pi / 4 and step > 1e-6:
            step /= 2
            continue
        cur = complex(math.log(abs(v)), cur.imag + delta)
        x = nxt
        step = min(0.05, step * 1.5)
    return cur
