"""Extremal bandlimited minorant g_Δ and majorant m_Δ of f_σ.

Both functions are Hermite-type interpolation series with sinc² kernels:

    G_Δ(w) = Σ_n sinc²(w − c_n) (F_Δ(c_n) + (w − c_n) F_Δ'(c_n)),  c_n = n − ½,
    M_Δ(w) = Σ_n sinc²(w − n)   (f_σ(n/Δ) + (w − n) f_σ'(n/Δ)/Δ),

with sinc(u) = sin(πu)/(πu).  The minorant form follows from the defining
series because cos²(πw) = sin²(π(w − n + ½)).  g_Δ(z) = G_Δ(Δz) and
m_Δ(z) = M_Δ(Δz).  Their Fourier transforms are supported in [−Δ, Δ] and are
evaluated from absolutely convergent exponential series.
"""
from dataclasses import dataclass, field
import math

import numpy as np

from .errors import DomainError

_EPS = np.finfo(float).eps
_NODE_RADIUS = 1e-6


@dataclass(frozen=True)
class TruncationPolicy:
    abs_tol: float = 1e-12
    max_terms: int = 10**6

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise DomainError("abs_tol must be positive")
        if int(self.max_terms) < 1:
            raise DomainError("max_terms must be a positive integer")


@dataclass(frozen=True)
class ExtremalContext:
    sigma: float
    Delta: float
    truncation: TruncationPolicy = field(default_factory=TruncationPolicy)

    def __post_init__(self):
        if not 0.5 < self.sigma <= 1:
            raise DomainError(f"sigma must lie in (1/2, 1], got {self.sigma}")
        if not self.Delta > 0:
            raise DomainError(f"Delta must be positive, got {self.Delta}")

    @property
    def a(self):
        """σ − ½."""
        return self.sigma - 0.5


@dataclass(frozen=True)
class SeriesValue:
    """A truncated series: value, certified error bound, terms used."""

    value: object
    tail_bound: float
    terms: int
    converged: bool


# ---------------------------------------------------------------------------
# base functions


def _sigma_of(ctx):
    return ctx.sigma if isinstance(ctx, ExtremalContext) else float(ctx)


def f_sigma(ctx, x):
    """log((4 + x²)/((σ − ½)² + x²))."""
    a = _sigma_of(ctx) - 0.5
    x2 = np.square(x)
    return np.log1p((4 - a * a) / (a * a + x2))


def f_sigma_prime(ctx, x):
    a = _sigma_of(ctx) - 0.5
    x = np.asarray(x, dtype=float) if not np.iscomplexobj(x) else x
    x2 = np.square(x)
    return -2 * x * (4 - a * a) / ((4 + x2) * (a * a + x2))


def F_delta(ctx, x):
    """F_Δ(x) = f_σ(x/Δ)."""
    return f_sigma(ctx, np.asarray(x) / ctx.Delta)


def F_delta_prime(ctx, x):
    return f_sigma_prime(ctx, np.asarray(x) / ctx.Delta) / ctx.Delta


def delta_factor(xi):
    """1 if |ξ| < 1 else 2/π²."""
    return np.where(np.abs(xi) < 1, 1.0, 2 / math.pi**2)


def sinc(u):
    """sin(πu)/(πu) with a Taylor branch near 0; accepts complex input."""
    u = np.asarray(u)
    small = np.abs(u) < _NODE_RADIUS
    safe = np.where(small, 1.0, u)
    pu = np.pi * safe
    out = np.sin(pu) / pu
    pu0 = np.pi * u
    taylor = 1 - pu0 * pu0 / 6
    return np.where(small, taylor, out)


# ---------------------------------------------------------------------------
# interpolation series


def _node_radius(ctx, w_abs, w_imag_abs):
    """Truncation radius K and the tail bound for nodes with |c| > K.

    Nodes with |c| ≥ 2|w| satisfy |w − c| ≥ |c|/2, and with
    |F_Δ(c)| ≤ 4Δ²/c², |F_Δ'(c)| ≤ 8Δ²/|c|³, |sin πu|² ≤ cosh²(π Im u), each
    term is at most 32Δ² cosh²/(π² c⁴).  Both sides together contribute at
    most 64Δ² cosh²/(3π² (K − 1)³).
    """
    tol = ctx.truncation.abs_tol
    ch2 = math.cosh(math.pi * w_imag_abs) ** 2
    scale = 64 * ctx.Delta**2 * ch2 / (3 * math.pi**2)
    K = max(2 * w_abs + 2, (scale / tol) ** (1 / 3) + 2)
    converged = True
    if K > ctx.truncation.max_terms:
        K = float(ctx.truncation.max_terms)
        converged = K >= 2 * w_abs + 2
    tail = scale / (K - 1) ** 3 if converged else math.inf
    return K, tail, converged


def _nodes(kind, K):
    off = 0.5 if kind == "g" else 0.0
    n = np.arange(-math.floor(K + off), math.floor(K + off) + 2, dtype=float)
    c = n - off
    return c[np.abs(c) <= K]


def _node_data(ctx, c):
    v = f_sigma(ctx, c / ctx.Delta)
    d = f_sigma_prime(ctx, c / ctx.Delta) / ctx.Delta
    return v, d


def _kernel_terms(kind, w, c, v, d):
    """sinc²(w − c)(v + (w − c)d) for node arrays c (broadcast against w).

    For integer-spaced nodes sin²(π(w − c)) = sin²(π r) with r the offset of w
    from its nearest node, so the kernel needs a single sine per point; r is
    formed by an exact subtraction, which keeps the kernel accurate near nodes.
    """
    off = 0.5 if kind == "g" else 0.0
    nearest = np.round(w - off) + off
    r = w - nearest
    S = np.sin(np.pi * r) ** 2 / np.pi**2
    u = w - c
    near = np.abs(u) < _NODE_RADIUS
    with np.errstate(divide="ignore", invalid="ignore"):
        far = S * (v / (u * u) + d / u)
    if np.any(near):
        pu = np.pi * u
        k2 = (1 - pu * pu / 6) ** 2
        return np.where(near, k2 * (v + u * d), far)
    return far


def _interp_scalar(ctx, kind, z):
    w = complex(z) * ctx.Delta
    K, tail, converged = _node_radius(ctx, abs(w), abs(w.imag))
    c = _nodes(kind, K)
    v, d = _node_data(ctx, c)
    if w.imag == 0:
        terms = _kernel_terms(kind, np.float64(w.real), c, v, d)
        value = math.fsum(terms)
        rounding = 16 * _EPS * math.fsum(np.abs(terms))
    else:
        u = w - c
        terms = sinc(u) ** 2 * (v + u * d)
        value = complex(math.fsum(terms.real), math.fsum(terms.imag))
        rounding = 16 * _EPS * math.fsum(np.abs(terms))
    return SeriesValue(value, tail + rounding, int(c.size), converged)


def g_delta(ctx, z):
    """g_Δ(z) = G_Δ(Δz); real for real z."""
    return _interp_scalar(ctx, "g", z)


def m_delta(ctx, z):
    """m_Δ(z) = M_Δ(Δz); real for real z."""
    return _interp_scalar(ctx, "m", z)


def _interp_block(ctx, kind, w, chunk_elems):
    K, tail, converged = _node_radius(ctx, float(np.max(np.abs(w), initial=0.0)), 0.0)
    if not converged:
        raise DomainError("interpolation series cannot reach abs_tol within max_terms")
    c = _nodes(kind, K)
    v, d = _node_data(ctx, c)
    total = np.zeros_like(w)
    comp = np.zeros_like(w)
    absum = np.zeros_like(w)
    block = max(16, chunk_elems // max(1, w.size))
    for start in range(0, c.size, block):
        cb, vb, db = c[start : start + block], v[start : start + block], d[start : start + block]
        t = _kernel_terms(kind, w[:, None], cb[None, :], vb[None, :], db[None, :])
        s = t.sum(axis=1)
        absum += np.abs(t).sum(axis=1)
        new = total + s
        big = np.abs(total) >= np.abs(s)
        comp += np.where(big, (total - new) + s, (s - new) + total)
        total = new
    return total + comp, tail + 16 * _EPS * absum


def _interp_batch(ctx, kind, x, chunk_elems=2_000_000):
    """Vectorised real evaluation.  Returns (values, error_bounds).

    Points are grouped by |w| so that each group only pays for the nodes its
    own truncation radius needs (the radius grows like 2|w|).  Node
    contributions are summed in blocks with Neumaier's compensated summation.
    """
    x = np.asarray(x, dtype=float)
    w = x.ravel() * ctx.Delta
    values = np.empty_like(w)
    err = np.empty_like(w)
    aw = np.abs(w)
    order = np.argsort(aw, kind="stable")
    K0, _, _ = _node_radius(ctx, 0.0, 0.0)
    edge = K0 / 2
    i = 0
    n = w.size
    while i < n:
        j = int(np.searchsorted(aw[order], edge, side="right"))
        j = max(j, i + 1)
        idx = order[i:j]
        values[idx], err[idx] = _interp_block(ctx, kind, w[idx], chunk_elems)
        i = j
        edge *= 1.5
    return values.reshape(x.shape), err.reshape(x.shape)


def g_delta_batch(ctx, x):
    return _interp_batch(ctx, "g", x)


def m_delta_batch(ctx, x):
    return _interp_batch(ctx, "m", x)


# ---------------------------------------------------------------------------
# Fourier transforms


def _diff_exp_over(a, b, s):
    """(e^{−a s} − e^{−b s})/s, continuous at s = 0."""
    s = np.asarray(s, dtype=float)
    with np.errstate(invalid="ignore", divide="ignore"):
        out = (np.expm1(-a * s) - np.expm1(-b * s)) / s
    return np.where(s == 0, b - a, out)


def _hat(ctx, xi, alternating):
    xi = abs(float(xi))
    D = ctx.Delta
    if xi > D:
        return SeriesValue(0.0, 0.0, 0, True)
    a = 2 * math.pi * ctx.a
    b = 4 * math.pi
    r = math.exp(-2 * math.pi * D * ctx.a)
    tol = ctx.truncation.abs_tol
    # |term_k| ≤ (3/Δ) r^k for k ≥ 1, so the tail after K terms is (3/Δ) r^K/(1 − r)
    if r < 1:
        K = 1 + max(0, math.ceil(math.log(tol * D * (1 - r) / 3) / math.log(r)))
    else:
        K = ctx.truncation.max_terms
    converged = K <= ctx.truncation.max_terms
    K = min(K, ctx.truncation.max_terms)
    k = np.arange(K, dtype=float)
    s1 = xi + k * D
    first = (k + 1) * _diff_exp_over(a, b, s1)
    s2 = D * (k + 2) - xi
    second = (k + 1) * _diff_exp_over(a, b, s2)
    terms = first - second
    if alternating:
        terms = terms * np.where(k % 2 == 0, 1.0, -1.0)
    value = math.fsum(terms)
    tail = 3 / D * r**K / (1 - r) if r < 1 else math.inf
    tail += 8 * _EPS * math.fsum(np.abs(terms))
    return SeriesValue(value, tail, K, converged and tail <= max(tol, 1e3 * _EPS * abs(value)))


def ghat(ctx, xi):
    """Fourier transform of g_Δ at ξ (zero outside [−Δ, Δ])."""
    return _hat(ctx, xi, alternating=True)


def mhat(ctx, xi):
    """Fourier transform of m_Δ at ξ (zero outside [−Δ, Δ])."""
    return _hat(ctx, xi, alternating=False)


def _log_ratio0(ctx):
    D = ctx.Delta
    return math.log1p(math.exp(-(2 * ctx.sigma - 1) * math.pi * D)) - math.log1p(
        math.exp(-4 * math.pi * D)
    )


def ghat0_closed(ctx):
    """ĝ_Δ(0) from the closed form."""
    return 2 * math.pi * (2.5 - ctx.sigma - _log_ratio0(ctx) / (math.pi * ctx.Delta))


def mhat0_closed(ctx, printed=False):
    """m̂_Δ(0) in closed form.

    The default is the value of the exponential series at ξ = 0, namely
    2π(5/2 − σ − (1/(πΔ)) log((1 − e^{−(2σ−1)πΔ})/(1 − e^{−4πΔ}))).
    printed=True returns the variant with 1 + e^{…} and a plus sign, which
    does not agree with the series (kept for comparison).
    """
    D = ctx.Delta
    if printed:
        return 2 * math.pi * (2.5 - ctx.sigma + _log_ratio0(ctx) / (math.pi * D))
    lr = math.log(-math.expm1(-(2 * ctx.sigma - 1) * math.pi * D)) - math.log(
        -math.expm1(-4 * math.pi * D)
    )
    return 2 * math.pi * (2.5 - ctx.sigma - lr / (math.pi * D))


def ghat_mhat_pointwise_bounds(ctx, n, x=None):
    """Upper bounds for (1/2π)|ĝ_Δ(log n/2π)| and (1/2π)|m̂_Δ(log n/2π)|.

    Valid for 2 ≤ n ≤ x = e^{2πΔ}.
    """
    if x is None:
        x = math.exp(2 * math.pi * ctx.Delta)
    n = np.asarray(n, dtype=float)
    if np.any(n < 2) or np.any(n > x * (1 + 1e-15)):
        raise DomainError("pointwise transform bounds need 2 ≤ n ≤ x")
    a = ctx.a
    logn = np.log(n)
    logx = math.log(x)
    na = n**a
    xa = x**a
    x2a = x ** (2 * a)
    head = 1 / (na * logn) - na / ((2 * logx - logn) * x2a)
    common = 1 / (n * n * logn) + 3 / (n * n * (x * x - 1) * logx)
    bound_g = head - (1 / na - na / x2a) / ((xa + 1) * logx) + common
    bound_m = xa / (xa - 1) * head + common
    return bound_g, bound_m


def fourier_transform_numeric(ctx, kind, xi, X=None, tail_cut=None):
    """∫ h(x) e^{−2πixξ} dx for h = g_Δ or m_Δ, by sampling.

    h is bandlimited to [−Δ, Δ], so the trapezoid rule with step
    h_s = 1/(2Δ + 2|ξ| + 1) is exact on the whole line (Poisson summation).
    Samples with |x| ≤ X use the interpolation series; beyond X the function
    is replaced by f_σ.  Since f_σ − h only decays like 1/x², that swap costs
    roughly 1/X in absolute terms (about 2e-3 at the default X = 400).
    """
    D = ctx.Delta
    step = 1 / (2 * D + 2 * abs(xi) + 1)
    if X is None:
        X = 400.0
    if tail_cut is None:
        tail_cut = 2e6
    jmax = int(X / step)
    j = np.arange(-jmax, jmax + 1)
    xs = j * step
    vals, _ = _interp_batch(ctx, kind, xs)
    core = step * math.fsum(vals * np.cos(2 * math.pi * xs * xi))
    # far samples: even integrand, both sides
    acc = 0.0
    start = jmax + 1
    jend = int(tail_cut / step)
    blk = 1_000_000
    for s in range(start, jend, blk):
        jj = np.arange(s, min(s + blk, jend), dtype=float)
        xx = jj * step
        acc += math.fsum(f_sigma(ctx, xx) * np.cos(2 * math.pi * xx * xi))
    return core + 2 * step * acc
