"""Guinand–Weil explicit formula, the log-modulus identity and the bounds for
the gamma-factor integral and the I₃/I₄ remainders.

Zeros are stored as positive ordinates; every zero sum adds h(t − γ) and
h(t + γ).
"""
from dataclasses import dataclass, field
import math
import weakref

import numpy as np
from scipy import integrate

from .errors import ConvergenceError, DomainError, IncompleteDataError
from .extremal import (
    ExtremalContext,
    TruncationPolicy,
    f_sigma,
    g_delta,
    g_delta_batch,
    ghat,
    m_delta,
    m_delta_batch,
    mhat,
)
from .gamma import reference_digamma
from .lfunc import ZetaOracle, tau
from .primes import I4_bound

ZERO_SUM_TOL = 1e-10
QUAD_TOL = 1e-6


# ---------------------------------------------------------------------------
# configuration and report types


@dataclass(frozen=True)
class FourierGammaConfig:
    """Decay constants of a test function h and the free parameters 𝔞, 𝔟.

    |h(u)| ≤ (m1 + m1p (1+Δ|u|)/(1+Δ²u²)) Δ²/(1+Δ|u|) on ℝ,
    |h(u)| ≤ (m2 + m2p/(Δ²u²))/u² for |u| ≥ M_frak, and the complex bound
    with (m3, m3p) for |z| ≥ M2_frak.
    """

    m1: float
    m1p: float
    m2: float
    m2p: float
    m3: float
    m3p: float
    M_frak: float
    M2_frak: float
    a_frak: float = 1.0
    b_frak: float = 1.0

    def __post_init__(self):
        for name in ("m1", "m1p", "m2", "m2p", "m3", "m3p", "M_frak", "M2_frak"):
            if not getattr(self, name) >= 0:
                raise DomainError(f"{name} must be nonnegative")
        if not (self.a_frak > 0 and self.b_frak > 0):
            raise DomainError("𝔞 and 𝔟 must be positive")

    @classmethod
    def for_g(cls, Delta, a_frak=1.0, b_frak=1.0):
        """Constants for g_Δ; the 1/u² bound needs Δ ≥ 0.8."""
        if not Delta >= 0.8:
            raise DomainError("the g_Δ decay bound needs Δ ≥ 0.8")
        return cls(121.0, 0.0, 4.0, 0.0, 28.0, 0.0, 1e4 / Delta, 350 / Delta, a_frak, b_frak)

    @classmethod
    def for_m(cls, Delta, sigma, a_frak=1.0, b_frak=1.0):
        """Constants for m_Δ; the 1/u² bound needs Δ ≥ 5."""
        if not Delta >= 5:
            raise DomainError("the m_Δ decay bound needs Δ ≥ 5")
        if sigma == 0.5:
            raise DomainError("the m_Δ bounds need σ ≠ 1/2")
        ell = math.log(2 / abs(sigma - 0.5))
        pi2 = math.pi**2
        return cls(
            24.0,
            2 * ell / Delta**2,
            13 + 4 * ell / (pi2 * Delta**2),
            4 * ell / pi2,
            4.0,
            4 * ell / (pi2 * Delta**2),
            17.0,
            1e4 / Delta,
            a_frak,
            b_frak,
        )


@dataclass(frozen=True)
class LInterval:
    L_up: float
    L_down: float
    components: dict = field(default_factory=dict)

    def to_dict(self):
        return {"L_up": self.L_up, "L_down": self.L_down, "components": dict(self.components)}


@dataclass(frozen=True)
class ZeroSum:
    """Σ over zeros with |γ| ≤ cutoff, and a bound for the omitted part.

    Unpacks as (value, truncation_bound).  certified is False when the decay
    constant used for the tail is outside the range where it is proven.
    """

    value: float
    truncation_bound: float
    tail_bound: float
    evaluation_error: float
    count: int
    cutoff: float
    certified: bool

    def __iter__(self):
        return iter((self.value, self.truncation_bound))


@dataclass(frozen=True)
class IdentityReport:
    sigma: float
    t: float
    main: float
    zero_sum_half: float
    zero_trunc_half: float
    log_L_5_2: float
    interval: LInterval
    lhs: object = None
    residual: object = None
    within: object = None

    def to_dict(self):
        out = {k: getattr(self, k) for k in ("sigma", "t", "main", "zero_sum_half", "zero_trunc_half", "log_L_5_2", "lhs", "residual", "within")}
        out["interval"] = self.interval.to_dict()
        return out


@dataclass(frozen=True)
class GWReport:
    total: float
    pole: float
    conductor: float
    primes: float
    gamma: float
    error: float

    def to_dict(self):
        return dict(self.__dict__)


# ---------------------------------------------------------------------------
# log L on the line Re s = 5/2


_LAMBDA_CACHE = {}
_LAMBDA_WEAK = weakref.WeakKeyDictionary()


def _support(oracle, nmax):
    """(n, Λ_L(n)) over the nonzero entries with n ≤ nmax, cached per oracle."""
    key = "zeta" if type(oracle) is ZetaOracle else None
    hit = _LAMBDA_CACHE.get(key) if key else _LAMBDA_WEAK.get(oracle)
    if hit is None or hit[0] < nmax:
        lam = oracle.lambda_array(nmax)
        n = np.flatnonzero(lam)
        hit = (nmax, n, lam[n])
        del lam
        if key:
            _LAMBDA_CACHE[key] = hit
        else:
            _LAMBDA_WEAK[oracle] = hit
    _, n, vals = hit
    k = np.searchsorted(n, nmax, side="right")
    return n[:k], vals[:k]


def _log_series_tail(c, theta, N):
    """Bound for c Σ_{n>N} Λ(n) n^{θ−5/2}/log n.

    Partial summation against ψ(u) ≤ u + √u log²u/(8π), dropping the negative
    boundary term.
    """
    s = 2.5 - theta
    beta = s + 0.5
    L = math.log(N)
    b1 = beta - 1
    log_int = N ** (1 - beta) * (L * L / b1 + 2 * L / b1**2 + 2 / b1**3)
    return c * s / L * (N ** (1 - s) / (s - 1) + log_int / (8 * math.pi))


def log_L_series(desc, s, tol=1e-12, nmax_cap=5 * 10**7):
    """log L(s) = Σ Λ_L(n)/(n^s log n) for Re s = 5/2; returns (value, tail)."""
    s = complex(s)
    if s.real != 2.5:
        raise DomainError("the series is evaluated on Re s = 5/2")
    cb = desc.coeff_bounds
    c = float(desc.euler_order) if desc.euler_order is not None else cb.C_E
    theta = 0.0 if desc.euler_order is not None else cb.theta
    N = 1 << 16
    while _log_series_tail(c, theta, N) > tol:
        N *= 2
        if N > nmax_cap:
            raise ConvergenceError("log L series needs more than the allowed number of terms")
    n, lam = _support(desc.oracle, N)
    logn = np.log(n.astype(float))
    terms = lam * np.exp(-s * logn) / logn
    value = complex(math.fsum(terms.real), math.fsum(terms.imag))
    rounding = 8 * np.finfo(float).eps * math.fsum(np.abs(terms))
    return value, _log_series_tail(c, theta, N) + rounding


def log_abs_L_5_2(desc, t, tol=1e-12):
    v, err = log_L_series(desc, complex(2.5, t), tol)
    return v.real, err


# ---------------------------------------------------------------------------
# zero sums


def _tail_integral(C_h, t, T, n_crude):
    """∫_T^∞ N(u)|φ'(u)| du with φ(u) = C_h((u−|t|)^{−2} + (u+|t|)^{−2})."""
    t = abs(t)

    def integrand(u):
        return n_crude(u) * 2 * C_h * ((u - t) ** -3 + (u + t) ** -3)

    val, err = integrate.quad(integrand, T, math.inf, limit=200)
    return val + err


def crude_counting(desc=None, C=2.0):
    """N(u) ≤ C max(d,1) u log(q u^d) as a callable (ζ: 2 u log u)."""
    if desc is None:
        d, q = 1.0, 1.0
    else:
        inv = desc.invariants
        d, q = inv.d, inv.q
    return lambda u: C * max(d, 1.0) * u * max(1.0, math.log(q * u**d))


def zero_sum(ctx, zeros, t, kind="f", margin=50.0, desc=None, n_crude=None):
    """Σ_γ h(t − γ) over both signs of the ordinates for h = f_σ, g_Δ or m_Δ.

    Only ordinates up to zeros.complete_to are used.  The truncation bound is
    the tail estimate from the 1/u² decay of h against a crude zero count,
    plus the accumulated evaluation error of h.
    """
    if kind not in ("f", "g", "m"):
        raise DomainError("kind must be 'f', 'g' or 'm'")
    T = zeros.complete_to
    if T < abs(t) + margin:
        raise IncompleteDataError(f"zeros complete to {T} only; need {abs(t) + margin}")
    gam = zeros.ordinates[zeros.ordinates <= T]
    u = np.concatenate([t - gam, t + gam])
    sigma = ctx.sigma if isinstance(ctx, ExtremalContext) else float(ctx)
    certified = True
    if kind == "f":
        vals = f_sigma(sigma, u)
        err = 16 * np.finfo(float).eps * np.abs(vals)
        C_h = 4.0
    else:
        if ctx.truncation.abs_tol < ZERO_SUM_TOL:
            ctx = ExtremalContext(ctx.sigma, ctx.Delta, TruncationPolicy(ZERO_SUM_TOL, ctx.truncation.max_terms))
        batch = g_delta_batch if kind == "g" else m_delta_batch
        vals, err = batch(ctx, u)
        if kind == "g":
            C_h = 4.0
            certified = ctx.Delta >= 0.8 and T - abs(t) >= 1e4 / ctx.Delta
        else:
            ell = math.log(2 / ctx.a)
            C_h = 13 + 4 * ell * (1 + 1 / ctx.Delta**2) / math.pi**2
            certified = ctx.Delta >= 5 and T - abs(t) >= 17
    if n_crude is None:
        n_crude = crude_counting(desc)
    tail = _tail_integral(C_h, t, T, n_crude)
    ev = math.fsum(err)
    return ZeroSum(math.fsum(vals), tail + ev, tail, ev, int(u.size), T, certified)


# ---------------------------------------------------------------------------
# the log-modulus identity


def _condition_violations(inv, t):
    need = inv.b_plus + math.sqrt((1 + inv.a_plus) * (2.5 + inv.a_plus))
    if abs(t) < need:
        return [f"|t| ≥ b⁺ + √((1+a⁺)(5/2+a⁺)) = {need:.6g} fails"]
    return []


def L_interval(desc, t):
    """Upper and lower bounds for the remainder L of the log-modulus identity."""
    inv = desc.invariants
    bad = _condition_violations(inv, t)
    if bad:
        raise DomainError("; ".join(bad))
    at = abs(t)
    d, ap, bp, f, lm = inv.d, inv.a_plus, inv.b_plus, inv.f, inv.lambda_minus
    tb = at - bp
    mus = [g.mu for g in desc.gamma_factors]
    ratio = math.log1p(((2.5 + ap) / tb) ** 2)
    comps = {
        "L1": desc.pole_order / 2 * math.log1p(17 / (2 * t * t) + (15 / (4 * t * t)) ** 2),
        "L2_up": d * (1.25 * math.log1p((2.5 + ap + bp) / at) - 0.5 * math.log1p(-bp / at)),
        "L2_down": d * (1.25 * math.log1p(-bp / at) - 0.5 * math.log1p((1 + ap + bp) / at)),
        "L3_up": 0.5 * ratio * math.fsum(max(0.0, complex(m).real - 0.5) for m in mus),
        "L3_down": 0.5 * ratio * math.fsum(min(0.0, complex(m).real - 0.5) for m in mus),
        "L4_up": (4 * d + f / (6 * lm) + f / (45 * lm**3 * tb)) / tb**2,
        "L4_down": -(d * (ap * ap + 3.5 * ap + 6.5) + f / (45 * lm**3 * tb)) / tb**2,
    }
    up = math.fsum(comps[k] for k in ("L1", "L2_up", "L3_up", "L4_up"))
    down = math.fsum(comps[k] for k in ("L2_down", "L3_down", "L4_down"))
    return LInterval(up, down, comps)


def _lhs_value(desc, sigma, t):
    if type(desc.oracle) is ZetaOracle and desc.name == "zeta":
        from .zeta import log_abs_zeta

        return log_abs_zeta(sigma, t)
    return None


def log_modulus_identity(desc, sigma, t, zeros, lhs=None, margin=50.0):
    """Pieces of the identity

        log|L(σ+it)| = (5/4 − σ/2) log τ − ½ Σ_γ f_σ(t−γ) + log|L(5/2+it)| + L.

    lhs may be supplied; for ζ it is computed.  The residual is
    lhs − main + ½Σ − log|L(5/2+it)|, which equals L minus ½ of the omitted
    zeros' contribution.
    """
    if not 0.5 <= sigma <= 1:
        raise DomainError("σ must lie in [1/2, 1]")
    inv = desc.invariants
    bad = _condition_violations(inv, t)
    if sigma == 0.5 and np.any(np.asarray(zeros.ordinates) == abs(t)):
        bad.append("t is a zero ordinate at σ = 1/2")
    if bad:
        raise DomainError("; ".join(bad))
    main = (1.25 - sigma / 2) * math.log(tau(desc, t))
    zs = zero_sum(sigma, zeros, t, "f", margin=margin, desc=desc)
    logL, _ = log_abs_L_5_2(desc, t)
    interval = L_interval(desc, t)
    if lhs is None:
        lhs = _lhs_value(desc, sigma, t)
    residual = within = None
    half, trunc = zs.value / 2, zs.truncation_bound / 2
    if lhs is not None:
        residual = lhs - main + half - logL
        within = bool(interval.L_down - trunc <= residual <= interval.L_up + trunc)
    return IdentityReport(sigma, t, main, half, trunc, logL, interval, lhs, residual, within)


# ---------------------------------------------------------------------------
# Guinand–Weil right-hand side


def _gamma_integral(lam, mu, t, hhat, Delta):
    """λ ∫ h(u) Re ψ(λ/2 + μ + λ(t−u)i) du for even real h with ĥ supported in [−Δ, Δ].

    With ψ(z) = ∫₀^∞ (e^{−x}/x − e^{−zx}/(1−e^{−x})) dx and a = Re z,
    b = λt + Im μ this equals
        ĥ(0) Re ψ(a+ib) + ∫₀^X e^{−ax} cos(bx)(ĥ(0) − ĥ(λx/2π))/(1−e^{−x}) dx
        + ĥ(0) Σ_k Re(e^{−(a+k−ib)X}/(a+k−ib)),   X = 2πΔ/λ.
    """
    mu = complex(mu)
    a = lam / 2 + mu.real
    b = lam * t + mu.imag
    if not a > 0:
        raise DomainError("needs λ/2 + Re μ > 0")
    X = 2 * math.pi * Delta / lam
    h0 = hhat(0.0)
    head = h0 * reference_digamma(complex(a, b)).real

    def F(x):
        x = max(x, 1e-9)
        return math.exp(-a * x) * (h0 - hhat(lam * x / (2 * math.pi))) / -math.expm1(-x)

    mid, err = integrate.quad(F, 0.0, X, weight="cos", wvar=b, limit=400, epsabs=QUAD_TOL / 10)
    tail = 0.0
    k = 0
    while True:
        c = complex(a + k, -b)
        term = (np.exp(-c * X) / c).real
        tail += term
        if abs(term) < 1e-18 or k > 10000:
            break
        k += 1
    return lam * (head + mid + h0 * tail), lam * err


def extremal_test_function(ctx, kind):
    """(h, ĥ) for h = g_Δ or m_Δ."""
    if kind == "g":
        return (lambda z: g_delta(ctx, z).value), (lambda xi: ghat(ctx, xi).value)
    if kind == "m":
        return (lambda z: m_delta(ctx, z).value), (lambda xi: mhat(ctx, xi).value)
    raise DomainError("kind must be 'g' or 'm'")


def guinand_weil_rhs(desc, h, t, Delta):
    """Right-hand side of the explicit formula for Σ_γ h(t − γ).

    h is a pair (h, ĥ) with h even and real on ℝ and ĥ supported in
    [−Δ, Δ]; the prime sum then stops at e^{2πΔ}.
    """
    hfun, hhat = h
    pole = 2 * desc.pole_order * complex(hfun(complex(t, -0.5))).real
    conductor = math.log(desc.Q) / math.pi * hhat(0.0) if desc.Q != 1 else 0.0
    nmax = int(math.floor(math.exp(2 * math.pi * Delta)))
    if nmax >= 2:
        lam = desc.oracle.lambda_array(nmax)
        idx = np.flatnonzero(lam)
        parts = []
        for n in idx:
            ln = math.log(n)
            w = hhat(ln / (2 * math.pi))
            parts.append((np.conj(lam[n]) * w * complex(math.cos(t * ln), math.sin(t * ln))).real / math.sqrt(n))
        primes = -math.fsum(parts) / math.pi
    else:
        primes = 0.0
    gam = []
    err = 0.0
    for g in desc.gamma_factors:
        v, e = _gamma_integral(g.lam, g.mu, t, hhat, Delta)
        gam.append(v)
        err += e
    gamma_term = math.fsum(gam) / math.pi
    total = math.fsum([pole, conductor, primes, gamma_term])
    return GWReport(total, pole, conductor, primes, gamma_term, err / math.pi)


# ---------------------------------------------------------------------------
# gamma-factor and remainder bounds


def fourier_gamma_violations(desc, cfg, Delta, t):
    """List of failed hypotheses for the gamma-integral bound (empty if all hold)."""
    inv = desc.invariants
    at = abs(t)
    out = []
    if at < 4 * (inv.a_plus + inv.b_plus) + 4:
        out.append(f"|t| ≥ 4(a⁺+b⁺)+4 = {4 * (inv.a_plus + inv.b_plus) + 4:.6g} fails")
    if cfg.a_frak * math.sqrt(at / Delta) < cfg.M_frak:
        out.append(f"𝔞√(|t|/Δ) = {cfg.a_frak * math.sqrt(at / Delta):.6g} < 𝔐 = {cfg.M_frak:.6g}")
    lhs = at - cfg.b_frak / inv.lambda_minus * math.sqrt(Delta * at) - inv.b_plus
    if lhs < cfg.M_frak:
        out.append(f"|t| − (𝔟/λ⁻)√(Δ|t|) − b⁺ = {lhs:.6g} < 𝔐 = {cfg.M_frak:.6g}")
    if cfg.a_frak > 0.25 * math.sqrt(Delta * at):
        out.append(f"𝔞 ≤ ¼√(Δ|t|) = {0.25 * math.sqrt(Delta * at):.6g} fails")
    return out


def I_hat_bounds(desc, cfg, Delta, t, allow_invalid=False):
    """(Î₁, Î₂) bounding the remainder of the gamma-factor integral."""
    bad = fourier_gamma_violations(desc, cfg, Delta, t)
    if bad and not allow_invalid:
        raise DomainError("; ".join(bad))
    inv = desc.invariants
    d, ap, bp, lp, lm = inv.d, inv.a_plus, inv.b_plus, inv.lambda_plus, inv.lambda_minus
    at = abs(t)
    A, B = cfg.a_frak, cfg.b_frak
    r = math.sqrt(Delta / at)
    s = math.sqrt(Delta * at)
    c = ap + bp + 0.5
    I1 = d / A * math.log(2 * at) * r * (cfg.m2 + cfg.m2p * Delta / (3 * A * A * at)) + d * r * (
        cfg.m1 * math.log1p(A * s) + cfg.m1p * math.atan(A * s)
    ) * (A + c * r) * (1 + A / s + c / at)
    k = lp * (0.5 + ap) + 1 / 6
    Dt = Delta * at
    piece1 = d / (2 * B * B * at) * (k + math.sqrt(2) / (15 * B * B * Dt)) * (
        cfg.m1 * math.log1p(Dt) + cfg.m1p * Delta * math.atan(Dt) + cfg.m2 / Dt + cfg.m2p / (3 * Dt**3)
    )
    Bv = B / lm * s + bp
    den = t * t - Bv * Bv
    piece2 = d * (k + math.sqrt(2) / 15 * (2 / lm) ** 2) * (2 / lm) ** 2 * Bv / den * (
        cfg.m2 + cfg.m2p * (3 * t * t + Bv * Bv) / (3 * Delta**2 * den**2)
    )
    return I1, piece1 + piece2


def I3_bound(desc, cfg, Delta, t):
    if abs(t) < cfg.M2_frak:
        raise DomainError(f"|t| ≥ 𝔐₂ = {cfg.M2_frak:.6g} fails")
    return desc.pole_order * Delta**2 * (cfg.m3 / (1 + Delta * abs(t)) + cfg.m3p / (1 + Delta**2 * t * t)) * math.exp(
        math.pi * Delta
    )


def I3_I4_bounds(desc, ctx, t, kind, mode="POLY", cfg=None, **i4_options):
    """(I₃ bound, I₄ BoundTerm) for h = g_Δ or m_Δ."""
    if cfg is None:
        cfg = FourierGammaConfig.for_g(ctx.Delta) if kind == "g" else FourierGammaConfig.for_m(ctx.Delta, ctx.sigma)
    bad = fourier_gamma_violations(desc, cfg, ctx.Delta, t)
    if bad:
        raise DomainError("; ".join(bad))
    return I3_bound(desc, cfg, ctx.Delta, t), I4_bound(desc, ctx, mode, kind, **i4_options)
