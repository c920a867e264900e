"""Chebyshev-type sums, the A_f/B_f/C integrals, the η family and the I₄ bounds.

I₄ is the prime side (1/2π) Σ |Λ_L(n)| n^{−1/2} |ĥ(log n/2π)| of the explicit
formula for h = g_Δ or m_Δ; since ĥ vanishes beyond Δ only n ≤ x = e^{2πΔ}
contribute.
"""
from dataclasses import dataclass
import itertools
import math
import weakref

import numpy as np
from scipy import integrate

from .afunc import A1, A2, A6, Theta, theta1, theta2
from .arith import mangoldt_table
from .errors import ConvergenceError, DescriptorError, DomainError
from .extremal import ExtremalContext, ghat, mhat
from .terms import BoundTerm, envelope, exact

PSI_CAP = 10**7
EULER_GAMMA = 0.5772156649015329
LOG2 = math.log(2)
QUAD_RTOL = 1e-9


@dataclass(frozen=True)
class HelperConstants:
    theta1: object = theta1
    theta2: object = theta2
    Theta: object = Theta
    euler_gamma: float = EULER_GAMMA


# ---------------------------------------------------------------------------
# ψ̃ tables


class PsiTildeTable:
    """ψ̃_L(n) = Σ_{k ≤ n} |Λ_L(k)| for integers 0 ≤ n ≤ x_max."""

    def __init__(self, oracle, x_max):
        n = int(math.floor(x_max))
        if n > PSI_CAP:
            raise DomainError(f"ψ̃ tables are capped at {PSI_CAP}, asked for {n}")
        n = max(n, 2)
        self.oracle = oracle
        self.x_max = n
        self.cumulative = np.cumsum(np.abs(oracle.lambda_array(n)))
        self.cumulative.setflags(write=False)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if np.any(x > self.x_max):
            raise DomainError(f"table covers x ≤ {self.x_max}")
        idx = np.floor(np.maximum(x, 0)).astype(np.int64)
        out = self.cumulative[idx]
        return float(out) if out.ndim == 0 else out


_TABLES = weakref.WeakKeyDictionary()


def psi_table(oracle, x):
    """Cached table covering x, extended by doubling when too short."""
    tab = _TABLES.get(oracle)
    if tab is None or tab.x_max < x:
        if x > PSI_CAP:
            raise DomainError(f"ψ̃ tables are capped at {PSI_CAP}, asked for {x}")
        size = max(x, 2 * tab.x_max if tab else 1024)
        tab = PsiTildeTable(oracle, min(size, PSI_CAP))
        _TABLES[oracle] = tab
    return tab


def psi_tilde(desc, x):
    if x < 0:
        raise DomainError("x must be nonnegative")
    if x < 2:
        return 0.0
    return psi_table(desc.oracle, x)(x)


_CHEB = {}


def chebyshev_psi_table(nmax):
    """ψ(n) for n = 0..nmax (ζ's Λ, independent of any descriptor)."""
    nmax = int(nmax)
    tab = _CHEB.get("psi")
    if tab is None or tab.size <= nmax:
        if nmax > PSI_CAP:
            raise DomainError(f"ψ tables are capped at {PSI_CAP}")
        tab = np.cumsum(mangoldt_table(max(nmax, 1024)))
        _CHEB["psi"] = tab
    return tab[: nmax + 1]


def chebyshev_error_bound(x):
    """2√x log²x, the unconditional-under-RH bound for |ψ(x) − x|."""
    return 2 * math.sqrt(x) * math.log(x) ** 2


def harmonic_bound(X, Y):
    """Upper bound for Σ_{X<n≤Y} 1/n."""
    if not 1 <= X < Y:
        raise DomainError("need 1 ≤ X < Y")
    return math.log(Y / X) + 1 / (2 * Y) + 2 * (LOG2 + EULER_GAMMA - 1) / X


# ---------------------------------------------------------------------------
# Mangoldt sum bounds


def _m123(profile, x):
    """(m₁(x), m₂(x), m₃(x)) for a conjecture profile."""
    if profile.mode == "CONJ1":
        m1 = math.sqrt(profile.C_P1(x))
        m2 = math.sqrt(profile.C_P1(x) + profile.C_P2)
        return m1, m2, m2 / math.sqrt(math.log(x))
    if profile.mode == "CONJ2":
        m2 = profile.C_P2
        return profile.C_P1(x), m2, m2 / math.log(x)
    raise DescriptorError(f"profile mode {profile.mode!r} has no m-functions")


def _require_profile(mode, profile):
    if profile is None or profile.mode != mode:
        raise DescriptorError(f"mode {mode} needs a conjecture profile with mode {mode}")


def _require_poly(desc):
    if desc.euler_order is None:
        raise DescriptorError("POLY mode needs a polynomial Euler product (euler_order)")
    return desc.euler_order


def _require_eps(eps):
    if eps is None or not 0 < eps < 0.5:
        raise DomainError("GENERAL mode needs ε in (0, 1/2)")


def mangoldt_sum_bound(desc, x, mode, eps=None, profile=None, envelope_constants=None):
    """Upper bound for ψ̃_L(x) in one of the modes GENERAL, CONJ1, CONJ2, POLY."""
    if not x >= 2:
        raise DomainError("x must be at least 2")
    L = math.log(x)
    cb = desc.coeff_bounds
    ec = envelope_constants
    if mode == "POLY":
        m = _require_poly(desc)
        return BoundTerm(m * x, (exact("chebyshev", "m √x log²x/(8π)", m * math.sqrt(x) * L * L / (8 * math.pi)),), "POLY")
    if mode == "GENERAL":
        _require_eps(eps)
        cr = cb.C_R(eps)
        shape = (cr + cb.C_E) * x ** (0.5 + max(cb.theta, eps)) * L * L
        return BoundTerm(cr * x ** (1 + eps), (envelope("O_rest", "(C_R+C_E) x^{1/2+max(θ,ε)} log²x", shape, ec),), "GENERAL")
    if mode == "CONJ1":
        _require_profile(mode, profile)
        c1 = profile.C_P1(x)
        terms = (
            envelope("O_primes", "√(C_P1+C_P2) x/√log x", math.sqrt(c1 + profile.C_P2) * x / math.sqrt(L), ec),
            envelope("O_powers", "C_E x^{1/2+θ} log²x", cb.C_E * x ** (0.5 + cb.theta) * L * L, ec),
        )
        return BoundTerm(math.sqrt(c1) * x, terms, "CONJ1")
    if mode == "CONJ2":
        _require_profile(mode, profile)
        terms = (
            exact("secondary", "Ĉ_P2 x/log x", profile.C_P2 * x / L),
            envelope("O_powers", "C_E x^{1/2+θ} log²x", cb.C_E * x ** (0.5 + cb.theta) * L * L, ec),
        )
        return BoundTerm(profile.C_P1(x) * x, terms, "CONJ2")
    raise DomainError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# A_f, B_f and the secondary integrals


def _sigma(ctx, allow_half=False):
    s = ctx.sigma if isinstance(ctx, ExtremalContext) else float(ctx)
    if not (0.5 < s <= 1 or (allow_half and s == 0.5)):
        raise DomainError(f"σ must lie in (1/2, 1], got {s}")
    return s


def _quad(fn, a, b, what):
    val, err = integrate.quad(fn, a, b, epsabs=0.0, epsrel=QUAD_RTOL / 10, limit=500)
    if err > QUAD_RTOL * abs(val) and err > 1e-13:
        raise ConvergenceError(f"quadrature for {what} did not reach 1e-9 (err {err:.2e})")
    return val


def A_f_B_f(ctx, fprime, x):
    """(A_f(x,σ), B_f(x,σ)) for a derivative fprime by adaptive quadrature."""
    sigma = _sigma(ctx)
    if not x >= 2:
        raise DomainError("x must be at least 2")
    if x == 2:
        return 0.0, 0.0
    L = math.log(x)
    x2 = x ** (2 * sigma - 1)

    def a_int(u):
        lu = math.log(u)
        return fprime(u) * (1 / (u**sigma * lu) - u ** (sigma - 1) / ((2 * L - lu) * x2))

    def b_int(u):
        return fprime(u) * (u**-sigma - u ** (sigma - 1) / x2)

    A = _quad(a_int, 2, x, "A_f")
    B = _quad(b_int, 2, x, "B_f") / ((x ** (sigma - 0.5) + 1) * L)
    return A, B


def second_integral(x, sigma):
    """∫₂ˣ du/(u^σ(2 log x − log u)) by quadrature in v = log u."""
    L = math.log(x)
    return _quad(lambda v: math.exp((1 - sigma) * v) / (2 * L - v), LOG2, L, "second integral")


def second_integral_estimate(x, sigma):
    """(x^{1−σ}/((1−σ) log x), bound on the difference from the integral)."""
    if not (x >= 2 and sigma < 1):
        raise DomainError("needs x ≥ 2 and σ < 1")
    L = math.log(x)
    s = 1 - sigma
    main = x**s / (s * L)
    bound = (1 + s * L * L / (2 * L - LOG2) * (2 / x) ** s) * x**s / (s * s * L * L)
    return main, bound


def _psi_minus_u_integral(w, wprime_free_int, x):
    """∫₂ˣ (ψ(u) − u) w'(u) du for smooth w, exactly in the ψ part.

    ψ is constant on [n, n+1), so ∫ ψ w' = Σ ψ(n)(w(b_n) − w(n)); the
    u·w' part is integrated by parts into boundary terms plus ∫ w.
    """
    nmax = int(math.floor(x))
    psi = chebyshev_psi_table(nmax)
    n = np.arange(2, nmax + 1, dtype=float)
    right = np.minimum(n + 1, x)
    steps = psi[2 : nmax + 1] * (w(right) - w(n))
    step_part = math.fsum(steps)
    return step_part - (x * float(w(np.float64(x))) - 2 * float(w(np.float64(2.0)))) + wprime_free_int


def C_terms(x, sigma):
    """(C₁, C₂, C₃) with the ψ(u) − u integrals taken against the sieved ψ."""
    if not (x >= 2 and 0.5 < sigma < 1):
        raise DomainError("needs x ≥ 2 and σ ∈ (1/2, 1)")
    if x > PSI_CAP:
        raise DomainError(f"x beyond the sieve cap {PSI_CAP}")
    L = math.log(x)
    x2 = x ** (2 * sigma - 1)

    def w1(u):
        u = np.asarray(u, dtype=float)
        lu = np.log(u)
        return u ** (sigma - 1) / (x2 * (2 * L - lu)) - 1 / (u**sigma * lu)

    def w3(u):
        u = np.asarray(u, dtype=float)
        return u**-sigma - u ** (sigma - 1) / x2

    int1 = _psi_minus_u_integral(w1, _quad(lambda u: float(w1(u)), 2, x, "C1"), x) if x > 2 else 0.0
    int3 = _psi_minus_u_integral(w3, _quad(lambda u: float(w3(u)), 2, x, "C3"), x) if x > 2 else 0.0
    C1 = 2 ** (1 - sigma) / LOG2 - 2**sigma / ((2 * L - LOG2) * x2) + int1
    C2 = 0.35 + 1.17 / ((x * x - 1) * L)
    C3 = (-(2 ** (1 - sigma)) + 2**sigma / x2 + int3) / ((x ** (sigma - 0.5) + 1) * L)
    return C1, C2, C3


# ---------------------------------------------------------------------------
# η family


def int_theta1(nu1):
    """∫₀^{ν₁} θ₁(u) du."""
    return _quad(theta1, 0.0, nu1, "θ₁ integral") if nu1 != 0 else 0.0


def int_theta2(a, b):
    """∫_a^b θ₂(u) du (negative when b < a)."""
    return _quad(theta2, a, b, "θ₂ integral") if a != b else 0.0


@dataclass(frozen=True)
class EtaValues:
    eta1: float
    eta2: float
    eta3: float
    eta4: float
    eta5: float
    near_one: bool   # 1 − σ ≤ α/log x branch used
    near_half: bool  # σ − 1/2 ≤ α/log x branch used
    # pieces of η₂ and η₃, for itemized reports
    parts: tuple = ()

    @property
    def T(self):
        return self.eta2 + self.eta3

    @property
    def case(self):
        if self.near_half and self.near_one:
            return "a+b"
        return "a" if self.near_half else ("b" if self.near_one else "c")


def eta_conditions(x, sigma, alpha):
    L = math.log(x)
    return (sigma - 0.5 <= alpha / L), (1 - sigma <= alpha / L)


def eta_T(x, sigma, alpha, nu1, nu2, near_half=None, near_one=None):
    """η₁…η₅ and T at (x, σ).

    near_half / near_one choose the α-branches; None means "use the branch
    whenever its condition holds".  Forcing a branch whose condition fails
    raises; the 'otherwise' branches are always admissible.
    """
    if not (x >= 2 and 0.5 <= sigma < 1):
        raise DomainError("needs x ≥ 2 and σ ∈ [1/2, 1)")
    if not (0 < nu1 < 1 and nu2 > 1):
        raise DomainError("needs ν₁ ∈ (0,1) and ν₂ > 1")
    if alpha is None or not alpha > 0:
        raise DomainError("α must be positive")
    cond_half, cond_one = eta_conditions(x, sigma, alpha)
    near_half = cond_half if near_half is None else near_half
    near_one = cond_one if near_one is None else near_one
    if sigma == 0.5 and not near_half:
        raise DomainError("at σ = 1/2 only the σ − 1/2 ≤ α/log x branch is finite")
    if near_half and not cond_half:
        raise DomainError("σ − 1/2 ≤ α/log x fails; that branch is not available")
    if near_one and not cond_one:
        raise DomainError("1 − σ ≤ α/log x fails; that branch is not available")
    L = math.log(x)
    s = 1 - sigma
    h = 2 ** (sigma - 0.5)
    if near_one:
        eta1 = 0.0
        parts2 = (("int θ₂", int_theta2(0.5 * LOG2, alpha)), ("2^{1-σ}/log 2", 2**s / LOG2))
        eta4 = 0.0
    else:
        eta1 = (2 * sigma - 1) / (sigma * s) * x**s / L
        parts2 = (
            ("ν-quadratic", ((nu2 * sigma) ** 2 + s * s) * x**s / ((sigma * s) ** 2 * L * L)),
            ("ν-power", x ** (s / nu2) / nu1**2),
            ("int θ₁", int_theta1(nu1)),
            ("σ-constant", (1 - sigma * 2**s) / (s * LOG2)),
        )
        eta4 = sigma * 2**s / s
    if near_half:
        parts3 = (("2(α+1) log x", 2 * (alpha + 1) * L), ("−2(α+1) log 2", -2 * (alpha + 1) * LOG2))
        eta5 = L**3 / 3
    else:
        parts3 = (("4/(4π 2^{σ-1/2}(2σ-1))", 1 / (math.pi * h * (2 * sigma - 1))), ("−log 2/(4π 2^{σ-1/2})", -LOG2 / (4 * math.pi * h)))
        eta5 = s * (32 + 4 * (8 * sigma - 4) * LOG2 + 4 * (2 * sigma - 1) ** 2 * LOG2**2) / (h * (2 * sigma - 1) ** 3)
    eta2 = math.fsum(v for _, v in parts2)
    eta3 = math.fsum(v for _, v in parts3)
    return EtaValues(eta1, eta2, eta3, eta4, eta5, near_one, near_half, parts2 + parts3)


# ---------------------------------------------------------------------------
# I₄ bounds


def _x_of(ctx, x):
    if x is None:
        x = math.exp(2 * math.pi * ctx.Delta)
    if not x >= 2:
        raise DomainError("x = e^{2πΔ} must be at least 2")
    return x


def _poly_terms(m, x, sigma, eta, kind):
    L = math.log(x)
    xa = x ** (sigma - 0.5)
    terms = []
    if kind == "g":
        terms.append(exact("eta1", "m η₁ x^{σ-1/2}/(x^{σ-1/2}+1)", m * eta.eta1 * xa / (xa + 1)))
        main = m * math.log(L)
        for label, v in eta.parts:
            terms.append(exact(label, "m × part of T", m * v))
        terms.append(exact("0.72", "m × 0.72", m * 0.72))
        terms.append(exact("eta4+eta5", "m (η₄+η₅)/((x^{σ-1/2}+1) log x)", m * (eta.eta4 + eta.eta5) / ((xa + 1) * L)))
        return main, terms
    P = xa / (xa - 1)
    main = m * P * math.log(L)
    terms.append(exact("eta1", "m P η₁", m * P * eta.eta1))
    for label, v in eta.parts:
        terms.append(exact(label, "m P × part of T", m * P * v))
    terms.append(exact("-loglog 2", "−m P loglog 2", -m * P * math.log(LOG2)))
    terms.append(exact("0.35", "m × 0.35", m * 0.35))
    return main, terms


def _branch_options(cond_half, cond_one):
    halves = (True, False) if cond_half else (False,)
    ones = (True, False) if cond_one else (False,)
    return list(itertools.product(halves, ones))


def I4_bound(desc, ctx, mode, kind, nu1=0.5, nu2=2.0, alpha=1.0, eps=None, profile=None,
             x=None, envelope_constants=None, branches=None):
    """Bound for I₄ with h = g_Δ (kind 'g') or m_Δ (kind 'm').

    POLY is fully explicit; GENERAL and CONJ modes carry labelled envelopes.
    When several α-branches are admissible every one is evaluated and the
    smallest total wins; the losers are listed in the notes.  branches =
    (near_half, near_one) forces one combination.
    """
    if kind not in ("g", "m"):
        raise DomainError("kind must be 'g' or 'm'")
    # σ = 1/2 is admissible for the explicit minorant bound (its limit is finite)
    sigma = _sigma(ctx, allow_half=(mode == "POLY" and kind == "g"))
    x = _x_of(ctx, x)
    L = math.log(x)
    xa = x ** (sigma - 0.5)
    ec = envelope_constants
    if mode == "POLY":
        m = _require_poly(desc)
        if sigma >= 1:
            raise DomainError("the explicit prime-sum bound needs σ < 1")
        if kind == "m" and x < 4:
            raise DomainError("the m-bound needs x ≥ 4")
        cond_half, cond_one = eta_conditions(x, sigma, alpha)
        options = [branches] if branches is not None else _branch_options(cond_half, cond_one)
        if sigma == 0.5:
            options = [o for o in options if o[0]]
        results = []
        for nh, no in options:
            eta = eta_T(x, sigma, alpha, nu1, nu2, near_half=nh, near_one=no)
            main, terms = _poly_terms(m, x, sigma, eta, kind)
            results.append(BoundTerm(main, tuple(terms), eta.case))
        best = min(results, key=lambda b: b.total)
        notes = tuple(f"branch {r.case}: {r.total!r}" for r in results if r is not best)
        return BoundTerm(best.main, best.terms, best.case, notes)
    if mode == "GENERAL":
        _require_eps(eps)
        cr = desc.coeff_bounds.C_R(eps)
        theta = desc.coeff_bounds.theta
        inner = [
            exact("A1", "A₁(C_R,ε,σ) x^{1-σ+ε}/log x", A1(cr, eps, sigma) * x ** (1 - sigma + eps) / L),
            envelope("O_main", "C_R x^{1-σ+ε}/((1-σ+ε)² log²x)", cr * x ** (1 - sigma + eps) / ((1 - sigma + eps) ** 2 * L * L), ec),
            envelope("O_A2", "A₂(C_R+C_E,ε,θ,σ,x)", A2(cr + desc.coeff_bounds.C_E, eps, theta, sigma, x), ec),
        ]
        loglog = (1 + eps) * cr * math.log(L)
        if kind == "g":
            inner[0] = exact("A1", inner[0].ref + " × x^{σ-1/2}/(x^{σ-1/2}+1)", inner[0].value * xa / (xa + 1))
            return BoundTerm(loglog, tuple(inner), "GENERAL")
        P = xa / (xa - 1)
        return BoundTerm(P * loglog, tuple(_scale(t, P) for t in inner), "GENERAL")
    if mode in ("CONJ1", "CONJ2"):
        _require_profile(mode, profile)
        if sigma >= 1:
            raise DomainError("the conjectural prime-sum bound needs σ < 1")
        m1, m2, m3 = _m123(profile, x)
        cb = desc.coeff_bounds
        _, cond_one = eta_conditions(x, sigma, alpha)
        P = xa / (xa - 1) if kind == "m" else 1.0
        head = [envelope("O_A2", "A₂(C_E,0,θ,σ,x)", A2(cb.C_E, 0.0, cb.theta, sigma, x), ec)]
        if kind == "m":
            head = [envelope("O_A2", "P (m₁(2) + A₂(C_E,0,θ,σ,x))", P * (_m123(profile, 2.0)[0] + head[0].shape), ec)]
        results = []
        if cond_one:
            results.append(BoundTerm(P * m1 * math.log(L), tuple(head + [envelope("O_m2", "m₂(x)", m2, ec)]), "small-(1-σ)"))
        body = A1(m1, 0.0, sigma) * x ** (1 - sigma) / L * (xa / (xa + 1) if kind == "g" else P)
        other = head + [
            exact("A1", "A₁(m₁,0,σ) x^{1-σ}/log x", body),
            envelope("O_main", "m₁ x^{1-σ}/((1-σ)² log²x)", P * m1 * x ** (1 - sigma) / ((1 - sigma) ** 2 * L * L), ec),
            envelope("O_A6", "A₆(m₃,σ,x)", P * A6(m3, sigma, x), ec),
        ]
        results.append(BoundTerm(P * m1 * math.log(L), tuple(other), "otherwise"))
        best = min(results, key=lambda b: b.total)
        notes = tuple(f"branch {r.case}: {r.total!r}" for r in results if r is not best)
        return BoundTerm(best.main, best.terms, best.case, notes)
    raise DomainError(f"unknown mode {mode!r}")


def _scale(term, c):
    if term.kind == "exact":
        return exact(term.label, "P × " + term.ref, c * term.value)
    return envelope(term.label, "P × " + term.ref, c * term.shape, {term.label: term.constant})


def prime_sum_exact(desc, ctx, kind, x=None):
    """(1/2π) Σ_{n ≤ x} |Λ_L(n)| n^{−1/2} |ĥ(log n/2π)| and its truncation error.

    Only n ≤ e^{2πΔ} contribute because ĥ vanishes outside [−Δ, Δ].
    """
    if kind not in ("g", "m"):
        raise DomainError("kind must be 'g' or 'm'")
    xmax = _x_of(ctx, x)
    nmax = int(math.floor(xmax))
    lam = np.abs(desc.oracle.lambda_array(nmax))
    hat = ghat if kind == "g" else mhat
    total = []
    err = 0.0
    for n in np.flatnonzero(lam):
        v = hat(ctx, math.log(n) / (2 * math.pi))
        w = lam[n] / math.sqrt(n)
        total.append(w * abs(v.value))
        err += w * v.tail_bound
    return math.fsum(total) / (2 * math.pi), err / (2 * math.pi)
