"""Theorem-level upper and lower bounds for log|L(σ+it)|, assembled as
itemized reports.

Notation used throughout: L = loglog τ, logτ = e^L, Δ = L/π and
x = (logτ)² = e^{2πΔ}.  Every entry point accepts an optional loglogtau that
replaces loglog τ(t); this is how the explicit theorems, whose hypotheses
force τ beyond any computable height, are exercised on synthetic grids.
"""
from dataclasses import dataclass, field
import math

from . import afunc
from .errors import DescriptorError, DomainError
from .explicit import FourierGammaConfig, I3_bound, I_hat_bounds, L_interval, fourier_gamma_violations
from .extremal import ExtremalContext
from .lfunc import tau
from .primes import I4_bound, _m123, eta_T, int_theta1, int_theta2
from .terms import ENVELOPE, EXACT, Term, envelope, exact
from .zeta import zeta

LOG2 = math.log(2)
NU1, NU2 = 0.99, 1.25


def _log_zeta_5_2():
    return math.log(zeta(2.5).real)


LOG_ZETA_5_2 = _log_zeta_5_2()


@dataclass(frozen=True)
class Precondition:
    name: str
    satisfied: bool
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "satisfied": self.satisfied, "detail": self.detail}


@dataclass(frozen=True)
class BoundReport:
    theorem_id: str
    case: str
    main_term: float
    terms: tuple
    preconditions: tuple = ()
    alternatives: tuple = ()
    notes: tuple = ()
    inputs: dict = field(default_factory=dict)

    @property
    def valid(self):
        return all(p.satisfied for p in self.preconditions)

    @property
    def total_exact(self):
        return math.fsum([self.main_term] + [t.value for t in self.terms if t.kind == EXACT])

    @property
    def envelopes_total(self):
        return math.fsum(t.value for t in self.terms if t.kind == ENVELOPE)

    @property
    def total(self):
        return self.total_exact + self.envelopes_total

    @property
    def _selection_key(self):
        # unit envelope constants, so that rescaling envelopes never changes the case chosen
        return self.total_exact + math.fsum(t.shape for t in self.terms if t.kind == ENVELOPE)

    def term(self, label):
        for t in self.terms:
            if t.label == label:
                return t
        raise KeyError(label)

    def to_dict(self):
        return {
            "theorem": self.theorem_id,
            "case": self.case,
            "valid": self.valid,
            "preconditions": [p.to_dict() for p in self.preconditions],
            "main_term": self.main_term,
            "terms": [t.to_dict() for t in self.terms],
            "total_exact": self.total_exact,
            "envelopes_total": self.envelopes_total,
            "total": self.total,
            "alternatives": [dict(a) for a in self.alternatives],
            "notes": list(self.notes),
            "inputs": dict(self.inputs),
        }


# ---------------------------------------------------------------------------
# shared helpers


def loglog_tau(desc, t, loglogtau=None):
    """(L, logτ) with L = loglog τ, either from τ(t) or the synthetic override."""
    if loglogtau is None:
        lt = math.log(tau(desc, t))
        if not lt > 1:
            raise DomainError("needs τ > e so that loglog τ > 0")
        L = math.log(lt)
    else:
        L = float(loglogtau)
        if not L > 0:
            raise DomainError("loglog τ must be positive")
    return L, math.exp(L)


def _m(desc):
    if desc.euler_order is None:
        raise DescriptorError("this bound needs a polynomial Euler product (euler_order)")
    return desc.euler_order


def _lower_prefactor(lt, sigma):
    y = lt ** (2 * sigma - 1)
    if not y > 1:
        raise DomainError("the lower bound needs (logτ)^{2σ−1} > 1")
    return y / (y - 1)


def _pick(reports):
    """Tightest upper bound among valid alternatives (others recorded)."""
    best = min(reports, key=lambda r: r._selection_key)
    return best, tuple({"case": r.case, "total": r.total} for r in reports if r is not best)


def _pick_lower(reports):
    best = max(reports, key=lambda r: r._selection_key)
    return best, tuple({"case": r.case, "total": r.total} for r in reports if r is not best)


def _with(report, **changes):
    d = dict(report.__dict__)
    d.update(changes)
    return BoundReport(**d)


# ---------------------------------------------------------------------------
# the explicit error functions


def E_up_parts(desc, t, loglogtau=None):
    """(d-block, ξ-block, m-block) of E↑(t)."""
    L, _ = loglog_tau(desc, t, loglogtau)
    inv = desc.invariants
    at = abs(t)
    d_block = inv.d * (15.5 * math.sqrt(L / at) * math.log1p(at * math.sqrt(L) / math.pi) + 0.05 / L)
    xi_block = 0.25 * math.log1p(5 * math.pi / (68**2 * L)) * inv.xi_L.real
    m_block = 28.001 * desc.pole_order * L / (math.pi * at)
    return d_block, xi_block, m_block


def E_up(desc, t, loglogtau=None):
    return math.fsum(E_up_parts(desc, t, loglogtau))


def E_down_parts(desc, sigma, t, loglogtau=None):
    """(d-block, logτ-block, ℓ-block) of E↓(σ, t); all nonpositive."""
    if not sigma > 0.5:
        raise DomainError("E↓ needs σ > 1/2 (it diverges at 1/2)")
    L, lt = loglog_tau(desc, t, loglogtau)
    inv = desc.invariants
    at = abs(t)
    ell = math.log(2 / (sigma - 0.5))
    d_block = -inv.d * (
        (6.5 + 3.5 / L**2 * ell) * math.sqrt(L / at) * math.log1p(at * math.sqrt(L) / math.pi) + 0.06 / math.sqrt(L)
    )
    mL = desc.pole_order
    lt_block = -4 * mL * lt * L / (math.pi * at)
    ell_block = -4 * mL / (math.pi**2 + t * t * L * L) * ell
    return d_block, lt_block, ell_block


def E_down(desc, sigma, t, loglogtau=None):
    return math.fsum(E_down_parts(desc, sigma, t, loglogtau))


# ---------------------------------------------------------------------------
# explicit theorems


def explicit_preconditions(desc, sigma, t, L, lower=False):
    inv = desc.invariants
    at = abs(t)
    ap, bp = inv.a_plus, inv.b_plus
    out = [
        Precondition("euler_order", desc.euler_order is not None, f"m = {desc.euler_order}"),
        Precondition("strong_lambda", inv.strong_lambda, "all λ_j = 1/2 (so f = d)"),
        Precondition("sigma_range", (0.5 < sigma < 1) or (not lower and sigma == 0.5), f"σ = {sigma}"),
        Precondition("|t|L/π ≥ 1e4", at * L / math.pi >= 1e4, f"{at * L / math.pi:.6g}"),
        Precondition("L/π ≥ 5", L / math.pi >= 5, f"{L / math.pi:.6g}"),
        Precondition(
            "|t|π/L ≥ 289(a⁺+b⁺+1)²",
            at * math.pi / L >= 289 * (ap + bp + 1) ** 2,
            f"{at * math.pi / L:.6g} vs {289 * (ap + bp + 1) ** 2:.6g}",
        ),
        Precondition("log(1+|t|L/π) ≥ a⁺", math.log1p(at * L / math.pi) >= ap, ""),
        Precondition(
            "|t| − 2√(|t|L/π) − b⁺ ≥ 17",
            at - 2 * math.sqrt(at * L / math.pi) - bp >= 17,
            f"{at - 2 * math.sqrt(at * L / math.pi) - bp:.6g}",
        ),
    ]
    return out


def _case_flags(sigma, L, alpha):
    """Which of the α-cases (a), (b) apply; (c) always does."""
    if alpha is None:
        return False, False
    a = sigma - 0.5 <= alpha / (2 * L) and L > alpha
    b = 1 - sigma <= alpha / (2 * L) and L > 2 * alpha
    return a, b


def _upper_case(desc, sigma, t, L, lt, alpha, case):
    m = _m(desc)
    s = sigma
    y = lt ** (2 * s - 1)
    d_blk, xi_blk, m_blk = E_up_parts(desc, t, L)
    E_terms = [
        exact("E_up_d", "E↑ d(15.5√(L/|t|)log(1+|t|√L/π) + 0.05/L)", d_blk),
        exact("E_up_xi", "E↑ ¼log(1+5π/(68²L)) Re ξ", xi_blk),
        exact("E_up_m", "E↑ 28.001 m_L L/(π|t|)", m_blk),
    ]
    power = lt ** (2 * (1 - s) / NU2) / NU1**2
    if case == "a":
        main = lt / (2 * L) * math.log1p(1 / y)
        terms = [
            exact("eta1", "m 2α/(σ(1−σ)) logτ^{2(1−σ)}/(4L²)", m * 2 * alpha / (s * (1 - s)) * lt ** (2 * (1 - s)) / (4 * L * L)),
            exact("eta2_quadratic", "m(1.25²/(1−σ)² + 1/σ²) logτ^{2(1−σ)}/(4L²)", m * (NU2**2 / (1 - s) ** 2 + 1 / s**2) * lt ** (2 * (1 - s)) / (4 * L * L)),
            exact("eta2_power", "m/0.99² logτ^{2(1−σ)/1.25}", m * power),
            exact("eta3", "4m(α+1)L", 4 * m * (alpha + 1) * L),
            exact("loglog", "m log L", m * math.log(L)),
            exact("constant", "1.76m", 1.76 * m),
            exact("eta4_eta5", "m/(2(logτ^{2σ−1}+1)L)(8L³/3 + σ2^{1−σ}/(1−σ))", m / (2 * (y + 1) * L) * (8 * L**3 / 3 + s * 2 ** (1 - s) / (1 - s))),
        ]
    elif case == "critical":
        main = LOG2 / 2 * lt / L
        terms = [
            exact("eta2_quadratic", "10.25m logτ/(4L²)", 10.25 * m * lt / (4 * L * L)),
            exact("eta2_power", "m/0.99² logτ^{1/1.25}", m * lt ** (1 / NU2) / NU1**2),
            exact("eta3", "4mL", 4 * m * L),
            exact("loglog", "m log L", m * math.log(L)),
            exact("constant", "1.76m", 1.76 * m),
            exact("eta4_eta5", "m/(4L)(8L³/3 + √2)", m / (4 * L) * (8 * L**3 / 3 + math.sqrt(2))),
        ]
    elif case == "b":
        main = math.exp(alpha) / (2 * L)
        terms = [
            exact("loglog", "m log L", m * math.log(L)),
            exact("int_theta2", "m ∫_{log2/2}^α θ₂", m * int_theta2(0.5 * LOG2, alpha)),
            exact("constant", "3.92m", 3.92 * m),
            exact("eta5", "32m/((logτ^{2σ−1}+1)L)", 32 * m / ((y + 1) * L)),
        ]
    elif case == "c":
        main = 0.5 * lt ** (2 * (1 - s)) / L
        h = 2 ** (s - 0.5)
        eta5 = (1 - s) * (32 + 4 * (8 * s - 4) * LOG2 + 4 * (2 * s - 1) ** 2 * LOG2**2) / (h * (2 * s - 1) ** 3)
        terms = [
            exact("eta1", "½m(2σ−1)/(σ(1−σ)) logτ^{2(1−σ)}/L", 0.5 * m * (2 * s - 1) / (s * (1 - s)) * lt ** (2 * (1 - s)) / L),
            exact("loglog", "m log L", m * math.log(L)),
            exact("eta3", "m/(2^{σ−1/2}(2σ−1)π)", m / (h * (2 * s - 1) * math.pi)),
            exact("eta2_quadratic", "m(1.25²/(1−σ)² + 1/σ²) logτ^{2(1−σ)}/(4L²)", m * (NU2**2 / (1 - s) ** 2 + 1 / s**2) * lt ** (2 * (1 - s)) / (4 * L * L)),
            exact("eta2_power", "m/0.99² logτ^{2(1−σ)/1.25}", m * power),
            exact("constant", "2.80m", 2.80 * m),
            exact("eta4_eta5", "m/(2(logτ^{2σ−1}+1)L)(σ2^{1−σ}/(1−σ) + η₅)", m / (2 * (y + 1) * L) * (s * 2 ** (1 - s) / (1 - s) + eta5)),
        ]
    else:
        raise DomainError(f"unknown case {case!r}")
    return main, tuple(terms + E_terms)


def theorem7_upper(desc, sigma, t, alpha=None, loglogtau=None, case=None):
    """Explicit upper bound for log|L(σ+it)| (polynomial Euler product, strong λ).

    alpha enables the cases (a) σ−½ ≤ α/(2L) and (b) 1−σ ≤ α/(2L); case (c)
    is always available.  The tightest applicable case is returned with the
    others listed as alternatives; case= forces one.  σ = ½ uses the
    critical-line form (case (a) with σ → ½, α → 0).
    """
    _m(desc)
    L, lt = loglog_tau(desc, t, loglogtau)
    pre = explicit_preconditions(desc, sigma, t, L)
    inputs = {"sigma": sigma, "t": t, "alpha": alpha, "loglogtau": L}
    if sigma == 0.5:
        main, terms = _upper_case(desc, sigma, t, L, lt, 0.0, "critical")
        return BoundReport("theorem7_upper", "critical-line", main, terms, tuple(pre), inputs=inputs)
    if not 0.5 < sigma < 1:
        raise DomainError("σ must lie in (1/2, 1)")
    fa, fb = _case_flags(sigma, L, alpha)
    if case in ("a", "b") and alpha is None:
        raise DomainError(f"case ({case}) needs α")
    if case is not None:
        if case == "a" and not fa or case == "b" and not fb:
            raise DomainError(f"case ({case}) does not apply at σ={sigma}, L={L}, α={alpha}")
        cases = [case]
    else:
        cases = (["a"] if fa else []) + (["b"] if fb else []) + ["c"]
    reports = []
    for c in cases:
        main, terms = _upper_case(desc, sigma, t, L, lt, alpha, c)
        reports.append(BoundReport("theorem7_upper", c, main, terms, tuple(pre), inputs=inputs))
    best, alts = _pick(reports)
    return _with(best, alternatives=alts)


def _lower_case(desc, sigma, t, L, lt, alpha, case, as_printed):
    m = _m(desc)
    s = sigma
    P = _lower_prefactor(lt, s)
    Ed, Elt, Eell = E_down_parts(desc, s, t, L)
    sign = -1.0 if as_printed else 1.0
    E_terms = [
        exact("E_down_d", "E↓ d-block", sign * Ed),
        exact("E_down_logtau", "E↓ −4m_L logτ L/(π|t|)", sign * Elt),
        exact("E_down_ell", "E↓ −4m_L ℓ/(π²+t²L²)", sign * Eell),
    ]
    power = lt ** (2 * (1 - s) / NU2) / NU1**2
    if case == "a":
        main = lt / (2 * L) * math.log1p(-(lt ** (1 - 2 * s)))
        inner = [
            ("eta1_eta2", "(α/(2σ(1−σ)) + 1.25²/(4(1−σ)²) + 1/(4σ²)) logτ^{2(1−σ)}/L²",
             (alpha / (2 * s * (1 - s)) + NU2**2 / (4 * (1 - s) ** 2) + 1 / (4 * s * s)) * lt ** (2 * (1 - s)) / L**2),
            ("eta2_power", "logτ^{2(1−σ)/1.25}/0.99²", power),
            ("eta3", "4(α+1)L", 4 * (alpha + 1) * L),
            ("loglog", "log L", math.log(L)),
            ("constant", "1.12", 1.12),
        ]
        tail = [exact("constant_outer", "−0.65m", -0.65 * m)]
    elif case == "b":
        main = -math.exp(alpha) / (2 * (1 - math.exp(-alpha)) * L)
        inner = [
            ("loglog", "log L", math.log(L)),
            ("int_theta2", "∫_{log2/2}^α θ₂", int_theta2(0.5 * LOG2, alpha)),
            ("constant", "3.27", 3.27),
        ]
        tail = [exact("constant_outer", "−0.35m", -0.35 * m)]
    elif case == "c":
        main = -P * (m * (2 * s - 1) / (s * (1 - s)) + 1) * lt ** (2 * (1 - s)) / (2 * L)
        inner = [
            ("loglog", "log L", math.log(L)),
            ("eta2_quadratic", "(1.25²/(1−σ)² + 1/σ²) logτ^{2(1−σ)}/(4L²)", (NU2**2 / (1 - s) ** 2 + 1 / s**2) * lt ** (2 * (1 - s)) / (4 * L * L)),
            ("eta2_power", "x^{(1−σ)/1.25}/0.99², x = logτ²", power),
            ("constant", "2.50", 2.50),
        ]
        tail = [exact("constant_outer", "−0.35m", -0.35 * m)]
    else:
        raise DomainError(f"unknown case {case!r}")
    # case (b) prints the bracket with a plus sign; the derivation subtracts it
    bsign = 1.0 if (as_printed and case == "b") else -1.0
    terms = [exact(lbl, f"{'+' if bsign > 0 else '−'}P·m·{ref}", bsign * P * m * v) for lbl, ref, v in inner]
    return main, tuple(terms + tail + E_terms)


def theorem8_lower(desc, sigma, t, alpha=None, loglogtau=None, case=None, as_printed=False):
    """Explicit lower bound for log|L(σ+it)|.

    E↓ is nonpositive by definition and enters additively; case (b)'s bracket
    is subtracted.  as_printed=True evaluates the displays literally (with
    −E↓ and a plus sign in case (b)).
    """
    _m(desc)
    if not 0.5 < sigma < 1:
        raise DomainError("the lower bound needs σ in (1/2, 1)")
    L, lt = loglog_tau(desc, t, loglogtau)
    pre = explicit_preconditions(desc, sigma, t, L, lower=True)
    inputs = {"sigma": sigma, "t": t, "alpha": alpha, "loglogtau": L, "as_printed": as_printed}
    fa, fb = _case_flags(sigma, L, alpha)
    if case in ("a", "b") and alpha is None:
        raise DomainError(f"case ({case}) needs α")
    if case is not None:
        if case == "a" and not fa or case == "b" and not fb:
            raise DomainError(f"case ({case}) does not apply at σ={sigma}, L={L}, α={alpha}")
        cases = [case]
    else:
        cases = (["a"] if fa else []) + (["b"] if fb else []) + ["c"]
    reports = []
    for c in cases:
        main, terms = _lower_case(desc, sigma, t, L, lt, alpha, c, as_printed)
        reports.append(BoundReport("theorem8_lower", c, main, terms, tuple(pre), inputs=inputs))
    best, alts = _pick_lower(reports)
    return _with(best, alternatives=alts)


# ---------------------------------------------------------------------------
# the combined corollary


def corollary_preconditions(desc, sigma, t, L, cfg):
    inv = desc.invariants
    at = abs(t)
    ap, bp, lm = inv.a_plus, inv.b_plus, inv.lambda_minus
    root = math.sqrt(at * L / math.pi)
    need_t = max(bp + math.sqrt((1 + ap) * (2.5 + ap)), 4 * (ap + bp) + 4)
    pre = [
        Precondition("|t|L/π ≥ 1e4", at * L / math.pi >= 1e4, f"{at * L / math.pi:.6g}"),
        Precondition("L/π ≥ 5", L / math.pi >= 5, f"{L / math.pi:.6g}"),
        Precondition("|t| lower bound", at >= need_t, f"|t| = {at:.6g}, need {need_t:.6g}"),
        Precondition("0 < 𝔞 ≤ ¼√(|t|L/π)", 0 < cfg.a_frak <= 0.25 * root, f"𝔞 = {cfg.a_frak}"),
        Precondition("𝔞√(|t|π/L) ≥ 17", cfg.a_frak * math.sqrt(at * math.pi / L) >= 17, ""),
        Precondition("|t| − (𝔟/λ⁻)√(|t|L/π) − b⁺ ≥ 17", at - cfg.b_frak / lm * root - bp >= 17, ""),
    ]
    bad = fourier_gamma_violations(desc, cfg, L / math.pi, t)
    pre.append(Precondition("gamma-integral bound hypotheses", not bad, "; ".join(bad) or "all hold"))
    if abs(t) < cfg.M2_frak:
        pre.append(Precondition("|t| ≥ 𝔐₂", False, f"𝔐₂ = {cfg.M2_frak:.6g}"))
    return pre


def corollary_combined(desc, sigma, t, kind="upper", loglogtau=None, alpha=1.0, nu1=NU1, nu2=NU2,
                       a_frak=1.0, b_frak=1.0, L3_variant="simplified", branches=None):
    """Upper ('upper') or lower ('lower') bound from the combined corollary.

    Assembles the main term with (Î₁+Î₂)/2π, the I₃ bound, the polynomial
    prime-sum bound for I₄, |log|L(5/2+it)|| ≤ m logζ(5/2) and the bounds on
    L.  L3_variant='simplified' uses ¼log(1+((5/2+a⁺)/(|t|−b⁺))²)(Re ξ + d)
    for the upper side and −(d/4)log(…) for the lower side; 'general' uses
    the max/min forms.
    """
    if kind not in ("upper", "lower"):
        raise DomainError("kind must be 'upper' or 'lower'")
    if not 0.5 <= sigma < 1:
        raise DomainError("σ must lie in [1/2, 1)")
    m = _m(desc)
    L, lt = loglog_tau(desc, t, loglogtau)
    Delta = L / math.pi
    x = lt * lt
    inv = desc.invariants
    at = abs(t)
    if kind == "upper":
        cfg = FourierGammaConfig.for_g(Delta, a_frak, b_frak)
        main = lt / (2 * L) * (math.log1p(lt ** (1 - 2 * sigma)) - math.log1p(lt**-4))
    else:
        cfg = FourierGammaConfig.for_m(Delta, sigma, a_frak, b_frak)
        if not lt ** (2 * sigma - 1) > 1:
            raise DomainError("the lower form needs (logτ)^{2σ−1} > 1")
        main = lt / (2 * L) * (math.log1p(-(lt ** (1 - 2 * sigma))) - math.log1p(-(lt**-4)))
    pre = corollary_preconditions(desc, sigma, t, L, cfg)
    I1, I2 = I_hat_bounds(desc, cfg, Delta, t, allow_invalid=True)
    I3 = I3_bound(desc, cfg, Delta, t) if at >= cfg.M2_frak else math.nan
    ctx = ExtremalContext(sigma, Delta) if sigma > 0.5 else sigma
    I4 = I4_bound(desc, ctx, "POLY", "g" if kind == "upper" else "m", nu1=nu1, nu2=nu2, alpha=alpha, x=x,
                  branches=branches)
    Lint = L_interval(desc, t)
    c = Lint.components
    ratio = math.log1p(((2.5 + inv.a_plus) / (at - inv.b_plus)) ** 2)
    sgn = 1.0 if kind == "upper" else -1.0
    terms = [
        exact("I_hat", "(Î₁+Î₂)/(2π)", sgn * (I1 + I2) / (2 * math.pi)),
        exact("I3", "m_L Δ²(𝔪₃/(1+Δ|t|) + 𝔪₃′/(1+Δ²t²))e^{πΔ}", sgn * I3),
    ]
    terms += [exact("I4." + tm.label, tm.ref, sgn * tm.value) for tm in ((exact("loglog", "main", I4.main),) + I4.terms)]
    terms.append(exact("log_L_5_2", "m logζ(5/2)", sgn * m * LOG_ZETA_5_2))
    if kind == "upper":
        terms += [exact("L1", "L₁", c["L1"]), exact("L2", "L₂↑", c["L2_up"]), exact("L4", "L₄↑", c["L4_up"])]
        if L3_variant == "simplified":
            terms += [
                exact("L3_xi", "¼log(1+r²) Re ξ", 0.25 * ratio * inv.xi_L.real),
                exact("L3_d", "¼log(1+r²) d", 0.25 * ratio * inv.d),
            ]
        else:
            terms.append(exact("L3", "L₃↑", c["L3_up"]))
    else:
        terms += [exact("L2", "L₂↓", c["L2_down"]), exact("L4", "L₄↓", c["L4_down"])]
        if L3_variant == "simplified":
            terms.append(exact("L3_d", "−(d/4)log(1+r²)", -0.25 * ratio * inv.d))
        else:
            terms.append(exact("L3", "L₃↓", c["L3_down"]))
    inputs = {"sigma": sigma, "t": t, "loglogtau": L, "alpha": alpha, "nu1": nu1, "nu2": nu2,
              "a_frak": a_frak, "b_frak": b_frak, "L3_variant": L3_variant, "I4_case": I4.case}
    return BoundReport("corollary_" + kind, I4.case, main, tuple(terms), tuple(pre), notes=I4.notes, inputs=inputs)


# ---------------------------------------------------------------------------
# term-for-term reconciliation


@dataclass(frozen=True)
class ReconRow:
    label: str
    theorem: float
    derived: float
    relation: str  # "eq" or "ge"
    judged: bool = True

    @property
    def ok(self):
        scale = max(1.0, abs(self.theorem), abs(self.derived))
        if self.relation == "eq":
            return abs(self.theorem - self.derived) <= 1e-12 * scale
        return self.theorem >= self.derived - 1e-12 * scale

    def to_dict(self):
        return {"label": self.label, "theorem": self.theorem, "derived": self.derived,
                "relation": self.relation, "judged": self.judged, "ok": self.ok}


def reconcile_theorem7(desc, sigma, t, alpha=None, loglogtau=None, case=None):
    """Rows comparing each term of theorem7_upper with the corollary-derived term.

    'eq' rows are the same formula and must agree to 1e-12 (relative, unit
    floor); 'ge' rows are simplifications and the theorem term must dominate.
    Rows with judged=False are sub-blocks shown for diagnosis only.
    """
    thm = theorem7_upper(desc, sigma, t, alpha=alpha, loglogtau=loglogtau, case=case)
    case = thm.case
    branches = {"a": (True, False), "b": (False, True), "c": (False, False)}[case]
    cor = corollary_combined(desc, sigma, t, "upper", loglogtau=loglogtau, alpha=alpha if alpha else 1.0,
                             branches=branches)
    m = _m(desc)
    L, lt = loglog_tau(desc, t, loglogtau)
    x = lt * lt
    s = sigma
    xa = x ** (s - 0.5)
    eta = eta_T(x, s, alpha if alpha else 1.0, NU1, NU2, near_half=branches[0], near_one=branches[1])
    parts = dict(eta.parts)
    T = thm.term
    C = cor.term
    rows = [ReconRow("main", thm.main_term if case != "b" else thm.main_term, cor.main_term, "ge")]
    rows.append(ReconRow("loglog", T("loglog").value, m * (math.log(math.log(x)) - LOG2), "eq"))
    if case in ("a", "c"):
        rows.append(ReconRow("eta1", T("eta1").value, C("I4.eta1").value, "ge"))
        rows.append(ReconRow("eta2_quadratic", T("eta2_quadratic").value, m * parts["ν-quadratic"], "eq"))
        rows.append(ReconRow("eta2_power", T("eta2_power").value, m * parts["ν-power"], "eq"))
        rows.append(ReconRow("eta4_eta5", T("eta4_eta5").value, C("I4.eta4+eta5").value, "eq"))
    if case == "a":
        rows.append(ReconRow("eta3", T("eta3").value, m * parts["2(α+1) log x"], "eq"))
        derived_const = m * (LOG2 + parts["int θ₁"] + parts["σ-constant"] + 0.72 + parts["−2(α+1) log 2"]) + m * LOG_ZETA_5_2
    elif case == "c":
        rows.append(ReconRow("eta3", T("eta3").value, m * parts["4/(4π 2^{σ-1/2}(2σ-1))"], "eq"))
        derived_const = m * (LOG2 + parts["int θ₁"] + parts["σ-constant"] + parts["−log 2/(4π 2^{σ-1/2})"] + 0.72) + m * LOG_ZETA_5_2
    else:
        rows.append(ReconRow("int_theta2", T("int_theta2").value, m * parts["int θ₂"], "eq"))
        rows.append(ReconRow("eta5", T("eta5").value, C("I4.eta4+eta5").value, "ge"))
        eta3 = eta.eta3
        derived_const = m * (LOG2 + parts["2^{1-σ}/log 2"] + eta3 + 0.72) + m * LOG_ZETA_5_2
    rows.append(ReconRow("constant", T("constant").value, derived_const, "ge"))
    E_thm = T("E_up_d").value + T("E_up_xi").value + T("E_up_m").value
    dxi = math.fsum([C("I_hat").value, C("L2").value, C("L4").value, C("L3_d").value, C("L3_xi").value])
    mblk = C("I3").value + C("L1").value
    rows.append(ReconRow("E_up", E_thm, dxi + mblk, "ge"))
    rows.append(ReconRow("E_up.d+xi", T("E_up_d").value + T("E_up_xi").value, dxi, "ge", judged=False))
    rows.append(ReconRow("E_up.m", T("E_up_m").value, mblk, "ge", judged=False))
    return rows, thm, cor


def reconcile_theorem8(desc, sigma, t, alpha=None, loglogtau=None):
    """Informational: theorem8_lower against the corollary's lower form."""
    thm = theorem8_lower(desc, sigma, t, alpha=alpha, loglogtau=loglogtau)
    branches = {"a": (True, False), "b": (False, True), "c": (False, False)}[thm.case]
    cor = corollary_combined(desc, sigma, t, "lower", loglogtau=loglogtau, alpha=alpha if alpha else 1.0,
                             branches=branches)
    return ReconRow("total", cor.total, thm.total, "ge", judged=False), thm, cor


# ---------------------------------------------------------------------------
# Theorems 1–6


VARIANTS = ("main1_upper", "main1_lower", "conj_upper", "conj_lower", "poly_upper", "poly_lower")


def _regimes(sigma, L, alpha):
    """(σ−½ regime, 1−σ regime) with ≪ read as ≤ α/loglog τ."""
    return sigma - 0.5 <= alpha / L, 1 - sigma <= alpha / L


def theorems_1_to_6(desc, sigma, t, variant, profile=None, eps=0.25, alpha=1.0, loglogtau=None,
                    envelope_constants=None):
    """Asymptotic theorems as itemized reports; O(·) terms are envelopes.

    In lower bounds every envelope is subtracted.  When several regimes apply
    the tightest (with unit envelope constants) is returned and the others are
    recorded.
    """
    if variant not in VARIANTS:
        raise DomainError(f"variant must be one of {VARIANTS}")
    lower = variant.endswith("lower")
    if lower and not 0.5 < sigma < 1:
        raise DomainError("lower bounds need σ in (1/2, 1)")
    if not lower and not 0.5 <= sigma < 1:
        raise DomainError("upper bounds need σ in [1/2, 1)")
    L, lt = loglog_tau(desc, t, loglogtau)
    inv = desc.invariants
    cb = desc.coeff_bounds
    mL = desc.pole_order
    x = lt * lt
    ec = envelope_constants
    sg = -1.0 if lower else 1.0
    A4v = afunc.A4(inv, mL, t, L)
    env_A4 = envelope("A4", "O(A₄)", sg * A4v, ec)
    env_A5 = (envelope("A5", "O(A₅)", -afunc.A5(sigma, inv, mL, t, L), ec),) if lower else ()
    reg_half, reg_one = _regimes(sigma, L, alpha)
    pre = [Precondition(f"regime σ−½ ≤ α/L (α={alpha})", True, str(reg_half)),
           Precondition(f"regime 1−σ ≤ α/L (α={alpha})", True, str(reg_one))]
    inputs = {"sigma": sigma, "t": t, "loglogtau": L, "alpha": alpha, "eps": eps, "variant": variant}
    reports = []

    def add(case, main, terms):
        reports.append(BoundReport(variant, case, main, tuple(terms), tuple(pre), inputs=inputs))

    if variant.startswith("main1"):
        if not 0 < eps < 0.5:
            raise DomainError("ε must lie in (0, 1/2)")
        cr = cb.C_R(eps)
        A1v = afunc.A1(cr, eps, sigma)
        A3v = afunc.A3(cr, cr + cb.C_E, eps, cb.theta, sigma, x)
        head = A1v * lt ** (2 * (1 - sigma + eps)) / (2 * L)
        if lower:
            P = _lower_prefactor(lt, sigma)
            add("general", -P * head, [envelope("A3", "P·O(A₃)", -P * A3v, ec), env_A4, *env_A5])
        else:
            add("general", head, [envelope("A3", "O(A₃)", A3v, ec), env_A4])
    elif variant.startswith("conj"):
        if profile is None or profile.mode not in ("CONJ1", "CONJ2"):
            raise DescriptorError("conjecture variants need a CONJ1 or CONJ2 profile")
        m1, m2, m3 = _m123(profile, x)
        if reg_one:
            A2v = afunc.A2(cb.C_E, 0.0, cb.theta, sigma, x)
            terms = [envelope("A2", "O(A₂(C_E,0,θ,σ,x))", sg * A2v, ec), envelope("m2", "O(m₂(logτ²))", sg * m2, ec), env_A4]
            if lower:
                terms.append(envelope("m1(2)", "O(m₁(2))", -_m123(profile, 2.0)[0], ec))
            add("small-(1-sigma)", sg * m1 * math.log(2 * L), terms)
        if sigma < 1:
            A1v = afunc.A1(m1, 0.0, sigma)
            body = [
                exact("A1", "A₁(m₁,0,σ) logτ^{2(1−σ)}/(2L)", A1v * lt ** (2 * (1 - sigma)) / (2 * L)),
                exact("m1_log", "m₁ log(2 logτ)", m1 * math.log(2 * lt)),
            ]
            envs = [
                envelope("A6", "O(A₆(m₃,σ,x))", afunc.A6(m3, sigma, x), ec),
                envelope("A3", "O(A₃(C_E,m₁,0,θ,σ,x))", afunc.A3(cb.C_E, m1, 0.0, cb.theta, sigma, x), ec),
            ]
            if lower:
                P = _lower_prefactor(lt, sigma)
                main = lt / (2 * L) * math.log1p(-(lt ** (1 - 2 * sigma)))
                terms = [exact(b.label, "−P·" + b.ref, -P * b.value) for b in body]
                terms += [envelope(e.label, "−P·" + e.ref, -P * e.shape, ec) for e in envs]
                add("otherwise", main, terms + [env_A4, *env_A5])
            else:
                main = lt / (2 * L) * math.log1p(lt ** (1 - 2 * sigma))
                add("otherwise", main, body + envs + [env_A4])
    else:
        m = _m(desc)
        s = sigma
        if reg_half:
            if lower:
                y = lt ** (1 - 2 * s)
                add("small-sigma", lt / (2 * L) * math.log1p(-y),
                    [envelope("poly", "O(m logτ^{2−2σ}/(L²(1−logτ^{1−2σ})))", -m * lt ** (2 - 2 * s) / (L * L * (1 - y)), ec), env_A4, *env_A5])
            else:
                add("small-sigma", lt / (2 * L) * math.log1p(lt ** (1 - 2 * s)),
                    [envelope("poly", "O(m logτ^{2−2σ}/L²)", m * lt ** (2 - 2 * s) / (L * L), ec), env_A4])
        if reg_one:
            add("small-(1-sigma)", sg * m * math.log(2 * L), [envelope("poly", "O(m)", sg * m, ec), env_A4])
        if s > 0.5:
            head = 0.5 * (1 + m * (2 * s - 1) / (s * (1 - s))) * lt ** (2 * (1 - s)) / L
            terms = [
                exact("loglog", "m log(2L)", sg * m * math.log(2 * L)),
                envelope("poly", "O(m logτ^{2−2σ}/((1−σ)²L²))", sg * m * lt ** (2 - 2 * s) / ((1 - s) ** 2 * L * L), ec),
                env_A4,
            ]
            add("otherwise", sg * head, terms + list(env_A5 if lower else ()))
    if not reports:
        raise DomainError("no regime applies")
    best, alts = (_pick_lower if lower else _pick)(reports)
    return _with(best, alternatives=alts)


def critical_line_upper(desc, t, variant="explicit", loglogtau=None, envelope_constants=None):
    """Upper bounds at σ = ½ obtained as σ → ½ limits."""
    if variant == "explicit":
        return theorem7_upper(desc, 0.5, t, loglogtau=loglogtau)
    if variant == "poly":
        return theorems_1_to_6(desc, 0.5, t, "poly_upper", alpha=1.0, loglogtau=loglogtau,
                               envelope_constants=envelope_constants)
    raise DomainError("variant must be 'explicit' or 'poly'")
