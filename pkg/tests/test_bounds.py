import math

import numpy as np
import pytest

from lbound import afunc, bounds as B
from lbound.errors import DescriptorError, DomainError
from lbound.lfunc import ConjectureProfile, GammaFactor, SelbergDescriptor

T_BIG = 1e8
L16 = 16.0


# ---- auxiliary functions -----------------------------------------------------


def test_A_functions():
    assert afunc.A1(1.0, 0.0, 0.75) == pytest.approx(8 / 3)
    x = 1e4
    assert afunc.A2(2.0, 0.0, 0.0, 0.5, x) == pytest.approx(2 * math.log(x) ** 2)
    assert afunc.A2(1.0, 0.1, 0.0, 0.9, x) <= (1 + 0.3 * x**-0.3 * math.log(x)) / 0.09 + 1e-12
    L = math.log(x)
    assert afunc.A6(1.0, 0.75, x) == pytest.approx(L + 0.25 * L * math.log(L) + x**0.25 / (0.25 * L))
    with pytest.raises(DomainError):
        afunc.A1(1.0, 0.0, 1.0)
    with pytest.raises(DomainError):
        afunc.A2(1.0, 0.0, 0.0, 0.75, 1.5)
    with pytest.raises(DomainError):
        afunc.A6(1.0, 1.0, 10)


def test_theta_helpers_limits():
    assert afunc.theta1(0.0) == 0.5 and afunc.theta2(0.0) == 1.0
    for u in (1e-5, -3e-5, 1e-3, 0.5):
        assert afunc.theta1(u) == pytest.approx((math.expm1(u) - u) / u**2, rel=1e-9)
        assert afunc.theta2(u) == pytest.approx(math.expm1(u) / u, rel=1e-12)


def test_A4_A5(zeta):
    inv = zeta.invariants
    assert afunc.A4(inv, 1, 1e6, 3.0) > afunc.A4(inv, 0, 1e6, 3.0) > 0
    assert afunc.A5(0.6, inv, 1, 1e6, 3.0) > afunc.A5(0.9, inv, 1, 1e6, 3.0) > 0
    with pytest.raises(DomainError):
        afunc.A5(0.5, inv, 1, 1e6, 3.0)


# ---- error functions ---------------------------------------------------------


def test_E_up_blocks(zeta, chi5):
    d, xi, m = B.E_up_parts(zeta, T_BIG, L16)
    assert d > 0 and xi < 0 and m == pytest.approx(28.001 * L16 / (math.pi * T_BIG))
    assert B.E_up_parts(chi5, T_BIG, L16)[2] == 0
    assert B.E_up(zeta, T_BIG, L16) == pytest.approx(d + xi + m)


def test_E_down_blocks_and_divergence(zeta):
    parts = B.E_down_parts(zeta, 0.75, T_BIG, L16)
    assert all(p <= 0 for p in parts)
    vals = [B.E_down(zeta, 0.5 + 10.0**-k, T_BIG, L16) for k in range(1, 8)]
    assert np.all(np.diff(vals) < 0)
    with pytest.raises(DomainError):
        B.E_down(zeta, 0.5, T_BIG, L16)


def test_loglog_tau(zeta):
    L, lt = B.loglog_tau(zeta, 1e6, 20.0)
    assert (L, lt) == (20.0, math.exp(20.0))
    with pytest.raises(DomainError):
        B.loglog_tau(zeta, 1e6, 0.0)


# ---- explicit theorems: independent hand sums at σ = 0.75, loglog τ = 16 -----


def _hand_upper_c(sigma, L, t):
    lt = math.exp(L)
    s = sigma
    y = lt ** (2 * s - 1)
    big = lt ** (2 * (1 - s))
    eta5 = (1 - s) * (32 + 4 * (8 * s - 4) * math.log(2) + 4 * (2 * s - 1) ** 2 * math.log(2) ** 2) / (
        2 ** (s - 0.5) * (2 * s - 1) ** 3)
    pieces = [
        0.5 * big / L,
        0.5 * (2 * s - 1) / (s * (1 - s)) * big / L,
        math.log(L),
        1 / (2 ** (s - 0.5) * (2 * s - 1) * math.pi),
        (1.25**2 / (1 - s) ** 2 + 1 / s**2) * big / (4 * L * L),
        lt ** (2 * (1 - s) / 1.25) / 0.99**2,
        2.80,
        (s * 2 ** (1 - s) / (1 - s) + eta5) / (2 * (y + 1) * L),
        15.5 * math.sqrt(L / t) * math.log(1 + t * math.sqrt(L) / math.pi) + 0.05 / L,
        -0.25 * math.log(1 + 5 * math.pi / (68**2 * L)),
        28.001 * L / (math.pi * t),
    ]
    return math.fsum(pieces)


def _hand_lower_c(sigma, L, t):
    lt = math.exp(L)
    s = sigma
    y = lt ** (2 * s - 1)
    P = y / (y - 1)
    big = lt ** (2 * (1 - s))
    ell = math.log(2 / (s - 0.5))
    bracket = math.log(L) + (1.25**2 / (1 - s) ** 2 + 1 / s**2) * big / (4 * L * L) + lt ** (2 * (1 - s) / 1.25) / 0.99**2 + 2.50
    pieces = [
        -P * ((2 * s - 1) / (s * (1 - s)) + 1) * big / (2 * L),
        -P * bracket,
        -0.35,
        -((6.5 + 3.5 / L**2 * ell) * math.sqrt(L / t) * math.log(1 + t * math.sqrt(L) / math.pi) + 0.06 / math.sqrt(L)),
        -4 * lt * L / (math.pi * t),
        -4 / (math.pi**2 + t * t * L * L) * ell,
    ]
    return math.fsum(pieces)


@pytest.mark.parametrize("sigma", [0.6, 0.75, 0.9])
def test_theorem7_case_c_hand_sum(zeta, sigma):
    r = B.theorem7_upper(zeta, sigma, T_BIG, loglogtau=L16)
    assert r.case == "c" and r.valid
    assert r.total == pytest.approx(_hand_upper_c(sigma, L16, T_BIG), rel=1e-13)


@pytest.mark.parametrize("sigma", [0.6, 0.75, 0.9])
def test_theorem8_case_c_hand_sum(zeta, sigma):
    r = B.theorem8_lower(zeta, sigma, T_BIG, loglogtau=L16)
    assert r.case == "c" and r.valid
    assert r.total == pytest.approx(_hand_lower_c(sigma, L16, T_BIG), rel=1e-13)


def test_printed_signs_variant(zeta):
    a = B.theorem8_lower(zeta, 0.75, T_BIG, loglogtau=L16)
    b = B.theorem8_lower(zeta, 0.75, T_BIG, loglogtau=L16, as_printed=True)
    for lbl in ("E_down_d", "E_down_logtau", "E_down_ell"):
        assert b.term(lbl).value == -a.term(lbl).value
    assert b.inputs["as_printed"]


def test_critical_line_is_limit_of_case_a(zeta):
    crit = B.theorem7_upper(zeta, 0.5, T_BIG, loglogtau=L16)
    assert crit.case == "critical-line"
    lt = math.exp(L16)
    assert crit.main_term == pytest.approx(math.log(2) / 2 * lt / L16)
    near = B.theorem7_upper(zeta, 0.5 + 1e-13, T_BIG, alpha=1e-10, loglogtau=L16, case="a")
    assert near.total == pytest.approx(crit.total, rel=1e-8)
    assert B.critical_line_upper(zeta, T_BIG, loglogtau=L16).total == crit.total


def test_case_b_main_term(zeta):
    alpha = 1.0
    sigma = 0.98
    r = B.theorem7_upper(zeta, sigma, T_BIG, alpha=alpha, loglogtau=20.0, case="b")
    assert r.main_term == pytest.approx(math.e / 40)
    lo = B.theorem8_lower(zeta, sigma, T_BIG, alpha=alpha, loglogtau=20.0, case="b")
    assert lo.main_term == pytest.approx(-math.e / (40 * (1 - math.exp(-1))))


def test_both_cases_recorded(zeta):
    r = B.theorem7_upper(zeta, 0.51, T_BIG, alpha=1.0, loglogtau=20.0)
    seen = {r.case} | {a["case"] for a in r.alternatives}
    assert seen == {"a", "c"}
    assert all(r.total <= a["total"] for a in r.alternatives)
    lo = B.theorem8_lower(zeta, 0.51, T_BIG, alpha=1.0, loglogtau=20.0)
    assert all(lo.total >= a["total"] for a in lo.alternatives)


def test_forced_cases(zeta):
    with pytest.raises(DomainError):
        B.theorem7_upper(zeta, 0.75, T_BIG, alpha=1.0, loglogtau=L16, case="a")
    with pytest.raises(DomainError):
        B.theorem7_upper(zeta, 0.51, T_BIG, loglogtau=L16, case="a")
    with pytest.raises(DomainError):
        B.theorem7_upper(zeta, 1.0, T_BIG, loglogtau=L16)
    with pytest.raises(DomainError):
        B.theorem8_lower(zeta, 0.5, T_BIG, loglogtau=L16)


def test_preconditions_reported(zeta):
    r = B.theorem7_upper(zeta, 0.75, 100.0, loglogtau=L16)
    assert not r.valid
    failed = {p.name for p in r.preconditions if not p.satisfied}
    assert "|t|L/π ≥ 1e4" in failed
    assert not B.theorem7_upper(zeta, 0.75, T_BIG, loglogtau=10.0).valid


def test_needs_polynomial_euler_product():
    desc = SelbergDescriptor((GammaFactor(0.5, 0),), Q=1.0)
    with pytest.raises(DescriptorError):
        B.theorem7_upper(desc, 0.75, T_BIG, loglogtau=L16)


def test_upper_monotone_in_loglog(zeta):
    Ls = np.linspace(16, 40, 25)
    for sigma in (0.55, 0.75, 0.95):
        tot = [B.theorem7_upper(zeta, sigma, T_BIG, loglogtau=L).total for L in Ls]
        assert np.all(np.diff(tot) > 0)


def test_report_schema(zeta):
    d = B.theorem7_upper(zeta, 0.75, T_BIG, loglogtau=L16).to_dict()
    assert set(d) == {"theorem", "case", "valid", "preconditions", "main_term", "terms", "total_exact",
                      "envelopes_total", "total", "alternatives", "notes", "inputs"}
    assert all({"label", "ref", "value", "kind"} <= set(t) for t in d["terms"])
    assert d["total"] == pytest.approx(d["total_exact"] + d["envelopes_total"])


def test_lower_prefactor():
    assert B._lower_prefactor(math.exp(200), 0.75) == pytest.approx(1.0, abs=1e-40)
    with pytest.raises(DomainError):
        B._lower_prefactor(1.0, 0.75)


# ---- the combined corollary ---------------------------------------------------


def test_corollary_critical_main(zeta):
    r = B.corollary_combined(zeta, 0.5, T_BIG, "upper", loglogtau=L16, alpha=1.0)
    lt = math.exp(L16)
    assert r.main_term == pytest.approx(lt / (2 * L16) * (math.log(2) - math.log1p(lt**-4)))
    assert r.term("log_L_5_2").value == pytest.approx(B.LOG_ZETA_5_2)
    assert r.case == "a"
    assert math.isfinite(r.total)
    with pytest.raises(DomainError):
        B.corollary_combined(zeta, 0.5, T_BIG, "lower", loglogtau=L16)


def test_corollary_lower_signs(zeta):
    up = B.corollary_combined(zeta, 0.75, T_BIG, "upper", loglogtau=L16)
    lo = B.corollary_combined(zeta, 0.75, T_BIG, "lower", loglogtau=L16)
    assert lo.term("log_L_5_2").value == -up.term("log_L_5_2").value
    assert lo.term("I_hat").value <= 0
    assert lo.total < up.total
    with pytest.raises(DomainError):
        B.corollary_combined(zeta, 0.75, T_BIG, "sideways", loglogtau=L16)


def test_corollary_L3_variants(zeta):
    s = B.corollary_combined(zeta, 0.75, T_BIG, "upper", loglogtau=L16)
    g = B.corollary_combined(zeta, 0.75, T_BIG, "upper", loglogtau=L16, L3_variant="general")
    assert s.term("L3_xi").value + s.term("L3_d").value >= g.term("L3").value - 1e-30


def test_reconciliation_equal_rows(zeta):
    for sigma, alpha, L in ((0.75, None, 20.0), (0.51, 1.0, 20.0), (0.99, 1.0, 20.0)):
        rows, thm, cor = B.reconcile_theorem7(zeta, sigma, 1e7, alpha=alpha, loglogtau=L)
        eq = [r for r in rows if r.relation == "eq"]
        assert eq and all(r.ok for r in eq), [r.to_dict() for r in eq if not r.ok]


# ---- asymptotic theorems ------------------------------------------------------


def test_main_general_hand_sum(zeta):
    sigma, eps, L = 0.7, 0.25, 12.0
    r = B.theorems_1_to_6(zeta, sigma, T_BIG, "main1_upper", eps=eps, loglogtau=L)
    lt = math.exp(L)
    head = afunc.A1(1.0, eps, sigma) * lt ** (2 * (1 - sigma + eps)) / (2 * L)
    assert r.main_term == pytest.approx(head)
    A3 = afunc.A3(1.0, 2.0, eps, 0.0, sigma, lt * lt)
    A4 = afunc.A4(zeta.invariants, 1, T_BIG, L)
    assert r.total == pytest.approx(head + A3 + A4)


def test_poly_middle_case(zeta):
    r = B.theorems_1_to_6(zeta, 0.75, T_BIG, "poly_upper", alpha=1.0, loglogtau=L16)
    assert r.case == "otherwise"
    lt = math.exp(L16)
    assert r.main_term == pytest.approx(0.5 * (1 + 0.5 / 0.1875) * lt**0.5 / L16)


def test_lower_envelopes_negative(zeta):
    for variant in ("main1_lower", "poly_lower"):
        r = B.theorems_1_to_6(zeta, 0.75, T_BIG, variant, loglogtau=L16)
        assert all(t.value <= 0 for t in r.terms if t.kind == "envelope")


def test_envelope_constants_scale(zeta):
    a = B.theorems_1_to_6(zeta, 0.75, T_BIG, "poly_upper", loglogtau=L16)
    b = B.theorems_1_to_6(zeta, 0.75, T_BIG, "poly_upper", loglogtau=L16, envelope_constants={"*": 2.0})
    assert b.envelopes_total == pytest.approx(2 * a.envelopes_total)
    assert b.case == a.case and b.total_exact == a.total_exact


def test_conjectural_variants(zeta):
    with pytest.raises(DescriptorError):
        B.theorems_1_to_6(zeta, 0.75, T_BIG, "conj_upper", loglogtau=L16)
    prof = ConjectureProfile("CONJ2", C_P2=1.0)
    up = B.theorems_1_to_6(zeta, 0.75, T_BIG, "conj_upper", profile=prof, loglogtau=L16)
    lo = B.theorems_1_to_6(zeta, 0.75, T_BIG, "conj_lower", profile=prof, loglogtau=L16)
    assert lo.total < up.total


def test_variant_domains(zeta):
    with pytest.raises(DomainError):
        B.theorems_1_to_6(zeta, 0.75, T_BIG, "nope", loglogtau=L16)
    with pytest.raises(DomainError):
        B.theorems_1_to_6(zeta, 0.5, T_BIG, "poly_lower", loglogtau=L16)
    with pytest.raises(DomainError):
        B.theorems_1_to_6(zeta, 0.75, T_BIG, "main1_upper", eps=0.6, loglogtau=L16)
    with pytest.raises(DomainError):
        B.critical_line_upper(zeta, T_BIG, variant="other")


def test_case_c_main_decreasing_in_sigma(zeta):
    sig = np.linspace(0.52, 0.98, 47)
    mains = [B.theorem7_upper(zeta, s, T_BIG, loglogtau=L16, case="c").main_term for s in sig]
    assert np.all(np.diff(mains) < 0)
