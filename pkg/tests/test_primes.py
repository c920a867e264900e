import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lbound import primes as P
from lbound.errors import DescriptorError, DomainError
from lbound.extremal import ExtremalContext
from lbound.lfunc import (
    CoefficientBounds,
    ConjectureProfile,
    GammaFactor,
    SelbergDescriptor,
    TableOracle,
)


def _psi_brute(x):
    """ψ(x) by trial division, independent of the package sieve."""
    total = 0.0
    for n in range(2, int(x) + 1):
        m, p = n, 2
        while p * p <= m and m % p:
            p += 1
        p = p if p * p <= m else m
        while m % p == 0:
            m //= p
        if m == 1:
            total += math.log(p)
    return total


@pytest.fixture(scope="module")
def toy():
    entries = {2: 0.5 * math.log(2), 3: -math.log(3), 4: 0.25j * math.log(2), 7: math.log(7), 9: 0.3 * math.log(3)}
    return SelbergDescriptor((GammaFactor(0.5, 0),), Q=1.0, oracle=TableOracle(entries),
                             coeff_bounds=CoefficientBounds(C_E=1.0, theta=0.0))


def test_psi_values(zeta):
    assert P.psi_tilde(zeta, 100) == pytest.approx(_psi_brute(100), rel=1e-14)
    assert P.psi_tilde(zeta, 100) == pytest.approx(94.045, abs=1e-3)
    assert P.psi_tilde(zeta, 1.5) == 0
    assert P.psi_tilde(zeta, 1000.7) == pytest.approx(_psi_brute(1000), rel=1e-13)
    with pytest.raises(DomainError):
        P.psi_tilde(zeta, -1)


def test_psi_table_descriptor(toy):
    assert P.psi_tilde(toy, 8.5) == pytest.approx(0.5 * math.log(2) + math.log(3) + 0.25 * math.log(2) + math.log(7))


def test_psi_cap(zeta):
    with pytest.raises(DomainError):
        P.psi_tilde(zeta, P.PSI_CAP + 10)
    with pytest.raises(DomainError):
        P.PsiTildeTable(zeta.oracle, 2 * P.PSI_CAP)
    tab = P.PsiTildeTable(zeta.oracle, 50)
    with pytest.raises(DomainError):
        tab(51)


def test_chebyshev_error_bound_on_grid():
    psi = P.chebyshev_psi_table(10**6)
    n = np.arange(2, 10**6 + 1, dtype=float)
    v = psi[2:]
    bound = lambda x: 2 * np.sqrt(x) * np.log(x) ** 2
    # ψ is constant on [n, n+1): the extremes sit at n and just below n + 1
    assert np.all(np.abs(v - n) <= bound(n))
    assert np.all(np.abs(v - (n + 1)) <= bound(n + 1))


def test_poly_bound(zeta):
    b = P.mangoldt_sum_bound(zeta, 74, "POLY")
    assert b.total == pytest.approx(74 + math.sqrt(74) * math.log(74) ** 2 / (8 * math.pi), rel=1e-14)
    assert b.total == pytest.approx(80.3416, abs=1e-3)
    psi = P.chebyshev_psi_table(10**6)
    n = np.arange(2, 10**6 + 1, dtype=float)
    # the right side is increasing, so checking at the left end of each step suffices
    assert np.all(psi[2:] <= n + np.sqrt(n) * np.log(n) ** 2 / (8 * math.pi))


def test_general_bound_dominates(toy):
    for x in (2.0, 3.5, 10.0, 1e3):
        b = P.mangoldt_sum_bound(toy, x, "GENERAL", eps=0.1)
        assert b.total >= P.psi_tilde(toy, x)
    with pytest.raises(DomainError):
        P.mangoldt_sum_bound(toy, 10, "GENERAL")


def test_mode_profile_mismatch(zeta, toy):
    with pytest.raises(DescriptorError):
        P.mangoldt_sum_bound(zeta, 10, "CONJ1")
    with pytest.raises(DescriptorError):
        P.mangoldt_sum_bound(zeta, 10, "CONJ2", profile=ConjectureProfile("CONJ1"))
    with pytest.raises(DescriptorError):
        P.mangoldt_sum_bound(toy, 10, "POLY")
    with pytest.raises(DomainError):
        P.mangoldt_sum_bound(zeta, 1.5, "POLY")


def test_conj_envelopes_scale(zeta):
    prof = ConjectureProfile("CONJ2", C_P2=0.5)
    b1 = P.mangoldt_sum_bound(zeta, 100, "CONJ2", profile=prof)
    b2 = P.mangoldt_sum_bound(zeta, 100, "CONJ2", profile=prof, envelope_constants={"O_powers": 3.0})
    assert b2.envelope_total == pytest.approx(3 * b1.envelope_total)
    assert b1.term("secondary").value == pytest.approx(0.5 * 100 / math.log(100))


def test_A_f_constant_is_zero():
    assert P.A_f_B_f(0.75, lambda u: 0.0, 50.0) == (0.0, 0.0)
    assert P.A_f_B_f(0.75, lambda u: 1.0, 2.0) == (0.0, 0.0)


@pytest.mark.parametrize("x", [10.0, 1e3, 1e6])
def test_A_f_identity_at_one(x):
    A, B = P.A_f_B_f(1.0, lambda u: 1.0, x)
    L = math.log(x)
    rest = mp.quad(lambda u: 1 / (2 * L - mp.log(u)), [2, x]) / x
    assert A == pytest.approx(math.log(L) - math.log(math.log(2)) - float(rest), rel=1e-9)
    assert B == pytest.approx(float(mp.quad(lambda u: 1 / u - 1 / x, [2, x])) / ((math.sqrt(x) + 1) * L), rel=1e-9)


@settings(max_examples=60, deadline=None)
@given(st.floats(0.51, 0.99), st.floats(2.0, 1e8))
def test_second_integral_estimate(sigma, x):
    main, bound = P.second_integral_estimate(x, sigma)
    assert abs(P.second_integral(x, sigma) - main) <= bound


def test_second_integral_domain():
    with pytest.raises(DomainError):
        P.second_integral_estimate(10, 1.0)


def test_C_terms():
    for x, sigma in ((3.0, 0.6), (100.0, 0.75), (5e4, 0.9)):
        C1, C2, C3 = P.C_terms(x, sigma)
        assert C2 == 0.35 + 1.17 / ((x * x - 1) * math.log(x))
        assert math.isfinite(C1) and math.isfinite(C3)
    with pytest.raises(DomainError):
        P.C_terms(10, 1.0)


def test_C1_direct_quadrature():
    # C₁'s ψ-integral checked against piecewise quadrature of the step function
    x, sigma = 60.0, 0.7
    L = math.log(x)
    x2 = x ** (2 * sigma - 1)
    w1 = lambda u: u ** (sigma - 1) / (x2 * (2 * L - mp.log(u))) - 1 / (u**sigma * mp.log(u))
    dw = lambda u: mp.diff(w1, u)
    pieces = [2] + list(range(3, 61))
    integ = mp.fsum(mp.quad(lambda u: (_psi_brute(a) - u) * dw(u), [a, b]) for a, b in zip(pieces, pieces[1:]))
    C1 = 2 ** (1 - sigma) / math.log(2) - 2**sigma / ((2 * L - math.log(2)) * x2) + float(integ)
    assert P.C_terms(x, sigma)[0] == pytest.approx(C1, rel=1e-7)


def test_theta_integrals():
    # termwise integral of θ₁(u) = Σ u^k/(k+2)!
    series = math.fsum(0.5 ** (k + 1) / ((k + 1) * math.factorial(k + 2)) for k in range(30))
    assert P.int_theta1(0.5) == pytest.approx(series, rel=1e-12)
    assert P.int_theta2(0.2, 1.3) == pytest.approx(float(mp.quad(lambda u: (mp.exp(u) - 1) / u, [0.2, 1.3])), rel=1e-12)
    assert P.int_theta2(1.3, 0.2) == pytest.approx(-P.int_theta2(0.2, 1.3))
    assert P.int_theta1(0) == 0


def test_harmonic_bound():
    h = np.cumsum(1 / np.arange(1, 20_001))
    for X in (1, 2, 7, 100, 5000):
        for Y in (X + 1, 2 * X + 3, 20_000):
            if Y > X:
                assert h[Y - 1] - h[X - 1] <= P.harmonic_bound(X, Y)
    with pytest.raises(DomainError):
        P.harmonic_bound(5, 5)


def test_eta_branches():
    x, alpha = 1e4, 1.0
    L = math.log(x)
    e = P.eta_T(x, 0.99, alpha, 0.5, 2.0)
    assert e.near_one and e.eta1 == 0 and e.eta4 == 0 and e.case == "b"
    e = P.eta_T(x, 0.5 + 0.5 / L, alpha, 0.5, 2.0)
    assert e.case == "a" and e.eta5 == pytest.approx(L**3 / 3)
    e = P.eta_T(x, 0.75, alpha, 0.5, 2.0)
    assert e.case == "c" and e.T == pytest.approx(e.eta2 + e.eta3)
    assert e.eta1 == pytest.approx(0.5 / (0.75 * 0.25) * x**0.25 / L)
    with pytest.raises(DomainError):
        P.eta_T(x, 0.75, alpha, 0.5, 2.0, near_one=True)
    with pytest.raises(DomainError):
        P.eta_T(x, 0.75, None, 0.5, 2.0)
    with pytest.raises(DomainError):
        P.eta_T(x, 0.75, 1.0, 1.0, 2.0)
    both = P.eta_T(20.0, 0.75, 1.0, 0.5, 2.0)
    assert both.case == "a+b"


@pytest.mark.parametrize("sigma,Delta", [(0.6, 1.0), (0.75, 1.0), (0.9, 1.2), (0.75, 0.5)])
@pytest.mark.parametrize("kind", ["g", "m"])
def test_poly_prime_sum_bound_dominates(zeta, sigma, Delta, kind):
    ctx = ExtremalContext(sigma, Delta)
    exact, err = P.prime_sum_exact(zeta, ctx, kind)
    b = P.I4_bound(zeta, ctx, "POLY", kind)
    assert exact + err <= b.total
    assert b.envelope_total == 0


def test_I4_branch_notes(zeta):
    x = 20.0
    ctx = ExtremalContext(0.75, math.log(x) / (2 * math.pi))
    b = P.I4_bound(zeta, ctx, "POLY", "g", alpha=1.0)
    assert len(b.notes) == 3
    forced = P.I4_bound(zeta, ctx, "POLY", "g", alpha=1.0, branches=(False, False))
    assert forced.total >= b.total


def test_I4_domain(zeta):
    with pytest.raises(DomainError):
        P.I4_bound(zeta, ExtremalContext(0.75, 1.0), "POLY", "h")
    with pytest.raises(DomainError):
        P.I4_bound(zeta, ExtremalContext(1.0, 1.0), "POLY", "g")
    with pytest.raises(DomainError):
        P.I4_bound(zeta, ExtremalContext(0.75, 0.1), "POLY", "g")


def test_I4_general_and_conj(zeta):
    ctx = ExtremalContext(0.75, 2.0)
    g = P.I4_bound(zeta, ctx, "GENERAL", "g", eps=0.1)
    m = P.I4_bound(zeta, ctx, "GENERAL", "m", eps=0.1)
    assert g.envelope_total > 0 and m.total > g.total
    c = P.I4_bound(zeta, ctx, "CONJ2", "m", profile=ConjectureProfile("CONJ2", C_P2=1.0))
    assert c.case in ("small-(1-σ)", "otherwise")
