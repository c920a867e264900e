import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lbound.errors import DescriptorError, DomainError
from lbound.lfunc import (
    ConjectureProfile,
    GammaFactor,
    SelbergDescriptor,
    TableOracle,
    ZetaOracle,
    builtin_descriptor,
    derive_invariants,
    dirichlet_descriptor,
    first_primitive_index,
    tau,
)


def _sieve_mangoldt(nmax):
    """Independent Λ(n): trial division."""
    out = np.zeros(nmax + 1)
    for n in range(2, nmax + 1):
        m, p = n, 2
        while p * p <= m and m % p:
            p += 1
        p = p if p * p <= m else m
        while m % p == 0:
            m //= p
        if m == 1:
            out[n] = math.log(p)
    return out


def test_zeta_invariants(zeta):
    inv = zeta.invariants
    assert inv.f == 1 and inv.d == 1
    assert inv.q == pytest.approx(1.0, abs=1e-12)
    assert inv.xi_L == -1
    assert inv.a_plus == 0 and inv.b_plus == 0
    assert inv.strong_lambda


def test_degree_two_toy():
    desc = SelbergDescriptor((GammaFactor(1.0, 0),), Q=1.0)
    inv = derive_invariants(desc)
    assert inv.d == 2
    assert inv.q == pytest.approx(4 * math.pi**2, rel=1e-14)
    assert inv.xi_L == -1
    assert not inv.strong_lambda


def test_dirichlet_even_character():
    k = first_primitive_index(5, parity=0)
    desc = dirichlet_descriptor(5, k)
    inv = desc.invariants
    assert inv.d == 1
    assert inv.q == pytest.approx(5, rel=1e-14)
    assert inv.xi_L == -1
    assert desc.pole_order == 0


def test_dirichlet_odd_character_shift():
    k = first_primitive_index(7, parity=1)
    inv = dirichlet_descriptor(7, k).invariants
    assert inv.xi_L == 0
    assert inv.a_plus == 1.0


def test_invariants_are_pure(zeta):
    assert derive_invariants(zeta) == derive_invariants(zeta)


def test_descriptor_validation():
    with pytest.raises(DescriptorError):
        SelbergDescriptor((), Q=1.0)
    with pytest.raises(DescriptorError):
        GammaFactor(0.0)
    with pytest.raises(DescriptorError):
        GammaFactor(0.5, -0.1)
    with pytest.raises(DescriptorError):
        SelbergDescriptor((GammaFactor(0.5),), Q=1.0, omega=2.0)
    with pytest.raises(DescriptorError):
        builtin_descriptor("nonsense")
    with pytest.raises(DescriptorError):
        dirichlet_descriptor(4, 0)


def test_tau_examples(zeta):
    assert tau(zeta, 2 * math.pi) == pytest.approx(1.0, rel=1e-14)
    assert tau(zeta, 2 * math.pi * math.e) == pytest.approx(math.e, rel=1e-14)
    toy = SelbergDescriptor((GammaFactor(1.0, 0),), Q=1.0)
    assert tau(toy, 2 * math.pi) == pytest.approx(4 * math.pi**2, rel=1e-14)
    with pytest.raises(DomainError):
        tau(zeta, 0.0)


@settings(max_examples=60, deadline=None)
@given(st.floats(0.1, 1e6), st.floats(1.0001, 10.0))
def test_tau_increasing(t, factor):
    desc = dirichlet_descriptor(5, 2)
    assert tau(desc, t * factor) > tau(desc, t)
    assert tau(desc, -t) == tau(desc, t)


def test_zeta_oracle():
    o = ZetaOracle()
    assert o.lambda_L(8) == pytest.approx(math.log(2))
    assert o.lambda_L(6) == 0
    lam = o.lambda_array(100).real
    assert math.fsum(lam) == pytest.approx(94.0453, abs=5e-4)
    np.testing.assert_allclose(lam, _sieve_mangoldt(100), atol=1e-15)
    assert o.a(97) == 1


def test_dirichlet_coefficients_multiplicative():
    desc = dirichlet_descriptor(5, 2)
    a = desc.oracle.a_array(60)
    for m, n in ((2, 3), (3, 7), (4, 9), (7, 8)):
        assert a[m * n] == pytest.approx(a[m] * a[n], abs=1e-12)
    assert abs(a[5]) < 1e-12


@pytest.mark.parametrize("name", ["zeta", "dirichlet:5:2", "dirichlet:7:1", "dirichlet:11:3", "dirichlet:8:2"])
def test_euler_product_bound(name):
    desc = builtin_descriptor(name)
    assert desc.check_lambda_bound(10_000) == []


def test_table_oracle_rejects_non_prime_power():
    with pytest.raises(DescriptorError):
        TableOracle({6: 1.0})
    o = TableOracle({2: math.log(2), 9: 0.5})
    assert o.lambda_L(9) == 0.5 and o.lambda_L(3) == 0


def test_conjecture_profile_monotone():
    ConjectureProfile("CONJ1", lambda x: math.log(x), 1.0)
    with pytest.raises(DescriptorError):
        ConjectureProfile("CONJ1", lambda x: 1 / x, 1.0)
    with pytest.raises(DescriptorError):
        ConjectureProfile("OTHER")
