"""Axiomatic data of a Selberg-class L-function and its derived invariants.

A descriptor carries the functional-equation data (gamma factors, Q, root
number), the pole order at s = 1, an optional polynomial Euler product order,
and a pluggable coefficient oracle giving Λ_L(n) and a(n).
"""
from dataclasses import dataclass, field
from functools import cached_property
import cmath
import math
from typing import Callable, Optional

import numpy as np

from .arith import euler_phi, factorize, mangoldt_table, prime_power_base
from .errors import DescriptorError, DomainError


@dataclass(frozen=True)
class GammaFactor:
    """One factor Γ(λ s + μ) of the completed L-function."""

    lam: float
    mu: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "lam", float(self.lam))
        object.__setattr__(self, "mu", complex(self.mu))
        if not self.lam > 0:
            raise DescriptorError(f"gamma factor scale must be positive, got {self.lam}")
        if self.mu.real < 0:
            raise DescriptorError(f"gamma factor shift needs Re(mu) >= 0, got {self.mu}")


def _one(eps):
    return 1.0


@dataclass(frozen=True)
class CoefficientBounds:
    """Constants in |a(n)| ≤ C_R(ε) n^ε and |b(p^k)| ≤ C_E p^{kθ}."""

    C_E: float = 1.0
    theta: float = 0.0
    C_R: Callable[[float], float] = _one

    def __post_init__(self):
        if not self.C_E > 0:
            raise DescriptorError("C_E must be positive")
        if not 0.0 <= self.theta < 0.5:
            raise DescriptorError("theta must lie in [0, 1/2)")


# ---------------------------------------------------------------------------
# coefficient oracles


class CoefficientOracle:
    """Base oracle.  Subclasses provide lambda_array; a(n) follows from it.

    The recursion a(n) log n = Σ_{d | n} Λ_L(d) a(n/d) recovers the Dirichlet
    coefficients from the von Mangoldt coefficients.
    """

    label = "abstract"

    def lambda_array(self, nmax):
        """Complex array of Λ_L(n) for n = 0..nmax."""
        raise NotImplementedError

    def lambda_L(self, n):
        return complex(self.lambda_array(int(n))[int(n)])

    def a_array(self, nmax):
        nmax = int(nmax)
        lam = self.lambda_array(nmax)
        support = np.flatnonzero(lam)
        a = np.zeros(nmax + 1, dtype=complex)
        acc = np.zeros(nmax + 1, dtype=complex)
        for n in range(1, nmax + 1):
            a[n] = 1.0 if n == 1 else acc[n] / math.log(n)
            d = support[support <= nmax // n]
            if d.size:
                acc[n * d] += lam[d] * a[n]
        return a

    def a(self, n):
        return complex(self.a_array(int(n))[int(n)])


class ZetaOracle(CoefficientOracle):
    """Riemann zeta: Λ_ζ = Λ and a(n) = 1."""

    label = "zeta"

    def lambda_array(self, nmax):
        return mangoldt_table(nmax).astype(complex)

    def lambda_L(self, n):
        p = prime_power_base(n)
        return complex(math.log(p)) if p else 0j

    def a_array(self, nmax):
        a = np.ones(int(nmax) + 1, dtype=complex)
        a[0] = 0
        return a

    def a(self, n):
        return 1.0 + 0j


class DirichletCharacter:
    """Character χ mod q selected by an index in [0, φ(q)).

    (Z/qZ)^* is split into cyclic factors: one per odd prime power, and for
    2^e one factor of order 2 (for e ≥ 2) and one of order 2^{e−2} (for
    e ≥ 3).  The index is read in mixed radix over the factor orders, and the
    character sends the k-th generator to exp(2πi c_k / ord_k).
    """

    def __init__(self, modulus, index):
        modulus, index = int(modulus), int(index)
        if modulus < 1:
            raise DescriptorError("modulus must be positive")
        phi = euler_phi(modulus)
        if not 0 <= index < phi:
            raise DescriptorError(f"character index must lie in [0, {phi})")
        self.modulus = modulus
        self.index = index
        self._values = self._build_table()

    def _components(self):
        comps = []  # (prime power, generator, order)
        for p, e in factorize(self.modulus):
            pe = p**e
            if p == 2:
                if e >= 2:
                    comps.append((pe, pe - 1, 2))
                if e >= 3:
                    comps.append((pe, 5, 2 ** (e - 2)))
            else:
                comps.append((pe, _primitive_root(p, e), (p - 1) * p ** (e - 1)))
        return comps

    def _build_table(self):
        q = self.modulus
        comps = self._components()
        digits = []
        rest = self.index
        for _, _, order in comps:
            digits.append(rest % order)
            rest //= order
        values = np.zeros(q, dtype=complex)
        # discrete logs per component by enumerating powers of the generator
        pe_index = {}
        for k, (pe, g, order) in enumerate(comps):
            pe_index.setdefault(pe, []).append(k)
        comp_logs = [None] * len(comps)
        for pe, ks in pe_index.items():
            if pe % 2 == 0 and len(ks) == 2:
                # 2^e, e >= 3: every unit is ±5^j
                table = {}
                x = 1
                for j in range(comps[ks[1]][2]):
                    table[x] = (0, j)
                    table[(-x) % pe] = (1, j)
                    x = x * 5 % pe
                comp_logs[ks[0]] = (pe, {u: v[0] for u, v in table.items()})
                comp_logs[ks[1]] = (pe, {u: v[1] for u, v in table.items()})
            else:
                k = ks[0]
                _, g, order = comps[k]
                table = {}
                x = 1
                for j in range(order):
                    table[x] = j
                    x = x * g % pe
                comp_logs[k] = (pe, table)
        for a in range(q):
            if math.gcd(a, q) != 1:
                continue
            phase = 0.0
            for k, (pe, table) in enumerate(comp_logs):
                phase += digits[k] * table[a % pe] / comps[k][2]
            values[a] = cmath.exp(2j * math.pi * phase)
        if q == 1:
            values[0] = 1.0
        return values

    def __call__(self, n):
        return complex(self._values[int(n) % self.modulus])

    def values(self, narray):
        return self._values[np.asarray(narray, dtype=np.int64) % self.modulus]

    @property
    def is_principal(self):
        return self.index == 0

    @property
    def parity(self):
        """0 for even characters, 1 for odd ones."""
        if self.modulus <= 2:
            return 0
        return 0 if abs(self(self.modulus - 1) - 1) < 1e-9 else 1

    def is_primitive(self):
        q = self.modulus
        if q == 1:
            return True
        for p, _ in factorize(q):
            d = q // p
            # induced from modulus d iff χ(a) = 1 for all units a ≡ 1 mod d
            for a in range(1, q, d):
                if math.gcd(a, q) == 1 and abs(self(a) - 1) > 1e-9:
                    break
            else:
                return False
        return True


def _primitive_root(p, e):
    phi_p = p - 1
    factors = [f for f, _ in factorize(phi_p)]
    for g in range(2, p + 1):
        if all(pow(g, phi_p // f, p) != 1 for f in factors):
            # lift to p^e: g or g + p works
            if e > 1 and pow(g, p - 1, p * p) == 1:
                g += p
            return g
    raise DescriptorError(f"no primitive root found mod {p}")


class DirichletOracle(CoefficientOracle):
    """L(s, χ): Λ_L(n) = χ(n)Λ(n) and a(n) = χ(n)."""

    def __init__(self, character):
        self.character = character
        self.label = f"dirichlet:{character.modulus}:{character.index}"

    def lambda_array(self, nmax):
        n = np.arange(int(nmax) + 1)
        return mangoldt_table(nmax) * self.character.values(n)

    def lambda_L(self, n):
        p = prime_power_base(n)
        return self.character(n) * math.log(p) if p else 0j

    def a_array(self, nmax):
        return self.character.values(np.arange(int(nmax) + 1)).astype(complex)

    def a(self, n):
        return self.character(n)


class TableOracle(CoefficientOracle):
    """Λ_L(n) read from a user table; entries not listed are zero."""

    def __init__(self, entries, label="table"):
        self.entries = {int(n): complex(v) for n, v in entries.items()}
        self.label = label
        for n, v in self.entries.items():
            if v != 0 and prime_power_base(n) is None:
                raise DescriptorError(f"Λ_L({n}) must vanish: {n} is not a prime power")
        self.n_max = max(self.entries, default=1)

    def lambda_array(self, nmax):
        out = np.zeros(int(nmax) + 1, dtype=complex)
        for n, v in self.entries.items():
            if n <= nmax:
                out[n] = v
        return out

    def lambda_L(self, n):
        return self.entries.get(int(n), 0j)


# ---------------------------------------------------------------------------
# descriptor and invariants


@dataclass(frozen=True)
class SelbergDescriptor:
    gamma_factors: tuple
    Q: float
    omega: complex = 1 + 0j
    pole_order: int = 0
    euler_order: Optional[int] = None
    oracle: CoefficientOracle = field(default_factory=ZetaOracle)
    coeff_bounds: CoefficientBounds = field(default_factory=CoefficientBounds)
    name: str = "L"

    def __post_init__(self):
        object.__setattr__(self, "gamma_factors", tuple(self.gamma_factors))
        if not self.gamma_factors:
            raise DescriptorError("at least one gamma factor is required")
        for g in self.gamma_factors:
            if not isinstance(g, GammaFactor):
                raise DescriptorError(f"not a GammaFactor: {g!r}")
        if not self.Q > 0:
            raise DescriptorError("Q must be positive")
        if abs(abs(complex(self.omega)) - 1) > 1e-12:
            raise DescriptorError(f"root number must have modulus 1, got {self.omega}")
        if int(self.pole_order) != self.pole_order or self.pole_order < 0:
            raise DescriptorError("pole order must be a nonnegative integer")
        if self.euler_order is not None and (
            int(self.euler_order) != self.euler_order or self.euler_order < 1
        ):
            raise DescriptorError("euler order must be a positive integer")

    @cached_property
    def invariants(self):
        return derive_invariants(self)

    def check_lambda_bound(self, nmax=10_000, tol=1e-12):
        """Check |Λ_L(n)| ≤ mΛ(n) for n ≤ nmax; return offending n (empty if ok)."""
        if self.euler_order is None:
            return []
        lam_L = np.abs(self.oracle.lambda_array(nmax))
        lam = mangoldt_table(nmax)
        bad = np.flatnonzero(lam_L > self.euler_order * lam + tol)
        return bad.tolist()


@dataclass(frozen=True)
class DerivedInvariants:
    f: int
    d: float
    q: float
    xi_L: complex
    mu_sum: complex
    lambda_prod: float
    lambda_minus: float
    lambda_plus: float
    a_plus: float
    b_plus: float

    @property
    def strong_lambda(self):
        return self.lambda_minus == 0.5 and self.lambda_plus == 0.5


def derive_invariants(desc):
    gf = desc.gamma_factors
    if not gf:
        raise DescriptorError("at least one gamma factor is required")
    lams = [g.lam for g in gf]
    mus = [g.mu for g in gf]
    d = 2.0 * math.fsum(lams)
    lambda_prod = math.prod(l ** (2 * l) for l in lams)
    q = (2 * math.pi) ** d * desc.Q**2 * lambda_prod
    xi = 2 * complex(
        math.fsum(m.real - 0.5 for m in mus), math.fsum(m.imag for m in mus)
    )
    mu_sum = 2 * complex(math.fsum(m.real for m in mus), math.fsum(m.imag for m in mus))
    return DerivedInvariants(
        f=len(gf),
        d=d,
        q=q,
        xi_L=xi,
        mu_sum=mu_sum,
        lambda_prod=lambda_prod,
        lambda_minus=min(lams),
        lambda_plus=max(lams),
        a_plus=max(m.real / l for m, l in zip(mus, lams)),
        b_plus=max(abs(m.imag) / l for m, l in zip(mus, lams)),
    )


def tau(desc, t):
    """Analytic conductor q(|t|/2π)^d."""
    if t == 0:
        raise DomainError("tau is undefined at t = 0")
    inv = desc.invariants if isinstance(desc, SelbergDescriptor) else desc
    return inv.q * (abs(t) / (2 * math.pi)) ** inv.d


# ---------------------------------------------------------------------------
# conjecture profiles


@dataclass(frozen=True)
class ConjectureProfile:
    """Prime-coefficient hypotheses: mode NONE, CONJ1 or CONJ2."""

    mode: str = "NONE"
    C_P1: Callable[[float], float] = _one
    C_P2: float = 0.0

    def __post_init__(self):
        if self.mode not in ("NONE", "CONJ1", "CONJ2"):
            raise DescriptorError(f"unknown conjecture mode {self.mode!r}")
        if self.C_P2 < 0:
            raise DescriptorError("C_P2 must be nonnegative")
        grid = np.geomspace(2, 1e12, 200)
        vals = np.array([self.C_P1(x) for x in grid])
        if np.any(vals <= 0) or np.any(np.diff(vals) < -1e-12 * np.abs(vals[1:])):
            raise DescriptorError("C_P1 must be positive and nondecreasing")


# ---------------------------------------------------------------------------
# builtin descriptors


def builtin_zeta_oracle():
    return ZetaOracle()


def zeta_descriptor():
    return SelbergDescriptor(
        gamma_factors=(GammaFactor(0.5, 0),),
        Q=math.pi**-0.5,
        pole_order=1,
        euler_order=1,
        oracle=ZetaOracle(),
        name="zeta",
    )


def dirichlet_descriptor(modulus, index):
    """L(s, χ) for a primitive, non-principal character χ mod `modulus`."""
    chi = DirichletCharacter(modulus, index)
    if modulus == 1:
        return zeta_descriptor()
    if chi.is_principal or not chi.is_primitive():
        raise DescriptorError(
            f"character {index} mod {modulus} is not primitive; "
            "only primitive characters define members of the class"
        )
    return SelbergDescriptor(
        gamma_factors=(GammaFactor(0.5, 0.5 * chi.parity),),
        Q=math.sqrt(modulus / math.pi),
        pole_order=0,
        euler_order=1,
        oracle=DirichletOracle(chi),
        name=f"dirichlet:{modulus}:{index}",
    )


def builtin_descriptor(name):
    """Resolve "zeta" or "dirichlet:<modulus>:<index>"."""
    if name == "zeta":
        return zeta_descriptor()
    if name.startswith("dirichlet:"):
        try:
            _, q, k = name.split(":")
            return dirichlet_descriptor(int(q), int(k))
        except ValueError as exc:
            raise DescriptorError(f"bad builtin name {name!r}") from exc
    raise DescriptorError(f"unknown builtin descriptor {name!r}")


def first_primitive_index(modulus, parity=None):
    """Smallest index of a primitive character mod q with the given parity."""
    for k in range(1, euler_phi(modulus)):
        chi = DirichletCharacter(modulus, k)
        if chi.is_primitive() and (parity is None or chi.parity == parity):
            return k
    raise DescriptorError(f"no primitive character mod {modulus}")
