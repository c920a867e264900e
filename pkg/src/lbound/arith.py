"""Small arithmetic helpers: sieves, prime-power detection, factorisation."""
from functools import lru_cache
import math

import numpy as np


def smallest_prime_factor(nmax):
    """Array spf with spf[n] = least prime dividing n (spf[0] = spf[1] = 0)."""
    nmax = int(nmax)
    spf = np.zeros(nmax + 1, dtype=np.int64)
    if nmax < 2:
        return spf
    spf[2::2] = 2
    for p in range(3, math.isqrt(nmax) + 1, 2):
        if spf[p] == 0:
            block = spf[p * p :: 2 * p]
            block[block == 0] = p
    odd = np.arange(3, nmax + 1, 2)
    unset = odd[spf[odd] == 0]
    spf[unset] = unset
    return spf


def mangoldt_table(nmax):
    """Λ(n) for n = 0..nmax as a float array (Λ(0) = Λ(1) = 0)."""
    nmax = int(nmax)
    lam = np.zeros(nmax + 1)
    if nmax < 2:
        return lam
    spf = smallest_prime_factor(nmax)
    primes = np.flatnonzero(spf == np.arange(nmax + 1))
    primes = primes[primes >= 2]
    for p in primes:
        logp = math.log(p)
        q = int(p)
        while q <= nmax:
            lam[q] = logp
            if q > nmax // p:
                break
            q *= int(p)
    return lam


def prime_power_base(n):
    """Return p if n = p^k with k >= 1, else None."""
    n = int(n)
    if n < 2:
        return None
    for p in _small_factor_candidates(n):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
    return None


def _small_factor_candidates(n):
    yield 2
    f = 3
    while f * f <= n:
        yield f
        f += 2
    yield n


def von_mangoldt(n):
    p = prime_power_base(n)
    return math.log(p) if p else 0.0


@lru_cache(maxsize=None)
def factorize(n):
    """Prime factorisation of n as a tuple of (p, e) pairs."""
    n = int(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def euler_phi(n):
    phi = n
    for p, _ in factorize(n):
        phi = phi // p * (p - 1)
    return phi
