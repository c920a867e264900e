"""Recomputation of the computer-assisted constants 121, 28, 24, 4 (two) and 13.

Each constant bounds Σ_n S(z, n) for a lemma-specific term S.  The sum is
split into a finite part, maximised numerically over each region of |z|,
and a tail controlled by the closed-form bounds S₁–S₅.  Nothing here is
interval-certified: maxima come from a grid search plus golden-section
refinement, mirroring a black-box numerical maximiser.
"""
from dataclasses import dataclass, field, asdict
import math
from typing import Callable, List, Optional

import numpy as np
from scipy.special import zeta as hurwitz_zeta

from .errors import DomainError

PI = math.pi
EULER_GAMMA = 0.57721566490153286061
H = math.log(2) + EULER_GAMMA - 1  # constant from the harmonic-sum estimate
C_SMALL = 4 / PI**2
C_LARGE = 1 + 2 / PI**2
_GOLDEN = (math.sqrt(5) - 1) / 2
_FAR = 1e60  # stands in for |z| → ∞ in the tail bounds


def hz(s, a):
    """Hurwitz zeta Σ_{k≥0} (k + a)^{−s}."""
    return float(hurwitz_zeta(s, a))


def delta(xi):
    return np.where(np.abs(xi) < 1, 1.0, 2 / PI**2)


# ---------------------------------------------------------------------------
# summands


def S_g(z, n):
    """Summand for the minorant: nodes at n − ½, ξ₁ = z − n + ½, ξ₂ = z + n − ½.

    Only |z| enters, so real and complex arguments of equal modulus agree.
    """
    az = np.abs(np.asarray(z))
    n = np.asarray(n, dtype=float)
    k = n - 0.5
    x1 = np.abs(az - k)
    x2 = az + k
    return _pair(az, k, x1, x2)


def S_m(z, n):
    """Summand for the majorant: nodes at n, ξ₃ = z − n, ξ₄ = z + n."""
    az = np.abs(np.asarray(z))
    k = np.asarray(n, dtype=float)
    x1 = np.abs(az - k)
    x2 = az + k
    return _pair(az, k, x1, x2)


def _pair(az, k, x1, x2):
    # |ξ| for complex z is bounded by these real distances, which the
    # proofs use; for real z they are exact.
    inv2 = 4 / k**2
    inv3 = 8 / k**3
    return delta(x1) * (1 + az) / (1 + x1**2) * (inv2 + inv3 * x1) + delta(x2) * (
        1 + az
    ) / (1 + x2**2) * (inv2 + inv3 * x2)


def S_small(z, n, kind="g", coef=C_SMALL):
    """Dominating single-term bound, used where |z| is well past n."""
    az = np.abs(np.asarray(z))
    n = np.asarray(n, dtype=float)
    k = n - 0.5 if kind == "g" else n
    return coef * (1 + az) / (1 + (az - k) ** 2) * (4 / k**2 + 8 * (az + k) / k**3)


def S_large(z, n, kind="g"):
    return S_small(z, n, kind, C_LARGE)


# ---------------------------------------------------------------------------
# tails


@dataclass(frozen=True)
class TailParams:
    N: int
    nu1: float
    nu2: float
    kind: str = "g"  # "g": nodes n − ½;  "m": nodes n

    def __post_init__(self):
        if self.N < 1 or int(self.N) != self.N:
            raise DomainError("N must be a positive integer")
        if not 0 < self.nu1 < 1:
            raise DomainError("nu1 must lie in (0, 1)")
        if not self.nu2 > 1:
            raise DomainError("nu2 must exceed 1")
        if self.kind not in ("g", "m"):
            raise DomainError("kind must be 'g' or 'm'")


def tail_bounds(params, z_abs):
    """(S₁, …, S₅) upper bounds at |z| = z_abs; inactive pieces are 0.

    kind "g" uses the N − ½ conventions of the minorant lemma; kind "m" the
    N conventions of the majorant lemma (no (1 + 1/(2ν₁|z|)) factor in S₂,
    no (1 + 1/(2(|z|+1))) factor in S₄, and S₃ active for |z| > N − 1).
    Accepts scalars (returns a tuple of floats) or arrays.
    """
    scalar = np.ndim(z_abs) == 0
    z = np.atleast_1d(np.asarray(z_abs, dtype=float))
    if np.any(z <= 0):
        raise DomainError("tail bounds need |z| > 0")
    N, nu1, nu2 = params.N, params.nu1, params.nu2
    if params.kind == "g":
        shift = N + 0.5
        on1 = z >= (N - 0.5) / nu1
        on2 = z >= 1 / (1 - nu1)
        on3 = z >= N - 0.5
        on4 = z >= 1 / (nu2 - 1)
        f2 = 1 + 1 / (2 * nu1 * z)
        f4 = 1 + 1 / (2 * (z + 1))
    else:
        shift = N + 1.0
        on1 = z > N / nu1
        on2 = z > 1 / (1 - nu1)
        on3 = z > N - 1
        on4 = z > 1 / (nu2 - 1)
        f2 = 1.0
        f4 = 1.0
    with np.errstate(divide="ignore", invalid="ignore"):
        den1 = 1 + (1 - nu1) ** 2 * z * z
        s1 = 4 * C_LARGE * (
            (1 + z) / den1 * hz(2, shift) + 2 * (1 + nu1) * (1 + z) * z / den1 * hz(3, shift)
        )
        s2 = (
            8 / PI**2 * (1 + 4 / nu1) / nu1 * (1 + 1 / z) * f2
            * (math.log(1 / nu1) + (0.5 + 2 / nu1 * H) / z)
        )
        s3 = 16 * (1 + z) / (z - 1) ** 2 * (5 + 6 / (z - 1))
        s4 = 8 / PI**2 * (1 + 2 * (1 + nu2)) * f4 * (math.log(nu2) + (1 / (2 * nu2) + 2 * H) / z)
        s5 = (
            16 / PI**2 * (1 + 2 * (1 + 1 / nu2)) * (1 + 1 / (nu2 * z))
            * (1 + z) / (nu2 * z * (1 + (nu2 - 1) ** 2 * z * z))
        )
    parts = (
        np.where(on1, s1, 0.0),
        np.where(on2, s2, 0.0),
        np.where(on3, s3, 0.0),
        np.where(on4, s4, 0.0),
        s5,
    )
    if scalar:
        return tuple(float(p[0]) for p in parts)
    return parts


def tail_total(params, z_abs):
    return sum(tail_bounds(params, np.atleast_1d(z_abs)))


def tail_activation_points(params):
    """|z| values where a tail piece switches on."""
    N, nu1, nu2 = params.N, params.nu1, params.nu2
    if params.kind == "g":
        return [(N - 0.5) / nu1, 1 / (1 - nu1), N - 0.5, 1 / (nu2 - 1)]
    return [N / nu1, 1 / (1 - nu1), N - 1, 1 / (nu2 - 1)]


def gabs_tails(N=500, nu1=0.83181, nu2=0.508444, x=1e4):
    """Tail bounds in the large-|x| lower estimate for the minorant."""
    s1 = 32 / (PI * (1 - nu1)) ** 2 * hz(2, N + 0.5)
    s2 = 16 / (math.sqrt(2) * PI**2 * nu1**2) * (math.log(1 / nu1) + (0.5 + 2 / nu1 * H) / x)
    s3 = 2 * 16 * math.sqrt(2) * 1.0004 / (PI * 19998)
    s4 = 32 / (PI**2 * math.sqrt(2)) * (
        math.log((2 * nu2 + 1) / 2) + (1 / (2 * (nu2 + 1)) + H) / x
    )
    s5 = 8 * (1 + 2 * nu2 * x) / (x * x * nu2**2 * PI**2 * (2 * nu2 - 1))
    return (s1, s2, s3, s4, s5)


def _sum_inv_sq_plus(a2, N):
    """Σ_{n>N} 1/(n² + a²) via the cotangent series."""
    a = math.sqrt(a2)
    full = (PI * a / math.tanh(PI * a) - 1) / (2 * a2)
    n = np.arange(1, N + 1, dtype=float)
    return full - math.fsum(1 / (n * n + a2))


def mur_real_tails(N=50, nu1=0.890094, x=85.0):
    """Tail bounds in the large-|x| estimate for the majorant (Δ ≥ 5, |x| ≥ 17Δ)."""
    ax = abs(x)
    c = 2320 / (289 * PI**2)
    s1 = c * (
        109 / 9 * hz(2, N + 1)
        + (1 / (1 - nu1) ** 2 + 1 / 1.7**2) * (1 / (0.7 * x * x) + (nu1 - 0.7) / (0.7 * nu1 * ax))
    ) + 9280 / (289 * PI**2) * (
        _sum_inv_sq_plus(100.0, N) / 0.51
        + 1 / (1 - nu1**2)
        * (
            1 / (0.7 * ax + 100) ** 2
            + (nu1 - 0.7) * ax / ((0.7 * ax + 100) * (nu1 * ax + 100))
        )
    )
    s2 = (
        145 / (16 * PI**2)
        * (
            sum(1 / (n * n + 1) for n in range(1, 6))
            + (10 * x * x - 50 * x + 37) / (2 * (2 * x * x - 18 * x + 41) * (2 * x * x - 2 * x + 1))
            + 0.5 * math.atan(2 * x - 9)
            - 0.5 * math.atan(2 * x - 1)
        )
        + c / nu1**2
        * (
            -4 / ((1 - nu1) ** 2 * x * x + 1)
            + 1 / ((2 * nu1 * x + 5) ** 2 + 1)
            - 0.5 * math.atan(2 * nu1 * x + 5)
            + math.atan((1 - nu1) * x)
            + 0.5 * math.atan(2 * x - 5)
            + 5 / 26
            - math.atan(5)
        )
        + 16 * ((2 * H / (nu1 * x) + 1 / (2 * (x - 5))) + math.log((x - 5) / (nu1 * x)))
        / (math.sqrt(2) * PI**2 * nu1**2)
        + 4 * (math.sqrt(5) + 3) * ((1 / (2 * (x - 1)) + 2 * H / (x - 5)) + math.log(4 / (x - 5) + 1))
        / (math.sqrt(2) * PI**2)
    )
    s3 = 3625 / 882 * (1 + 3 / 5 + 4 / (PI**2 * (1 + 82**2))) + 2 * math.sqrt(2) / (
        25 * PI * math.sqrt(1 + 82**2)
    ) * (252 + 4 * math.sqrt(1469))
    s4 = (
        c
        * (
            PI / 4 - 1 / ax + 1 / (3 * ax**3) + 0.5 - 1 / (3 * ax)
            + 1 / (1 + 1.5**2 * (ax + 1) ** 2) + 2 / (3 * (ax + 1))
            + 1 / (3**4 * ax**3) + 20 * (3 * ax + 2) / (81 * x * x)
        )
        + 32 / PI**2
        * (
            1 / math.sqrt(7.5)
            * (math.log(1 + 9 / (ax + 1)) + 1 / (2 * (ax + 10)) + 2 * H / (ax + 1))
            + 3 / math.sqrt(3214) * (math.log(1.5) + 1 / (3 * ax) + 2 * H / (ax + 10))
        )
        + 64 * (3 * ax + 2) / (225 * PI**2 * x * x)
    )
    s5 = 13888 / 289 * (2 * ax + 1) / (x * x * PI**2)
    return (s1, s2, s3, s4, s5)


# ---------------------------------------------------------------------------
# maximisation


@dataclass
class MaximizationResult:
    max_value: float
    arg_max: float
    grid_resolution: float
    refinement_iterations: int
    certified: bool = False


def golden_section_max(f, a, b, tol=1e-8, max_iter=200):
    """Maximise a unimodal-ish scalar function on [a, b]."""
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    it = 0
    while abs(b - a) > tol and it < max_iter:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
        it += 1
    x = c if fc >= fd else d
    return x, max(fc, fd), it


def maximize(objective, grid, resolution, top=5, tol=1e-8, lo=None, hi=None, extra=(), values=None):
    """Grid search over `grid` (vectorised objective), then golden-section
    refinement in [z_i − h, z_i + h] around the `top` best grid points.

    `extra` are (value, arg) candidates such as one-sided limits; `values`
    may carry the objective already evaluated on the grid.
    """
    grid = np.asarray(grid, dtype=float)
    vals = objective(grid) if values is None else np.asarray(values)
    order = np.argsort(vals)[::-1][:top]
    best_v = float(vals[order[0]])
    best_z = float(grid[order[0]])
    iters = 0
    lo = grid[0] if lo is None else lo
    hi = grid[-1] if hi is None else hi
    scalar = lambda z: float(objective(np.array([z]))[0])
    for i in order:
        zi = float(grid[i])
        left = grid[i - 1] if i > 0 else zi - resolution
        right = grid[i + 1] if i < len(grid) - 1 else zi + resolution
        a, b = max(lo, left), min(hi, right)
        if b <= a:
            continue
        z, v, it = golden_section_max(scalar, a, b, tol)
        iters += it
        if v > best_v:
            best_v, best_z = v, z
    for v, z in extra:
        if v > best_v:
            best_v, best_z = float(v), float(z)
    return MaximizationResult(best_v, best_z, float(resolution), iters)


def _finite_sum(term, nmax, nmin=1, chunk=2_000_000):
    """Vectorised z ↦ Σ_{n=nmin}^{nmax} term(z, n)."""
    n = np.arange(nmin, nmax + 1, dtype=float)

    def obj(z):
        z = np.atleast_1d(np.asarray(z, dtype=float))
        out = np.empty(z.size)
        step = max(1, chunk // n.size)
        for s in range(0, z.size, step):
            zz = z[s : s + step]
            out[s : s + step] = term(zz[:, None], n[None, :]).sum(axis=1)
        return out

    return obj


def _uniform(a, b, h, include_b=True):
    g = np.arange(a, b, h)
    if include_b and (g.size == 0 or g[-1] < b):
        g = np.append(g, b)
    return g


def _long_grid(a, b, h, uniform_width, rel):
    """Uniform step h on [a, a + width], then geometric with ratio 1 + rel."""
    u_end = min(b, a + uniform_width)
    g = _uniform(a, u_end, h)
    if b > u_end:
        count = int(math.ceil(math.log(b / u_end) / math.log1p(rel)))
        g = np.concatenate([g, np.geomspace(u_end, b, count + 1)[1:]])
    return g


def _with_activation(grid, params, a, b):
    """Add the points where tail pieces switch on (and their right neighbours)."""
    pts = []
    for p in tail_activation_points(params):
        if a <= p <= b:
            pts += [p, math.nextafter(p, math.inf)]
    pts = [p for p in pts if a <= p <= b]
    return np.unique(np.concatenate([np.asarray(grid, dtype=float), pts]))


# ---------------------------------------------------------------------------
# reports


@dataclass
class RegionResult:
    """One region of |z|.

    recomputed_max is the supremum of the finite sum, tail_bound the supremum
    of the pointwise tail bound, and joint_max the supremum of their sum
    taken at the same |z|; the last is what the lemma actually needs.
    """

    lemma: str
    region: str
    recomputed_max: float
    arg_max: Optional[float]
    tail_bound: float
    tail_parts: Optional[tuple]
    region_bound: float
    reference_constant: float
    reference_max: Optional[float] = None
    reference_tail: Optional[float] = None
    joint_max: Optional[float] = None
    joint_arg: Optional[float] = None
    tail_left: Optional[float] = None
    grid_resolution: Optional[float] = None
    refinement_iterations: int = 0
    certified: bool = False
    note: str = ""

    @property
    def total(self):
        split = self.recomputed_max + self.tail_bound
        return split if self.joint_max is None else min(split, self.joint_max)

    @property
    def margin(self):
        return self.reference_constant - self.total

    @property
    def passed(self):
        """The lemma constant holds on this region."""
        return self.margin > 0

    @property
    def region_bound_ok(self):
        """The tighter per-region bound quoted in the proof also holds."""
        return self.total < self.region_bound

    @staticmethod
    def _rel(a, b):
        return None if b is None else abs(a - b) / abs(b)

    @property
    def max_rel_dev(self):
        return self._rel(self.recomputed_max, self.reference_max)

    @property
    def tail_rel_dev(self):
        return self._rel(self.tail_bound, self.reference_tail)

    @property
    def within_1pct(self):
        devs = [d for d in (self.max_rel_dev, self.tail_rel_dev) if d is not None]
        return all(d <= 0.01 for d in devs)

    def to_dict(self):
        d = asdict(self)
        d.update(
            total=self.total,
            margin=self.margin,
            passed=self.passed,
            region_bound_ok=self.region_bound_ok,
            max_rel_dev=self.max_rel_dev,
            tail_rel_dev=self.tail_rel_dev,
            within_1pct=self.within_1pct,
        )
        d["pass"] = d.pop("passed")
        return d


@dataclass
class VerificationReport:
    lemma: str
    constant: float
    regions: List[RegionResult] = field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.regions)

    @property
    def within_1pct(self):
        return all(r.within_1pct for r in self.regions)

    def to_dict(self):
        return {
            "lemma": self.lemma,
            "constant": self.constant,
            "pass": self.passed,
            "within_1pct": self.within_1pct,
            "regions": [r.to_dict() for r in self.regions],
        }


def _region(lemma, label, obj, grid, step, lo, hi, params, bounds, quoted=(None, None),
            limit=None, note=""):
    """Split and joint maxima of Σ_{n≤N} S + tail over lo ≤ |z| ≤ hi.

    `limit` is the value of the finite sum as |z| → ∞ for unbounded regions.
    """
    grid = _with_activation(grid, params, lo, hi)
    sums = obj(grid)
    tails = tail_total(params, grid)
    extra_s, extra_j, extra_t = [], [], []
    if limit is not None:
        t_inf = float(tail_total(params, _FAR)[0])
        extra_s.append((limit, math.inf))
        extra_t.append((t_inf, math.inf))
        extra_j.append((limit + t_inf, math.inf))
    res = maximize(obj, grid, step, lo=lo, hi=hi, extra=extra_s, values=sums)
    joint = maximize(lambda z: obj(z) + tail_total(params, z), grid, step, lo=lo, hi=hi,
                     extra=extra_j, values=sums + tails)
    i = int(np.argmax(tails))
    t_sup, t_arg = float(tails[i]), float(grid[i])
    for v, z in extra_t:
        if v > t_sup:
            t_sup, t_arg = v, z
    parts = tail_bounds(params, t_arg if math.isfinite(t_arg) else _FAR)
    return RegionResult(
        lemma, label, res.max_value, res.arg_max, t_sup, parts, bounds[0], bounds[1],
        quoted[0], quoted[1], joint.max_value, joint.arg_max, float(tail_total(params, lo)[0]),
        step, res.refinement_iterations,
        note=(note + "; " if note else "") + f"tail supremum at |z|={t_arg:.6g}",
    )


# ---- minorant, real and complex -------------------------------------------


def _m2g_real(step=1e-3):
    out = []
    # 0 ≤ |z| ≤ 1/2: only n = 1 is kept exactly; the rest has a closed form
    h2, h3 = hz(2, 1.5), hz(3, 1.5)
    rest = 3 / PI**2 * (4 / 13 * (4 * h2 + 8 * (h2 + 0.5 * h3)) + 6 * h2)
    res = maximize(lambda z: S_g(z, 1), _uniform(0, 0.5, step), step, lo=0, hi=0.5)
    out.append(RegionResult("M2G_REAL", "0<=|z|<=1/2", res.max_value, res.arg_max, rest, None,
                            95, 121, grid_resolution=step,
                            refinement_iterations=res.refinement_iterations,
                            note="tail is the closed-form sum over n >= 2"))
    lo = math.nextafter(0.5, 1)
    out.append(_region("M2G_REAL", "1/2<|z|<=1", _finite_sum(S_g, 50), _uniform(lo, 1.0, step),
                       step, lo, 1.0, TailParams(50, 2.69261e-6, 2.2002, "g"), (112, 121)))
    # 1 < |z| < 3/2
    zl = 1.5 - 1e-12
    lim13 = float(S_g(zl, 1) + S_g(zl, 3))
    res2 = maximize(lambda z: S_g(z, 2), _uniform(1 + 1e-12, zl, step), step, lo=1 + 1e-12, hi=zl)
    nn = np.arange(4, 2_000_001, dtype=float)
    # beyond n = 2·10⁶ the terms sum to less than 1e-10
    resid = math.fsum(S_small(1.5, nn, "g"))
    out.append(RegionResult("M2G_REAL", "1<|z|<3/2", lim13 + res2.max_value, res2.arg_max, resid, None,
                            121, 121, 120.430, 0.388, grid_resolution=step,
                            refinement_iterations=res2.refinement_iterations,
                            note="limit of n=1,3 at 3/2 plus max of n=2; "
                                 "tail is the sum over n>=4 of S_small(3/2,n)"))
    hi = 350 - 1e-9
    out.append(_region("M2G_REAL", "3/2<=|z|<350", _finite_sum(S_g, 350), _uniform(1.5, hi, step),
                       step, 1.5, hi, TailParams(350, 0.999, 1.72537, "g"), (52, 121),
                       (40.754, 11.032)))
    return out


def _m2g_complex(step=1e-3):
    small_a = _finite_sum(lambda z, n: S_small(z, n, "g"), 348)
    large_a = _finite_sum(lambda z, n: S_large(z, n, "g"), 700, 349)
    hi = 699.5 - 1e-9
    A = _region("M2G_COMPLEX", "350<=|z|<699.5", lambda z: small_a(z) + large_a(z),
                _uniform(350, hi, step), step, 350, hi, TailParams(700, 0.99999, 1.03167, "g"),
                (28, 28), (27.725, 0.216))
    small_b = _finite_sum(lambda z, n: S_small(z, n, "g"), 698)
    large_b = _finite_sum(lambda z, n: S_large(z, n, "g"), 700, 699)
    zcap = 1e8
    # |z| → ∞: each S_small(z, n) tends to 8c/k³
    k_small = np.arange(1, 699, dtype=float) - 0.5
    limit = 8 * (C_SMALL * math.fsum(1 / k_small**3) + C_LARGE * (1 / 698.5**3 + 1 / 699.5**3))
    B = _region("M2G_COMPLEX", "|z|>=699.5", lambda z: small_b(z) + large_b(z),
                _long_grid(699.5, zcap, step, 50.0, 2e-4), step, 699.5, zcap,
                TailParams(700, 0.97658, 1.02002, "g"), (28, 28), (27.4599, 0.403), limit,
                note=f"uniform step on [699.5,749.5], geometric ratio 1+2e-4 to {zcap:g}, "
                     f"plus the |z|->inf limit")
    return [A, B]


# ---- majorant, real and complex -------------------------------------------


def _murc_real(step=1e-3):
    out = []
    res = maximize(lambda z: S_m(z, 1), _uniform(0, 1, step), step, lo=0, hi=1)
    nn = np.arange(2, 2_000_001, dtype=float)
    rest = math.fsum(2 / PI**2 * (2 / (1 + (nn - 1) ** 2) * 12 / nn**2 + 2 / (1 + nn**2) * 12 / nn**2))
    out.append(RegionResult("MURC_REAL", "0<=|z|<=1", res.max_value, res.arg_max, rest, None,
                            13, 24, 11.551, 1.103, grid_resolution=step,
                            refinement_iterations=res.refinement_iterations,
                            note="tail is the series over n >= 2"))
    zl = 2 - 1e-12
    lim = float(S_m(zl, 1) + S_m(zl, 3))
    res2 = maximize(lambda z: S_m(z, 2), _uniform(1 + 1e-12, zl, step), step, lo=1 + 1e-12, hi=zl)
    nn = np.arange(4, 2_000_001, dtype=float)
    resid = math.fsum(S_m(zl, nn))
    out.append(RegionResult("MURC_REAL", "1<|z|<2", lim + res2.max_value, res2.arg_max, resid, None,
                            24, 24, 20.111, 3.413, grid_resolution=step,
                            refinement_iterations=res2.refinement_iterations,
                            note="limit of n=1,3 at 2 plus max of n=2; "
                                 "tail is the limit of the n>=4 sum at 2"))
    out.append(_region("MURC_REAL", "2<=|z|<=10000", _finite_sum(S_m, 10_000),
                       _long_grid(2.0, 10_000.0, step, 60.0, 2e-4), step, 2.0, 10_000.0,
                       TailParams(10_000, 0.99999, 1.86921, "m"), (16, 24), (7.868, 7.293),
                       note="uniform step on [2,62], geometric ratio 1+2e-4 beyond"))
    return out


def _murc_complex(step=1e-2):
    small = _finite_sum(lambda z, n: S_small(z, n, "m"), 9_999)
    obj = lambda z: small(z) + S_large(np.atleast_1d(z), 10_000.0, "m")
    zcap = 1e9
    n = np.arange(1, 10_000, dtype=float)
    limit = 8 * (C_SMALL * math.fsum(1 / n**3) + C_LARGE / 1e12)
    return [_region("MURC_COMPLEX", "|z|>=10000", obj, _long_grid(10_000.0, zcap, step, 50.0, 1e-3),
                    step, 10_000.0, zcap, TailParams(10_000, 0.995884, 1.00342, "m"), (4, 4),
                    (3.903, 0.055), limit,
                    note=f"uniform step 1e-2 on [1e4,1e4+50], geometric ratio 1+1e-3 to {zcap:g}, "
                         f"plus the |z|->inf limit")]


# ---- large-|x| real estimates --------------------------------------------


def gabs_factor(x=1e4, Delta=0.8, N=500):
    """(Δ² + x²)/√((1 + (x − N + ½)²)(1 + x²)), the 1.053 factor."""
    return (Delta**2 + x * x) / math.sqrt((1 + (x - N + 0.5) ** 2) * (1 + x * x))


def _gabs():
    n = np.arange(1, 3001, dtype=float)
    main = math.fsum(32 * 1.053 / (PI**2 * ((n - 0.5) ** 2 + 4 * 0.8**2)))
    parts = gabs_tails()
    fac = gabs_factor()
    return [RegionResult("GABS", "|x|>=10000, Delta>=0.8", main, 1e4, math.fsum(parts), parts,
                         4, 4, 3.345, 0.574,
                         note=f"evaluated at |x|=1e4, Delta=0.8; factor {fac:.6f} < 1.053 "
                              f"{'holds' if fac < 1.053 else 'FAILS'}")]


def mur_real_main(x=85.0, N=50):
    n = np.arange(1, N + 1, dtype=float)
    a3 = 1 + (x - n) ** 2
    a4 = 1 + (x + n) ** 2
    s = 1 / (a3 * n * n) + 1 / (a4 * n * n) + 4 / ((n * n + 100) * np.sqrt(a3 * a4))
    return 2320 * x * x / (289 * PI**2) * math.fsum(s)


def _mur_real():
    parts = mur_real_tails()
    return [RegionResult("MUR_REAL", "|x|>=17, Delta>=5", mur_real_main(), 85.0, math.fsum(parts), parts,
                         13, 13, 3.13754, 9.81443,
                         note="evaluated at |x|=85 (Delta=5)")]


LEMMAS = {
    "M2G_REAL": (121, _m2g_real),
    "M2G_COMPLEX": (28, _m2g_complex),
    "MURC_REAL": (24, _murc_real),
    "MURC_COMPLEX": (4, _murc_complex),
    "GABS": (4, _gabs),
    "MUR_REAL": (13, _mur_real),
}


def verify_constant(lemma):
    try:
        constant, fn = LEMMAS[lemma]
    except KeyError:
        raise DomainError(f"unknown lemma {lemma!r}; choose from {sorted(LEMMAS)}") from None
    return VerificationReport(lemma, constant, fn())


# ---- remark sums ------------------------------------------------------------


def remark_sums():
    """The four partial sums quoted after the minorant and majorant lemmas."""
    n100 = np.arange(1, 101, dtype=float)
    n400 = np.arange(1, 401, dtype=float)
    return {
        "S_g(1.499), n<=100": math.fsum(S_g(1.499, n100)),
        "S_g(350), n<=400": math.fsum(S_g(350.0, n400)),
        "S_m(1.9), n<=100": math.fsum(S_m(1.9, n100)),
        "S_m(10000), n<=100": math.fsum(S_m(10_000.0, n100)),
    }
