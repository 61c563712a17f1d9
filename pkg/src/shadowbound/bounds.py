"""Closed-form lower bounds for shadows and for triangle-degree constrained graphs.

Two parameterizations of the same requirement appear throughout:

* ``t`` (real): every vertex must lie in at least C(t, 2) triangles;
* ``d`` (density): C(t, 2) = d * C(n, 2).

Branch decisions (which regime applies) never compare irrational floats.
They are made on the exact rational quantity T = C(t, 2), with square roots
cleared by squaring; see ``_sign_sqrt_sum``.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import asdict, dataclass
from enum import Enum
from fractions import Fraction

from .combinatorics import TOL, binom_inverse, binom_real
from .families import SetFamily, shadow
from .graphs import Graph, neighborhood_edge_count

#: density at which the two shadow formulas cross, (47 - 5 sqrt 57) / 24
D_STAR = (47 - 5 * math.sqrt(57)) / 24
MIN_N_SHADOW = 12
CAVEAT_N = 100


class Regime(str, Enum):
    CLIQUE_OVERLAP = "CLIQUE_OVERLAP"
    REGULAR_SPLIT = "REGULAR_SPLIT"
    BOUNDARY = "BOUNDARY"


@dataclass(frozen=True)
class BoundParams:
    """Problem size n with the exact triangle requirement T = C(t, 2)."""

    n: int
    T: Fraction
    t: float

    @classmethod
    def from_t(cls, n: int, t) -> "BoundParams":
        tq = Fraction(t)
        if tq < Fraction(1, 2):
            raise ValueError(f"t must be >= 1/2, got {t}")
        return cls(n, tq * (tq - 1) / 2, float(t))

    @classmethod
    def from_threshold(cls, n: int, T) -> "BoundParams":
        T = Fraction(T)
        if T < 0:
            raise ValueError(f"threshold must be >= 0, got {T}")
        return cls(n, T, binom_inverse(T, 2))

    @classmethod
    def from_d(cls, n: int, d) -> "BoundParams":
        return cls.from_threshold(n, Fraction(d) * math.comb(n, 2))

    @property
    def d(self) -> float:
        return float(self.T / math.comb(self.n, 2))

    @property
    def t_disc(self) -> Fraction:
        """(2t - 1)^2 = 1 + 8T, so that t = (1 + sqrt(t_disc)) / 2."""
        return 1 + 8 * self.T


@dataclass(frozen=True)
class BoundReport:
    value: float
    regime: Regime
    r: float
    r_prime: float | None
    threshold_t: float
    exact: bool
    asymptotic_caveat: bool = False
    other_value: float | None = None
    n: int | None = None
    t: float | None = None

    def to_dict(self) -> dict:
        out = asdict(self)
        out["regime"] = self.regime.value
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


# ---------------------------------------------------------------- exact helpers


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_sqrt_sum(a: Fraction, b: Fraction, c: Fraction) -> int:
    """Exact sign of sqrt(a) + sqrt(b) - c for rationals a, b >= 0."""
    if c < 0:
        return 1
    # compare a + b + 2 sqrt(ab) with c^2
    u = c * c - a - b
    if u < 0:
        return 1
    return _sign(4 * a * b - u * u)


def _int_root(disc: Fraction) -> int | None:
    """The integer x with disc = (2x - 1)^2, if there is one."""
    if disc.denominator != 1 or disc < 0:
        return None
    s = math.isqrt(disc.numerator)
    if s * s != disc.numerator or s % 2 == 0:
        return None
    return (1 + s) // 2


def _params(n: int, t, threshold) -> BoundParams:
    if (t is None) == (threshold is None):
        raise ValueError("pass exactly one of t or threshold")
    if t is not None:
        return BoundParams.from_t(n, t)
    return BoundParams.from_threshold(n, threshold)


def _check_t_range(p: BoundParams) -> None:
    n, t = p.n, p.t
    if not (n / 2 - TOL * n <= t + 1 <= n + TOL * n):
        raise ValueError(f"t={t} outside n/2 <= t+1 <= n for n={n}")


def _r_square_arg(p: BoundParams, base) -> Fraction:
    """1 + 8m where C(r, 2) = m = (T - C(base, 2)) / 3."""
    m = (p.T - binom_real(Fraction(base), 2)) / 3
    if m < 0:
        if m < -TOL * max(1, p.T):
            raise ValueError(f"C(t,2) = {float(p.T)} is below C({base},2); no r >= 0 exists")
        m = Fraction(0)
    return 1 + 8 * m


# ---------------------------------------------------------------- Kruskal-Katona


def kk_shadow_bound(family_size, k: int) -> float:
    """Lovasz form: |F| >= C(t, k) implies |shadow F| >= C(t, k-1)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if family_size < 0:
        raise ValueError("family size must be >= 0")
    if family_size == 0:
        return 0.0
    t = binom_inverse(family_size, k)
    return float(binom_real(t, k - 1))


def colex_initial_segment(m: int, k: int, n: int) -> SetFamily:
    """The first m k-subsets of range(n) in colexicographic order."""
    combos = sorted(itertools.combinations(range(n), k), key=lambda c: c[::-1])
    return SetFamily.from_sets(n, k, combos[:m])


def kk_exact_min_shadow(family_size: int, k: int, n: int) -> int:
    """Minimum shadow size over all families of ``family_size`` k-subsets of an n-set."""
    if not 0 <= family_size <= math.comb(n, k):
        raise ValueError(f"family size {family_size} outside [0, C({n},{k})]")
    if family_size == 0:
        return 0
    return len(shadow(colex_initial_segment(family_size, k, n)))


def naive_mindeg_shadow_bound(n: int, k: int, d: float) -> float:
    """Leading term d^((k-2)/(k-1)) * C(n, k-1) of the link-by-link bound.

    The O(n^(k-2)) error term is dropped.
    """
    if not 0 < d < 1:
        raise ValueError("d must lie in (0, 1)")
    if k < 3:
        raise ValueError("k must be >= 3")
    return d ** ((k - 2) / (k - 1)) * math.comb(n, k - 1)


# ---------------------------------------------------------------- triangle-degree bounds


def solve_r(n: int, t=None, *, threshold=None) -> float:
    """Larger root r of C(n/2 - 1, 2) + 3 C(r, 2) = C(t, 2)."""
    p = _params(n, t, threshold)
    _check_t_range(p)
    return (1 + math.sqrt(_r_square_arg(p, Fraction(n, 2) - 1))) / 2


def solve_r_prime(n: int, t=None, *, threshold=None) -> float:
    """Larger root r' of C((n-3)/2, 2) + 3 C(r', 2) = C(t, 2), n odd."""
    if n % 2 != 1:
        raise ValueError("solve_r_prime needs odd n")
    p = _params(n, t, threshold)
    _check_t_range(p)
    return (1 + math.sqrt(_r_square_arg(p, Fraction(n - 3, 2)))) / 2


def f_eval(n: int, t, x):
    """f(x) = C(t, 2) + x(n - x) - C(n - x - 1, 2). Exact for exact inputs."""
    return binom_real(t, 2) + x * (n - x) - binom_real(n - x - 1, 2)


def _f_from_T(n: int, T, x):
    return T + x * (n - x) - binom_real(n - x - 1, 2)


def comparison_threshold(n: int) -> float:
    """Largest t with f(t) <= f(n/2 + r - 1); about 0.6208 n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return 5 * n / 4 - math.sqrt(57 * n * n - 72 * n) / 12 - 1


def edge_lower_bound(n: int, t=None, *, threshold=None) -> BoundReport:
    """Minimum-edge lower bound for n-vertex graphs whose vertices lie in >= C(t,2) triangles."""
    p = _params(n, t, threshold)
    _check_t_range(p)
    a = p.t_disc
    b = _r_square_arg(p, Fraction(n, 2) - 1)
    t = p.t
    r = (1 + math.sqrt(b)) / 2
    # r + t <= 5n/6  <=>  sqrt(a) + sqrt(b) <= 5n/3 - 2
    side = _sign_sqrt_sum(a, b, Fraction(5 * n, 3) - 2)

    t_int, r_int = _int_root(a), _int_root(b)
    exact = n % 2 == 0 and t_int is not None and r_int is not None
    if exact:
        v_overlap = float(_f_from_T(n, p.T, t_int))
        v_split = float(_f_from_T(n, p.T, n // 2 + r_int - 1))
    else:
        v_overlap = float(_f_from_T(n, p.T, t))
        v_split = float(_f_from_T(n, p.T, n / 2 + r - 1))

    r_prime = None
    if n % 2 == 1:
        try:
            r_prime = solve_r_prime(n, threshold=p.T)
        except ValueError:
            r_prime = None

    other = None
    if side == 0 or abs(r + t - 5 * n / 6) <= TOL * n:
        regime = Regime.BOUNDARY
        value, other = min(v_overlap, v_split), max(v_overlap, v_split)
    elif side < 0:
        regime, value = Regime.CLIQUE_OVERLAP, v_overlap
    else:
        regime, value = Regime.REGULAR_SPLIT, v_split
    return BoundReport(
        value=value,
        regime=regime,
        r=r,
        r_prime=r_prime,
        threshold_t=comparison_threshold(n),
        exact=exact,
        other_value=other,
        n=n,
        t=t,
    )


def delta_based_bound(G: Graph, t) -> float:
    """f(delta(G)): valid when every vertex of G lies in >= C(t, 2) triangles."""
    return float(f_eval(G.n, t, min(G.degrees())))


def check_delta_equality(G: Graph, t) -> bool:
    """Structural test for e(G) = f(delta(G)).

    True iff some v0 has e(N(v0)) = C(t, 2), every vertex outside N(v0) has
    degree delta(G), and V - N[v0] is a clique.
    """
    degs = G.degrees()
    delta = min(degs)
    need = binom_real(t, 2)
    full = (1 << G.n) - 1
    for v0 in range(G.n):
        if abs(neighborhood_edge_count(G, v0) - need) > TOL * max(1.0, abs(need)):
            continue
        outside = full & ~G.adj[v0]
        if any(degs[v] != delta for v in range(G.n) if outside >> v & 1):
            continue
        rest = outside & ~(1 << v0)
        size = rest.bit_count()
        if G.edge_count_within(rest) == size * (size - 1) // 2:
            return True
    return False


# ---------------------------------------------------------------- shadow bound for triple systems


def h_term(n: int, d: float) -> float:
    """O(1) correction in r = 1/2 + (n/2) sqrt((4d-1)/3) + h(n)."""
    if d <= 0.25:
        raise ValueError("h_term needs d > 1/4")
    if n < 2:
        raise ValueError("n must be >= 2")
    a = 4 * d - 1
    lin = (6 - 4 * d) * n - 5
    rad = a * n * n + lin
    if rad < 0:
        raise ValueError("negative radicand")
    # conjugate form avoids cancellation for large n
    return lin / (math.sqrt(rad) + math.sqrt(a) * n) / (2 * math.sqrt(3))


def r_from_density(n: int, d) -> float:
    """Explicit root r = (3 + sqrt(3(n-1)((4d-1)n + 5))) / 6 when C(t,2) = d C(n,2)."""
    return (3 + math.sqrt(3 * (n - 1) * ((4 * d - 1) * n + 5))) / 6


def overlap_shadow_coeff(d: float) -> float:
    return 4 * math.sqrt(d) - 2 * d - 1


def split_shadow_coeff(d: float) -> float:
    return 0.5 + math.sqrt((4 * d - 1) / 12)


def shadow_mindeg_bound(n: int, d) -> BoundReport:
    """Lower bound on |shadow F| for triple systems with min degree >= d C(n, 2).

    The formulas are asymptotic. n >= 12 is accepted; results for n < 100 carry
    ``asymptotic_caveat``.
    """
    dq = Fraction(d)
    if not Fraction(1, 4) <= dq < 1:
        raise ValueError(f"d must lie in [1/4, 1), got {d}")
    if n < MIN_N_SHADOW:
        raise ValueError(f"n must be >= {MIN_N_SHADOW}")
    d = float(d)
    pairs = math.comb(n, 2)
    v_overlap = overlap_shadow_coeff(d) * pairs
    v_split = split_shadow_coeff(d) * pairs

    # d < d*  <=>  (47 - 24 d)^2 > 1425 (47 - 24d is positive on [1/4, 1))
    below = (47 - 24 * dq) ** 2 > 1425
    other = None
    if abs(d - D_STAR) <= 1e-12:
        regime = Regime.BOUNDARY
        value, other = min(v_overlap, v_split), max(v_overlap, v_split)
    elif below:
        regime, value = Regime.CLIQUE_OVERLAP, v_overlap
    else:
        regime, value = Regime.REGULAR_SPLIT, v_split

    p = BoundParams.from_d(n, dq)
    r = r_from_density(n, d)
    r_prime = None
    if n % 2 == 1:
        # C(r', 2) - C(r, 2) = (2n - 7) / 24
        r_prime = binom_inverse(max(0.0, binom_real(r, 2) + (2 * n - 7) / 24), 2)
    exact = False
    if n % 2 == 0:
        if _int_root(p.t_disc) is not None:
            try:
                exact = _int_root(_r_square_arg(p, Fraction(n, 2) - 1)) is not None
            except ValueError:
                exact = False
    return BoundReport(
        value=value,
        regime=regime,
        r=r,
        r_prime=r_prime,
        threshold_t=comparison_threshold(n),
        exact=exact,
        asymptotic_caveat=n < CAVEAT_N,
        other_value=other,
        n=n,
        t=p.t,
    )
