"""Generalized binomial coefficients C(t, k) for real t, and their inverse."""

from __future__ import annotations

import math
from fractions import Fraction

TOL = 1e-9


def binom_real(t, k: int):
    """Falling-factorial binomial t(t-1)...(t-k+1)/k!.

    Integer and Fraction arguments are evaluated exactly (the result is an
    int or Fraction); floats give a float.
    """
    if k < 1:
        raise ValueError(f"lower index must be >= 1, got {k}")
    if isinstance(t, int):
        if t >= 0:
            return math.comb(t, k)
        prod = 1
        for i in range(k):
            prod *= t - i
        return prod // math.factorial(k)
    prod = t
    for i in range(1, k):
        prod *= t - i
    return prod / math.factorial(k)


def binom_inverse(m, k: int) -> float:
    """Return the unique t >= k-1 with C(t, k) = m."""
    if m < 0:
        raise ValueError(f"binom_inverse needs m >= 0, got {m}")
    if k < 1:
        raise ValueError(f"lower index must be >= 1, got {k}")
    m = float(m)
    if k == 1:
        return m
    if k == 2:
        # larger root of t^2 - t - 2m = 0
        return (1.0 + math.sqrt(1.0 + 8.0 * m)) / 2.0
    if m == 0:
        return float(k - 1)

    lo, hi = float(k - 1), float(m + k)
    t = hi
    for _ in range(200):
        val = binom_real(t, k) - m
        if val > 0:
            hi = t
        else:
            lo = t
        # derivative of the falling factorial product / k!
        deriv = sum(binom_real(t, k) / (t - i) for i in range(k) if t != i)
        nt = t - val / deriv if deriv > 0 else (lo + hi) / 2
        if not lo < nt < hi:
            nt = (lo + hi) / 2
        if abs(nt - t) <= 1e-15 * max(1.0, abs(t)):
            t = nt
            break
        t = nt
    return _snap(t, m, k)


def _snap(t: float, m: float, k: int) -> float:
    # integer roots come back exact so that ceil() downstream is safe
    s = round(t)
    if abs(t - s) <= TOL and float(math.comb(s, k)) == m:
        return float(s)
    return t


def ceil_tol(x, tol: float = TOL) -> int:
    """Ceiling that ignores float noise just above an integer."""
    if isinstance(x, (int, Fraction)):
        return math.ceil(x)
    return math.ceil(x - tol * max(1.0, abs(x)))


def min_int_with_binom_at_least(T, k: int = 2) -> int:
    """Smallest integer s >= k-1 with C(s, k) >= T (exact for int/Fraction T)."""
    s = k - 1
    if T <= 0:
        return s
    s = max(s, math.floor(binom_inverse(float(T), k)) - 1)
    while math.comb(s, k) < T:
        s += 1
    while s > k - 1 and math.comb(s - 1, k) >= T:
        s -= 1
    return s
