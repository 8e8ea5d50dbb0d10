"""Certified summation helpers: values paired with rigorous truncation bounds.

Tails of convex decreasing terms are bracketed by the two-sided integral
test

    int_{N+1}^inf f(x) dx  <=  sum_{n>N} f(n)  <=  int_{N+1/2}^inf f(x) dx,

the right half using the midpoint inequality for convex integrands.  Values
are reported at the bracket midpoint so the half-width is a rigorous bound on
the truncation error.  A small relative slack covers floating-point roundoff
of the head sums.
"""

import math

import numpy as np

from .errors import DivergenceError

# pairwise summation keeps roundoff near eps*log2(n); this slack is generous
ROUNDOFF_SLACK = 1e-13


def power_tail_bracket(s: float, n_trunc: int) -> tuple[float, float]:
    """Lower/upper bounds for sum_{n > n_trunc} n^{-s}, s > 1."""
    if s <= 1:
        raise DivergenceError(f"sum of n^(-{s}) diverges")
    lo = (n_trunc + 1.0) ** (1.0 - s) / (s - 1.0)
    hi = (n_trunc + 0.5) ** (1.0 - s) / (s - 1.0)
    return lo, hi


def zeta_certified(s: float, abs_err: float = 1e-12, max_terms: int = 1 << 22) -> tuple[float, float]:
    """Riemann zeta at real s > 1 with a certified absolute error bound.

    Returns ``(value, error_bound)`` where ``|value - zeta(s)| <= error_bound``.
    """
    if s <= 1:
        raise DivergenceError(f"zeta({s}) diverges; need s > 1")
    n = 1 << 10
    while True:
        head = float(np.sum(np.arange(1, n + 1, dtype=float) ** (-float(s))))
        lo, hi = power_tail_bracket(s, n)
        value = head + 0.5 * (lo + hi)
        err = 0.5 * (hi - lo) + ROUNDOFF_SLACK * value
        if err <= abs_err or n >= max_terms:
            return value, err
        n <<= 1


def zeta_partial(s: float, n_terms: int) -> tuple[float, float]:
    """Zeta by summation truncated at exactly ``n_terms`` terms."""
    head = float(np.sum(np.arange(1, n_terms + 1, dtype=float) ** (-float(s))))
    lo, hi = power_tail_bracket(s, n_terms)
    value = head + 0.5 * (lo + hi)
    return value, 0.5 * (hi - lo) + ROUNDOFF_SLACK * value


def even_reciprocal_log_tail_bracket(m: float, n_trunc: int) -> tuple[float, float]:
    """Bounds for sum_{n > n_trunc} -log(1 - (2n)^{-m}), m > 1.

    Uses u <= -log(1-u) <= u + u^2 / (2 (1 - u_max)) with u_n = (2n)^{-m}.
    """
    u_max = (2.0 * (n_trunc + 1)) ** (-m)
    if u_max >= 1.0:
        raise DivergenceError(f"log-product tail undefined for m={m}, N={n_trunc}")
    lin_lo, lin_hi = power_tail_bracket(m, n_trunc)
    sq_hi = power_tail_bracket(2.0 * m, n_trunc)[1]
    lo = 2.0 ** (-m) * lin_lo
    hi = 2.0 ** (-m) * lin_hi + 4.0 ** (-m) * sq_hi / (2.0 * (1.0 - u_max))
    return lo, hi


def quotient_certified(num: tuple[float, float], den: tuple[float, float]) -> tuple[float, float]:
    """Propagate certified bounds through a quotient num/den, den > 0."""
    (a, ea), (b, eb) = num, den
    if b - eb <= 0:
        raise DivergenceError("denominator not certified away from zero")
    value = a / b
    err = (ea + abs(value) * eb) / (b - eb)
    return value, err


def sqrt_certified(value: float, err: float) -> tuple[float, float]:
    """Propagate certified bounds through a square root, value - err > 0."""
    if value - err <= 0:
        raise DivergenceError("square root not certified positive")
    root = math.sqrt(value)
    if err == 0.0:
        return root, 0.0
    return root, err / (2.0 * math.sqrt(value - err))
