"""Functional calculus on graded convolution algebras.

Power series sum(c_n a^n) converge whenever some admissible level pair (p, q)
with p > q + gap puts the argument strictly inside the radius:
A(p,q) ||a||_q < R.  The chain

    ||a^n||_p <= (A(p,q) ||a||_q)^(n-1) ||a||_p <= (A(p,q) ||a||_q)^n

(the last step uses ||a||_p <= ||a||_q and A >= 1) turns tail sums of the
scalar series into rigorous norm bounds on the omitted terms, which is what
every certificate here records.  Inversion is the geometric series: with
t = A(p,q) ||a||_q < 1,

    ||(1-a)^{-1}||_p <= 1/(1-t),   ||1 - (1-a)^{-1}||_p <= t/(1-t),

and the truncation after N terms misses at most t^(N+1)/(1-t) in level-p
norm.  The spectrum of any element is enclosed in the disk of radius
inf A(p,q) ||a||_q over admissible pairs; a finite scan yields a valid upper
bound for the infimum.
"""

import math
from dataclasses import dataclass
from typing import Callable

from .elements import GradedElement, convolve, linear_combine, norm, scale, unit
from .errors import (
    InversionInconclusiveError,
    LevelGapError,
    NotInvertibleError,
    SeriesRadiusError,
    SupportCapError,
    TailCertificationError,
)
from .weights import CouplingValue, coupling

DEFAULT_SCAN = 24


@dataclass(frozen=True)
class GeometricEnvelope:
    """Coefficient magnitude bound |c_n| <= scale * rho^(-n)."""

    scale: float
    rho: float

    def __post_init__(self):
        if self.scale <= 0 or self.rho <= 0:
            raise ValueError("envelope requires positive scale and rho")


@dataclass(frozen=True)
class PowerSeriesSpec:
    """A power series sum c_n z^n given by its coefficient function.

    ``radius`` is the (open-disk) convergence radius, ``math.inf`` allowed.
    ``degree`` marks a finite series: coefficients vanish beyond it, so tails
    are finite sums.  Infinite series need an ``envelope`` before any tail can
    be certified.
    """

    coefficient: Callable[[int], complex]
    radius: float
    envelope: GeometricEnvelope | None = None
    degree: int | None = None


def geometric_series() -> PowerSeriesSpec:
    """sum z^n, radius 1."""
    return PowerSeriesSpec(lambda n: 1.0, 1.0, envelope=GeometricEnvelope(1.0, 1.0))


def exponential_series(rho: float = 4.0) -> PowerSeriesSpec:
    """exp(z), entire.  1/n! <= e^rho * rho^(-n) for every rho > 0, so the
    envelope certifies tails for arguments with A(p,q)||a||_q < rho."""
    return PowerSeriesSpec(
        lambda n: 1.0 / math.factorial(n),
        math.inf,
        envelope=GeometricEnvelope(math.exp(rho), rho),
    )


def polynomial_series(coeffs) -> PowerSeriesSpec:
    """Finite series from an explicit coefficient list."""
    cs = [complex(c) for c in coeffs]

    def coefficient(n):
        return cs[n] if n < len(cs) else 0.0

    return PowerSeriesSpec(coefficient, math.inf, degree=max(len(cs) - 1, 0))


@dataclass(frozen=True)
class Certificate:
    """Levels, coupling constant, truncation order and a rigorous level-p
    norm bound on the omitted terms."""

    p: int
    q: int
    coupling: CouplingValue
    truncation_order: int
    tail_bound: float

    def contraction(self, a_norm_q: float) -> float:
        return self.coupling.upper() * a_norm_q

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "coupling": self.coupling.as_dict(),
            "truncation_order": self.truncation_order,
            "tail_bound": self.tail_bound,
        }


@dataclass(frozen=True)
class InversionCertificate(Certificate):
    """Certificate for an inverse, carrying the geometric-series norm bounds.

    ``inverse_norm_bound`` bounds the level-p norm of the exact inverse;
    ``distance_from_unit_bound`` bounds ||1 - (1-u)^{-1}||_p for the
    normalized contraction u actually inverted.
    """

    inverse_norm_bound: float
    distance_from_unit_bound: float

    def as_dict(self) -> dict:
        d = super().as_dict()
        d["inverse_norm_bound"] = self.inverse_norm_bound
        d["distance_from_unit_bound"] = self.distance_from_unit_bound
        return d


def find_level(a: GradedElement, radius: float, scan: int = DEFAULT_SCAN):
    """First (p, q) = (q + gap + 1, q), scanning q upward, with
    (A(p,q) + error) * ||a||_q < radius; None if no pair with p <= scan works.

    Small q is tried first because the q-norm is largest there, so a success
    at small q is the most informative certificate.
    """
    d = a.algebra.gap
    if scan < d + 1:
        raise LevelGapError(f"scan must be at least gap+1 = {d + 1}, got {scan}")
    q = 0
    while q + d + 1 <= scan:
        p = q + d + 1
        a_coupling = coupling(a.algebra, p, q)
        if a_coupling.upper() * norm(a, q) < radius:
            return p, q
        q += 1
    return None


def _power_sum(series: PowerSeriesSpec, a: GradedElement, n_max: int,
               support_cap: int | None) -> GradedElement:
    total = scale(0.0, unit(a.algebra))
    power = unit(a.algebra)
    for n in range(n_max + 1):
        c = complex(series.coefficient(n))
        if c != 0:
            total = linear_combine(1.0, total, c, power)
        if n < n_max:
            power = convolve(power, a)
            if support_cap is not None and len(power.coeffs) > support_cap:
                raise SupportCapError(
                    f"support of a^{n + 1} has {len(power.coeffs)} terms, cap is {support_cap}"
                )
    return total


def _tail_bound(series: PowerSeriesSpec, t: float, n_trunc: int) -> float:
    """Rigorous bound on sum_{n>N} |c_n| t^n for contraction size t >= 0."""
    if t == 0.0:
        return 0.0
    if series.degree is not None:
        if n_trunc >= series.degree:
            return 0.0
        return math.fsum(
            abs(complex(series.coefficient(n))) * t ** n
            for n in range(n_trunc + 1, series.degree + 1)
        )
    env = series.envelope
    if env is None:
        raise TailCertificationError(
            "infinite series without a coefficient envelope cannot certify its tail"
        )
    ratio = t / env.rho
    if ratio >= 1.0:
        raise TailCertificationError(
            f"envelope decay rho={env.rho} does not dominate contraction t={t:.6g}"
        )
    return env.scale * ratio ** (n_trunc + 1) / (1.0 - ratio)


def apply_series(series: PowerSeriesSpec, a: GradedElement, trunc: int,
                 scan: int = DEFAULT_SCAN, support_cap: int | None = None
                 ) -> tuple[GradedElement, Certificate]:
    """Evaluate sum_{n<=trunc} c_n a^n with a certified tail bound.

    The partial sum is exact finite-support arithmetic; the certificate's
    ``tail_bound`` dominates the level-p norm of everything omitted.
    """
    level = find_level(a, series.radius, scan)
    if level is None:
        raise SeriesRadiusError(
            f"no level pair up to scan={scan} places the argument inside radius {series.radius}"
        )
    p, q = level
    a_coupling = coupling(a.algebra, p, q)
    t = a_coupling.upper() * norm(a, q)
    result = _power_sum(series, a, trunc, support_cap)
    tail = _tail_bound(series, t, trunc)
    return result, Certificate(p, q, a_coupling, trunc, tail)


def neumann_invert(a: GradedElement, trunc: int, scan: int = DEFAULT_SCAN,
                   support_cap: int | None = None
                   ) -> tuple[GradedElement, InversionCertificate]:
    """Approximate (1 - a)^{-1} by the geometric sum over a^n, n <= trunc.

    Requires a certified contraction t = A(p,q) ||a||_q < 1 at some scanned
    level pair; failure to find one is not a proof of non-invertibility.
    """
    level = find_level(a, 1.0, scan)
    if level is None:
        raise InversionInconclusiveError(
            f"no level pair up to scan={scan} certifies A(p,q)*||a||_q < 1; "
            "this does not prove 1-a is non-invertible"
        )
    p, q = level
    a_coupling = coupling(a.algebra, p, q)
    t = a_coupling.upper() * norm(a, q)
    series = geometric_series()
    result = _power_sum(series, a, trunc, support_cap)
    tail = _tail_bound(series, t, trunc)
    return result, InversionCertificate(
        p, q, a_coupling, trunc, tail,
        inverse_norm_bound=1.0 / (1.0 - t),
        distance_from_unit_bound=t / (1.0 - t),
    )


def invert(f: GradedElement, trunc: int, scan: int = DEFAULT_SCAN,
           support_cap: int | None = None
           ) -> tuple[GradedElement, InversionCertificate]:
    """Approximate f^{-1} by normalizing to a contraction.

    Factor f = c (1 - u) with c = f(identity) and u = 1 - f/c, then invert
    1 - u by the geometric sum and rescale.  For the germs algebra a vanishing
    identity coefficient certifies non-invertibility (a germ is invertible
    exactly when its value at the origin is nonzero); for other families the
    same condition only leaves inversion inconclusive here.
    """
    c = f[f.algebra.identity]
    if c == 0:
        if f.algebra.kind == "germs":
            raise NotInvertibleError(
                "germ with zero identity coefficient is not invertible "
                "(invertible iff the coefficient at the origin is nonzero)"
            )
        raise InversionInconclusiveError(
            f"identity coefficient vanishes; normalization-based inversion is "
            f"unavailable and non-invertibility is not certified for {f.algebra.kind}"
        )
    u = linear_combine(1.0, unit(f.algebra), -1.0 / c, f)
    inv_u, cert = neumann_invert(u, trunc, scan, support_cap)
    result = scale(1.0 / c, inv_u)
    rescale = abs(1.0 / c)
    return result, InversionCertificate(
        cert.p, cert.q, cert.coupling, cert.truncation_order,
        cert.tail_bound * rescale,
        inverse_norm_bound=cert.inverse_norm_bound * rescale,
        distance_from_unit_bound=cert.distance_from_unit_bound,
    )


def spectrum_radius_bound(a: GradedElement, scan: int = DEFAULT_SCAN) -> float:
    """Upper bound for the spectral enclosure radius inf A(p,q) ||a||_q.

    Minimizes (A(p,q) + error) * ||a||_q over the finite grid q >= 0,
    q + gap + 1 <= p <= scan.  Any grid value encloses the spectrum, so the
    minimum is a valid radius; it is an upper bound for the true infimum and
    non-increasing in ``scan``.
    """
    d = a.algebra.gap
    if scan < d + 1:
        raise LevelGapError(f"scan must be at least gap+1 = {d + 1}, got {scan}")
    best = math.inf
    for q in range(0, scan - d):
        nq = norm(a, q)
        for p in range(q + d + 1, scan + 1):
            bound = coupling(a.algebra, p, q).upper() * nq
            if bound < best:
                best = bound
    return best
