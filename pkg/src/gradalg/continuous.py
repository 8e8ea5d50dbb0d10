"""Quadrature-verified inequalities on the multiplicative half-line.

The half-line [1, inf) is a semigroup under multiplication of reals.  For a
real level t > 0 the level norm is

    ||f||_t^2 = int_1^inf f(x)^2 dx / x^(t+1)

and the convolution is (f*g)(x) = int_1^x f(y) g(x/y) dy/y.  The cross-level
ratio integral int_1^inf x^{-(t-r)} dx/x equals 1/(t-r), so for t > r the
two-level inequality holds with coupling constant (t-r)^(-1/2):

    ||f*g||_t^2 <= 1/(t-r) * ||f||_r^2 * ||g||_t^2.

Through the one-sided Mellin transform (M f)(s) = int_1^inf x^s f(x) dx/x and
the identity sum a_n n^{-s} = s * (M S_a)(-s) for the summatory function
S_a(y) = sum_{n<=y} a_n, the inequality specializes to bounds on Dirichlet
series, e.g. with a_n = 1 (so S_a = floor and the series is zeta):

    int_1^inf (int_1^x sqrt(floor(y) floor(x/y)) dy/y)^2 dx/x^(t+1)
        <= zeta(t) zeta(r) / (t (t-r) r),   1 < r < t,

and the analogue for Euler's totient, whose Dirichlet series is
zeta(s-1)/zeta(s).

Everything with jumps only at integers (or at finitely many user breakpoints)
is integrated exactly segment by segment; adaptive quadrature is used only
where integrands are genuinely smooth, and every reported number carries an
additive error budget made of quadrature estimates plus closed-form bounds on
the truncated tails.

The module also covers one continuous non-unimodular instance: the affine
semigroup S = {(a, b): a >= 1, b >= 0} inside the group with law
(a,b)(c,d) = (ac, ad+b), left Haar measure a^-2 da db and right Haar measure
a^-1 da db.  With level densities a^(-2(p+1)) e^(-bp) da db the cross-level
ratio is a^(-2m) e^(-bm), m = p-q, and its integrals against the two Haar
measures are 1/((2m+1) m) (left) and 1/(2 m^2) (right).  They differ: on a
non-unimodular group one side of the convolution inequality is stricter than
the other.
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate

from . import certified
from .errors import DivergenceError, LevelGapError, TailCertificationError
from .report import VerificationReport, make_report

EXACT_SLACK = 1e-14  # relative roundoff allowance for segment-exact integrals


@dataclass(frozen=True)
class QuadratureSpec:
    """Adaptive quadrature on the log axis with a finite cutoff.

    Integrals run over [1, cutoff] (log-transformed where adaptive quadrature
    is involved); the part beyond the cutoff is bounded in closed form from
    the integrand's growth envelope and charged to the error budget.
    """

    abs_tol: float = 1e-9
    cutoff: float = 1e6

    def __post_init__(self):
        if self.abs_tol <= 0:
            raise ValueError("abs_tol must be positive")
        if self.cutoff <= 1:
            raise ValueError("cutoff must exceed 1")


DEFAULT_QUAD = QuadratureSpec()
NESTED_QUAD = QuadratureSpec(abs_tol=1e-9, cutoff=400.0)


def _power_log_tail(x_cut: float, beta: float, log_power: int) -> float:
    """int_{x_cut}^inf x^(-beta-1) (log x)^m dx for m in {0, 1, 2}, beta > 0."""
    if beta <= 0:
        raise DivergenceError(f"tail integral diverges (decay exponent {beta} <= 0)")
    ell = math.log(x_cut)
    scale = x_cut ** (-beta)
    if log_power == 0:
        return scale / beta
    if log_power == 1:
        return scale * (ell / beta + 1.0 / beta ** 2)
    if log_power == 2:
        return scale * (ell * ell / beta + 2.0 * ell / beta ** 2 + 2.0 / beta ** 3)
    raise ValueError(f"unsupported log power {log_power}")


class StepFunction:
    """Piecewise-constant function on [1, inf) with finitely many jumps below
    any finite cutoff.

    Subclasses provide ``values`` (vectorized evaluation), ``breaks_between``
    (jump locations), a rigorous ``growth`` envelope (k, c) meaning
    |f(y)| <= c * y^k for all y >= 1, and ``tail_value`` when the function is
    exactly constant beyond its last break.  ``monotone_nondecreasing`` marks
    functions whose value at a cutoff is a valid lower envelope beyond it,
    which tightens cutoff tail brackets.
    """

    growth: tuple[float, float]
    support_hi: float
    tail_value: float | None
    monotone_nondecreasing: bool = False

    def values(self, y: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def breaks_between(self, lo: float, hi: float) -> np.ndarray:
        raise NotImplementedError

    def __call__(self, y):
        arr = self.values(np.atleast_1d(np.asarray(y, dtype=float)))
        return float(arr[0]) if np.isscalar(y) or np.asarray(y).ndim == 0 else arr

    def sqrt(self) -> "StepFunction":
        k, c = self.growth
        return _MappedStep(self, np.sqrt, (k / 2.0, math.sqrt(c)))

    def square(self) -> "StepFunction":
        k, c = self.growth
        return _MappedStep(self, np.square, (2.0 * k, c * c))


class _MappedStep(StepFunction):
    """Pointwise transform of a step function; breaks are inherited."""

    def __init__(self, base: StepFunction, fn, growth: tuple[float, float]):
        self._base = base
        self._fn = fn
        self.growth = growth
        self.support_hi = base.support_hi
        self.tail_value = None if base.tail_value is None else float(fn(base.tail_value))
        # sqrt and square preserve monotonicity on non-negative values
        self.monotone_nondecreasing = base.monotone_nondecreasing

    def values(self, y):
        return self._fn(self._base.values(y))

    def breaks_between(self, lo, hi):
        return self._base.breaks_between(lo, hi)


class PiecewiseConstant(StepFunction):
    """Finitely many pieces: value ``values[i]`` on [breaks[i], breaks[i+1])
    and ``tail_value`` from the last break onwards.  ``breaks[0]`` must be 1."""

    def __init__(self, breaks, values, tail_value: float = 0.0):
        br = np.asarray(breaks, dtype=float)
        vals = np.asarray(values, dtype=float)
        if br.size == 0 or br[0] != 1.0 or np.any(np.diff(br) <= 0):
            raise ValueError("breaks must start at 1.0 and increase strictly")
        if vals.size != br.size - 1:
            raise ValueError("need exactly one value per bounded segment")
        self.breaks = br
        self.segment_values = vals
        self.tail_value = float(tail_value)
        self.support_hi = math.inf if tail_value != 0.0 else float(br[-1]) if vals.size else 1.0
        bound = float(max(np.max(np.abs(vals), initial=0.0), abs(tail_value)))
        self.growth = (0.0, bound if bound > 0 else 1.0)

    @classmethod
    def constant(cls, value: float) -> "PiecewiseConstant":
        return cls([1.0], [], tail_value=value)

    @classmethod
    def indicator(cls, lo: float, hi: float) -> "PiecewiseConstant":
        if not 1.0 <= lo < hi:
            raise ValueError(f"need 1 <= lo < hi, got ({lo}, {hi})")
        if lo == 1.0:
            return cls([1.0, hi], [1.0])
        return cls([1.0, lo, hi], [0.0, 1.0])

    @classmethod
    def random(cls, rng, max_pieces: int = 6, max_break: float = 8.0,
               amplitude: float = 1.0) -> "PiecewiseConstant":
        """Compactly supported random step function (for property trials)."""
        n = rng.randint(1, max_pieces)
        cuts = sorted(1.0 + (max_break - 1.0) * rng.random() for _ in range(n + 1))
        breaks = [1.0] + cuts
        values = [0.0] + [amplitude * (2.0 * rng.random() - 1.0) for _ in range(n)]
        return cls(breaks, values)

    def values(self, y):
        y = np.asarray(y, dtype=float)
        idx = np.searchsorted(self.breaks, y, side="right") - 1
        out = np.where(
            idx >= self.segment_values.size,
            self.tail_value,
            self.segment_values[np.minimum(idx, max(self.segment_values.size - 1, 0))]
            if self.segment_values.size
            else 0.0,
        )
        return np.where(idx < 0, 0.0, out)

    def breaks_between(self, lo, hi):
        br = self.breaks
        return br[(br > lo) & (br < hi)]

    def __add__(self, other: "PiecewiseConstant") -> "PiecewiseConstant":
        if not isinstance(other, PiecewiseConstant):
            return NotImplemented
        breaks = np.unique(np.concatenate([self.breaks, other.breaks]))
        mids = np.sqrt(breaks[:-1] * breaks[1:])
        values = self.values(mids) + other.values(mids)
        return PiecewiseConstant(breaks, values, self.tail_value + other.tail_value)

    def __mul__(self, scalar: float) -> "PiecewiseConstant":
        return PiecewiseConstant(self.breaks, self.segment_values * scalar,
                                 self.tail_value * scalar)

    __rmul__ = __mul__


class SummatoryFunction(StepFunction):
    """y -> sum_{n<=y} a_n: piecewise constant with jumps at the integers.

    Partial sums are evaluated exactly (integer or sieve arithmetic), which
    removes the summand as an error source; only cutoff tails contribute to
    budgets, through the declared growth envelope.
    """

    def __init__(self, name: str, partial_fn: Callable[[np.ndarray], np.ndarray],
                 growth: tuple[float, float], nonnegative: bool = True):
        self.name = name
        self._partial_fn = partial_fn
        self.growth = growth
        self.support_hi = math.inf
        self.tail_value = None
        self.monotone_nondecreasing = nonnegative
        self._tail_bracket = None  # optional sharp override (x_cut, s) -> (lo, hi)

    @classmethod
    def floor(cls) -> "SummatoryFunction":
        """a_n = 1: the floor function; its Dirichlet series is zeta."""
        f = cls("floor", lambda n: n.astype(float), (1.0, 1.0))

        def bracket(x_cut: float, s: float) -> tuple[float, float]:
            # y-1 <= floor(y) <= y pins the cutoff tail to within x_cut^s/|s|
            if s + 1 >= 0.0:
                raise DivergenceError(f"floor transform diverges at s={s}")
            hi = x_cut ** (s + 1.0) / (-(s + 1.0))
            return hi - x_cut ** s / (-s), hi

        f._tail_bracket = bracket
        return f

    @classmethod
    def totient(cls) -> "SummatoryFunction":
        """a_n = phi(n) via sieve; sum_{n<=y} phi(n) <= y(y+1)/2 <= y^2."""
        cache = {"limit": 0, "cumulative": None}

        def partial(n: np.ndarray) -> np.ndarray:
            top = int(n.max(initial=0))
            if top > cache["limit"]:
                limit = max(1 << 12, 1 << (top - 1).bit_length())
                phi = np.arange(limit + 1, dtype=np.int64)
                for p in range(2, limit + 1):
                    if phi[p] == p:
                        phi[p::p] -= phi[p::p] // p
                phi[0] = 0
                cache["limit"] = limit
                cache["cumulative"] = np.cumsum(phi)
            return cache["cumulative"][n].astype(float)

        return cls("totient", partial, (2.0, 1.0))

    @classmethod
    def from_coefficients(cls, coefficient: Callable[[int], float],
                          growth: tuple[float, float],
                          nonnegative: bool = False) -> "SummatoryFunction":
        """Custom a_n with a caller-supplied growth bound for the partial sums."""
        cache = {"limit": 0, "cumulative": np.zeros(1)}

        def partial(n: np.ndarray) -> np.ndarray:
            top = int(n.max(initial=0))
            if top > cache["limit"]:
                limit = max(1 << 10, 1 << (top - 1).bit_length())
                coeffs = np.array([0.0] + [float(coefficient(k)) for k in range(1, limit + 1)])
                cache["limit"] = limit
                cache["cumulative"] = np.cumsum(coeffs)
            return cache["cumulative"][n]

        return cls("custom", partial, growth, nonnegative=nonnegative)

    def values(self, y):
        y = np.asarray(y, dtype=float)
        n = np.floor(y).astype(np.int64)
        n = np.maximum(n, 0)
        return self._partial_fn(n)

    def breaks_between(self, lo, hi):
        start = math.floor(lo) + 1
        stop = math.ceil(hi) - 1
        if stop < start:
            return np.empty(0)
        return np.arange(start, stop + 1, dtype=float)

    def dirichlet_certified(self, s: float, abs_err: float = 1e-12) -> tuple[float, float]:
        """Certified value of sum a_n n^{-s} for the built-in coefficient tags."""
        if self.name == "floor":
            return certified.zeta_certified(s, abs_err)
        if self.name == "totient":
            if s <= 2:
                raise DivergenceError(f"totient Dirichlet series needs s > 2, got {s}")
            num = certified.zeta_certified(s - 1.0, abs_err / 4.0)
            den = certified.zeta_certified(s, abs_err / 4.0)
            return certified.quotient_certified(num, den)
        raise TailCertificationError(
            f"no certified Dirichlet value for summatory tag {self.name!r}"
        )


def _eval_scalar(f, y: float) -> float:
    if isinstance(f, StepFunction):
        return float(f.values(np.array([y]))[0])
    return float(f(y))


def mellin_certified(f, s: float, quad: QuadratureSpec = DEFAULT_QUAD,
                     growth: tuple[float, float] | None = None) -> tuple[float, float]:
    """One-sided Mellin transform int_1^inf x^s f(x) dx/x with an error bound.

    Step functions are integrated exactly segment by segment up to the cutoff;
    generic callables go through adaptive quadrature on the log axis (they are
    assumed bounded unless ``growth`` says otherwise).  The cutoff tail is
    exact for step functions that are constant beyond their last break and a
    closed-form bound otherwise.
    """
    x_cut = quad.cutoff
    if isinstance(f, StepFunction):
        hi_end = min(x_cut, f.support_hi)
        value = 0.0
        err = 0.0
        if hi_end > 1.0:
            edges = np.unique(np.concatenate(
                [[1.0, hi_end], f.breaks_between(1.0, hi_end)]))
            mids = np.sqrt(edges[:-1] * edges[1:])
            vals = f.values(mids)
            if s != 0.0:
                segments = (edges[1:] ** s - edges[:-1] ** s) / s
            else:
                segments = np.diff(np.log(edges))
            value = float(np.dot(vals, segments))
            err = EXACT_SLACK * float(np.dot(np.abs(vals), np.abs(segments)))
        if f.support_hi > x_cut:
            if f.tail_value is not None:
                if s >= 0.0 and f.tail_value != 0.0:
                    raise DivergenceError(f"transform diverges at s={s} for constant tail")
                if f.tail_value != 0.0:
                    value += -f.tail_value * x_cut ** s / s
            else:
                k, c = f.growth
                if s + k >= 0.0:
                    raise DivergenceError(
                        f"transform not certifiably convergent: s+k = {s + k} >= 0"
                    )
                err += c * x_cut ** (s + k) / (-(s + k))
        return value, err

    k, c = growth if growth is not None else (0.0, 1.0)
    u_hi = math.log(x_cut)
    val, qerr = integrate.quad(
        lambda u: math.exp(s * u) * float(f(math.exp(u))),
        0.0, u_hi, epsabs=quad.abs_tol, limit=200,
    )
    if s + k >= 0.0:
        raise DivergenceError(f"transform not certifiably convergent: s+k = {s + k} >= 0")
    tail = c * x_cut ** (s + k) / (-(s + k))
    return val, qerr + tail


def mellin(f, s: float, quad: QuadratureSpec = DEFAULT_QUAD,
           growth: tuple[float, float] | None = None) -> float:
    """Value of the one-sided Mellin transform; see ``mellin_certified``."""
    return mellin_certified(f, s, quad, growth)[0]


def p_convolve_certified(f, g, x: float, quad: QuadratureSpec = DEFAULT_QUAD
                         ) -> tuple[float, float]:
    """(f*g)(x) = int_1^x f(y) g(x/y) dy/y with an error estimate.

    For two step functions the integrand is constant between consecutive
    breakpoints of f and images x/b of breakpoints of g, so the integral is a
    finite sum of exactly integrated log-segments.
    """
    if x <= 1.0:
        return 0.0, 0.0
    if isinstance(f, StepFunction) and isinstance(g, StepFunction):
        cuts = [np.array([1.0, x]), f.breaks_between(1.0, x)]
        gb = g.breaks_between(1.0, x)
        if gb.size:
            cuts.append(x / gb)
        ys = np.unique(np.concatenate(cuts))
        ys = ys[(ys >= 1.0) & (ys <= x)]
        mids = np.sqrt(ys[:-1] * ys[1:])
        vals = f.values(mids) * g.values(x / mids)
        dlog = np.diff(np.log(ys))
        value = float(np.dot(vals, dlog))
        return value, EXACT_SLACK * float(np.dot(np.abs(vals), dlog))

    points = []
    if isinstance(f, StepFunction):
        points.extend(np.log(f.breaks_between(1.0, x)))
    if isinstance(g, StepFunction):
        points.extend(math.log(x) - np.log(g.breaks_between(1.0, x)))
    points = sorted(u for u in points if 0.0 < u < math.log(x))
    val, qerr = integrate.quad(
        lambda u: _eval_scalar(f, math.exp(u)) * _eval_scalar(g, x * math.exp(-u)),
        0.0, math.log(x),
        points=points or None, limit=max(len(points) + 50, 100),
        epsabs=quad.abs_tol,
    )
    return val, qerr


def p_convolve(f, g, x: float, quad: QuadratureSpec = DEFAULT_QUAD) -> float:
    """Value of the multiplicative convolution; see ``p_convolve_certified``."""
    return p_convolve_certified(f, g, x, quad)[0]


def _convolution_tail_bound(f: StepFunction, g: StepFunction, x_cut: float,
                            t: float) -> float:
    """Bound int_{x_cut}^inf (f*g)(x)^2 dx/x^(t+1) from the growth envelopes.

    |(f*g)(x)| <= c_f c_g x^max(kf,kg) * (log x if kf == kg else 1/|kf-kg|).
    """
    if f.support_hi * g.support_hi <= x_cut:
        return 0.0
    kf, cf = f.growth
    kg, cg = g.growth
    k_max = max(kf, kg)
    beta = t - 2.0 * k_max
    amp = (cf * cg) ** 2
    if kf == kg:
        return amp * _power_log_tail(x_cut, beta, 2)
    return amp / (kf - kg) ** 2 * _power_log_tail(x_cut, beta, 0)


def _outer_points(f: StepFunction, g: StepFunction, x_cut: float,
                  cap: int = 4000) -> list[float]:
    """Break candidates of x -> (f*g)(x): pairwise products of breakpoints."""
    if isinstance(f, SummatoryFunction) or isinstance(g, SummatoryFunction) \
            or isinstance(f, _MappedStep) or isinstance(g, _MappedStep):
        # integer-jump case: kinks sit on the integers
        return list(np.arange(2.0, min(x_cut, float(cap))))
    bf = np.concatenate([[1.0], f.breaks_between(1.0, x_cut)])
    bg = np.concatenate([[1.0], g.breaks_between(1.0, x_cut)])
    prods = np.unique(np.outer(bf, bg).ravel())
    prods = prods[(prods > 1.0) & (prods < x_cut)]
    return list(prods[:cap])


def _convolution_square_integral(f: StepFunction, g: StepFunction, t: float,
                                 quad: QuadratureSpec) -> tuple[float, float]:
    """int_1^inf (f*g)(x)^2 dx/x^(t+1), cutoff-truncated with certified tail."""
    x_cut = min(quad.cutoff, f.support_hi * g.support_hi)
    points = _outer_points(f, g, x_cut)

    def integrand(x):
        return p_convolve_certified(f, g, x, quad)[0] ** 2 * x ** (-t - 1.0)

    value, qerr = integrate.quad(
        integrand, 1.0, x_cut,
        points=points or None, limit=max(len(points) + 200, 300),
        epsabs=quad.abs_tol,
    )
    tail = _convolution_tail_bound(f, g, x_cut, t)
    return value, qerr + tail + EXACT_SLACK * abs(value)


def verify_p_inequality(f: StepFunction, g: StepFunction, p: float, q: float,
                        quad: QuadratureSpec = DEFAULT_QUAD) -> VerificationReport:
    """Check ||f*g||_p^2 <= 1/(p-q) ||f||_q^2 ||g||_p^2 for real levels p > q > 0.

    All three integrals are cutoff-truncated with certified tails; the report
    passes when lhs <= rhs + budget, where the budget adds every error source.
    """
    if not (p > q > 0):
        raise LevelGapError(f"need real levels p > q > 0, got (p={p}, q={q})")
    if not (isinstance(f, StepFunction) and isinstance(g, StepFunction)):
        raise TailCertificationError("norm verification needs step functions "
                                     "with growth envelopes")
    nf2, ef = mellin_certified(f.square(), -q, quad)
    ng2, eg = mellin_certified(g.square(), -p, quad)
    rhs = nf2 * ng2 / (p - q)
    rhs_err = (ef * abs(ng2) + eg * abs(nf2) + ef * eg) / (p - q)
    lhs, lhs_err = _convolution_square_integral(f, g, p, quad)
    budget = lhs_err + rhs_err
    return make_report(
        "p_convolution_inequality", lhs, rhs, budget,
        params={
            "p": p,
            "q": q,
            "coupling": (p - q) ** -0.5,
            "norm_sq_f": nf2,
            "norm_sq_g": ng2,
            "cutoff": quad.cutoff,
        },
    )


def _dirichlet_report(name: str, summatory: SummatoryFunction, t: float, r: float,
                      quad: QuadratureSpec, r_grid, min_level: float) -> VerificationReport:
    if not (t > r > min_level):
        raise LevelGapError(f"need {min_level} < r < t, got (t={t}, r={r})")
    h = summatory.sqrt()
    lhs, lhs_err = _convolution_square_integral(h, h, t, quad)

    def rhs_certified(rr: float) -> tuple[float, float]:
        dr, er = summatory.dirichlet_certified(rr)
        dt, et = summatory.dirichlet_certified(t)
        denom = t * (t - rr) * rr
        return dr * dt / denom, (er * dt + et * dr + er * et) / denom

    rhs, rhs_err = rhs_certified(r)
    params = {"t": t, "r": r, "cutoff": quad.cutoff, "summatory": summatory.name}
    if r_grid:
        grid = {}
        for rr in r_grid:
            grid[f"{rr:g}"] = rhs_certified(rr)[0]
        params["rhs_grid"] = grid
        params["rhs_grid_min"] = min(grid.values())
    return make_report(name, lhs, rhs, lhs_err + rhs_err, params)


def verify_zeta_inequality(t: float, r: float, quad: QuadratureSpec = NESTED_QUAD,
                           r_grid=None) -> VerificationReport:
    """Check the floor-summatory convolution bound against zeta(t) zeta(r) / (t (t-r) r).

    Requires 1 < r < t.  With ``r_grid`` the report also records the grid
    minimum of the right-hand side over the supplied r values.
    """
    return _dirichlet_report("zeta_dirichlet_inequality", SummatoryFunction.floor(),
                             t, r, quad, r_grid, min_level=1.0)


def verify_totient_inequality(t: float, r: float, quad: QuadratureSpec = NESTED_QUAD,
                              r_grid=None) -> VerificationReport:
    """Totient analogue of ``verify_zeta_inequality``; its Dirichlet series is
    zeta(s-1)/zeta(s), so both levels must exceed 2."""
    return _dirichlet_report("totient_dirichlet_inequality", SummatoryFunction.totient(),
                             t, r, quad, r_grid, min_level=2.0)


def axb_constants(m: int) -> tuple[float, float]:
    """Closed forms of the affine-semigroup cross-level integrals at gap m.

    Returns the integrals of the level-ratio a^(-2m) e^(-bm) against the left
    Haar measure a^-2 da db and the right Haar measure a^-1 da db:
    (1/((2m+1) m), 1/(2 m^2)).
    """
    if m != int(m) or m < 1:
        raise LevelGapError(f"gap must be a positive integer, got {m!r}")
    m = int(m)
    return 1.0 / ((2 * m + 1) * m), 1.0 / (2 * m * m)


def axb_quadrature(m: int, abs_tol: float = 1e-9) -> tuple[float, float]:
    """The same two integrals by adaptive 2-d quadrature over
    [1, inf) x [0, inf); the independent cross-check for ``axb_constants``."""
    if m != int(m) or m < 1:
        raise LevelGapError(f"gap must be a positive integer, got {m!r}")

    def left_integrand(b, a):
        return a ** (-2 * m - 2) * math.exp(-b * m)

    def right_integrand(b, a):
        return a ** (-2 * m - 1) * math.exp(-b * m)

    left, _ = integrate.dblquad(left_integrand, 1.0, np.inf, 0.0, np.inf,
                                epsabs=abs_tol)
    right, _ = integrate.dblquad(right_integrand, 1.0, np.inf, 0.0, np.inf,
                                 epsabs=abs_tol)
    return left, right


def axb_reports(m: int, tol: float = 1e-6) -> list[VerificationReport]:
    """Quadrature-vs-closed-form agreement reports for both Haar integrals."""
    closed = axb_constants(m)
    numeric = axb_quadrature(m, abs_tol=tol * 1e-3)
    out = []
    for side, c, n in zip(("left", "right"), closed, numeric):
        out.append(make_report(
            f"axb_{side}_haar_integral",
            abs(n - c), 0.0, tol,
            params={"m": int(m), "closed_form": c, "quadrature": n},
        ))
    return out
