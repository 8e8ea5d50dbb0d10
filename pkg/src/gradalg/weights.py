"""Weight families on discrete semigroups and their coupling constants.

A weight family assigns to every level p >= 0 a positive weight w_p on the
indices, with w_p(identity) = 1 and w_{p+1} <= w_p pointwise.  When the
level-p weight is submultiplicative, w_p(xy) <= w_p(x) w_p(y), and the ratio
sum

    R(p, q) = sum_x w_p(x) / w_q(x)

converges for p > q + gap, the graded convolution product obeys the
two-level inequalities

    ||f*g||_p <= A(p,q) ||f||_q ||g||_p   and   ||g*f||_p <= A(p,q) ||f||_q ||g||_p

with coupling constant A(p,q) = sqrt(R(p, q)).  The same square root is the
Hilbert-Schmidt norm of the embedding of the level-q space into the level-p
space, which makes the full union of levels nuclear.

Weights are evaluated in log space throughout so comparisons stay exact at
extreme levels where w_p itself would underflow.

Built-in families (d is the minimal level gap):

=================  ==========================================  ===
germs              w_p(n) = 4^(-n p) on Nat                    d=0
kondratiev         w_p(alpha) = prod (2n)^(-alpha_n p)         d=1
free_kondratiev    w_p(word) = prod_k (2 letter_k)^(-p)        d=1
sprime             w_p(n) = (n+1)^(-2p) on Nat                 d=0
=================  ==========================================  ===

``sprime`` is a deliberate negative instance: its ratio sums converge but its
weights are not submultiplicative (w_1(2) = 1/9 > 1/16 = w_1(1)^2), so no
coupling constant certifies the convolution inequality for it.  It is exposed
only to ``check_submultiplicative``.
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import certified
from .errors import (
    LevelGapError,
    NotSubmultiplicativeError,
    UnsupportedFamilyError,
)
from .semigroups import MultiIndex, Nat, SemigroupIndex, Word

METHOD_CLOSED_FORM = "ClosedForm"
METHOD_TRUNCATED_SUM = "TruncatedSumWithGeometricTail"
METHOD_TRUNCATED_PRODUCT = "TruncatedProductWithTail"

_LOG4 = math.log(4.0)


@dataclass(frozen=True)
class CouplingValue:
    """A constant together with a rigorous bound on its truncation error.

    ``error_bound`` is an upper bound on ``|value - true constant|``; it is
    zero exactly when the value is a closed form.
    """

    value: float
    error_bound: float
    method: str

    def __post_init__(self):
        if self.value <= 0 or not math.isfinite(self.value):
            raise ValueError(f"coupling value must be finite positive, got {self.value}")
        if self.error_bound < 0 or not math.isfinite(self.error_bound):
            raise ValueError(f"error bound must be finite non-negative, got {self.error_bound}")
        if (self.error_bound == 0.0) != (self.method == METHOD_CLOSED_FORM):
            raise ValueError("error_bound must be zero exactly for closed forms")

    def upper(self) -> float:
        """Rigorous upper estimate value + error_bound."""
        return self.value + self.error_bound

    def as_dict(self) -> dict:
        return {"value": self.value, "error_bound": self.error_bound, "method": self.method}


@dataclass(frozen=True)
class WeightFamily:
    """Level-indexed weights on one semigroup, given by their natural log.

    ``log_weight(p, x)`` returns log w_p(x); ``gap`` is the minimal level
    separation for which the ratio sums converge; ``identity`` fixes the
    semigroup the family lives on.
    """

    kind: str
    gap: int
    log_weight: Callable[[int, SemigroupIndex], float]
    identity: SemigroupIndex

    def weight(self, p: int, x: SemigroupIndex) -> float:
        return math.exp(self.log_weight(p, x))


def germs() -> WeightFamily:
    """Weights 4^(-n p): coefficient model of holomorphic germs at zero, the
    union over p of Hardy spaces of the disks of radius 2^(-p)."""

    def lw(p, x):
        return -_LOG4 * p * x.n

    return WeightFamily("germs", 0, lw, Nat(0))


def kondratiev() -> WeightFamily:
    """Weights prod_n (2n)^(-alpha_n p) on multi-indices; the convolution on
    this family is the Wick product of Gaussian stochastic distributions."""

    def lw(p, alpha):
        return -p * math.fsum(e * math.log(2.0 * g) for g, e in alpha.pairs)

    return WeightFamily("kondratiev", 1, lw, MultiIndex({}))


def free_kondratiev() -> WeightFamily:
    """Word weights prod_k (2 letter_k)^(-p): the non-commutative counterpart
    of ``kondratiev`` on the free monoid."""

    def lw(p, word):
        return -p * math.fsum(math.log(2.0 * a) for a in word.letters)

    return WeightFamily("free_kondratiev", 1, lw, Word(()))


def sprime() -> WeightFamily:
    """Polynomial weights (n+1)^(-2p): the negative instance whose weights are
    not submultiplicative."""

    def lw(p, x):
        return -2.0 * p * math.log(x.n + 1.0)

    return WeightFamily("sprime", 0, lw, Nat(0))


def custom(log_weight: Callable[[int, SemigroupIndex], float], gap: int,
           identity: SemigroupIndex) -> WeightFamily:
    """User-supplied family; only operations that need nothing beyond
    ``log_weight`` support it."""
    return WeightFamily("custom", gap, log_weight, identity)


BUILTIN_FAMILIES = ("germs", "kondratiev", "free_kondratiev", "sprime")


def family_by_name(name: str) -> WeightFamily:
    builders = {
        "germs": germs,
        "kondratiev": kondratiev,
        "free_kondratiev": free_kondratiev,
        "sprime": sprime,
    }
    try:
        return builders[name]()
    except KeyError:
        raise UnsupportedFamilyError(f"unknown family {name!r}; choose from {BUILTIN_FAMILIES}") from None


def require_level_gap(fam: WeightFamily, p: int, q: int) -> None:
    if p != int(p) or q != int(q) or q < 0:
        raise LevelGapError(f"levels must be non-negative integers, got p={p!r}, q={q!r}")
    if p <= q + fam.gap:
        raise LevelGapError(
            f"{fam.kind} requires p > q + {fam.gap}, got (p={p}, q={q})"
        )


def ratio_sum(fam: WeightFamily, p: int, q: int, target_error: float = 1e-11) -> CouplingValue:
    """Sum over the whole semigroup of w_p(x)/w_q(x), certified.

    Requires p > q + gap.  For ``sprime`` the sum itself converges but the
    family fails submultiplicativity, so no coupling constant is implied and
    the call raises ``NotSubmultiplicativeError``.
    """
    require_level_gap(fam, p, q)
    m = int(p) - int(q)
    if fam.kind == "germs":
        return CouplingValue(1.0 / (1.0 - 4.0 ** (-m)), 0.0, METHOD_CLOSED_FORM)
    if fam.kind == "kondratiev":
        return _kondratiev_ratio(m, target_error)
    if fam.kind == "free_kondratiev":
        return _free_kondratiev_ratio(m, target_error)
    if fam.kind == "sprime":
        raise NotSubmultiplicativeError(
            "sprime weights are not submultiplicative (w_1(n:2) = 1/9 > 1/16 = "
            "w_1(n:1)^2), so the ratio sum certifies no convolution inequality; "
            "see check_submultiplicative"
        )
    raise UnsupportedFamilyError(
        f"no certified summation scheme for family kind {fam.kind!r}"
    )


def _kondratiev_ratio_at(m: int, n_terms: int) -> CouplingValue:
    """Ratio sum prod_{n>=1} (1-(2n)^{-m})^{-1} truncated after ``n_terms``
    factors, with a certified bracket for the remaining log-product."""
    k = np.arange(1, n_terms + 1, dtype=float)
    head = float(np.sum(-np.log1p(-(2.0 * k) ** (-float(m)))))
    t_lo, t_hi = certified.even_reciprocal_log_tail_bracket(float(m), n_terms)
    lo = math.exp(head + t_lo)
    hi = math.exp(head + t_hi)
    value = 0.5 * (lo + hi)
    err = 0.5 * (hi - lo) + certified.ROUNDOFF_SLACK * value
    return CouplingValue(value, err, METHOD_TRUNCATED_PRODUCT)


def _kondratiev_ratio(m: int, target_error: float) -> CouplingValue:
    n = 1 << 12
    while True:
        cv = _kondratiev_ratio_at(m, n)
        if cv.error_bound <= target_error or n >= (1 << 21):
            return cv
        n <<= 1


def _free_kondratiev_ratio(m: int, target_error: float) -> CouplingValue:
    """Ratio sum over all words: geometric 1/(1-s) with s = 2^{-m} zeta(m)."""
    z, ze = certified.zeta_certified(m, abs_err=target_error * 2.0 ** m / 4.0)
    s = 2.0 ** (-m) * z
    s_err = 2.0 ** (-m) * ze
    if s + s_err >= 1.0:
        raise NotSubmultiplicativeError(
            f"word ratio sum diverges for gap {m}: letter sum {s:.6f} >= 1"
        )
    lo = 1.0 / (1.0 - (s - s_err))
    hi = 1.0 / (1.0 - (s + s_err))
    value = 0.5 * (lo + hi)
    err = 0.5 * (hi - lo) + certified.ROUNDOFF_SLACK * value
    return CouplingValue(value, err, METHOD_TRUNCATED_SUM)


def coupling(fam: WeightFamily, p: int, q: int, target_error: float = 1e-11) -> CouplingValue:
    """Coupling constant A(p,q) = sqrt(ratio_sum), certified.

    Multiplying by A(p,q) + error_bound gives a rigorous upper bound in the
    two-level convolution inequality.
    """
    rs = ratio_sum(fam, p, q, target_error)
    root, err = certified.sqrt_certified(rs.value, rs.error_bound)
    return CouplingValue(root, err, rs.method)


def hs_norm(fam: WeightFamily, q: int, p: int, target_error: float = 1e-11) -> CouplingValue:
    """Hilbert-Schmidt norm of the embedding of level q into level p.

    Numerically identical to ``coupling(fam, p, q)``: the squared
    Hilbert-Schmidt norm of the embedding is the ratio sum.  Finiteness for
    all admissible level pairs makes the union of levels nuclear.
    """
    return coupling(fam, p, q, target_error)


@dataclass(frozen=True)
class Witness:
    """A pair violating submultiplicativity: w_p(xy) > w_p(x) w_p(y)."""

    x: SemigroupIndex
    y: SemigroupIndex
    log_weight_bound: float     # log w_p(x) + log w_p(y)
    log_weight_composed: float  # log w_p(xy)


def check_submultiplicative(fam: WeightFamily, p: int, scope, rel_tol: float = 1e-9):
    """Search scope x scope for a violation of w_p(xy) <= w_p(x) w_p(y).

    Returns the first ``Witness`` in the iteration order of ``scope`` (the
    check is deterministic for a deterministic scope), or ``None`` when every
    pair passes.  Comparison happens in log space with a small relative
    tolerance so exact multiplicative families pass despite rounding.
    """
    indices = list(scope)
    logs = [fam.log_weight(p, x) for x in indices]
    for x, lx in zip(indices, logs):
        for y, ly in zip(indices, logs):
            bound = lx + ly
            composed = fam.log_weight(p, x.compose(y))
            if composed > bound + rel_tol * (1.0 + abs(bound)):
                return Witness(x, y, bound, composed)
    return None
