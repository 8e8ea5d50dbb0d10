"""Finitely supported elements of a graded convolution algebra.

A ``GradedElement`` is a sparse complex coefficient map on the semigroup of
its weight family.  It lives in every level simultaneously; only the norms
depend on the level.  Arithmetic is exact over the finite supports (up to
floating point): zero coefficients are pruned exactly, never by an epsilon
threshold, so algebraic identities hold on the nose.
"""

import cmath
import math
import random

from .errors import AlgebraMismatchError, IndexKindError
from .semigroups import (
    SemigroupIndex,
    multi_indices_up_to,
    nats_up_to,
    parse_index,
    words_up_to,
)
from .weights import WeightFamily


class GradedElement:
    """Sparse map index -> complex coefficient, tied to a weight family."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: WeightFamily, coeffs):
        id_type = type(algebra.identity)
        clean = {}
        for idx, c in dict(coeffs).items():
            if type(idx) is not id_type:
                raise IndexKindError(
                    f"{algebra.kind} expects {id_type.__name__} indices, got {type(idx).__name__}"
                )
            c = complex(c)
            if c != 0:
                clean[idx] = c
        self.algebra = algebra
        self.coeffs = clean

    @property
    def support(self) -> list[SemigroupIndex]:
        return sorted(self.coeffs, key=lambda idx: idx.sort_key())

    def __getitem__(self, idx: SemigroupIndex) -> complex:
        return self.coeffs.get(idx, 0j)

    def __eq__(self, other):
        return (
            isinstance(other, GradedElement)
            and other.algebra.kind == self.algebra.kind
            and other.coeffs == self.coeffs
        )

    def __add__(self, other):
        return linear_combine(1.0, self, 1.0, other)

    def __sub__(self, other):
        return linear_combine(1.0, self, -1.0, other)

    def __neg__(self):
        return scale(-1.0, self)

    def __mul__(self, other):
        if isinstance(other, GradedElement):
            return convolve(self, other)
        return scale(other, self)

    def __rmul__(self, other):
        return scale(other, self)

    def __repr__(self):
        terms = ", ".join(f"{idx.text()}: {c}" for idx, c in sorted(
            self.coeffs.items(), key=lambda kv: kv[0].sort_key()))
        return f"GradedElement[{self.algebra.kind}]({{{terms}}})"

    def to_json_list(self) -> list[dict]:
        return [
            {"index": idx.text(), "re": c.real, "im": c.imag}
            for idx, c in sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())
        ]

    @classmethod
    def from_json_list(cls, algebra: WeightFamily, data) -> "GradedElement":
        coeffs = {}
        for item in data:
            idx = parse_index(item["index"])
            if idx in coeffs:
                raise ValueError(f"repeated index {item['index']!r}")
            coeffs[idx] = complex(float(item["re"]), float(item.get("im", 0.0)))
        return cls(algebra, coeffs)


def zero(algebra: WeightFamily) -> GradedElement:
    return GradedElement(algebra, {})


def delta(algebra: WeightFamily, idx: SemigroupIndex, coeff: complex = 1.0) -> GradedElement:
    """Single-point element coeff * delta_idx."""
    return GradedElement(algebra, {idx: coeff})


def unit(algebra: WeightFamily) -> GradedElement:
    """The multiplicative unit delta_identity."""
    return delta(algebra, algebra.identity, 1.0)


def _same_algebra(f: GradedElement, g: GradedElement) -> None:
    if f.algebra.kind != g.algebra.kind or type(f.algebra.identity) is not type(g.algebra.identity):
        raise AlgebraMismatchError(
            f"cannot combine elements of {f.algebra.kind} and {g.algebra.kind}"
        )


def norm(f: GradedElement, p: int) -> float:
    """Level-p norm sqrt(sum_x |f(x)|^2 w_p(x)), exact over the support.

    Accumulated with compensated summation so near-equality cases in the
    convolution inequality are decided honestly.
    """
    lw = f.algebra.log_weight
    return math.sqrt(
        math.fsum(
            (c.real * c.real + c.imag * c.imag) * math.exp(lw(p, x))
            for x, c in f.coeffs.items()
        )
    )


def convolve(f: GradedElement, g: GradedElement) -> GradedElement:
    """Convolution product: (f*g)(x) = sum over compose(y,z) = x of f(y) g(z).

    Computed input-side, iterating support pairs and accumulating at the
    composed index.  Finite support in, finite support out.
    """
    _same_algebra(f, g)
    out: dict = {}
    for y, a in f.coeffs.items():
        for z, b in g.coeffs.items():
            x = y.compose(z)
            prev = out.get(x)
            out[x] = a * b if prev is None else prev + a * b
    return GradedElement(f.algebra, out)


def oracle_convolve(f: GradedElement, g: GradedElement) -> GradedElement:
    """Same contract as ``convolve``, computed the other way around.

    Enumerates candidate output indices, then sums over each candidate's full
    factorization list restricted to the supports.  Kept deliberately
    independent of ``convolve`` as a cross-check.
    """
    _same_algebra(f, g)
    candidates = {y.compose(z) for y in f.coeffs for z in g.coeffs}
    out = {}
    fc, gc = f.coeffs, g.coeffs
    for x in candidates:
        acc = 0j
        for y, z in x.decompositions():
            a = fc.get(y)
            if a is None:
                continue
            b = gc.get(z)
            if b is None:
                continue
            acc += a * b
        out[x] = acc
    return GradedElement(f.algebra, out)


def linear_combine(a: complex, f: GradedElement, b: complex, g: GradedElement) -> GradedElement:
    """a*f + b*g with exact zero pruning."""
    _same_algebra(f, g)
    out = {}
    for idx, c in f.coeffs.items():
        out[idx] = a * c
    for idx, c in g.coeffs.items():
        prev = out.get(idx)
        out[idx] = b * c if prev is None else prev + b * c
    return GradedElement(f.algebra, out)


def scale(a: complex, f: GradedElement) -> GradedElement:
    return GradedElement(f.algebra, {idx: a * c for idx, c in f.coeffs.items()})


def index_pool(fam: WeightFamily, *, nat_max: int = 60, max_degree: int = 4,
               max_generator: int = 6, max_length: int = 4, max_letter: int = 4):
    """Bounded deterministic index enumeration used for random sampling."""
    id_kind = fam.identity.kind
    if id_kind == "nat":
        return nats_up_to(nat_max)
    if id_kind == "multi_index":
        return multi_indices_up_to(max_degree, max_generator)
    if id_kind == "word":
        return words_up_to(max_length, max_letter)
    raise IndexKindError(f"no default index pool for {id_kind}")


def random_element(fam: WeightFamily, rng: random.Random, support_size: int,
                   pool=None) -> GradedElement:
    """Random element: support sampled from a bounded enumeration, coefficients
    uniform on the complex unit disk."""
    if pool is None:
        pool = index_pool(fam)
    k = min(support_size, len(pool))
    coeffs = {}
    for idx in rng.sample(pool, k):
        radius = math.sqrt(rng.random())
        phase = 2.0 * math.pi * rng.random()
        coeffs[idx] = radius * cmath.exp(1j * phase)
    return GradedElement(fam, coeffs)
