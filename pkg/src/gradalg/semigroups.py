"""Index arithmetic for the three discrete semigroups used by the algebras.

``Nat`` is the additive semigroup of non-negative integers, ``MultiIndex``
the free commutative monoid over positive integer generators (finitely
supported exponent maps under componentwise addition), and ``Word`` the free
monoid of finite sequences of positive integers under concatenation.

Every index knows how to ``compose`` with another index of the same kind and
how to enumerate its ``decompositions``: the exact, duplicate-free list of
ordered pairs ``(y, z)`` with ``compose(y, z) == x``.  Decompositions are the
discrete integration domain of the convolution product.
"""

from itertools import product as _cartesian

from .errors import IndexKindError


class Nat:
    """Non-negative integer under addition."""

    __slots__ = ("n",)
    kind = "nat"

    def __init__(self, n: int):
        if n != int(n) or n < 0:
            raise ValueError(f"Nat requires a non-negative integer, got {n!r}")
        self.n = int(n)

    def compose(self, other: "Nat") -> "Nat":
        if type(other) is not Nat:
            raise IndexKindError(f"cannot compose Nat with {type(other).__name__}")
        return Nat(self.n + other.n)

    def decompositions(self) -> list[tuple["Nat", "Nat"]]:
        return [(Nat(k), Nat(self.n - k)) for k in range(self.n + 1)]

    def identity(self) -> "Nat":
        return Nat(0)

    def is_identity(self) -> bool:
        return self.n == 0

    def text(self) -> str:
        return f"n:{self.n}"

    def sort_key(self):
        return (self.n,)

    def __eq__(self, other):
        return type(other) is Nat and other.n == self.n

    def __hash__(self):
        return hash((Nat, self.n))

    def __repr__(self):
        return f"Nat({self.n})"


class MultiIndex:
    """Finitely supported exponent map generator -> positive exponent.

    Generators are positive integers; zero exponents are never stored, so the
    empty map is the identity.  Stored internally as a tuple of pairs sorted
    by generator.
    """

    __slots__ = ("pairs", "_hash")
    kind = "multi_index"

    def __init__(self, exponents):
        items = dict(exponents)
        pairs = []
        for gen, exp in sorted(items.items()):
            if gen != int(gen) or gen < 1:
                raise ValueError(f"generators must be positive integers, got {gen!r}")
            if exp != int(exp) or exp < 0:
                raise ValueError(f"exponents must be non-negative integers, got {exp!r}")
            if exp:
                pairs.append((int(gen), int(exp)))
        self.pairs = tuple(pairs)
        self._hash = hash((MultiIndex, self.pairs))

    @classmethod
    def _from_pairs(cls, pairs) -> "MultiIndex":
        # trusted constructor: pairs already sorted, positive, zero-free
        obj = object.__new__(cls)
        obj.pairs = pairs
        obj._hash = hash((MultiIndex, pairs))
        return obj

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self.pairs)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.pairs)

    def compose(self, other: "MultiIndex") -> "MultiIndex":
        if type(other) is not MultiIndex:
            raise IndexKindError(f"cannot compose MultiIndex with {type(other).__name__}")
        merged = dict(self.pairs)
        for gen, exp in other.pairs:
            merged[gen] = merged.get(gen, 0) + exp
        return MultiIndex._from_pairs(tuple(sorted(merged.items())))

    def decompositions(self) -> list[tuple["MultiIndex", "MultiIndex"]]:
        gens = tuple(g for g, _ in self.pairs)
        exps = tuple(e for _, e in self.pairs)
        out = []
        for combo in _cartesian(*(range(e + 1) for e in exps)):
            left = tuple((g, c) for g, c in zip(gens, combo) if c)
            right = tuple((g, e - c) for g, e, c in zip(gens, exps, combo) if e - c)
            out.append((MultiIndex._from_pairs(left), MultiIndex._from_pairs(right)))
        return out

    def identity(self) -> "MultiIndex":
        return MultiIndex._from_pairs(())

    def is_identity(self) -> bool:
        return not self.pairs

    def text(self) -> str:
        return "m:{" + ",".join(f"{g}^{e}" for g, e in self.pairs) + "}"

    def sort_key(self):
        return self.pairs

    def __eq__(self, other):
        return type(other) is MultiIndex and other.pairs == self.pairs

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"MultiIndex({dict(self.pairs)!r})"


class Word:
    """Finite sequence of positive integer letters under concatenation."""

    __slots__ = ("letters", "_hash")
    kind = "word"

    def __init__(self, letters=()):
        tup = tuple(int(a) for a in letters)
        if any(a < 1 for a in tup):
            raise ValueError(f"letters must be positive integers, got {letters!r}")
        self.letters = tup
        self._hash = hash((Word, tup))

    @classmethod
    def _from_tuple(cls, tup) -> "Word":
        obj = object.__new__(cls)
        obj.letters = tup
        obj._hash = hash((Word, tup))
        return obj

    def __len__(self):
        return len(self.letters)

    def compose(self, other: "Word") -> "Word":
        if type(other) is not Word:
            raise IndexKindError(f"cannot compose Word with {type(other).__name__}")
        return Word._from_tuple(self.letters + other.letters)

    def decompositions(self) -> list[tuple["Word", "Word"]]:
        ls = self.letters
        return [
            (Word._from_tuple(ls[:k]), Word._from_tuple(ls[k:]))
            for k in range(len(ls) + 1)
        ]

    def identity(self) -> "Word":
        return Word._from_tuple(())

    def is_identity(self) -> bool:
        return not self.letters

    def text(self) -> str:
        return "w:[" + ",".join(str(a) for a in self.letters) + "]"

    def sort_key(self):
        return (len(self.letters), self.letters)

    def __eq__(self, other):
        return type(other) is Word and other.letters == self.letters

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Word({list(self.letters)!r})"


SemigroupIndex = Nat | MultiIndex | Word


def compose(x: SemigroupIndex, y: SemigroupIndex) -> SemigroupIndex:
    """Semigroup operation; both indices must be of the same kind."""
    return x.compose(y)


def decompositions(x: SemigroupIndex) -> list[tuple[SemigroupIndex, SemigroupIndex]]:
    """All ordered factorizations of ``x``, deterministically ordered."""
    return x.decompositions()


def identity_like(x: SemigroupIndex) -> SemigroupIndex:
    return x.identity()


def parse_index(text: str) -> SemigroupIndex:
    """Parse the canonical text form: ``n:5``, ``m:{1^2,2^1}`` or ``w:[1,2,1]``."""
    if text.startswith("n:"):
        return Nat(int(text[2:]))
    if text.startswith("m:{") and text.endswith("}"):
        body = text[3:-1]
        if not body:
            return MultiIndex({})
        exponents = {}
        for item in body.split(","):
            gen, _, exp = item.partition("^")
            if not exp:
                raise ValueError(f"malformed multi-index entry {item!r} in {text!r}")
            g = int(gen)
            if g in exponents:
                raise ValueError(f"repeated generator {g} in {text!r}")
            exponents[g] = int(exp)
        return MultiIndex(exponents)
    if text.startswith("w:[") and text.endswith("]"):
        body = text[3:-1]
        return Word(() if not body else tuple(int(a) for a in body.split(",")))
    raise ValueError(f"unrecognized index text {text!r}")


def nats_up_to(n_max: int) -> list[Nat]:
    """[Nat(0), ..., Nat(n_max)]."""
    return [Nat(n) for n in range(n_max + 1)]


def multi_indices_up_to(max_degree: int, max_generator: int) -> list[MultiIndex]:
    """All multi-indices over generators 1..max_generator with total degree
    <= max_degree, ordered by degree then lexicographically by exponent tuple."""
    out = []
    for degree in range(max_degree + 1):
        for combo in _weak_compositions(max_generator, degree):
            pairs = tuple((g + 1, e) for g, e in enumerate(combo) if e)
            out.append(MultiIndex._from_pairs(pairs))
    return out


def _weak_compositions(parts: int, total: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(parts - 1, total - first):
            yield (first,) + rest


def words_up_to(max_length: int, max_letter: int) -> list[Word]:
    """All words of length <= max_length over letters 1..max_letter, ordered
    by length then lexicographically."""
    out = [Word(())]
    for length in range(1, max_length + 1):
        for letters in _cartesian(range(1, max_letter + 1), repeat=length):
            out.append(Word._from_tuple(letters))
    return out
