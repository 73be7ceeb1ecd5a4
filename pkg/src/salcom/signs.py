"""Sign vectors over a finite ground set {0, ..., n-1}.

A sign vector is stored as a pair of disjoint bitmasks (``plus``, ``minus``),
so composition, negation, separation and the face order are a handful of
integer operations regardless of ``n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import UsageError

_CHAR_TO_SIGN = {"-": -1, "0": 0, "+": 1}
_SIGN_TO_CHAR = {-1: "-", 0: "0", 1: "+"}


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class SignVector:
    n: int
    plus: int = 0
    minus: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise UsageError("ground-set size must be non-negative")
        if self.plus & self.minus:
            raise UsageError("plus and minus masks overlap")
        full = (1 << self.n) - 1
        if (self.plus | self.minus) & ~full:
            raise UsageError(f"mask bits outside ground set of size {self.n}")

    # construction ---------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> SignVector:
        """Parse a string over ``-``, ``0``, ``+``; position i is element i."""
        plus = minus = 0
        for i, ch in enumerate(text):
            s = _CHAR_TO_SIGN.get(ch)
            if s is None:
                raise UsageError(f"invalid sign character {ch!r} in {text!r}")
            if s > 0:
                plus |= 1 << i
            elif s < 0:
                minus |= 1 << i
        return cls(len(text), plus, minus)

    @classmethod
    def from_signs(cls, signs: Iterable[int]) -> SignVector:
        signs = list(signs)
        plus = minus = 0
        for i, s in enumerate(signs):
            if s > 0:
                plus |= 1 << i
            elif s < 0:
                minus |= 1 << i
        return cls(len(signs), plus, minus)

    @classmethod
    def _trusted(cls, n: int, plus: int, minus: int) -> SignVector:
        # masks already known to be valid; skips __post_init__
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "plus", plus)
        object.__setattr__(obj, "minus", minus)
        return obj

    @classmethod
    def zero(cls, n: int) -> SignVector:
        return cls(n, 0, 0)

    # accessors ------------------------------------------------------------

    def __getitem__(self, e: int) -> int:
        if not 0 <= e < self.n:
            raise IndexError(e)
        bit = 1 << e
        if self.plus & bit:
            return 1
        if self.minus & bit:
            return -1
        return 0

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[int]:
        return (self[e] for e in range(self.n))

    def __str__(self) -> str:
        return "".join(_SIGN_TO_CHAR[s] for s in self)

    def __repr__(self) -> str:
        return f"SignVector({str(self)!r})"

    @property
    def support_mask(self) -> int:
        return self.plus | self.minus

    @property
    def zero_mask(self) -> int:
        return ((1 << self.n) - 1) & ~(self.plus | self.minus)

    def support(self) -> frozenset[int]:
        return frozenset(_bits(self.support_mask))

    def zeros(self) -> frozenset[int]:
        return frozenset(_bits(self.zero_mask))

    def is_total(self) -> bool:
        return self.zero_mask == 0

    def sort_key(self) -> tuple[int, ...]:
        """Canonical order: lexicographic in ground-set order with - < 0 < +."""
        return tuple(self)

    # calculus -------------------------------------------------------------

    def _check(self, other: SignVector) -> None:
        if self.n != other.n:
            raise UsageError(f"length mismatch: {self.n} vs {other.n}")

    def compose(self, other: SignVector) -> SignVector:
        self._check(other)
        free = ~(self.plus | self.minus)
        return SignVector._trusted(self.n, self.plus | (other.plus & free), self.minus | (other.minus & free))

    def __neg__(self) -> SignVector:
        return SignVector._trusted(self.n, self.minus, self.plus)

    def negate(self) -> SignVector:
        return -self

    def separator_mask(self, other: SignVector) -> int:
        self._check(other)
        return (self.plus & other.minus) | (self.minus & other.plus)

    def separator(self, other: SignVector) -> frozenset[int]:
        return frozenset(_bits(self.separator_mask(other)))

    def leq(self, other: SignVector) -> bool:
        # X o Y == Y  <=>  X's nonzero entries already agree with Y
        self._check(other)
        return (self.plus & ~other.plus) == 0 and (self.minus & ~other.minus) == 0

    def restrict(self, coords: Iterable[int]) -> SignVector:
        """Sub-vector on ``coords`` (in the given order)."""
        return SignVector.from_signs(self[e] for e in coords)


def compose(x: SignVector, y: SignVector) -> SignVector:
    return x.compose(y)


def negate(x: SignVector) -> SignVector:
    return -x


def separator(x: SignVector, y: SignVector) -> frozenset[int]:
    return x.separator(y)


def leq(x: SignVector, y: SignVector) -> bool:
    return x.leq(y)


def parse_many(lines: Iterable[str]) -> list[SignVector]:
    """Parse newline-style sign strings, skipping blanks and ``#`` comments."""
    out = []
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append(SignVector.parse(line))
    return out
