"""Conditional oriented matroids as finite sets of sign vectors."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

import numpy as np

from . import _kernels
from .errors import UsageError
from .poset import FinitePoset
from .signs import SignVector, parse_many


class COM:
    """A nonempty set of equal-length sign vectors, kept in canonical order.

    Construction does not check the axioms; use :func:`check_com`.
    """

    def __init__(self, covectors: Iterable[SignVector], n: Optional[int] = None):
        vecs = set(covectors)
        if not vecs:
            raise UsageError("a COM needs at least one covector")
        lengths = {x.n for x in vecs}
        if len(lengths) != 1:
            raise UsageError(f"covectors have ragged lengths {sorted(lengths)}")
        (m,) = lengths
        if n is not None and n != m:
            raise UsageError(f"covectors have length {m}, expected {n}")
        self.n = m
        self.covectors: tuple[SignVector, ...] = tuple(sorted(vecs, key=SignVector.sort_key))
        self._set = frozenset(vecs)
        self._leq: Optional[np.ndarray] = None

    @classmethod
    def from_strings(cls, lines: Iterable[str]) -> COM:
        return cls(parse_many(lines))

    def __len__(self) -> int:
        return len(self.covectors)

    def __iter__(self):
        return iter(self.covectors)

    def __contains__(self, x: SignVector) -> bool:
        return x in self._set

    def __eq__(self, other) -> bool:
        return isinstance(other, COM) and self.n == other.n and self._set == other._set

    def __hash__(self) -> int:
        return hash((self.n, self._set))

    def __repr__(self) -> str:
        return f"COM(n={self.n}, {len(self)} covectors)"

    def index(self, x: SignVector) -> int:
        # canonical order is sorted, so a dict is cheaper than bisect on tuple keys
        if not hasattr(self, "_pos"):
            self._pos = {v: i for i, v in enumerate(self.covectors)}
        return self._pos[x]

    def masks(self) -> tuple[list[int], list[int]]:
        return [x.plus for x in self.covectors], [x.minus for x in self.covectors]

    def leq_matrix(self) -> np.ndarray:
        if self._leq is None:
            plus, minus = self.masks()
            self._leq = _kernels.leq_matrix(plus, minus, self.n)
            self._leq.setflags(write=False)
        return self._leq

    def to_text(self) -> str:
        return "".join(f"{x}\n" for x in self.covectors)


@dataclass(frozen=True)
class AxiomReport:
    fs_ok: bool
    se_ok: bool
    fs_witness: Optional[tuple[SignVector, SignVector]] = None
    se_witness: Optional[tuple[SignVector, SignVector, int]] = None

    @property
    def ok(self) -> bool:
        return self.fs_ok and self.se_ok

    def describe(self) -> str:
        if self.ok:
            return "FS ok, SE ok"
        parts = []
        if self.fs_witness is not None:
            x, y = self.fs_witness
            parts.append(f"FS fails: X={x} Y={y}, X o (-Y)={x.compose(-y)} missing")
        if self.se_witness is not None:
            x, y, e = self.se_witness
            parts.append(f"SE fails: X={x} Y={y} e={e}")
        return "; ".join(parts)


def check_com(vectors: Iterable[SignVector] | COM, *, force_python: bool = False) -> AxiomReport:
    """Check face symmetry and strong elimination by exhaustive search.

    The FS witness is the first (X, Y) in canonical order. Among SE failures
    the pair with the largest separating set is reported (ties broken by
    canonical order of X then Y) with the smallest failing coordinate e.
    """
    com = vectors if isinstance(vectors, COM) else COM(vectors)
    plus, minus = com.masks()
    fs = _kernels.fs_violation(plus, minus, com.n, force_python=force_python)
    se = _kernels.se_violation(plus, minus, com.n, force_python=force_python)
    cv = com.covectors
    return AxiomReport(
        fs_ok=fs is None,
        se_ok=se is None,
        fs_witness=None if fs is None else (cv[fs[0]], cv[fs[1]]),
        se_witness=None if se is None else (cv[se[0]], cv[se[1]], se[2]),
    )


def require_com(com: COM) -> None:
    report = check_com(com)
    if not report.ok:
        raise UsageError(f"not a conditional oriented matroid: {report.describe()}")


def is_oriented_matroid(com: COM) -> bool:
    return SignVector.zero(com.n) in com


def tope_indices(com: COM) -> list[int]:
    leq = com.leq_matrix()
    return [int(i) for i in np.flatnonzero(leq.sum(axis=1) == 1)]


def topes(com: COM) -> list[SignVector]:
    """Covectors that are maximal in the face order, in canonical order."""
    return [com.covectors[i] for i in tope_indices(com)]


def face_poset(com: COM) -> FinitePoset:
    return FinitePoset(com.covectors, com.leq_matrix().copy(), validate=False)


class Semisimplification(NamedTuple):
    com: COM
    # coord_map[e] is the new index of original coordinate e, or None if dropped as constant
    coord_map: tuple[Optional[int], ...]
    kept: tuple[int, ...]

    def restrict(self, x: SignVector) -> SignVector:
        return x.restrict(self.kept)


def semisimplify(com: COM) -> Semisimplification:
    """Drop constant coordinates and merge identical ones, keeping the least index.

    Two coordinates are merged only when their coordinate functions are equal;
    a coordinate and its negation are kept apart.
    """
    columns: dict[tuple[int, ...], int] = {}
    coord_map: list[Optional[int]] = []
    kept: list[int] = []
    for e in range(com.n):
        col = tuple(x[e] for x in com.covectors)
        if len(set(col)) == 1:
            coord_map.append(None)
            continue
        if col not in columns:
            columns[col] = len(kept)
            kept.append(e)
        coord_map.append(columns[col])
    new = COM((x.restrict(kept) for x in com.covectors), n=len(kept))
    if len(new) != len(com):
        raise AssertionError("semisimplification must be injective on covectors")
    return Semisimplification(new, tuple(coord_map), tuple(kept))
