"""Finite posets, Hasse diagrams, order complexes and simplicial complexes."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Hashable, Iterable, Mapping, Sequence

import numpy as np

from .errors import UsageError


def _bool_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # float32 matmul goes through BLAS; counts stay exact well past any size we build
    return (a.astype(np.float32) @ b.astype(np.float32)) > 0.5


class FinitePoset:
    """A finite partial order on ``labels`` given by a boolean ``leq`` matrix.

    ``leq[i, j]`` is True iff ``labels[i] <= labels[j]``. The matrix is
    validated on construction unless ``validate=False``.
    """

    def __init__(self, labels: Sequence[Hashable], leq: np.ndarray, *, validate: bool = True):
        self.labels = tuple(labels)
        leq = np.asarray(leq, dtype=bool)
        n = len(self.labels)
        if leq.shape != (n, n):
            raise UsageError(f"relation matrix has shape {leq.shape}, expected {(n, n)}")
        self.leq = leq
        self.leq.setflags(write=False)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != n:
            raise UsageError("poset labels must be distinct")
        if validate:
            self.validate()

    @classmethod
    def from_relation(cls, labels: Sequence[Hashable], rel: Callable[[Hashable, Hashable], bool]) -> FinitePoset:
        labels = tuple(labels)
        leq = np.array([[rel(x, y) for y in labels] for x in labels], dtype=bool).reshape(len(labels), len(labels))
        return cls(labels, leq)

    def validate(self) -> None:
        leq = self.leq
        n = len(self)
        if n == 0:
            return
        if not leq.diagonal().all():
            i = int(np.flatnonzero(~leq.diagonal())[0])
            raise UsageError(f"relation not reflexive at {self.labels[i]!r}")
        both = leq & leq.T & ~np.eye(n, dtype=bool)
        if both.any():
            i, j = map(int, np.argwhere(both)[0])
            raise UsageError(f"relation not antisymmetric: {self.labels[i]!r}, {self.labels[j]!r}")
        extra = _bool_product(leq, leq) & ~leq
        if extra.any():
            i, j = map(int, np.argwhere(extra)[0])
            raise UsageError(f"relation not transitive: {self.labels[i]!r} -> {self.labels[j]!r}")

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"FinitePoset({len(self)} elements)"

    def index(self, label: Hashable) -> int:
        return self._index[label]

    def __contains__(self, label: Hashable) -> bool:
        return label in self._index

    def le(self, x: Hashable, y: Hashable) -> bool:
        return bool(self.leq[self._index[x], self._index[y]])

    def lt(self, x: Hashable, y: Hashable) -> bool:
        return x != y and self.le(x, y)

    def strict(self) -> np.ndarray:
        return self.leq & ~np.eye(len(self), dtype=bool)

    def cover_matrix(self) -> np.ndarray:
        lt = self.strict()
        return lt & ~_bool_product(lt, lt)

    def hasse(self) -> list[tuple[int, int]]:
        """Covering pairs (i, j): i < j with nothing strictly between."""
        return [(int(i), int(j)) for i, j in np.argwhere(self.cover_matrix())]

    def hasse_labels(self) -> list[tuple[Hashable, Hashable]]:
        return [(self.labels[i], self.labels[j]) for i, j in self.hasse()]

    def maximal(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.strict().sum(axis=1) == 0)]

    def minimal(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.strict().sum(axis=0) == 0)]

    def opposite(self) -> FinitePoset:
        return FinitePoset(self.labels, self.leq.T.copy(), validate=False)

    def subposet(self, indices: Iterable[int]) -> FinitePoset:
        idx = sorted(set(int(i) for i in indices))
        sub = self.leq[np.ix_(idx, idx)].copy() if idx else np.zeros((0, 0), dtype=bool)
        return FinitePoset([self.labels[i] for i in idx], sub, validate=False)

    def induced(self, labels: Iterable[Hashable]) -> FinitePoset:
        return self.subposet(self._index[x] for x in labels)

    def chains(self) -> list[tuple[int, ...]]:
        """All nonempty chains, each as a tuple of element indices in increasing order."""
        lt = self.strict()
        ups = [np.flatnonzero(row).tolist() for row in lt]
        out: list[tuple[int, ...]] = []
        stack = [(i,) for i in range(len(self))]
        while stack:
            chain = stack.pop()
            out.append(chain)
            for j in ups[chain[-1]]:
                stack.append(chain + (j,))
        return out

    def to_dot(self, name: str = "hasse", label: Callable[[Hashable], str] = str) -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for lab in self.labels:
            s = label(lab)
            lines.append(f'  "{s}";')
        for a, b in self.hasse_labels():
            lines.append(f'  "{label(a)}" -> "{label(b)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def hasse(poset: FinitePoset) -> list[tuple[int, int]]:
    return poset.hasse()


def opposite(poset: FinitePoset) -> FinitePoset:
    return poset.opposite()


def verify_order_iso(f: Mapping[Hashable, Hashable], p: FinitePoset, q: FinitePoset) -> bool:
    """True iff ``f`` (labels of p -> labels of q) satisfies x <= y  <=>  f(x) <= f(y).

    Raises UsageError unless ``f`` is a bijection between the element sets.
    """
    if set(f) != set(p.labels):
        raise UsageError("map is not defined on every element of the source poset")
    image = [f[x] for x in p.labels]
    if len(set(image)) != len(image) or set(image) != set(q.labels):
        raise UsageError("map is not a bijection onto the target poset")
    perm = [q.index(y) for y in image]
    return bool(np.array_equal(p.leq, q.leq[np.ix_(perm, perm)])) if perm else True


@dataclass
class SimplicialComplex:
    """Simplices are sorted tuples of vertex indices; ``vertices`` holds labels.

    The global vertex order (the index order) fixes the orientation used for
    boundary matrices.
    """

    vertices: tuple
    simplices: list[tuple[int, ...]] = field(default_factory=list)

    def __post_init__(self):
        self.vertices = tuple(self.vertices)
        seen = set()
        uniq = []
        for s in self.simplices:
            s = tuple(sorted(s))
            if not s:
                continue
            if s not in seen:
                seen.add(s)
                uniq.append(s)
        uniq.sort(key=lambda s: (len(s), s))
        self.simplices = uniq
        self._set = seen

    @classmethod
    def from_facets(cls, vertices: Sequence, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
        faces = set()
        for facet in facets:
            facet = tuple(sorted(facet))
            for k in range(1, len(facet) + 1):
                faces.update(combinations(facet, k))
        return cls(tuple(vertices), list(faces))

    def __contains__(self, simplex) -> bool:
        return tuple(sorted(simplex)) in self._set

    def __len__(self) -> int:
        return len(self.simplices)

    @property
    def dimension(self) -> int:
        return max((len(s) for s in self.simplices), default=0) - 1

    def faces(self, k: int) -> list[tuple[int, ...]]:
        """All k-dimensional simplices in (length, lexicographic) order."""
        return [s for s in self.simplices if len(s) == k + 1]

    def f_vector(self) -> list[int]:
        counts = [0] * (self.dimension + 1)
        for s in self.simplices:
            counts[len(s) - 1] += 1
        return counts

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.f_vector()))

    def is_closed(self) -> bool:
        return all(
            face in self._set
            for s in self.simplices
            if len(s) > 1
            for face in combinations(s, len(s) - 1)
        )

    def labeled(self) -> set[frozenset]:
        """Simplices as frozensets of vertex labels, for label-level comparisons."""
        return {frozenset(self.vertices[i] for i in s) for s in self.simplices}

    def relabel(self, perm: Sequence[int]) -> SimplicialComplex:
        """Move vertex i to position perm[i] (changes the orientation order)."""
        labels = [None] * len(self.vertices)
        for i, p in enumerate(perm):
            labels[p] = self.vertices[i]
        return SimplicialComplex(tuple(labels), [tuple(perm[v] for v in s) for s in self.simplices])


def order_complex(poset: FinitePoset) -> SimplicialComplex:
    """Simplices are the chains x0 < x1 < ... < xr."""
    return SimplicialComplex(poset.labels, poset.chains())
