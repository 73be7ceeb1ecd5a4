"""Integral simplicial homology via Smith normal form, plus greedy collapses."""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .errors import UsageError
from .poset import SimplicialComplex


@dataclass
class SparseMatrix:
    """Integer matrix stored column-wise as {row: value} dicts."""

    nrows: int
    ncols: int
    columns: list[dict[int, int]] = field(default_factory=list)

    def __post_init__(self):
        if not self.columns:
            self.columns = [{} for _ in range(self.ncols)]

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]]) -> SparseMatrix:
        rows = [list(map(int, r)) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        cols = [{i: rows[i][j] for i in range(nrows) if rows[i][j]} for j in range(ncols)]
        return cls(nrows, ncols, cols)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                out[i][j] = v
        return out

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)

    def __matmul__(self, other: SparseMatrix) -> SparseMatrix:
        if self.ncols != other.nrows:
            raise UsageError(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        cols = []
        for ocol in other.columns:
            acc: dict[int, int] = {}
            for k, v in ocol.items():
                for i, w in self.columns[k].items():
                    acc[i] = acc.get(i, 0) + v * w
            cols.append({i: v for i, v in acc.items() if v})
        return SparseMatrix(self.nrows, other.ncols, cols)

    def is_zero(self) -> bool:
        return all(not c for c in self.columns)


@dataclass
class ChainComplex:
    """``boundaries[k]`` maps k-chains to (k-1)-chains; ``boundaries[0]`` is the zero map."""

    sizes: list[int]
    boundaries: list[SparseMatrix]

    def check(self) -> bool:
        """d_{k-1} d_k == 0 in every degree."""
        return all((self.boundaries[k - 1] @ self.boundaries[k]).is_zero() for k in range(2, len(self.boundaries)))


def boundary_matrices(cx: SimplicialComplex) -> ChainComplex:
    """Simplicial boundary, oriented by the vertex index order.

    Deleting the i-th vertex of a simplex contributes sign (-1)^i.
    """
    by_dim: list[list[tuple[int, ...]]] = [[] for _ in range(cx.dimension + 1)]
    for s in cx.simplices:
        by_dim[len(s) - 1].append(s)
    index = [{s: i for i, s in enumerate(group)} for group in by_dim]
    sizes = [len(g) for g in by_dim]
    mats = [SparseMatrix(0, sizes[0] if sizes else 0)]
    for k in range(1, len(by_dim)):
        faces = index[k - 1]
        cols = []
        for s in by_dim[k]:
            col = {}
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                col[faces[face]] = -1 if i % 2 else 1
            cols.append(col)
        mats.append(SparseMatrix(sizes[k - 1], sizes[k], cols))
    return ChainComplex(sizes, mats)


# ---------------------------------------------------------------------------
# Smith normal form


def _diagonal_to_invariants(diag: Iterable[int]) -> list[int]:
    d = sorted(abs(x) for x in diag if x)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            if g != d[i]:
                d[i], d[j] = g, d[i] * d[j] // g
    return d


class _Eliminator:
    """Row/column elimination on a sparse integer matrix.

    Rows are dicts {col: value}; ``cols`` indexes which rows touch a column.
    Unit pivots are taken first (cheapest, no growth); what remains is reduced
    with smallest-magnitude pivots and Euclidean steps.
    """

    def __init__(self, m: SparseMatrix):
        self.rows: dict[int, dict[int, int]] = {}
        self.cols: dict[int, set[int]] = {}
        for j, col in enumerate(m.columns):
            for i, v in col.items():
                if v:
                    self.rows.setdefault(i, {})[j] = v
                    self.cols.setdefault(j, set()).add(i)
        self.diag: list[int] = []

    def _row_axpy(self, target: int, factor: int, source: int) -> None:
        """row[target] -= factor * row[source]."""
        trow = self.rows[target]
        for j, v in self.rows[source].items():
            nv = trow.get(j, 0) - factor * v
            if nv:
                if j not in trow:
                    self.cols[j].add(target)
                trow[j] = nv
            elif j in trow:
                del trow[j]
                self.cols[j].discard(target)

    def _unit_pass(self) -> bool:
        progress = False
        for c in sorted(self.cols):
            rows = self.cols.get(c)
            if not rows:
                continue
            best = None
            for r in rows:
                v = self.rows[r][c]
                if v == 1 or v == -1:
                    key = (len(self.rows[r]), r)
                    if best is None or key < best[0]:
                        best = (key, r, v)
            if best is None:
                continue
            _, r, u = best
            for other in list(self.cols[c]):
                if other != r:
                    self._row_axpy(other, self.rows[other][c] * u, r)
            self._clear_column_and_row(r, c)
            self.diag.append(1)
            progress = True
        return progress

    def _clear_column_and_row(self, r: int, c: int) -> None:
        # column c is zero outside row r, so column ops clearing row r touch nothing else
        for j in self.rows.pop(r):
            s = self.cols.get(j)
            if s is not None:
                s.discard(r)
                if not s:
                    del self.cols[j]
        self.cols.pop(c, None)

    def _general(self) -> None:
        while True:
            entries = [(r, c, v) for r, row in self.rows.items() for c, v in row.items()]
            if not entries:
                return
            r, c, p = min(entries, key=lambda t: (abs(t[2]), len(self.rows[t[0]]), t[0], t[1]))
            dirty = False
            for other in list(self.cols[c]):
                if other == r:
                    continue
                q = self.rows[other][c] // p
                if q:
                    self._row_axpy(other, q, r)
                if c in self.rows[other]:
                    dirty = True
            if dirty:
                continue
            row = self.rows[r]
            for j in list(row):
                if j == c:
                    continue
                q = row[j] // p
                nv = row[j] - q * p
                if nv:
                    row[j] = nv
                    dirty = True
                else:
                    del row[j]
                    self.cols[j].discard(r)
                    if not self.cols[j]:
                        del self.cols[j]
            if dirty:
                continue
            self._clear_column_and_row(r, c)
            self.diag.append(p)

    def run(self) -> list[int]:
        while self._unit_pass():
            pass
        self._general()
        return self.diag


def smith_normal_form(m: SparseMatrix | Sequence[Sequence[int]]) -> tuple[tuple[int, ...], int]:
    """Nonzero invariant factors d1 | d2 | ... and the rank."""
    if not isinstance(m, SparseMatrix):
        m = SparseMatrix.from_dense(m)
    factors = _diagonal_to_invariants(_Eliminator(m).run())
    return tuple(factors), len(factors)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HomologyProfile:
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    @property
    def reduced_betti(self) -> tuple[int, ...]:
        if not self.betti:
            return ()
        return (self.betti[0] - 1,) + self.betti[1:]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))

    def torsion_free(self) -> bool:
        return not any(self.torsion)

    def reduced_acyclic(self) -> bool:
        return bool(self.betti) and not any(self.reduced_betti) and self.torsion_free()

    def to_csv(self) -> str:
        lines = ["degree,betti,reduced_betti,torsion"]
        for k, (b, rb, t) in enumerate(zip(self.betti, self.reduced_betti, self.torsion)):
            lines.append(f"{k},{b},{rb},{' '.join(map(str, t))}")
        return "\n".join(lines) + "\n"


def homology_of(chain: ChainComplex) -> HomologyProfile:
    top = len(chain.sizes)
    ranks = [0] * (top + 1)
    factors: list[tuple[int, ...]] = [()] * (top + 1)
    for k in range(1, top):
        factors[k], ranks[k] = smith_normal_form(chain.boundaries[k])
    betti = tuple(chain.sizes[k] - ranks[k] - ranks[k + 1] for k in range(top))
    torsion = tuple(tuple(d for d in factors[k + 1] if d > 1) for k in range(top))
    return HomologyProfile(betti, torsion)


def betti(cx: SimplicialComplex) -> HomologyProfile:
    """Integral homology per degree (Betti numbers and torsion coefficients)."""
    return homology_of(boundary_matrices(cx))


def is_reduced_acyclic(cx: SimplicialComplex) -> bool:
    if len(cx) == 0:
        raise UsageError("acyclicity is undefined for the empty complex")
    return betti(cx).reduced_acyclic()


def try_collapse(cx: SimplicialComplex) -> bool:
    """Greedy elementary collapses, smallest free face first.

    True means the complex collapsed to a single vertex (so it is
    contractible); False is inconclusive.
    """
    alive = set(cx.simplices)
    if not alive:
        return False
    cofaces: dict[tuple[int, ...], set[tuple[int, ...]]] = {s: set() for s in alive}
    for s in alive:
        if len(s) > 1:
            for i in range(len(s)):
                cofaces[s[:i] + s[i + 1:]].add(s)

    def facets(s):
        return [s[:i] + s[i + 1:] for i in range(len(s))] if len(s) > 1 else []

    heap = [s for s in alive if len(cofaces[s]) == 1]
    heapq.heapify(heap)
    while heap:
        sigma = heapq.heappop(heap)
        if sigma not in alive or len(cofaces[sigma]) != 1:
            continue
        (tau,) = cofaces[sigma]
        if cofaces[tau]:
            continue
        alive.discard(sigma)
        alive.discard(tau)
        touched = []
        for f in facets(tau):
            if f != sigma:
                cofaces[f].discard(tau)
                touched.append(f)
        for f in facets(sigma):
            cofaces[f].discard(sigma)
            touched.append(f)
        for f in touched:
            if f in alive and len(cofaces[f]) == 1:
                heapq.heappush(heap, f)
        # a face whose only coface just became maximal is now free
        for f in facets(tau) + facets(sigma):
            for g in facets(f):
                if g in alive and len(cofaces[g]) == 1:
                    heapq.heappush(heap, g)
    return len(alive) == 1
