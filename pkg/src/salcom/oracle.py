"""Classical predictions for K = V, independent of the sign-vector machinery.

Flats of the arrangement are computed by exact linear algebra, the Moebius
function by recursive summation, and then

* Poincare polynomial  pi(A, t) = sum_x |mu(V, x)| t^rank(x)
  (its coefficients are the Betti numbers of the complexified complement);
* region count         pi(A, 1)  (number of chambers).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import UsageError
from .geom import Arrangement
from .poset import FinitePoset

Row = tuple[Fraction, ...]


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[Row, ...]:
    """Reduced row echelon form over Q, zero rows dropped."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return ()
    ncols = len(m[0])
    out: list[list[Fraction]] = []
    pivot_row = 0
    for col in range(ncols):
        pr = next((i for i in range(pivot_row, len(m)) if m[i][col] != 0), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        piv = m[pivot_row][col]
        m[pivot_row] = [x / piv for x in m[pivot_row]]
        for i in range(len(m)):
            if i != pivot_row and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    out = [r for r in m[:pivot_row] if any(r)]
    return tuple(tuple(r) for r in out)


def _consistent(rows: tuple[Row, ...]) -> bool:
    return not any(not any(r[:-1]) and r[-1] != 0 for r in rows)


@dataclass
class IntersectionPoset:
    """Nonempty flats, bottom element V first, ordered by reverse inclusion.

    Each flat is stored as the RREF of its defining equations (a | b), which
    is a canonical form for the affine subspace it cuts out.
    """

    dim: int
    flats: list[tuple[Row, ...]]
    ranks: list[int]
    poset: FinitePoset

    def __len__(self) -> int:
        return len(self.flats)

    def mobius(self) -> list[int]:
        """mu(V, x) for every flat x, in flat order."""
        leq = self.poset.leq
        order = sorted(range(len(self.flats)), key=lambda i: self.ranks[i])
        mu = [0] * len(self.flats)
        for x in order:
            if x == 0:
                mu[x] = 1
                continue
            mu[x] = -sum(mu[y] for y in order if y != x and leq[y, x] and self.ranks[y] < self.ranks[x])
        return mu


def intersection_poset(arr: Arrangement) -> IntersectionPoset:
    if not arr.is_full_space():
        raise UsageError("the intersection-poset oracle applies only when K is the whole space")
    d = arr.dim
    hyper_rows = [tuple(h.a) + (h.b,) for h in arr.hyperplanes]
    bottom: tuple[Row, ...] = ()
    flats = [bottom]
    seen = {bottom}
    frontier = [bottom]
    while frontier:
        nxt = []
        for flat in frontier:
            for row in hyper_rows:
                cand = rref(list(flat) + [row])
                if cand in seen or not _consistent(cand):
                    continue
                seen.add(cand)
                flats.append(cand)
                nxt.append(cand)
        frontier = nxt
    flats.sort(key=lambda f: (len(f), f))
    ranks = [len(f) for f in flats]
    n = len(flats)
    leq = np.zeros((n, n), dtype=bool)
    for i, x in enumerate(flats):
        for j, y in enumerate(flats):
            # x <= y  iff  y is inside x  iff  x's equations follow from y's
            if ranks[i] <= ranks[j] and (i == j or rref(list(y) + list(x)) == y):
                leq[i, j] = True
    return IntersectionPoset(d, flats, ranks, FinitePoset(list(range(n)), leq))


def poincare_polynomial(p: IntersectionPoset) -> list[int]:
    mu = p.mobius()
    top = max(p.ranks, default=0)
    coeffs = [0] * (top + 1)
    for r, m in zip(p.ranks, mu):
        coeffs[r] += abs(m)
    return coeffs


def region_count(p: IntersectionPoset) -> int:
    return sum(poincare_polynomial(p))
