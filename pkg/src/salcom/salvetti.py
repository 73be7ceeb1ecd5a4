"""Salvetti poset and complex of a conditional oriented matroid.

Elements are pairs (X, T) with X <= T and T a tope, ordered by

    (X, T) <= (X', T')  iff  X <= X' and X' o T == T'.

This is the opposite of the classical convention; the order complex is the
same either way.
"""
from __future__ import annotations

from typing import NamedTuple

from . import _kernels
from .com import COM, require_com, topes
from .poset import FinitePoset, SimplicialComplex, order_complex
from .signs import SignVector


class SalElement(NamedTuple):
    X: SignVector
    T: SignVector

    def __str__(self) -> str:
        return f"({self.X},{self.T})"

    def sort_key(self):
        return self.X.sort_key(), self.T.sort_key()


def salvetti_elements(com: COM) -> list[SalElement]:
    out = []
    for t in topes(com):
        for x in com.covectors:
            if x.leq(t):
                out.append(SalElement(x, t))
    out.sort(key=SalElement.sort_key)
    return out


def salvetti_poset(com: COM, *, check: bool = True, force_python: bool = False) -> FinitePoset:
    """The Salvetti poset of ``com``; raises UsageError if the axioms fail."""
    if check:
        require_com(com)
    elems = salvetti_elements(com)
    rel = _kernels.salvetti_relation(
        [s.X.plus for s in elems],
        [s.X.minus for s in elems],
        [s.T.plus for s in elems],
        [s.T.minus for s in elems],
        com.n,
        force_python=force_python,
    )
    return FinitePoset(elems, rel)


def salvetti_complex(com: COM, *, check: bool = True) -> SimplicialComplex:
    return order_complex(salvetti_poset(com, check=check))
