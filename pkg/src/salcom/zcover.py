"""Combinatorial model of the glued space Z(A, K) and its canonical cover.

A point z of Z(A, K) is a pair (v, S): a point v of K and a tope S, where
(v, S) and (v, S') are identified when no hyperplane through v separates S
from S'. The cover set attached to a Salvetti element (X, T) is the copy of
the cone K_{X,T} sitting over the tope T.

Membership of z in the cover set of (X, T) depends on z only through the
covector Y of v and the class of S, so one representative per Salvetti
element (Y, Y o S) exhausts all the local posets. Nothing here builds a
topological space; every question is answered by sign arithmetic or by an
exact feasibility query.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .com import COM, check_com, face_poset, topes
from .errors import InvariantViolation, UsageError
from .geom import Arrangement, Enumeration, Region, enumerate_covectors, region_equal, region_subset, subregion
from .homology import betti
from .poset import FinitePoset, order_complex, verify_order_iso
from .salvetti import SalElement, salvetti_poset
from .signs import SignVector


@dataclass(frozen=True)
class ZPoint:
    """(v, S) with v a witness point of the face F_Y inside K."""

    Y: SignVector
    S: SignVector
    v: tuple[Fraction, ...]

    def canonical(self) -> ZPoint:
        return ZPoint(self.Y, self.Y.compose(self.S), self.v)

    def __str__(self) -> str:
        return f"z(Y={self.Y}, S={self.S})"


def z_equiv_signs(z1: ZPoint, z2: ZPoint) -> bool:
    if z1.v != z2.v or z1.Y != z2.Y:
        raise UsageError("z_equiv compares points over the same base point")
    return z1.S.separator_mask(z2.S) & z1.Y.zero_mask == 0


class ZCover:
    """Everything about Z(A, K) that the verifier needs, computed once per arrangement."""

    def __init__(self, arr: Arrangement, enumeration: Optional[Enumeration] = None):
        self.arr = arr
        self.enumeration = enumeration if enumeration is not None else enumerate_covectors(arr)
        self.com: COM = self.enumeration.com
        self.witnesses = self.enumeration.witnesses
        self.topes: list[SignVector] = topes(self.com)
        self.sal: FinitePoset = salvetti_poset(self.com, check=False)
        self._at_point: dict[int, tuple] = {}
        self._cond2: dict[tuple[int, ...], bool] = {}
        self._local: dict[frozenset, COM] = {}

    # points ----------------------------------------------------------------

    def point(self, y: SignVector, s: SignVector, v: Optional[Sequence[Fraction]] = None) -> ZPoint:
        if y not in self.com:
            raise UsageError(f"{y} is not a covector of L(A, K)")
        return ZPoint(y, s, tuple(v) if v is not None else self.witnesses[y])

    def representatives(self) -> list[ZPoint]:
        """One z per Salvetti element (Y, S), over the stored witness of F_Y."""
        return [self.point(el.X, el.T) for el in self.sal.labels]

    def fiber(self, y: SignVector) -> list[SignVector]:
        """Topes T >= Y; they index the points of Z(A, K) over any v in F_Y."""
        if y not in self.com:
            raise UsageError(f"{y} is not a covector of L(A, K)")
        return [t for t in self.topes if y.leq(t)]

    def _evaluate(self, v: tuple[Fraction, ...]) -> tuple:
        # keyed by identity: representatives share the witness tuples
        got = self._at_point.get(id(v))
        if got is None or got[0] is not v:
            got = (v, self.arr.sign_of(v), self.arr.region.contains(v))
            self._at_point[id(v)] = got
        return got

    def v_signs(self, v: Sequence[Fraction]) -> SignVector:
        """Signs of every hyperplane at the point v."""
        return self._evaluate(tuple(v) if not isinstance(v, tuple) else v)[1]

    def z_equiv(self, z1: ZPoint, z2: ZPoint) -> bool:
        """(v, S1) ~ (v, S2), by separating sets and cross-checked by cone equality."""
        by_signs = z_equiv_signs(z1, z2)
        by_regions = region_equal(subregion(self.arr, z1.Y, z1.S), subregion(self.arr, z2.Y, z2.S))
        if by_signs != by_regions:
            raise InvariantViolation("z-equivalence disagrees with cone equality", z1=z1, z2=z2)
        return by_signs

    def local_region(self, z: ZPoint) -> Region:
        """K_z = K_{Y,S}."""
        return subregion(self.arr, z.Y, z.S)

    def local_com(self, z: ZPoint) -> COM:
        """L(A, K_z), enumerated from scratch over the cone K_z."""
        region = self.local_region(z)
        got = self._local.get(region.key)
        if got is None:
            got = self._local[region.key] = enumerate_covectors(self.arr.with_region(region)).com
        return got

    # the four membership conditions ---------------------------------------

    def cond1(self, z: ZPoint, s: SalElement) -> bool:
        y, sz = z.Y, z.Y.compose(z.S)
        return s.T == s.X.compose(y) and sz == y.compose(s.X)

    def cond2(self, z: ZPoint, s: SalElement) -> bool:
        if s.T != s.X.compose(z.Y):
            return False
        zeros = z.Y.zero_mask
        sz = z.Y.compose(z.S)
        # F_X meets K inside K_z or not, and K_z only depends on these masks
        key = (s.X.plus, s.X.minus, zeros, sz.plus & zeros, sz.minus & zeros)
        got = self._cond2.get(key)
        if got is None:
            got = self._cond2[key] = region_subset(self.arr.face_region(s.X), self.local_region(z.canonical()))
        return got

    def cond3(self, z: ZPoint, s: SalElement) -> bool:
        x, t, y, sz = s.X, s.T, z.Y, z.Y.compose(z.S)
        for e in range(x.n):
            if x[e] == 0 and y[e] != t[e]:
                return False
            if y[e] == 0 and x[e] != sz[e]:
                return False
        return True

    def cond4(self, z: ZPoint, s: SalElement) -> bool:
        # evaluated at the point v itself, with z's tope taken as given (not normalized)
        _, vs, in_k = self._evaluate(z.v)
        if not in_k:
            return False
        x, t = s.X, s.T
        agree = (t.plus & vs.plus) | (t.minus & vs.minus)
        if x.zero_mask & ~agree:
            return False
        return z.S.separator_mask(t) & vs.zero_mask == 0

    def conditions(self, z: ZPoint, s: SalElement) -> tuple[bool, bool, bool, bool]:
        return self.cond1(z, s), self.cond2(z, s), self.cond3(z, s), self.cond4(z, s)

    def in_cover(self, z: ZPoint, s: SalElement) -> bool:
        conds = self.conditions(z, s)
        if len(set(conds)) != 1:
            raise InvariantViolation("membership conditions disagree", z=z, s=s, conditions=conds)
        return conds[0]

    def sal_at(self, z: ZPoint) -> FinitePoset:
        """The subposet of Salvetti elements whose cover set contains z."""
        return self.sal.induced([s for s in self.sal.labels if self.in_cover(z, s)])


@dataclass
class NerveFailure:
    kind: str
    z: Optional[ZPoint]
    detail: str

    def __str__(self) -> str:
        where = f" at {self.z}" if self.z is not None else ""
        return f"{self.kind}{where}: {self.detail}"


@dataclass
class NerveReport:
    representatives: int = 0
    pairs_checked: int = 0
    covers_checked: int = 0
    failures: list[NerveFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} failures"
        return (
            f"nerve: {status}; {self.representatives} z-representatives, "
            f"{self.pairs_checked} (z, s) pairs, {self.covers_checked} cover relations"
        )


def verify_nerve(arr: Arrangement, cover: Optional[ZCover] = None) -> NerveReport:
    """Check, for every z-representative, the facts the nerve argument needs.

    (a) X -> (X, X o Y) is an order isomorphism from L(A, K_z) onto the local poset;
    (b) the order complex of the local poset is reduced-acyclic;
    (c) the four membership conditions agree on every Salvetti element;
    (d) membership is monotone along the Salvetti order, cover cones are nested,
        and z-equivalence by separating sets matches equality of cones.
    Also: L(A, K_z) satisfies the axioms, and representatives with the same
    (Y, Y o S) but a different tope see the same local poset.
    """
    cz = cover if cover is not None else ZCover(arr)
    report = NerveReport()
    fail = report.failures
    labels = cz.sal.labels
    covers = cz.sal.hasse()
    acyclic_by_region: dict[frozenset, bool] = {}
    com_ok: dict[frozenset, bool] = {}

    for i, j in covers:
        a, b = labels[i], labels[j]
        report.covers_checked += 1
        if not region_subset(subregion(arr, a.X, a.T), subregion(arr, b.X, b.T)):
            fail.append(NerveFailure("containment", None, f"K cone of {a} not inside that of {b}"))

    checked_kz: set[SignVector] = set()
    for z in cz.representatives():
        report.representatives += 1
        members = []
        for s in labels:
            conds = cz.conditions(z, s)
            report.pairs_checked += 1
            if len(set(conds)) != 1:
                fail.append(NerveFailure("conditions", z, f"{s}: cond1..4 = {conds}"))
            members.append(conds[0])
        for i, j in covers:
            if members[i] and not members[j]:
                fail.append(NerveFailure("monotonicity", z, f"in {labels[i]} but not in {labels[j]}"))
        local_sal = cz.sal.induced([s for s, m in zip(labels, members) if m])

        # same (Y, Y o S) through another tope gives the same local poset
        for t in cz.topes:
            if t != z.S and z.Y.compose(t) == z.S:
                raw = ZPoint(z.Y, t, z.v)
                same = [cz.cond4(raw, s) for s in labels]
                if same != members:
                    fail.append(NerveFailure("representative", z, f"tope {t} in the same class sees a different poset"))
                break

        region = cz.local_region(z)
        local = cz.local_com(z)
        if region.key not in com_ok:
            com_ok[region.key] = check_com(local).ok
        if not com_ok[region.key]:
            fail.append(NerveFailure("local-com", z, f"L(A, K_z) fails the axioms: {check_com(local).describe()}"))

        mapping = {x: SalElement(x, x.compose(z.Y)) for x in local.covectors}
        iso_ok = False
        if set(mapping.values()) != set(local_sal.labels):
            extra = set(mapping.values()) - set(local_sal.labels)
            missing = set(local_sal.labels) - set(mapping.values())
            fail.append(
                NerveFailure(
                    "bijection", z,
                    f"image minus local poset: {sorted(map(str, extra))}; "
                    f"local poset minus image: {sorted(map(str, missing))}",
                )
            )
        elif not verify_order_iso(mapping, face_poset(local), local_sal):
            fail.append(NerveFailure("order-iso", z, "X -> (X, X o Y) is not order preserving both ways"))
        else:
            iso_ok = True

        # once the isomorphism is confirmed, the homology of the local order
        # complex depends only on L(A, K_z), i.e. on the cone
        if iso_ok and region.key in acyclic_by_region:
            acyclic = acyclic_by_region[region.key]
        else:
            acyclic = len(local_sal) > 0 and betti(order_complex(local_sal)).reduced_acyclic()
            if iso_ok:
                acyclic_by_region[region.key] = acyclic
        if not acyclic:
            fail.append(NerveFailure("acyclicity", z, f"order complex of the local poset ({len(local_sal)} elements) is not acyclic"))

    _check_cone_equivalence(cz, report)
    return report


def _check_cone_equivalence(cz: ZCover, report: NerveReport) -> None:
    """Per covector Y: (v, T) ~ (v, T') evaluated at v agrees with K_{Y,T} == K_{Y,T'}."""
    arr = cz.arr
    seen: dict[tuple, bool] = {}
    for y in cz.com.covectors:
        v = cz.witnesses[y]
        vs = cz.v_signs(v)
        zeros = y.zero_mask
        for a in range(len(cz.topes)):
            for b in range(a + 1, len(cz.topes)):
                t1, t2 = cz.topes[a], cz.topes[b]
                at_v = t1.separator_mask(t2) & vs.zero_mask == 0
                key = (zeros, t1.plus & zeros, t1.minus & zeros, t2.plus & zeros, t2.minus & zeros)
                if key not in seen:
                    seen[key] = region_equal(subregion(arr, y, t1), subregion(arr, y, t2))
                if at_v != seen[key]:
                    report.failures.append(
                        NerveFailure("Kz", None, f"Y={y}: T={t1}, T'={t2}: equivalence {at_v}, cone equality {seen[key]}")
                    )


def fiber(cover: ZCover | Arrangement, y: SignVector) -> list[SignVector]:
    cz = cover if isinstance(cover, ZCover) else ZCover(cover)
    return cz.fiber(y)


def local_region(cover: ZCover, z: ZPoint) -> Region:
    return cover.local_region(z)


def in_cover(cover: ZCover, z: ZPoint, s: SalElement) -> bool:
    return cover.in_cover(z, s)


def sal_at(cover: ZCover, z: ZPoint) -> FinitePoset:
    return cover.sal_at(z)


def z_equiv(cover: ZCover, z1: ZPoint, z2: ZPoint) -> bool:
    return cover.z_equiv(z1, z2)
