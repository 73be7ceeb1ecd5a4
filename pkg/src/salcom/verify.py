"""Per-instance verification pipeline behind ``salcom verify-all``."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .com import check_com, face_poset, semisimplify, topes
from .geom import Arrangement, enumerate_covectors, enumerate_covectors_exhaustive
from .homology import betti
from .oracle import intersection_poset, poincare_polynomial, region_count
from .poset import order_complex, verify_order_iso
from .salvetti import salvetti_complex
from .zcover import ZCover, verify_nerve

EXHAUSTIVE_LIMIT = 6


def _trim(v) -> tuple[int, ...]:
    v = list(v)
    while len(v) > 1 and v[-1] == 0:
        v.pop()
    return tuple(v)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class InstanceReport:
    name: str
    dim: int
    size: int
    full_space: bool
    covectors: int = 0
    topes: int = 0
    salvetti: int = 0
    betti: tuple[int, ...] = ()
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))

    def line(self) -> str:
        status = "ok" if self.ok else "FAIL"
        head = (
            f"{self.name}: {status} d={self.dim} |E|={self.size} K={'V' if self.full_space else 'poly'} "
            f"|L|={self.covectors} topes={self.topes} |Sal|={self.salvetti} betti={list(self.betti)}"
        )
        bad = [f"  {c.name}: {c.detail}" for c in self.checks if not c.ok]
        return "\n".join([head] + bad)


def verify_instance(arr: Arrangement) -> InstanceReport:
    rep = InstanceReport(arr.name, arr.dim, arr.size, arr.is_full_space())
    en = enumerate_covectors(arr)
    com = en.com
    rep.covectors = len(com)
    ts = topes(com)
    rep.topes = len(ts)

    axioms = check_com(com)
    rep.add("com-axioms", axioms.ok, axioms.describe())

    bad_witness = [str(x) for x, w in en.witnesses.items() if arr.sign_of(w) != x]
    rep.add("witnesses", not bad_witness, f"witness signs differ for {bad_witness[:5]}")

    if arr.size <= EXHAUSTIVE_LIMIT:
        exhaustive = enumerate_covectors_exhaustive(arr)
        rep.add("pruned=exhaustive", exhaustive == com, f"pruned {len(com)} vs exhaustive {len(exhaustive)}")

    face_profile = betti(order_complex(face_poset(com)))
    rep.add("face-poset-acyclic", face_profile.reduced_acyclic(), f"betti {face_profile.betti} torsion {face_profile.torsion}")

    cover = ZCover(arr, en)
    rep.salvetti = len(cover.sal)
    sal_cx = order_complex(cover.sal)
    sal_profile = betti(sal_cx)
    rep.betti = _trim(sal_profile.betti)
    rep.add("salvetti-torsion-free", sal_profile.torsion_free(), f"torsion {sal_profile.torsion}")

    rep.add(
        "opposite-invariance",
        order_complex(cover.sal.opposite()).labeled() == sal_cx.labeled(),
        "order complex of the opposite Salvetti poset differs",
    )

    ss = semisimplify(com)
    restriction = {x: ss.restrict(x) for x in com.covectors}
    iso = verify_order_iso(restriction, face_poset(com), face_poset(ss.com))
    ss_betti = _trim(betti(salvetti_complex(ss.com, check=False)).betti)
    rep.add("semisimplify", iso and ss_betti == rep.betti, f"face iso {iso}; betti {list(ss_betti)} vs {list(rep.betti)}")

    nerve = verify_nerve(arr, cover)
    rep.add("nerve", nerve.ok, "; ".join(str(f) for f in nerve.failures[:5]))

    if rep.full_space:
        poset = intersection_poset(arr)
        poly = _trim(poincare_polynomial(poset))
        rep.add("orlik-solomon", poly == rep.betti and sal_profile.torsion_free(), f"poincare {list(poly)} vs betti {list(rep.betti)}")
        zas = region_count(poset)
        rep.add("zaslavsky", zas == rep.topes, f"pi(A,1)={zas} vs topes={rep.topes}")
    return rep


def verify_corpus(arrangements: list[Arrangement], jobs: int = 1) -> list[InstanceReport]:
    """Reports in input order, whatever the degree of parallelism."""
    if jobs <= 1:
        return [verify_instance(a) for a in arrangements]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(verify_instance, arrangements))
