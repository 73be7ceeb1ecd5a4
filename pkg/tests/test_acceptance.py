"""Acceptance criteria 1-8.

Run under pytest (one PASS/FAIL line per criterion is printed in the terminal
summary) or directly with ``python tests/test_acceptance.py``.

All comparisons are exact integer or set equalities; the only tolerances are
wall-clock limits, pinned below.
"""
from __future__ import annotations

import sys
import time
from functools import cache

import pytest

from salcom.com import COM, check_com, face_poset, topes
from salcom.corpus import concurrent_lines, generate_corpus, generic_lines, two_points, two_points_right_half
from salcom.geom import clear_caches, enumerate_covectors
from salcom.homology import betti, try_collapse
from salcom.poset import order_complex
from salcom.salvetti import salvetti_poset
from salcom.signs import SignVector
from salcom.verify import verify_corpus
from salcom.zcover import verify_nerve

LIMIT_TWO_POINTS_S = 1.0
LIMIT_RIGHT_HALF_S = 1.0
LIMIT_ORLIK_SOLOMON_S = 300.0
LIMIT_NERVE_DEFAULT_S = 600.0

# (seed, count, max dim, max |E|, K = V)
CORPORA = {
    "default": (42, 25, 2, 4, False),
    "mixed": (42, 25, 3, 5, False),
    "full": (7, 25, 3, 5, True),
}

RESULTS: dict[int, tuple[bool, str]] = {}


def _sv(*texts):
    return [SignVector.parse(t) for t in texts]


@cache
def corpus(name):
    seed, count, dim, hyperplanes, full = CORPORA[name]
    return generate_corpus(seed, count, dim, hyperplanes, full_space=full)


@cache
def reports(name):
    clear_caches()
    start = time.perf_counter()
    got = verify_corpus(corpus(name))
    return got, time.perf_counter() - start


def all_reports():
    return [r for name in CORPORA for r in reports(name)[0]]


def _check(name, report):
    return next((c for c in report.checks if c.name == name), None)


def _record(number: int, ok: bool, detail: str) -> None:
    RESULTS[number] = (ok, detail)
    assert ok, f"criterion {number}: {detail}"


def criterion_1():
    start = time.perf_counter()
    com = enumerate_covectors(two_points()).com
    faces = face_poset(com)
    sal = salvetti_poset(com)
    elapsed = time.perf_counter() - start
    want = _sv("--", "0-", "+-", "+0", "++")
    ok = (
        list(com) == want
        and topes(com) == _sv("--", "+-", "++")
        and len(faces.hasse()) == 4
        and len(sal) == 7
        and len(sal.hasse()) == 8
        and elapsed < LIMIT_TWO_POINTS_S
    )
    detail = (
        f"|L|={len(com)} topes={[str(t) for t in topes(com)]} face-Hasse={len(faces.hasse())} "
        f"|Sal|={len(sal)} Sal-Hasse={len(sal.hasse())} in {elapsed:.3f}s (limit {LIMIT_TWO_POINTS_S}s)"
    )
    return ok, detail


def criterion_2():
    com = enumerate_covectors(two_points()).com
    h = betti(order_complex(salvetti_poset(com)))
    l_cx = order_complex(face_poset(com))
    lh = betti(l_cx)
    collapsible = try_collapse(l_cx)
    ok = h.betti == (1, 2) and h.torsion_free() and lh.reduced_acyclic() and collapsible
    detail = f"Salvetti betti={h.betti} torsion={h.torsion}; |L| reduced betti={lh.reduced_betti}, collapsible={collapsible}"
    return ok, detail


def criterion_3():
    start = time.perf_counter()
    com = enumerate_covectors(two_points_right_half()).com
    sal = salvetti_poset(com)
    h = betti(order_complex(sal))
    elapsed = time.perf_counter() - start
    ok = (
        len(com) == 3
        and len(sal) == 4
        and len(sal.hasse()) == 4
        and h.betti == (1, 1)
        and h.torsion_free()
        and elapsed < LIMIT_RIGHT_HALF_S
    )
    detail = f"|L|={len(com)} |Sal|={len(sal)} Sal-Hasse={len(sal.hasse())} betti={h.betti} in {elapsed:.3f}s (limit {LIMIT_RIGHT_HALF_S}s)"
    return ok, detail


def _salvetti_betti(arr):
    h = betti(order_complex(salvetti_poset(enumerate_covectors(arr).com)))
    return h.betti, h.torsion_free()


def criterion_4():
    gen = _salvetti_betti(generic_lines())
    conc = _salvetti_betti(concurrent_lines())
    reps, elapsed = reports("full")
    os_checks = [_check("orlik-solomon", r) for r in reps]
    bad = [r.name for r, c in zip(reps, os_checks) if c is None or not c.ok]
    ok = (
        gen == ((1, 3, 3), True)
        and conc == ((1, 3, 2), True)
        and len(reps) >= 25
        and all(r.full_space and r.dim <= 3 and r.size <= 5 for r in reps)
        and not bad
        and elapsed < LIMIT_ORLIK_SOLOMON_S
    )
    detail = (
        f"generic={gen[0]} concurrent={conc[0]}; {len(reps) - len(bad)}/{len(reps)} K=V instances agree "
        f"degree-by-degree with zero torsion in {elapsed:.1f}s (limit {LIMIT_ORLIK_SOLOMON_S:.0f}s)"
        + (f"; mismatches {bad}" if bad else "")
    )
    return ok, detail


def criterion_5():
    reps, _ = reports("full")
    bad = [r.name for r in reps if not (_check("zaslavsky", r) and _check("zaslavsky", r).ok)]
    ok = not bad and len(reps) >= 25
    return ok, f"|topes| = pi(A,1) on {len(reps) - len(bad)}/{len(reps)} instances" + (f"; mismatches {bad}" if bad else "")


def criterion_6():
    reps = all_reports()
    bad = [r.name for r in reps if not _check("com-axioms", r).ok]
    arrs = [a for name in CORPORA for a in corpus(name)]
    polyhedral = sum(1 for a in arrs if a.region.constraints)
    duplicated = sum(1 for a in arrs if _has_parallel_copy(a))
    mutated = _sv("--", "+-", "+0", "++")
    results = {force: check_com(COM(mutated), force_python=force) for force in (False, True)}
    witness_ok = all(
        not rep.se_ok and rep.se_witness == (mutated[0], mutated[3], 0) for rep in results.values()
    )
    ok = not bad and polyhedral > 0 and duplicated > 0 and witness_ok
    detail = (
        f"FS and SE hold on {len(reps) - len(bad)}/{len(reps)} enumerated L(A,K) "
        f"({polyhedral} with polyhedral K, {duplicated} with a repeated hyperplane); "
        f"mutated set: {results[False].describe()}"
    )
    return ok, detail


def _has_parallel_copy(arr):
    rows = [h.int_row for h in arr.hyperplanes]
    canon = [max(r, tuple(-x for x in r)) for r in rows]
    return len(set(canon)) < len(canon)


def criterion_7():
    # time the nerve verification alone on the default corpus, from cold caches
    clear_caches()
    start = time.perf_counter()
    default = [verify_nerve(a) for a in corpus("default")]
    elapsed = time.perf_counter() - start
    reps = all_reports()
    bad = [r.name for r in reps if not _check("nerve", r).ok] + [
        a.name for a, n in zip(corpus("default"), default) if not n.ok
    ]
    total_z = sum(n.representatives for n in default)
    ok = not bad and elapsed < LIMIT_NERVE_DEFAULT_S
    detail = (
        f"zero failures on {len(reps) - len(bad)}/{len(reps)} instances; default corpus: {total_z} "
        f"z-representatives in {elapsed:.1f}s (limit {LIMIT_NERVE_DEFAULT_S:.0f}s)"
        + (f"; failing {bad}" if bad else "")
    )
    return ok, detail


def criterion_8():
    reps = all_reports()
    names = ("semisimplify", "opposite-invariance", "pruned=exhaustive")
    bad = [(r.name, n) for r in reps for n in names if _check(n, r) is None or not _check(n, r).ok]
    ok = not bad
    return ok, f"{len(names)} invariants exact on {len(reps)} instances" + (f"; failing {bad}" if bad else "")


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, detail = CRITERIA[number]()
    _record(number, ok, detail)


def format_line(number: int, ok: bool, detail: str) -> str:
    return f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"


if __name__ == "__main__":
    failed = 0
    for number, fn in CRITERIA.items():
        ok, detail = fn()
        failed += not ok
        print(format_line(number, ok, detail), flush=True)
    sys.exit(1 if failed else 0)
