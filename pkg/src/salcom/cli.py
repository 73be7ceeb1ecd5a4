"""Command-line interface.

Exit codes: 0 success / everything verified, 1 a verification failed,
2 usage error (bad file, malformed rational, empty K, ...).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import _kernels
from .com import COM, check_com, face_poset, semisimplify, topes
from .corpus import generate_corpus
from .errors import UsageError
from .geom import Arrangement, enumerate_covectors, format_rational
from .homology import betti
from .oracle import intersection_poset, poincare_polynomial
from .poset import FinitePoset, order_complex
from .salvetti import salvetti_poset
from .verify import verify_corpus
from .zcover import ZCover, verify_nerve


def _load_com(args) -> COM:
    if getattr(args, "com", None):
        path = Path(args.com)
        try:
            return COM.from_strings(path.read_text().splitlines())
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    if getattr(args, "arrangement", None):
        return enumerate_covectors(Arrangement.load(args.arrangement)).com
    raise UsageError("give --arrangement <path> or --com <path>")


def _load_arrangement(args) -> Arrangement:
    if not args.arrangement:
        raise UsageError("--arrangement <path> is required")
    return Arrangement.load(args.arrangement)


def _poset_json(poset: FinitePoset, label) -> str:
    obj = {
        "elements": [label(x) for x in poset.labels],
        "covers": [[i, j] for i, j in poset.hasse()],
    }
    return json.dumps(obj, indent=1) + "\n"


def cmd_covectors(args, out) -> int:
    en = enumerate_covectors(_load_arrangement(args))
    for x in en.com.covectors:
        if args.witnesses:
            point = " ".join(str(format_rational(q)) for q in en.witnesses[x])
            out.write(f"{x} {point}\n")
        else:
            out.write(f"{x}\n")
    return 0


def cmd_check_com(args, out) -> int:
    if args.path and not args.com:
        args.com = args.path
    report = check_com(_load_com(args))
    out.write(report.describe() + "\n")
    return 0 if report.ok else 1


def cmd_topes(args, out) -> int:
    for t in topes(_load_com(args)):
        out.write(f"{t}\n")
    return 0


def cmd_salvetti(args, out) -> int:
    poset = salvetti_poset(_load_com(args))
    if args.dot:
        out.write(poset.to_dot("salvetti"))
    else:
        out.write(_poset_json(poset, lambda s: [str(s.X), str(s.T)]))
    return 0


def cmd_hasse(args, out) -> int:
    poset = face_poset(_load_com(args))
    if args.dot:
        out.write(poset.to_dot("faces"))
    else:
        out.write(_poset_json(poset, str))
    return 0


def cmd_homology(args, out) -> int:
    com = _load_com(args)
    poset = salvetti_poset(com) if args.complex == "salvetti" else face_poset(com)
    out.write(betti(order_complex(poset)).to_csv())
    return 0


def cmd_semisimplify(args, out) -> int:
    ss = semisimplify(_load_com(args))
    mapping = " ".join("-" if e is None else str(e) for e in ss.coord_map)
    out.write(f"# coordinate map (original -> new, '-' = dropped as constant): {mapping}\n")
    out.write(ss.com.to_text())
    return 0


def cmd_verify_nerve(args, out) -> int:
    arr = _load_arrangement(args)
    report = verify_nerve(arr, ZCover(arr))
    out.write(report.summary() + "\n")
    for f in report.failures:
        out.write(f"FAIL {f}\n")
    return 0 if report.ok else 1


def cmd_verify_os(args, out) -> int:
    arr = _load_arrangement(args)
    poly = poincare_polynomial(intersection_poset(arr))
    profile = betti(order_complex(salvetti_poset(enumerate_covectors(arr).com)))
    b = list(profile.betti)
    width = max(len(poly), len(b))
    poly += [0] * (width - len(poly))
    b += [0] * (width - len(b))
    out.write(f"poincare: {poly}\nsalvetti: {b}\ntorsion: {[list(t) for t in profile.torsion]}\n")
    ok = poly == b and profile.torsion_free()
    out.write("match\n" if ok else "MISMATCH\n")
    return 0 if ok else 1


def cmd_verify_all(args, out) -> int:
    corpus = generate_corpus(
        args.seed, args.count, args.dim, args.hyperplanes, args.coeff_bound, full_space=args.full_space
    )
    reports = verify_corpus(corpus, jobs=args.jobs)
    for r in reports:
        out.write(r.line() + "\n")
    failed = [r.name for r in reports if not r.ok]
    out.write(f"{len(reports) - len(failed)}/{len(reports)} instances verified\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="salcom", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"salcom 0.1.0 ({_kernels.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, arrangement=True, com=False):
        p = sub.add_parser(name, help=help)
        if arrangement:
            p.add_argument("--arrangement", metavar="PATH", help="arrangement JSON file")
        if com:
            p.add_argument("--com", metavar="PATH", help="file of sign strings, one covector per line")
        p.set_defaults(func=func)
        return p

    p = add("covectors", cmd_covectors, "list the covectors of L(A, K)")
    p.add_argument("--witnesses", action="store_true", help="append a witness point to each covector")
    p = add("check-com", cmd_check_com, "check the COM axioms", com=True)
    p.add_argument("path", nargs="?", help="sign-vector file (same as --com)")
    add("topes", cmd_topes, "list the topes", com=True)
    p = add("salvetti", cmd_salvetti, "Salvetti poset (elements + covering relations)", com=True)
    p.add_argument("--dot", action="store_true", help="emit the Hasse diagram as DOT")
    p = add("hasse", cmd_hasse, "face poset Hasse diagram", com=True)
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p = add("homology", cmd_homology, "integral homology as CSV", com=True)
    p.add_argument("--complex", choices=("salvetti", "faces"), default="salvetti")
    add("semisimplify", cmd_semisimplify, "semisimplified COM and coordinate map", com=True)
    add("verify-nerve", cmd_verify_nerve, "verify the cover conditions and the nerve hypothesis")
    add("verify-os", cmd_verify_os, "compare Salvetti Betti numbers with the Poincare polynomial (K = V)")
    p = add("verify-all", cmd_verify_all, "run every check over a seeded random corpus", arrangement=False)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--count", type=int, default=25)
    p.add_argument("--dim", type=int, default=2, help="maximum ambient dimension")
    p.add_argument("--hyperplanes", type=int, default=4, help="maximum number of hyperplanes")
    p.add_argument("--coeff-bound", type=int, default=3)
    p.add_argument("--full-space", action="store_true", help="K = V for every instance")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"salcom {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
