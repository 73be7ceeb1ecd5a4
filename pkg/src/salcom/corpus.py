"""Seeded random arrangements and the named examples used throughout the tests."""
from __future__ import annotations

import random
from fractions import Fraction

from .errors import UsageError
from .geom import STRICT, AffineForm, Arrangement, Constraint, Region, feasible

DUPLICATE_PROBABILITY = 0.1
MAX_REGION_HALFSPACES = 3


def _rational(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def _form(rng: random.Random, dim: int, bound: int) -> AffineForm:
    while True:
        a = tuple(_rational(rng, bound) for _ in range(dim))
        if any(a):
            return AffineForm(a, _rational(rng, bound))


def random_arrangement(
    rng: random.Random,
    dim: int,
    n_hyperplanes: int,
    coeff_bound: int = 3,
    *,
    full_space: bool = False,
    name: str = "",
) -> Arrangement:
    """Numerators in [-B, B], denominators in [1, B].

    With probability 0.1 a hyperplane repeats an earlier one up to a nonzero
    rational factor (so the coorientation may flip). K is 0-3 random open
    halfspaces, redrawn until nonempty, or the whole space when ``full_space``.
    """
    if dim < 1 or n_hyperplanes < 0 or coeff_bound < 1:
        raise UsageError("need dim >= 1, hyperplanes >= 0, coeff-bound >= 1")
    hs: list[AffineForm] = []
    for _ in range(n_hyperplanes):
        if hs and rng.random() < DUPLICATE_PROBABILITY:
            base = rng.choice(hs)
            factor = Fraction(0)
            while factor == 0:
                factor = _rational(rng, coeff_bound)
            hs.append(base.scaled(factor))
        else:
            hs.append(_form(rng, dim, coeff_bound))
    if full_space:
        region = Region(dim)
    else:
        while True:
            k = rng.randint(0, MAX_REGION_HALFSPACES)
            region = Region(dim, tuple(Constraint(_form(rng, dim, coeff_bound), STRICT) for _ in range(k)))
            if feasible(region):
                break
    return Arrangement(dim, tuple(hs), region, name)


def generate_corpus(
    seed: int,
    count: int,
    dim: int,
    hyperplanes: int,
    coeff_bound: int = 3,
    *,
    full_space: bool = False,
) -> list[Arrangement]:
    """``dim`` and ``hyperplanes`` are upper bounds; each instance draws its own sizes."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        d = rng.randint(1, dim)
        n = rng.randint(1, hyperplanes)
        tag = "full" if full_space else "mixed"
        out.append(random_arrangement(rng, d, n, coeff_bound, full_space=full_space, name=f"{tag}-s{seed}-{i:03d}"))
    return out


def two_points(region: Region | None = None) -> Arrangement:
    """Two points -1 and +1 on a line, positive side to the right."""
    hs = (AffineForm((1,), 1), AffineForm((1,), -1))
    return Arrangement(1, hs, region, "two-points")


def two_points_right_half() -> Arrangement:
    """The two-point line restricted to K = (0, oo)."""
    return two_points(Region(1, (Constraint(AffineForm((1,), 0), STRICT),))).with_name("two-points-right")


def generic_lines() -> Arrangement:
    """x = 0, y = 0, x + y = 1: three lines in general position."""
    hs = (AffineForm((1, 0), 0), AffineForm((0, 1), 0), AffineForm((1, 1), -1))
    return Arrangement(2, hs, None, "generic-lines")


def concurrent_lines() -> Arrangement:
    """x = 0, y = 0, x + y = 0: three lines through the origin."""
    hs = (AffineForm((1, 0), 0), AffineForm((0, 1), 0), AffineForm((1, 1), 0))
    return Arrangement(2, hs, None, "concurrent-lines")


def empty_arrangement(dim: int = 1) -> Arrangement:
    return Arrangement(dim, (), None, "empty")


NAMED = {
    "two-points": two_points,
    "two-points-right": two_points_right_half,
    "generic-lines": generic_lines,
    "concurrent-lines": concurrent_lines,
    "empty": empty_arrangement,
}
