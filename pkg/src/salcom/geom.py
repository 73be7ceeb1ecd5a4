"""Exact rational geometry of affine arrangements restricted to an open polyhedron.

Regions are finite systems of strict (``f > 0``) and equality (``f = 0``)
affine constraints. Feasibility is decided by exact Fourier-Motzkin
elimination on integer-scaled rows, and feasible systems come with a
rational witness in the relative interior of the solution set.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from math import gcd, lcm
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .com import COM
from .errors import InvariantViolation, UsageError
from .signs import SignVector

STRICT = ">"
EQUAL = "="
_RELATIONS = (STRICT, EQUAL)


def parse_rational(value) -> Fraction:
    """Integers or ``"p/q"`` / ``"p"`` strings; floats are rejected."""
    if isinstance(value, bool):
        raise UsageError(f"malformed rational {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            n = int(num)
            d = int(den) if sep else 1
        except ValueError:
            raise UsageError(f"malformed rational {value!r}") from None
        if d == 0:
            raise UsageError(f"zero denominator in {value!r}")
        return Fraction(n, d)
    raise UsageError(f"malformed rational {value!r} (use an integer or a 'p/q' string)")


def format_rational(q: Fraction) -> int | str:
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class AffineForm:
    """f(v) = a . v + b."""

    a: tuple[Fraction, ...]
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(parse_rational(x) for x in self.a))
        object.__setattr__(self, "b", parse_rational(self.b))

    def __hash__(self) -> int:
        return hash(self.int_row)

    @property
    def dim(self) -> int:
        return len(self.a)

    def is_constant(self) -> bool:
        return not any(self.a)

    def __call__(self, v: Sequence[Fraction]) -> Fraction:
        if len(v) != len(self.a):
            raise UsageError(f"point of dimension {len(v)} for form of dimension {len(self.a)}")
        return sum((ai * vi for ai, vi in zip(self.a, v)), self.b)

    def __neg__(self) -> AffineForm:
        return AffineForm(tuple(-x for x in self.a), -self.b)

    def scaled(self, c: Fraction) -> AffineForm:
        return AffineForm(tuple(c * x for x in self.a), c * self.b)

    @cached_property
    def int_row(self) -> tuple[int, ...]:
        """Primitive integer row (a..., b), a positive multiple of the form."""
        vals = self.a + (self.b,)
        den = reduce(lcm, (x.denominator for x in vals), 1)
        row = [int(x * den) for x in vals]
        g = reduce(gcd, row, 0)
        return tuple(x // g for x in row) if g > 1 else tuple(row)

    def to_json(self) -> dict:
        return {"a": [format_rational(x) for x in self.a], "b": format_rational(self.b)}

    @classmethod
    def from_json(cls, obj, dim: Optional[int] = None) -> AffineForm:
        if not isinstance(obj, dict) or "a" not in obj:
            raise UsageError(f"affine form needs an 'a' list: {obj!r}")
        a = obj["a"]
        if not isinstance(a, list):
            raise UsageError(f"'a' must be a list: {obj!r}")
        form = cls(tuple(parse_rational(x) for x in a), parse_rational(obj.get("b", 0)))
        if dim is not None and form.dim != dim:
            raise UsageError(f"form {obj!r} has dimension {form.dim}, expected {dim}")
        return form


@dataclass(frozen=True)
class Constraint:
    form: AffineForm
    rel: str = STRICT

    def __post_init__(self):
        if self.rel not in _RELATIONS:
            raise UsageError(f"relation must be '>' or '=', got {self.rel!r}")

    def holds(self, v: Sequence[Fraction]) -> bool:
        val = self.form(v)
        return val > 0 if self.rel == STRICT else val == 0

    def __str__(self) -> str:
        terms = " + ".join(f"{c}*x{i}" for i, c in enumerate(self.form.a) if c)
        return f"{terms or '0'} + {self.form.b} {self.rel} 0"


@dataclass(frozen=True)
class Region:
    """Intersection of open halfspaces {f > 0} and hyperplanes {f = 0} in Q^dim."""

    dim: int
    constraints: tuple[Constraint, ...] = ()

    def __post_init__(self):
        cs = tuple(self.constraints)
        for c in cs:
            if c.form.dim != self.dim:
                raise UsageError(f"constraint {c} has dimension {c.form.dim}, region has {self.dim}")
        object.__setattr__(self, "constraints", cs)

    def __and__(self, other: Region) -> Region:
        if other.dim != self.dim:
            raise UsageError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return Region(self.dim, self.constraints + other.constraints)

    def with_constraints(self, extra: Iterable[Constraint]) -> Region:
        return Region(self.dim, self.constraints + tuple(extra))

    def contains(self, v: Sequence[Fraction]) -> bool:
        return all(c.holds(v) for c in self.constraints)

    def is_open(self) -> bool:
        return all(c.rel == STRICT for c in self.constraints)

    @cached_property
    def key(self) -> frozenset:
        """Order-free identity of the system, on primitive integer rows."""
        return frozenset((c.form.int_row, c.rel) for c in self.constraints)

    @cached_property
    def _hash(self) -> int:
        return hash((self.dim, tuple((c.form.int_row, c.rel) for c in self.constraints)))

    def __hash__(self) -> int:
        return self._hash

    def to_json(self) -> list:
        return [dict(c.form.to_json(), rel=c.rel) for c in self.constraints]


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: Optional[tuple[Fraction, ...]] = None

    def __bool__(self) -> bool:
        return self.feasible


# ---------------------------------------------------------------------------
# Fourier-Motzkin on primitive integer rows (coefficients..., constant)


def _primitive(row: list[int]) -> tuple[int, ...]:
    g = reduce(gcd, row, 0)
    return tuple(x // g for x in row) if g > 1 else tuple(row)


def _tighten(rows: Iterable[tuple[int, ...]]) -> Optional[list[tuple[int, ...]]]:
    """Keep the tightest strict row per direction; None if a constant row fails."""
    best: dict[tuple[int, ...], int] = {}
    for row in rows:
        coeffs, const = row[:-1], row[-1]
        if not any(coeffs):
            if const <= 0:
                return None
            continue
        g = reduce(gcd, coeffs, 0)
        direction = tuple(c // g for c in coeffs)
        # c.x + k > 0 with c = g*direction  <=>  direction.x + k/g > 0; smaller k/g is tighter
        offset = Fraction(const, g)
        prev = best.get(direction)
        if prev is None or offset < prev:
            best[direction] = offset
    out = []
    for direction, offset in best.items():
        out.append(_primitive([c * offset.denominator for c in direction] + [offset.numerator]))
    return out


def _solve(dim: int, strict: list[tuple[int, ...]], equal: list[tuple[int, ...]]) -> FeasibilityResult:
    # equalities: substitute away the lowest-index variable of each
    subs: list[tuple[int, tuple[int, ...]]] = []
    eqs = list(equal)
    rows = list(strict)
    while eqs:
        eq = eqs.pop()
        k = next((i for i in range(dim) if eq[i]), None)
        if k is None:
            if eq[-1] != 0:
                return FeasibilityResult(False)
            continue
        ck = eq[k]
        sk = 1 if ck > 0 else -1

        def sub(row, _eq=eq, _k=k, _ck=ck, _sk=sk):
            if row[_k] == 0:
                return row
            return _primitive([abs(_ck) * r - _sk * row[_k] * e for r, e in zip(row, _eq)])

        rows = [sub(r) for r in rows]
        eqs = [sub(r) for r in eqs]
        subs.append((k, eq))
    eliminated = {k for k, _ in subs}
    free = [i for i in range(dim) if i not in eliminated]

    current = _tighten(rows)
    if current is None:
        return FeasibilityResult(False)
    levels: list[list[tuple[int, ...]]] = []
    for k in free:
        levels.append(current)
        pos = [r for r in current if r[k] > 0]
        neg = [r for r in current if r[k] < 0]
        nxt = [r for r in current if r[k] == 0]
        for p in pos:
            for q in neg:
                nxt.append(_primitive([-q[k] * a + p[k] * b for a, b in zip(p, q)]))
        current = _tighten(nxt)
        if current is None:
            return FeasibilityResult(False)

    point: list[Optional[Fraction]] = [None] * dim
    for k, sysrows in zip(reversed(free), reversed(levels)):
        lo: Optional[Fraction] = None
        hi: Optional[Fraction] = None
        for r in sysrows:
            c = r[k]
            if c == 0:
                continue
            rest = r[-1] + sum(r[j] * point[j] for j in range(dim) if j != k and r[j])
            bound = Fraction(-rest, c)
            if c > 0:
                lo = bound if lo is None or bound > lo else lo
            else:
                hi = bound if hi is None or bound < hi else hi
        if lo is not None and hi is not None:
            if not lo < hi:
                raise InvariantViolation("back-substitution produced an empty interval", var=k, lo=lo, hi=hi)
            point[k] = (lo + hi) / 2
        elif lo is not None:
            point[k] = lo + 1
        elif hi is not None:
            point[k] = hi - 1
        else:
            point[k] = Fraction(0)
    for k, eq in reversed(subs):
        rest = eq[-1] + sum(eq[j] * point[j] for j in range(dim) if j != k and eq[j])
        point[k] = Fraction(-rest, eq[k])
    return FeasibilityResult(True, tuple(point))


@lru_cache(maxsize=200_000)
def _feasible_cached(region: Region) -> FeasibilityResult:
    strict, equal = [], []
    for c in region.constraints:
        (strict if c.rel == STRICT else equal).append(c.form.int_row)
    result = _solve(region.dim, strict, equal)
    if result.feasible and not region.contains(result.witness):
        raise InvariantViolation("witness violates its region", region=region, witness=result.witness)
    return result


def feasible(region: Region) -> FeasibilityResult:
    """Decide nonemptiness of ``region``; on success return a relative-interior witness."""
    return _feasible_cached(region)


def clear_caches() -> None:
    _feasible_cached.cache_clear()
    _region_subset_cached.cache_clear()


def _complement_pieces(c: Constraint) -> tuple[Constraint, Constraint]:
    f = c.form
    if c.rel == STRICT:
        return Constraint(-f, STRICT), Constraint(f, EQUAL)
    return Constraint(f, STRICT), Constraint(-f, STRICT)


@lru_cache(maxsize=200_000)
def _region_subset_cached(r1: Region, r2: Region) -> bool:
    own = r1.key
    for c in r2.constraints:
        if (c.form.int_row, c.rel) in own:
            continue
        for piece in _complement_pieces(c):
            if feasible(r1.with_constraints([piece])).feasible:
                return False
    return True


def region_subset(r1: Region, r2: Region) -> bool:
    """True iff r1 is contained in r2 (an empty r1 is contained in anything)."""
    if r1.dim != r2.dim:
        raise UsageError(f"dimension mismatch: {r1.dim} vs {r2.dim}")
    return _region_subset_cached(r1, r2)


def region_equal(r1: Region, r2: Region) -> bool:
    return region_subset(r1, r2) and region_subset(r2, r1)


# ---------------------------------------------------------------------------
# arrangements


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


@dataclass(frozen=True)
class Arrangement:
    """Cooriented affine hyperplanes f_e = 0 (positive side f_e > 0) and an open region K."""

    dim: int
    hyperplanes: tuple[AffineForm, ...]
    region: Region = None  # type: ignore[assignment]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        hs = tuple(self.hyperplanes)
        object.__setattr__(self, "hyperplanes", hs)
        region = self.region if self.region is not None else Region(self.dim)
        object.__setattr__(self, "region", region)
        for e, h in enumerate(hs):
            if h.dim != self.dim:
                raise UsageError(f"hyperplane {e} has dimension {h.dim}, arrangement has {self.dim}")
            if h.is_constant():
                raise UsageError(f"hyperplane {e} has a zero normal vector")
        if region.dim != self.dim:
            raise UsageError(f"region has dimension {region.dim}, arrangement has {self.dim}")
        for c in region.constraints:
            if c.rel != STRICT:
                raise UsageError(f"region constraint {c} is not strict; K must be open")
        if not feasible(region):
            bad = _first_blocking(region)
            raise UsageError(f"K must be nonempty; infeasible at constraint {bad}")

    @property
    def size(self) -> int:
        return len(self.hyperplanes)

    def is_full_space(self) -> bool:
        """K = V: every region constraint is a tautology (constant and positive)."""
        return all(c.form.is_constant() and c.form.b > 0 for c in self.region.constraints)

    def with_region(self, region: Region) -> Arrangement:
        return Arrangement(self.dim, self.hyperplanes, region, self.name)

    def with_name(self, name: str) -> Arrangement:
        return Arrangement(self.dim, self.hyperplanes, self.region, name)

    def sign_of(self, v: Sequence[Fraction]) -> SignVector:
        return SignVector.from_signs(_sign(h(v)) for h in self.hyperplanes)

    def face_constraints(self, x: SignVector) -> list[Constraint]:
        if x.n != self.size:
            raise UsageError(f"sign vector of length {x.n} for {self.size} hyperplanes")
        out = []
        for e, h in enumerate(self.hyperplanes):
            s = x[e]
            if s > 0:
                out.append(Constraint(h, STRICT))
            elif s < 0:
                out.append(Constraint(-h, STRICT))
            else:
                out.append(Constraint(h, EQUAL))
        return out

    def face_region(self, x: SignVector) -> Region:
        """F_X intersected with K."""
        return self.region.with_constraints(self.face_constraints(x))

    # serialization --------------------------------------------------------

    def to_json(self) -> dict:
        out = {"dim": self.dim, "hyperplanes": [h.to_json() for h in self.hyperplanes]}
        if self.region.constraints:
            out["region"] = self.region.to_json()
        return out

    @classmethod
    def from_json(cls, obj, name: str = "") -> Arrangement:
        if not isinstance(obj, dict):
            raise UsageError("arrangement must be a JSON object")
        dim = obj.get("dim")
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
            raise UsageError(f"'dim' must be a non-negative integer, got {dim!r}")
        hs_raw = obj.get("hyperplanes", [])
        if not isinstance(hs_raw, list):
            raise UsageError("'hyperplanes' must be a list")
        hs = []
        for i, h in enumerate(hs_raw):
            try:
                hs.append(AffineForm.from_json(h, dim))
            except UsageError as exc:
                raise UsageError(f"hyperplane {i}: {exc}") from None
        constraints = []
        for i, c in enumerate(obj.get("region", []) or []):
            try:
                form = AffineForm.from_json(c, dim)
                rel = c.get("rel", STRICT)
                constraints.append(Constraint(form, rel))
            except UsageError as exc:
                raise UsageError(f"region constraint {i}: {exc}") from None
        return cls(dim, tuple(hs), Region(dim, tuple(constraints)), name)

    @classmethod
    def load(cls, path: str | Path) -> Arrangement:
        path = Path(path)
        try:
            text = path.read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
        return cls.from_json(obj, name=path.stem)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"


def _first_blocking(region: Region) -> Constraint | str:
    """The first constraint whose addition makes the prefix system infeasible."""
    for i in range(len(region.constraints)):
        if not feasible(Region(region.dim, region.constraints[: i + 1])):
            return region.constraints[i]
    return "<none>"


# ---------------------------------------------------------------------------
# covector enumeration


@dataclass(frozen=True)
class Enumeration:
    com: COM
    witnesses: dict  # SignVector -> tuple[Fraction, ...]


def _check_region_nonempty(arr: Arrangement) -> FeasibilityResult:
    res = feasible(arr.region)
    if not res:
        raise UsageError("K must be nonempty")
    return res


def enumerate_covectors(arr: Arrangement) -> Enumeration:
    """All X with F_X meeting K, each with a witness point in F_X and K.

    Depth-first over hyperplanes; a partial assignment is extended only while
    its region is feasible. The child whose sign matches the parent's witness
    reuses that witness instead of a new feasibility call.
    """
    root = _check_region_nonempty(arr)
    n = arr.size
    hs = arr.hyperplanes
    found: dict[SignVector, tuple[Fraction, ...]] = {}

    def extend(e: int, constraints: tuple[Constraint, ...], signs: tuple[int, ...], witness):
        if e == n:
            found[SignVector.from_signs(signs)] = witness
            return
        h = hs[e]
        here = _sign(h(witness))
        for s in (-1, 0, 1):
            c = Constraint(h, EQUAL) if s == 0 else Constraint(h if s > 0 else -h, STRICT)
            cs = constraints + (c,)
            if s == here:
                extend(e + 1, cs, signs + (s,), witness)
                continue
            res = feasible(Region(arr.dim, cs))
            if res:
                extend(e + 1, cs, signs + (s,), res.witness)

    extend(0, arr.region.constraints, (), root.witness)
    return Enumeration(COM(found, n=n), found)


def enumerate_covectors_exhaustive(arr: Arrangement) -> COM:
    """Reference scan over all 3^|E| sign vectors (no pruning)."""
    from itertools import product

    _check_region_nonempty(arr)
    n = arr.size
    out = []
    for signs in product((-1, 0, 1), repeat=n):
        x = SignVector.from_signs(signs)
        if feasible(arr.face_region(x)):
            out.append(x)
    return COM(out, n=n)


def subregion(arr: Arrangement, x: SignVector, t: SignVector) -> Region:
    """K cut by sign(T_e) f_e > 0 for every hyperplane e vanishing on X."""
    if x.n != arr.size or t.n != arr.size:
        raise UsageError("sign vectors must have one entry per hyperplane")
    extra = []
    for e in sorted(x.zeros()):
        s = t[e]
        if s == 0:
            raise UsageError(f"T vanishes at coordinate {e}, a zero of X; component undefined")
        h = arr.hyperplanes[e]
        extra.append(Constraint(h if s > 0 else -h, STRICT))
    return arr.region.with_constraints(extra)
