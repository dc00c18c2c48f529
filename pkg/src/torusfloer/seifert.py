"""
Seifert fibered rational homology solid tori over the disk or the Mobius band.

A datum is a base surface and a list of unnormalized Seifert invariants
r_i = beta_i / alpha_i.  On the boundary torus we use the basis
(s, h): s is the boundary of the section over the base and h the regular
fiber.  In rational homology every cone loop c_i equals -r_i h.  Over the
disk s = sum c_i = -e h with e = sum r_i, so the rational longitude is
den(e) * s + num(e) * h and its distance to the fiber slope is den(e).

With boundary, each r_i is only defined modulo 1: moving the section near
the boundary shifts any single r_i by an integer.  So e is bookkeeping for
one presentation, and the invariant content is (base, {alpha_i}, e mod 1).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

BASES = ("disk", "mobius")


@dataclass(frozen=True)
class SeifertData:
    base: str
    cone_points: tuple[Fraction, ...] = ()
    # sum of all invariants, including integer ones absorbed by normalize()
    e: Fraction | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.base not in BASES:
            raise ValueError(f"base must be one of {BASES}, not {self.base!r}")
        cps = tuple(Fraction(r) for r in self.cone_points)
        object.__setattr__(self, "cone_points", cps)
        if self.e is None:
            object.__setattr__(self, "e", sum(cps, Fraction(0)))
        else:
            object.__setattr__(self, "e", Fraction(self.e))

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(sorted(r.denominator for r in self.cone_points))

    def __str__(self):
        cones = ",".join(str(r) if r.denominator != 1 else f"{r.numerator}/1"
                         for r in self.cone_points)
        return f"base={self.base}; cones={cones}"


def normalize(d: SeifertData) -> SeifertData:
    """Drop integer invariants (regular fibers), keeping their sum in e."""
    kept = tuple(r for r in d.cone_points if r.denominator != 1)
    return SeifertData(d.base, kept, d.e)


@dataclass(frozen=True)
class LongitudeData:
    e: Fraction
    # rational longitude as a * s + b * h
    longitude: tuple[int, int]
    delta: int                   # distance from the fiber slope h = (0, 1)


def euler_and_longitude(d: SeifertData) -> LongitudeData:
    d = normalize(d)
    if d.base == "mobius":
        return LongitudeData(d.e, (0, 1), 0)
    return LongitudeData(d.e, (d.e.denominator, d.e.numerator), d.e.denominator)


@dataclass(frozen=True)
class SeifertVerdict:
    is_hfst: bool
    reason: str        # solid_torus | mobius_base | zero_euler_pair | generic_disk_base
    delta: int
    filled_form: str
    longitude: tuple[int, int]

    def as_text(self, d: SeifertData | None = None) -> str:
        lines = [f"is_hfst: {str(self.is_hfst).lower()}", f"reason: {self.reason}"]
        if d is not None:
            n = normalize(d)
            lines += [f"base: {n.base}",
                      f"cone_orders: {','.join(map(str, n.orders))}",
                      f"euler: {n.e}"]
        lines += [f"delta: {self.delta}",
                  f"rational_longitude: {self.longitude[0]},{self.longitude[1]}",
                  f"filled_form: {self.filled_form}"]
        return "\n".join(lines) + "\n"


def classify(d: SeifertData) -> SeifertVerdict:
    n = normalize(d)
    lon = euler_and_longitude(n)
    if n.base == "mobius":
        return SeifertVerdict(True, "mobius_base", 0,
                              "M(fiber) contains a non-separating 2-sphere", lon.longitude)
    orders = list(n.orders)
    if lon.delta != 1:
        orders.append(lon.delta)
    form = "S^2(" + ",".join(map(str, sorted(orders))) + ")" if orders else "S^2"
    k = len(n.cone_points)
    if k <= 1:
        return SeifertVerdict(True, "solid_torus", lon.delta, form, lon.longitude)
    if k == 2 and lon.delta == 1:
        # e is an integer, so after shifting r_2 by an integer the pair is (r, -r)
        return SeifertVerdict(True, "zero_euler_pair", lon.delta, form, lon.longitude)
    return SeifertVerdict(False, "generic_disk_base", lon.delta, form, lon.longitude)


# --- first homology of fillings, by Smith normal form ----------------------

def filling_presentation(d: SeifertData, a: int, b: int) -> list[list[int]]:
    """Relation matrix of H_1 of the filling along a*s + b*h.

    Disk base: generators c_1..c_k, h.  Mobius base: generators x, c_1..c_k, h
    with x the core of the band (x h x^-1 = h^-1, boundary s = x^2 c_1..c_k).
    """
    rs = list(d.cone_points)
    k = len(rs)
    if d.base == "disk":
        rows = []
        for i, r in enumerate(rs):
            row = [0] * (k + 1)
            row[i] = r.denominator
            row[k] = r.numerator
            rows.append(row)
        rows.append([a] * k + [b])
        return rows
    rows = [[0] * (k + 1) + [2]]
    for i, r in enumerate(rs):
        row = [0] * (k + 2)
        row[1 + i] = r.denominator
        row[k + 1] = r.numerator
        rows.append(row)
    rows.append([2 * a] + [a] * k + [b])
    return rows


def h1_invariants(rows: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors of Z^n / rowspace, with 0 for each free summand
    (1's dropped)."""
    n = len(rows[0])
    M = Matrix(rows)
    snf = smith_normal_form(M, domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    diag += [0] * (n - len(diag))
    return [x for x in diag if x != 1]


def filling_h1(d: SeifertData, a: int, b: int) -> list[int]:
    return h1_invariants(filling_presentation(d, a, b))


def random_seifert(rng: random.Random, base: str | None = None, max_cones: int = 4,
                   max_alpha: int = 7, integer_prob: float = 0.2) -> SeifertData:
    base = base or rng.choice(BASES)
    cones = []
    for _ in range(rng.randint(0, max_cones)):
        if rng.random() < integer_prob:
            cones.append(Fraction(rng.randint(-3, 3)))
        else:
            alpha = rng.randint(2, max_alpha)
            beta = rng.choice([b for b in range(-2 * alpha, 2 * alpha + 1) if b % alpha])
            cones.append(Fraction(beta, alpha))
    return SeifertData(base, tuple(cones))


def parse_seifert(text: str) -> SeifertData:
    """Parse ``base=disk|mobius; cones=b1/a1,b2/a2,...``."""
    fields: dict[str, str] = {}
    for part in text.strip().split(";"):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ValueError(f"expected key=value, got {part!r}")
        key, val = (s.strip() for s in part.split("=", 1))
        if key not in ("base", "cones") or key in fields:
            raise ValueError(f"unexpected or repeated key {key!r}")
        fields[key] = val
    if "base" not in fields:
        raise ValueError("missing base=")
    cones = []
    for tok in fields.get("cones", "").split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            r = Fraction(tok)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad cone point {tok!r}") from None
        cones.append(r)
    return SeifertData(fields["base"], tuple(cones))
