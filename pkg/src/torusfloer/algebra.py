"""
The torus algebra and the exact coefficient arithmetic used everywhere else.

Basis symbols of the torus algebra are the strings

    i0, i1, r1, r2, r3, r12, r23, r123

with idempotent typing r1 = i0.r1.i1, r2 = i1.r2.i0, r3 = i0.r3.i1,
r12 = i0.r12.i0, r23 = i1.r23.i1, r123 = i0.r123.i1.  The only nonzero
products of chords are

    r1.r2 = r12,  r2.r3 = r23,  r1.r23 = r123,  r12.r3 = r123.

Coefficients live in F2, in the Laurent ring F2[t, t^-1] (LaurentPoly) or in
its fraction field F2(t) (RationalFn).  Polynomials over F2 are stored as
Python integers: bit k is the coefficient of t^k.
"""
from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

IDEMPOTENTS = ("i0", "i1")
CHORDS = ("r1", "r2", "r3", "r12", "r23", "r123")
BASIS = IDEMPOTENTS + CHORDS

LEFT = {"i0": "i0", "i1": "i1",
        "r1": "i0", "r2": "i1", "r3": "i0",
        "r12": "i0", "r23": "i1", "r123": "i0"}
RIGHT = {"i0": "i0", "i1": "i1",
         "r1": "i1", "r2": "i0", "r3": "i1",
         "r12": "i0", "r23": "i1", "r123": "i1"}

_CHORD_PRODUCTS = {("r1", "r2"): "r12",
                   ("r2", "r3"): "r23",
                   ("r1", "r23"): "r123",
                   ("r12", "r3"): "r123"}


def basis_mul(a: str, b: str) -> str | None:
    """Product of two basis symbols, or None when it vanishes."""
    if a in IDEMPOTENTS:
        return b if LEFT[b] == a else None
    if b in IDEMPOTENTS:
        return a if RIGHT[a] == b else None
    return _CHORD_PRODUCTS.get((a, b))


def labels_between(src_idem: str, dst_idem: str) -> tuple[str, ...]:
    """Chords c with src_idem.c.dst_idem = c."""
    return tuple(c for c in CHORDS if LEFT[c] == src_idem and RIGHT[c] == dst_idem)


class AlgebraElement:
    """An F2-linear combination of basis symbols, stored as the set of symbols
    with coefficient one."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[str] = ()):
        acc: set[str] = set()
        for s in terms:
            if s not in LEFT:
                raise ValueError(f"unknown torus algebra basis symbol {s!r}")
            acc ^= {s}
        self.terms = frozenset(acc)

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return alg_mul(self, other)

    def __eq__(self, other):
        if isinstance(other, str):
            other = AlgebraElement([other])
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(s for s in BASIS if s in self.terms)


def alg_mul(a: AlgebraElement | str, b: AlgebraElement | str) -> AlgebraElement:
    if isinstance(a, str):
        a = AlgebraElement([a])
    if isinstance(b, str):
        b = AlgebraElement([b])
    out = []
    for x, y in product(a.terms, b.terms):
        z = basis_mul(x, y)
        if z is not None:
            out.append(z)
    return AlgebraElement(out)


# --- polynomials over F2 as integers --------------------------------------

def clmul(a: int, b: int) -> int:
    """Carry-less product, i.e. multiplication in F2[t]."""
    if a < b:
        a, b = b, a
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    q = 0
    db = b.bit_length()
    while a and a.bit_length() >= db:
        shift = a.bit_length() - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return a


def _trailing_zeros(a: int) -> int:
    return (a & -a).bit_length() - 1


class LaurentPoly:
    """Element of F2[t, t^-1]: t^low * (polynomial with bits `bits`).

    Canonical form keeps `bits` odd (no stored zero coefficient below the
    lowest term); the zero element has bits == 0 and low == 0.
    """

    __slots__ = ("bits", "low")

    def __init__(self, bits: int = 0, low: int = 0):
        if bits < 0:
            raise ValueError("bits must be nonnegative")
        if bits == 0:
            low = 0
        else:
            tz = _trailing_zeros(bits)
            bits >>= tz
            low += tz
        self.bits = bits
        self.low = low

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> LaurentPoly:
        exps = list(exps)
        if not exps:
            return cls()
        lo = min(exps)
        bits = 0
        for e in exps:
            bits ^= 1 << (e - lo)
        return cls(bits, lo)

    @classmethod
    def monomial(cls, k: int) -> LaurentPoly:
        return cls(1, k)

    @classmethod
    def coerce(cls, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, bool)):
            return cls(int(x) & 1)
        raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")

    def exponents(self) -> list[int]:
        out, b, k = [], self.bits, self.low
        while b:
            if b & 1:
                out.append(k)
            b >>= 1
            k += 1
        return out

    @property
    def high(self) -> int:
        return self.low + self.bits.bit_length() - 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def is_monomial(self) -> bool:
        return self.bits == 1

    def at_one(self) -> int:
        """Evaluate at t = 1 (an element of F2)."""
        return bin(self.bits).count("1") & 1

    def __add__(self, other) -> LaurentPoly:
        other = LaurentPoly.coerce(other)
        if not self.bits:
            return other
        if not other.bits:
            return self
        lo = min(self.low, other.low)
        return LaurentPoly((self.bits << (self.low - lo)) ^ (other.bits << (other.low - lo)), lo)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other) -> LaurentPoly:
        other = LaurentPoly.coerce(other)
        return LaurentPoly(clmul(self.bits, other.bits), self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_monomial():
                raise ZeroDivisionError("only monomials are units in F2[t, t^-1]")
            return LaurentPoly(1, self.low * n)
        out = LaurentPoly(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, bool)):
            other = LaurentPoly.coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.bits == other.bits and self.low == other.low

    def __hash__(self):
        return hash((self.bits, self.low))

    def __bool__(self):
        return self.bits != 0

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self.bits:
            return "0"
        parts = []
        for e in self.exponents():
            parts.append("1" if e == 0 else "t" if e == 1 else f"t^{e}")
        return "+".join(parts)

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse sums of monomials such as ``1``, ``t``, ``t^-2``, ``1+t^3``, ``0``."""
        text = text.replace(" ", "")
        if not text:
            raise ValueError("empty coefficient")
        acc = cls()
        for term in text.split("+"):
            if term == "0":
                continue
            if term == "1":
                acc = acc + cls(1)
            elif term == "t":
                acc = acc + cls(1, 1)
            elif term.startswith("t^"):
                try:
                    acc = acc + cls(1, int(term[2:]))
                except ValueError:
                    raise ValueError(f"bad exponent in {term!r}") from None
            else:
                raise ValueError(f"bad Laurent monomial {term!r}")
        return acc


T = LaurentPoly(1, 1)
ONE = LaurentPoly(1)
ZERO = LaurentPoly()


class RationalFn:
    """Element of the field F2(t), kept in lowest terms with a denominator that
    is a genuine polynomial with constant term one."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num.bits, den.bits) if num.bits else den.bits
        nb = poly_divmod(num.bits, g)[0]
        db = poly_divmod(den.bits, g)[0]
        # bits are odd so g is odd and the quotients stay odd
        self.num = LaurentPoly(nb, num.low - den.low) if nb else ZERO
        self.den = LaurentPoly(db) if nb else ONE

    @classmethod
    def coerce(cls, x) -> RationalFn:
        if isinstance(x, RationalFn):
            return x
        return cls(x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other) -> RationalFn:
        other = RationalFn.coerce(other)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other) -> RationalFn:
        other = RationalFn.coerce(other)
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFn:
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return RationalFn(self.den, self.num)

    def __truediv__(self, other) -> RationalFn:
        return self * RationalFn.coerce(other).inverse()

    def __rtruediv__(self, other) -> RationalFn:
        return RationalFn.coerce(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, bool, LaurentPoly)):
            other = RationalFn(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.den == ONE:
            return f"RationalFn({self.num})"
        return f"RationalFn(({self.num})/({self.den}))"


# --- exact rank ------------------------------------------------------------

def rank_f2_bitrows(rows: Iterable[int]) -> int:
    """Rank over F2 of row vectors given as integer bitmasks."""
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = row
                break
            row ^= p
    return len(pivots)


def rank_f2(M: Sequence[Sequence]) -> int:
    """Rank over F2 of a matrix whose entries are 0/1 (or anything with a
    truthy parity)."""
    rows = []
    for r in M:
        bits = 0
        for j, x in enumerate(r):
            if int(x) & 1:
                bits |= 1 << j
        rows.append(bits)
    return rank_f2_bitrows(rows)


def _to_poly_rows(M) -> list[list[int]]:
    """Scale each row by a unit-free factor so that all entries are genuine
    polynomials in F2[t] (ints).  Row scaling by nonzero elements preserves
    rank."""
    out = []
    for r in M:
        ents = [RationalFn.coerce(x) if not isinstance(x, RationalFn) else x for x in r]
        den = 1
        for x in ents:
            if not x.is_zero():
                d = x.den.bits
                den = clmul(den, poly_divmod(d, poly_gcd(den, d))[0])
        nums = []
        for x in ents:
            if x.is_zero():
                nums.append(None)
                continue
            factor = poly_divmod(den, x.den.bits)[0]
            nums.append(LaurentPoly(clmul(x.num.bits, factor), x.num.low))
        lows = [p.low for p in nums if p is not None]
        shift = min(lows) if lows else 0
        out.append([0 if p is None else p.bits << (p.low - shift) for p in nums])
    return out


def rank_f2t(M: Sequence[Sequence]) -> int:
    """Rank over F2(t) by fraction-free elimination over F2[t]."""
    rows = [r for r in _to_poly_rows(M) if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        cands = [i for i in range(rank, len(rows)) if rows[i][c]]
        if not cands:
            continue
        piv = min(cands, key=lambda i: rows[i][c].bit_length())
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        pc = prow[c]
        for i in range(rank + 1, len(rows)):
            e = rows[i][c]
            if not e:
                continue
            new = [clmul(pc, a) ^ clmul(e, b) for a, b in zip(rows[i], prow)]
            g = 0
            for a in new:
                if a:
                    g = poly_gcd(g, a) if g else a
            if g and g != 1:
                new = [poly_divmod(a, g)[0] if a else 0 for a in new]
            rows[i] = new
        rank += 1
        if rank == len(rows):
            break
    return rank


def matrix_rank(M: Sequence[Sequence], field: str | None = None) -> int:
    """Rank of a finite rectangular matrix over F2 or F2(t).

    ``field`` is ``"F2"`` or ``"RationalFn"``; when omitted it is inferred
    from the entries (any LaurentPoly or RationalFn entry means F2(t)).
    """
    M = [list(r) for r in M]
    if field is None:
        field = "F2"
        for r in M:
            if any(isinstance(x, (LaurentPoly, RationalFn)) for x in r):
                field = "RationalFn"
                break
    if field == "F2":
        for r in M:
            for x in r:
                if isinstance(x, (LaurentPoly, RationalFn)):
                    raise TypeError("F2 rank requested for a matrix with polynomial entries; "
                                    "specialize it first")
        return rank_f2(M)
    if field == "RationalFn":
        return rank_f2t(M)
    raise ValueError(f"unknown field {field!r}")


def specialize_at_one(M: Sequence[Sequence]) -> list[list[int]]:
    """Evaluate a matrix of Laurent polynomials at t = 1."""
    return [[LaurentPoly.coerce(x).at_one() for x in r] for r in M]
