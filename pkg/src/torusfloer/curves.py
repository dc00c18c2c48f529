"""
Immersed multicurves in the punctured torus and their type D structures.

Coordinates: the punctured torus is the unit square with opposite sides
identified and the puncture z at the corners.  The rational longitude is
always the horizontal direction.  A curve component is a cyclic word in

    l = horizontal generator (crosses the vertical edge left to right)
    m = vertical generator (crosses the horizontal edge bottom to top)

with capitals L, M for the inverses.  Crossings of the vertical edge carry
idempotent i0 and crossings of the horizontal edge carry i1.  Each stretch
of curve between consecutive crossings cuts the square into two pieces.
The corners on the side away from corner 0 (bottom left) name the chord
labelling the arrow.  Corners are numbered 0 = bottom left, 1 = top left,
2 = top right, 3 = bottom right.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .structures import TypeD, direct_sum

LETTERS = "lLmM"
_INVERSE = {"l": "L", "L": "l", "m": "M", "M": "m"}


class UnsupportedCurveError(ValueError):
    """The curve class is outside the implemented curve-to-type-D dictionary."""


def free_reduce(word: str) -> str:
    out: list[str] = []
    for ch in word:
        if ch not in _INVERSE:
            raise ValueError(f"bad letter {ch!r} in curve word (use l, L, m, M)")
        if out and out[-1] == _INVERSE[ch]:
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def cyclic_reduce(word: str) -> str:
    w = free_reduce(word)
    while len(w) >= 2 and w[0] == _INVERSE[w[-1]]:
        w = w[1:-1]
    return w


def invert(word: str) -> str:
    return "".join(_INVERSE[c] for c in reversed(word))


def cyclically_equal(u: str, v: str) -> bool:
    return len(u) == len(v) and u in v + v


def primitive_root(word: str) -> tuple[str, int]:
    """(r, j) with word == r * j and j maximal."""
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d], n // d
    return word, 1


@dataclass(frozen=True)
class Slope:
    """The slope p/q of the direction (q, p); (q, p) = (1, 0) is the longitude."""
    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if p == 0 and q == 0:
            raise ValueError("slope (0, 0) is undefined")
        g = math.gcd(p, q)
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __str__(self):
        return f"{self.p}/{self.q}"


LONGITUDE = Slope(0, 1)
MERIDIAN = Slope(1, 0)


def distance(s1: Slope, s2: Slope) -> int:
    return abs(s1.p * s2.q - s2.p * s1.q)


def line_intersection_dim(s1: Slope, s2: Slope, parallel_value: int = 2) -> int:
    """|p1 q2 - p2 q1|, or ``parallel_value`` for parallel slopes."""
    d = distance(s1, s2)
    return d if d else parallel_value


def staircase_word(s: Slope) -> str:
    """Cutting sequence of a straight closed curve of slope s avoiding the corners."""
    p, q = s.p, s.q
    if q == 0:
        return "m"
    c = Fraction(1, 2 * q)
    events: list[tuple[Fraction, str]] = [(Fraction(i, q), "l") for i in range(1, q + 1)]
    if p > 0:
        for n in range(math.ceil(c), math.floor(c + p) + 1):
            if c < n <= c + p:
                events.append(((n - c) / p, "m"))
    elif p < 0:
        for n in range(math.ceil(c + p), math.floor(c) + 1):
            if c + p <= n < c:
                events.append(((n - c) / p, "M"))
    events.sort()
    return "".join(ch for _, ch in events)


@dataclass(frozen=True)
class CurveComponent:
    word: str
    through_basepoint: bool = False

    def __post_init__(self):
        if not self.word:
            raise ValueError("curve component word must be nonempty")
        if any(ch not in _INVERSE for ch in self.word):
            raise ValueError(f"bad curve word {self.word!r}")
        if cyclic_reduce(self.word) != self.word:
            raise ValueError(f"curve word {self.word!r} is not cyclically reduced")

    @classmethod
    def from_word(cls, word: str, through_basepoint: bool = False) -> CurveComponent:
        """Reduce freely and cyclically first; a null-homotopic word is rejected."""
        w = cyclic_reduce(word)
        if not w:
            raise ValueError(f"curve word {word!r} is null-homotopic")
        return cls(w, through_basepoint)

    def homology_class(self) -> tuple[int, int]:
        w = self.word
        return (w.count("l") - w.count("L"), w.count("m") - w.count("M"))


@dataclass(frozen=True)
class MultiCurve:
    components: tuple[CurveComponent, ...] = ()

    def __post_init__(self):
        comps = tuple(self.components)
        if sum(c.through_basepoint for c in comps) > 1:
            raise ValueError("at most one component may pass through the basepoint")
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_words(cls, words: Iterable[str]) -> MultiCurve:
        comps = []
        for w in words:
            w = w.strip()
            flag = w.endswith("@z")
            if flag:
                w = w[:-2].strip()
            comps.append(CurveComponent.from_word(w, flag))
        return cls(tuple(comps))

    def __len__(self):
        return len(self.components)


def _as_component(c) -> CurveComponent:
    return c if isinstance(c, CurveComponent) else CurveComponent.from_word(c)


def is_longitude_power(c: CurveComponent | str) -> int | None:
    """The exponent j when the component is homotopic to l^j, else None."""
    w = _as_component(c).word
    if set(w) <= {"l"}:
        return len(w)
    if set(w) <= {"L"}:
        return -len(w)
    return None


def supported_near_longitude(C: MultiCurve) -> bool:
    return all(is_longitude_power(c) is not None for c in C.components)


def commensurable(c1: CurveComponent | str, c2: CurveComponent | str) -> bool:
    r1, _ = primitive_root(_as_component(c1).word)
    r2, _ = primitive_root(_as_component(c2).word)
    return cyclically_equal(r1, r2) or cyclically_equal(r1, invert(r2))


def line_class(c: CurveComponent | str) -> tuple[Slope, int] | None:
    """(slope, j) when the component is the j-fold cover of a straight line of
    that slope, else None."""
    w = _as_component(c).word
    if ("l" in w and "L" in w) or ("m" in w and "M" in w):
        return None
    a, b = _as_component(c).homology_class()
    j = math.gcd(a, b)
    if j == 0:
        return None
    s = Slope(b // j, a // j)
    stair = staircase_word(s)
    if (s.q, s.p) != (a // j, b // j):
        stair = invert(stair)
    if cyclically_equal(w, stair * j):
        return s, j
    return None


# --- the curve to type D dictionary ---------------------------------------

# side entered after crossing a letter, side left when crossing it
_ENTRY = {"l": "L", "L": "R", "m": "B", "M": "T"}
_EXIT = {"l": "R", "L": "L", "m": "T", "M": "B"}
# sides and corners in counterclockwise order around the square
_CCW = ["B", 3, "R", 2, "T", 1, "L", 0]
_CHORD_OF = {frozenset({1}): "r1", frozenset({2}): "r2", frozenset({3}): "r3",
             frozenset({1, 2}): "r12", frozenset({2, 3}): "r23",
             frozenset({1, 2, 3}): "r123"}


def _left_corners(entry: str, exit_: str) -> frozenset[int]:
    # corners on the left of a chord entry -> exit: the ccw boundary arc from
    # the exit side back to the entry side
    i = _CCW.index(exit_)
    out = set()
    while True:
        i = (i + 1) % len(_CCW)
        item = _CCW[i]
        if item == entry:
            return frozenset(out)
        if isinstance(item, int):
            out.add(item)


def segment_arrow(prev_letter: str, next_letter: str) -> tuple[bool, str]:
    """For the stretch of curve after crossing ``prev_letter`` and before
    crossing ``next_letter``: (forward, chord).  ``forward`` says the arrow
    runs from the earlier crossing to the later one."""
    entry, exit_ = _ENTRY[prev_letter], _EXIT[next_letter]
    if entry == exit_:
        raise ValueError("word is not reduced: the curve backtracks across an edge")
    left = _left_corners(entry, exit_)
    if 0 in left:
        return False, _CHORD_OF[frozenset({0, 1, 2, 3}) - left]
    return True, _CHORD_OF[left]


def word_to_typeD(word: str, prefix: str = "x") -> TypeD:
    """Type D structure read off the edge crossings of a cyclically reduced word."""
    w = cyclic_reduce(word)
    if w != word or not w:
        raise ValueError(f"word {word!r} must be nonempty and cyclically reduced")
    n = len(w)
    gens = tuple((f"{prefix}{i}", "i0" if w[i] in "lL" else "i1") for i in range(n))
    arrows = []
    for i in range(n):
        j = (i + 1) % n
        forward, chord = segment_arrow(w[i], w[j])
        a, b = (f"{prefix}{i}", f"{prefix}{j}") if forward else (f"{prefix}{j}", f"{prefix}{i}")
        arrows.append((a, chord, b))
    return TypeD(gens, tuple(arrows))


def component_to_typeD(c: CurveComponent | str, prefix: str = "x") -> TypeD:
    c = _as_component(c)
    if line_class(c) is None:
        raise UnsupportedCurveError(
            f"dictionary not implemented for this class: {c.word!r} is neither a power of "
            f"the longitude, a power of m, nor a multiple of a straight line")
    return word_to_typeD(c.word, prefix)


def curve_to_typeD(C: MultiCurve | CurveComponent | str) -> TypeD:
    """Disjoint union of the component type D structures.

    Pulling a straight line tight through the basepoint does not change its
    class in the punctured torus, so through-basepoint components use the
    same dictionary.
    """
    if not isinstance(C, MultiCurve):
        C = MultiCurve((_as_component(C),))
    parts = [component_to_typeD(c, prefix=f"c{k}x") for k, c in enumerate(C.components)]
    if not parts:
        return TypeD(())
    return direct_sum(*parts)


def line_typeD(s: Slope) -> TypeD:
    """Type D structure of the simple closed curve of slope s (a solid torus
    whose meridian has slope s)."""
    return word_to_typeD(staircase_word(s), prefix="w")
