"""
Type D structures and A-infinity modules over the torus algebra.

Everything here is finite data.  A TypeD stores its structure map as a list
of arrows (src, label, dst), read as ``label (x) dst`` appearing in
delta^1(src); repeated arrows cancel in pairs.  An AInftyMod stores the
actions m_{k+1}(x, a_1, ..., a_k) = sum c * y with c a Laurent polynomial
(constants only when ``ring == "F2"``).
"""
from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .algebra import (CHORDS, IDEMPOTENTS, LEFT, RIGHT, LaurentPoly, ONE, T,
                      basis_mul, labels_between)


class StructureError(ValueError):
    """A malformed or invalid structure was passed where a valid one is required."""


@dataclass(frozen=True)
class TypeD:
    generators: tuple[tuple[str, str], ...]
    arrows: tuple[tuple[str, str, str], ...] = ()

    def __post_init__(self):
        gens = tuple((str(n), str(i)) for n, i in self.generators)
        names = [n for n, _ in gens]
        if len(set(names)) != len(names):
            raise StructureError("duplicate generator names")
        for n, i in gens:
            if i not in IDEMPOTENTS:
                raise StructureError(f"generator {n}: idempotent must be i0 or i1, not {i!r}")
        known = set(names)
        counts = Counter()
        order = []
        for src, lab, dst in self.arrows:
            if src not in known or dst not in known:
                raise StructureError(f"arrow {src} -{lab}-> {dst} mentions an unknown generator")
            if lab not in LEFT:
                raise StructureError(f"arrow {src} -{lab}-> {dst}: unknown algebra element")
            key = (src, lab, dst)
            if key not in counts:
                order.append(key)
            counts[key] += 1
        arrows = tuple(k for k in order if counts[k] % 2)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "arrows", arrows)

    @classmethod
    def from_delta(cls, generators: Iterable[tuple[str, str]],
                   delta: Mapping[str, Iterable[tuple[str, str]]]) -> TypeD:
        arrows = [(x, a, y) for x, terms in delta.items() for a, y in terms]
        return cls(tuple(generators), tuple(arrows))

    @property
    def names(self) -> list[str]:
        return [n for n, _ in self.generators]

    @property
    def idem(self) -> dict[str, str]:
        return dict(self.generators)

    def delta(self, x: str) -> list[tuple[str, str]]:
        return [(a, y) for s, a, y in self.arrows if s == x]

    def delta_map(self) -> dict[str, list[tuple[str, str]]]:
        out: dict[str, list[tuple[str, str]]] = {n: [] for n in self.names}
        for s, a, y in self.arrows:
            out[s].append((a, y))
        return out

    def __len__(self):
        return len(self.generators)

    def renamed(self, mapping: Mapping[str, str] | str) -> TypeD:
        """Rename generators by a mapping, or prefix every name with a string."""
        if isinstance(mapping, str):
            prefix = mapping
            mapping = {n: prefix + n for n in self.names}
        return TypeD(tuple((mapping[n], i) for n, i in self.generators),
                     tuple((mapping[s], a, mapping[d]) for s, a, d in self.arrows))


def direct_sum(*parts: TypeD) -> TypeD:
    gens, arrows = [], []
    for P in parts:
        gens.extend(P.generators)
        arrows.extend(P.arrows)
    return TypeD(tuple(gens), tuple(arrows))


@dataclass(frozen=True)
class AInftyMod:
    generators: tuple[tuple[str, str], ...]
    actions: tuple[tuple[str, tuple[str, ...], LaurentPoly, str], ...] = ()
    ring: str = "F2"
    # when set, the stored actions are the complete list of actions with at
    # most this many algebra inputs, of a module with infinitely many actions
    truncated_at: int | None = None

    def __post_init__(self):
        if self.ring not in ("F2", "laurent"):
            raise StructureError(f"unknown coefficient ring {self.ring!r}")
        gens = tuple((str(n), str(i)) for n, i in self.generators)
        names = [n for n, _ in gens]
        if len(set(names)) != len(names):
            raise StructureError("duplicate generator names")
        for n, i in gens:
            if i not in IDEMPOTENTS:
                raise StructureError(f"generator {n}: idempotent must be i0 or i1, not {i!r}")
        known = set(names)
        acc: dict[tuple[str, tuple[str, ...], str], LaurentPoly] = {}
        for src, seq, c, dst in self.actions:
            seq = tuple(seq)
            if src not in known or dst not in known:
                raise StructureError(f"action on {src} -> {dst} mentions an unknown generator")
            for a in seq:
                if a not in LEFT:
                    raise StructureError(f"action on {src}: unknown algebra element {a!r}")
            key = (src, seq, dst)
            acc[key] = acc.get(key, LaurentPoly()) + LaurentPoly.coerce(c)
        actions = tuple((s, q, c, d) for (s, q, d), c in acc.items() if c)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "actions", actions)
        table: dict[tuple[str, tuple[str, ...]], dict[str, LaurentPoly]] = defaultdict(dict)
        for s, q, c, d in actions:
            table[(s, q)][d] = c
        object.__setattr__(self, "_table", dict(table))

    @property
    def names(self) -> list[str]:
        return [n for n, _ in self.generators]

    @property
    def idem(self) -> dict[str, str]:
        return dict(self.generators)

    def action(self, x: str, seq: Sequence[str] = ()) -> dict[str, LaurentPoly]:
        """m_{k+1}(x, seq) as a map generator -> coefficient."""
        return self._table.get((x, tuple(seq)), {})

    @property
    def max_inputs(self) -> int:
        return max((len(q) for _, q, _, _ in self.actions), default=0)

    def input_sequences(self) -> set[tuple[str, ...]]:
        return {q for _, q, _, _ in self.actions}

    def specialize(self) -> AInftyMod:
        """Set t = 1, giving a module over F2."""
        return AInftyMod(self.generators,
                         tuple((s, q, LaurentPoly(c.at_one()), d) for s, q, c, d in self.actions),
                         "F2", self.truncated_at)


# --- validity --------------------------------------------------------------

def check_typeD(P: TypeD) -> list[str]:
    """Return a list of violations; an empty list means P is a valid reduced
    type D structure."""
    problems = []
    idem = P.idem
    for x, a, y in P.arrows:
        if a in IDEMPOTENTS:
            problems.append(f"generator {x}: idempotent {a} used as an arrow label ({x} -> {y})")
        elif LEFT[a] != idem[x] or RIGHT[a] != idem[y]:
            problems.append(f"generator {x}: term {a}*{y} violates idempotents "
                            f"({idem[x]}.{a}.{idem[y]} != {a})")
    if problems:
        return problems
    dmap = P.delta_map()
    for x in P.names:
        counts = Counter()
        for a, y in dmap[x]:
            for b, z in dmap[y]:
                ab = basis_mul(a, b)
                if ab is not None:
                    counts[(ab, z)] += 1
        for (ab, z), n in sorted(counts.items()):
            if n % 2:
                problems.append(f"generator {x}: structure equation fails, "
                                f"coefficient of {ab}*{z} in delta^2({x}) is nonzero")
    return problems


def _composable_sequences(start: str, max_len: int) -> Iterator[tuple[str, ...]]:
    """All sequences of chords a_1..a_n (n <= max_len) with LEFT[a_1] = start
    and RIGHT[a_i] = LEFT[a_{i+1}]."""
    yield ()
    frontier = [((), start)]
    for _ in range(max_len):
        nxt = []
        for seq, idem in frontier:
            for a in CHORDS:
                if LEFT[a] == idem:
                    s = seq + (a,)
                    yield s
                    nxt.append((s, RIGHT[a]))
        frontier = nxt


def check_ainfty(X: AInftyMod) -> list[str]:
    """Idempotent compatibility, coefficient ring, and the A-infinity relations
    for all input sequences up to (longest stored action + 2)."""
    problems = []
    idem = X.idem
    for s, q, c, d in X.actions:
        if any(a in IDEMPOTENTS for a in q):
            problems.append(f"generator {s}: idempotent used as an action input")
            continue
        cur = idem[s]
        for a in q:
            cur = RIGHT[a] if LEFT[a] == cur else None
            if cur is None:
                break
        if cur != idem[d]:
            problems.append(f"generator {s}: action m({', '.join((s,) + q)}) -> {d} "
                            f"violates idempotents")
        if X.ring == "F2" and c.bits != 0 and not (c.bits == 1 and c.low == 0):
            problems.append(f"generator {s}: coefficient {c} is not in F2")
    if problems:
        return problems
    limit = X.max_inputs + 2
    for x in X.names:
        for seq in _composable_sequences(idem[x], limit):
            total: dict[str, LaurentPoly] = {}
            n = len(seq)
            for j in range(n + 1):
                for y, c in X.action(x, seq[:j]).items():
                    for z, c2 in X.action(y, seq[j:]).items():
                        total[z] = total.get(z, LaurentPoly()) + c * c2
            for i in range(n - 1):
                ab = basis_mul(seq[i], seq[i + 1])
                if ab is None:
                    continue
                merged = seq[:i] + (ab,) + seq[i + 2:]
                for z, c in X.action(x, merged).items():
                    total[z] = total.get(z, LaurentPoly()) + c
            for z, c in total.items():
                if c:
                    args = ", ".join((x,) + seq)
                    problems.append(f"generator {x}: A-infinity relation fails on ({args}), "
                                    f"coefficient {c} of {z}")
    return problems


def require_valid(obj: TypeD | AInftyMod) -> None:
    problems = check_typeD(obj) if isinstance(obj, TypeD) else check_ainfty(obj)
    if problems:
        raise StructureError("; ".join(problems))


# --- iterated delta and boundedness -----------------------------------------

def delta_iterates(P: TypeD, max_k: int,
                   prefixes: set[tuple[str, ...]] | None = None
                   ) -> Iterator[tuple[int, dict[tuple[str, tuple[str, ...]], int]]]:
    """Yield (k, D_k) for k = 0..max_k, where D_k maps (x, (a_1..a_k)) to the
    F2-vector (bitmask over generators) of delta^k(x) at that label sequence.

    Cancellation mod 2 is exact.  If ``prefixes`` is given, only label
    sequences in that set are kept.
    """
    names = P.names
    index = {n: i for i, n in enumerate(names)}
    dmap = P.delta_map()
    cur = {(x, ()): 1 << index[x] for x in names}
    yield 0, cur
    for k in range(1, max_k + 1):
        nxt: dict[tuple[str, tuple[str, ...]], int] = defaultdict(int)
        for (x, seq), mask in cur.items():
            m, i = mask, 0
            while m:
                if m & 1:
                    for a, z in dmap[names[i]]:
                        s = seq + (a,)
                        if prefixes is None or s in prefixes:
                            nxt[(x, s)] ^= 1 << index[z]
                m >>= 1
                i += 1
        cur = {key: v for key, v in nxt.items() if v}
        yield k, cur
        if not cur:
            return


@dataclass(frozen=True)
class BoundednessCertificate:
    bounded: bool
    # TypeD: least k with delta^k = 0.  AInftyMod: largest n with m_n != 0.
    witness: int | None


def is_bounded(obj: TypeD | AInftyMod) -> BoundednessCertificate:
    require_valid(obj)
    if isinstance(obj, AInftyMod):
        if obj.truncated_at is not None:
            return BoundednessCertificate(False, None)
        return BoundednessCertificate(True, obj.max_inputs + 1 if obj.actions else 0)
    limit = len(obj) + 1
    for k, Dk in delta_iterates(obj, limit):
        if k >= 1 and not Dk:
            return BoundednessCertificate(True, k)
    return BoundednessCertificate(False, None)


# --- built-in examples -----------------------------------------------------

def _solid_torus_module(twisted: bool) -> AInftyMod:
    t = T if twisted else ONE
    return AInftyMod(
        generators=(("n", "i1"), ("p", "i0"), ("q", "i0")),
        actions=(("p", (), ONE, "q"),
                 ("p", ("r1",), ONE, "n"),
                 ("n", ("r2",), t, "q"),
                 ("p", ("r12",), t, "q")),
        ring="laurent" if twisted else "F2")


def _fig3() -> TypeD:
    return TypeD((("v1", "i0"), ("v2", "i0"), ("v3", "i0")),
                 (("v1", "r12", "v2"), ("v2", "r12", "v3"), ("v3", "r12", "v1")))


def _fig2() -> TypeD:
    # read off the admissible-case curve: crossings A, B, C of the vertical
    # edge (heights .2, .6, .8) and D, E of the horizontal edge (x = .33, .66)
    return TypeD((("A", "i0"), ("B", "i0"), ("C", "i0"), ("D", "i1"), ("E", "i1")),
                 (("A", "r123", "D"), ("A", "r3", "E"), ("B", "r1", "D"),
                  ("C", "r12", "B"), ("E", "r2", "C")))


BUILTINS = {
    "S_untwisted_bounded": lambda: _solid_torus_module(False),
    "S_twisted_bounded": lambda: _solid_torus_module(True),
    "fig3_typeD": _fig3,
    "fig2_typeD": _fig2,
}


def builtin(name: str) -> AInftyMod | TypeD:
    """The bounded solid-torus modules S and S-twisted, and the type D
    structures of the two worked curve examples."""
    try:
        return BUILTINS[name]()
    except KeyError:
        raise KeyError(f"unknown builtin {name!r}; choose from {sorted(BUILTINS)}") from None


# --- random valid type D structures ---------------------------------------

def random_typeD(seed: int, n_generators: int, idempotent_policy: str = "mixed",
                 max_arrows: int | None = None) -> TypeD:
    """A valid reduced type D structure, deterministic in ``seed``.

    Arrows are proposed at random and kept only when the structure equation
    still holds afterwards, so the result is valid by construction.
    """
    if n_generators < 1:
        raise ValueError("n_generators must be at least 1")
    if idempotent_policy not in ("all_i0", "mixed"):
        raise ValueError(f"unknown idempotent policy {idempotent_policy!r}")
    rng = random.Random(seed)
    if idempotent_policy == "all_i0":
        idems = ["i0"] * n_generators
    else:
        idems = [rng.choice(IDEMPOTENTS) for _ in range(n_generators)]
    gens = tuple((f"x{i}", idems[i]) for i in range(n_generators))
    if max_arrows is None:
        max_arrows = 3 * n_generators
    n_try = rng.randint(0, max_arrows)
    arrows: list[tuple[str, str, str]] = []
    for _ in range(n_try):
        i = rng.randrange(n_generators)
        j = rng.randrange(n_generators)
        labels = labels_between(idems[i], idems[j])
        arrow = (f"x{i}", rng.choice(labels), f"x{j}")
        if arrow in arrows:
            continue
        candidate = TypeD(gens, tuple(arrows + [arrow]))
        if not check_typeD(candidate):
            arrows.append(arrow)
    return TypeD(gens, tuple(arrows))


# --- isomorphism up to renaming -------------------------------------------

def isomorphic(P: TypeD, Q: TypeD) -> dict[str, str] | None:
    """A renaming of P's generators carrying P onto Q, or None."""
    if len(P) != len(Q) or len(P.arrows) != len(Q.arrows):
        return None
    pi, qi = P.idem, Q.idem
    p_out = {x: Counter(a for s, a, _ in P.arrows if s == x) for x in P.names}
    q_out = {x: Counter(a for s, a, _ in Q.arrows if s == x) for x in Q.names}
    p_in = {x: Counter(a for _, a, d in P.arrows if d == x) for x in P.names}
    q_in = {x: Counter(a for _, a, d in Q.arrows if d == x) for x in Q.names}
    q_set = set(Q.arrows)
    order = P.names

    def sig(x, idem, out, inn):
        return (idem[x], sorted(out[x].items()), sorted(inn[x].items()))

    cands = {x: [y for y in Q.names if sig(x, pi, p_out, p_in) == sig(y, qi, q_out, q_in)]
             for x in order}

    def extend(i, mapping, used):
        if i == len(order):
            return mapping
        x = order[i]
        for y in cands[x]:
            if y in used:
                continue
            mapping[x] = y
            ok = all((mapping[s], a, mapping[d]) in q_set
                     for s, a, d in P.arrows if s in mapping and d in mapping)
            if ok:
                res = extend(i + 1, mapping, used | {y})
                if res is not None:
                    return res
            del mapping[x]
        return None

    return extend(0, {}, frozenset())
