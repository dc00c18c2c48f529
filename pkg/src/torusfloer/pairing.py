"""
Box tensor products, morphism pairings and their homology.

For a bounded A-infinity module X and a type D structure P the box tensor
complex has basis x (x) y over matched idempotents and differential

    d(x (x) y) = sum_k  m_{k+1}(x, a_1, ..., a_k) (x) y_k

summed over the terms a_1 (x) ... (x) a_k (x) y_k of delta^k(y).

Twisted modules have Laurent polynomial coefficients.  Homology is then
taken over the rational function field F2(t).  For finitely generated
complexes with Laurent differentials this has the same dimension as over
any field containing F2[t, t^-1], since F2[t, t^-1] is a PID.  In
particular, when every generator of P sits over i0, the differential of
S_twisted (x) P is I + tN in block form.  Its determinant has constant term
one, so it is invertible over F2(t) and the homology vanishes.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (BASIS, LEFT, RIGHT, LaurentPoly, ONE, basis_mul,
                      matrix_rank, rank_f2_bitrows)
from .structures import (AInftyMod, StructureError, TypeD, delta_iterates,
                         is_bounded, require_valid)


class ComplexError(ValueError):
    """The differential of a chain complex does not square to zero."""


class BoundednessError(ValueError):
    """Neither side of a box tensor product is bounded."""


@dataclass(frozen=True)
class ChainComplex:
    field: str                          # "F2" or "RationalFn"
    basis: tuple[str, ...]
    # sparse differential: (i, j) -> coefficient of basis[j] in d(basis[i])
    entries: dict[tuple[int, int], LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        if self.field not in ("F2", "RationalFn"):
            raise ValueError(f"unknown field {self.field!r}")
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "entries", {k: v for k, v in self.entries.items() if v})

    def __len__(self):
        return len(self.basis)

    def matrix(self) -> list[list]:
        """Dense matrix D with D[j][i] the coefficient of basis[j] in d(basis[i])."""
        n = len(self.basis)
        M: list[list] = [[0] * n for _ in range(n)]
        for (i, j), c in self.entries.items():
            M[j][i] = c.at_one() if self.field == "F2" else c
        return M

    def d_squared(self) -> dict[tuple[int, int], LaurentPoly]:
        out: dict[tuple[int, int], LaurentPoly] = {}
        by_src: dict[int, list[tuple[int, LaurentPoly]]] = {}
        for (i, j), c in self.entries.items():
            by_src.setdefault(i, []).append((j, c))
        for i, terms in by_src.items():
            for j, c in terms:
                for k, c2 in by_src.get(j, ()):
                    out[(i, k)] = out.get((i, k), LaurentPoly()) + c * c2
        return {k: v for k, v in out.items() if v}

    def check(self) -> None:
        bad = self.d_squared()
        if bad:
            (i, k), c = next(iter(sorted(bad.items())))
            raise ComplexError(f"d^2 != 0: coefficient {c} of {self.basis[k]} "
                               f"in d^2({self.basis[i]})")

    def rank(self) -> int:
        if self.field == "F2":
            images: dict[int, int] = {}
            for (i, j), c in self.entries.items():
                if c.at_one():
                    images[i] = images.get(i, 0) ^ (1 << j)
            return rank_f2_bitrows(images.values())
        return matrix_rank(self.matrix(), self.field)

    def specialize(self) -> ChainComplex:
        """Set t = 1."""
        return ChainComplex("F2", self.basis,
                            {k: LaurentPoly(v.at_one()) for k, v in self.entries.items()})


def homology_dim(C: ChainComplex) -> int:
    C.check()
    return len(C.basis) - 2 * C.rank()


def box_tensor(X: AInftyMod, P: TypeD) -> ChainComplex:
    """X (x) P.  Refuses unless at least one side is bounded."""
    require_valid(X)
    require_valid(P)
    bx = is_bounded(X)
    if bx.bounded:
        depth = X.max_inputs
    else:
        bp = is_bounded(P)
        if not bp.bounded:
            raise BoundednessError("one of the A-infinity module or the type D structure "
                                   "must be bounded")
        # delta^k vanishes for k >= witness, so sequences of length < witness suffice
        depth = bp.witness - 1
        if depth > X.truncated_at:
            raise BoundednessError(f"the type D structure needs actions with {depth} inputs "
                                   f"but the module is only known up to {X.truncated_at}")
    seqs = X.input_sequences()
    prefixes = {q[:i] for q in seqs for i in range(len(q) + 1)}
    xi, pi = X.idem, P.idem
    basis = [(x, y) for x in X.names for y in P.names if xi[x] == pi[y]]
    index = {b: i for i, b in enumerate(basis)}
    pnames = P.names
    entries: dict[tuple[int, int], LaurentPoly] = {}
    for _, Dk in delta_iterates(P, depth, prefixes):
        for (y, seq), mask in Dk.items():
            targets = [pnames[i] for i in range(len(pnames)) if mask >> i & 1]
            for x in X.names:
                if xi[x] != pi[y]:
                    continue
                for z, c in X.action(x, seq).items():
                    for yk in targets:
                        key = (index[(x, y)], index[(z, yk)])
                        entries[key] = entries.get(key, LaurentPoly()) + c
    C = ChainComplex("RationalFn" if X.ring == "laurent" else "F2",
                     tuple(f"{x}|{y}" for x, y in basis), entries)
    C.check()
    return C


def mor_pairing(P1: TypeD, P2: TypeD) -> ChainComplex:
    """The morphism complex Mor(P1, P2) over F2.

    Basis elements are x1 -> a (x) x2 with idem(x1).a.idem(x2) = a, and

        d f = mu o (delta_1 then f) + mu o (f then delta_2).
    """
    require_valid(P1)
    require_valid(P2)
    i1, i2 = P1.idem, P2.idem
    basis = [(x1, a, x2) for x1 in P1.names for a in BASIS for x2 in P2.names
             if LEFT[a] == i1[x1] and RIGHT[a] == i2[x2]]
    index = {b: i for i, b in enumerate(basis)}
    into: dict[str, list[tuple[str, str]]] = {x: [] for x in P1.names}
    for w, b, x in P1.arrows:
        into[x].append((w, b))
    d2 = P2.delta_map()
    entries: dict[tuple[int, int], LaurentPoly] = {}

    def add(src, tgt):
        key = (index[src], index[tgt])
        entries[key] = entries.get(key, LaurentPoly()) + ONE

    for f in basis:
        x1, a, x2 = f
        for w, b in into[x1]:
            ba = basis_mul(b, a)
            if ba is not None:
                add(f, (w, ba, x2))
        for c, z in d2[x2]:
            ac = basis_mul(a, c)
            if ac is not None:
                add(f, (x1, ac, z))
    C = ChainComplex("F2", tuple(f"{x1}|{a}|{x2}" for x1, a, x2 in basis), entries)
    C.check()
    return C


__all__ = ["ChainComplex", "ComplexError", "BoundednessError", "StructureError",
           "box_tensor", "mor_pairing", "homology_dim"]
