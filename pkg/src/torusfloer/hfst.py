"""
Deciding whether a rational homology solid torus is a Heegaard Floer homology
solid torus (HFST).

Input is either a MultiCurve or a TypeD, always framed so that the rational
longitude is the horizontal slope 0 and mu is the vertical slope.  The
verdict of record is the vanishing of the twisted pairing with S_twisted
(the lambda filling with twisted coefficients).  Constancy of the filling
dimensions along mu + k*lambda, and support of the curve near lambda, are
recorded as evidence.  All three must agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .curves import (MultiCurve, Slope, curve_to_typeD, distance, line_class,
                     line_typeD, supported_near_longitude)
from .pairing import box_tensor, homology_dim, mor_pairing
from .structures import TypeD, builtin

HfstInput = Union[MultiCurve, TypeD]


class ConsistencyError(RuntimeError):
    """Two evidence channels that must agree gave different answers."""


def _as_typeD(obj: HfstInput) -> TypeD:
    return obj if isinstance(obj, TypeD) else curve_to_typeD(obj)


def filling_slope(k: int) -> Slope:
    """The slope of mu + k*lambda."""
    return Slope(1, k)


def _line_prediction(C: MultiCurve, s: Slope, parallel_value: int = 2) -> int | None:
    total = 0
    for comp in C.components:
        lc = line_class(comp)
        if lc is None:
            return None
        slope, j = lc
        d = distance(slope, s)
        total += j * d if d else parallel_value
    return total


def filling_dim(obj: HfstInput, k: int) -> int:
    """dim HF-hat of the filling along mu + k*lambda."""
    return homology_dim(mor_pairing(line_typeD(filling_slope(k)), _as_typeD(obj)))


def filling_dims(obj: HfstInput, K: int | None = None,
                 ks=None) -> list[tuple[int, int]]:
    """[(k, dim)] for k in [-K, K] (or the given ks).  Pure-line multicurves
    are cross-checked against the intersection count of straight lines."""
    P = _as_typeD(obj)
    if ks is None:
        if K is None:
            K = len(P) + 2
        if K < 1:
            raise ValueError("window must be at least 1")
        ks = range(-K, K + 1)
    out = []
    for k in ks:
        d = homology_dim(mor_pairing(line_typeD(filling_slope(k)), P))
        if isinstance(obj, MultiCurve):
            expected = _line_prediction(obj, filling_slope(k))
            if expected is not None and expected != d:
                raise ConsistencyError(f"filling k={k}: pairing gives {d}, "
                                       f"line intersection count gives {expected}")
        out.append((k, d))
    return out


@dataclass(frozen=True)
class HfstVerdict:
    is_hfst: bool
    twisted_dim: int
    untwisted_dim: int
    condition2_dims: tuple[tuple[int, int], ...]
    condition3_supported: bool | None      # None when the input is not a curve
    window: int

    @property
    def twisted_vanishing(self) -> bool:
        return self.twisted_dim == 0

    @property
    def condition2_constant(self) -> bool:
        return len({d for _, d in self.condition2_dims}) <= 1

    def as_text(self) -> str:
        def b(x):
            return "n/a" if x is None else str(x).lower()
        lines = [f"is_hfst: {b(self.is_hfst)}",
                 f"twisted_vanishing: {b(self.twisted_vanishing)}",
                 f"twisted_dim: {self.twisted_dim}",
                 f"untwisted_dim: {self.untwisted_dim}",
                 f"condition2_constant: {b(self.condition2_constant)}",
                 f"condition3_supported: {b(self.condition3_supported)}",
                 f"window: {self.window}"]
        lines += [f"filling[{k}]: {d}" for k, d in self.condition2_dims]
        return "\n".join(lines) + "\n"


def twisted_lambda_dim(obj: HfstInput) -> int:
    """dim over F2(t) of S_twisted box P, the twisted homology of the lambda filling."""
    return homology_dim(box_tensor(builtin("S_twisted_bounded"), _as_typeD(obj)))


def is_hfst(obj: HfstInput, window: int | None = None) -> HfstVerdict:
    P = _as_typeD(obj)
    K = len(P) + 2 if window is None else window
    twisted = twisted_lambda_dim(P)
    untwisted = homology_dim(box_tensor(builtin("S_untwisted_bounded"), P))
    dims = tuple(filling_dims(obj, K))
    supported = supported_near_longitude(obj) if isinstance(obj, MultiCurve) else None
    verdict = HfstVerdict(twisted == 0, twisted, untwisted, dims, supported, K)
    channels = {"twisted_vanishing": verdict.twisted_vanishing,
                "condition2_constant": verdict.condition2_constant}
    if supported is not None:
        channels["condition3_supported"] = supported
    if len(set(channels.values())) > 1:
        raise ConsistencyError("evidence channels disagree:\n" + verdict.as_text())
    return verdict


def triangle_rank_check(d_mu: int, d_next: int, d_lambda: int) -> list[str]:
    """Rank constraints of an exact triangle of vector spaces.  Returns the
    violated constraints (empty means consistent)."""
    dims = (d_mu, d_next, d_lambda)
    problems = []
    if any(d < 0 for d in dims):
        problems.append("negative dimension")
    for i in range(3):
        others = sum(dims) - dims[i]
        if dims[i] > others:
            problems.append(f"dimension {dims[i]} exceeds the sum {others} of the other two")
    if sum(dims) % 2:
        problems.append(f"total {sum(dims)} is odd")
    return problems


def surgery_triples(obj: HfstInput, ks) -> list[tuple[int, int, int]]:
    """(d(k), d(k+1), twisted d_lambda) for each k, the three corners of the
    surgery triangle for slopes mu + k*lambda, mu + (k+1)*lambda, lambda."""
    P = _as_typeD(obj)
    ks = list(ks)
    dims = dict(filling_dims(obj, ks=sorted(set(ks) | {k + 1 for k in ks})))
    dl = twisted_lambda_dim(P)
    return [(dims[k], dims[k + 1], dl) for k in ks]
