"""
Line-oriented text formats.

typed (type D structure)::

    gen v1 i0
    arrow v1 r12 v2

ainfty (A-infinity module)::

    ring laurent            # or F2; optional, inferred from coefficients
    truncated 3             # optional: actions complete only up to 3 inputs
    gen p i0
    action p [r12] -> t q
    action p [] -> 1 q

curve: one cyclic word per line in l, L, m, M, optionally followed by @z.

seifert: ``base=disk|mobius; cones=b1/a1,b2/a2,...``

``#`` starts a comment.  Blank lines are ignored.
"""
from __future__ import annotations

import re

from .algebra import BASIS, LaurentPoly
from .curves import CurveComponent, MultiCurve, cyclic_reduce
from .pairing import ChainComplex
from .seifert import SeifertData, parse_seifert
from .structures import AInftyMod, StructureError, TypeD

KINDS = ("typed", "ainfty", "curve", "seifert")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int = 1):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            yield no, raw, body


def _col(raw: str, token: str) -> int:
    i = raw.find(token)
    return i + 1 if i >= 0 else 1


def detect_kind(text: str) -> str:
    for _, _, body in _lines(text):
        head = body.split()[0]
        if head in ("action", "ring", "truncated"):
            return "ainfty"
        if "base=" in body.replace(" ", ""):
            return "seifert"
    for _, _, body in _lines(text):
        if body.split()[0] in ("gen", "arrow"):
            return "typed"
    return "curve"


def _parse_gen(no, raw, toks, seen):
    if len(toks) != 3:
        raise ParseError("expected: gen NAME i0|i1", no)
    if toks[2] not in ("i0", "i1"):
        raise ParseError(f"idempotent must be i0 or i1, not {toks[2]!r}", no, _col(raw, toks[2]))
    if toks[1] in seen:
        raise ParseError(f"duplicate generator {toks[1]!r}", no, _col(raw, toks[1]))
    seen.add(toks[1])
    return toks[1], toks[2]


def parse_typed(text: str) -> TypeD:
    gens, arrows, seen = [], [], set()
    for no, raw, body in _lines(text):
        toks = body.split()
        if toks[0] == "gen":
            gens.append(_parse_gen(no, raw, toks, seen))
        elif toks[0] == "arrow":
            if len(toks) != 4:
                raise ParseError("expected: arrow SRC LABEL DST", no)
            _, src, lab, dst = toks
            for name in (src, dst):
                if name not in seen:
                    raise ParseError(f"unknown generator {name!r}", no, _col(raw, name))
            if lab not in BASIS:
                raise ParseError(f"unknown label {lab!r}", no, _col(raw, lab))
            arrows.append((src, lab, dst))
        else:
            raise ParseError(f"unknown directive {toks[0]!r}", no, _col(raw, toks[0]))
    return TypeD(tuple(gens), tuple(arrows))


_ACTION = re.compile(r"^\s*action\s+(\S+)\s*\[([^\]]*)\]\s*->\s*(\S+)\s+(\S+)\s*$")


def parse_ainfty(text: str) -> AInftyMod:
    gens, actions, seen = [], [], set()
    ring, truncated = None, None
    for no, raw, body in _lines(text):
        toks = body.split()
        if toks[0] == "gen":
            gens.append(_parse_gen(no, raw, toks, seen))
        elif toks[0] == "ring":
            if len(toks) != 2 or toks[1] not in ("F2", "laurent"):
                raise ParseError("expected: ring F2|laurent", no)
            ring = toks[1]
        elif toks[0] == "truncated":
            if len(toks) != 2 or not toks[1].isdigit():
                raise ParseError("expected: truncated N", no)
            truncated = int(toks[1])
        elif toks[0] == "action":
            m = _ACTION.match(body)
            if not m:
                raise ParseError("expected: action SRC [labels...] -> COEFF DST", no)
            src, labs, coeff, dst = m.groups()
            for name in (src, dst):
                if name not in seen:
                    raise ParseError(f"unknown generator {name!r}", no, _col(raw, name))
            seq = tuple(labs.replace(",", " ").split())
            for lab in seq:
                if lab not in BASIS:
                    raise ParseError(f"unknown label {lab!r}", no, _col(raw, lab))
            try:
                c = LaurentPoly.parse(coeff)
            except ValueError as exc:
                raise ParseError(str(exc), no, _col(raw, coeff)) from None
            actions.append((src, seq, c, dst))
        else:
            raise ParseError(f"unknown directive {toks[0]!r}", no, _col(raw, toks[0]))
    if ring is None:
        ring = "F2" if all(c.bits in (0, 1) and c.low == 0 for *_, c, _ in actions) else "laurent"
    return AInftyMod(tuple(gens), tuple(actions), ring, truncated)


def parse_curve(text: str) -> MultiCurve:
    comps = []
    for no, raw, body in _lines(text):
        toks = body.split()
        flag = False
        if toks[-1] == "@z":
            flag = True
            toks = toks[:-1]
        elif toks[-1].endswith("@z"):
            flag = True
            toks[-1] = toks[-1][:-2]
        if len(toks) != 1:
            raise ParseError("expected one word per line, optionally followed by @z", no)
        word = toks[0]
        for i, ch in enumerate(word):
            if ch not in "lLmM":
                raise ParseError(f"bad letter {ch!r} (use l, L, m, M)", no, _col(raw, word) + i)
        reduced = cyclic_reduce(word)
        if not reduced:
            raise ParseError(f"word {word!r} is null-homotopic", no, _col(raw, word))
        comps.append(CurveComponent(reduced, flag))
    try:
        return MultiCurve(tuple(comps))
    except ValueError as exc:
        raise ParseError(str(exc), 1) from None


def parse_seifert_doc(text: str) -> SeifertData:
    found = [(no, body) for no, _, body in _lines(text)]
    if len(found) != 1:
        raise ParseError("expected exactly one line: base=...; cones=...",
                         found[1][0] if len(found) > 1 else 1)
    no, body = found[0]
    try:
        return parse_seifert(body)
    except ValueError as exc:
        raise ParseError(str(exc), no) from None


_PARSERS = {"typed": parse_typed, "ainfty": parse_ainfty,
            "curve": parse_curve, "seifert": parse_seifert_doc}


def parse_document(text: str, kind: str | None = None):
    """(kind, object).  Structural problems found while building the object
    surface as ParseError."""
    kind = kind or detect_kind(text)
    if kind not in _PARSERS:
        raise ValueError(f"unknown document kind {kind!r}")
    try:
        return kind, _PARSERS[kind](text)
    except StructureError as exc:
        raise ParseError(str(exc), 1) from None


# --- printing (canonical forms) ---------------------------------------------

def format_typed(P: TypeD) -> str:
    lines = [f"gen {n} {i}" for n, i in P.generators]
    lines += [f"arrow {s} {a} {d}" for s, a, d in P.arrows]
    return "\n".join(lines) + "\n"


def format_ainfty(X: AInftyMod) -> str:
    lines = [f"ring {X.ring}"]
    if X.truncated_at is not None:
        lines.append(f"truncated {X.truncated_at}")
    lines += [f"gen {n} {i}" for n, i in X.generators]
    lines += [f"action {s} [{' '.join(q)}] -> {c} {d}" for s, q, c, d in X.actions]
    return "\n".join(lines) + "\n"


def format_curve(C: MultiCurve) -> str:
    return "".join(f"{c.word}{' @z' if c.through_basepoint else ''}\n" for c in C.components)


def format_seifert(d: SeifertData) -> str:
    return str(d) + "\n"


def format_document(obj) -> str:
    if isinstance(obj, TypeD):
        return format_typed(obj)
    if isinstance(obj, AInftyMod):
        return format_ainfty(obj)
    if isinstance(obj, MultiCurve):
        return format_curve(obj)
    if isinstance(obj, SeifertData):
        return format_seifert(obj)
    raise TypeError(f"cannot format {type(obj).__name__}")


def format_complex(C: ChainComplex) -> str:
    lines = ["basis: " + " ".join(C.basis)]
    for (i, j), c in sorted(C.entries.items()):
        coeff = str(c.at_one()) if C.field == "F2" else str(c)
        lines.append(f"d {C.basis[i]} {coeff} {C.basis[j]}")
    return "\n".join(lines) + "\n"
