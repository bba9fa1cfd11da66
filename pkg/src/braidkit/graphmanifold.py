"""
Graph manifolds written in Regina's notation, and a genus-2 obstruction for
two-piece gluings.

A presentation looks like

    SFS [D: (2,1) (2,1)] U/m SFS [D: (2,1) (3,2)], m = [ -1,3 | -1,2 ]

Pieces are Seifert fibered spaces over a disk (D), an annulus (A) or a Moebius
band (M/n2), each with a list of exceptional fibers (x,y), 0 < y < x coprime.
The gluing matrix m expresses the boundary basis of the next piece in terms of
the previous one.

The obstruction asks whether the two pieces can be fibered so that their
regular fibers meet exactly once across the torus (one of Kobayashi's
conditions for a toroidal manifold of Heegaard genus 2):

* direct: with both standard fibrations, the fibers meet |b| times;
* Moebius: a piece over the Moebius band additionally needs its fiber glued
  to the slope (1,1) of the other piece, i.e. (1,1) m = (+-1, 0);
* alternative: SFS [D: (2,1) (2,1)] also fibers as SFS [M/n2:] with fiber
  slope (1,1), meeting the other piece's fiber |b + d| times; this only helps
  when the other piece is a (2,n) torus knot exterior.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass, field

from .errors import DeterminantError, NormalizationError, ParseError

__all__ = [
    "Base",
    "SfsPiece",
    "GluingMatrix",
    "GraphManifoldPresentation",
    "CriterionResult",
    "Genus2Verdict",
    "VerdictKind",
    "parse_regina",
    "format_regina",
    "genus2_obstruction",
]

JOINT_LABELS = "mnopqrstuvw"


class Base(enum.Enum):
    DISK = "D"
    ANNULUS = "A"
    MOBIUS_N2 = "M/n2"


@dataclass(frozen=True)
class SfsPiece:
    base: Base
    fibers: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        fibers = tuple((int(x), int(y)) for x, y in self.fibers)
        object.__setattr__(self, "fibers", fibers)
        for x, y in fibers:
            if not 0 < y < x:
                raise NormalizationError(f"fiber ({x},{y}) violates 0 < y < x")
            if math.gcd(x, y) != 1:
                raise NormalizationError(f"fiber ({x},{y}) is not a coprime pair")

    def is_double_trefoil_piece(self) -> bool:
        """True for exactly SFS [D: (2,1) (2,1)], which refibers as SFS [M/n2:]."""
        return self.base is Base.DISK and self.fibers == ((2, 1), (2, 1))

    def is_two_torus_knot_exterior(self) -> bool:
        """Disk base, exactly two exceptional fibers, one of multiplicity 2."""
        return self.base is Base.DISK and len(self.fibers) == 2 and any(x == 2 for x, _ in self.fibers)

    def __str__(self):
        inner = " ".join(f"({x},{y})" for x, y in self.fibers)
        return f"SFS [{self.base.value}:{' ' + inner if inner else ''}]"


@dataclass(frozen=True)
class GluingMatrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if abs(self.det) != 1:
            raise DeterminantError(f"gluing matrix {self} has determinant {self.det}")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> "GluingMatrix":
        k = self.det
        return GluingMatrix(k * self.d, -k * self.b, -k * self.c, k * self.a)

    def __str__(self):
        return f"[ {self.a},{self.b} | {self.c},{self.d} ]"


@dataclass(frozen=True)
class GraphManifoldPresentation:
    pieces: tuple[SfsPiece, ...]
    gluings: tuple[GluingMatrix, ...]
    source_label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        object.__setattr__(self, "gluings", tuple(self.gluings))
        if len(self.pieces) < 2:
            raise ParseError("a graph manifold presentation needs at least two pieces")
        if len(self.gluings) != len(self.pieces) - 1:
            raise ParseError(f"{len(self.pieces)} pieces need {len(self.pieces) - 1} gluing matrices")
        if len(self.pieces) > len(JOINT_LABELS) + 1:
            raise ParseError("too many pieces")
        for k, piece in enumerate(self.pieces):
            # an annulus has two boundary tori, so it can only sit inside a chain
            if piece.base is Base.ANNULUS and k in (0, len(self.pieces) - 1):
                raise NormalizationError("annulus pieces may only appear between two other pieces")

    def swapped(self) -> "GraphManifoldPresentation":
        """Same manifold with the piece order reversed."""
        return GraphManifoldPresentation(
            self.pieces[::-1], tuple(m.inverse() for m in self.gluings[::-1]), self.source_label
        )

    def __str__(self):
        return format_regina(self)


# parsing

_TOKEN = re.compile(
    r"\s*(?:(?P<sfs>SFS)|(?P<base>M/n2|D|A)|(?P<join>U/[a-z])|(?P<int>-?\d+)"
    r"|(?P<label>[a-z])|(?P<punct>[\[\]():,|=]))"
)


class _Tokens:
    def __init__(self, text: str):
        self.items = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            kind = m.lastgroup
            self.items.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0
        self.end = len(text)

    def peek(self):
        return self.items[self.i] if self.i < len(self.items) else (None, None, self.end)

    def take(self, kind, value=None):
        k, v, pos = self.peek()
        if k != kind or (value is not None and v != value):
            want = value if value is not None else kind
            got = v if v is not None else "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", pos)
        self.i += 1
        return v

    def integer(self) -> int:
        return int(self.take("int"))


def _parse_piece(tok: _Tokens) -> SfsPiece:
    tok.take("sfs")
    tok.take("punct", "[")
    base = Base(tok.take("base"))
    tok.take("punct", ":")
    fibers = []
    while tok.peek()[1] == "(":
        tok.take("punct", "(")
        x = tok.integer()
        tok.take("punct", ",")
        y = tok.integer()
        tok.take("punct", ")")
        fibers.append((x, y))
    tok.take("punct", "]")
    return SfsPiece(base, tuple(fibers))


def _parse_matrix(tok: _Tokens) -> GluingMatrix:
    tok.take("punct", "[")
    a = tok.integer()
    tok.take("punct", ",")
    b = tok.integer()
    tok.take("punct", "|")
    c = tok.integer()
    tok.take("punct", ",")
    d = tok.integer()
    tok.take("punct", "]")
    return GluingMatrix(a, b, c, d)


def parse_regina(text: str, source_label: str | None = None) -> GraphManifoldPresentation:
    """Parse a Regina graph-manifold string such as the ones in the census tables."""
    tok = _Tokens(text)
    pieces = [_parse_piece(tok)]
    labels = []
    while tok.peek()[0] == "join":
        _, joiner, pos = tok.peek()
        tok.take("join")
        label = joiner[2:]
        if label in labels:
            raise ParseError(f"joint label {label!r} used twice", pos)
        labels.append(label)
        pieces.append(_parse_piece(tok))
    matrices: dict[str, GluingMatrix] = {}
    while tok.peek()[1] == ",":
        tok.take("punct", ",")
        _, label, pos = tok.peek()
        tok.take("label")
        if label not in labels:
            raise ParseError(f"matrix {label!r} does not name a joint", pos)
        if label in matrices:
            raise ParseError(f"matrix {label!r} given twice", pos)
        tok.take("punct", "=")
        matrices[label] = _parse_matrix(tok)
    kind, value, pos = tok.peek()
    if kind is not None:
        raise ParseError(f"unexpected trailing {value!r}", pos)
    missing = [lab for lab in labels if lab not in matrices]
    if missing:
        raise ParseError(f"no gluing matrix for joint {missing[0]!r}", tok.end)
    return GraphManifoldPresentation(tuple(pieces), tuple(matrices[lab] for lab in labels), source_label)


def format_regina(g: GraphManifoldPresentation) -> str:
    labels = JOINT_LABELS[: len(g.gluings)]
    body = str(g.pieces[0])
    for label, piece in zip(labels, g.pieces[1:]):
        body += f" U/{label} {piece}"
    clauses = ", ".join(f"{label} = {m}" for label, m in zip(labels, g.gluings))
    return f"{body}, {clauses}"


# obstruction

class VerdictKind(enum.Enum):
    OBSTRUCTED = "ObstructedNotGenus2"
    POSSIBLY_GENUS2 = "PossiblyGenus2"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class CriterionResult:
    name: str
    joint: str
    applicable: bool
    passed: bool | None
    reason: str

    def to_dict(self) -> dict:
        return {"criterion": self.name, "joint": self.joint, "applicable": self.applicable,
                "passed": self.passed, "reason": self.reason}


@dataclass(frozen=True)
class Genus2Verdict:
    kind: VerdictKind
    criteria: tuple[CriterionResult, ...]
    summary: str
    matched: str | None = None

    @property
    def failures(self) -> list[CriterionResult]:
        return [c for c in self.criteria if c.applicable and c.passed is False]

    def to_dict(self) -> dict:
        return {"verdict": self.kind.value, "matched": self.matched, "summary": self.summary,
                "criteria": [c.to_dict() for c in self.criteria]}


DIRECT = "direct-fibration"
MOBIUS = "mobius-fiber-slope"
ALTERNATIVE = "alternative-fibration"


def _direct(m: GluingMatrix, joint: str) -> CriterionResult:
    ok = abs(m.b) == 1
    reason = (f"b = {m.b}: regular fibers meet once" if ok
              else f"b = {m.b}: regular fibers meet {abs(m.b)} times, not once")
    return CriterionResult(DIRECT, joint, True, ok, reason)


def _mobius(p1: SfsPiece, p2: SfsPiece, m: GluingMatrix, direct_ok: bool, joint: str) -> CriterionResult:
    if p2.base is not Base.MOBIUS_N2 and p1.base is not Base.MOBIUS_N2:
        return CriterionResult(MOBIUS, joint, False, None, "no piece over the Moebius band")
    if not direct_ok:
        return CriterionResult(MOBIUS, joint, False, None, "direct fibration already fails")
    if p2.base is not Base.MOBIUS_N2:
        m = m.inverse()  # read the gluing with the Moebius piece second
    s, t = m.a + m.c, m.b + m.d
    ok = abs(s) == 1 and t == 0
    reason = f"(1,1)m = ({s},{t})" + (" is the fiber slope (1,0)" if ok else ", not the fiber slope (1,0)")
    return CriterionResult(MOBIUS, joint, True, ok, reason)


def _alternative(p1: SfsPiece, p2: SfsPiece, m: GluingMatrix, joint: str) -> CriterionResult:
    orientations = []
    if p1.is_double_trefoil_piece():
        orientations.append((p2, m))
    if p2.is_double_trefoil_piece():
        orientations.append((p1, m.inverse()))
    if not orientations:
        return CriterionResult(ALTERNATIVE, joint, False, None, "no SFS [D: (2,1) (2,1)] piece")
    reasons = []
    for other, mm in orientations:
        s = mm.b + mm.d
        if abs(s) != 1:
            reasons.append(f"b+d = {s}: SFS [M/n2:] fiber meets the other fiber {abs(s)} times")
            continue
        if other.is_two_torus_knot_exterior():
            return CriterionResult(ALTERNATIVE, joint, True, True,
                                   f"b+d = {s} and {other} is a (2,n) torus knot exterior")
        reasons.append(f"b+d = {s}, but {other} is not a (2,n) torus knot exterior")
    return CriterionResult(ALTERNATIVE, joint, True, False, "; ".join(reasons))


def genus2_obstruction(g: GraphManifoldPresentation) -> Genus2Verdict:
    """Decide whether the fiber-intersection conditions rule out Heegaard genus 2."""
    labels = JOINT_LABELS[: len(g.gluings)]
    if len(g.pieces) > 2:
        notes = []
        for k, (label, m) in enumerate(zip(labels, g.gluings)):
            p1, p2 = g.pieces[k], g.pieces[k + 1]
            notes.append(_direct(m, label))
            alt = _alternative(p1, p2, m, label)
            if alt.applicable:
                notes.append(alt)
        return Genus2Verdict(VerdictKind.INCONCLUSIVE, tuple(notes),
                             f"{len(g.pieces)} pieces: outside the two-piece criteria; joint notes are informational")
    p1, p2 = g.pieces
    m = g.gluings[0]
    label = labels[0]
    direct = _direct(m, label)
    mob = _mobius(p1, p2, m, direct.passed, label)
    alt = _alternative(p1, p2, m, label)
    criteria = (direct, mob, alt)
    if direct.passed and (not mob.applicable or mob.passed):
        matched = MOBIUS if mob.applicable else DIRECT
        return Genus2Verdict(VerdictKind.POSSIBLY_GENUS2, criteria, f"{matched} test passes", matched)
    if alt.passed:
        return Genus2Verdict(VerdictKind.POSSIBLY_GENUS2, criteria, f"{ALTERNATIVE} test passes", ALTERNATIVE)
    failed = ", ".join(c.name for c in criteria if c.applicable and c.passed is False)
    return Genus2Verdict(VerdictKind.OBSTRUCTED, criteria, f"every applicable test fails ({failed})")
