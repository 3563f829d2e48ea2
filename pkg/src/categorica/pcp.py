"""Pairs of categorical premises: types, conclusions, mood names and groups.

A PCP is an ordered pair (P-premise, S-premise) sharing exactly one term, the
middle.  In normal form each premise is ``EMPTY{mu, x}`` or ``NONEMPTY{mu, x}``
where ``mu`` is a middle literal.  Whether the two premises use the same middle
literal or complementary ones, together with their kinds, fixes the type.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass, field
from typing import Optional

from .core import (
    Cell,
    Kind,
    Literal,
    StatementNF,
    SurfaceStatement,
    Universe,
    normalize,
)
from .errors import MalformedError, OutOfDomain

__all__ = [
    "PCP",
    "PcpType",
    "Conclusion",
    "MoodName",
    "classify",
    "derive",
    "mood_name",
    "enumerate_all",
    "bound_subset_group",
    "classical_reading",
    "CUBE",
]


class PcpType(enum.Enum):
    T1 = "1"
    T2 = "2"
    T3a = "3a"
    T3b = "3b"
    T4a = "4a"
    T4b = "4b"
    T5a = "5a"
    T5b = "5b"

    @property
    def entails(self) -> bool:
        return self in (PcpType.T1, PcpType.T2, PcpType.T3a, PcpType.T3b)

    def __str__(self) -> str:
        return f"type {self.value}"


# cube letter -> (kind, middle literal positive?, end literal positive?)
CUBE = {
    "E": (Kind.EMPTY, True, True),
    "A": (Kind.EMPTY, True, False),
    "E'": (Kind.EMPTY, False, True),
    "A'": (Kind.EMPTY, False, False),
    "I": (Kind.NONEMPTY, True, True),
    "O": (Kind.NONEMPTY, True, False),
    "I'": (Kind.NONEMPTY, False, True),
    "O'": (Kind.NONEMPTY, False, False),
}
_CUBE_LETTER = {v: k for k, v in CUBE.items()}
_CODE_RE = re.compile(r"[AEIO]'?")


@dataclass(frozen=True)
class PCP:
    p: StatementNF
    s: StatementNF

    def __post_init__(self) -> None:
        p, s = normalize(self.p), normalize(self.s)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "s", s)
        if len(p.lits) != 2 or len(s.lits) != 2:
            raise MalformedError("both premises must relate exactly two terms")
        shared = set(p.terms) & set(s.terms)
        if len(shared) != 1:
            raise MalformedError(
                f"premises {p} and {s} must share exactly one (middle) term, got {sorted(shared)}")

    @property
    def middle(self) -> str:
        (m,) = set(self.p.terms) & set(self.s.terms)
        return m

    @property
    def p_term(self) -> str:
        return next(t for t in self.p.terms if t != self.middle)

    @property
    def s_term(self) -> str:
        return next(t for t in self.s.terms if t != self.middle)

    @property
    def mu_p(self) -> Literal:
        return self.p.literal_of(self.middle)

    @property
    def mu_s(self) -> Literal:
        return self.s.literal_of(self.middle)

    @property
    def a(self) -> Literal:
        """The P-literal of the first premise."""
        return self.p.literal_of(self.p_term)

    @property
    def b(self) -> Literal:
        """The S-literal of the second premise."""
        return self.s.literal_of(self.s_term)

    @property
    def universe(self) -> Universe:
        return Universe((self.s_term, self.p_term, self.middle))

    @property
    def premises(self) -> tuple:
        return (self.p, self.s)

    @property
    def code(self) -> str:
        """Two-letter cube code, e.g. ``AE'`` for Barbara."""
        left = _CUBE_LETTER[(self.p.kind, self.mu_p.positive, self.a.positive)]
        right = _CUBE_LETTER[(self.s.kind, self.mu_s.positive, self.b.positive)]
        return left + right

    @classmethod
    def from_code(cls, code: str, s: str = "S", p: str = "P", m: str = "M") -> "PCP":
        letters = _CODE_RE.findall(code.replace(" ", ""))
        if "".join(letters) != code.replace(" ", "") or len(letters) != 2:
            raise MalformedError(f"not a two-letter PCP code: {code!r}")
        return cls(_from_cube(letters[0], m, p), _from_cube(letters[1], m, s))

    def __str__(self) -> str:
        return f"{self.p.equation()}, {self.s.equation()}"


def _from_cube(letter: str, middle: str, end: str) -> StatementNF:
    kind, mpos, epos = CUBE[letter]
    return StatementNF(kind, (Literal(middle, mpos), Literal(end, epos)))


def classify(pcp: PCP) -> PcpType:
    same = pcp.mu_p == pcp.mu_s
    pe, se = pcp.p.is_empty, pcp.s.is_empty
    if pe and se:
        return PcpType.T2 if same else PcpType.T1
    if pe and not se:
        return PcpType.T3a if same else PcpType.T5a
    if not pe and se:
        return PcpType.T3b if same else PcpType.T5b
    return PcpType.T4a if same else PcpType.T4b


def classical_reading(nf: StatementNF, s_term: str, p_term: str) -> SurfaceStatement:
    """The conventional A/E/I/O reading of a statement about the two end terms.

    The S-term is the subject except where the only affirmative reading puts
    the P-term first, e.g. ``EMPTY{S', P}`` reads ``A(P,S)``.
    """
    x, y = nf.literal_of(s_term), nf.literal_of(p_term)
    if x.positive != y.positive:
        pos, neg = (x, y) if x.positive else (y, x)
        return SurfaceStatement("A" if nf.is_empty else "O", pos, neg.complement())
    return SurfaceStatement("E" if nf.is_empty else "I", x, y)


@dataclass(frozen=True)
class Conclusion:
    """A one-cell conclusion.

    With ``literal`` set: ``literal = cell`` (every other cell of the literal
    is empty).  Without it: ``cell`` is nonempty, possibly only under the
    existential-import assumption ``ei_condition != empty``.
    """

    cell: Cell
    literal: Optional[Literal] = None
    ei_condition: Optional[Literal] = None
    middle_dropped: Optional[SurfaceStatement] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.literal is not None:
            if self.ei_condition is not None:
                raise ValueError("a universal pinpoint carries no ei condition")
            if not self.cell.contains(self.literal):
                raise ValueError(f"cell {self.cell} is not inside {self.literal}")
        if self.ei_condition is not None and not self.cell.contains(self.ei_condition):
            raise ValueError(f"cell {self.cell} is not inside {self.ei_condition}")

    @classmethod
    def universal(cls, literal: Literal, cell: Cell, middle_dropped=None) -> "Conclusion":
        return cls(cell, literal, None, middle_dropped)

    @classmethod
    def existential(cls, cell: Cell, ei_condition: Optional[Literal] = None,
                    middle_dropped=None) -> "Conclusion":
        return cls(cell, None, ei_condition, middle_dropped)

    @property
    def is_universal(self) -> bool:
        return self.literal is not None

    @property
    def is_ei(self) -> bool:
        return self.ei_condition is not None

    @property
    def sort_key(self) -> tuple:
        u = self.cell.universe
        if self.literal is not None:
            return (0, u.index(self.literal.term), not self.literal.positive, self.cell.index)
        if self.ei_condition is None:
            return (1, self.cell.index, 0, 0)
        c = self.ei_condition
        return (2, u.index(c.term), not c.positive, self.cell.index)

    def text(self, ascii: bool = False) -> str:
        ne, empty = ("!=", "0") if ascii else ("≠", "∅")
        if self.literal is not None:
            return f"{self.literal} = {self.cell}"
        out = f"{self.cell} {ne} {empty}"
        if self.ei_condition is not None:
            out += f" if {self.ei_condition} {ne} {empty}"
        return out

    def __str__(self) -> str:
        return self.text()


def derive(pcp: PCP) -> list:
    """Every precise conclusion of the PCP, ei-conditioned variants included."""
    t = classify(pcp)
    u = pcp.universe
    mu, a, b = pcp.mu_p, pcp.a, pcp.b

    def cell(*lits):
        return u.cell_of(lits)

    def reading(nf):
        return classical_reading(nf, pcp.s_term, pcp.p_term)

    if t is PcpType.T1:
        # b <= mu <= a'
        cb = cell(b, mu, a.complement())
        ca = cell(a, mu.complement(), b.complement())
        univ = reading(StatementNF.empty(b, a))
        return [
            Conclusion.universal(b, cb, univ),
            Conclusion.universal(a, ca, univ),
            Conclusion.existential(cb, b, reading(StatementNF.nonempty(b, a.complement()))),
            Conclusion.existential(ca, a, reading(StatementNF.nonempty(a, b.complement()))),
        ]
    if t is PcpType.T2:
        c = cell(mu, a.complement(), b.complement())
        return [
            Conclusion.universal(mu, c),
            Conclusion.existential(
                c, mu, reading(StatementNF.nonempty(b.complement(), a.complement()))),
        ]
    if t is PcpType.T3a:
        return [Conclusion.existential(
            cell(mu, b, a.complement()), None,
            reading(StatementNF.nonempty(b, a.complement())))]
    if t is PcpType.T3b:
        return [Conclusion.existential(
            cell(mu, a, b.complement()), None,
            reading(StatementNF.nonempty(a, b.complement())))]
    return []


@dataclass(frozen=True)
class MoodName:
    """Traditional name of a PCP's main conclusion plus names of its ei variants.

    ``aliases`` holds coinages that are not traditional mood names.
    ``ei_names`` maps an ei-condition literal (written with standard letters
    ``S``, ``P``, ``M``) to the name of that ei conclusion, or None.
    """

    name: Optional[str]
    aliases: tuple = ()
    ei_names: tuple = ()
    entails: bool = True

    def ei_name(self, condition: str) -> Optional[str]:
        return dict(self.ei_names).get(condition)

    def __str__(self) -> str:
        if not self.entails:
            return "no name (no LC)"
        return self.name or "no name"


def _m(name=None, aliases=(), **ei):
    ei_names = tuple((k.replace("_", "'"), v) for k, v in ei.items())
    return MoodName(name, tuple(aliases), ei_names)


# groups 1..8 in order; keyword names use "_" for a prime (P_ is P')
_MOODS = {
    "EE": _m(None, M=None),
    "IE": _m(None, ["Fireo"]),
    "EI": _m("Ferio/Festino/Ferison/Fresison"),
    "EE'": _m("Celarent/Cesare", S="Celaront/Cesaro", P=None),
    "EA": _m("Felapton", M="Felapton/Fesapo"),
    "IA": _m("Disamis/Dimaris"),
    "EO": _m(None),
    "EA'": _m(None, P="Bramantip'", S_=None),
    "AE": _m(None, ["Falepton"], M=None),
    "OE": _m(None),
    "AI": _m("Darii/Datisi"),
    "AE'": _m("Barbara", S="Barbari", P_=None),
    "AA": _m("Darapti", M="Darapti"),
    "OA": _m("Bocardo"),
    "AO": _m(None, ["Bacordo"]),
    "AA'": _m(None, S_=None, P_=None),
    "E'E'": _m(None, M_=None),
    "I'E'": _m(None, ["Boraco"]),
    "E'I'": _m("Baroco"),
    "E'E": _m("Camestres/Camenes", S="Camestros/Camenos", P=None),
    "E'A'": _m("Felapton'", M_="Felapton'/Fesapo'"),
    "I'A'": _m("Disamis'/Dimaris'"),
    "E'O'": _m(None),
    "E'A": _m(None, ["Bramanta"], P="Bramantip", S_=None),
    "A'E'": _m(None, M_=None),
    "O'E'": _m(None),
    "A'I'": _m("Darii'/Datisi'"),
    "A'E": _m("Barbara'", S="Barbari'", P_=None),
    "A'A'": _m("Darapti'", M_="Darapti'"),
    "O'A'": _m("Bocardo'"),
    "A'O'": _m(None),
    "A'A": _m(None, S_=None, P_=None),
}

_NO_LC = MoodName(None, entails=False)


def mood_name(pcp: PCP) -> MoodName:
    return _MOODS.get(pcp.code, _NO_LC)


_ORDER = ["E", "A", "E'", "A'", "I", "O", "I'", "O'"]
_POSITIVE_ONLY = {"E", "A", "E'", "I", "O", "I'"}


def enumerate_all(positive_only: bool = False) -> list:
    """The 64 PCPs (or the 36 expressible with positive terms), P-premise major."""
    letters = [x for x in _ORDER if not positive_only or x in _POSITIVE_ONLY]
    return [PCP.from_code(l + r) for l, r in itertools.product(letters, letters)]


def bound_subset_group(pcp: PCP) -> tuple:
    """Index 1..8 of the four-PCP group the PCP belongs to, and the cell the group is bound to.

    A group is fixed by the P-premise's middle and end literals and the
    S-premise's end literal; the bound cell is the one no member acts on.
    """
    if not classify(pcp).entails:
        raise OutOfDomain(f"{pcp.code} entails no conclusion and belongs to no group")
    mu, a, b = pcp.mu_p, pcp.a, pcp.b
    index = 1 + 4 * (not mu.positive) + 2 * (not a.positive) + (not b.positive)
    anchor = pcp.universe.cell_of((mu, a.complement(), b.complement()))
    return index, anchor
