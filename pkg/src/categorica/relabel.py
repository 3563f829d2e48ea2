"""The eight polarity-flip relabelings of S, P, M and canonical forms of PCPs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Mapping, Optional

from .core import Cell, Literal, StatementNF, SurfaceStatement
from .errors import OutOfDomain
from .pcp import PCP, Conclusion, PcpType, classify

__all__ = [
    "Relabeling",
    "ELEMENTS",
    "IDENTITY",
    "apply",
    "compose",
    "metathesis",
    "canonicalize",
    "CanonicalForm",
    "REPRESENTATIVES",
]

_ROLES = ("p", "s", "m")
_STANDARD_ROLES = {"s": "S", "p": "P", "m": "M"}


@dataclass(frozen=True)
class Relabeling:
    """A set of flipped roles; ``p`` swaps P and P' everywhere, etc."""

    flips: frozenset = frozenset()

    def __post_init__(self) -> None:
        flips = frozenset(self.flips)
        if not flips <= set(_ROLES):
            raise ValueError(f"unknown roles in {sorted(flips)}")
        object.__setattr__(self, "flips", flips)

    @classmethod
    def parse(cls, name: str) -> "Relabeling":
        name = name.strip()
        if name in ("e", "1", ""):
            return IDENTITY
        if len(set(name)) != len(name):
            raise ValueError(f"repeated role in relabeling {name!r}")
        return cls(frozenset(name))

    @property
    def name(self) -> str:
        return "".join(r for r in _ROLES if r in self.flips) or "e"

    def __mul__(self, other: "Relabeling") -> "Relabeling":
        return compose(self, other)

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"Relabeling({self.name!r})"


IDENTITY = Relabeling()
ELEMENTS = tuple(Relabeling(frozenset(c))
                 for k in range(4) for c in itertools.combinations(_ROLES, k))


def compose(g: Relabeling, h: Relabeling) -> Relabeling:
    return Relabeling(g.flips ^ h.flips)


def _flipped_terms(g: Relabeling, roles: Mapping[str, str]) -> frozenset:
    return frozenset(roles[r] for r in g.flips)


def _flip(x: Literal, terms: frozenset) -> Literal:
    return x.complement() if x.term in terms else x


def apply(g: Relabeling, x, roles: Optional[Mapping[str, str]] = None):
    """Relabel a literal, statement, PCP, cell or conclusion.

    ``roles`` maps ``"s"``, ``"p"``, ``"m"`` to term names.  It is read off a
    PCP's structure or a conclusion's universe when omitted; bare statements
    default to the letters S, P, M.
    """
    if isinstance(x, PCP):
        roles = roles or {"s": x.s_term, "p": x.p_term, "m": x.middle}
        return PCP(apply(g, x.p, roles), apply(g, x.s, roles))
    if isinstance(x, (Cell, Conclusion)) and roles is None:
        u = (x if isinstance(x, Cell) else x.cell).universe
        if u.n != 3:
            raise ValueError("relabelings act on three-term universes only")
        roles = dict(zip(("s", "p", "m"), u.terms))
    terms = _flipped_terms(g, roles or _STANDARD_ROLES)
    if isinstance(x, Literal):
        return _flip(x, terms)
    if isinstance(x, StatementNF):
        return StatementNF(x.kind, tuple(_flip(y, terms) for y in x.lits))
    if isinstance(x, SurfaceStatement):
        return SurfaceStatement(x.form, _flip(x.subject, terms), _flip(x.predicate, terms))
    if isinstance(x, Cell):
        mask = sum(1 << x.universe.index(t) for t in terms)
        return Cell(x.universe, x.index ^ mask)
    if isinstance(x, Conclusion):
        return replace(
            x,
            cell=apply(g, x.cell, roles),
            literal=None if x.literal is None else _flip(x.literal, terms),
            ei_condition=None if x.ei_condition is None else _flip(x.ei_condition, terms),
            middle_dropped=None if x.middle_dropped is None else apply(g, x.middle_dropped, roles),
        )
    raise TypeError(f"cannot relabel {type(x).__name__}")


def _rename(st: StatementNF, names: Mapping[str, str]) -> StatementNF:
    return StatementNF(st.kind, tuple(Literal(names.get(y.term, y.term), y.positive) for y in st.lits))


def metathesis(pcp: PCP) -> PCP:
    """Swap the premises and exchange the S and P letters, keeping P in the first premise."""
    swap = {pcp.s_term: pcp.p_term, pcp.p_term: pcp.s_term}
    return PCP(_rename(pcp.s, swap), _rename(pcp.p, swap))


REPRESENTATIVES = {
    PcpType.T1: ("Barbara", "AE'"),
    PcpType.T2: ("Darapti", "AA"),
    PcpType.T3a: ("Darii", "AI"),
    PcpType.T3b: ("Disamis", "IA"),
}


@dataclass(frozen=True)
class CanonicalForm:
    representative: str
    code: str
    relabeling: Relabeling
    metathesis_applied: bool = False

    def __str__(self) -> str:
        via = self.relabeling.name
        if self.metathesis_applied:
            via += " after metathesis"
        return f"{self.representative} ({self.code}) via {via}"


def canonicalize(pcp: PCP, to_darii: bool = False) -> CanonicalForm:
    """Find the relabeling taking ``pcp`` onto its type's representative.

    Type 3b PCPs map to Disamis unless ``to_darii`` asks for a metathesis
    first, which turns them into Darii.
    """
    t = classify(pcp)
    if not t.entails:
        raise OutOfDomain(f"{pcp.code} is of {t} and entails no conclusion")
    source, swapped = pcp, False
    if t is PcpType.T3b and to_darii:
        source, swapped, t = metathesis(pcp), True, PcpType.T3a
    name, code = REPRESENTATIVES[t]
    target = PCP.from_code(code, s=source.s_term, p=source.p_term, m=source.middle)
    found = [g for g in ELEMENTS if apply(g, source) == target]
    if len(found) != 1:
        raise AssertionError(f"expected one relabeling onto {name}, found {found}")
    return CanonicalForm(name, code, found[0], swapped)
