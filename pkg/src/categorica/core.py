"""Terms, literals, categorical statements and the cell/region algebra.

A universe over ``n`` ordered terms is partitioned into ``2**n`` cells.  Cell
``k`` lies in the positive half of term ``i`` iff bit ``i`` of ``k`` is set,
so a region (a set of cells) is stored as a Python ``int`` of ``2**n`` bits.
"""

from __future__ import annotations

import enum
import functools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "MAX_TERMS",
    "Kind",
    "Literal",
    "SurfaceStatement",
    "StatementNF",
    "Universe",
    "Cell",
    "Region",
    "lit",
    "product_text",
    "normalize",
    "surface_forms",
    "region_of_product",
    "emptied_region",
    "STANDARD",
]

MAX_TERMS = 16


@dataclass(frozen=True)
class Literal:
    """A term letter with a polarity; ``M'`` is the complement of ``M``."""

    term: str
    positive: bool = True

    def __post_init__(self) -> None:
        if not self.term:
            raise ValueError("empty term name")

    def complement(self) -> "Literal":
        return Literal(self.term, not self.positive)

    @property
    def sort_key(self) -> tuple:
        # positive before complemented
        return (self.term, not self.positive)

    def __str__(self) -> str:
        return self.term if self.positive else self.term + "'"

    def __repr__(self) -> str:
        return f"lit({str(self)!r})"


_SIMPLE = re.compile(r"[A-Za-z][0-9]*\Z")


def product_text(lits: Iterable[Literal]) -> str:
    """Juxtapose literals (``SP'M``), or space them out when a name has several letters."""
    lits = list(lits)
    sep = "" if all(_SIMPLE.match(x.term) for x in lits) else " "
    return sep.join(map(str, lits))


def lit(text: str) -> Literal:
    """Build a literal from ``"M"`` or ``"M'"`` (``"non-M"`` also accepted)."""
    text = text.strip()
    if text.startswith("non-"):
        return Literal(text[4:], False)
    if text.endswith("'"):
        return Literal(text[:-1], False)
    return Literal(text, True)


class Kind(enum.Enum):
    EMPTY = "EMPTY"
    NONEMPTY = "NONEMPTY"


@dataclass(frozen=True)
class SurfaceStatement:
    """One of the A/E/I/O forms with literal subject and predicate."""

    form: str
    subject: Literal
    predicate: Literal

    def __post_init__(self) -> None:
        if self.form not in ("A", "E", "I", "O"):
            raise ValueError(f"unknown statement form {self.form!r}")
        if self.subject.term == self.predicate.term:
            raise ValueError(
                f"malformed statement: {self.subject} and {self.predicate} share a term")

    @property
    def universal(self) -> bool:
        return self.form in ("A", "E")

    def __str__(self) -> str:
        return f"{self.form}({self.subject},{self.predicate})"

    def english(self) -> str:
        s, p = self.subject, self.predicate
        return {
            "A": f"All {s} are {p}",
            "E": f"No {s} are {p}",
            "I": f"Some {s} are {p}",
            "O": f"Some {s} are not {p}",
        }[self.form]


@dataclass(frozen=True)
class StatementNF:
    """``EMPTY``: the product of ``lits`` is empty; ``NONEMPTY``: it is inhabited.

    Categorical statements always carry two literals.  Products of other
    lengths only come from sorite equations such as ``d'n'm' = 0``.
    """

    kind: Kind
    lits: tuple

    def __post_init__(self) -> None:
        lits = tuple(sorted(self.lits, key=lambda x: x.sort_key))
        if not lits:
            raise ValueError("a statement needs at least one literal")
        terms = [x.term for x in lits]
        if len(set(terms)) != len(terms):
            raise ValueError(
                "malformed statement: term repeated in " + "".join(map(str, lits)))
        object.__setattr__(self, "lits", lits)

    @classmethod
    def empty(cls, *lits: Literal) -> "StatementNF":
        return cls(Kind.EMPTY, tuple(lits))

    @classmethod
    def nonempty(cls, *lits: Literal) -> "StatementNF":
        return cls(Kind.NONEMPTY, tuple(lits))

    @property
    def is_empty(self) -> bool:
        return self.kind is Kind.EMPTY

    @property
    def terms(self) -> tuple:
        return tuple(x.term for x in self.lits)

    def literal_of(self, term: str) -> Literal:
        for x in self.lits:
            if x.term == term:
                return x
        raise KeyError(f"term {term!r} does not occur in {self}")

    def equation(self) -> str:
        rel = "=" if self.is_empty else "!="
        return product_text(self.lits) + f" {rel} 0"

    def __str__(self) -> str:
        return f"{self.kind.value}{{{', '.join(map(str, self.lits))}}}"


Statement = Union[SurfaceStatement, StatementNF]


def normalize(s: Statement) -> StatementNF:
    """Rewrite a surface statement as an (in)emptiness assertion on two literals."""
    if isinstance(s, StatementNF):
        return s
    x, y = s.subject, s.predicate
    if s.form == "A":
        return StatementNF.empty(x, y.complement())
    if s.form == "E":
        return StatementNF.empty(x, y)
    if s.form == "I":
        return StatementNF.nonempty(x, y)
    return StatementNF.nonempty(x, y.complement())


def surface_forms(nf: StatementNF) -> list:
    """All distinct A/E/I/O readings whose normal form is ``nf``."""
    if len(nf.lits) != 2:
        raise ValueError("only two-literal statements have surface readings")
    x, y = nf.lits
    if nf.is_empty:
        out = [
            SurfaceStatement("E", x, y),
            SurfaceStatement("E", y, x),
            SurfaceStatement("A", x, y.complement()),
            SurfaceStatement("A", y, x.complement()),
        ]
    else:
        out = [
            SurfaceStatement("I", x, y),
            SurfaceStatement("I", y, x),
            SurfaceStatement("O", x, y.complement()),
            SurfaceStatement("O", y, x.complement()),
        ]
    return out


@functools.lru_cache(maxsize=None)
def _half_mask(n: int, i: int) -> int:
    """Bit mask of the cells lying in the positive half of term ``i``."""
    size = 1 << n
    block = 1 << i
    period = block << 1
    full = (1 << size) - 1
    # one set bit per period, then widen each to a block of ones
    ticks = full // ((1 << period) - 1)
    return ticks * (((1 << block) - 1) << block)


@dataclass(frozen=True)
class Universe:
    """An ordered list of term names; cell ``k`` has bit ``i`` set iff it is inside term ``i``."""

    terms: tuple

    def __post_init__(self) -> None:
        terms = tuple(self.terms)
        if not 1 <= len(terms) <= MAX_TERMS:
            raise ValueError(f"a universe needs 1..{MAX_TERMS} terms, got {len(terms)}")
        if len(set(terms)) != len(terms) or not all(terms):
            raise ValueError(f"term names must be unique and non-empty: {terms}")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, names: Union[str, Iterable[str]]) -> "Universe":
        if isinstance(names, str):
            if "," in names:
                names = [t.strip() for t in names.split(",") if t.strip()]
            else:
                names = [c for c in names if not c.isspace()]
        return cls(tuple(names))

    @classmethod
    def covering(cls, statements: Iterable[StatementNF], order: Sequence[str] = ()) -> "Universe":
        """Universe of the terms in ``order`` followed by any others, by first appearance."""
        names = list(order)
        for st in statements:
            for x in st.lits:
                if x.term not in names:
                    names.append(x.term)
        return cls(tuple(names))

    @property
    def n(self) -> int:
        return len(self.terms)

    @property
    def cell_count(self) -> int:
        return 1 << len(self.terms)

    @property
    def full_bits(self) -> int:
        return (1 << self.cell_count) - 1

    def index(self, term: str) -> int:
        try:
            return self.terms.index(term)
        except ValueError:
            raise KeyError(f"term {term!r} is not in universe {''.join(self.terms)}") from None

    def literal_bits(self, x: Literal) -> int:
        half = _half_mask(self.n, self.index(x.term))
        return half if x.positive else self.full_bits ^ half

    def region(self, bits: int) -> "Region":
        return Region(self, bits)

    def full(self) -> "Region":
        return Region(self, self.full_bits)

    def nothing(self) -> "Region":
        return Region(self, 0)

    def cell(self, index: int) -> "Cell":
        return Cell(self, index)

    def cells(self) -> Iterator["Cell"]:
        for k in range(self.cell_count):
            yield Cell(self, k)

    def cell_of(self, lits: Iterable[Literal]) -> "Cell":
        """The cell named by a full product (every term exactly once)."""
        lits = list(lits)
        seen = {x.term for x in lits}
        if len(lits) != self.n or seen != set(self.terms):
            raise ValueError("a cell needs exactly one literal per term")
        k = 0
        for x in lits:
            if x.positive:
                k |= 1 << self.index(x.term)
        return Cell(self, k)

    def literals(self) -> list:
        """Every literal of the universe, in term order, positive first."""
        return [Literal(t, pos) for t in self.terms for pos in (True, False)]

    def __str__(self) -> str:
        return ",".join(self.terms)


@dataclass(frozen=True)
class Cell:
    universe: Universe
    index: int

    def __post_init__(self) -> None:
        if not 0 <= self.index < self.universe.cell_count:
            raise ValueError(f"cell index {self.index} out of range")

    @property
    def literals(self) -> tuple:
        return tuple(Literal(t, bool(self.index >> i & 1))
                     for i, t in enumerate(self.universe.terms))

    def contains(self, x: Literal) -> bool:
        return bool(self.index >> self.universe.index(x.term) & 1) == x.positive

    @property
    def bits(self) -> int:
        return 1 << self.index

    @property
    def name(self) -> str:
        return product_text(self.literals)

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"Cell({self.name})"


@dataclass(frozen=True)
class Region:
    """A set of cells of ``universe``, held as a bit vector."""

    universe: Universe
    bits: int

    def _check(self, other: "Region") -> None:
        if other.universe != self.universe:
            raise ValueError("regions belong to different universes")

    def __and__(self, other: "Region") -> "Region":
        self._check(other)
        return Region(self.universe, self.bits & other.bits)

    def __or__(self, other: "Region") -> "Region":
        self._check(other)
        return Region(self.universe, self.bits | other.bits)

    def __sub__(self, other: "Region") -> "Region":
        self._check(other)
        return Region(self.universe, self.bits & ~other.bits)

    def __invert__(self) -> "Region":
        return Region(self.universe, self.universe.full_bits ^ self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __iter__(self) -> Iterator[Cell]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield Cell(self.universe, low.bit_length() - 1)
            bits ^= low

    def __contains__(self, cell: Cell) -> bool:
        return bool(self.bits >> cell.index & 1)

    def issubset(self, other: "Region") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def single(self) -> Union[Cell, None]:
        """The only cell of the region, or None if it has zero or several."""
        if self.bits and self.bits & (self.bits - 1) == 0:
            return Cell(self.universe, self.bits.bit_length() - 1)
        return None

    def names(self) -> list:
        return [c.name for c in self]

    def __repr__(self) -> str:
        return f"Region({self.names()})"


def region_of_product(u: Universe, lits: Iterable[Literal]) -> Region:
    """Intersection of the literals' halves; the empty product is the whole universe."""
    bits = u.full_bits
    for x in lits:
        bits &= u.literal_bits(x)
    return Region(u, bits)


def emptied_region(u: Universe, universals: Iterable[StatementNF]) -> Region:
    """Union of the products that the given EMPTY statements declare empty."""
    bits = 0
    for st in universals:
        if not st.is_empty:
            raise ValueError(f"{st} is not a universal (EMPTY) statement")
        bits |= region_of_product(u, st.lits).bits
    return Region(u, bits)


STANDARD = Universe(("S", "P", "M"))
