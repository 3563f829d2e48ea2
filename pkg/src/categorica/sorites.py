"""Biliteral sorites over any number of terms.

Three ways in: :func:`solve` lists the one-cell conclusions (it delegates to
the region route of the oracle), :func:`substitution_trace` decomposes a
starting literal step by step, and :func:`eliminated_lc` mines the emptied
region for products built only from retinends.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .core import Literal, Region, StatementNF, Universe, emptied_region, lit, product_text, region_of_product
from .oracle import inconsistent_premise, pinpoint_search

__all__ = [
    "Sorite",
    "SoriteSolution",
    "SubstitutionTrace",
    "EliminationResult",
    "solve",
    "substitution_trace",
    "retinends",
    "eliminated_lc",
    "verify_universal",
    "includes",
    "catalog",
    "carroll",
]

# the unrestricted prime-implicant search walks 3**n products
UNRESTRICTED_CAP = 12


@dataclass(frozen=True)
class Sorite:
    universe: Universe
    premises: tuple

    def __post_init__(self) -> None:
        premises = tuple(self.premises)
        known = set(self.universe.terms)
        for p in premises:
            missing = set(p.terms) - known
            if missing:
                raise ValueError(f"{p} uses terms outside the universe: {sorted(missing)}")
        object.__setattr__(self, "premises", premises)

    @classmethod
    def of(cls, premises: Iterable[StatementNF], order: Sequence[str] = ()) -> "Sorite":
        """Sorite over the premises' terms; ``order`` fixes the leading terms."""
        premises = tuple(premises)
        return cls(Universe.covering(premises, order), premises)

    @property
    def universals(self) -> tuple:
        return tuple(p for p in self.premises if p.is_empty)

    @property
    def all_universal(self) -> bool:
        return all(p.is_empty for p in self.premises)

    def emptied(self) -> Region:
        return emptied_region(self.universe, self.universals)


def _require_universal(s: Sorite, what: str) -> None:
    if not s.all_universal:
        raise ValueError(f"{what} needs universal (EMPTY) premises only")


@dataclass(frozen=True)
class SoriteSolution:
    conclusions: tuple
    consistent: bool = True
    offending: Optional[int] = None

    @property
    def lcs(self) -> tuple:
        """Conclusions that need no existential import."""
        return tuple(c for c in self.conclusions if not c.is_ei)

    def __len__(self) -> int:
        return len(self.lcs)


def solve(s: Sorite) -> SoriteSolution:
    bad = inconsistent_premise(s.universe, s.premises)
    if bad is not None:
        return SoriteSolution((), False, bad)
    return SoriteSolution(tuple(pinpoint_search(s.universe, s.premises)))


@dataclass(frozen=True)
class SubstitutionTrace:
    start: tuple
    steps: tuple = ()
    final: tuple = ()
    succeeded: bool = False
    universe: Optional[Universe] = field(default=None, compare=False)

    @property
    def order(self) -> list:
        """1-based positions of the premises used, in the order used."""
        return [i + 1 for i, _ in self.steps]

    def product(self) -> str:
        return product_text(self.final)

    def text(self) -> str:
        chain = [product_text(self.start)] + [product_text(lits) for _, lits in self.steps]
        return " = ".join(chain)


def substitution_trace(s: Sorite, start) -> SubstitutionTrace:
    """Decompose ``start`` by repeatedly discarding a null part.

    A premise ``x1...xk y = 0`` applies when ``x1...xk`` are already in the
    product and ``y``'s term is not: the part with ``y`` is empty, so ``y'``
    is appended.  Premises are scanned in input order and each is used at
    most once.  ``start`` is a literal or a product of literals.
    """
    _require_universal(s, "a substitution trace")
    product = [start] if isinstance(start, Literal) else list(start)
    start = tuple(product)
    used = set()
    steps = []
    progress = True
    while progress:
        progress = False
        for i, p in enumerate(s.premises):
            if i in used:
                continue
            have = set(product)
            missing = [x for x in p.lits if x not in have]
            if len(missing) != 1:
                continue
            y = missing[0]
            if any(x.term == y.term for x in product):
                continue
            product.append(y.complement())
            used.add(i)
            steps.append((i, tuple(product)))
            progress = True
            break
    done = len(product) == s.universe.n
    return SubstitutionTrace(start, tuple(steps), tuple(product), done, s.universe)


def retinends(s: Sorite) -> frozenset:
    """Literals whose term occurs in the premises with one polarity only."""
    seen = {}
    for p in s.premises:
        for x in p.lits:
            seen.setdefault(x.term, set()).add(x.positive)
    return frozenset(Literal(t, pos.pop()) for t, pos in seen.items() if len(pos) == 1)


@dataclass(frozen=True)
class EliminationResult:
    retinends: frozenset
    empty_products: tuple

    def equations(self) -> list:
        return [product_text(rho) + " = 0" for rho in self.empty_products]


def _minimal_products(u: Universe, emptied: int, candidates: list) -> list:
    """Minimal products (by literal set) drawn from ``candidates`` that lie in ``emptied``."""
    by_term = {}
    for x in candidates:
        by_term.setdefault(x.term, []).append(x)
    terms = [t for t in u.terms if t in by_term]
    found = []
    for k in range(1, len(terms) + 1):
        for chosen in itertools.combinations(terms, k):
            for lits in itertools.product(*(by_term[t] for t in chosen)):
                if any(set(f) <= set(lits) for f in found):
                    continue
                if region_of_product(u, lits).bits & ~emptied == 0:
                    found.append(lits)
    return found


def eliminated_lc(s: Sorite, unrestricted: bool = False) -> EliminationResult:
    """Minimal empty products over the retinends (over every literal if ``unrestricted``)."""
    _require_universal(s, "elimination")
    rets = retinends(s)
    u = s.universe
    if unrestricted:
        if u.n > UNRESTRICTED_CAP:
            raise ValueError(f"unrestricted elimination is capped at {UNRESTRICTED_CAP} terms")
        candidates = u.literals()
    else:
        candidates = sorted(rets, key=lambda x: (u.index(x.term), not x.positive))
    products = _minimal_products(u, s.emptied().bits, candidates)
    return EliminationResult(rets, tuple(products))


def verify_universal(s: Sorite, product: Sequence[Literal]) -> bool:
    """Is the product emptied by the premises?"""
    _require_universal(s, "universal verification")
    return region_of_product(s.universe, product).issubset(s.emptied())


def includes(x: str, y: str) -> StatementNF:
    """``x`` is included in ``y``, that is ``x y' = 0``; names may carry a prime."""
    return StatementNF.empty(lit(x), lit(y).complement())


def _chain(*names: str) -> list:
    return [includes(a, b) for a, b in zip(names, names[1:])]


def carroll() -> Sorite:
    """Carroll's ten-term, eight-premise sorite."""
    rows = ["d' n' m'", "k a' c'", "l e m", "d h k'", "h' l a'", "h m' b'", "a' b n", "a m' e"]
    premises = [StatementNF.empty(*map(lit, r.split())) for r in rows]
    return Sorite.of(premises)


def catalog() -> dict:
    """Small fixed instances of the Barbara, Darapti and Darii sorites and their decorations.

    SOR3 is rebuilt from its description: one particular premise joining
    two terms, each of which opens an inclusion chain.
    """
    sor1 = _chain("S", "M1", "M2", "P")
    entries = {
        "SOR1": sor1,
        "SOR2": [includes("M", "S"), includes("M", "M1"), includes("M", "P")],
        "SOR3": [StatementNF.nonempty(lit("X"), lit("Y")), includes("X", "S"), includes("Y", "P")],
        # a loop leaving the chain at M1 and rejoining it at M2
        "SOR1a": sor1 + _chain("M1", "A1", "A2", "A3", "M2"),
        # an open branch off M1
        "SOR1b": _chain("S", "M1", "P") + _chain("M1", "A1", "A2", "A3"),
        "SOR1c": _chain("S", "M1", "M2", "M3", "P") + _chain("M2", "B1", "B2", "B3", "M3"),
        # branches on M1' and M2 block both readings
        "SOR1bd": sor1 + _chain("M1'", "A1", "A2") + [includes("M2", "G1")],
        # two branches on M2' keep only the reading that starts from P'
        "SOR1de": sor1 + [includes("M2'", "G1"), includes("M2'", "D1")],
    }
    order = ("M", "X", "Y", "S", "M1", "M2", "M3", "P")
    return {name: Sorite.of(ps, [t for t in order if any(t in p.terms for p in ps)])
            for name, ps in entries.items()}
