"""Semantic ground truth: models are sets of inhabited cells.

Two independent routes decide entailment.

The exhaustive route enumerates every assignment of empty/inhabited to the
``2**n`` cells (``2**(2**n)`` models, so ``n <= 4``) with numpy and checks the
conclusion in each model that satisfies the premises.

The region route works at any ``n``.  Let ``E`` be the union of the products
the EMPTY premises declare empty and ``W_i`` the product regions of the
NONEMPTY premises and assumptions.  Every constraint talks about cells
independently, so:

* the premises are consistent iff no ``W_i`` lies inside ``E`` (the model
  "everything outside ``E`` is inhabited" then satisfies all of them);
* an EMPTY conclusion with region ``R`` follows iff ``R`` lies inside ``E``;
* a NONEMPTY conclusion with region ``C`` follows iff some ``W_i - E`` lies
  inside ``C``.  Otherwise choosing one cell of each ``W_i - E`` outside ``C``
  gives a countermodel.

The all-empty model is a legitimate model: no statement carries existential
import unless it is passed as an explicit assumption.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .core import Cell, Kind, Literal, Region, StatementNF, Universe, region_of_product
from .errors import CapabilityError
from .pcp import Conclusion

__all__ = [
    "DEFAULT_CAP",
    "HARD_CAP",
    "Model",
    "EntailmentVerdict",
    "entails",
    "satisfiable",
    "pinpoint_search",
    "inconsistent_premise",
    "sample_countermodel",
]

DEFAULT_CAP = 4
# 2**(2**5) models would not fit in memory
HARD_CAP = 4

Assumption = Union[Literal, StatementNF]
Target = Union[Conclusion, StatementNF]


@dataclass(frozen=True)
class Model:
    """The cells in ``nonempty`` are inhabited, every other cell is empty."""

    nonempty: Region

    @property
    def universe(self) -> Universe:
        return self.nonempty.universe

    def satisfies(self, st: Union[StatementNF, Conclusion, Literal]) -> bool:
        kind, bits, extra = _constraint(self.universe, st)
        if extra is not None and not self.nonempty.bits & extra:
            return True
        hit = bool(self.nonempty.bits & bits)
        return hit if kind is Kind.NONEMPTY else not hit

    def cell_names(self) -> list:
        return self.nonempty.names()

    def __str__(self) -> str:
        return "{" + ", ".join(self.cell_names()) + "}"


@dataclass(frozen=True)
class EntailmentVerdict:
    holds: bool
    countermodel: Optional[Model] = None

    def __post_init__(self) -> None:
        if self.holds == (self.countermodel is not None):
            raise ValueError("a verdict has a countermodel exactly when it fails")

    def __bool__(self) -> bool:
        return self.holds


def _local_cell(u: Universe, cell: Cell) -> int:
    if cell.universe == u:
        return cell.index
    return u.cell_of(cell.literals).index


def _constraint(u: Universe, x) -> tuple:
    """``(kind, region bits, ei bits)``; ei bits guard the claim when not None."""
    if isinstance(x, Literal):
        return Kind.NONEMPTY, u.literal_bits(x), None
    if isinstance(x, StatementNF):
        return x.kind, region_of_product(u, x.lits).bits, None
    if isinstance(x, Conclusion):
        c = 1 << _local_cell(u, x.cell)
        if x.is_universal:
            return Kind.EMPTY, u.literal_bits(x.literal) & ~c, None
        guard = None if x.ei_condition is None else u.literal_bits(x.ei_condition)
        return Kind.NONEMPTY, c, guard
    raise TypeError(f"not a constraint: {x!r}")


def _split(u: Universe, premises: Iterable, assumptions: Iterable) -> tuple:
    """Emptied bits and the list of witness regions that must be inhabited."""
    emptied, witnesses = 0, []
    for x in list(premises) + list(assumptions):
        kind, bits, _ = _constraint(u, x)
        if kind is Kind.EMPTY:
            emptied |= bits
        else:
            witnesses.append(bits)
    return emptied, witnesses


def _check_cap(u: Universe, cap: int) -> None:
    if not 0 < cap <= HARD_CAP:
        raise ValueError(f"the exhaustive cap must lie in 1..{HARD_CAP}")
    if u.n > cap:
        raise CapabilityError(
            f"exhaustive enumeration is capped at {cap} terms; universe has {u.n}")


@functools.lru_cache(maxsize=None)
def _all_models(n: int) -> np.ndarray:
    return np.arange(1 << (1 << n), dtype=np.uint64)


def _mask(models: np.ndarray, kind: Kind, bits: int) -> np.ndarray:
    hit = (models & np.uint64(bits)) != 0
    return hit if kind is Kind.NONEMPTY else ~hit


def _surviving(u: Universe, constraints: Iterable) -> np.ndarray:
    models = _all_models(u.n)
    keep = np.ones(models.shape, dtype=bool)
    for x in constraints:
        kind, bits, _ = _constraint(u, x)
        keep &= _mask(models, kind, bits)
    return models[keep]


def _model(u: Universe, bits: int) -> Model:
    return Model(Region(u, int(bits)))


def _with_guard(target: Target, assumptions: list) -> tuple:
    """Move an ei condition into the assumptions; return the plain target."""
    if isinstance(target, Conclusion) and target.ei_condition is not None:
        plain = Conclusion.existential(target.cell)
        return plain, assumptions + [target.ei_condition]
    return target, assumptions


def entails(u: Universe, premises: Sequence, assumptions: Sequence[Assumption] = (),
            conclusion: Target = None, method: str = "auto",
            cap: int = DEFAULT_CAP) -> EntailmentVerdict:
    """Do the premises and assumptions force ``conclusion`` in every model?

    ``method`` is ``"exhaustive"``, ``"region"`` or ``"auto"`` (exhaustive up
    to ``cap`` terms, region route above).
    """
    if conclusion is None:
        raise TypeError("entails() needs a conclusion")
    target, assumptions = _with_guard(conclusion, list(assumptions))
    if method == "auto":
        method = "exhaustive" if u.n <= min(cap, HARD_CAP) else "region"
    if method == "exhaustive":
        _check_cap(u, cap)
        models = _surviving(u, list(premises) + assumptions)
        kind, bits, _ = _constraint(u, target)
        bad = models[~_mask(models, kind, bits)]
        if len(bad):
            return EntailmentVerdict(False, _model(u, bad[0]))
        return EntailmentVerdict(True)
    if method == "region":
        return _entails_region(u, premises, assumptions, target)
    raise ValueError(f"unknown method {method!r}")


def _entails_region(u, premises, assumptions, target) -> EntailmentVerdict:
    emptied, witnesses = _split(u, premises, assumptions)
    live = [w & ~emptied for w in witnesses]
    if not all(live):
        return EntailmentVerdict(True)
    kind, bits, _ = _constraint(u, target)
    if kind is Kind.EMPTY:
        if bits & ~emptied == 0:
            return EntailmentVerdict(True)
        return EntailmentVerdict(False, _model(u, u.full_bits & ~emptied))
    if any(w & ~bits == 0 for w in live):
        return EntailmentVerdict(True)
    counter = 0
    for w in live:
        outside = w & ~bits
        counter |= outside & -outside
    return EntailmentVerdict(False, _model(u, counter))


def satisfiable(u: Universe, premises: Sequence, assumptions: Sequence[Assumption] = (),
                method: str = "auto", cap: int = DEFAULT_CAP) -> Optional[Model]:
    """A model of the premises and assumptions, or None when there is none."""
    if method == "auto":
        method = "exhaustive" if u.n <= min(cap, HARD_CAP) else "region"
    if method == "exhaustive":
        _check_cap(u, cap)
        models = _surviving(u, list(premises) + list(assumptions))
        return _model(u, models[0]) if len(models) else None
    if method == "region":
        emptied, witnesses = _split(u, premises, assumptions)
        if all(w & ~emptied for w in witnesses):
            return _model(u, u.full_bits & ~emptied)
        return None
    raise ValueError(f"unknown method {method!r}")


def inconsistent_premise(u: Universe, premises: Sequence[StatementNF]) -> Optional[int]:
    """Index of the first NONEMPTY premise whose witness region is emptied."""
    emptied, _ = _split(u, [p for p in premises if p.is_empty], ())
    for i, p in enumerate(premises):
        if not p.is_empty and region_of_product(u, p.lits).bits & ~emptied == 0:
            return i
    return None


def pinpoint_search(u: Universe, premises: Sequence[StatementNF]) -> list:
    """Every one-cell conclusion the premises force, ordered by ``sort_key``.

    A literal whose surviving region is a single cell gives a universal
    pinpoint and its ei variant; a NONEMPTY premise whose surviving witness
    region is a single cell gives an existential pinpoint.  Inconsistent
    premises yield nothing.
    """
    if inconsistent_premise(u, premises) is not None:
        return []
    emptied, witnesses = _split(u, premises, ())
    out = set()
    for x in u.literals():
        left = Region(u, u.literal_bits(x) & ~emptied).single()
        if left is not None:
            out.add(Conclusion.universal(x, left))
            out.add(Conclusion.existential(left, x))
    for w in witnesses:
        left = Region(u, w & ~emptied).single()
        if left is not None:
            out.add(Conclusion.existential(left))
    return sorted(out, key=lambda c: c.sort_key)


def sample_countermodel(u: Universe, premises: Sequence, assumptions: Sequence[Assumption] = (),
                        conclusion: Target = None, seed: int = 0,
                        samples: int = 10_000) -> Optional[Model]:
    """Look for a countermodel among random models.

    Only ever refutes: None means "none found", not "the conclusion holds".
    """
    target, assumptions = _with_guard(conclusion, list(assumptions))
    rng = np.random.default_rng(seed)
    constraints = list(premises) + assumptions
    size = u.cell_count
    for _ in range(samples):
        cells = np.flatnonzero(rng.random(size) < 0.5)
        bits = sum(1 << int(k) for k in cells)
        m = _model(u, bits)
        if all(m.satisfies(x) for x in constraints) and not m.satisfies(target):
            return m
    return None
