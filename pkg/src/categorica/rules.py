"""Distribution and signature calculus, rule systems and their domains, empty-set constraints.

Distribution uses the expanded definition: in ``EMPTY{X,Y}`` the literals X
and Y are distributed and X', Y' are not; ``NONEMPTY`` swaps the roles.  The
signature of a statement is 1 (negative) or 0 (affirmative):
``sig(EMPTY{X,Y}) = 1 + s(X) + s(Y)`` and ``sig(NONEMPTY{X,Y}) = s(X) + s(Y)``
modulo 2, where a complemented literal has ``s = 1``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .core import (
    Kind,
    Literal,
    StatementNF,
    SurfaceStatement,
    Universe,
    emptied_region,
    normalize,
)
from .errors import MalformedError, OutOfDomain
from .oracle import entails, satisfiable
from .pcp import PCP, Conclusion, PcpType, classical_reading, classify, enumerate_all

__all__ = [
    "Distribution",
    "distribution",
    "signature",
    "Prediction",
    "rofvca_predict",
    "rofvca_dofa",
    "RuleAudit",
    "rofvca_check",
    "DofaReport",
    "rofvs_dofa",
    "EscVerdict",
    "esc_compatible",
    "Relation",
    "joint_universal_consequence",
    "CoexistenceReport",
    "coexistence",
]

Statement = Union[StatementNF, SurfaceStatement]


class Distribution(enum.Enum):
    DISTRIBUTED = "distributed"
    UNDISTRIBUTED = "undistributed"

    def __bool__(self) -> bool:
        return self is Distribution.DISTRIBUTED


def distribution(st: Statement, x: Literal) -> Distribution:
    nf = normalize(st)
    own = nf.literal_of(x.term)
    # the literals named in an EMPTY statement are distributed
    dist = nf.is_empty == (own == x)
    return Distribution.DISTRIBUTED if dist else Distribution.UNDISTRIBUTED


def signature(st: Statement) -> int:
    nf = normalize(st)
    s = sum(not x.positive for x in nf.lits)
    return (s + nf.is_empty) % 2


def _quality(bit: int) -> str:
    return "negative" if bit else "affirmative"


# ---------------------------------------------------------------------------
# RofVCA


@dataclass(frozen=True)
class Prediction:
    """What the four RofVCA say the middle-free conclusion must be."""

    statement: StatementNF
    reading: SurfaceStatement
    quantity: str
    quality: str
    ei_condition: Optional[Literal] = None
    consistent: bool = True
    reason: str = ""

    def __str__(self) -> str:
        out = str(self.reading)
        if self.ei_condition is not None:
            out += f" if {self.ei_condition} ≠ ∅"
        return out


def _end_distributions(pcp: PCP) -> dict:
    return {
        pcp.s_term: distribution(pcp.s, Literal(pcp.s_term)),
        pcp.p_term: distribution(pcp.p, Literal(pcp.p_term)),
    }


def _raw_prediction(pcp: PCP) -> Prediction:
    s, p = pcp.s_term, pcp.p_term
    want = _end_distributions(pcp)
    quality = signature(pcp.p) ^ signature(pcp.s)
    fits = []
    for kind in (Kind.EMPTY, Kind.NONEMPTY):
        for sp, pp in itertools.product((True, False), repeat=2):
            cand = StatementNF(kind, (Literal(s, sp), Literal(p, pp)))
            if signature(cand) != quality:
                continue
            if all(distribution(cand, Literal(t)) == d for t, d in want.items()):
                fits.append(cand)
    if len(fits) != 1:
        # conservation fixes the literals and parity the kind, so this cannot happen
        raise AssertionError(f"{pcp.code}: {len(fits)} candidate conclusions")
    (cand,) = fits
    particular = [not x.is_empty for x in pcp.premises]
    ei, consistent, reason = None, True, ""
    if cand.is_empty:
        quantity = "universal"
        if any(particular):
            consistent = False
            reason = "a particular premise demands a particular conclusion, the other rules a universal one"
    elif any(particular):
        quantity = "particular"
    else:
        quantity = "ei-particular"
        if pcp.mu_p == pcp.mu_s:
            ei = pcp.mu_p
        else:
            consistent = False
            reason = "two universal premises give a particular conclusion without a middle to import"
    return Prediction(cand, classical_reading(cand, s, p), quantity, _quality(quality),
                      ei, consistent, reason)


def rofvca_predict(pcp: PCP) -> Prediction:
    """The conclusion the RofVCA single out, for PCPs inside their domain."""
    t = classify(pcp)
    if not t.entails:
        raise OutOfDomain(f"{pcp.code} is of {t}, outside the RofVCA domain")
    return _raw_prediction(pcp)


def rofvca_dofa() -> dict:
    """Why each type is in or out of the RofVCA domain.

    Type 4a is excluded by fiat; the rules' own prediction contradicts them
    on types 4b, 5a and 5b.
    """
    out = {}
    for t in PcpType:
        pcps = [q for q in enumerate_all() if classify(q) is t]
        if t is PcpType.T4a:
            out[t] = "postulated outside"
        elif all(_raw_prediction(q).consistent for q in pcps):
            out[t] = "inside"
        elif not any(_raw_prediction(q).consistent for q in pcps):
            out[t] = "self-contradictory"
        else:
            out[t] = "mixed"
    return out


PASS, FAIL, NA = "pass", "fail", "n-a"


@dataclass(frozen=True)
class RuleAudit:
    results: dict = field(default_factory=dict)

    def verdict(self, rule: str) -> str:
        return self.results[rule][0]

    @property
    def passed(self) -> bool:
        return all(v != FAIL for v, _ in self.results.values())

    def to_json(self) -> dict:
        return {k: {"verdict": v, "reason": r} for k, (v, r) in self.results.items()}

    def lines(self) -> list:
        return [f"{k}: {v} ({r})" for k, (v, r) in self.results.items()]


def rofvca_check(pcp: PCP, conclusion, ei_condition: Optional[Literal] = None) -> RuleAudit:
    """Audit a middle-free conclusion of ``pcp`` against RofVCA #1 to #4.

    ``conclusion`` is a :class:`Conclusion` (its middle-dropped reading is
    audited) or a statement over the two end terms.
    """
    if isinstance(conclusion, Conclusion):
        ei_condition = conclusion.ei_condition
        if set(conclusion.cell.universe.terms) != {pcp.s_term, pcp.p_term, pcp.middle}:
            raise MalformedError("the conclusion is not about this PCP's terms")
        if conclusion.middle_dropped is None:
            note = "no middle-free reading"
            return RuleAudit({f"rofvca{i}": (NA, note) for i in range(1, 5)})
        conclusion = conclusion.middle_dropped
    lc = normalize(conclusion)
    if set(lc.terms) != {pcp.s_term, pcp.p_term}:
        raise MalformedError(f"{lc} does not relate the end terms {pcp.s_term}, {pcp.p_term}")
    t = classify(pcp)
    res = {}

    # 1: end-term distribution is conserved, except what ei on an end term releases
    changed = []
    for term, before in _end_distributions(pcp).items():
        after = distribution(lc, Literal(term))
        if after != before:
            changed.append((term, before, after))
    if not changed:
        res["rofvca1"] = (PASS, "S and P keep their distribution")
    elif (t is PcpType.T1 and ei_condition is not None and len(changed) == 1
          and changed[0][0] == ei_condition.term
          and distribution(pcp.s if ei_condition.term == pcp.s_term else pcp.p, ei_condition)
          and not distribution(lc, ei_condition)):
        res["rofvca1"] = (PASS, f"ei on {ei_condition} releases its distribution")
    else:
        term, before, after = changed[0]
        res["rofvca1"] = (FAIL, f"{term} goes from {before.value} to {after.value}")

    # 2: two universal premises give a universal conclusion unless ei is imposed
    if all(x.is_empty for x in pcp.premises):
        want_universal = ei_condition is None
        ok = lc.is_empty == want_universal
        need = "universal" if want_universal else "particular (ei imposed)"
        res["rofvca2"] = (PASS if ok else FAIL, f"two universal premises need a {need} conclusion")
    else:
        res["rofvca2"] = (NA, "a premise is particular")

    # 3: one particular premise gives a particular conclusion
    n_part = sum(not x.is_empty for x in pcp.premises)
    if n_part == 1:
        res["rofvca3"] = (PASS if not lc.is_empty else FAIL,
                          "one particular premise needs a particular conclusion")
    else:
        res["rofvca3"] = (NA, f"{n_part} particular premises")

    # 4: quality is the parity of the premises' signatures
    q = signature(pcp.p) ^ signature(pcp.s)
    ok = signature(lc) == q
    res["rofvca4"] = (PASS if ok else FAIL,
                      f"premises {_quality(signature(pcp.p))} and {_quality(signature(pcp.s))} "
                      f"need a {_quality(q)} conclusion, got {_quality(signature(lc))}")
    return RuleAudit(res)


# ---------------------------------------------------------------------------
# RofVS domain of applicability over the 36 positive-term PCPs

_FORMATS = (("A", "S", "P"), ("E", "S", "P"), ("I", "S", "P"), ("O", "S", "P"),
            ("A", "P", "S"), ("O", "P", "S"))


def _negative(st: StatementNF) -> bool:
    return signature(st) == 1


def _middle_distributed(pcp: PCP) -> bool:
    m = Literal(pcp.middle)
    return any(distribution(x, m) for x in pcp.premises)


def _rofvs_predictions(pcp: PCP) -> list:
    """LC formats allowed by RofVS #3 to #6."""
    negative = any(_negative(x) for x in pcp.premises)
    particular = any(not x.is_empty for x in pcp.premises)
    have = _end_distributions(pcp)
    names = {"S": pcp.s_term, "P": pcp.p_term}
    out = []
    for form, subj, pred in _FORMATS:
        st = SurfaceStatement(form, Literal(names[subj]), Literal(names[pred]))
        nf = normalize(st)
        if _negative(nf) != negative or (not nf.is_empty) != particular:
            continue
        if any(distribution(nf, Literal(t)) and not have[t] for t in have):
            continue
        out.append(st)
    return out


def _rofvs_reason(pcp: PCP) -> tuple:
    if all(_negative(x) for x in pcp.premises):
        return "#2", "two negative premises"
    if not _middle_distributed(pcp):
        return "#1", "middle term distributed in neither premise"
    if not _rofvs_predictions(pcp):
        return "#3", "the conclusion #4 and #6 demand would distribute an undistributed end term"
    return None, ""


@dataclass(frozen=True)
class DofaReport:
    removed: tuple
    candidates: tuple
    members: dict
    ei_only: tuple

    @property
    def boolean_vs(self) -> tuple:
        return tuple(c for c, st in self.members.items()
                     if (st.subject.term, st.predicate.term) == ("S", "P"))

    @property
    def reversed_members(self) -> tuple:
        return tuple(c for c in self.members if c not in self.boolean_vs)

    def stage_counts(self) -> dict:
        out = {}
        for _, stage, _, _ in self.removed:
            out[stage] = out.get(stage, 0) + 1
        return out

    def to_json(self) -> dict:
        return {
            "removed": [{"pcp": c, "stage": s, "rule": r, "reason": why}
                        for c, s, r, why in self.removed],
            "candidates": list(self.candidates),
            "members": {c: str(st) for c, st in self.members.items()},
            "boolean_vs": list(self.boolean_vs),
            "ei_only": list(self.ei_only),
        }


def rofvs_dofa() -> DofaReport:
    """Rebuild the RofVS domain of applicability in the order the removals are argued.

    Two negative premises with a universal one go first, then the two
    universal premises without a distributed middle, then every pair of
    particular premises, then types 5a and 5b.  Among the remaining
    candidates the ones with a unique, valid RofVS prediction form the
    domain; the rest need existential import the RofVS cannot express.
    """
    pool = enumerate_all(positive_only=True)
    removed, left = [], []
    for q in pool:
        parts = [not x.is_empty for x in q.premises]
        t = classify(q)
        rule, why = _rofvs_reason(q)
        if all(parts):
            removed.append((q.code, "two particular", rule or "#3", why))
        elif t in (PcpType.T5a, PcpType.T5b):
            removed.append((q.code, "type 5", rule, why))
        elif rule == "#2":
            removed.append((q.code, "#2", rule, why))
        elif rule == "#1":
            removed.append((q.code, "#1", rule, why))
        else:
            left.append(q)
    members, ei_only = {}, []
    for q in left:
        preds = _rofvs_predictions(q)
        if len(preds) == 1 and entails(q.universe, q.premises, (), normalize(preds[0])).holds:
            members[q.code] = preds[0]
        else:
            ei_only.append(q.code)
    order = {"#2": 0, "#1": 1, "two particular": 2, "type 5": 3}
    removed.sort(key=lambda r: order[r[1]])
    return DofaReport(tuple(removed), tuple(q.code for q in left), members, tuple(ei_only))


# ---------------------------------------------------------------------------
# empty-set constraints


@dataclass(frozen=True)
class EscVerdict:
    item: str
    compatible: bool
    witness: Optional[object] = None


def esc_compatible(pcp: PCP, conclusions: Sequence[Conclusion] = (),
                   esc: Sequence[Literal] = ()) -> list:
    """Check the premises, then each conclusion with its ei condition, against ``esc``.

    Each literal in ``esc`` is asserted empty.  An item is compatible when the
    premises, its ei condition and every constraint can hold together.
    """
    u = pcp.universe
    empties = [StatementNF.empty(x) for x in esc]
    base = list(pcp.premises) + empties
    out = [EscVerdict("premises", *_sat(u, base, ()))]
    for c in conclusions:
        assumptions = [] if c.ei_condition is None else [c.ei_condition]
        out.append(EscVerdict(c.text(), *_sat(u, base, assumptions)))
    return out


def _sat(u: Universe, premises, assumptions) -> tuple:
    m = satisfiable(u, premises, assumptions)
    return m is not None, m


# ---------------------------------------------------------------------------
# joint consequences of universal premises


@dataclass(frozen=True)
class Relation:
    """``left = ∅`` when ``right`` is None, else ``left = right``; ``kind`` "none" for no relation."""

    kind: str
    left: Optional[Literal] = None
    right: Optional[Literal] = None

    def __str__(self) -> str:
        if self.kind == "empty":
            return f"{self.left} = ∅"
        if self.kind == "equal":
            return f"{self.left} = {self.right}"
        return "none"


NO_RELATION = Relation("none")


def _empty_literals(u: Universe, emptied: int) -> list:
    return [x for x in u.literals() if u.literal_bits(x) & ~emptied == 0]


def _equal(u: Universe, x: Literal, y: Literal, covered: int) -> bool:
    diff = u.literal_bits(x) ^ u.literal_bits(y)
    return diff & ~covered == 0


def _equality(x: Literal, y: Literal) -> Relation:
    # written with the alphabetically later term first and positive
    if x.term < y.term:
        x, y = y, x
    if not x.positive:
        x, y = x.complement(), y.complement()
    return Relation("equal", x, y)


def _equalities(u: Universe, emptied: int, covered: int) -> list:
    out = []
    for t1, t2 in itertools.combinations(u.terms, 2):
        for pos in (True, False):
            x, y = Literal(t1), Literal(t2, pos)
            if _equal(u, x, y, emptied) and not _equal(u, x, y, covered):
                out.append(_equality(x, y))
    return out


def joint_universal_consequence(u1: Statement, u2: Statement) -> Relation:
    """What two universal statements about the same pair of terms force together."""
    a, b = normalize(u1), normalize(u2)
    if not (a.is_empty and b.is_empty):
        raise MalformedError("both statements must be universal")
    if set(a.terms) != set(b.terms) or len(a.terms) != 2:
        raise MalformedError(f"{a} and {b} are not about the same two terms")
    u = Universe(tuple(sorted(a.terms)))
    emptied = emptied_region(u, [a, b]).bits
    empty = _empty_literals(u, emptied)
    if empty:
        return Relation("empty", empty[0])
    eq = _equalities(u, emptied, 0)
    return eq[0] if eq else NO_RELATION


@dataclass(frozen=True)
class CoexistenceReport:
    consistent: bool
    empty: tuple = ()
    equal: tuple = ()

    @property
    def forced(self) -> bool:
        return bool(self.empty or self.equal) or not self.consistent

    def relations(self) -> list:
        return [str(r) for r in self.empty + self.equal]

    def __str__(self) -> str:
        if not self.consistent:
            return "inconsistent"
        return ", ".join(self.relations()) or "no forced structure"


def coexistence(*pcps: PCP) -> CoexistenceReport:
    """Structure forced on the universe when all premises of all ``pcps`` hold.

    Reports every literal forced empty and every literal equality that does
    not already follow from those empties.
    """
    premises = [x for q in pcps for x in q.premises]
    u = Universe.covering(premises, pcps[0].universe.terms if pcps else ())
    if satisfiable(u, premises) is None:
        return CoexistenceReport(False)
    emptied = emptied_region(u, [x for x in premises if x.is_empty]).bits
    empty = _empty_literals(u, emptied)
    covered = 0
    for x in empty:
        covered |= u.literal_bits(x)
    return CoexistenceReport(
        True,
        tuple(Relation("empty", x) for x in empty),
        tuple(_equalities(u, emptied, covered)),
    )
