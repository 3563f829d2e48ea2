"""Text syntax for statements, conclusions and sorite files.

Accepted statement shapes::

    All M are P          No S' is P         Some x is not non-y
    A(M,P)               O(S',P)
    MP' = 0              SM != 0            d'n'm' = 0   (sorite mode)
    EMPTY{M, P'}         NONEMPTY{boys, girls'}

Juxtaposed equation literals are a letter, optional digits and an optional
apostrophe, so ``M1P'`` reads as ``M1`` and ``P'``.  Separating literals by
spaces allows longer names: ``boys girls' = 0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

from .core import Kind, Literal, StatementNF, SurfaceStatement, Universe, normalize
from .errors import MalformedError
from .pcp import Conclusion

__all__ = [
    "ParseError",
    "parse_statement",
    "parse_literal",
    "parse_product",
    "parse_conclusion",
    "parse_sorite",
    "render",
    "SoriteLine",
]

_IDENT = r"[A-Za-z_][A-Za-z0-9_]*"
_TERM_RE = re.compile(rf"(non-)?({_IDENT})(')?")
_EQ_LIT_RE = re.compile(r"([A-Za-z][0-9]*)(')?")
_QUANT = {"all": "A", "no": "E", "some": "I"}


class ParseError(MalformedError):
    def __init__(self, message: str, line: int = 1, column: int = 1, text: str = ""):
        self.message, self.line, self.column, self.text = message, line, column, text
        super().__init__(f"line {line}, column {column}: {message}")


class _Cursor:
    def __init__(self, text: str, line: int = 1):
        self.text, self.pos, self.line = text, 0, line

    def error(self, message: str, pos: Optional[int] = None) -> ParseError:
        col = (self.pos if pos is None else pos) + 1
        return ParseError(message, self.line, col, self.text)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def word(self) -> tuple:
        self.skip()
        m = re.compile(_IDENT).match(self.text, self.pos)
        if not m:
            return "", self.pos
        return m.group(), m.start()

    def take_word(self, *choices: str) -> str:
        w, at = self.word()
        if w.lower() not in choices:
            want = " or ".join(repr(c) for c in choices)
            raise self.error(f"expected {want}, found {w or self._here()!r}", at)
        self.pos = at + len(w)
        return w.lower()

    def take(self, token: str) -> None:
        self.skip()
        if not self.text.startswith(token, self.pos):
            raise self.error(f"expected {token!r}, found {self._here()!r}")
        self.pos += len(token)

    def literal(self) -> Literal:
        self.skip()
        m = _TERM_RE.match(self.text, self.pos)
        if not m:
            raise self.error(f"expected a term, found {self._here()!r}")
        if m.group(1) and m.group(3):
            raise self.error("use either 'non-' or an apostrophe, not both")
        self.pos = m.end()
        return Literal(m.group(2), not (m.group(1) or m.group(3)))

    def finish(self) -> None:
        if not self.at_end():
            raise self.error(f"unexpected {self._here()!r}")

    def _here(self) -> str:
        rest = self.text[self.pos:].split()
        return rest[0] if rest else "end of input"


def _surface(cur: _Cursor) -> SurfaceStatement:
    q = cur.take_word(*_QUANT)
    cur.skip()
    start = cur.pos
    subject = cur.literal()
    cur.take_word("is", "are")
    negated = False
    w, at = cur.word()
    if w.lower() == "not":
        if q != "some":
            raise cur.error("only 'Some ... not' statements take 'not'", at)
        cur.pos = at + 3
        negated = True
    predicate = cur.literal()
    cur.finish()
    form = "O" if negated else _QUANT[q]
    if subject.term == predicate.term:
        raise cur.error(f"subject and predicate share the term {subject.term!r}", start)
    return SurfaceStatement(form, subject, predicate)


def _functional(cur: _Cursor) -> SurfaceStatement:
    cur.skip()
    form = cur.text[cur.pos]
    cur.pos += 1
    cur.take("(")
    cur.skip()
    start = cur.pos
    x = cur.literal()
    cur.take(",")
    y = cur.literal()
    cur.take(")")
    cur.finish()
    if x.term == y.term:
        raise cur.error(f"both arguments use the term {x.term!r}", start)
    return SurfaceStatement(form, x, y)


def _braced(cur: _Cursor) -> StatementNF:
    kind = Kind(cur.take_word("empty", "nonempty").upper())
    cur.take("{")
    lits = [cur.literal()]
    while True:
        cur.skip()
        if cur.text.startswith(",", cur.pos):
            cur.pos += 1
            lits.append(cur.literal())
        else:
            break
    cur.take("}")
    cur.finish()
    return _product_statement(cur, kind, lits, 0)


def _product_statement(cur: _Cursor, kind: Kind, lits: list, at: int) -> StatementNF:
    terms = [x.term for x in lits]
    dup = next((t for t in terms if terms.count(t) > 1), None)
    if dup is not None:
        raise cur.error(f"term {dup!r} repeated in product", at)
    return StatementNF(kind, tuple(lits))


def _product(cur: _Cursor, stop: str) -> tuple:
    """Literals up to (not including) any of ``stop``.

    ``SP'M`` juxtaposes one-letter names (digits allowed); a product with
    spaces lists whole names, as in ``boys girls' toys``.
    """
    cur.skip()
    start = cur.pos
    end = start
    while end < len(cur.text) and cur.text[end] not in stop:
        end += 1
    span = cur.text[start:end].rstrip()
    if not span:
        raise cur.error("expected a product of literals", start)
    spaced = len(span.split()) > 1
    pattern = _TERM_RE if spaced else _EQ_LIT_RE
    lits = []
    while True:
        cur.skip()
        if cur.pos >= start + len(span):
            break
        m = pattern.match(cur.text, cur.pos)
        if not m or (spaced and m.end() < len(cur.text) and not cur.text[m.end()].isspace()
                     and cur.text[m.end()] not in stop):
            raise cur.error(f"unexpected character {cur.text[cur.pos]!r}")
        if spaced:
            lits.append(Literal(m.group(2), not (m.group(1) or m.group(3))))
        else:
            lits.append(Literal(m.group(1), m.group(2) is None))
        cur.pos = m.end()
    return lits, start


def _equation(cur: _Cursor, sorite: bool) -> StatementNF:
    lits, start = _product(cur, "=!≠")
    cur.skip()
    if cur.text.startswith("!=", cur.pos):
        kind, cur.pos = Kind.NONEMPTY, cur.pos + 2
    elif cur.text.startswith("≠", cur.pos):
        kind, cur.pos = Kind.NONEMPTY, cur.pos + 1
    elif cur.text.startswith("=", cur.pos):
        kind, cur.pos = Kind.EMPTY, cur.pos + 1
    else:
        raise cur.error("expected '=' or '!='")
    cur.skip()
    if cur.pos < len(cur.text) and cur.text[cur.pos] in "0∅":
        cur.pos += 1
    else:
        raise cur.error("the right-hand side of an equation must be 0")
    cur.finish()
    if len(lits) != 2 and not sorite:
        raise cur.error(f"a categorical statement relates two terms, this product has {len(lits)}",
                        start)
    return _product_statement(cur, kind, lits, start)


_MULTI = re.compile(r"\bor\b", re.IGNORECASE)


def parse_statement(text: str, sorite: bool = False, line: int = 1
                    ) -> Union[SurfaceStatement, StatementNF]:
    """Parse one statement; equation products of other than two literals need ``sorite``."""
    cur = _Cursor(text, line)
    if cur.at_end():
        raise cur.error("empty statement")
    m = _MULTI.search(text)
    if m and re.match(r"\s*(all|no|some)\b", text, re.IGNORECASE):
        raise cur.error("disjunctive (multilateral) premises such as 'All x is y or z' "
                        "are not supported", m.start())
    if re.search("[=≠]", text):
        return _equation(cur, sorite)
    w, _ = cur.word()
    if w.lower() in _QUANT:
        return _surface(cur)
    if w.lower() in ("empty", "nonempty"):
        return _braced(cur)
    if re.match(r"\s*[AEIO]\s*\(", text):
        return _functional(cur)
    raise cur.error("expected 'All', 'No', 'Some', a form like A(M,P) or an equation")


def parse_literal(text: str) -> Literal:
    cur = _Cursor(text)
    x = cur.literal()
    cur.finish()
    return x


def parse_product(text: str) -> list:
    """``el``, ``e l`` or ``e,l`` as a list of literals; spaced or comma forms allow long names."""
    if "," in text:
        return [parse_literal(t) for t in re.split(r"[,\s]+", text.strip()) if t]
    cur = _Cursor(text)
    lits, _ = _product(cur, "")
    return lits


def parse_conclusion(text: str, universe: Universe) -> Conclusion:
    """``S = SPM``, ``SPM != 0`` or ``SPM ≠ ∅ if S ≠ ∅``, cells written over ``universe``."""
    cur = _Cursor(text)
    ei = None
    head, sep, cond = text.partition(" if ")
    if sep:
        c2 = _Cursor(cond)
        ei = c2.literal()
        c2.skip()
        for op in ("!=", "≠"):
            if c2.text.startswith(op, c2.pos):
                c2.pos += len(op)
                break
        else:
            raise c2.error("expected '!=' after the ei condition")
        c2.skip()
        if c2.text[c2.pos:c2.pos + 1] not in ("0", "∅"):
            raise c2.error("expected 0")
        c2.pos += 1
        c2.finish()
        cur = _Cursor(head)
    cur.skip()
    head_start = cur.pos
    lone = _TERM_RE.match(cur.text, cur.pos)
    lhs, _ = _product(cur, "=!≠")
    cur.skip()
    if cur.text.startswith("=", cur.pos):
        cur.pos += 1
        if len(lhs) != 1 and lone and cur.text[lone.end():cur.pos - 1].strip() == "":
            lhs = [Literal(lone.group(2), not (lone.group(1) or lone.group(3)))]
        if len(lhs) != 1:
            raise cur.error("a universal pinpoint names one literal on the left", head_start)
        rhs, at = _product(cur, "")
        return Conclusion.universal(lhs[0], _cell(cur, universe, rhs, at))
    for op in ("!=", "≠"):
        if cur.text.startswith(op, cur.pos):
            cur.pos += len(op)
            break
    else:
        raise cur.error("expected '=' or '!='")
    cur.skip()
    if cur.text[cur.pos:cur.pos + 1] not in ("0", "∅"):
        raise cur.error("expected 0")
    cur.pos += 1
    cur.finish()
    return Conclusion.existential(_cell(cur, universe, lhs, 0), ei)


def _cell(cur: _Cursor, u: Universe, lits: list, at: int):
    try:
        return u.cell_of(lits)
    except (ValueError, KeyError) as e:
        raise cur.error(f"not a cell of {u}: {e}", at) from None


@dataclass(frozen=True)
class SoriteLine:
    line: int
    statement: StatementNF
    source: str


def parse_sorite(text: str) -> list:
    """Premises of a sorite file, one per line; ``#`` starts a comment."""
    out = []
    for n, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        st = normalize(parse_statement(body, sorite=True, line=n))
        out.append(SoriteLine(n, st, raw.strip()))
    return out


def render(x) -> str:
    """Canonical text that :func:`parse_statement` reads back to an equal value."""
    if isinstance(x, SurfaceStatement):
        s, p = x.subject, x.predicate
        return {
            "A": f"All {s} are {p}",
            "E": f"No {s} are {p}",
            "I": f"Some {s} are {p}",
            "O": f"Some {s} are not {p}",
        }[x.form]
    if isinstance(x, StatementNF):
        return x.equation()
    if isinstance(x, Conclusion):
        return x.text()
    if isinstance(x, Literal):
        return str(x)
    raise TypeError(f"cannot render {type(x).__name__}")
