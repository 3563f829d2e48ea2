"""Loader for the hand-transcribed mood tables in golden/moods.txt."""

from dataclasses import dataclass
from pathlib import Path

from categorica import PCP, derive, lit, mood_name, normalize, parse_conclusion, parse_statement
from categorica.pcp import bound_subset_group

PATH = Path(__file__).parent / "golden" / "moods.txt"


@dataclass(frozen=True)
class Row:
    group: int
    code: str
    premises: tuple
    precise: tuple
    readings: tuple
    name: object
    ei: tuple  # (condition, readings, name)


def _name(field):
    return None if field == "-" else field


def _readings(field):
    return () if field == "-" else tuple(field.split("="))


def _premises(field):
    # "E(M,P')E(M',S)" -> ("E(M,P')", "E(M',S)")
    cut = field.index(")") + 1
    return field[:cut], field[cut:]


def load():
    rows = []
    for raw in PATH.read_text(encoding="utf-8").splitlines():
        if not raw.strip() or raw.startswith("#"):
            continue
        group, code, prem, precise, reading, name, ei = (f.strip() for f in raw.split("|"))
        eis = []
        if ei != "-":
            for item in ei.split(";"):
                cond, rest = item.split(":")
                r, n = (x.strip() for x in rest.rsplit(",", 1))
                eis.append((cond.strip(), _readings(r), _name(n)))
        rows.append(Row(int(group), code, _premises(prem),
                        tuple(x.strip() for x in precise.split(",")),
                        _readings(reading), _name(name), tuple(eis)))
    return rows


def check_row(row):
    """Assert that the library reproduces one table row."""
    q = PCP.from_code(row.code)
    u = q.universe
    assert bound_subset_group(q)[0] == row.group
    assert q.premises == tuple(normalize(parse_statement(x)) for x in row.premises)

    found = derive(q)
    plain = [c for c in found if not c.is_ei]
    assert set(plain) == {parse_conclusion(x, u) for x in row.precise}
    assert len(plain) == len(row.precise)
    readings = {str(c.middle_dropped) for c in plain if c.middle_dropped is not None}
    if row.readings:
        assert len(readings) == 1 and readings <= set(row.readings)
    else:
        assert not readings

    name = mood_name(q)
    assert name.entails
    assert name.name == row.name

    ei = [c for c in found if c.is_ei]
    assert len(ei) == len(row.ei)
    for cond, reading, ei_name in row.ei:
        (c,) = [c for c in ei if c.ei_condition == lit(cond)]
        (pin,) = [p for p in plain if p.is_universal and p.cell == c.cell]
        assert str(c.middle_dropped) in reading
        assert name.ei_name(cond) == ei_name
        assert pin.literal == lit(cond)
