from collections import Counter

import pytest
from hypothesis import given, strategies as st

from categorica import PCP, PcpType, classify, derive, enumerate_all, mood_name, normalize, parse_statement
from categorica.core import Kind
from categorica.errors import MalformedError, OutOfDomain
from categorica.pcp import bound_subset_group


def pcp(p, s):
    return PCP(normalize(parse_statement(p)), normalize(parse_statement(s)))


def texts(q, ei=None):
    return {c.text() for c in derive(q) if ei is None or c.is_ei == ei}


BARBARA = pcp("All M are P", "All S are M")
DARAPTI = pcp("All M are P", "All M are S")
FERIO = pcp("No M are P", "Some M are S")


def test_census_full():
    pcps = enumerate_all()
    assert len(pcps) == len(set(pcps)) == 64
    assert Counter(map(classify, pcps)) == {t: 8 for t in PcpType}


def test_census_positive_only():
    pcps = enumerate_all(positive_only=True)
    assert len(pcps) == 36
    hist = Counter(classify(q).name for q in pcps)
    assert hist == {"T1": 4, "T2": 5, "T3a": 5, "T3b": 5, "T4a": 5, "T4b": 4, "T5a": 4, "T5b": 4}
    t1 = {q.code for q in pcps if classify(q) is PcpType.T1}
    assert t1 == {"AE'", "E'A", "EE'", "E'E"}


@pytest.mark.parametrize("p,s,t", [
    ("All M are P", "All S are M", PcpType.T1),
    ("All M are P", "Some M are S", PcpType.T3a),
    ("Some M are P", "Some non-M are S", PcpType.T4b),
    ("All M are P", "All M are S", PcpType.T2),
    ("Some M are P", "No M are S'", PcpType.T3b),
])
def test_classify(p, s, t):
    assert classify(pcp(p, s)) is t


def test_premises_must_share_one_middle():
    with pytest.raises(MalformedError):
        pcp("All M are P", "All S are Q")
    with pytest.raises((MalformedError, ValueError)):
        pcp("All M are P", "All P are M")


def test_barbara():
    assert texts(BARBARA, ei=False) == {"S = SPM", "P' = S'P'M'"}
    assert texts(BARBARA, ei=True) == {"SPM ≠ ∅ if S ≠ ∅", "S'P'M' ≠ ∅ if P' ≠ ∅"}


def test_darapti():
    assert texts(DARAPTI) == {"M = SPM", "SPM ≠ ∅ if M ≠ ∅"}
    (ei,) = [c for c in derive(DARAPTI) if c.is_ei]
    assert str(ei.middle_dropped) == "I(S,P)"


def test_ferio():
    (c,) = derive(FERIO)
    assert c.text() == "SP'M ≠ ∅"
    assert str(c.middle_dropped) == "O(S,P)"


def test_ee_needs_ei_on_middle():
    q = PCP.from_code("EE")
    assert texts(q) == {"M = S'P'M", "S'P'M ≠ ∅ if M ≠ ∅"}


def test_two_particulars_give_nothing():
    for q in enumerate_all():
        if classify(q) is PcpType.T4a:
            assert all(x.kind is Kind.NONEMPTY for x in q.premises)
            assert derive(q) == []


def test_conclusion_census():
    # 40 precise non-ei, 24 ei; dropping the middle leaves 24 distinct non-ei
    entailing = [q for q in enumerate_all() if derive(q)]
    assert len(entailing) == 32
    found = [(q, c) for q in entailing for c in derive(q)]
    assert sum(not c.is_ei for _, c in found) == 40
    assert sum(c.is_ei for _, c in found) == 24
    dropped = {(q.code, str(c.middle_dropped)) for q, c in found
               if not c.is_ei and c.middle_dropped is not None}
    assert len(dropped) == 24


@pytest.mark.parametrize("p,s,name", [
    ("All P are M", "Some S are not M", "Baroco"),
    ("Some M are P", "All M are S", "Disamis/Dimaris"),
    ("No non-M are non-P", "No M are S", "Barbara'"),
    ("All M are P", "All S are M", "Barbara"),
])
def test_mood_names(p, s, name):
    assert mood_name(pcp(p, s)).name == name


def test_bramanta_is_a_coinage():
    q = PCP.from_code("E'A")
    name = mood_name(q)
    assert name.name is None
    assert "Bramanta" in name.aliases
    assert name.ei_name("P") == "Bramantip"


@pytest.mark.parametrize("code,index,cell", [("EE", 1, "S'P'M"), ("AA", 4, "SPM"), ("A'A'", 8, "SPM'"),
                                             ("AE'", 3, "S'PM")])
def test_bound_subset_group(code, index, cell):
    i, c = bound_subset_group(PCP.from_code(code))
    assert (i, c.name) == (index, cell)


def test_bound_cell_lies_outside_every_premise():
    anchors = {}
    for q in enumerate_all():
        if not derive(q):
            with pytest.raises(OutOfDomain):
                bound_subset_group(q)
            continue
        index, cell = bound_subset_group(q)
        anchors.setdefault(index, set()).add(cell)
        assert all(not all(cell.contains(y) for y in x.lits) for x in q.premises)
        if classify(q) is PcpType.T2:
            assert derive(q)[0].cell == cell
    assert all(len(cells) == 1 for cells in anchors.values())


def test_from_code_roundtrip():
    for q in enumerate_all():
        assert PCP.from_code(q.code) == q
    q = PCP.from_code("AE'", s="boys", p="girls", m="toys")
    assert q.code == "AE'"
    assert q.universe.terms == ("boys", "girls", "toys")


@given(st.sampled_from(enumerate_all()))
def test_derived_cells_respect_premises(q):
    for c in derive(q):
        for x in q.premises:
            inside = all(c.cell.contains(y) for y in x.lits)
            if x.is_empty:
                assert not inside
