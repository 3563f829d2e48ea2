import json

import pytest
from hypothesis import given, strategies as st

from categorica import PCP, PcpType, classify, derive, enumerate_all, lit, normalize, parse_statement
from categorica.core import Kind, Literal, StatementNF, Universe
from categorica.errors import MalformedError, OutOfDomain
from categorica.oracle import entails, satisfiable
from categorica.relabel import ELEMENTS, apply
from categorica.rules import (
    Distribution,
    coexistence,
    distribution,
    esc_compatible,
    joint_universal_consequence,
    rofvca_check,
    rofvca_dofa,
    rofvca_predict,
    rofvs_dofa,
    signature,
)

D, U = Distribution.DISTRIBUTED, Distribution.UNDISTRIBUTED
ENTAILING = [q for q in enumerate_all() if classify(q).entails]


def st_(text):
    return normalize(parse_statement(text))


def code(c):
    return PCP.from_code(c)


@pytest.mark.parametrize("text,x,want", [
    ("Some M are P", "M'", D), ("Some M are P", "M", U), ("All M are P", "M", D),
    ("All M are P", "P", U), ("No M are P", "P", D), ("Some M are not P", "P", D),
    ("Some M are not P", "M", U),
])
def test_distribution(text, x, want):
    assert distribution(st_(text), lit(x)) is want


@pytest.mark.parametrize("text,sig", [("A(M,P)", 0), ("E(M,P')", 0), ("A(P',M')", 0), ("A(M',P)", 1),
                                      ("E(M',P')", 1), ("I(S',P')", 0), ("O(M,S)", 1), ("E(M,P)", 1)])
def test_signature(text, sig):
    assert signature(parse_statement(text)) == sig


@given(st.builds(Literal, st.just("a"), st.booleans()), st.builds(Literal, st.just("b"), st.booleans()),
       st.sampled_from(list(Kind)))
def test_complements_have_opposite_distribution(x, y, kind):
    nf = StatementNF(kind, (x, y))
    for z in nf.lits:
        assert distribution(nf, z) != distribution(nf, z.complement())


def test_contradictories_flip_signature():
    for q in enumerate_all():
        for x in q.premises:
            other = StatementNF(Kind.NONEMPTY if x.is_empty else Kind.EMPTY, x.lits)
            assert signature(x) != signature(other)


def test_rules_hold_for_every_entailing_pcp():
    for q in ENTAILING:
        for c in derive(q):
            if c.middle_dropped is None:
                continue
            audit = rofvca_check(q, c)
            assert audit.passed, (q.code, c.text(), audit.lines())
            assert audit.verdict("rofvca1") == "pass"
            assert audit.verdict("rofvca4") == "pass"
            assert signature(c.middle_dropped) == signature(q.p) ^ signature(q.s)


def test_predict_agrees_with_derive():
    for q in ENTAILING:
        pred = rofvca_predict(q)
        assert pred.consistent
        readings = {(normalize(c.middle_dropped), c.ei_condition) for c in derive(q)
                    if c.middle_dropped is not None}
        assert (pred.statement, pred.ei_condition) in readings
        target = pred.statement
        assumptions = [] if pred.ei_condition is None else [pred.ei_condition]
        u = Universe((q.s_term, q.p_term, q.middle))
        assert entails(u, q.premises, assumptions, target).holds


@pytest.mark.parametrize("c,reading,ei", [("E'E'", "I(S',P')", "M'"), ("EI", "O(S,P)", None),
                                          ("AA", "I(S,P)", "M"), ("EE", "I(S',P')", "M"),
                                          ("OE", "I(S',P')", None), ("EO", "I(S',P')", None)])
def test_predict_examples(c, reading, ei):
    p = rofvca_predict(code(c))
    assert str(p.reading) == reading
    assert p.ei_condition == (None if ei is None else lit(ei))


def test_predict_outside_domain():
    for q in enumerate_all():
        if not classify(q).entails:
            with pytest.raises(OutOfDomain):
                rofvca_predict(q)
    dofa = rofvca_dofa()
    assert [t for t, v in dofa.items() if v == "inside"] == [PcpType.T1, PcpType.T2, PcpType.T3a, PcpType.T3b]
    assert dofa[PcpType.T4a] == "postulated outside"
    assert {dofa[t] for t in (PcpType.T4b, PcpType.T5a, PcpType.T5b)} == {"self-contradictory"}


def test_check_examples():
    barbara = code("AE'")
    assert rofvca_check(barbara, parse_statement("A(S,P)")).passed
    barbari = rofvca_check(barbara, parse_statement("I(S,P)"), ei_condition=lit("S"))
    assert barbari.passed and "ei" in barbari.results["rofvca1"][1]
    ferio = rofvca_check(code("EI"), parse_statement("I(S,P)"))
    assert ferio.verdict("rofvca4") == "fail"
    with pytest.raises(MalformedError):
        rofvca_check(barbara, parse_statement("A(S,M)"))


def test_audit_json_shape():
    a = rofvca_check(code("AE'"), parse_statement("A(S,P)"))
    data = json.loads(json.dumps(a.to_json()))
    assert sorted(data) == ["rofvca1", "rofvca2", "rofvca3", "rofvca4"]
    assert all(v["verdict"] in ("pass", "fail", "n-a") and v["reason"] for v in data.values())


def test_rofvs_dofa():
    r = rofvs_dofa()
    assert r.stage_counts() == {"#2": 3, "#1": 1, "two particular": 9, "type 5": 8}
    assert len(r.candidates) == 15
    assert len(r.members) == 12
    assert set(r.boolean_vs) == {"EE'", "EI", "AE'", "AI", "E'E", "E'I'", "IA", "OA"}
    # Bramanta, Fireo, Boraco, Bacordo
    assert set(r.reversed_members) == {"E'A", "IE", "I'E'", "AO"}
    assert {str(r.members[c]) for c in r.reversed_members} == {"A(P,S)", "O(P,S)"}
    assert set(r.ei_only) == {"AA", "EA", "AE"}
    type5 = sorted(rule for _, stage, rule, _ in r.removed if stage == "type 5")
    assert type5 == ["#1"] * 4 + ["#2"] * 2 + ["#3"] * 2
    assert {c for c, stage, _, _ in r.removed if stage == "type 5"} >= {"AI'", "I'A", "EI'", "I'E"}


def test_rofvs_members_are_valid():
    for c, reading in rofvs_dofa().members.items():
        q = code(c)
        assert entails(q.universe, q.premises, conclusion=normalize(reading)).holds


def esc(c, *empties, conclusions=None):
    q = code(c)
    return esc_compatible(q, derive(q) if conclusions is None else conclusions, [lit(x) for x in empties])


def test_esc_darii():
    for x in ("S", "M", "P"):
        assert not all(v.compatible for v in esc("AI", x))
        assert not esc("AI", x)[0].compatible
    assert all(v.compatible for v in esc("AI", "S'", "M'", "P'"))


def test_esc_darapti():
    q = code("AA")
    ei = [c for c in derive(q) if c.is_ei]
    for x in ("M", "S", "P"):
        premises, verdict = esc("AA", x, conclusions=ei)
        assert premises.compatible and not verdict.compatible
    assert all(v.compatible for v in esc("AA", "S'", "M'", "P'", conclusions=ei))
    # without ei the PCP survives even an empty universe
    assert all(v.compatible for v in esc("AA", "M", "M'", conclusions=[]))


def test_esc_barbara():
    q = code("AE'")
    plain = [c for c in derive(q) if not c.is_ei]
    barbari = [c for c in derive(q) if c.ei_condition == lit("S")]
    other = [c for c in derive(q) if c.ei_condition == lit("P'")]
    for x in Universe.of("SPM").literals():
        assert all(v.compatible for v in esc_compatible(q, plain, [x]))
    for x in ("S'", "P'", "M'"):
        assert esc_compatible(q, barbari, [lit(x)])[1].compatible
    assert esc_compatible(q, barbari, [lit("S'"), lit("P'"), lit("M'")])[1].compatible
    for x in ("S", "P", "M"):
        assert not esc_compatible(q, barbari, [lit(x)])[1].compatible
    for x in ("S'", "P'", "M'"):
        assert not esc_compatible(q, other, [lit(x)])[1].compatible
    # with both ei hypotheses no constraint fits
    u = q.universe
    for x in u.literals():
        assert satisfiable(u, list(q.premises) + [StatementNF.empty(x)], [lit("S"), lit("P'")]) is None


@pytest.mark.parametrize("a,b,want", [
    ("A(M,P)", "E(M,P)", "M = ∅"), ("E(M,P)", "E(M',P)", "P = ∅"), ("A(M',P)", "E(M',P)", "M' = ∅"),
    ("A(M,P)", "A(M',P)", "P' = ∅"), ("A(M,P)", "E(M',P)", "P = M"), ("A(M',P)", "E(M,P)", "P = M'"),
])
def test_joint_universal_consequence(a, b, want):
    assert str(joint_universal_consequence(parse_statement(a), parse_statement(b))) == want
    assert str(joint_universal_consequence(parse_statement(b), parse_statement(a))) == want


def test_joint_universal_consequence_edge_cases():
    a = parse_statement("A(M,P)")
    assert str(joint_universal_consequence(a, a)) == "none"
    with pytest.raises(MalformedError):
        joint_universal_consequence(a, parse_statement("I(M,P)"))
    with pytest.raises(MalformedError):
        joint_universal_consequence(a, parse_statement("A(M,S)"))


def test_coexistence_celarent_camestres():
    r = coexistence(code("EE'"), code("E'E"))
    assert r.consistent and set(r.relations()) == {"S = ∅", "P = ∅"}


def test_coexistence_two_barbaras():
    swapped = PCP(st_("All P are M"), st_("All S are P"))
    r = coexistence(code("AE'"), swapped)
    assert r.relations() == ["P = M"]


def test_coexistence_barbara_camestres():
    r = coexistence(code("AE'"), code("E'E"))
    assert set(r.relations()) == {"S = ∅", "P = M"}


def test_coexistence_type2_triple():
    triple = [PCP(st_("EMPTY{M, P'}"), st_("EMPTY{M, S}")),
              PCP(st_("EMPTY{S, P'}"), st_("EMPTY{S, M}")),
              PCP(st_("EMPTY{P', M}"), st_("EMPTY{P', S}"))]
    assert all(classify(q) is PcpType.T2 for q in triple)
    r = coexistence(*triple)
    assert not r.forced and str(r) == "no forced structure"


def test_coexistence_barbara_and_s_middle_darapti():
    r = coexistence(code("AE'"), PCP(st_("EMPTY{S, P'}"), st_("EMPTY{S, M'}")))
    assert not r.forced


@given(st.sampled_from(ELEMENTS), st.sampled_from(ENTAILING))
def test_predictions_covariant(g, q):
    p, image = rofvca_predict(q), rofvca_predict(apply(g, q))
    assert image.statement == apply(g, p.statement)
