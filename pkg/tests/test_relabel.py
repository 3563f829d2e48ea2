import itertools

import pytest
from hypothesis import given, strategies as st

from categorica import ELEMENTS, PCP, PcpType, Relabeling, apply, canonicalize, classify, compose, derive
from categorica import enumerate_all, entails, metathesis, mood_name
from categorica.errors import OutOfDomain
from categorica.pcp import bound_subset_group
from categorica.relabel import IDENTITY, REPRESENTATIVES

G = ELEMENTS
R = Relabeling.parse
ENTAILING = [q for q in enumerate_all() if classify(q).entails]


def test_group_axioms():
    assert len(set(G)) == 8
    assert {g.name for g in G} == {"e", "p", "s", "m", "ps", "pm", "sm", "psm"}
    for g, h in itertools.product(G, G):
        assert g * h in G
        assert g * h == h * g
    for g, h, k in itertools.product(G, G, G):
        assert (g * h) * k == g * (h * k)
    for g in G:
        assert g * IDENTITY == g
        assert g * g == IDENTITY


@pytest.mark.parametrize("a,b,ab", [("p", "p", "e"), ("p", "s", "ps"), ("ps", "m", "psm"),
                                    ("spm", "sm", "p")])
def test_compose(a, b, ab):
    assert compose(R(a), R(b)) == R(ab)


def test_identity_fixes_everything():
    for q in enumerate_all():
        assert apply(IDENTITY, q) == q


@pytest.mark.parametrize("g,src,dst", [("m", "EE'", "E'E"), ("p", "EE'", "AE'"),
                                       ("m", "AE'", "A'E"), ("m", "AA", "A'A'")])
def test_named_transformations(g, src, dst):
    # m(Celarent) = Camestres, p(Celarent) = Barbara, m(Barbara) = Barbara'
    assert apply(R(g), PCP.from_code(src)).code == dst


def test_orbits_are_types():
    for t, (_, code) in REPRESENTATIVES.items():
        orbit = {apply(g, PCP.from_code(code)) for g in G}
        assert len(orbit) == 8
        assert orbit == {q for q in enumerate_all() if classify(q) is t}
    for q in enumerate_all():
        assert all(classify(apply(g, q)) is classify(q) for g in G)


@pytest.mark.parametrize("role,step", [("s", 1), ("p", 2), ("m", 4)])
def test_index_action(role, step):
    g = R(role)
    for q in ENTAILING:
        i, _ = bound_subset_group(q)
        j, _ = bound_subset_group(apply(g, q))
        assert j == (i + step if (i - 1) & step == 0 else i - step)


def test_derive_equivariant():
    for g, q in itertools.product(G, enumerate_all()):
        assert set(derive(apply(g, q))) == {apply(g, c) for c in derive(q)}


def test_relabeling_preserves_entailment():
    for g, q in itertools.product(G, ENTAILING):
        image = apply(g, q)
        for c in derive(q):
            v = entails(image.universe, image.premises, conclusion=apply(g, c), method="exhaustive")
            assert v.holds


def test_canonicalize_every_entailing_pcp():
    for q in ENTAILING:
        f = canonicalize(q)
        name, code = REPRESENTATIVES[classify(q)]
        assert (f.representative, f.code) == (name, code)
        assert apply(f.relabeling, q) == PCP.from_code(code)
        assert [g for g in G if apply(g, q) == PCP.from_code(code)] == [f.relabeling]


def test_canonicalize_examples():
    f = canonicalize(PCP.from_code("E'E'"))
    assert (f.representative, f.relabeling) == ("Darapti", R("spm"))
    assert str(f) == "Darapti (AA) via psm"
    assert canonicalize(PCP.from_code("A'E")).relabeling == R("m")
    assert canonicalize(PCP.from_code("AE'")).relabeling == IDENTITY


def test_canonicalize_rejects_barren_pcps():
    for q in enumerate_all():
        if not classify(q).entails:
            with pytest.raises(OutOfDomain):
                canonicalize(q)


def test_metathesis():
    assert metathesis(PCP.from_code("IA")).code == "AI"
    assert metathesis(PCP.from_code("OA")).code == "AO"
    assert mood_name(metathesis(PCP.from_code("IA"))).name == "Darii/Datisi"
    for q in enumerate_all():
        assert metathesis(metathesis(q)) == q
    f = canonicalize(PCP.from_code("IA"), to_darii=True)
    assert (f.representative, f.metathesis_applied) == ("Darii", True)


def test_metathesis_swaps_3a_and_3b():
    for q in enumerate_all():
        t = classify(q)
        if t in (PcpType.T3a, PcpType.T3b):
            assert classify(metathesis(q)) is ({PcpType.T3a, PcpType.T3b} - {t}).pop()


@given(st.sampled_from(G), st.sampled_from(G), st.sampled_from(enumerate_all()))
def test_action_is_a_homomorphism(g, h, q):
    assert apply(g, apply(h, q)) == apply(g * h, q)
