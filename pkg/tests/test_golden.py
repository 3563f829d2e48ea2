import pytest

from categorica import derive, enumerate_all, mood_name
from categorica.pcp import classify

from golden import check_row, load

ROWS = load()


def test_table_covers_every_entailing_pcp():
    entailing = {q.code for q in enumerate_all() if classify(q).entails}
    assert len(ROWS) == 32
    assert {r.code for r in ROWS} == entailing
    assert [r.group for r in ROWS] == [g for g in range(1, 9) for _ in range(4)]


@pytest.mark.parametrize("row", ROWS, ids=lambda r: r.code)
def test_row(row):
    check_row(row)


def test_non_entailing_pcps_have_no_name():
    for q in enumerate_all():
        if not classify(q).entails:
            assert not mood_name(q).entails
            assert derive(q) == []
