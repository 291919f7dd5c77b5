import pytest

from cuspidal.tables import (
    FOUR_PAIR_ROWS,
    REDUCTION_ROWS,
    THREE_PAIR_ROWS,
    TABLE_IDS,
    expected_table,
    one_pair_rows,
    reproduce,
    two_pair_rows,
)


def test_embedded_row_counts():
    assert len(THREE_PAIR_ROWS) == 22
    assert len(FOUR_PAIR_ROWS) == 1
    assert len(REDUCTION_ROWS) == 20
    assert len(one_pair_rows(30)) == 47
    assert len(two_pair_rows(30)) == 58


def test_expected_table_lookup():
    assert expected_table("threepairs").rows == THREE_PAIR_ROWS
    assert expected_table("induct").rows == REDUCTION_ROWS
    with pytest.raises(KeyError):
        expected_table("bogus")


def test_one_pair_rows_contains_sporadics():
    rows = set(one_pair_rows(30))
    assert (8, ((3, 22),)) in rows
    assert (16, ((6, 43),)) in rows
    assert (5, ((2, 13),)) in rows
    assert (13, ((5, 34),)) in rows
    assert (10, ((4, 25),)) in rows


def test_two_pair_rows_includes_degree25():
    assert (25, ((5, 31), (2, 3))) in set(two_pair_rows(30))


def test_reproduce_unknown_id():
    with pytest.raises(KeyError):
        reproduce("bogus")


def test_reproduce_fourpairs():
    report = reproduce("fourpairs")
    assert report.ok and report.matched == 1


def test_reproduce_lct_orevkov():
    report = reproduce("lct-orevkov")
    assert report.ok and report.matched == 8


def test_reproduce_lct_tono_flags_iib():
    report = reproduce("lct-tono")
    assert report.ok
    assert sum("flagged inconsistent" in note for note in report.notes) == 12


def test_table_ids_complete():
    assert set(TABLE_IDS) == {
        "onepair",
        "twopairs",
        "threepairs",
        "fourpairs",
        "induct",
        "lct-kashiwara",
        "lct-tono",
        "lct-orevkov",
        "all",
    }


def test_every_table_reproduces():
    # the top-level gate: a correct build regenerates every table exactly
    for identifier in TABLE_IDS:
        report = reproduce(identifier)
        assert report.ok, report.render()
        assert report.matched == report.total > 0
