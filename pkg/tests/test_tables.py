"""Reference-table transcriptions against recomputed objects."""

import pytest

from polegeom.fields import GF, QQ
from polegeom.tables import (
    TABLE2_TAGS,
    TABLE3_TAGS,
    TABLE4_TAGS,
    TABLE5_TAGS,
    compare_matrix,
    compare_pole_equation,
    compare_system,
    tables_fixture,
)


@pytest.mark.parametrize("which", [2, 3, 4, 5])
def test_tables_clean(which):
    report = tables_fixture(which)
    assert report["ok"], report


def test_all_rows_present():
    assert len(TABLE2_TAGS) == 6
    assert len(TABLE3_TAGS) == 7
    assert TABLE4_TAGS == TABLE2_TAGS
    assert TABLE5_TAGS == TABLE3_TAGS


@pytest.mark.parametrize("tag", TABLE2_TAGS + TABLE3_TAGS)
def test_matrix_rows_over_alternate_fields(tag):
    """The matrices also agree over small prime fields (where the row's
    parameter condition can be met)."""
    contexts = {
        "T10_1": [(GF(3), 2), (GF(7), 3)],
        "T11_1": [(GF(3), 2), (GF(7), 3)],
        "T10_2": [(GF(2), 1)],
        "T11_2": [(GF(2), 1)],
    }.get(tag, [(GF(2), None), (GF(3), None), (QQ, None)])
    for field, lam in contexts:
        assert compare_matrix(tag, field, lam) == []


@pytest.mark.parametrize("tag", TABLE5_TAGS)
def test_rank7_systems_over_alternate_fields(tag):
    contexts = {
        "T11_1": [(GF(3), 2)],
        "T11_2": [(GF(2), 1)],
    }.get(tag, [(GF(2), None), (GF(3), None)])
    for field, lam in contexts:
        assert compare_system(tag, field, lam) is None
        assert compare_pole_equation(tag, field, lam) is None


def test_diff_detects_corruption():
    """A deliberately corrupted cell is located by the diff."""
    from polegeom import tables

    original = tables.MATRIX_TABLE_RANK7["T9"][0][1]
    tables.MATRIX_TABLE_RANK7["T9"][0][1] = "u4"
    try:
        diffs = compare_matrix("T9", QQ)
        assert diffs and diffs[0][:2] == (1, 2)
    finally:
        tables.MATRIX_TABLE_RANK7["T9"][0][1] = original


def test_system_diff_detects_corruption():
    from polegeom import tables

    original = tables.GEOMETRY_TABLE_RANK7["T9"]
    tables.GEOMETRY_TABLE_RANK7["T9"] = original[:-1] + ["w14+w25"]
    try:
        assert compare_system("T9", GF(3)) is not None
    finally:
        tables.GEOMETRY_TABLE_RANK7["T9"] = original


def test_bad_table_number():
    with pytest.raises(ValueError):
        tables_fixture(1)
