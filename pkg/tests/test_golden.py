import pytest

from poincare_cascade.tables import GOLDEN_NAMES, TABLES


@pytest.mark.parametrize("which", sorted(TABLES))
def test_table_matches_transcription(which, golden_dir):
    expected = (golden_dir / GOLDEN_NAMES[which]).read_text(encoding="utf-8")
    assert TABLES[which](8).to_tsv() == expected


def test_tables_are_deterministic():
    for build_table in TABLES.values():
        assert build_table(5).to_tsv() == build_table(5).to_tsv()
