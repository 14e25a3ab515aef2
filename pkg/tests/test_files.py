"""
Tests for FASTA record files and frequency-table CSV files.
"""

import pytest

from app.errors import IngestionError
from app.schemas.symbols import FrequencyTable
from app.services.fasta import FastaRecord, read_records, write_records
from app.services.tables import read_frequency_table, write_frequency_table


def test_fasta_round_trip_with_wrapping(tmp_path):
    path = tmp_path / "r.fa"
    records = [
        FastaRecord(name="header", sequence="ACGT" * 30, meta={"nt": 120}),
        FastaRecord(name="empty", sequence=""),
        FastaRecord(name="tail", sequence="GATTACA"),
    ]
    write_records(records, path, width=50)
    lines = path.read_text().splitlines()
    assert max(len(line) for line in lines if not line.startswith(">")) == 50
    assert read_records(path) == records


def test_fasta_rejects_bad_bases(tmp_path):
    path = tmp_path / "bad.fa"
    path.write_text(">x meta={}\nACGT\nACGN\n")
    with pytest.raises(IngestionError) as info:
        read_records(path)
    assert info.value.row == 3


def test_fasta_rejects_orphan_sequence(tmp_path):
    path = tmp_path / "orphan.fa"
    path.write_text("ACGT\n")
    with pytest.raises(IngestionError) as info:
        read_records(path)
    assert info.value.code == "sequence_before_header"


def test_table_round_trip(tmp_path):
    path = tmp_path / "t.csv"
    table = FrequencyTable.from_counts([5, 0, 9], ["EOB", "0/1", "ZRL"])
    write_frequency_table(table, path)
    again = read_frequency_table(path)
    assert [e.count for e in again.entries] == [5, 0, 9]
    assert [e.symbol.label for e in again.entries] == ["EOB", "0/1", "ZRL"]


def test_table_duplicate_symbol(tmp_path):
    path = tmp_path / "dup.csv"
    path.write_text("symbol,count\na,1\nb,2\na,3\n")
    with pytest.raises(IngestionError) as info:
        read_frequency_table(path)
    assert info.value.row == 4


def test_table_all_zero(tmp_path):
    path = tmp_path / "zero.csv"
    path.write_text("symbol,count\na,0\nb,0\n")
    with pytest.raises(IngestionError):
        read_frequency_table(path)


if __name__ == "__main__":
    pytest.main([__file__])
