"""b-file parsing, offset detection, and comparison plumbing.

These run against synthetic b-files generated from our own sequence, so
they exercise alignment and error paths without needing the real OEIS
download (that end-to-end check lives in the acceptance suite and skips
when no file is supplied).
"""

import pytest

from cuplength.bfile import (
    BFileEntry,
    BFileParseError,
    compare_bfile,
    detect_offsets,
    parse_bfile,
)
from cuplength.stability import z3_characterization


def seq(n):
    return z3_characterization(n) + 1


def make_bfile(first_index, count, corrupt_at=None):
    lines = ["# synthetic"]
    for i in range(first_index, first_index + count):
        v = seq(i - first_index)
        if corrupt_at == i:
            v += 1
        lines.append(f"{i} {v}")
    return "\n".join(lines) + "\n"


def test_parse_basics():
    text = "# comment\n\n0 1\n1 4\n  2\t7  \n"
    entries = parse_bfile(text)
    assert entries == [BFileEntry(0, 1), BFileEntry(1, 4), BFileEntry(2, 7)]


def test_parse_errors_carry_line_numbers():
    with pytest.raises(BFileParseError, match="line 2"):
        parse_bfile("1 2\nabc\n")
    with pytest.raises(BFileParseError, match="line 1"):
        parse_bfile("1 2 3\n")
    with pytest.raises(BFileParseError, match="line 3"):
        parse_bfile("1 2\n2 4\n2 5\n")  # index not increasing
    err = None
    try:
        parse_bfile("# ok\n5 five\n")
    except BFileParseError as exc:
        err = exc
    assert err is not None and err.lineno == 2


def test_sequence_head_values():
    # zcl_3(n) + 1 for n = 0..5
    assert [seq(n) for n in range(6)] == [1, 3, 7, 7, 13, 15]


def test_detect_offset_zero():
    entries = parse_bfile(make_bfile(0, 40))
    assert detect_offsets(entries, seq) == [0]


def test_detect_offset_one():
    entries = parse_bfile(make_bfile(1, 40))
    assert detect_offsets(entries, seq) == [1]


def test_detect_offset_failure():
    entries = [BFileEntry(0, 2), BFileEntry(1, 6), BFileEntry(2, 8)]
    assert detect_offsets(entries, seq) == []


def test_compare_clean():
    entries = parse_bfile(make_bfile(1, 60))
    report = compare_bfile(entries, seq, 1)
    assert report.ok
    assert report.matched == report.total == 60


def test_compare_flags_first_mismatch():
    entries = parse_bfile(make_bfile(0, 30, corrupt_at=17))
    report = compare_bfile(entries, seq, 0)
    assert not report.ok
    assert report.matched == 29
    index, n, filev, ours = report.first_mismatch
    assert (index, n) == (17, 17)
    assert filev == ours + 1


def test_compare_rejects_negative_argument_as_mismatch():
    entries = parse_bfile(make_bfile(0, 5))
    report = compare_bfile(entries, seq, 3)  # first entries map to n < 0
    assert not report.ok
    assert report.first_mismatch[1] == -3
