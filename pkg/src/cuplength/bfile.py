"""OEIS b-file parsing and sequence comparison.

A b-file is plain text, one `<index> <value>` pair per line in ASCII
decimal, optionally interleaved with '#' comment lines.  Sequence
offsets vary between entries, so comparison first resolves how file
indices map onto our argument n, either from a caller-supplied offset
or empirically from the leading entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional


class BFileParseError(ValueError):
    """Malformed b-file line; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class BFileEntry:
    index: int
    value: int


@dataclass(frozen=True)
class ComparisonReport:
    """Outcome of checking a b-file against a computed sequence.

    offset is the resolved index shift (file index i describes argument
    n = i - offset).  first_mismatch, when present, is the tuple
    (index, n, file value, computed value).
    """

    offset: int
    matched: int
    total: int
    first_mismatch: Optional[tuple[int, int, int, int]]

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None and self.matched == self.total


def parse_bfile(text: str) -> list[BFileEntry]:
    """Parse b-file text, enforcing strictly increasing indices."""
    entries: list[BFileEntry] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(lineno, f"expected 'index value', got {raw!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(lineno, f"non-integer field in {raw!r}") from None
        if entries and index <= entries[-1].index:
            raise BFileParseError(
                lineno, f"index {index} not greater than previous {entries[-1].index}"
            )
        entries.append(BFileEntry(index=index, value=value))
    return entries


def detect_offsets(
    entries: list[BFileEntry],
    fn: Callable[[int], int],
    probe: int = 3,
) -> list[int]:
    """Index shifts consistent with the first `probe` entries, ascending.

    A shift d means file index i holds fn(i - d).  Candidates come from
    the first entry: every n0 >= 0 with fn(n0) equal to its value.  The
    scan over n0 stops at the entry value itself, which is safe for any
    fn with fn(n) >= n (true for the cup-length sequences here, where
    fn(n) >= 2n).  An empty result means no alignment fits.
    """
    if not entries:
        return []
    first = entries[0]
    head = entries[: max(probe, 1)]
    out = []
    for n0 in range(first.value + 1):
        if fn(n0) != first.value:
            continue
        d = first.index - n0
        if all(e.index - d >= 0 and fn(e.index - d) == e.value for e in head):
            out.append(d)
    return out


def compare_bfile(
    entries: list[BFileEntry],
    fn: Callable[[int], int],
    offset: int,
) -> ComparisonReport:
    """Check every entry against fn under the given index shift."""
    matched = 0
    first_mismatch = None
    for e in entries:
        n = e.index - offset
        computed = fn(n) if n >= 0 else None
        if computed == e.value:
            matched += 1
        elif first_mismatch is None:
            first_mismatch = (e.index, n, e.value, -1 if computed is None else computed)
    return ComparisonReport(
        offset=offset,
        matched=matched,
        total=len(entries),
        first_mismatch=first_mismatch,
    )
