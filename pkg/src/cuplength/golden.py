"""Golden reference values with per-cell citation tags.

The data lives in data/golden.txt, one cell per line, so provenance can
be audited line by line instead of hiding expected values in test
bodies.  Tags are `table1` and `table2` for the two reference tables
and `text:<what>` for values quoted in surrounding prose.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

_TAG_PREFIXES = ("table1", "table2", "text:")


class GoldenFormatError(ValueError):
    """A golden-data line does not follow `kind k n expected source`."""


@dataclass(frozen=True)
class GoldenCell:
    """One audited reference value.

    kind is "zcl" (k meaningful) or "s" (stabilization value, k stored
    as 0).  source is the citation tag for where the number comes from.
    """

    kind: str
    k: int
    n: int
    expected: int
    source: str


def parse_golden(text: str) -> list[GoldenCell]:
    """Parse golden data; '#' lines and blank lines are ignored."""
    cells = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 5:
            raise GoldenFormatError(f"line {lineno}: expected 5 fields, got {len(parts)}")
        kind, k_str, n_str, expected_str, source = parts
        if kind not in ("zcl", "s"):
            raise GoldenFormatError(f"line {lineno}: unknown kind {kind!r}")
        if not source.startswith(_TAG_PREFIXES):
            raise GoldenFormatError(f"line {lineno}: unrecognized citation tag {source!r}")
        if kind == "s" and k_str != "-":
            raise GoldenFormatError(f"line {lineno}: s rows take '-' for k, got {k_str!r}")
        try:
            k = 0 if kind == "s" else int(k_str)
            n = int(n_str)
            expected = int(expected_str)
        except ValueError as exc:
            raise GoldenFormatError(f"line {lineno}: {exc}") from None
        if kind == "zcl" and k < 2:
            raise GoldenFormatError(f"line {lineno}: zcl rows need k >= 2, got {k}")
        cells.append(GoldenCell(kind=kind, k=k, n=n, expected=expected, source=source))
    return cells


def render_golden(cells: list[GoldenCell]) -> str:
    """Canonical text form; parse_golden(render_golden(cells)) == cells."""
    lines = ["# kind k n expected source"]
    for c in cells:
        k_str = "-" if c.kind == "s" else str(c.k)
        lines.append(f"{c.kind} {k_str} {c.n} {c.expected} {c.source}")
    return "\n".join(lines) + "\n"


def load_golden() -> list[GoldenCell]:
    """All cells from the packaged data file."""
    text = resources.files("cuplength").joinpath("data/golden.txt").read_text()
    return parse_golden(text)


def table1_cells() -> list[GoldenCell]:
    return [c for c in load_golden() if c.source == "table1"]


def table2_cells() -> list[GoldenCell]:
    return [c for c in load_golden() if c.source == "table2"]


def text_cells() -> list[GoldenCell]:
    return [c for c in load_golden() if c.source.startswith("text:")]
