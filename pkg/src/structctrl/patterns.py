"""Sparsity-and-degree patterns of polynomial matrices, and their text formats.

A pattern records, for a p-by-v matrix of univariate polynomials, which
entries are nonzero and the degree of each nonzero entry.  Degree 0 means
"nonzero constant"; an absent entry means "identically zero".  The two are
deliberately distinct: a constant still couples an equation to a variable.

Text formats (UTF-8, LF line endings, '#' starts a comment, blank lines
ignored, indices 1-based):

    pattern <p> <v>          statespace <n> <m>
    entry <i> <j> <degree>   a <i> <j>
    ...                      b <i> <k>

Internally all indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PatternFormatError

__all__ = [
    "PolyPattern",
    "StateSpacePattern",
    "parse_pattern",
    "parse_statespace",
    "emit_pattern",
    "emit_statespace",
]


@dataclass(frozen=True)
class PolyPattern:
    """Nonzero structure of a p-by-v polynomial matrix.

    ``entries`` maps 0-based (row, col) positions to entry degrees (>= 0).
    """

    rows: int
    cols: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"pattern dimensions must be positive, got {self.rows}x{self.cols}")
        object.__setattr__(self, "entries", dict(self.entries))
        for (i, j), d in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise ValueError(f"entry ({i},{j}) outside {self.rows}x{self.cols} pattern")
            if d < 0:
                raise ValueError(f"entry ({i},{j}) has negative degree {d}")

    def sorted_entries(self) -> list[tuple[int, int, int]]:
        """Entries as (row, col, degree) triples in row-major order."""
        return [(i, j, d) for (i, j), d in sorted(self.entries.items())]

    def __eq__(self, other):
        if not isinstance(other, PolyPattern):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)


@dataclass(frozen=True)
class StateSpacePattern:
    """Nonzero structure of a first-order system d/dt x = A x + B u.

    ``a_entries`` holds 0-based (i, j) positions where A is nonzero,
    ``b_entries`` 0-based (i, k) positions where B is nonzero.
    """

    n: int
    m: int
    a_entries: frozenset[tuple[int, int]] = frozenset()
    b_entries: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"state count must be positive, got {self.n}")
        if self.m < 0:
            raise ValueError(f"input count must be non-negative, got {self.m}")
        object.__setattr__(self, "a_entries", frozenset(self.a_entries))
        object.__setattr__(self, "b_entries", frozenset(self.b_entries))
        for i, j in self.a_entries:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"A entry ({i},{j}) outside {self.n}x{self.n}")
        for i, k in self.b_entries:
            if not (0 <= i < self.n and 0 <= k < self.m):
                raise ValueError(f"B entry ({i},{k}) outside {self.n}x{self.m}")


def _content_lines(text: str):
    """Yield (lineno, tokens) for non-blank, non-comment lines."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _parse_int(token: str, what: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise PatternFormatError(f"expected integer {what}, got {token!r}", lineno) from None


def parse_pattern(text: str) -> PolyPattern:
    """Parse pattern text into a PolyPattern.

    Rejects (never repairs): missing/duplicate header, unknown keywords,
    wrong token counts, duplicate entries, out-of-range indices, negative
    degrees.  Errors carry the offending line number.
    """
    lines = _content_lines(text)
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise PatternFormatError("empty input, expected 'pattern <p> <v>' header") from None
    if tokens[0] != "pattern" or len(tokens) != 3:
        raise PatternFormatError("expected header 'pattern <p> <v>'", lineno)
    rows = _parse_int(tokens[1], "row count", lineno)
    cols = _parse_int(tokens[2], "column count", lineno)
    if rows < 1 or cols < 1:
        raise PatternFormatError(f"dimensions must be positive, got {rows} {cols}", lineno)

    entries: dict[tuple[int, int], int] = {}
    for lineno, tokens in lines:
        if tokens[0] != "entry" or len(tokens) != 4:
            raise PatternFormatError("expected 'entry <i> <j> <degree>'", lineno)
        i = _parse_int(tokens[1], "row index", lineno)
        j = _parse_int(tokens[2], "column index", lineno)
        d = _parse_int(tokens[3], "degree", lineno)
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise PatternFormatError(f"entry ({i},{j}) out of range for {rows}x{cols} pattern", lineno)
        if d < 0:
            raise PatternFormatError(f"negative degree {d}", lineno)
        if (i - 1, j - 1) in entries:
            raise PatternFormatError(f"duplicate entry ({i},{j})", lineno)
        entries[(i - 1, j - 1)] = d
    return PolyPattern(rows, cols, entries)


def parse_statespace(text: str) -> StateSpacePattern:
    """Parse state-space text into a StateSpacePattern.  Same error policy as parse_pattern."""
    lines = _content_lines(text)
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise PatternFormatError("empty input, expected 'statespace <n> <m>' header") from None
    if tokens[0] != "statespace" or len(tokens) != 3:
        raise PatternFormatError("expected header 'statespace <n> <m>'", lineno)
    n = _parse_int(tokens[1], "state count", lineno)
    m = _parse_int(tokens[2], "input count", lineno)
    if n < 1:
        raise PatternFormatError(f"state count must be positive, got {n}", lineno)
    if m < 0:
        raise PatternFormatError(f"input count must be non-negative, got {m}", lineno)

    a_entries: set[tuple[int, int]] = set()
    b_entries: set[tuple[int, int]] = set()
    for lineno, tokens in lines:
        if tokens[0] == "a" and len(tokens) == 3:
            i = _parse_int(tokens[1], "row index", lineno)
            j = _parse_int(tokens[2], "column index", lineno)
            if not (1 <= i <= n and 1 <= j <= n):
                raise PatternFormatError(f"A entry ({i},{j}) out of range for n={n}", lineno)
            if (i - 1, j - 1) in a_entries:
                raise PatternFormatError(f"duplicate A entry ({i},{j})", lineno)
            a_entries.add((i - 1, j - 1))
        elif tokens[0] == "b" and len(tokens) == 3:
            i = _parse_int(tokens[1], "row index", lineno)
            k = _parse_int(tokens[2], "input index", lineno)
            if not (1 <= i <= n and 1 <= k <= m):
                raise PatternFormatError(f"B entry ({i},{k}) out of range for n={n}, m={m}", lineno)
            if (i - 1, k - 1) in b_entries:
                raise PatternFormatError(f"duplicate B entry ({i},{k})", lineno)
            b_entries.add((i - 1, k - 1))
        else:
            raise PatternFormatError("expected 'a <i> <j>' or 'b <i> <k>'", lineno)
    return StateSpacePattern(n, m, frozenset(a_entries), frozenset(b_entries))


def emit_pattern(pattern: PolyPattern) -> str:
    """Canonical text for a pattern: header, then entries in row-major order.

    Byte-exact deterministic; parse_pattern(emit_pattern(p)) == p.
    """
    out = [f"pattern {pattern.rows} {pattern.cols}"]
    for i, j, d in pattern.sorted_entries():
        out.append(f"entry {i + 1} {j + 1} {d}")
    return "\n".join(out) + "\n"


def emit_statespace(ss: StateSpacePattern) -> str:
    """Canonical text for a state-space pattern: header, sorted 'a' lines, sorted 'b' lines."""
    out = [f"statespace {ss.n} {ss.m}"]
    for i, j in sorted(ss.a_entries):
        out.append(f"a {i + 1} {j + 1}")
    for i, k in sorted(ss.b_entries):
        out.append(f"b {i + 1} {k + 1}")
    return "\n".join(out) + "\n"
