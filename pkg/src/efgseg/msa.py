"""MSA data model, aligned-FASTA ingestion, and gap-aware coordinate mapping.

Rows and columns are 1-based and inclusive throughout the public API, which
is the native coordinate system of alignment formats. Column 0 is accepted
by rank queries as the empty prefix; column ``n + 1`` acts as the virtual
terminator column for select/start queries.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

GAP = "-"


class MsaError(ValueError):
    """Raised for malformed alignments or out-of-range coordinates."""


@dataclass(frozen=True)
class Msa:
    """A gapped multiple sequence alignment: m rows of equal length n."""

    rows: tuple[str, ...]
    names: tuple[str, ...]
    alphabet: frozenset[str] = field(init=False)

    def __post_init__(self):
        if not self.rows:
            raise MsaError("alignment has no rows")
        if len(self.names) != len(self.rows):
            raise MsaError(f"{len(self.names)} names for {len(self.rows)} rows")
        n = len(self.rows[0])
        if n == 0:
            raise MsaError(f"row '{self.names[0]}' is empty")
        for name, row in zip(self.names, self.rows):
            if len(row) != n:
                raise MsaError(
                    f"row '{name}' has length {len(row)}, expected {n}"
                )
            for c in row:
                if c != GAP and not (33 <= ord(c) <= 126 and c != ">"):
                    raise MsaError(f"row '{name}' contains invalid symbol {c!r}")
            if row.count(GAP) == n:
                raise MsaError(f"row '{name}' consists only of gap symbols")
        sigma = frozenset("".join(self.rows)) - {GAP}
        object.__setattr__(self, "alphabet", sigma)

    @classmethod
    def from_rows(cls, rows, names=None) -> "Msa":
        rows = tuple(r.upper() for r in rows)
        if names is None:
            names = tuple(f"r{i}" for i in range(1, len(rows) + 1))
        return cls(rows=rows, names=tuple(names))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def row(self, i: int) -> str:
        """Row i (1-based)."""
        if not 1 <= i <= self.m:
            raise MsaError(f"row index {i} out of range [1..{self.m}]")
        return self.rows[i - 1]


def parse_aligned_fasta(data: str | bytes) -> Msa:
    """Parse aligned FASTA text into an Msa.

    Sequence characters are upper-cased; '-' marks a gap. Header text after
    '>' is kept verbatim as the row name.
    """
    if isinstance(data, bytes):
        data = data.decode("ascii")
    names: list[str] = []
    chunks: list[list[str]] = []
    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">"):
            names.append(line[1:].strip() or f"r{len(names) + 1}")
            chunks.append([])
        else:
            if not names:
                raise MsaError(f"line {lineno}: sequence data before first header")
            chunks[-1].append(line)
    if not names:
        raise MsaError("empty input: no FASTA records found")
    rows = ["".join(parts) for parts in chunks]
    return Msa.from_rows(rows, names)


def to_fasta(msa: Msa) -> str:
    """Serialize back to aligned FASTA (one sequence line per row)."""
    out = []
    for name, row in zip(msa.names, msa.rows):
        out.append(f">{name}\n{row}\n")
    return "".join(out)


def spell(msa: Msa, i: int, x: int, y: int) -> str:
    """Row i restricted to columns [x..y] with gaps removed.

    x = y + 1 yields the empty string.
    """
    if not 1 <= i <= msa.m:
        raise MsaError(f"row index {i} out of range [1..{msa.m}]")
    if not (1 <= x <= y + 1 and y <= msa.n):
        raise MsaError(f"column range [{x}..{y}] out of range for n={msa.n}")
    return msa.rows[i - 1][x - 1 : y].replace(GAP, "")


class GapIndex:
    """Constant-time rank/select over the non-gap positions of each row.

    Maps between alignment columns and positions in the gaps-removed rows.
    Backed by plain prefix-sum and position arrays, shared with the
    compiled kernels.
    """

    def __init__(self, msa: Msa):
        m, n = msa.m, msa.n
        self.m, self.n = m, n
        nongap = np.zeros((m, n), dtype=np.bool_)
        for i, row in enumerate(msa.rows):
            nongap[i] = np.frombuffer(row.encode("ascii"), dtype=np.uint8) != ord(GAP)
        self.is_gap = ~nongap
        # rank2d[i, x] = number of non-gaps in row i+1, columns [1..x]
        self.rank2d = np.zeros((m, n + 1), dtype=np.int64)
        np.cumsum(nongap, axis=1, out=self.rank2d[:, 1:])
        self.spell_lens = self.rank2d[:, n].copy()
        # sel2d[i, k] = 1-based column of the k-th non-gap of row i+1
        max_len = int(self.spell_lens.max())
        self.sel2d = np.full((m, max_len + 1), n + 1, dtype=np.int64)
        for i in range(m):
            cols = np.flatnonzero(nongap[i]) + 1
            self.sel2d[i, 1 : len(cols) + 1] = cols

    def _check_row(self, i: int):
        if not 1 <= i <= self.m:
            raise MsaError(f"row index {i} out of range [1..{self.m}]")

    def non_gap_rank(self, i: int, x: int) -> int:
        """Number of non-gap symbols in row i, columns [1..x]; x = 0 gives 0."""
        self._check_row(i)
        if not 0 <= x <= self.n:
            raise MsaError(f"column {x} out of range [0..{self.n}]")
        return int(self.rank2d[i - 1, x])

    def non_gap_select(self, i: int, k: int) -> int:
        """Column of the k-th non-gap symbol of row i, or n+1 past the end."""
        self._check_row(i)
        if k < 1:
            raise MsaError(f"select count {k} must be >= 1")
        if k > self.spell_lens[i - 1]:
            return self.n + 1
        return int(self.sel2d[i - 1, k])

    def segment_start_pos(self, i: int, x: int) -> int:
        """Gaps-removed start position of the suffix of row i at column x.

        Equals the number of non-gaps in [1..x-1] plus one; x = n + 1 names
        the terminator position one past the gaps-removed row.
        """
        self._check_row(i)
        if not 1 <= x <= self.n + 1:
            raise MsaError(f"column {x} out of range [1..{self.n + 1}]")
        return int(self.rank2d[i - 1, x - 1]) + 1
