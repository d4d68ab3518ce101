"""Optimal semi-repeat-free segmentation scores in one pass over the columns.

Both schemes consume the (x, f(x)) pairs sorted by f. Scheme "maxblocks"
keeps a running maximum of s(x)+1 over the usable prefixes. Scheme
"minmaxlen" tracks the two recursion flavours separately: a count array C
over scores of segmentations whose last segment is still no longer than the
previous optimum (non-leader), and a single best value S for segmentations
whose last segment dominates (leader). When a non-leader segment outgrows
its score it migrates to the leader side via an expiry bucket, which is why
the running minimum I over C only ever needs to be nudged up by one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._accel import njit
from .extensions import ExtensionTable

MAXBLOCKS = "maxblocks"
MINMAXLEN = "minmaxlen"

# scores and witnesses fit int32 (values bounded by n + 1); the smaller
# randomly-indexed arrays stay cache-resident at large n
_INF32 = np.int32(1) << 28

INF = int(_INF32)
NEG_INF = -INF


@njit(cache=True)
def _max_blocks_kernel(xs, fs, n):
    s = np.full(n + 1, -_INF32, np.int32)
    s[0] = 0
    pred = np.full(n + 1, -1, np.int32)
    best = -_INF32
    bx = -1
    ptr = 0
    ops = 0
    n_pairs = len(fs)
    for j in range(1, n + 1):
        while ptr < n_pairs and fs[ptr] <= j:
            x = xs[ptr]
            if s[x] > -_INF32 and s[x] + 1 > best:
                best = s[x] + 1
                bx = x
            ptr += 1
            ops += 1
        if best > -_INF32:
            s[j] = best
            pred[j] = bx
        ops += 1
    return s, pred, ops


@njit(cache=True)
def _min_max_len_kernel(xs, fs, n):
    s = np.full(n + 1, _INF32, np.int32)
    s[0] = 0
    pred = np.full(n + 1, -1, np.int32)
    C = np.zeros(n + 2, np.int32)
    # expiry buckets as linked lists threaded through the x values, with the
    # score stored alongside; maxx[v] = largest consumed non-leader x of
    # score v, which is always a live witness while C[v] > 0
    bucket_head = np.full(n + 2, -1, np.int32)
    bucket_next = np.full(n + 1, -1, np.int32)
    bucket_score = np.full(n + 1, -1, np.int32)
    maxx = np.full(n + 2, -1, np.int32)
    ptr = 0
    ops = 0
    n_pairs = len(fs)
    I = np.int32(1)
    S = _INF32
    s_wit = np.int32(-1)
    for j in range(1, n + 1):
        while ptr < n_pairs and fs[ptr] <= j:
            x = xs[ptr]
            ptr += 1
            ops += 1
            sx = s[x]
            if sx >= _INF32:
                continue  # prefix [1..x] has no valid segmentation
            if j <= x + sx:
                # non-leader: usable at score s(x) until column x + s(x)
                C[sx] += 1
                if sx < I:
                    I = sx
                if x > maxx[sx]:
                    maxx[sx] = x
                e = x + sx + 1
                if e <= n:
                    bucket_score[x] = sx
                    bucket_next[x] = bucket_head[e]
                    bucket_head[e] = x
            else:
                if j - x < S:
                    S = j - x
                    s_wit = x
        b = bucket_head[j]
        while b != -1:
            # [b+1..j] just became longer than s(b): move to the leader side
            C[bucket_score[b]] -= 1
            if j - b < S:
                S = j - b
                s_wit = b
            b = bucket_next[b]
            ops += 1
        if C[I] > 0:
            if I <= S:
                s[j] = I
                pred[j] = maxx[I]
            else:
                s[j] = S
                pred[j] = s_wit
        elif S < _INF32:
            s[j] = S
            pred[j] = s_wit
        S += 1
        if C[I] == 0:
            I += 1
        ops += 1
    return s, pred, ops


@dataclass
class ScoreTable:
    """Per-prefix optimal scores s(0..n) plus traceback witnesses."""

    scheme: str
    s: np.ndarray
    pred: np.ndarray
    n: int
    op_count: int

    def score(self, j: int | None = None) -> int | None:
        """Optimal score of prefix [1..j] (default j = n); None if unsegmentable."""
        j = self.n if j is None else j
        v = int(self.s[j])
        if v >= INF or v <= NEG_INF:
            return None
        return v


@dataclass
class Segmentation:
    """Consecutive column intervals [start..end] partitioning [1..n]."""

    blocks: list[tuple[int, int]]
    score: int
    scheme: str

    @property
    def b(self) -> int:
        return len(self.blocks)

    def max_block_length(self) -> int:
        return max(e - s + 1 for s, e in self.blocks)


class UnsegmentableError(ValueError):
    """No semi-repeat-free segmentation of the full alignment exists."""


def score_max_blocks(ext: ExtensionTable) -> ScoreTable:
    """Maximize the number of blocks."""
    xs, fs = ext.pairs_by_f()
    s, pred, ops = _max_blocks_kernel(xs, fs, ext.n)
    return ScoreTable(scheme=MAXBLOCKS, s=s, pred=pred, n=ext.n, op_count=int(ops))


def score_min_max_length(pairs: tuple[np.ndarray, np.ndarray], n: int) -> ScoreTable:
    """Minimize the maximum block length.

    ``pairs`` is (xs, fs) sorted ascending by f, covering x = 0..n-1; pairs
    with f(x) = n + 1 are never consumed.
    """
    xs, fs = pairs
    if len(xs) != n or len(fs) != n:
        raise ValueError(f"expected {n} extension pairs, got {len(xs)}")
    if np.any(np.diff(fs) < 0):
        raise ValueError("extension pairs are not sorted by f")
    if n and (xs.min() < 0 or xs.max() >= n or fs.min() < 1 or fs.max() > n + 1):
        raise ValueError("extension pair values out of range")
    s, pred, ops = _min_max_len_kernel(xs, fs, n)
    return ScoreTable(scheme=MINMAXLEN, s=s, pred=pred, n=n, op_count=int(ops))


def traceback(table: ScoreTable, ext: ExtensionTable) -> Segmentation:
    """Recover an optimal segmentation from the witness predecessors."""
    score = table.score()
    if score is None:
        raise UnsegmentableError("no semi-repeat-free segmentation exists")
    blocks: list[tuple[int, int]] = []
    j = table.n
    while j > 0:
        x = int(table.pred[j])
        if x < 0 or x >= j or ext.f[x] > j:
            raise AssertionError(f"invalid traceback witness {x} at column {j}")
        blocks.append((x + 1, j))
        j = x
    blocks.reverse()
    return Segmentation(blocks=blocks, score=score, scheme=table.scheme)
