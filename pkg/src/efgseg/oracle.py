"""Brute-force reference implementations and seeded input generators.

Everything here recomputes from first principles with naive scans: no suffix
tree, no rank/select tables, no shared state with the fast modules. These
are the ground truth the fast paths are tested against, so keeping them
independent (and slow) is deliberate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .msa import GAP, Msa

MAXBLOCKS = "maxblocks"
MINMAXLEN = "minmaxlen"

_LETTERS = "ACGTBDEFHIKLMNPQRSUVWXYZ"


# -- generators -------------------------------------------------------------


@dataclass(frozen=True)
class RandomMsaSpec:
    """Deterministic generator parameters; same spec always yields the same Msa."""

    seed: int
    m: int
    n: int
    sigma: int = 4
    gap_prob: float = 0.2


def generate_msa(spec: RandomMsaSpec) -> Msa:
    """Seeded random alignment; all-gap rows are resampled."""
    rng = random.Random(spec.seed)
    letters = _LETTERS[: spec.sigma]
    threshold = round(spec.gap_prob * 1000)
    rows = []
    for _ in range(spec.m):
        while True:
            row = "".join(
                GAP if rng.randrange(1000) < threshold else letters[rng.randrange(spec.sigma)]
                for _ in range(spec.n)
            )
            if row.count(GAP) < spec.n:
                break
        rows.append(row)
    return Msa.from_rows(rows)


def generate_tree_children(seed: int, max_nodes: int = 200) -> dict[int, list[int]]:
    """Random compacted tree as dense children lists (internal nodes have >= 2)."""
    rng = random.Random(seed)
    children: dict[int, list[int]] = {0: []}
    frontier = [0]
    while frontier:
        v = frontier.pop(rng.randrange(len(frontier)))
        k = rng.randrange(2, 5)
        if len(children) + k > max_nodes:
            continue
        for _ in range(k):
            c = len(children)
            children[c] = []
            children[v].append(c)
            if rng.randrange(100) < 35:
                frontier.append(c)
    if not children[0]:  # root must be internal
        children[0] = [1, 2]
        children[1] = []
        children[2] = []
    return children


# -- segment / extension / score oracles -------------------------------------


def _occurrences(text: str, pat: str) -> list[int]:
    """All (overlapping) 0-based occurrence positions of pat in text."""
    out = []
    start = 0
    while True:
        p = text.find(pat, start)
        if p == -1:
            return out
        out.append(p)
        start = p + 1


class SegmentChecker:
    """Memoized naive semi-repeat-free test for one alignment."""

    def __init__(self, msa: Msa):
        self.msa = msa
        self.full = [row.replace(GAP, "") for row in msa.rows]
        # start[i][x] = 0-based position in full[i] of the suffix at column x+1
        self.start = [
            [len(row[:x].replace(GAP, "")) for x in range(msa.n + 1)] for row in msa.rows
        ]
        self._memo: dict[tuple[int, int], bool] = {}

    def is_valid(self, x: int, y: int) -> bool:
        """True iff columns [x..y] form a semi-repeat-free segment (1-based)."""
        if not 1 <= x <= y <= self.msa.n:
            raise ValueError(f"segment [{x}..{y}] out of range for n={self.msa.n}")
        key = (x, y)
        if key in self._memo:
            return self._memo[key]
        ok = True
        seen: set[str] = set()
        for i, row in enumerate(self.msa.rows):
            t = row[x - 1 : y].replace(GAP, "")
            if not t:
                ok = False
                break
            if t in seen:
                continue
            seen.add(t)
            for ip in range(self.msa.m):
                req = self.start[ip][x - 1]
                if any(p != req for p in _occurrences(self.full[ip], t)):
                    ok = False
                    break
            if not ok:
                break
        self._memo[key] = ok
        return ok


def oracle_is_semi_repeat_free_segment(msa: Msa, x: int, y: int) -> bool:
    return SegmentChecker(msa).is_valid(x, y)


def oracle_minimal_right_extension(msa: Msa, x: int, checker: SegmentChecker | None = None) -> int:
    """Smallest y in [x+1..n] making [x+1..y] semi-repeat-free, else n+1."""
    if not 0 <= x <= msa.n - 1:
        raise ValueError(f"x={x} out of range [0..{msa.n - 1}]")
    checker = checker or SegmentChecker(msa)
    for y in range(x + 1, msa.n + 1):
        if checker.is_valid(x + 1, y):
            return y
    return msa.n + 1


def oracle_optimal_score(msa: Msa, scheme: str) -> int | None:
    """Quadratic segmentation DP; None when no valid segmentation exists."""
    checker = SegmentChecker(msa)
    n = msa.n
    s: list[int | None] = [None] * (n + 1)
    s[0] = 0
    for j in range(1, n + 1):
        best: int | None = None
        for x in range(j):
            if s[x] is None or not checker.is_valid(x + 1, j):
                continue
            if scheme == MAXBLOCKS:
                cand = s[x] + 1
                if best is None or cand > best:
                    best = cand
            elif scheme == MINMAXLEN:
                cand = max(s[x], j - x)
                if best is None or cand < best:
                    best = cand
            else:
                raise ValueError(f"unknown scheme {scheme!r}")
        s[j] = best
    return s[n]


# -- tree oracle --------------------------------------------------------------


def oracle_exclusive_ancestors(tree, leaf_ranks) -> set[int]:
    """All nodes covering only query leaves whose parent covers a non-query leaf.

    Recomputes leaf order and coverage by its own traversal of the children
    lists; quadratic and independent of the tree's preprocessed intervals.
    """
    L = set(int(r) for r in leaf_ranks)
    if not L:
        raise ValueError("query leaf set is empty")
    order: list[int] = []
    stack = [int(tree.root)]
    parent: dict[int, int] = {int(tree.root): -1}
    while stack:
        v = stack.pop()
        order.append(v)
        kids = tree.children(v)
        for c in reversed(kids):
            parent[int(c)] = v
            stack.append(int(c))
    ranks: dict[int, int] = {}
    under: dict[int, set[int]] = {}
    for v in order:
        if not tree.children(v):
            ranks[v] = len(ranks)
    for v in reversed(order):
        kids = tree.children(v)
        if not kids:
            under[v] = {ranks[v]}
        else:
            under[v] = set().union(*(under[int(c)] for c in kids))
    result = set()
    for v in order:
        if under[v] <= L and (parent[v] == -1 or not under[parent[v]] <= L):
            result.add(v)
    return result


# -- founder graph oracle ------------------------------------------------------


def oracle_efg_semi_repeat_free(efg, max_path_len: int) -> bool:
    """Check every node label occurs only as a prefix of paths starting in
    its own block, by enumerating path labels.

    Paths are extended far enough past their first node to contain any
    occurrence that starts inside it (no label can span more than the first
    node plus two maximal labels), and never beyond max_path_len.
    """
    nodes = [nd for block in efg.blocks for nd in block]
    label = {nd.id: nd.label for nd in nodes}
    block_of = {nd.id: nd.block for nd in nodes}
    adj: dict[str, list[str]] = {nd.id: [] for nd in nodes}
    for a, b in efg.edges:
        adj[a].append(b)
    max_lab = max(len(nd.label) for nd in nodes)

    def path_ok(start: str, lab: str) -> bool:
        first_len = len(label[start])
        for nd in nodes:
            for p in _occurrences(lab, nd.label):
                if p >= first_len:
                    continue  # starts in a later node: checked from that start
                if p != 0 or block_of[start] != nd.block:
                    return False
        return True

    for start in label:
        horizon = min(max_path_len, len(label[start]) + 2 * max_lab)
        stack = [(start, label[start])]
        while stack:
            v, lab = stack.pop()
            if len(lab) >= horizon or not adj[v]:
                if not path_ok(start, lab):
                    return False
                continue
            for w in adj[v]:
                stack.append((w, lab + label[w]))
    return True
