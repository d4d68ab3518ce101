"""Minimal semi-repeat-free right extensions f(x) for every prefix boundary.

One sweep over the columns maintains, per row, the suffix-tree leaf of the
gaps-removed row suffix that starts just past the current boundary. Each
column marks those leaves, extracts the exclusive ancestors of their
contiguous runs, and converts each ancestor's branch depth into the column
where the row's shortest distinguishing extension ends. Advancing a row's
leaf to the next suffix is a (row, offset+1) lookup and happens only when
the crossed column is a non-gap. Total work is O(m) per column.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._accel import njit
from .ancestors import _ascend_run
from .gst import Gst
from .msa import GapIndex, Msa, MsaError


@njit(cache=True)
def _extensions_kernel(
    parent, depth, lml, rml, leaf_nodes, leaf_row, isa, row_starts,
    rank2d, sel2d, spell_lens, is_gap, n, m, n_leaves,
):
    f = np.zeros(n, np.int64)
    fi = np.zeros(m, np.int64)
    cur_leaf = np.empty(m, np.int64)
    cur_off = np.ones(m, np.int64)
    for i in range(m):
        cur_leaf[i] = isa[row_starts[i]]
    marked = np.zeros(n_leaves, np.bool_)
    anc_node = np.empty(m, np.int64)
    anc_lo = np.empty(m, np.int64)
    anc_hi = np.empty(m, np.int64)
    ops = 0
    for x in range(n):
        for i in range(m):
            marked[cur_leaf[i]] = True
        for i in range(m):
            lb = cur_leaf[i]
            ops += 1
            if lb > 0 and marked[lb - 1]:
                continue  # interior of a run; handled from its left boundary
            rb = lb
            while rb + 1 < n_leaves and marked[rb + 1]:
                rb += 1
                ops += 1
            count, o = _ascend_run(
                parent, lml, rml, leaf_nodes, lb, rb, anc_node, anc_lo, anc_hi
            )
            ops += o
            for t in range(count):
                g = depth[parent[anc_node[t]]] + 1
                for q in range(anc_lo[t], anc_hi[t] + 1):
                    r = leaf_row[q]
                    k = rank2d[r, x] + g
                    if k <= spell_lens[r]:
                        fi[r] = sel2d[r, k]
                    else:
                        fi[r] = n + 1
                    ops += 1
        fx = 0
        for i in range(m):
            if fi[i] > fx:
                fx = fi[i]
        f[x] = fx
        for i in range(m):
            marked[cur_leaf[i]] = False
            if not is_gap[i, x]:
                cur_off[i] += 1
                cur_leaf[i] = isa[row_starts[i] + cur_off[i] - 1]
    return f, fi, ops


@njit(cache=True)
def _sort_pairs_by_f(f, n):
    # counting sort over values 1..n+1; stable, so x ascends within equal f
    counts = np.zeros(n + 2, np.int64)
    for x in range(n):
        counts[f[x]] += 1
    start = np.zeros(n + 2, np.int64)
    acc = 0
    for v in range(n + 2):
        start[v] = acc
        acc += counts[v]
    xs = np.empty(n, np.int64)
    fs = np.empty(n, np.int64)
    for x in range(n):
        p = start[f[x]]
        xs[p] = x
        fs[p] = f[x]
        start[f[x]] += 1
    return xs, fs


@dataclass
class ExtensionTable:
    """f(x) for x in [0..n-1]; value n+1 means no extension ends by column n."""

    f: np.ndarray
    n: int
    op_count: int
    last_row_extensions: np.ndarray  # per-row values of the final column, diagnostics

    def pairs_by_f(self) -> tuple[np.ndarray, np.ndarray]:
        """(xs, fs) with all n pairs (x, f(x)) sorted ascending by f."""
        return _sort_pairs_by_f(self.f, self.n)

    def __getitem__(self, x: int) -> int:
        return int(self.f[x])


def compute_minimal_right_extensions(msa: Msa, gi: GapIndex, gst: Gst) -> ExtensionTable:
    """f(x) = least y > x such that columns [x+1..y] form a semi-repeat-free
    segment, or n+1 when no such y <= n exists."""
    if (gi.m, gi.n) != (msa.m, msa.n) or (gst.msa.m, gst.msa.n) != (msa.m, msa.n):
        raise MsaError("gap index / suffix tree were built from a different alignment")
    f, fi, ops = _extensions_kernel(
        gst.parent, gst.string_depth, gst.lml, gst.rml, gst.leaf_nodes,
        gst.leaf_row, gst.isa, gst.row_starts,
        gi.rank2d, gi.sel2d, gi.spell_lens, gi.is_gap,
        msa.n, msa.m, gst.n_leaves,
    )
    return ExtensionTable(f=f, n=msa.n, op_count=int(ops), last_row_extensions=fi)
