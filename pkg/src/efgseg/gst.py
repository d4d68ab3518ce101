"""Generalized suffix tree over the gaps-removed MSA rows.

Each row contributes its gaps-removed string followed by a distinct
terminator; terminators sort below every sequence symbol and in row order,
so leaf order is deterministic. The tree is materialized from the suffix
array and LCP array of the row concatenation as flat parent / string-depth
/ leaf-interval arrays (leaves are node ids 0..N-1 in lexicographic order,
internal nodes follow).
"""

from __future__ import annotations

import numpy as np

from ._accel import njit
from .msa import GAP, Msa, MsaError
from .sais import lcp_array, suffix_array


@njit(cache=True)
def _lcp_interval_tree(lcp, n_leaves):
    cap = 2 * n_leaves + 1
    parent = np.full(cap, -1, np.int64)
    depth = np.zeros(cap, np.int64)
    lml = np.zeros(cap, np.int64)
    rml = np.zeros(cap, np.int64)
    root = n_leaves
    nxt = root + 1
    stack = np.empty(n_leaves + 2, np.int64)
    stack[0] = root
    top = 0
    for i in range(n_leaves):
        h = lcp[i] if i > 0 else 0
        if i > 0 and depth[stack[top]] > h:
            # the previous leaf's parent is the deepest interval now closing
            parent[i - 1] = stack[top]
        while depth[stack[top]] > h:
            v = stack[top]
            top -= 1
            rml[v] = i - 1
            t = stack[top]
            if depth[t] >= h:
                parent[v] = t
            else:
                u = nxt
                nxt += 1
                depth[u] = h
                lml[u] = lml[v]
                parent[v] = u
                top += 1
                stack[top] = u
                break
        if depth[stack[top]] < h:
            u = nxt
            nxt += 1
            depth[u] = h
            lml[u] = i - 1
            top += 1
            stack[top] = u
        if i > 0 and parent[i - 1] == -1:
            parent[i - 1] = stack[top]
        lml[i] = i
        rml[i] = i
    parent[n_leaves - 1] = stack[top]
    while top > 0:
        v = stack[top]
        top -= 1
        rml[v] = n_leaves - 1
        parent[v] = stack[top]
    rml[root] = n_leaves - 1
    return parent[:nxt], depth[:nxt], lml[:nxt], rml[:nxt], root


class Gst:
    """Suffix-tree navigation over flat arrays.

    Node ids: leaves are 0..n_leaves-1 in lexicographic suffix order,
    internal nodes (including the root) follow. Leaf origins are
    (row, offset) with offset the 1-based position in the gaps-removed row
    plus terminator; leaf suffix links reduce to ``leaf_for(i, p + 1)``.
    """

    def __init__(self, msa: Msa):
        m = msa.m
        spells = [row.replace(GAP, "") for row in msa.rows]
        sigma = sorted(set("".join(spells)))
        # codes: 0 reserved, terminators 1..m (row order), symbols after
        self.sym_code = {c: m + 1 + idx for idx, c in enumerate(sigma)}
        alphabet_size = m + 1 + len(sigma)

        pieces = []
        row_starts = np.zeros(m, np.int64)
        pos = 0
        for i, sp in enumerate(spells):
            row_starts[i] = pos
            arr = np.empty(len(sp) + 1, np.int64)
            for j, c in enumerate(sp):
                arr[j] = self.sym_code[c]
            arr[-1] = i + 1  # terminator of row i+1
            pieces.append(arr)
            pos += len(arr)
        text = np.concatenate(pieces)

        sa = suffix_array(text, alphabet_size)
        lcp, isa = lcp_array(text, sa)
        parent, depth, lml, rml, root = _lcp_interval_tree(lcp, len(sa))

        self.msa = msa
        self.text = text
        self.sa = sa
        self.isa = isa
        self.row_starts = row_starts
        self.row_alpha_lens = np.array([len(sp) + 1 for sp in spells], np.int64)
        self.parent = parent
        self.string_depth = depth
        self.lml = lml
        self.rml = rml
        self.root = root
        self.n_leaves = len(sa)
        self.n_nodes = len(parent)

        # leaf rank -> (0-based row, 1-based offset within the row string)
        row_of_pos = np.searchsorted(row_starts, sa, side="right") - 1
        self.leaf_row = row_of_pos.astype(np.int64)
        self.leaf_off = sa - row_starts[row_of_pos] + 1
        # leaf string depths: suffix length truncated at the row terminator
        self.string_depth[: self.n_leaves] = (
            self.row_alpha_lens[self.leaf_row] - self.leaf_off + 1
        )
        self.leaf_nodes = np.arange(self.n_leaves, dtype=np.int64)
        self.marked = np.zeros(self.n_leaves, np.bool_)

    # -- navigation -------------------------------------------------------

    def leaf_for(self, i: int, p: int) -> int:
        """Leaf whose origin is (row i, gaps-removed offset p), both 1-based."""
        if not 1 <= i <= self.msa.m:
            raise MsaError(f"row index {i} out of range [1..{self.msa.m}]")
        if not 1 <= p <= self.row_alpha_lens[i - 1]:
            raise MsaError(
                f"offset {p} out of range [1..{self.row_alpha_lens[i - 1]}] for row {i}"
            )
        return int(self.isa[self.row_starts[i - 1] + p - 1])

    def leaf_origin(self, leaf: int) -> tuple[int, int]:
        """(row, offset) of a leaf rank, both 1-based."""
        return int(self.leaf_row[leaf]) + 1, int(self.leaf_off[leaf])

    def prev_leaf(self, leaf: int) -> int | None:
        return leaf - 1 if leaf > 0 else None

    def next_leaf(self, leaf: int) -> int | None:
        return leaf + 1 if leaf < self.n_leaves - 1 else None

    def mark(self, leaf: int):
        self.marked[leaf] = True

    def unmark(self, leaf: int):
        self.marked[leaf] = False

    def is_marked(self, leaf: int) -> bool:
        return bool(self.marked[leaf])

    def is_leaf(self, node: int) -> bool:
        return node < self.n_leaves

    def children(self, node: int) -> list[int]:
        """Children of a node in leaf order (computed on demand)."""
        kids = [v for v in range(self.n_nodes) if v != self.root and self.parent[v] == node]
        kids.sort(key=lambda v: int(self.lml[v]))
        return kids

    def path_label(self, node: int) -> str:
        """Decoded root-to-node label (terminators shown as $<row>)."""
        leaf = int(self.lml[node])
        start = int(self.sa[leaf])
        codes = self.text[start : start + int(self.string_depth[node])]
        inv = {v: k for k, v in self.sym_code.items()}
        return "".join(inv[c] if c in inv else f"${c}" for c in codes.tolist())

    # -- debug dumps (not a stability contract) ----------------------------

    def dump_text(self) -> str:
        lines: list[str] = []

        def rec(node: int, indent: int):
            tag = f"leaf {self.leaf_origin(node)}" if self.is_leaf(node) else "node"
            lines.append(
                "  " * indent
                + f"{tag} depth={int(self.string_depth[node])} "
                + f"leaves=[{int(self.lml[node])}..{int(self.rml[node])}] "
                + f"label={self.path_label(node)!r}"
            )
            for c in self.children(node):
                rec(c, indent + 1)

        rec(self.root, 0)
        return "\n".join(lines) + "\n"

    def dump_dot(self) -> str:
        lines = ["digraph gst {", "  node [shape=box];"]
        for v in range(self.n_nodes):
            lines.append(
                f'  n{v} [label="d={int(self.string_depth[v])} '
                f'[{int(self.lml[v])}..{int(self.rml[v])}]"];'
            )
            if v != self.root:
                lines.append(f"  n{int(self.parent[v])} -> n{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_gst(msa: Msa) -> Gst:
    """Build the generalized suffix tree of the gaps-removed rows."""
    return Gst(msa)
