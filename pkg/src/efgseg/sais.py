"""Linear-time suffix array (SA-IS induced sorting) and LCP array (Kasai).

Input is an int64 array with values in [1..alphabet_size-1]; a virtual 0
sentinel is appended internally. The recursion over reduced problems runs
at the Python level (depth is O(log n)); all scans are compiled kernels.
"""

from __future__ import annotations

import numpy as np

from ._accel import njit

_S = 1  # S-type suffix: smaller than the suffix to its right
_L = 0


@njit(cache=True)
def _classify(s):
    n = len(s)
    types = np.empty(n, np.uint8)
    types[n - 1] = _S
    for i in range(n - 2, -1, -1):
        if s[i] < s[i + 1]:
            types[i] = _S
        elif s[i] > s[i + 1]:
            types[i] = _L
        else:
            types[i] = types[i + 1]
    return types


@njit(cache=True)
def _lms_flags(types):
    n = len(types)
    flags = np.zeros(n, np.bool_)
    for i in range(1, n):
        if types[i] == _S and types[i - 1] == _L:
            flags[i] = True
    return flags


@njit(cache=True)
def _bucket_bounds(s, k):
    counts = np.zeros(k, np.int64)
    for i in range(len(s)):
        counts[s[i]] += 1
    heads = np.zeros(k, np.int64)
    tails = np.zeros(k, np.int64)
    acc = 0
    for c in range(k):
        heads[c] = acc
        acc += counts[c]
        tails[c] = acc
    return heads, tails


@njit(cache=True)
def _place_lms(s, lms_positions, sa, tails):
    # Insert LMS suffixes at their bucket tails; order within a bucket is
    # irrelevant for the first induction pass.
    for idx in range(len(lms_positions) - 1, -1, -1):
        p = lms_positions[idx]
        c = s[p]
        tails[c] -= 1
        sa[tails[c]] = p


@njit(cache=True)
def _induce_l(s, sa, types, heads):
    for i in range(len(sa)):
        j = sa[i] - 1
        if sa[i] <= 0:
            continue
        if types[j] == _L:
            c = s[j]
            sa[heads[c]] = j
            heads[c] += 1


@njit(cache=True)
def _induce_s(s, sa, types, tails):
    for i in range(len(sa) - 1, -1, -1):
        j = sa[i] - 1
        if sa[i] <= 0:
            continue
        if types[j] == _S:
            c = s[j]
            tails[c] -= 1
            sa[tails[c]] = j


@njit(cache=True)
def _lms_equal(s, lms, a, b):
    n = len(s)
    if a == b:
        return True
    if a == n - 1 or b == n - 1:
        return False  # the sentinel LMS substring is unique
    d = 0
    while True:
        if s[a + d] != s[b + d]:
            return False
        if d > 0:
            al = lms[a + d]
            bl = lms[b + d]
            if al and bl:
                return True
            if al != bl:
                return False
        d += 1


@njit(cache=True)
def _name_lms(s, sa, lms, lms_rank, n_lms):
    # Names LMS substrings in their sorted (induced) order; equal substrings
    # are adjacent after the first induction round.
    names = np.full(n_lms, -1, np.int64)
    current = -1
    prev = -1
    distinct = 0
    for i in range(len(sa)):
        p = sa[i]
        if p > 0 and lms[p]:
            if prev == -1 or not _lms_equal(s, lms, prev, p):
                current += 1
                distinct += 1
            names[lms_rank[p]] = current
            prev = p
    return names, distinct


def _sais(s: np.ndarray, k: int) -> np.ndarray:
    """Suffix array of s, whose last element is the unique smallest value 0."""
    n = len(s)
    if n == 1:
        return np.zeros(1, np.int64)
    if n == 2:
        return np.array([1, 0], dtype=np.int64)
    types = _classify(s)
    lms = _lms_flags(types)
    lms_positions = np.flatnonzero(lms).astype(np.int64)
    n_lms = len(lms_positions)
    lms_rank = np.zeros(n, np.int64)
    lms_rank[lms_positions] = np.arange(n_lms)

    heads, tails = _bucket_bounds(s, k)
    sa = np.full(n, -1, np.int64)
    _place_lms(s, lms_positions, sa, tails.copy())
    _induce_l(s, sa, types, heads.copy())
    _induce_s(s, sa, types, tails.copy())

    names, distinct = _name_lms(s, sa, lms, lms_rank, n_lms)
    if distinct < n_lms:
        # Recurse on the reduced string of LMS-substring names (shifted so
        # that the final sentinel name 0 stays the unique smallest).
        summary = names + 1
        summary[-1] = 0
        order = _sais(summary, distinct + 1)
        sorted_lms = lms_positions[order]
    else:
        sorted_lms = np.empty(n_lms, np.int64)
        sorted_lms[names] = lms_positions

    sa.fill(-1)
    _place_lms(s, sorted_lms, sa, tails.copy())
    _induce_l(s, sa, types, heads.copy())
    _induce_s(s, sa, types, tails.copy())
    return sa


def suffix_array(data: np.ndarray, alphabet_size: int) -> np.ndarray:
    """Suffix array of data (values in [1..alphabet_size-1]), length len(data)."""
    data = np.ascontiguousarray(data, dtype=np.int64)
    if len(data) == 0:
        return np.empty(0, np.int64)
    work = np.empty(len(data) + 1, np.int64)
    work[:-1] = data
    work[-1] = 0
    sa = _sais(work, alphabet_size)
    return sa[1:]  # drop the sentinel suffix


@njit(cache=True)
def _kasai(s, sa):
    n = len(sa)
    rank = np.empty(n, np.int64)
    for r in range(n):
        rank[sa[r]] = r
    lcp = np.zeros(n, np.int64)
    h = 0
    for i in range(n):
        r = rank[i]
        if r > 0:
            j = sa[r - 1]
            while i + h < n and j + h < n and s[i + h] == s[j + h]:
                h += 1
            lcp[r] = h
            if h > 0:
                h -= 1
        else:
            h = 0
    return lcp, rank


def lcp_array(data: np.ndarray, sa: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """LCP array (lcp[r] = LCP of suffixes at ranks r-1 and r) plus inverse SA."""
    data = np.ascontiguousarray(data, dtype=np.int64)
    return _kasai(data, np.ascontiguousarray(sa, dtype=np.int64))
