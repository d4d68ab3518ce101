import random

import pytest

from efgseg import oracle as O
from efgseg.dp import (
    INF,
    MAXBLOCKS,
    MINMAXLEN,
    UnsegmentableError,
    score_max_blocks,
    score_min_max_length,
    traceback,
)
from efgseg.msa import Msa
from tests.conftest import build_pipeline


def scores(table):
    return [table.score(j) for j in range(table.n + 1)]


def test_fixture_e_max_blocks(msa_e):
    _, _, ext = build_pipeline(msa_e)
    table = score_max_blocks(ext)
    assert scores(table) == [0, 1, 1, 2, 3]
    seg = traceback(table, ext)
    assert seg.blocks == [(1, 1), (2, 3), (4, 4)]
    assert seg.score == 3 == O.oracle_optimal_score(msa_e, MAXBLOCKS)


def test_fixture_e_min_max_length(msa_e):
    _, _, ext = build_pipeline(msa_e)
    table = score_min_max_length(ext.pairs_by_f(), msa_e.n)
    assert scores(table) == [0, 1, 2, 2, 2]
    seg = traceback(table, ext)
    assert seg.blocks == [(1, 1), (2, 3), (4, 4)]
    assert seg.max_block_length() == 2 == O.oracle_optimal_score(msa_e, MINMAXLEN)


def test_aaa_forced_single_block(msa_aaa):
    _, _, ext = build_pipeline(msa_aaa)
    t1 = score_max_blocks(ext)
    assert scores(t1) == [0, None, None, 1]
    assert traceback(t1, ext).blocks == [(1, 3)]
    t2 = score_min_max_length(ext.pairs_by_f(), 3)
    assert t2.score() == 3
    assert traceback(t2, ext).blocks == [(1, 3)]


def test_all_singletons():
    # distinct symbols everywhere: every column is its own valid block
    msa = Msa.from_rows(["ABC"])
    _, _, ext = build_pipeline(msa)
    assert ext.f.tolist() == [1, 2, 3]
    t1 = score_max_blocks(ext)
    assert scores(t1) == [0, 1, 2, 3]
    t2 = score_min_max_length(ext.pairs_by_f(), 3)
    assert scores(t2) == [0, 1, 1, 1]
    assert traceback(t2, ext).blocks == [(1, 1), (2, 2), (3, 3)]


def test_unsegmentable():
    msa = Msa.from_rows(["A-B-", "AABB"])
    _, _, ext = build_pipeline(msa)
    assert ext.f.tolist() == [5, 5, 5, 5]
    t1 = score_max_blocks(ext)
    t2 = score_min_max_length(ext.pairs_by_f(), msa.n)
    assert t1.score() is None and t2.score() is None
    assert O.oracle_optimal_score(msa, MAXBLOCKS) is None
    with pytest.raises(UnsegmentableError):
        traceback(t1, ext)
    with pytest.raises(UnsegmentableError):
        traceback(t2, ext)


def test_matches_oracle_random():
    for seed in range(300):
        rng = random.Random(seed * 13 + 1)
        spec = O.RandomMsaSpec(
            seed=seed + 5000, m=rng.randint(1, 6), n=rng.randint(1, 24),
            sigma=rng.choice([2, 4]), gap_prob=0.2,
        )
        msa = O.generate_msa(spec)
        _, _, ext = build_pipeline(msa)
        t1 = score_max_blocks(ext)
        t2 = score_min_max_length(ext.pairs_by_f(), msa.n)
        assert t1.score() == O.oracle_optimal_score(msa, MAXBLOCKS), seed
        assert t2.score() == O.oracle_optimal_score(msa, MINMAXLEN), seed
        checker = O.SegmentChecker(msa)
        for table in (t1, t2):
            if table.score() is None:
                continue
            seg = traceback(table, ext)
            achieved = seg.b if table.scheme == MAXBLOCKS else seg.max_block_length()
            assert achieved == table.score(), (seed, table.scheme)
            assert seg.blocks[0][0] == 1 and seg.blocks[-1][1] == msa.n
            for (_, e1), (s2, _) in zip(seg.blocks, seg.blocks[1:]):
                assert s2 == e1 + 1
            assert all(checker.is_valid(a, b) for a, b in seg.blocks), (seed, table.scheme)


def test_max_blocks_monotone_once_finite():
    for seed in range(40):
        msa = O.generate_msa(O.RandomMsaSpec(seed=seed + 900, m=4, n=20))
        _, _, ext = build_pipeline(msa)
        table = score_max_blocks(ext)
        vals = scores(table)
        finite = [v for v in vals[1:] if v is not None]
        assert all(a <= b for a, b in zip(finite, finite[1:]))


def test_min_max_internal_invariant():
    # replay the count/expiry bookkeeping in plain Python and assert the
    # running-minimum property the pruned update relies on
    for seed in range(60):
        rng = random.Random(seed)
        msa = O.generate_msa(O.RandomMsaSpec(seed=seed + 1300, m=rng.randint(1, 5), n=20))
        _, _, ext = build_pipeline(msa)
        table = score_min_max_length(ext.pairs_by_f(), msa.n)
        n = msa.n
        s = [table.score(j) for j in range(n + 1)]
        xs, fs = ext.pairs_by_f()
        C = [0] * (n + 2)
        expiry = [[] for _ in range(n + 2)]
        ptr = 0
        I, S = 1, None
        for j in range(1, n + 1):
            while ptr < n and fs[ptr] <= j:
                x = int(xs[ptr])
                ptr += 1
                if s[x] is None:
                    continue
                if j <= x + s[x]:
                    C[s[x]] += 1
                    I = min(I, s[x])
                    if x + s[x] + 1 <= n:
                        expiry[x + s[x] + 1].append(x)
                else:
                    S = j - x if S is None else min(S, j - x)
            for x in expiry[j]:
                C[s[x]] -= 1
                S = j - x if S is None else min(S, j - x)
            assert all(C[v] == 0 for v in range(1, I)), (seed, j)
            if C[min(I, n + 1)] > 0:
                expect = I if S is None else min(I, S)
            else:
                expect = S
            assert s[j] == expect, (seed, j)
            if S is not None:
                S += 1
            if C[min(I, n + 1)] == 0:
                I += 1


def test_leader_boundary_pair_is_usable():
    # at j = f(x) = x + s(x) + 1 the pair arrives exactly on the leader
    # boundary; it must be taken as a leader segment at that very column.
    # here x=3 is the unique achiever of s(7) = 4 = 7 - 3.
    msa = Msa.from_rows(["-AA-CAC", "AACC--A"])
    _, _, ext = build_pipeline(msa)
    table = score_min_max_length(ext.pairs_by_f(), msa.n)
    x = 3
    assert int(ext.f[x]) == 7 and table.score(x) == 3  # boundary: 7 == 3 + 3 + 1
    assert table.score(7) == 4 == O.oracle_optimal_score(msa, MINMAXLEN)
    seg = traceback(table, ext)
    assert seg.blocks[-1] == (4, 7)


def test_min_max_input_validation(msa_e):
    _, _, ext = build_pipeline(msa_e)
    xs, fs = ext.pairs_by_f()
    with pytest.raises(ValueError, match="sorted"):
        score_min_max_length((xs[::-1].copy(), fs[::-1].copy()), msa_e.n)
    with pytest.raises(ValueError, match="pairs"):
        score_min_max_length((xs[:2], fs[:2]), msa_e.n)


def test_work_counters_linear():
    for seed in range(20):
        msa = O.generate_msa(O.RandomMsaSpec(seed=seed + 1700, m=4, n=64))
        _, _, ext = build_pipeline(msa)
        t1 = score_max_blocks(ext)
        t2 = score_min_max_length(ext.pairs_by_f(), msa.n)
        assert t1.op_count <= 8 * msa.n + 8
        assert t2.op_count <= 8 * msa.n + 8


def test_score_table_bounds():
    for seed in range(30):
        msa = O.generate_msa(O.RandomMsaSpec(seed=seed + 2100, m=3, n=18))
        _, _, ext = build_pipeline(msa)
        t1 = score_max_blocks(ext)
        t2 = score_min_max_length(ext.pairs_by_f(), msa.n)
        for j in range(1, msa.n + 1):
            v1 = t1.score(j)
            assert v1 is None or 1 <= v1 <= j
            v2 = t2.score(j)
            assert v2 is None or 1 <= v2 <= j
