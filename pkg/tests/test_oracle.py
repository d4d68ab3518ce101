import pytest

import efgseg as E
from efgseg import oracle as O
from efgseg.ancestors import ArrayTree
from efgseg.dp import Segmentation
from efgseg.msa import Msa


def test_segment_examples(msa_e, msa_aaa):
    assert O.oracle_is_semi_repeat_free_segment(msa_e, 2, 3)
    assert not O.oracle_is_semi_repeat_free_segment(msa_e, 3, 4)
    assert not O.oracle_is_semi_repeat_free_segment(msa_aaa, 1, 1)


def test_segment_empty_spell_is_invalid(msa_e):
    assert not O.oracle_is_semi_repeat_free_segment(msa_e, 3, 3)  # row 1 spells ""


def test_segment_range_errors(msa_e):
    with pytest.raises(ValueError):
        O.oracle_is_semi_repeat_free_segment(msa_e, 0, 2)
    with pytest.raises(ValueError):
        O.oracle_is_semi_repeat_free_segment(msa_e, 3, 5)


def test_minimal_extension_examples(msa_e):
    assert O.oracle_minimal_right_extension(msa_e, 1) == 3
    assert O.oracle_minimal_right_extension(msa_e, 2) == 5
    assert O.oracle_minimal_right_extension(Msa.from_rows(["A", "C"]), 0) == 1
    with pytest.raises(ValueError):
        O.oracle_minimal_right_extension(msa_e, 4)


def test_optimal_score_examples(msa_e, msa_aaa):
    assert O.oracle_optimal_score(msa_e, O.MAXBLOCKS) == 3
    assert O.oracle_optimal_score(msa_e, O.MINMAXLEN) == 2
    assert O.oracle_optimal_score(msa_aaa, O.MAXBLOCKS) == 1
    with pytest.raises(ValueError):
        O.oracle_optimal_score(msa_e, "bogus")


def test_exclusive_ancestors_examples(msa_e):
    star = ArrayTree({0: [1, 2, 3]})
    assert O.oracle_exclusive_ancestors(star, range(star.n_leaves)) == {0}
    assert O.oracle_exclusive_ancestors(star, [1]) == {star.leaf_nodes[1]}
    gst = E.build_gst(msa_e)
    got = O.oracle_exclusive_ancestors(gst, [gst.leaf_for(1, 1), gst.leaf_for(2, 1)])
    assert len(got) == 1
    assert gst.path_label(got.pop()) == "AGC"


def test_efg_oracle_examples(msa_e, msa_aaa):
    seg = Segmentation(blocks=[(1, 1), (2, 3), (4, 4)], score=2, scheme="minmaxlen")
    efg = E.build_efg(msa_e, seg)
    assert O.oracle_efg_semi_repeat_free(efg, 3)
    bad = E.build_efg(msa_aaa, Segmentation(blocks=[(1, 1), (2, 2), (3, 3)], score=1, scheme="x"))
    assert not O.oracle_efg_semi_repeat_free(bad, 3)
    single = E.build_efg(Msa.from_rows(["AC"]), Segmentation(blocks=[(1, 2)], score=2, scheme="x"))
    assert O.oracle_efg_semi_repeat_free(single, 2)


def test_generator_determinism():
    spec = O.RandomMsaSpec(seed=42, m=5, n=30, sigma=4, gap_prob=0.2)
    assert O.generate_msa(spec) == O.generate_msa(spec)
    other = O.generate_msa(O.RandomMsaSpec(seed=43, m=5, n=30))
    assert other != O.generate_msa(spec)


def test_generator_respects_spec():
    spec = O.RandomMsaSpec(seed=9, m=6, n=40, sigma=2, gap_prob=0.5)
    msa = O.generate_msa(spec)
    assert msa.m == 6 and msa.n == 40
    assert msa.alphabet <= {"A", "C"}
    assert all(row.count("-") < msa.n for row in msa.rows)


def test_tree_generator_compacted():
    for seed in range(50):
        children = O.generate_tree_children(seed, max_nodes=80)
        assert len(children) <= 80
        assert all(len(kids) != 1 for kids in children.values())
        assert len(children[0]) >= 2
        ArrayTree(children)  # constructible and dense
