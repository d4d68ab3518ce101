import random

import pytest

import efgseg as E
from efgseg import oracle as O
from efgseg.dp import Segmentation
from efgseg.efg import (
    EfgError,
    build_efg,
    export_dot,
    export_gfa,
    export_json,
    parse_gfa,
    validate_semi_repeat_free,
)
from efgseg.msa import Msa, spell
from tests.conftest import build_pipeline


def seg_of(blocks, scheme="minmaxlen"):
    return Segmentation(blocks=blocks, score=max(e - s + 1 for s, e in blocks), scheme=scheme)


def test_fixture_e_graph(msa_e):
    efg = build_efg(msa_e, seg_of([(1, 1), (2, 3), (4, 4)]))
    labels = [[nd.label for nd in block] for block in efg.blocks]
    assert labels == [["A"], ["G"], ["C"]]
    assert efg.edges == [("b1_0", "b2_0"), ("b2_0", "b3_0")]
    assert efg.paths == [("r1", ["b1_0", "b2_0", "b3_0"]), ("r2", ["b1_0", "b2_0", "b3_0"])]
    assert efg.node_by_id("b2_0").rows == (1, 2)


def test_single_row_path_graph():
    msa = Msa.from_rows(["ACGT"])
    efg = build_efg(msa, seg_of([(1, 2), (3, 4)]))
    assert [len(b) for b in efg.blocks] == [1, 1]
    assert "".join(block[0].label for block in efg.blocks) == "ACGT"
    assert len(efg.edges) == 1


def test_identical_rows_collapse():
    msa = Msa.from_rows(["ACA", "ACA", "ACA"])
    efg = build_efg(msa, seg_of([(1, 3)]))
    assert efg.n_nodes == 1 and efg.edges == []
    assert efg.blocks[0][0].rows == (1, 2, 3)


def test_variable_length_labels_within_block():
    msa = Msa.from_rows(["AG-C", "AGGC"])
    efg = build_efg(msa, seg_of([(1, 4)]))
    assert sorted(len(nd.label) for nd in efg.blocks[0]) == [3, 4]


def test_improper_segmentation_rejected(msa_e):
    with pytest.raises(EfgError, match="cover"):
        build_efg(msa_e, seg_of([(1, 3)]))
    with pytest.raises(EfgError, match="consecutive"):
        build_efg(msa_e, Segmentation(blocks=[(1, 2), (4, 4)], score=1, scheme="x"))


def test_empty_spell_rejected(msa_e):
    with pytest.raises(EfgError, match="row 1"):
        build_efg(msa_e, seg_of([(1, 2), (3, 3), (4, 4)]))  # row 1 is "-" in [3..3]


def test_every_row_spelled_by_its_path():
    for seed in range(25):
        rng = random.Random(seed)
        msa = O.generate_msa(O.RandomMsaSpec(seed=seed + 30, m=4, n=16))
        _, _, ext = build_pipeline(msa)
        table = E.score_min_max_length(ext.pairs_by_f(), msa.n)
        if table.score() is None:
            continue
        seg = E.traceback(table, ext)
        efg = build_efg(msa, seg)
        nodes = {nd.id: nd for block in efg.blocks for nd in block}
        for name, ids in efg.paths:
            i = msa.names.index(name) + 1
            assert "".join(nodes[v].label for v in ids) == spell(msa, i, 1, msa.n)


def test_validator_fixture_e(msa_e):
    report = validate_semi_repeat_free(msa_e, seg_of([(1, 1), (2, 3), (4, 4)]))
    assert report.ok


def test_validator_flags_periodic_columns(msa_aaa):
    report = validate_semi_repeat_free(msa_aaa, seg_of([(1, 1), (2, 2), (3, 3)]))
    assert not report.ok
    first = report.violations[0]
    assert first.segment == (1, 1)
    assert first.position in (2, 3)


def test_validator_distinct_blocks_single_row():
    msa = Msa.from_rows(["ABCDEF"])
    report = validate_semi_repeat_free(msa, seg_of([(1, 2), (3, 4), (5, 6)]))
    assert report.ok


def test_validator_agrees_with_graph_oracle():
    # segment-level verdicts and the bounded graph-level check must agree
    for seed in range(40):
        rng = random.Random(seed * 7)
        msa = O.generate_msa(O.RandomMsaSpec(seed=seed + 400, m=3, n=10, sigma=2))
        cuts = sorted(rng.sample(range(1, msa.n), rng.randint(0, 3)))
        blocks = []
        prev = 1
        for c in cuts + [msa.n]:
            blocks.append((prev, c))
            prev = c + 1
        if any(not spell(msa, i, a, b) for a, b in blocks for i in range(1, msa.m + 1)):
            continue
        seg = seg_of(blocks)
        efg = build_efg(msa, seg)
        total = sum(len(nd.label) for block in efg.blocks for nd in block)
        assert validate_semi_repeat_free(msa, seg).ok == O.oracle_efg_semi_repeat_free(efg, total)


def test_gfa_export_shape(msa_e):
    efg = build_efg(msa_e, seg_of([(1, 1), (2, 3), (4, 4)]))
    gfa = export_gfa(efg)
    lines = gfa.strip().split("\n")
    assert lines[0] == "H\tVN:Z:1.0"
    assert sum(l.startswith("S\t") for l in lines) == 3
    assert sum(l.startswith("L\t") for l in lines) == 2
    assert sum(l.startswith("P\t") for l in lines) == 2


def test_gfa_single_block_has_no_links():
    msa = Msa.from_rows(["ACA", "ACA"])
    gfa = export_gfa(build_efg(msa, seg_of([(1, 3)])))
    assert "L\t" not in gfa and "S\t" in gfa


def test_gfa_roundtrip(msa_e):
    efg = build_efg(msa_e, seg_of([(1, 1), (2, 3), (4, 4)]))
    nodes, edges, paths = parse_gfa(export_gfa(efg))
    assert nodes == {nd.id: nd.label for block in efg.blocks for nd in block}
    assert edges == set(efg.edges)
    assert paths == {name.split()[0]: ids for name, ids in efg.paths}


def test_gfa_path_name_uses_first_header_token():
    msa = E.parse_aligned_fasta(">seq one extra words\nAC\n>seq_two\nAC\n")
    gfa = export_gfa(build_efg(msa, seg_of([(1, 2)])))
    assert "P\tseq\t" in gfa and "P\tseq_two\t" in gfa
    assert "extra words" not in gfa


def test_export_determinism(msa_e):
    seg = seg_of([(1, 1), (2, 3), (4, 4)])
    a, b = build_efg(msa_e, seg), build_efg(msa_e, seg)
    assert export_gfa(a) == export_gfa(b)
    assert export_dot(a) == export_dot(b)
    assert export_json(a) == export_json(b)


def test_dot_and_json_shape(msa_e):
    efg = build_efg(msa_e, seg_of([(1, 1), (2, 3), (4, 4)]))
    dot = export_dot(efg)
    assert dot.count("subgraph cluster_") == 3
    assert '"b1_0" -> "b2_0";' in dot
    import json

    doc = json.loads(export_json(efg))
    assert [b["index"] for b in doc["blocks"]] == [1, 2, 3]
    assert doc["edges"] == [["b1_0", "b2_0"], ["b2_0", "b3_0"]]
