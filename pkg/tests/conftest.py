import pytest

import efgseg as E


@pytest.fixture
def msa_e():
    """Two-row gapped alignment whose derived values are known exactly."""
    return E.parse_aligned_fasta(">r1\nAG-C\n>r2\nA-GC\n")


@pytest.fixture
def msa_aaa():
    return E.Msa.from_rows(["AAA"])


def build_pipeline(msa):
    gi = E.GapIndex(msa)
    gst = E.build_gst(msa)
    ext = E.compute_minimal_right_extensions(msa, gi, gst)
    return gi, gst, ext


@pytest.fixture
def pipeline():
    return build_pipeline
