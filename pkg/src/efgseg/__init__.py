"""Semi-repeat-free MSA segmentation and indexable elastic founder graphs.

Pipeline: parse an aligned FASTA, compute the minimal semi-repeat-free
right extension of every prefix in linear time, run a linear segmentation
DP (maximize block count or minimize maximum block length), and build,
validate, and export the induced elastic founder graph.
"""

from ._accel import NUMBA_ENABLED
from .ancestors import ArrayTree, ExclusiveAncestorResult, solve
from .dp import (
    MAXBLOCKS,
    MINMAXLEN,
    ScoreTable,
    Segmentation,
    UnsegmentableError,
    score_max_blocks,
    score_min_max_length,
    traceback,
)
from .efg import (
    Efg,
    EfgError,
    EfgNode,
    ValidationReport,
    build_efg,
    export_dot,
    export_gfa,
    export_json,
    parse_gfa,
    validate_semi_repeat_free,
)
from .extensions import ExtensionTable, compute_minimal_right_extensions
from .gst import Gst, build_gst
from .msa import GAP, GapIndex, Msa, MsaError, parse_aligned_fasta, spell, to_fasta

__version__ = "0.1.0"

__all__ = [
    "GAP",
    "MAXBLOCKS",
    "MINMAXLEN",
    "NUMBA_ENABLED",
    "ArrayTree",
    "Efg",
    "EfgError",
    "EfgNode",
    "ExclusiveAncestorResult",
    "ExtensionTable",
    "GapIndex",
    "Gst",
    "Msa",
    "MsaError",
    "ScoreTable",
    "Segmentation",
    "UnsegmentableError",
    "ValidationReport",
    "build_efg",
    "build_gst",
    "compute_minimal_right_extensions",
    "export_dot",
    "export_gfa",
    "export_json",
    "parse_aligned_fasta",
    "parse_gfa",
    "score_max_blocks",
    "score_min_max_length",
    "solve",
    "spell",
    "to_fasta",
    "traceback",
    "validate_semi_repeat_free",
]
