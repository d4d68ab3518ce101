"""Command-line front end: FASTA in, extensions / segmentation / graph out.

Exit codes: 0 success, 1 usage or I/O error, 2 oracle cross-check mismatch,
3 unsegmentable input. Set EFGSEG_LOG=DEBUG|INFO|... for diagnostics.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import oracle
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
from .efg import build_efg, export_dot, export_gfa, export_json, validate_semi_repeat_free
from .extensions import ExtensionTable, compute_minimal_right_extensions
from .gst import build_gst
from .msa import GapIndex, Msa, MsaError, parse_aligned_fasta, to_fasta

log = logging.getLogger("efgseg")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_UNSEGMENTABLE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's default 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _write_output(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def _load_msa(path: str) -> Msa:
    return parse_aligned_fasta(_read_input(path))


def _pipeline(msa: Msa):
    gi = GapIndex(msa)
    gst = build_gst(msa)
    ext = compute_minimal_right_extensions(msa, gi, gst)
    return gi, gst, ext


def _score(ext: ExtensionTable, scheme: str, n: int) -> ScoreTable:
    if scheme == MAXBLOCKS:
        return score_max_blocks(ext)
    return score_min_max_length(ext.pairs_by_f(), n)


def segmentation_to_json(seg: Segmentation) -> str:
    doc = {
        "scheme": seg.scheme,
        "score": seg.score,
        "blocks": [{"start": s, "end": e} for s, e in seg.blocks],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def segmentation_from_json(text: str) -> Segmentation:
    doc = json.loads(text)
    blocks = [(int(b["start"]), int(b["end"])) for b in doc["blocks"]]
    return Segmentation(blocks=blocks, score=int(doc["score"]), scheme=doc.get("scheme", ""))


def cross_check(msa: Msa, ext: ExtensionTable | None = None) -> list[str]:
    """Compare the fast pipeline against the brute-force oracles.

    An ExtensionTable may be injected to check a precomputed (or tampered)
    table instead of a freshly computed one. Returns mismatch descriptions.
    """
    issues: list[str] = []
    if ext is None:
        _, _, ext = _pipeline(msa)
    checker = oracle.SegmentChecker(msa)
    for x in range(msa.n):
        want = oracle.oracle_minimal_right_extension(msa, x, checker)
        if int(ext.f[x]) != want:
            issues.append(f"extensions: x={x} computed f(x)={int(ext.f[x])}, oracle={want}")
            break
    for scheme in (MAXBLOCKS, MINMAXLEN):
        table = _score(ext, scheme, msa.n)
        want = oracle.oracle_optimal_score(msa, scheme)
        if table.score() != want:
            issues.append(f"{scheme}: computed score {table.score()}, oracle {want}")
            continue
        if table.score() is None:
            continue
        seg = traceback(table, ext)
        achieved = seg.b if scheme == MAXBLOCKS else seg.max_block_length()
        if achieved != table.score():
            issues.append(f"{scheme}: traceback achieves {achieved}, table says {table.score()}")
        for a, b in seg.blocks:
            if not checker.is_valid(a, b):
                issues.append(f"{scheme}: traceback segment [{a}..{b}] is not semi-repeat-free")
        report = validate_semi_repeat_free(msa, seg)
        if not report.ok:
            v = report.violations[0]
            issues.append(f"{scheme}: validator flags segment {v.segment} (row {v.row})")
        efg = build_efg(msa, seg)
        total = sum(len(nd.label) for block in efg.blocks for nd in block)
        if not oracle.oracle_efg_semi_repeat_free(efg, total):
            issues.append(f"{scheme}: induced graph fails the graph-level check")
    return issues


# -- subcommands ----------------------------------------------------------------


def _cmd_gen(args) -> int:
    spec = oracle.RandomMsaSpec(
        seed=args.seed, m=args.rows, n=args.cols, sigma=args.sigma, gap_prob=args.gap_prob
    )
    _write_output(args.output, to_fasta(oracle.generate_msa(spec)))
    return EXIT_OK


def _cmd_extensions(args) -> int:
    msa = _load_msa(args.input)
    _, _, ext = _pipeline(msa)
    lines = "".join(f"{x}\t{int(ext.f[x])}\n" for x in range(msa.n))
    _write_output(args.output, lines)
    return EXIT_OK


def _cmd_segment(args) -> int:
    msa = _load_msa(args.input)
    _, _, ext = _pipeline(msa)
    table = _score(ext, args.score, msa.n)
    seg = traceback(table, ext)  # raises UnsegmentableError when s(n) is a sentinel
    if args.emit_graph:
        doc = json.loads(segmentation_to_json(seg))
        doc["graph"] = json.loads(export_json(build_efg(msa, seg)))
        _write_output(args.output, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        _write_output(args.output, segmentation_to_json(seg))
    return EXIT_OK


def _cmd_export(args) -> int:
    msa = _load_msa(args.input)
    if args.segmentation:
        seg = segmentation_from_json(_read_input(args.segmentation))
    else:
        _, _, ext = _pipeline(msa)
        seg = traceback(_score(ext, args.score, msa.n), ext)
    efg = build_efg(msa, seg)
    text = {"gfa": export_gfa, "dot": export_dot, "json": export_json}[args.format](efg)
    _write_output(args.output, text)
    return EXIT_OK


def _cmd_validate(args) -> int:
    msa = _load_msa(args.input)
    if msa.m * msa.n > 50_000:
        log.warning("oracle cross-checks are quadratic; this may take a while")
    issues = cross_check(msa)
    if issues:
        for line in issues:
            print(line, file=sys.stderr)
        return EXIT_MISMATCH
    print(f"ok: {msa.m}x{msa.n} alignment passes all oracle cross-checks")
    return EXIT_OK


def _cmd_stats(args) -> int:
    msa = _load_msa(args.input)
    _, _, ext = _pipeline(msa)
    table = _score(ext, args.score, msa.n)
    seg = traceback(table, ext)
    efg = build_efg(msa, seg)
    doc = {
        "m": msa.m,
        "n": msa.n,
        "scheme": args.score,
        "score": seg.score,
        "blocks": seg.b,
        "max_block_length": seg.max_block_length(),
        "nodes": efg.n_nodes,
        "edges": len(efg.edges),
    }
    _write_output(args.output, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def _make_parser() -> _Parser:
    p = _Parser(prog="efgseg", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add_io(sp, input_help="aligned FASTA file, or - for stdin"):
        sp.add_argument("input", nargs="?", default="-", help=input_help)
        sp.add_argument("-o", "--output", default=None, help="output file (default stdout)")

    sp = sub.add_parser("gen", help="emit a seeded random aligned FASTA")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--rows", type=int, required=True)
    sp.add_argument("--cols", type=int, required=True)
    sp.add_argument("--sigma", type=int, default=4)
    sp.add_argument("--gap-prob", type=float, default=0.2)
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=_cmd_gen)

    sp = sub.add_parser("extensions", help="dump x<TAB>f(x) per prefix boundary")
    add_io(sp)
    sp.set_defaults(func=_cmd_extensions)

    sp = sub.add_parser("segment", help="optimal segmentation as JSON")
    add_io(sp)
    sp.add_argument("--score", choices=[MAXBLOCKS, MINMAXLEN], required=True)
    sp.add_argument("--emit-graph", action="store_true", help="embed the founder graph")
    sp.set_defaults(func=_cmd_segment)

    sp = sub.add_parser("export", help="founder graph as GFA/DOT/JSON")
    add_io(sp)
    sp.add_argument("--segmentation", default=None, help="segmentation JSON (from 'segment')")
    sp.add_argument("--score", choices=[MAXBLOCKS, MINMAXLEN], default=MINMAXLEN,
                    help="scheme when no segmentation file is given")
    sp.add_argument("--format", choices=["gfa", "dot", "json"], default="gfa")
    sp.set_defaults(func=_cmd_export)

    sp = sub.add_parser("validate", help="cross-check the fast path against the oracles")
    add_io(sp)
    sp.set_defaults(func=_cmd_validate)

    sp = sub.add_parser("stats", help="alignment and graph summary")
    add_io(sp)
    sp.add_argument("--score", choices=[MAXBLOCKS, MINMAXLEN], default=MINMAXLEN)
    sp.set_defaults(func=_cmd_stats)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=os.environ.get("EFGSEG_LOG", "WARNING").upper())
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnsegmentableError as exc:
        print(f"efgseg: {exc}", file=sys.stderr)
        return EXIT_UNSEGMENTABLE
    except BrokenPipeError:
        # downstream consumer (e.g. `| head`) closed the pipe; not an error
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
    except (MsaError, OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"efgseg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
