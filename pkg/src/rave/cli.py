"""Command-line front end: `rave analyze` and `rave gen`."""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import IO

from .analysis import (
    Analysis,
    AnalysisError,
    InstructionLog,
    SessionConfig,
    open_input,
    run_stream,
)
from .isa.types import SpecVersion
from .paraver import ParaverWriter
from .synth import generate_synthetic
from .wire import MalformedLine, write_stream

_SPEC_NAMES = {"v0.7.1": SpecVersion.V0_7_1, "v1.0": SpecVersion.V1_0}


def _color_enabled() -> bool:
    return os.environ.get("RAVE_COLOR", "") not in ("", "0")


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="rave", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="analyze an instruction stream")
    an.add_argument("--spec", required=True, choices=sorted(_SPEC_NAMES),
                    help="vector ISA version the stream was produced for")
    an.add_argument("--vlen", type=int, default=16384, metavar="N",
                    help="vector register length in bits (default 16384)")
    an.add_argument("--input", required=True, metavar="PATH",
                    help="wire-format stream, or - for stdin")
    an.add_argument("--report", metavar="PATH",
                    help="write the region report here instead of stdout")
    an.add_argument("--prv", metavar="PREFIX",
                    help="write PREFIX.prv/.pcf/.row trace files")
    an.add_argument("--log", metavar="PATH",
                    help="write the per-instruction vector listing here")
    an.add_argument("--record-scalar", action="store_true",
                    help="decode scalar instructions fully (larger output)")
    an.add_argument("--permissive", action="store_true",
                    help="log and skip malformed input instead of stopping")
    an.add_argument("--start-disabled", action="store_true",
                    help="begin with tracing off until a start marker")
    an.add_argument("--split-events", action="store_true",
                    help="one event per trace line instead of combined lines")
    an.add_argument("--region-index-base", type=int, default=0, metavar="N",
                    help="first region number in the report (default 0)")

    gen = sub.add_parser("gen", help="generate a synthetic stream")
    gen.add_argument("--total", type=int, required=True, metavar="N",
                     help="instruction count after the vsetvl prologue")
    gen.add_argument("--vec-per-million", type=int, required=True, metavar="R",
                     help="vector instructions per million, 0..10^6")
    gen.add_argument("--sew", type=int, default=64, choices=(8, 16, 32, 64))
    gen.add_argument("--avl", type=int, default=256, metavar="N",
                     help="application vector length requested by the prologue")
    gen.add_argument("--seed", type=int, default=0, metavar="S")
    gen.add_argument("--out", required=True, metavar="PATH",
                     help="output path, or - for stdout")
    gen.add_argument("--spec", choices=sorted(_SPEC_NAMES), default="v1.0",
                     help="vector ISA version to encode for (default v1.0)")
    return top


def _analyze(args: argparse.Namespace) -> int:
    config = SessionConfig(
        spec=_SPEC_NAMES[args.spec],
        vlen_bits=args.vlen,
        record_scalar=args.record_scalar,
        permissive=args.permissive,
        start_disabled=args.start_disabled,
        region_index_base=args.region_index_base,
    )
    paraver = ParaverWriter(args.prv, split_events=args.split_events) if args.prv else None
    instr_log = InstructionLog() if args.log else None
    analysis = Analysis(config, paraver=paraver, instr_log=instr_log)

    stream = open_input(args.input)
    try:
        run_stream(analysis, stream)
    finally:
        if stream is not sys.stdin.buffer:
            stream.close()
    analysis.finish()

    if instr_log is not None:
        with open(args.log, "w", encoding="utf-8") as fh:
            instr_log.finalize(fh)
    if paraver is not None:
        paraver.finalize(analysis.ledger)
    if args.report is not None:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(analysis.report())
    else:
        sys.stdout.write(analysis.report(color=_color_enabled()))
    return 0


def _gen(args: argparse.Namespace) -> int:
    records = generate_synthetic(
        total=args.total,
        vec_per_million=args.vec_per_million,
        sew=args.sew,
        avl=args.avl,
        seed=args.seed,
        spec=_SPEC_NAMES[args.spec],
    )
    if args.out == "-":
        write_stream(records, sys.stdout)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            write_stream(records, fh)
    return 0


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(format="rave: %(levelname)s: %(message)s")
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return _analyze(args)
        return _gen(args)
    except (MalformedLine, AnalysisError, ValueError, OSError) as exc:
        print(f"rave: {exc}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    sys.exit(main())
