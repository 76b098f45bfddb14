"""Single-pass stream analysis pipeline.

Records are decoded once per (pc, encoding) pair and replayed from a cache,
mirroring a translate-once/execute-many simulator. Architectural vector
state is tracked unconditionally; counting, trace emission, and the
instruction log run only while tracing is enabled. A restart marker zeroes
counters, regions, output spools, and the instruction index.
"""

from __future__ import annotations

import logging
import queue
import shutil
import tempfile
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable

from .counters import MetricCounters, RegionLedger, count_instruction, reset
from .isa import SpecVersion, UndecodableEncoding, decode
from .isa.pvcodes import SCALAR_CODE
from .isa.types import DecodedInstr, InstrType
from .markers import (
    MissingRegisterValues,
    NameEvent,
    NameValue,
    ProtocolState,
    Reset,
    UserEvent,
)
from .paraver import ParaverWriter
from .report import render_report
from .vstate import MissingAvl, MissingVtype, VectorState, apply_vsetvl
from .wire import TraceRecord, parse_stream

log = logging.getLogger(__name__)


class AnalysisError(RuntimeError):
    """Fatal pipeline error, annotated with the 1-based record position."""


@dataclass
class SessionConfig:
    spec: SpecVersion
    vlen_bits: int = 16384
    record_scalar: bool = False
    permissive: bool = False
    start_disabled: bool = False
    region_index_base: int = 0

    def __post_init__(self) -> None:
        if self.vlen_bits < 128 or self.vlen_bits & (self.vlen_bits - 1):
            raise ValueError(f"vlen must be a power of two >= 128, got {self.vlen_bits}")


class InstructionLog:
    """Vector-instruction listing, spooled so restarts can truncate it."""

    def __init__(self) -> None:
        self._spool = tempfile.TemporaryFile(mode="w+", encoding="utf-8")

    def write(self, index: int, instr: DecodedInstr, state: VectorState) -> None:
        lmul = (
            f"{state.lmul_num}/{state.lmul_den}"
            if state.lmul_den != 1
            else str(state.lmul_num)
        )
        srcs = ",".join(
            str(r) for r in (instr.src1, instr.src2, instr.src3) if r >= 0
        )
        self._spool.write(
            f"{index}\t{instr.pc:x}\t{instr.asm_string}\tvl={state.vl}"
            f"\tsew={state.sew}\tlmul={lmul}\tdst={instr.dst}\tsrcs={srcs}\n"
        )

    def reset(self) -> None:
        self._spool.seek(0)
        self._spool.truncate()

    def finalize(self, out: IO[str]) -> None:
        self._spool.seek(0)
        shutil.copyfileobj(self._spool, out)
        self._spool.close()


class Analysis:
    def __init__(
        self,
        config: SessionConfig,
        paraver: ParaverWriter | None = None,
        instr_log: InstructionLog | None = None,
    ):
        self.config = config
        self.state = VectorState(vlen_bits=config.vlen_bits)
        self.protocol = ProtocolState(tracing_enabled=not config.start_disabled)
        self.counters = MetricCounters()
        self.ledger = RegionLedger()
        self.paraver = paraver
        self.instr_log = instr_log
        self.index = 0  # next counted instruction's time coordinate
        self.records_seen = 0
        self._cache: dict[tuple[int, int], DecodedInstr] = {}

    def feed(self, rec: TraceRecord) -> None:
        self.consume((rec,))

    def consume(self, records: Iterable[TraceRecord]) -> None:
        cache = self._cache
        cfg = self.config
        spec = cfg.spec
        strict = not cfg.permissive
        record_scalar = cfg.record_scalar
        counters = self.counters
        protocol = self.protocol
        paraver = self.paraver
        instr_log = self.instr_log
        scalar_t = InstrType.SCALAR
        vector_t = InstrType.VECTOR
        vsetvl_t = InstrType.VSETVL
        seen = self.records_seen
        index = self.index
        for rec in records:
            seen += 1
            key = (rec[0], rec[1])
            instr = cache.get(key)
            if instr is None:
                instr = self._decode(key[0], key[1], spec, record_scalar, strict, seen)
                cache[key] = instr
            t = instr.instr_type
            if t is scalar_t:
                if protocol.tracing_enabled:
                    counters.scalar_instr += 1
                    if paraver is not None:
                        paraver.instruction(index, instr, self.state)
                    index += 1
                continue
            if t is vector_t:
                if protocol.tracing_enabled:
                    if self.state.vill and strict:
                        self.records_seen = seen
                        raise AnalysisError(
                            f"record {seen}: vector instruction "
                            f"{instr.asm_string!r} before any valid vtype"
                        )
                    count_instruction(counters, instr, self.state)
                    if paraver is not None:
                        paraver.instruction(index, instr, self.state)
                    if instr_log is not None:
                        instr_log.write(index, instr, self.state)
                    index += 1
                continue
            if t is vsetvl_t:
                self._apply_vsetvl(rec, instr, strict, seen)
                if protocol.tracing_enabled:
                    counters.vsetvl_instr += 1
                    if paraver is not None:
                        paraver.instruction(index, instr, self.state)
                    index += 1
                continue
            # MARKER
            self.index = index
            self.records_seen = seen
            self._marker(rec, instr, strict)
            index = self.index
        self.records_seen = seen
        self.index = index

    def finish(self) -> None:
        self.protocol.finish()
        if self.ledger.open_regions:
            log.warning(
                "%d region(s) still open at end of stream; not reported",
                len(self.ledger.open_regions),
            )

    def report(self, color: bool = False) -> str:
        return render_report(
            self.ledger.completed,
            self.counters,
            self.ledger.event_names,
            self.ledger.value_names,
            region_index_base=self.config.region_index_base,
            color=color,
        )

    def _decode(
        self, pc: int, raw: int, spec: SpecVersion,
        record_scalar: bool, strict: bool, seen: int,
    ) -> DecodedInstr:
        try:
            return decode(raw, spec, pc=pc, record_scalar=record_scalar)
        except UndecodableEncoding as exc:
            if strict:
                raise AnalysisError(f"record {seen}: {exc}") from exc
            log.warning("record %d: %s; counted as scalar", seen, exc)
            return DecodedInstr(
                pc=pc, raw=raw, instr_type=InstrType.SCALAR, paraver_code=SCALAR_CODE
            )

    def _apply_vsetvl(
        self, rec: TraceRecord, instr: DecodedInstr, strict: bool, seen: int
    ) -> None:
        try:
            self.state = apply_vsetvl(
                self.state,
                instr,
                self.config.spec,
                avl=rec.rs1_value,
                vtype_value=rec.rs2_value,
            )
        except MissingAvl as exc:
            if strict:
                raise AnalysisError(f"record {seen}: {exc}") from exc
            log.warning("record %d: %s; carrying vl over", seen, exc)
            self.state = apply_vsetvl(
                self.state,
                instr,
                self.config.spec,
                avl=self.state.vl,
                vtype_value=rec.rs2_value,
            )
        except MissingVtype as exc:
            if strict:
                raise AnalysisError(f"record {seen}: {exc}") from exc
            log.warning("record %d: %s; treating configuration as illegal", seen, exc)
            self.state = self.state.as_illegal()

    def _marker(self, rec: TraceRecord, instr: DecodedInstr, strict: bool) -> None:
        reg_values = None
        if rec.rs1_value is not None and rec.rs2_value is not None:
            reg_values = (rec.rs1_value, rec.rs2_value)
        try:
            actions = self.protocol.on_marker(instr.marker, reg_values, self.index)
        except MissingRegisterValues as exc:
            if strict:
                raise AnalysisError(f"record {self.records_seen}: {exc}") from exc
            log.warning("record %d: %s; event dropped", self.records_seen, exc)
            return
        for action in actions:
            if isinstance(action, Reset):
                reset(self.counters, self.ledger)
                if self.paraver is not None:
                    self.paraver.reset()
                if self.instr_log is not None:
                    self.instr_log.reset()
                self.index = 0
            elif isinstance(action, UserEvent):
                self.ledger.on_user_event(action, self.counters)
                if self.paraver is not None and not action.while_disabled:
                    self.paraver.user_event(action)
            elif isinstance(action, (NameEvent, NameValue)):
                self.ledger.on_name(action)


def run_stream(
    analysis: Analysis,
    stream: Iterable[bytes],
    threaded: bool = True,
    batch_size: int = 4096,
    queue_depth: int = 8,
) -> None:
    """Drive the pipeline from a binary line source.

    With threading on (the default), parsing runs on a reader thread feeding
    record batches through a bounded queue; parse errors cross the queue and
    re-raise here.
    """
    permissive = analysis.config.permissive
    if not threaded:
        analysis.consume(parse_stream(stream, permissive=permissive))
        return

    q: queue.Queue = queue.Queue(maxsize=queue_depth)
    stop = threading.Event()

    def _put(item) -> bool:
        while not stop.is_set():
            try:
                q.put(item, timeout=0.1)
                return True
            except queue.Full:
                continue
        return False

    def reader() -> None:
        try:
            batch: list[TraceRecord] = []
            for rec in parse_stream(stream, permissive=permissive):
                batch.append(rec)
                if len(batch) >= batch_size:
                    if not _put(batch):
                        return
                    batch = []
            if batch:
                if not _put(batch):
                    return
            _put(None)
        except BaseException as exc:  # noqa: BLE001 - crosses the thread boundary
            _put(exc)

    t = threading.Thread(target=reader, name="rave-wire-reader", daemon=True)
    t.start()
    try:
        while True:
            item = q.get()
            if item is None:
                break
            if isinstance(item, BaseException):
                raise item
            analysis.consume(item)
    finally:
        stop.set()
        t.join(timeout=5)


def open_input(path: str) -> IO[bytes]:
    """'-' means standard input; anything else is a file or named pipe."""
    if path == "-":
        import sys

        return sys.stdin.buffer
    return open(path, "rb")
