"""Trace-driven analyzer of RISC-V vector executions.

Decodes instruction streams captured from emulation (one record per executed
instruction), tracks vector configuration state, counts vector activity per
element width, and renders reports and Paraver traces.
"""

__version__ = "0.1.0"

from .isa.types import (  # noqa: F401
    DecodedInstr,
    InstrType,
    MarkerKind,
    MarkerOp,
    SpecVersion,
    UndecodableEncoding,
    VMajor,
    VMinor,
)
from .analysis import (  # noqa: F401
    Analysis,
    AnalysisError,
    InstructionLog,
    SessionConfig,
    run_stream,
)
from .counters import MetricCounters, RegionLedger, count_instruction  # noqa: F401
from .isa.decode import decode, disassemble  # noqa: F401
from .paraver import ParaverWriter  # noqa: F401
from .report import render_report  # noqa: F401
from .synth import generate_synthetic  # noqa: F401
from .vstate import VectorState, apply_vsetvl  # noqa: F401
from .wire import MalformedLine, TraceRecord, parse_stream, write_stream  # noqa: F401
