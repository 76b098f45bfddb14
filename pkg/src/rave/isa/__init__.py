"""Instruction decoding, classification and vtype parsing."""

from .decode import all_mnemonics, classify_marker, decode, disassemble  # noqa: F401
from .types import (  # noqa: F401
    VALID_CLASS_PAIRS,
    DecodedInstr,
    InstrType,
    MarkerKind,
    MarkerOp,
    SpecVersion,
    UndecodableEncoding,
    VMajor,
    VMinor,
)
from .vtype import ELEN, Vtype, parse_vtype, render_vtype  # noqa: F401
