"""Core decode types shared across the package."""

from __future__ import annotations

import enum
from dataclasses import dataclass


class SpecVersion(enum.Enum):
    """RISC-V vector extension revision an input stream was produced for."""

    V0_7_1 = "v0.7.1"
    V1_0 = "v1.0"

    @classmethod
    def parse(cls, text: str) -> "SpecVersion":
        for member in cls:
            if member.value == text:
                return member
        raise ValueError(f"unknown vector spec version: {text!r}")


class InstrType(enum.IntEnum):
    SCALAR = 0
    VECTOR = 1
    VSETVL = 2
    MARKER = 3


class VMajor(enum.IntEnum):
    OTHER = 0
    ARITH = 1
    MEMORY = 2
    MASK = 3


class VMinor(enum.IntEnum):
    NOTYPE = 0
    FP = 1
    INT = 2
    UNIT = 3
    STRIDE = 4
    INDEX = 5


# (major, minor) pairs a VECTOR instruction may legally carry.
VALID_CLASS_PAIRS = frozenset(
    {
        (VMajor.OTHER, VMinor.NOTYPE),
        (VMajor.ARITH, VMinor.FP),
        (VMajor.ARITH, VMinor.INT),
        (VMajor.MEMORY, VMinor.UNIT),
        (VMajor.MEMORY, VMinor.STRIDE),
        (VMajor.MEMORY, VMinor.INDEX),
        (VMajor.MASK, VMinor.NOTYPE),
    }
)


def class_value(major: VMajor, minor: VMinor) -> int:
    """Single numeric class code for trace emission.

    Majors start at 10 so no class collides with the conventional
    end-of-region value 0 in trace value tables.
    """
    return (int(major) + 1) * 10 + int(minor)


def class_value_names() -> dict[int, str]:
    return {
        class_value(major, minor): (
            major.name if minor is VMinor.NOTYPE else f"{major.name}/{minor.name}"
        )
        for major, minor in VALID_CLASS_PAIRS
    }


class UndecodableEncoding(ValueError):
    """Raised for words that are not a valid instruction encoding."""

    def __init__(self, raw: int, reason: str = ""):
        self.raw = raw
        self.reason = reason
        detail = f": {reason}" if reason else ""
        super().__init__(f"undecodable encoding 0x{raw:08x}{detail}")


class MarkerOp(enum.Enum):
    START_TRACE = "start"
    STOP_TRACE = "stop"
    RESTART_TRACE = "restart"
    NAME_DELIMITER = "delim"
    LUI_PAYLOAD = "lui"
    EVENT_AND_VALUE = "event"


@dataclass(frozen=True, slots=True)
class MarkerKind:
    """A decoded in-band marker.

    ``imm`` holds the 20-bit payload for LUI_PAYLOAD markers.  ``src1`` and
    ``src2`` hold the source register indices for EVENT_AND_VALUE markers;
    their runtime values travel separately with the trace record.
    """

    op: MarkerOp
    imm: int = 0
    src1: int = -1
    src2: int = -1


@dataclass(frozen=True, slots=True)
class DecodedInstr:
    """One decoded instruction word.

    Register fields are indices into the architectural register file the
    operand position refers to (vector, integer, or FP depending on the
    instruction); -1 means the position is unused.  ``src1``/``src2``/``src3``
    follow assembly operand order, not encoding field order.  ``imm`` carries
    the primary immediate (vtype for vsetvli, simm5/uimm5 for .vi forms),
    ``imm2`` the secondary one (AVL of vsetivli).
    """

    pc: int
    raw: int
    instr_type: InstrType
    v_major: VMajor = VMajor.OTHER
    v_minor: VMinor = VMinor.NOTYPE
    mnemonic: str = ""
    asm_string: str = ""
    dst: int = -1
    src1: int = -1
    src2: int = -1
    src3: int = -1
    imm: int = 0
    imm2: int = 0
    marker: MarkerKind | None = None
    paraver_code: int = 0

    @property
    def is_compressed(self) -> bool:
        return (self.raw & 0x3) != 0x3
