"""Table machinery for the vector arithmetic opcode space.

Each spec version declares a compact list of rows for the three arithmetic
funct3 lanes (integer, mask/multiply, floating point).  Rows expand into
per-lane dictionaries keyed by funct6 so decode is a pair of dict lookups.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .types import VMajor, VMinor

# Lane letters: v = vector-vector, x = vector-scalar(int), i = vector-imm,
# f = vector-scalar(fp).  funct3 mapping differs per opcode group and is
# resolved by the decoder.

# Flag tokens understood by the decoder / disassembler:
#   red      reduction; vv lane renders as .vs
#   wide_w   two-wide first source; suffixes .wv/.wx/.wf
#   narrow   narrowing shift/clip; suffix .wv/.wx/.wi on v1.0, .vv/... on v0.7.1
#   macc     multiply-add operand order (vd, vs1, vs2)
#   carry    vm must be 0; trailing v0 operand; suffixes .vvm/.vxm/.vim
#   mcarry   carry-out compare; vm=0 gives .v?m with v0, vm=1 plain (v1.0)
#   merge    vm=0 merge with trailing v0; vm=1 renders as vmv.v.* / vfmv.v.f
#   mask_mm  mask-register logical, .mm suffix, vm must be 1
#   uimm     immediate lane is unsigned (shifts, slides, gathers)
#   ext_x    vext.x.v shape: rd, vs2, rs1-in-vs1-field
#   s_x      vmv.s.x shape: vd, rs1
#   s_f      vfmv.s.f shape: vd, fs1
#   whole_mv vmv<nr>r.v shape on the immediate lane
#   cmp      result is a mask register (no rendering effect)


@dataclass(frozen=True)
class AluEntry:
    name: str
    major: VMajor
    minor: VMinor
    forms: str
    flags: frozenset[str] = field(default_factory=frozenset)


@dataclass(frozen=True)
class UnaryOp:
    """One member of a vs1-multiplexed group (conversions, mask unaries)."""

    name: str
    major: VMajor
    minor: VMinor
    shape: str  # vd_vs2_vm | vd_vm | rd_vs2_vm | rd_vs2 | fd_vs2


@dataclass(frozen=True)
class UnaryGroup:
    ops: dict[int, UnaryOp]


def entry(
    name: str,
    major: VMajor,
    minor: VMinor,
    forms: str,
    *flags: str,
) -> AluEntry:
    return AluEntry(name, major, minor, forms, frozenset(flags))


def arith_i(name: str, forms: str, *flags: str) -> AluEntry:
    return entry(name, VMajor.ARITH, VMinor.INT, forms, *flags)


def arith_f(name: str, forms: str, *flags: str) -> AluEntry:
    return entry(name, VMajor.ARITH, VMinor.FP, forms, *flags)


def mask_op(name: str, forms: str, *flags: str) -> AluEntry:
    return entry(name, VMajor.MASK, VMinor.NOTYPE, forms, *flags)


def other_op(name: str, forms: str, *flags: str) -> AluEntry:
    return entry(name, VMajor.OTHER, VMinor.NOTYPE, forms, *flags)


def unary(code: int, name: str, major: VMajor, minor: VMinor, shape: str = "vd_vs2_vm"):
    return code, UnaryOp(name, major, minor, shape)


LaneTables = dict[str, dict[int, AluEntry | UnaryGroup]]


def expand_lanes(
    rows: list[tuple[int, AluEntry | dict[str, AluEntry | UnaryGroup]]],
) -> LaneTables:
    """Expand compact rows into {lane: {funct6: entry}} dictionaries.

    A row value may be an AluEntry (populates every lane in its ``forms``) or
    a per-lane mapping for slots where lanes host unrelated operations.
    """
    lanes: LaneTables = {"v": {}, "x": {}, "i": {}, "f": {}}
    for funct6, row in rows:
        if isinstance(row, AluEntry):
            for lane in row.forms:
                if funct6 in lanes[lane]:
                    raise ValueError(f"duplicate funct6 {funct6:#04x} lane {lane}")
                lanes[lane][funct6] = row
        else:
            for lane, sub in row.items():
                if funct6 in lanes[lane]:
                    raise ValueError(f"duplicate funct6 {funct6:#04x} lane {lane}")
                lanes[lane][funct6] = sub
    return lanes
