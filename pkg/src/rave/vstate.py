"""Vector configuration state tracked across a trace.

Only the configuration visible to counting matters here: vl, SEW, LMUL and
the illegal-configuration flag.  Updates follow the vsetvl family semantics
of the selected spec revision; everything else in the trace leaves the state
untouched.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .isa.types import DecodedInstr, SpecVersion
from .isa.vtype import Vtype, parse_vtype


class MissingAvl(ValueError):
    """A vsetvl/vsetvli needed the AVL register value but the record had none."""


class VectorStateUnknown(ValueError):
    """A vector instruction executed before any valid configuration."""


class MissingVtype(ValueError):
    """A register-form vsetvl needed the rs2 value but the record had none."""


@dataclass(frozen=True, slots=True)
class VectorState:
    """vl/vtype snapshot.  The initial state models a CPU before any
    configuration: vill set, vl zero, with a 64-bit default bucket so
    permissive runs can still attribute work somewhere sensible."""

    vlen_bits: int
    vl: int = 0
    sew: int = 64
    lmul_num: int = 1
    lmul_den: int = 1
    vill: bool = True

    @property
    def sew_bucket(self) -> int:
        return {8: 0, 16: 1, 32: 2, 64: 3}[self.sew]

    def vlmax(self) -> int:
        return (self.vlen_bits * self.lmul_num) // (self.sew * self.lmul_den)

    def same_ratio(self, vt: Vtype) -> bool:
        # SEW/LMUL equality via cross multiplication
        return (
            self.sew * self.lmul_den * vt.lmul_num
            == vt.sew * vt.lmul_den * self.lmul_num
        )

    def as_illegal(self) -> VectorState:
        """Unknown/unsupported configuration; SEW kept as bucketing default."""
        return replace(self, vl=0, vill=True)


def _with_vtype(state: VectorState, vt: Vtype, vl: int) -> VectorState:
    return replace(
        state,
        vl=vl,
        sew=vt.sew,
        lmul_num=vt.lmul_num,
        lmul_den=vt.lmul_den,
        vill=False,
    )


def _illegal(state: VectorState) -> VectorState:
    return state.as_illegal()


def apply_vsetvl(
    state: VectorState,
    instr: DecodedInstr,
    spec: SpecVersion,
    avl: int | None = None,
    vtype_value: int | None = None,
) -> VectorState:
    """Return the state after one vsetvl-family instruction.

    ``avl`` is the runtime rs1 value when the encoding takes AVL from a
    register; ``vtype_value`` is the runtime rs2 value for register-form
    vsetvl.  Raise MissingAvl/MissingVtype when a required value is absent;
    permissive handling is the caller's concern.
    """
    if instr.mnemonic == "vsetvl":
        if vtype_value is None:
            raise MissingVtype(f"vsetvl at pc 0x{instr.pc:x} without an rs2 value")
        vt = parse_vtype(spec, vtype_value)
    else:
        vt = parse_vtype(spec, instr.imm)
    if vt.ill:
        return _illegal(state)
    vlmax = vt.vlmax(state.vlen_bits)

    if instr.mnemonic == "vsetivli":
        return _with_vtype(state, vt, min(instr.imm2, vlmax))

    rs1 = instr.src1
    if spec is SpecVersion.V0_7_1:
        # x0 as AVL always requests the maximum
        if rs1 == 0:
            return _with_vtype(state, vt, vlmax)
        if avl is None:
            raise MissingAvl(f"{instr.mnemonic} at pc 0x{instr.pc:x} without an rs1 value")
        return _with_vtype(state, vt, min(avl, vlmax))

    if rs1 == 0:
        if instr.dst != 0:
            return _with_vtype(state, vt, vlmax)
        # rd=x0, rs1=x0 keeps vl and requires the SEW/LMUL ratio to hold
        if state.vill or not state.same_ratio(vt):
            return _illegal(state)
        return _with_vtype(state, vt, state.vl)
    if avl is None:
        raise MissingAvl(f"{instr.mnemonic} at pc 0x{instr.pc:x} without an rs1 value")
    return _with_vtype(state, vt, min(avl, vlmax))
