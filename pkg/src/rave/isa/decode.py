"""Decode instruction words into classified, disassemblable records.

decode() is pure: its output depends only on (raw, spec, pc, record_scalar),
so callers may cache results keyed by (pc, raw).
"""

from __future__ import annotations

from . import scalar as _scalar
from . import tables_v0_7_1 as T071
from . import tables_v1_0 as T10
from .pvcodes import PV_CODES, SCALAR_CODE
from .scalar import FREG, XREG
from .tables import AluEntry, UnaryGroup
from .types import (
    DecodedInstr,
    InstrType,
    MarkerKind,
    MarkerOp,
    SpecVersion,
    UndecodableEncoding,
    VMajor,
    VMinor,
)
from .vtype import render_vtype

OPCODE_VEC = 0x57
OPCODE_LOAD_FP = 0x07
OPCODE_STORE_FP = 0x27

_MARKER_IMMS = {
    -3: MarkerOp.START_TRACE,
    -4: MarkerOp.STOP_TRACE,
    -2: MarkerOp.RESTART_TRACE,
    -1: MarkerOp.NAME_DELIMITER,
}

# control markers keep their published li pseudo-instruction spelling
_MARKER_ASM = {
    MarkerOp.START_TRACE: "li x0, -3",
    MarkerOp.STOP_TRACE: "li x0, -4",
    MarkerOp.RESTART_TRACE: "li x0, -2",
    MarkerOp.NAME_DELIMITER: "li x0, -1",
}


def _sx5(value: int) -> int:
    return (value & 0xF) - (value & 0x10)


def classify_marker(raw: int) -> MarkerKind | None:
    """Recognize the in-band marker encodings (writes to x0).

    Returns None for anything else, including plain nops and other dead
    x0 writes, which stay ordinary scalar instructions.
    """
    opcode = raw & 0x7F
    if (raw >> 7) & 0x1F:
        return None
    if opcode == 0x13:
        if (raw >> 12) & 0x7 or (raw >> 15) & 0x1F:
            return None
        imm = raw >> 20
        if imm >= 0x800:
            imm -= 0x1000
        op = _MARKER_IMMS.get(imm)
        if op is None:
            return None
        return MarkerKind(op, imm=imm)
    if opcode == 0x37:
        return MarkerKind(MarkerOp.LUI_PAYLOAD, imm=raw >> 12)
    if opcode == 0x33:
        if (raw >> 12) & 0x7 != 0b110 or raw >> 25:
            return None
        return MarkerKind(
            MarkerOp.EVENT_AND_VALUE,
            src1=(raw >> 15) & 0x1F,
            src2=(raw >> 20) & 0x1F,
        )
    return None


def _tables(spec: SpecVersion):
    return T10 if spec is SpecVersion.V1_0 else T071


def _pv(spec: SpecVersion, mnemonic: str) -> int:
    return PV_CODES[spec.value].get(mnemonic, 0)


def decode(
    raw: int, spec: SpecVersion, pc: int = 0, record_scalar: bool = False
) -> DecodedInstr:
    if raw <= 0 or raw > 0xFFFFFFFF:
        raise UndecodableEncoding(raw & 0xFFFFFFFF, "outside the 16/32-bit encoding space")
    if (raw & 0x3) != 0x3:
        if raw > 0xFFFF:
            raise UndecodableEncoding(raw, "compressed word wider than 16 bits")
        return _scalar_instr(pc, raw, record_scalar)
    if (raw & 0x1F) == 0x1F:
        raise UndecodableEncoding(raw, "encoding wider than 32 bits")

    opcode = raw & 0x7F
    if opcode == OPCODE_VEC:
        return _decode_opv(pc, raw, spec)
    if opcode in (OPCODE_LOAD_FP, OPCODE_STORE_FP):
        return _decode_mem(pc, raw, spec, record_scalar)
    marker = classify_marker(raw)
    if marker is not None:
        return _marker_instr(pc, raw, marker)
    if spec is SpecVersion.V0_7_1 and opcode == 0x2F and (raw >> 12) & 0x7 in (6, 7):
        raise UndecodableEncoding(raw, "vector AMO encodings are not supported")
    return _scalar_instr(pc, raw, record_scalar)


def _scalar_instr(pc: int, raw: int, record_scalar: bool) -> DecodedInstr:
    if record_scalar:
        mnemonic, asm = _scalar.disassemble(raw)
        return DecodedInstr(
            pc=pc,
            raw=raw,
            instr_type=InstrType.SCALAR,
            mnemonic=mnemonic,
            asm_string=asm,
            paraver_code=SCALAR_CODE,
        )
    return DecodedInstr(pc=pc, raw=raw, instr_type=InstrType.SCALAR, paraver_code=SCALAR_CODE)


def _marker_instr(pc: int, raw: int, marker: MarkerKind) -> DecodedInstr:
    if marker.op is MarkerOp.LUI_PAYLOAD:
        asm = f"lui x0, {marker.imm}"
    elif marker.op is MarkerOp.EVENT_AND_VALUE:
        asm = f"or x0, x{marker.src1}, x{marker.src2}"
    else:
        asm = _MARKER_ASM[marker.op]
    return DecodedInstr(
        pc=pc,
        raw=raw,
        instr_type=InstrType.MARKER,
        mnemonic=asm.split()[0],
        asm_string=asm,
        src1=marker.src1,
        src2=marker.src2,
        imm=marker.imm,
        marker=marker,
    )


# funct3 -> (table attribute, lane letter)
_LANES = {
    0: ("OPI", "v"),
    1: ("OPF", "v"),
    2: ("OPM", "v"),
    3: ("OPI", "i"),
    4: ("OPI", "x"),
    5: ("OPF", "f"),
    6: ("OPM", "x"),
}

_NARROW_BASE = frozenset({"vnsrl", "vnsra", "vnclipu", "vnclip"})


def _vec(pc, raw, spec, major, minor, mnemonic, asm, dst=-1, s1=-1, s2=-1, s3=-1, imm=0):
    return DecodedInstr(
        pc=pc,
        raw=raw,
        instr_type=InstrType.VECTOR,
        v_major=major,
        v_minor=minor,
        mnemonic=mnemonic,
        asm_string=asm,
        dst=dst,
        src1=s1,
        src2=s2,
        src3=s3,
        imm=imm,
        paraver_code=_pv(spec, mnemonic),
    )


def _decode_opv(pc: int, raw: int, spec: SpecVersion) -> DecodedInstr:
    funct3 = (raw >> 12) & 0x7
    if funct3 == 7:
        return _decode_cfg(pc, raw, spec)
    tables = _tables(spec)
    group_name, lane = _LANES[funct3]
    table = getattr(tables, group_name)[lane]
    funct6 = raw >> 26
    entry = table.get(funct6)
    if entry is None:
        raise UndecodableEncoding(raw, "unallocated vector arithmetic encoding")

    vm = (raw >> 25) & 0x1
    vd = (raw >> 7) & 0x1F
    vs1 = (raw >> 15) & 0x1F
    vs2 = (raw >> 20) & 0x1F
    masked = vm == 0

    if isinstance(entry, UnaryGroup):
        op = entry.ops.get(vs1)
        if op is None:
            raise UndecodableEncoding(raw, "unallocated unary vector encoding")
        tail = ", v0.t" if masked else ""
        if op.shape == "vd_vs2_vm":
            asm = f"{op.name} v{vd}, v{vs2}{tail}"
            return _vec(pc, raw, spec, op.major, op.minor, op.name, asm, dst=vd, s1=vs2)
        if op.shape == "vd_vm":
            if vs2 != 0:
                raise UndecodableEncoding(raw, "nonzero vs2 in vs2-less encoding")
            asm = f"{op.name} v{vd}{tail}"
            return _vec(pc, raw, spec, op.major, op.minor, op.name, asm, dst=vd)
        if op.shape == "rd_vs2_vm":
            asm = f"{op.name} {XREG[vd]}, v{vs2}{tail}"
            return _vec(pc, raw, spec, op.major, op.minor, op.name, asm, dst=vd, s1=vs2)
        if op.shape == "rd_vs2":
            if masked:
                raise UndecodableEncoding(raw, "mask bit reserved for this encoding")
            asm = f"{op.name} {XREG[vd]}, v{vs2}"
            return _vec(pc, raw, spec, op.major, op.minor, op.name, asm, dst=vd, s1=vs2)
        if op.shape == "fd_vs2":
            if masked:
                raise UndecodableEncoding(raw, "mask bit reserved for this encoding")
            asm = f"{op.name} {FREG[vd]}, v{vs2}"
            return _vec(pc, raw, spec, op.major, op.minor, op.name, asm, dst=vd, s1=vs2)
        raise AssertionError(f"unhandled unary shape {op.shape}")

    assert isinstance(entry, AluEntry)
    flags = entry.flags
    name = entry.name

    if "mask_mm" in flags:
        if masked:
            raise UndecodableEncoding(raw, "mask bit reserved for mask logicals")
        mnemonic = f"{name}.mm"
        asm = f"{mnemonic} v{vd}, v{vs2}, v{vs1}"
        return _vec(pc, raw, spec, entry.major, entry.minor, mnemonic, asm, dst=vd, s1=vs2, s2=vs1)

    if "ext_x" in flags:
        if masked:
            raise UndecodableEncoding(raw, "mask bit reserved for this encoding")
        asm = f"{name} {XREG[vd]}, v{vs2}, {XREG[vs1]}"
        return _vec(pc, raw, spec, entry.major, entry.minor, name, asm, dst=vd, s1=vs2, s2=vs1)

    if "s_x" in flags or "s_f" in flags:
        if masked or vs2 != 0:
            raise UndecodableEncoding(raw, "reserved bits set in scalar move encoding")
        src = XREG[vs1] if "s_x" in flags else FREG[vs1]
        asm = f"{name} v{vd}, {src}"
        return _vec(pc, raw, spec, entry.major, entry.minor, name, asm, dst=vd, s1=vs1)

    if "compress" in flags:
        if masked:
            raise UndecodableEncoding(raw, "mask bit reserved for this encoding")
        mnemonic = f"{name}.vm"
        asm = f"{mnemonic} v{vd}, v{vs2}, v{vs1}"
        return _vec(pc, raw, spec, entry.major, entry.minor, mnemonic, asm, dst=vd, s1=vs2, s2=vs1)

    if "whole_mv" in flags:
        if masked:
            raise UndecodableEncoding(raw, "mask bit reserved for this encoding")
        nr = vs1 + 1
        if nr not in (1, 2, 4, 8):
            raise UndecodableEncoding(raw, "bad register count in whole-register move")
        mnemonic = f"vmv{nr}r.v"
        asm = f"{mnemonic} v{vd}, v{vs2}"
        return _vec(pc, raw, spec, entry.major, entry.minor, mnemonic, asm, dst=vd, s1=vs2)

    if "merge" in flags:
        return _decode_merge(pc, raw, spec, entry, lane, vd, vs1, vs2, masked)

    # operand in the vs1/rs1/imm position, rendered per lane
    if lane == "v":
        operand = f"v{vs1}"
    elif lane == "x":
        operand = XREG[vs1]
    elif lane == "f":
        operand = FREG[vs1]
    else:
        value = vs1 if "uimm" in flags else _sx5(vs1)
        operand = str(value)

    if "carry" in flags or ("mcarry" in flags and masked):
        if "carry" in flags and not masked:
            raise UndecodableEncoding(raw, "carry consumer requires the v0 operand")
        suffix = {"v": ".vvm", "x": ".vxm", "i": ".vim"}[lane]
        mnemonic = name + suffix
        asm = f"{mnemonic} v{vd}, v{vs2}, {operand}, v0"
        imm = _sx5(vs1) if lane == "i" else 0
        s2 = vs1 if lane != "i" else -1
        return _vec(
            pc, raw, spec, entry.major, entry.minor, mnemonic, asm,
            dst=vd, s1=vs2, s2=s2, s3=0, imm=imm,
        )

    if "red" in flags:
        suffix = ".vs"
    elif "wide_w" in flags:
        suffix = {"v": ".wv", "x": ".wx", "f": ".wf"}[lane]
    elif "narrow" in flags and spec is SpecVersion.V1_0:
        suffix = {"v": ".wv", "x": ".wx", "i": ".wi"}[lane]
    else:
        suffix = {"v": ".vv", "x": ".vx", "i": ".vi", "f": ".vf"}[lane]
    mnemonic = name + suffix
    tail = ", v0.t" if masked else ""

    if "macc" in flags:
        asm = f"{mnemonic} v{vd}, {operand}, v{vs2}{tail}"
        s1 = vs1 if lane != "i" else -1
        imm = 0 if lane != "i" else (vs1 if "uimm" in flags else _sx5(vs1))
        return _vec(
            pc, raw, spec, entry.major, entry.minor, mnemonic, asm,
            dst=vd, s1=s1, s2=vs2, s3=0 if masked else -1, imm=imm,
        )

    asm = f"{mnemonic} v{vd}, v{vs2}, {operand}{tail}"
    s2 = vs1 if lane != "i" else -1
    imm = 0 if lane != "i" else (vs1 if "uimm" in flags else _sx5(vs1))
    return _vec(
        pc, raw, spec, entry.major, entry.minor, mnemonic, asm,
        dst=vd, s1=vs2, s2=s2, s3=0 if masked else -1, imm=imm,
    )


def _decode_merge(pc, raw, spec, entry, lane, vd, vs1, vs2, masked) -> DecodedInstr:
    if lane == "f":
        if masked:
            mnemonic = "vfmerge.vfm"
            asm = f"{mnemonic} v{vd}, v{vs2}, {FREG[vs1]}, v0"
            return _vec(pc, raw, spec, entry.major, entry.minor, mnemonic, asm,
                        dst=vd, s1=vs2, s2=vs1, s3=0)
        if vs2 != 0:
            raise UndecodableEncoding(raw, "nonzero vs2 in move encoding")
        mnemonic = "vfmv.v.f"
        asm = f"{mnemonic} v{vd}, {FREG[vs1]}"
        return _vec(pc, raw, spec, VMajor.OTHER, VMinor.NOTYPE, mnemonic, asm, dst=vd, s1=vs1)
    if masked:
        suffix = {"v": ".vvm", "x": ".vxm", "i": ".vim"}[lane]
        mnemonic = "vmerge" + suffix
        operand = {"v": f"v{vs1}", "x": XREG[vs1], "i": str(_sx5(vs1))}[lane]
        asm = f"{mnemonic} v{vd}, v{vs2}, {operand}, v0"
        s2 = vs1 if lane != "i" else -1
        imm = _sx5(vs1) if lane == "i" else 0
        return _vec(pc, raw, spec, entry.major, entry.minor, mnemonic, asm,
                    dst=vd, s1=vs2, s2=s2, s3=0, imm=imm)
    if vs2 != 0:
        raise UndecodableEncoding(raw, "nonzero vs2 in move encoding")
    suffix = {"v": ".v.v", "x": ".v.x", "i": ".v.i"}[lane]
    mnemonic = "vmv" + suffix
    operand = {"v": f"v{vs1}", "x": XREG[vs1], "i": str(_sx5(vs1))}[lane]
    asm = f"{mnemonic} v{vd}, {operand}"
    s1 = vs1 if lane != "i" else -1
    imm = _sx5(vs1) if lane == "i" else 0
    return _vec(pc, raw, spec, VMajor.OTHER, VMinor.NOTYPE, mnemonic, asm,
                dst=vd, s1=s1, imm=imm)


def _decode_cfg(pc: int, raw: int, spec: SpecVersion) -> DecodedInstr:
    rd = (raw >> 7) & 0x1F
    rs1 = (raw >> 15) & 0x1F

    def cfg(mnemonic, asm, s1=-1, s2=-1, imm=0, imm2=0):
        return DecodedInstr(
            pc=pc,
            raw=raw,
            instr_type=InstrType.VSETVL,
            mnemonic=mnemonic,
            asm_string=asm,
            dst=rd,
            src1=s1,
            src2=s2,
            imm=imm,
            imm2=imm2,
            paraver_code=_pv(spec, mnemonic),
        )

    if spec is SpecVersion.V1_0:
        if (raw >> 31) == 0:
            zimm = (raw >> 20) & 0x7FF
            asm = f"vsetvli {XREG[rd]}, {XREG[rs1]}, {render_vtype(spec, zimm)}"
            return cfg("vsetvli", asm, s1=rs1, imm=zimm)
        if (raw >> 30) == 0b11:
            zimm = (raw >> 20) & 0x3FF
            asm = f"vsetivli {XREG[rd]}, {rs1}, {render_vtype(spec, zimm)}"
            return cfg("vsetivli", asm, imm=zimm, imm2=rs1)
        if (raw >> 25) == 0b1000000:
            rs2 = (raw >> 20) & 0x1F
            asm = f"vsetvl {XREG[rd]}, {XREG[rs1]}, {XREG[rs2]}"
            return cfg("vsetvl", asm, s1=rs1, s2=rs2)
        raise UndecodableEncoding(raw, "reserved configuration encoding")
    if (raw >> 31) == 0:
        zimm = (raw >> 20) & 0x7FF
        asm = f"vsetvli {XREG[rd]}, {XREG[rs1]}, {render_vtype(spec, zimm)}"
        return cfg("vsetvli", asm, s1=rs1, imm=zimm)
    if (raw >> 25) == 0b1000000:
        rs2 = (raw >> 20) & 0x1F
        asm = f"vsetvl {XREG[rd]}, {XREG[rs1]}, {XREG[rs2]}"
        return cfg("vsetvl", asm, s1=rs1, s2=rs2)
    raise UndecodableEncoding(raw, "reserved configuration encoding")


def _decode_mem(pc: int, raw: int, spec: SpecVersion, record_scalar: bool) -> DecodedInstr:
    if spec is SpecVersion.V1_0:
        return _decode_mem_v10(pc, raw, record_scalar)
    return _decode_mem_v071(pc, raw, record_scalar)


def _mem(pc, raw, spec, minor, mnemonic, asm, dst=-1, s1=-1, s2=-1, s3=-1):
    return DecodedInstr(
        pc=pc,
        raw=raw,
        instr_type=InstrType.VECTOR,
        v_major=VMajor.MEMORY,
        v_minor=minor,
        mnemonic=mnemonic,
        asm_string=asm,
        dst=dst,
        src1=s1,
        src2=s2,
        src3=s3,
        paraver_code=_pv(spec, mnemonic),
    )


def _decode_mem_v10(pc: int, raw: int, record_scalar: bool) -> DecodedInstr:
    spec = SpecVersion.V1_0
    width = (raw >> 12) & 0x7
    eew = T10.MEM_WIDTH_TO_EEW.get(width)
    if eew is None:
        return _scalar_instr(pc, raw, record_scalar)
    if (raw >> 28) & 0x1:
        raise UndecodableEncoding(raw, "reserved wide element encoding")
    is_store = (raw & 0x7F) == OPCODE_STORE_FP
    nf = (raw >> 29) & 0x7
    mop = (raw >> 26) & 0x3
    vm = (raw >> 25) & 0x1
    r2 = (raw >> 20) & 0x1F
    rs1 = (raw >> 15) & 0x1F
    vd = (raw >> 7) & 0x1F
    seg = f"seg{nf + 1}" if nf else ""
    tail = ", v0.t" if vm == 0 else ""
    base = f"({XREG[rs1]})"

    if mop == T10.MOP_UNIT:
        if r2 == T10.LUMOP_PLAIN:
            mnemonic = f"{'vs' if is_store else 'vl'}{seg}e{eew}.v"
            asm = f"{mnemonic} v{vd}, {base}{tail}"
        elif r2 == T10.LUMOP_WHOLE:
            if vm == 0 or nf + 1 not in (1, 2, 4, 8):
                raise UndecodableEncoding(raw, "reserved whole-register transfer")
            if is_store:
                if width != 0:
                    raise UndecodableEncoding(raw, "reserved whole-register store width")
                mnemonic = f"vs{nf + 1}r.v"
            else:
                mnemonic = f"vl{nf + 1}re{eew}.v"
            asm = f"{mnemonic} v{vd}, {base}"
        elif r2 == T10.LUMOP_MASK:
            if width != 0 or vm == 0 or nf:
                raise UndecodableEncoding(raw, "reserved mask transfer encoding")
            mnemonic = "vsm.v" if is_store else "vlm.v"
            asm = f"{mnemonic} v{vd}, {base}"
        elif r2 == T10.LUMOP_FF and not is_store:
            mnemonic = f"vl{seg}e{eew}ff.v"
            asm = f"{mnemonic} v{vd}, {base}{tail}"
        else:
            raise UndecodableEncoding(raw, "reserved unit-stride encoding")
        return _mem(pc, raw, spec, VMinor.UNIT, mnemonic, asm,
                    dst=-1 if is_store else vd,
                    s1=vd if is_store else rs1,
                    s2=rs1 if is_store else -1)

    if mop == T10.MOP_STRIDED:
        mnemonic = f"{'vss' if is_store else 'vls'}{seg}e{eew}.v"
        asm = f"{mnemonic} v{vd}, {base}, {XREG[r2]}{tail}"
        return _mem(pc, raw, spec, VMinor.STRIDE, mnemonic, asm,
                    dst=-1 if is_store else vd,
                    s1=vd if is_store else rs1,
                    s2=rs1 if is_store else r2,
                    s3=r2 if is_store else -1)

    ordered = mop == T10.MOP_INDEXED_ORDERED
    if is_store:
        mnemonic = f"vs{'o' if ordered else 'u'}x{seg}ei{eew}.v"
    else:
        mnemonic = f"vl{'o' if ordered else 'u'}x{seg}ei{eew}.v"
    asm = f"{mnemonic} v{vd}, {base}, v{r2}{tail}"
    return _mem(pc, raw, spec, VMinor.INDEX, mnemonic, asm,
                dst=-1 if is_store else vd,
                s1=vd if is_store else rs1,
                s2=rs1 if is_store else r2,
                s3=r2 if is_store else -1)


def _decode_mem_v071(pc: int, raw: int, record_scalar: bool) -> DecodedInstr:
    spec = SpecVersion.V0_7_1
    width = (raw >> 12) & 0x7
    letter = T071.MEM_WIDTH_LETTER.get(width)
    if letter is None:
        return _scalar_instr(pc, raw, record_scalar)
    is_store = (raw & 0x7F) == OPCODE_STORE_FP
    nf = (raw >> 29) & 0x7
    mop = (raw >> 26) & 0x7
    vm = (raw >> 25) & 0x1
    r2 = (raw >> 20) & 0x1F
    rs1 = (raw >> 15) & 0x1F
    vd = (raw >> 7) & 0x1F
    signed = bool(mop & 0b100)
    addr = mop & 0b011
    seg = f"seg{nf + 1}" if nf else ""
    tail = ", v0.t" if vm == 0 else ""
    base = f"({XREG[rs1]})"
    usuffix = "" if (signed or letter == "e") else "u"

    if is_store:
        # stores have no sign variants; mop high bit only valid for
        # unordered-indexed (111)
        if mop == 0b000:
            mode, minor = "", VMinor.UNIT
        elif mop == 0b010:
            mode, minor = "s", VMinor.STRIDE
        elif mop == 0b011:
            mode, minor = "x", VMinor.INDEX
        elif mop == 0b111:
            mode, minor = "ux", VMinor.INDEX
        else:
            raise UndecodableEncoding(raw, "reserved vector store encoding")
        if r2 != 0 and mode == "":
            raise UndecodableEncoding(raw, "reserved unit-stride store encoding")
        mnemonic = f"vs{mode}{seg}{letter}.v"
        if mode == "s":
            asm = f"{mnemonic} v{vd}, {base}, {XREG[r2]}{tail}"
        elif mode in ("x", "ux"):
            asm = f"{mnemonic} v{vd}, {base}, v{r2}{tail}"
        else:
            asm = f"{mnemonic} v{vd}, {base}{tail}"
        return _mem(pc, raw, spec, minor, mnemonic, asm,
                    s1=vd, s2=rs1, s3=r2 if mode in ("s", "x", "ux") else -1)

    if addr == 0b00:
        if r2 == T071.LUMOP_FF:
            ff = "ff"
        elif r2 == T071.LUMOP_PLAIN:
            ff = ""
        else:
            raise UndecodableEncoding(raw, "reserved unit-stride load encoding")
        mnemonic = f"vl{seg}{letter}{usuffix}{ff}.v"
        asm = f"{mnemonic} v{vd}, {base}{tail}"
        return _mem(pc, raw, spec, VMinor.UNIT, mnemonic, asm, dst=vd, s1=rs1)
    if addr == 0b10:
        mnemonic = f"vls{seg}{letter}{usuffix}.v"
        asm = f"{mnemonic} v{vd}, {base}, {XREG[r2]}{tail}"
        return _mem(pc, raw, spec, VMinor.STRIDE, mnemonic, asm, dst=vd, s1=rs1, s2=r2)
    if addr == 0b11:
        mnemonic = f"vlx{seg}{letter}{usuffix}.v"
        asm = f"{mnemonic} v{vd}, {base}, v{r2}{tail}"
        return _mem(pc, raw, spec, VMinor.INDEX, mnemonic, asm, dst=vd, s1=rs1, s2=r2)
    raise UndecodableEncoding(raw, "reserved vector load encoding")


def disassemble(raw: int, spec: SpecVersion, pc: int = 0) -> str:
    """Full-detail assembly text for any decodable word."""
    return decode(raw, spec, pc=pc, record_scalar=True).asm_string


def all_mnemonics(spec: SpecVersion) -> set[str]:
    """Every vector or configuration mnemonic decode() can emit for a spec.

    Used to freeze the visualization numbering; scalar mnemonics are open
    ended and share a single code instead.
    """
    tables = _tables(spec)
    names: set[str] = set()
    for group_name in ("OPI", "OPM", "OPF"):
        lanes = getattr(tables, group_name)
        for lane, table in lanes.items():
            for entry in table.values():
                if isinstance(entry, UnaryGroup):
                    names.update(op.name for op in entry.ops.values())
                    continue
                names.update(_alu_mnemonics(entry, lane, spec))
    names.update(_mem_mnemonics(spec))
    names.update(("vsetvli", "vsetvl"))
    if spec is SpecVersion.V1_0:
        names.add("vsetivli")
    return names


def _alu_mnemonics(entry: AluEntry, lane: str, spec: SpecVersion) -> list[str]:
    flags = entry.flags
    name = entry.name
    if "mask_mm" in flags:
        return [f"{name}.mm"]
    if "ext_x" in flags or "s_x" in flags or "s_f" in flags:
        return [name]
    if "compress" in flags:
        return [f"{name}.vm"]
    if "whole_mv" in flags:
        return [f"vmv{n}r.v" for n in (1, 2, 4, 8)]
    if "merge" in flags:
        if lane == "f":
            return ["vfmerge.vfm", "vfmv.v.f"]
        return {
            "v": ["vmerge.vvm", "vmv.v.v"],
            "x": ["vmerge.vxm", "vmv.v.x"],
            "i": ["vmerge.vim", "vmv.v.i"],
        }[lane]
    if "carry" in flags:
        return [name + {"v": ".vvm", "x": ".vxm", "i": ".vim"}[lane]]
    if "mcarry" in flags:
        plain = {"v": ".vv", "x": ".vx", "i": ".vi"}[lane]
        return [name + {"v": ".vvm", "x": ".vxm", "i": ".vim"}[lane], name + plain]
    if "red" in flags:
        return [name + ".vs"]
    if "wide_w" in flags:
        return [name + {"v": ".wv", "x": ".wx", "f": ".wf"}[lane]]
    if "narrow" in flags and spec is SpecVersion.V1_0:
        return [name + {"v": ".wv", "x": ".wx", "i": ".wi"}[lane]]
    return [name + {"v": ".vv", "x": ".vx", "i": ".vi", "f": ".vf"}[lane]]


def _mem_mnemonics(spec: SpecVersion) -> set[str]:
    names: set[str] = set()
    segs = [""] + [f"seg{n}" for n in range(2, 9)]
    if spec is SpecVersion.V1_0:
        for eew in (8, 16, 32, 64):
            for seg in segs:
                names.add(f"vl{seg}e{eew}.v")
                names.add(f"vl{seg}e{eew}ff.v")
                names.add(f"vs{seg}e{eew}.v")
                names.add(f"vls{seg}e{eew}.v")
                names.add(f"vss{seg}e{eew}.v")
                names.add(f"vlux{seg}ei{eew}.v")
                names.add(f"vlox{seg}ei{eew}.v")
                names.add(f"vsux{seg}ei{eew}.v")
                names.add(f"vsox{seg}ei{eew}.v")
            names.add(f"vl{1}re{eew}.v")
            names.add(f"vl{2}re{eew}.v")
            names.add(f"vl{4}re{eew}.v")
            names.add(f"vl{8}re{eew}.v")
        names.update(f"vs{n}r.v" for n in (1, 2, 4, 8))
        names.update(("vlm.v", "vsm.v"))
        return names
    for letter in ("b", "h", "w", "e"):
        usuffixes = [""] if letter == "e" else ["", "u"]
        for seg in segs:
            for u in usuffixes:
                names.add(f"vl{seg}{letter}{u}.v")
                names.add(f"vl{seg}{letter}{u}ff.v")
                names.add(f"vls{seg}{letter}{u}.v")
                names.add(f"vlx{seg}{letter}{u}.v")
            names.add(f"vs{seg}{letter}.v")
            names.add(f"vss{seg}{letter}.v")
            names.add(f"vsx{seg}{letter}.v")
            names.add(f"vsux{seg}{letter}.v")
    return names
