"""Best-effort disassembly of scalar RV64GC words.

Only used when scalar detail recording is enabled; the analyzer otherwise
treats scalar instructions as an opaque count.  Words outside the covered
subset render as raw data directives, which keeps every produced string
round-trippable through an assembler.
"""

from __future__ import annotations

XREG = [
    "zero", "ra", "sp", "gp", "tp", "t0", "t1", "t2",
    "s0", "s1", "a0", "a1", "a2", "a3", "a4", "a5",
    "a6", "a7", "s2", "s3", "s4", "s5", "s6", "s7",
    "s8", "s9", "s10", "s11", "t3", "t4", "t5", "t6",
]

FREG = [
    "ft0", "ft1", "ft2", "ft3", "ft4", "ft5", "ft6", "ft7",
    "fs0", "fs1", "fa0", "fa1", "fa2", "fa3", "fa4", "fa5",
    "fa6", "fa7", "fs2", "fs3", "fs4", "fs5", "fs6", "fs7",
    "fs8", "fs9", "fs10", "fs11", "ft8", "ft9", "ft10", "ft11",
]

RM_NAMES = {0: "rne", 1: "rtz", 2: "rdn", 3: "rup", 4: "rmm"}

_LOADS = {0: "lb", 1: "lh", 2: "lw", 3: "ld", 4: "lbu", 5: "lhu", 6: "lwu"}
_STORES = {0: "sb", 1: "sh", 2: "sw", 3: "sd"}
_FP_LOADS = {1: "flh", 2: "flw", 3: "fld", 4: "flq"}
_FP_STORES = {1: "fsh", 2: "fsw", 3: "fsd", 4: "fsq"}
_BRANCHES = {0: "beq", 1: "bne", 4: "blt", 5: "bge", 6: "bltu", 7: "bgeu"}
_OP_IMM = {0: "addi", 2: "slti", 3: "sltiu", 4: "xori", 6: "ori", 7: "andi"}
_OP = {
    (0, 0x00): "add", (0, 0x20): "sub", (1, 0x00): "sll", (2, 0x00): "slt",
    (3, 0x00): "sltu", (4, 0x00): "xor", (5, 0x00): "srl", (5, 0x20): "sra",
    (6, 0x00): "or", (7, 0x00): "and",
    (0, 0x01): "mul", (1, 0x01): "mulh", (2, 0x01): "mulhsu", (3, 0x01): "mulhu",
    (4, 0x01): "div", (5, 0x01): "divu", (6, 0x01): "rem", (7, 0x01): "remu",
}
_OP32 = {
    (0, 0x00): "addw", (0, 0x20): "subw", (1, 0x00): "sllw",
    (5, 0x00): "srlw", (5, 0x20): "sraw",
    (0, 0x01): "mulw", (4, 0x01): "divw", (5, 0x01): "divuw",
    (6, 0x01): "remw", (7, 0x01): "remuw",
}
_CSR_OPS = {1: "csrrw", 2: "csrrs", 3: "csrrc", 5: "csrrwi", 6: "csrrsi", 7: "csrrci"}
_AMO = {
    0x02: "lr", 0x03: "sc", 0x01: "amoswap", 0x00: "amoadd", 0x04: "amoxor",
    0x0C: "amoand", 0x08: "amoor", 0x10: "amomin", 0x14: "amomax",
    0x18: "amominu", 0x1C: "amomaxu",
}
_FCMP = {(0x50, 2): "feq.s", (0x50, 1): "flt.s", (0x50, 0): "fle.s",
         (0x51, 2): "feq.d", (0x51, 1): "flt.d", (0x51, 0): "fle.d"}


def _sx(value: int, bits: int) -> int:
    sign = 1 << (bits - 1)
    return (value & (sign - 1)) - (value & sign)


def _word(raw: int) -> tuple[str, str]:
    return ".4byte", f".4byte 0x{raw:08x}"


def _half(raw: int) -> tuple[str, str]:
    return ".2byte", f".2byte 0x{raw:04x}"


def disassemble(raw: int) -> tuple[str, str]:
    """Return (mnemonic, full assembly string) for a scalar word."""
    if (raw & 0x3) != 0x3:
        return _compressed(raw & 0xFFFF)
    return _wide(raw & 0xFFFFFFFF)


def _wide(raw: int) -> tuple[str, str]:
    opcode = raw & 0x7F
    rd = (raw >> 7) & 0x1F
    funct3 = (raw >> 12) & 0x7
    rs1 = (raw >> 15) & 0x1F
    rs2 = (raw >> 20) & 0x1F
    funct7 = raw >> 25
    imm_i = _sx(raw >> 20, 12)

    if opcode == 0x37:
        return "lui", f"lui {XREG[rd]}, {raw >> 12}"
    if opcode == 0x17:
        return "auipc", f"auipc {XREG[rd]}, {raw >> 12}"
    if opcode == 0x6F:
        imm = (
            (_sx(raw >> 31, 1) << 20)
            | (((raw >> 12) & 0xFF) << 12)
            | (((raw >> 20) & 1) << 11)
            | (((raw >> 21) & 0x3FF) << 1)
        )
        return "jal", f"jal {XREG[rd]}, .{imm:+d}"
    if opcode == 0x67 and funct3 == 0:
        return "jalr", f"jalr {XREG[rd]}, {imm_i}({XREG[rs1]})"
    if opcode == 0x63 and funct3 in _BRANCHES:
        imm = (
            (_sx(raw >> 31, 1) << 12)
            | (((raw >> 7) & 1) << 11)
            | (((raw >> 25) & 0x3F) << 5)
            | (((raw >> 8) & 0xF) << 1)
        )
        name = _BRANCHES[funct3]
        return name, f"{name} {XREG[rs1]}, {XREG[rs2]}, .{imm:+d}"
    if opcode == 0x03 and funct3 in _LOADS:
        name = _LOADS[funct3]
        return name, f"{name} {XREG[rd]}, {imm_i}({XREG[rs1]})"
    if opcode == 0x07 and funct3 in _FP_LOADS:
        name = _FP_LOADS[funct3]
        return name, f"{name} {FREG[rd]}, {imm_i}({XREG[rs1]})"
    if opcode == 0x23 and funct3 in _STORES:
        name = _STORES[funct3]
        imm = _sx(((raw >> 25) << 5) | rd, 12)
        return name, f"{name} {XREG[rs2]}, {imm}({XREG[rs1]})"
    if opcode == 0x27 and funct3 in _FP_STORES:
        name = _FP_STORES[funct3]
        imm = _sx(((raw >> 25) << 5) | rd, 12)
        return name, f"{name} {FREG[rs2]}, {imm}({XREG[rs1]})"
    if opcode == 0x13:
        if funct3 == 1 and (funct7 >> 1) == 0:
            return "slli", f"slli {XREG[rd]}, {XREG[rs1]}, {(raw >> 20) & 0x3F}"
        if funct3 == 5:
            shamt = (raw >> 20) & 0x3F
            if (funct7 >> 1) == 0:
                return "srli", f"srli {XREG[rd]}, {XREG[rs1]}, {shamt}"
            if (funct7 >> 1) == 0x10:
                return "srai", f"srai {XREG[rd]}, {XREG[rs1]}, {shamt}"
            return _word(raw)
        if funct3 in _OP_IMM:
            name = _OP_IMM[funct3]
            return name, f"{name} {XREG[rd]}, {XREG[rs1]}, {imm_i}"
        return _word(raw)
    if opcode == 0x1B:
        if funct3 == 0:
            return "addiw", f"addiw {XREG[rd]}, {XREG[rs1]}, {imm_i}"
        shamt = (raw >> 20) & 0x1F
        if funct3 == 1 and funct7 == 0:
            return "slliw", f"slliw {XREG[rd]}, {XREG[rs1]}, {shamt}"
        if funct3 == 5 and funct7 == 0:
            return "srliw", f"srliw {XREG[rd]}, {XREG[rs1]}, {shamt}"
        if funct3 == 5 and funct7 == 0x20:
            return "sraiw", f"sraiw {XREG[rd]}, {XREG[rs1]}, {shamt}"
        return _word(raw)
    if opcode == 0x33 and (funct3, funct7) in _OP:
        name = _OP[(funct3, funct7)]
        return name, f"{name} {XREG[rd]}, {XREG[rs1]}, {XREG[rs2]}"
    if opcode == 0x3B and (funct3, funct7) in _OP32:
        name = _OP32[(funct3, funct7)]
        return name, f"{name} {XREG[rd]}, {XREG[rs1]}, {XREG[rs2]}"
    if opcode == 0x0F:
        if raw == 0x0000100F:
            return "fence.i", "fence.i"
        if funct3 == 0 and rd == 0 and rs1 == 0:
            fm = raw >> 28
            pred = (raw >> 24) & 0xF
            succ = (raw >> 20) & 0xF

            def fset(bits: int) -> str:
                return "".join(n for n, b in zip("iorw", (8, 4, 2, 1)) if bits & b)

            if fm == 8 and pred == 0x3 and succ == 0x3:
                return "fence.tso", "fence.tso"
            if fm == 0 and pred and succ:
                if pred == 0xF and succ == 0xF:
                    return "fence", "fence"
                return "fence", f"fence {fset(pred)}, {fset(succ)}"
        return _word(raw)
    if opcode == 0x73:
        if raw == 0x00000073:
            return "ecall", "ecall"
        if raw == 0x00100073:
            return "ebreak", "ebreak"
        if funct3 in _CSR_OPS:
            name = _CSR_OPS[funct3]
            csr = raw >> 20
            src = str(rs1) if funct3 >= 5 else XREG[rs1]
            return name, f"{name} {XREG[rd]}, {csr}, {src}"
        return _word(raw)
    if opcode == 0x2F and funct3 in (2, 3):
        size = "w" if funct3 == 2 else "d"
        base = _AMO.get(funct7 >> 2)
        if base is None:
            return _word(raw)
        order = {0: "", 1: ".rl", 2: ".aq", 3: ".aqrl"}[funct7 & 3]
        name = f"{base}.{size}{order}"
        if base == "lr":
            if rs2 != 0:
                return _word(raw)
            return name, f"{name} {XREG[rd]}, ({XREG[rs1]})"
        return name, f"{name} {XREG[rd]}, {XREG[rs2]}, ({XREG[rs1]})"
    if opcode == 0x53:
        return _fp(raw, rd, funct3, rs1, rs2, funct7)
    if opcode in (0x43, 0x47, 0x4B, 0x4F):
        fmt = (raw >> 25) & 3
        if fmt > 1:
            return _word(raw)
        suffix = "s" if fmt == 0 else "d"
        base = {0x43: "fmadd", 0x47: "fmsub", 0x4B: "fnmsub", 0x4F: "fnmadd"}[opcode]
        name = f"{base}.{suffix}"
        rs3 = raw >> 27
        ops = f"{FREG[rd]}, {FREG[rs1]}, {FREG[rs2]}, {FREG[rs3]}"
        if funct3 != 7:
            rm = RM_NAMES.get(funct3)
            if rm is None:
                return _word(raw)
            ops += f", {rm}"
        return name, f"{name} {ops}"
    return _word(raw)


def _fp(raw, rd, funct3, rs1, rs2, funct7) -> tuple[str, str]:
    fmt = funct7 & 3
    if fmt > 1:
        return _word(raw)
    suffix = "s" if fmt == 0 else "d"
    group = funct7 >> 2

    def rm_tail() -> str | None:
        if funct3 == 7:
            return ""
        name = RM_NAMES.get(funct3)
        return None if name is None else f", {name}"

    if group in (0x00, 0x01, 0x02, 0x03):
        base = {0x00: "fadd", 0x01: "fsub", 0x02: "fmul", 0x03: "fdiv"}[group]
        tail = rm_tail()
        if tail is None:
            return _word(raw)
        name = f"{base}.{suffix}"
        return name, f"{name} {FREG[rd]}, {FREG[rs1]}, {FREG[rs2]}{tail}"
    if group == 0x0B and rs2 == 0:
        tail = rm_tail()
        if tail is None:
            return _word(raw)
        name = f"fsqrt.{suffix}"
        return name, f"{name} {FREG[rd]}, {FREG[rs1]}{tail}"
    if group == 0x04 and funct3 <= 2:
        base = {0: "fsgnj", 1: "fsgnjn", 2: "fsgnjx"}[funct3]
        name = f"{base}.{suffix}"
        return name, f"{name} {FREG[rd]}, {FREG[rs1]}, {FREG[rs2]}"
    if group == 0x05 and funct3 <= 1:
        name = f"{'fmin' if funct3 == 0 else 'fmax'}.{suffix}"
        return name, f"{name} {FREG[rd]}, {FREG[rs1]}, {FREG[rs2]}"
    if group == 0x08 and rs2 <= 1 and rs2 != fmt:
        name = f"fcvt.{suffix}.{'s' if rs2 == 0 else 'd'}"
        if rs2 == 0:
            # widening is exact; no rounding mode operand exists
            if funct3 != 0:
                return _word(raw)
            return name, f"{name} {FREG[rd]}, {FREG[rs1]}"
        tail = rm_tail()
        if tail is None:
            return _word(raw)
        return name, f"{name} {FREG[rd]}, {FREG[rs1]}{tail}"
    if group == 0x18 and rs2 <= 3:
        kind = {0: "w", 1: "wu", 2: "l", 3: "lu"}[rs2]
        tail = rm_tail()
        if tail is None:
            return _word(raw)
        name = f"fcvt.{kind}.{suffix}"
        return name, f"{name} {XREG[rd]}, {FREG[rs1]}{tail}"
    if group == 0x1A and rs2 <= 3:
        kind = {0: "w", 1: "wu", 2: "l", 3: "lu"}[rs2]
        name = f"fcvt.{suffix}.{kind}"
        if suffix == "d" and rs2 <= 1:
            # 32-bit integers convert to double exactly; no rm operand
            if funct3 != 0:
                return _word(raw)
            return name, f"{name} {FREG[rd]}, {XREG[rs1]}"
        tail = rm_tail()
        if tail is None:
            return _word(raw)
        return name, f"{name} {FREG[rd]}, {XREG[rs1]}{tail}"
    if group == 0x14 and funct3 <= 2:
        name = _FCMP[(0x50 | fmt, funct3)]
        return name, f"{name} {XREG[rd]}, {FREG[rs1]}, {FREG[rs2]}"
    if group == 0x1C and rs2 == 0:
        if funct3 == 0:
            name = "fmv.x.w" if fmt == 0 else "fmv.x.d"
            return name, f"{name} {XREG[rd]}, {FREG[rs1]}"
        if funct3 == 1:
            name = f"fclass.{suffix}"
            return name, f"{name} {XREG[rd]}, {FREG[rs1]}"
    if group == 0x1E and rs2 == 0 and funct3 == 0:
        name = "fmv.w.x" if fmt == 0 else "fmv.d.x"
        return name, f"{name} {FREG[rd]}, {XREG[rs1]}"
    return _word(raw)


def _creg(bits: int) -> int:
    return 8 + (bits & 0x7)


def _compressed(raw: int) -> tuple[str, str]:
    if raw == 0:
        return _half(raw)
    quad = raw & 0x3
    funct3 = raw >> 13
    if quad == 0:
        rdp = _creg(raw >> 2)
        rs1p = _creg(raw >> 7)
        if funct3 == 0:
            imm = (
                (((raw >> 11) & 0x3) << 4)
                | (((raw >> 7) & 0xF) << 6)
                | (((raw >> 6) & 1) << 2)
                | (((raw >> 5) & 1) << 3)
            )
            if imm == 0:
                return _half(raw)
            return "c.addi4spn", f"c.addi4spn {XREG[rdp]}, sp, {imm}"
        if funct3 in (1, 3, 5, 7):
            imm = (((raw >> 10) & 0x7) << 3) | (((raw >> 5) & 0x3) << 6)
            name = {1: "c.fld", 3: "c.ld", 5: "c.fsd", 7: "c.sd"}[funct3]
            reg = FREG[rdp] if funct3 in (1, 5) else XREG[rdp]
            return name, f"{name} {reg}, {imm}({XREG[rs1p]})"
        if funct3 in (2, 6):
            imm = (((raw >> 10) & 0x7) << 3) | (((raw >> 6) & 1) << 2) | (((raw >> 5) & 1) << 6)
            name = "c.lw" if funct3 == 2 else "c.sw"
            return name, f"{name} {XREG[rdp]}, {imm}({XREG[rs1p]})"
        return _half(raw)
    if quad == 1:
        rd = (raw >> 7) & 0x1F
        imm6 = _sx((((raw >> 12) & 1) << 5) | ((raw >> 2) & 0x1F), 6)
        if funct3 == 0:
            if rd == 0 and imm6 == 0:
                return "c.nop", "c.nop"
            if rd != 0 and imm6 != 0:
                return "c.addi", f"c.addi {XREG[rd]}, {imm6}"
            return _half(raw)
        if funct3 == 1 and rd != 0:
            return "c.addiw", f"c.addiw {XREG[rd]}, {imm6}"
        if funct3 == 2 and rd != 0:
            return "c.li", f"c.li {XREG[rd]}, {imm6}"
        if funct3 == 3:
            if rd == 2:
                imm = _sx(
                    (((raw >> 12) & 1) << 9)
                    | (((raw >> 6) & 1) << 4)
                    | (((raw >> 5) & 1) << 6)
                    | (((raw >> 3) & 3) << 7)
                    | (((raw >> 2) & 1) << 5),
                    10,
                )
                if imm:
                    return "c.addi16sp", f"c.addi16sp sp, {imm}"
            elif rd != 0 and imm6 != 0:
                return "c.lui", f"c.lui {XREG[rd]}, {imm6 & 0x3F}"
            return _half(raw)
        if funct3 == 4:
            kind = (raw >> 10) & 0x3
            rdp = _creg(raw >> 7)
            if kind == 0 or kind == 1:
                shamt = (((raw >> 12) & 1) << 5) | ((raw >> 2) & 0x1F)
                name = "c.srli" if kind == 0 else "c.srai"
                if shamt == 0:
                    return _half(raw)
                return name, f"{name} {XREG[rdp]}, {shamt}"
            if kind == 2:
                return "c.andi", f"c.andi {XREG[rdp]}, {imm6}"
            rs2p = _creg(raw >> 2)
            table = (
                {0: "c.sub", 1: "c.xor", 2: "c.or", 3: "c.and"}
                if ((raw >> 12) & 1) == 0
                else {0: "c.subw", 1: "c.addw"}
            )
            name = table.get((raw >> 5) & 0x3)
            if name is None:
                return _half(raw)
            return name, f"{name} {XREG[rdp]}, {XREG[rs2p]}"
        if funct3 == 5:
            imm = _sx(
                (((raw >> 12) & 1) << 11)
                | (((raw >> 11) & 1) << 4)
                | (((raw >> 9) & 3) << 8)
                | (((raw >> 8) & 1) << 10)
                | (((raw >> 7) & 1) << 6)
                | (((raw >> 6) & 1) << 7)
                | (((raw >> 3) & 7) << 1)
                | (((raw >> 2) & 1) << 5),
                12,
            )
            return "c.j", f"c.j .{imm:+d}"
        rs1p = _creg(raw >> 7)
        imm = _sx(
            (((raw >> 12) & 1) << 8)
            | (((raw >> 10) & 3) << 3)
            | (((raw >> 5) & 3) << 6)
            | (((raw >> 3) & 3) << 1)
            | (((raw >> 2) & 1) << 5),
            9,
        )
        name = "c.beqz" if funct3 == 6 else "c.bnez"
        return name, f"{name} {XREG[rs1p]}, .{imm:+d}"
    # quadrant 2
    rd = (raw >> 7) & 0x1F
    rs2 = (raw >> 2) & 0x1F
    if funct3 == 0 and rd != 0:
        shamt = (((raw >> 12) & 1) << 5) | rs2
        if shamt:
            return "c.slli", f"c.slli {XREG[rd]}, {shamt}"
        return _half(raw)
    if funct3 == 1:
        imm = (((raw >> 12) & 1) << 5) | (((raw >> 5) & 3) << 3) | (((raw >> 2) & 7) << 6)
        return "c.fldsp", f"c.fldsp {FREG[rd]}, {imm}(sp)"
    if funct3 == 2 and rd != 0:
        imm = (((raw >> 12) & 1) << 5) | (((raw >> 4) & 7) << 2) | (((raw >> 2) & 3) << 6)
        return "c.lwsp", f"c.lwsp {XREG[rd]}, {imm}(sp)"
    if funct3 == 3 and rd != 0:
        imm = (((raw >> 12) & 1) << 5) | (((raw >> 5) & 3) << 3) | (((raw >> 2) & 7) << 6)
        return "c.ldsp", f"c.ldsp {XREG[rd]}, {imm}(sp)"
    if funct3 == 4:
        if ((raw >> 12) & 1) == 0:
            if rs2 == 0 and rd != 0:
                return "c.jr", f"c.jr {XREG[rd]}"
            if rs2 != 0 and rd != 0:
                return "c.mv", f"c.mv {XREG[rd]}, {XREG[rs2]}"
            return _half(raw)
        if rd == 0 and rs2 == 0:
            return "c.ebreak", "c.ebreak"
        if rs2 == 0 and rd != 0:
            return "c.jalr", f"c.jalr {XREG[rd]}"
        if rd != 0 and rs2 != 0:
            return "c.add", f"c.add {XREG[rd]}, {XREG[rs2]}"
        return _half(raw)
    if funct3 == 5:
        imm = (((raw >> 10) & 7) << 3) | (((raw >> 7) & 7) << 6)
        return "c.fsdsp", f"c.fsdsp {FREG[rs2]}, {imm}(sp)"
    if funct3 == 6:
        imm = (((raw >> 9) & 0xF) << 2) | (((raw >> 7) & 3) << 6)
        return "c.swsp", f"c.swsp {XREG[rs2]}, {imm}(sp)"
    if funct3 == 7:
        imm = (((raw >> 10) & 7) << 3) | (((raw >> 7) & 7) << 6)
        return "c.sdsp", f"c.sdsp {XREG[rs2]}, {imm}(sp)"
    return _half(raw)
