#!/usr/bin/env python3
"""Build the frozen v0.7.1 decode corpus.

No assembler for the 0.7.1 vector encoding survives in current toolchains,
so this tool carries its own tiny assembler, written directly from the
0.7.1 encoding layout and kept independent of the package's decode tables.
Agreement between the two separately written encoders is the best available
check; decode must reproduce the exact input text, classification included.

Usage: python3 tools/gen_corpus_v0_7_1.py [--out PATH]
"""

from __future__ import annotations

import argparse
import pathlib
import re
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from rave.isa import SpecVersion, decode  # noqa: E402

XNUM = {f"x{i}": i for i in range(32)}
XNUM.update(
    zip(
        "zero ra sp gp tp t0 t1 t2 s0 s1 a0 a1 a2 a3 a4 a5 a6 a7 "
        "s2 s3 s4 s5 s6 s7 s8 s9 s10 s11 t3 t4 t5 t6".split(),
        range(32),
    )
)
FNUM = dict(
    zip(
        "ft0 ft1 ft2 ft3 ft4 ft5 ft6 ft7 fs0 fs1 fa0 fa1 fa2 fa3 fa4 fa5 "
        "fa6 fa7 fs2 fs3 fs4 fs5 fs6 fs7 fs8 fs9 fs10 fs11 ft8 ft9 ft10 ft11".split(),
        range(32),
    )
)

OP_V = 0b1010111
F3 = {"ivv": 0, "fvv": 1, "mvv": 2, "ivi": 3, "ivx": 4, "fvf": 5, "mvx": 6}

# funct6 assignments straight from the 0.7.1 listing
OPI_F6 = {
    "vadd": 0x00, "vsub": 0x02, "vrsub": 0x03, "vminu": 0x04, "vmin": 0x05,
    "vmaxu": 0x06, "vmax": 0x07, "vand": 0x09, "vor": 0x0A, "vxor": 0x0B,
    "vrgather": 0x0C, "vslideup": 0x0E, "vslidedown": 0x0F,
    "vadc": 0x10, "vmadc": 0x11, "vsbc": 0x12, "vmsbc": 0x13, "vmerge": 0x17,
    "vmseq": 0x18, "vmsne": 0x19, "vmsltu": 0x1A, "vmslt": 0x1B,
    "vmsleu": 0x1C, "vmsle": 0x1D, "vmsgtu": 0x1E, "vmsgt": 0x1F,
    "vsaddu": 0x20, "vsadd": 0x21, "vssubu": 0x22, "vssub": 0x23,
    "vaadd": 0x24, "vsll": 0x25, "vasub": 0x26, "vsmul": 0x27,
    "vsrl": 0x28, "vsra": 0x29, "vssrl": 0x2A, "vssra": 0x2B,
    "vnsrl": 0x2C, "vnsra": 0x2D, "vnclipu": 0x2E, "vnclip": 0x2F,
    "vwredsumu": 0x30, "vwredsum": 0x31,
    "vwsmaccu": 0x3C, "vwsmacc": 0x3D, "vwsmaccsu": 0x3E, "vwsmaccus": 0x3F,
}
OPM_F6 = {
    "vredsum": 0x00, "vredand": 0x01, "vredor": 0x02, "vredxor": 0x03,
    "vredminu": 0x04, "vredmin": 0x05, "vredmaxu": 0x06, "vredmax": 0x07,
    "vext.x.v": 0x0C, "vmv.s.x": 0x0D, "vslide1up": 0x0E, "vslide1down": 0x0F,
    "vmpopc.m": 0x10, "vmfirst.m": 0x11, "vcompress": 0x17,
    "vmandnot": 0x18, "vmand": 0x19, "vmor": 0x1A, "vmxor": 0x1B,
    "vmornot": 0x1C, "vmnand": 0x1D, "vmnor": 0x1E, "vmxnor": 0x1F,
    "vdivu": 0x20, "vdiv": 0x21, "vremu": 0x22, "vrem": 0x23,
    "vmulhu": 0x24, "vmul": 0x25, "vmulhsu": 0x26, "vmulh": 0x27,
    "vmadd": 0x29, "vnmsub": 0x2B, "vmacc": 0x2D, "vnmsac": 0x2F,
    "vwaddu": 0x30, "vwadd": 0x31, "vwsubu": 0x32, "vwsub": 0x33,
    "vwaddu.w": 0x34, "vwadd.w": 0x35, "vwsubu.w": 0x36, "vwsub.w": 0x37,
    "vwmulu": 0x38, "vwmulsu": 0x3A, "vwmul": 0x3B,
    "vwmaccu": 0x3C, "vwmacc": 0x3D, "vwmaccsu": 0x3E, "vwmaccus": 0x3F,
}
OPM_VMUNARY0 = 0x14
OPM_VMUNARY0_VS1 = {"vmsbf.m": 1, "vmsof.m": 2, "vmsif.m": 3, "viota.m": 16, "vid.v": 17}
OPF_F6 = {
    "vfadd": 0x00, "vfredsum": 0x01, "vfsub": 0x02, "vfredosum": 0x03,
    "vfmin": 0x04, "vfredmin": 0x05, "vfmax": 0x06, "vfredmax": 0x07,
    "vfsgnj": 0x08, "vfsgnjn": 0x09, "vfsgnjx": 0x0A,
    "vfmv.f.s": 0x0C, "vfmv.s.f": 0x0D, "vfmerge": 0x17,
    "vmfeq": 0x18, "vmfle": 0x19, "vmford": 0x1A, "vmflt": 0x1B,
    "vmfne": 0x1C, "vmfgt": 0x1D, "vmfge": 0x1F,
    "vfdiv": 0x20, "vfrdiv": 0x21, "vfmul": 0x24, "vfrsub": 0x27,
    "vfmadd": 0x28, "vfnmadd": 0x29, "vfmsub": 0x2A, "vfnmsub": 0x2B,
    "vfmacc": 0x2C, "vfnmacc": 0x2D, "vfmsac": 0x2E, "vfnmsac": 0x2F,
    "vfwadd": 0x30, "vfwredsum": 0x31, "vfwsub": 0x32, "vfwredosum": 0x33,
    "vfwadd.w": 0x34, "vfwsub.w": 0x36, "vfwmul": 0x38,
    "vfwmacc": 0x3C, "vfwnmacc": 0x3D, "vfwmsac": 0x3E, "vfwnmsac": 0x3F,
}
OPF_VFUNARY0 = 0x22
OPF_VFUNARY0_VS1 = {
    "vfcvt.xu.f.v": 0, "vfcvt.x.f.v": 1, "vfcvt.f.xu.v": 2, "vfcvt.f.x.v": 3,
    "vfwcvt.xu.f.v": 8, "vfwcvt.x.f.v": 9, "vfwcvt.f.xu.v": 10,
    "vfwcvt.f.x.v": 11, "vfwcvt.f.f.v": 12,
    "vfncvt.xu.f.v": 16, "vfncvt.x.f.v": 17, "vfncvt.f.xu.v": 18,
    "vfncvt.f.x.v": 19, "vfncvt.f.f.v": 20,
}
OPF_VFUNARY1 = 0x23
OPF_VFUNARY1_VS1 = {"vfsqrt.v": 0, "vfclass.v": 16}

MACC = {
    "vmacc", "vnmsac", "vmadd", "vnmsub", "vwmaccu", "vwmacc", "vwmaccsu",
    "vwmaccus", "vwsmaccu", "vwsmacc", "vwsmaccsu", "vwsmaccus",
    "vfmacc", "vfnmacc", "vfmsac", "vfnmsac", "vfmadd", "vfnmadd",
    "vfmsub", "vfnmsub", "vfwmacc", "vfwnmacc", "vfwmsac", "vfwnmsac",
}

MEM_WIDTH = {"b": 0b000, "h": 0b101, "w": 0b110, "e": 0b111}


def opv(f6: int, vm: int, vs2: int, vs1: int, f3: int, vd: int) -> int:
    return (f6 << 26) | (vm << 25) | (vs2 << 20) | (vs1 << 15) | (f3 << 12) | (vd << 7) | OP_V


def vnum(tok: str) -> int:
    if not re.fullmatch(r"v\d+", tok):
        raise ValueError(f"not a vector register: {tok}")
    return int(tok[1:])


def split_ops(rest: str) -> list[str]:
    return [t.strip() for t in rest.split(",")] if rest else []


def asm_0_7_1(asm: str) -> int:
    mnem, _, rest = asm.partition(" ")
    ops = split_ops(rest)
    vm = 1
    if ops and ops[-1] == "v0.t":
        vm = 0
        ops = ops[:-1]

    if mnem in ("vsetvli", "vsetvl"):
        rd = XNUM[ops[0]]
        rs1 = XNUM[ops[1]]
        if mnem == "vsetvl":
            return (0b1000000 << 25) | (XNUM[ops[2]] << 20) | (rs1 << 15) | (7 << 12) | (rd << 7) | OP_V
        m = re.fullmatch(r"e(\d+)", ops[2])
        sew = int(m.group(1))
        m = re.fullmatch(r"m(\d+)", ops[3])
        lmul = int(m.group(1))
        zimm = {8: 0, 16: 1, 32: 2, 64: 3}[sew] << 2 | {1: 0, 2: 1, 4: 2, 8: 3}[lmul]
        return (zimm << 20) | (rs1 << 15) | (7 << 12) | (rd << 7) | OP_V

    memory = re.fullmatch(r"(vl|vs)(s|x|ux)?(seg\d)?([bhwe])(u)?(ff)?\.v", mnem)
    if memory:
        ls, mode, seg, letter, unsigned, ff = memory.groups()
        nf = int(seg[3:]) - 1 if seg else 0
        width = MEM_WIDTH[letter]
        vd = vnum(ops[0])
        m = re.fullmatch(r"\((\w+)\)", ops[1])
        rs1 = XNUM[m.group(1)]
        is_store = ls == "vs"
        if is_store:
            mop = {None: 0b000, "s": 0b010, "x": 0b011, "ux": 0b111}[mode]
        else:
            sign = 0 if (unsigned or letter == "e") else 1
            mop = (sign << 2) | {None: 0b000, "s": 0b010, "x": 0b011}[mode]
        r2 = 0
        if mode == "s":
            r2 = XNUM[ops[2]]
        elif mode in ("x", "ux"):
            r2 = vnum(ops[2])
        elif ff:
            r2 = 0b10000
        opc = 0b0100111 if is_store else 0b0000111
        return (nf << 29) | (mop << 26) | (vm << 25) | (r2 << 20) | (rs1 << 15) | (width << 12) | (vd << 7) | opc

    if mnem == "vext.x.v":
        return opv(OPM_F6[mnem], 1, vnum(ops[1]), XNUM[ops[2]], F3["mvv"], XNUM[ops[0]])
    if mnem == "vmv.s.x":
        return opv(OPM_F6[mnem], 1, 0, XNUM[ops[1]], F3["mvx"], vnum(ops[0]))
    if mnem == "vfmv.f.s":
        return opv(OPF_F6[mnem], 1, vnum(ops[1]), 0, F3["fvv"], FNUM[ops[0]])
    if mnem == "vfmv.s.f":
        return opv(OPF_F6[mnem], 1, 0, FNUM[ops[1]], F3["fvf"], vnum(ops[0]))
    if mnem in ("vmpopc.m", "vmfirst.m"):
        return opv(OPM_F6[mnem], vm, vnum(ops[1]), 0, F3["mvv"], XNUM[ops[0]])
    if mnem in OPM_VMUNARY0_VS1:
        vs2 = 0 if mnem == "vid.v" else vnum(ops[1])
        return opv(OPM_VMUNARY0, vm, vs2, OPM_VMUNARY0_VS1[mnem], F3["mvv"], vnum(ops[0]))
    if mnem in OPF_VFUNARY0_VS1:
        return opv(OPF_VFUNARY0, vm, vnum(ops[1]), OPF_VFUNARY0_VS1[mnem], F3["fvv"], vnum(ops[0]))
    if mnem in OPF_VFUNARY1_VS1:
        return opv(OPF_VFUNARY1, vm, vnum(ops[1]), OPF_VFUNARY1_VS1[mnem], F3["fvv"], vnum(ops[0]))
    if mnem == "vcompress.vm":
        return opv(OPM_F6["vcompress"], 1, vnum(ops[1]), vnum(ops[2]), F3["mvv"], vnum(ops[0]))

    base, _, suffix = mnem.rpartition(".")
    vd = vnum(ops[0])
    if base == "vmerge" or base == "vmv.v" or base == "vfmerge" or base == "vfmv.v":
        f6 = 0x17
        if mnem == "vmerge.vvm":
            return opv(f6, 0, vnum(ops[1]), vnum(ops[2]), F3["ivv"], vd)
        if mnem == "vmerge.vxm":
            return opv(f6, 0, vnum(ops[1]), XNUM[ops[2]], F3["ivx"], vd)
        if mnem == "vmerge.vim":
            return opv(f6, 0, vnum(ops[1]), int(ops[2]) & 0x1F, F3["ivi"], vd)
        if mnem == "vfmerge.vfm":
            return opv(f6, 0, vnum(ops[1]), FNUM[ops[2]], F3["fvf"], vd)
        if mnem == "vmv.v.v":
            return opv(f6, 1, 0, vnum(ops[1]), F3["ivv"], vd)
        if mnem == "vmv.v.x":
            return opv(f6, 1, 0, XNUM[ops[1]], F3["ivx"], vd)
        if mnem == "vmv.v.i":
            return opv(f6, 1, 0, int(ops[1]) & 0x1F, F3["ivi"], vd)
        if mnem == "vfmv.v.f":
            return opv(f6, 1, 0, FNUM[ops[1]], F3["fvf"], vd)
        raise ValueError(mnem)

    if suffix in ("vvm", "vxm", "vim"):
        f6 = OPI_F6[base]
        if suffix == "vvm":
            return opv(f6, 0, vnum(ops[1]), vnum(ops[2]), F3["ivv"], vd)
        if suffix == "vxm":
            return opv(f6, 0, vnum(ops[1]), XNUM[ops[2]], F3["ivx"], vd)
        return opv(f6, 0, vnum(ops[1]), int(ops[2]) & 0x1F, F3["ivi"], vd)

    if suffix == "mm":
        return opv(OPM_F6[base], 1, vnum(ops[1]), vnum(ops[2]), F3["mvv"], vd)

    if suffix == "vs":
        f6 = OPI_F6.get(base)
        f3 = F3["ivv"]
        if f6 is None:
            f6 = OPM_F6.get(base)
            f3 = F3["mvv"]
        if f6 is None:
            f6 = OPF_F6[base]
            f3 = F3["fvv"]
        return opv(f6, vm, vnum(ops[1]), vnum(ops[2]), f3, vd)

    if suffix in ("wv", "wx", "wf"):
        key = base + ".w"
        f6 = OPM_F6.get(key, OPF_F6.get(key))
        if f6 is not None:
            f3 = {"wv": F3["mvv"], "wx": F3["mvx"]}[suffix] if key in OPM_F6 else \
                {"wv": F3["fvv"], "wf": F3["fvf"]}[suffix]
            second = vnum(ops[2]) if suffix == "wv" else (
                XNUM[ops[2]] if suffix == "wx" else FNUM[ops[2]])
            return opv(f6, vm, vnum(ops[1]), second, f3, vd)
        raise ValueError(mnem)

    if suffix in ("vv", "vx", "vi", "vf"):
        in_opi = base in OPI_F6
        in_opm = base in OPM_F6
        in_opf = base in OPF_F6
        if suffix == "vf" or (in_opf and not in_opi):
            f6 = OPF_F6[base]
            f3 = F3["fvv"] if suffix == "vv" else F3["fvf"]
        elif in_opi:
            f6 = OPI_F6[base]
            f3 = {"vv": F3["ivv"], "vx": F3["ivx"], "vi": F3["ivi"]}[suffix]
        elif in_opm:
            f6 = OPM_F6[base]
            f3 = {"vv": F3["mvv"], "vx": F3["mvx"]}[suffix]
        else:
            raise ValueError(mnem)
        if base in MACC:
            first, second = ops[2], ops[1]
        else:
            first, second = ops[1], ops[2]
        vs2 = vnum(first)
        if suffix == "vv":
            vs1 = vnum(second)
        elif suffix == "vx":
            vs1 = XNUM[second]
        elif suffix == "vf":
            vs1 = FNUM[second]
        else:
            vs1 = int(second) & 0x1F
        return opv(f6, vm, vs2, vs1, f3, vd)

    raise ValueError(f"cannot assemble {asm!r}")


A_II = ("ARITH", "INT")
A_FF = ("ARITH", "FP")
M_NT = ("MASK", "NOTYPE")
O_NT = ("OTHER", "NOTYPE")
M_U = ("MEMORY", "UNIT")
M_S = ("MEMORY", "STRIDE")
M_X = ("MEMORY", "INDEX")


def corpus() -> list[tuple[str, str, str, str]]:
    rows: list[tuple[str, str, str, str]] = []

    def v(asm, mm):
        rows.append((asm, "VECTOR", mm[0], mm[1]))

    def cfg(asm):
        rows.append((asm, "VSETVL", "OTHER", "NOTYPE"))

    for asm in [
        "vadd.vv v2, v4, v6", "vadd.vx v2, v4, a1", "vadd.vi v2, v4, 7",
        "vadd.vv v2, v4, v6, v0.t", "vadd.vi v2, v4, -13, v0.t",
        "vsub.vv v8, v12, v16", "vsub.vx v8, v12, s3",
        "vrsub.vx v1, v2, t0", "vrsub.vi v1, v2, -16",
        "vminu.vv v3, v6, v9", "vminu.vx v3, v6, a7", "vmin.vv v3, v6, v9",
        "vmaxu.vx v5, v10, zero", "vmax.vv v5, v10, v15",
        "vand.vi v7, v14, 15", "vor.vx v7, v14, ra", "vxor.vv v7, v14, v21",
        "vsll.vv v2, v4, v6", "vsll.vx v2, v4, a2", "vsll.vi v2, v4, 31",
        "vsrl.vv v9, v18, v27", "vsrl.vi v9, v18, 1", "vsra.vx v9, v18, gp",
        "vssrl.vv v6, v12, v18", "vssra.vi v6, v12, 3", "vssrl.vx v6, v12, t6",
        "vnsrl.vv v4, v8, v12", "vnsrl.vx v4, v8, a4", "vnsrl.vi v4, v8, 8",
        "vnsra.vv v4, v8, v12", "vnclipu.vv v2, v4, v6", "vnclip.vi v2, v4, 4",
        "vsaddu.vv v1, v2, v3", "vsaddu.vi v1, v2, -1", "vsadd.vx v1, v2, sp",
        "vssubu.vv v1, v2, v3", "vssub.vx v1, v2, tp",
        "vaadd.vv v10, v20, v30", "vaadd.vx v10, v20, s11", "vaadd.vi v10, v20, 9",
        "vasub.vv v10, v20, v30", "vasub.vx v10, v20, s2",
        "vsmul.vv v11, v22, v31", "vsmul.vx v11, v22, a6",
        "vmseq.vv v0, v8, v16", "vmseq.vv v1, v8, v16, v0.t",
        "vmsne.vi v2, v8, 11", "vmsltu.vx v3, v8, a5", "vmslt.vv v4, v8, v24",
        "vmsleu.vi v5, v8, -9", "vmsle.vv v6, v8, v16",
        "vmsgtu.vx v7, v8, s4", "vmsgt.vi v8, v16, 2",
        "vadc.vvm v2, v4, v6, v0", "vadc.vxm v2, v4, a3, v0",
        "vadc.vim v2, v4, 5, v0",
        "vmadc.vvm v1, v4, v6, v0", "vmadc.vxm v1, v4, s5, v0",
        "vmadc.vim v1, v4, -3, v0",
        "vsbc.vvm v3, v6, v9, v0", "vsbc.vxm v3, v6, s6, v0",
        "vmsbc.vvm v2, v6, v9, v0", "vmsbc.vxm v2, v6, s7, v0",
        "vdivu.vv v4, v8, v12", "vdiv.vx v4, v8, t1", "vremu.vx v4, v8, t2",
        "vrem.vv v4, v8, v12", "vmulhu.vv v5, v10, v15", "vmul.vv v5, v10, v15",
        "vmul.vx v5, v10, t3", "vmulhsu.vv v5, v10, v15", "vmulh.vv v5, v10, v15",
        "vmacc.vv v6, v12, v18", "vmacc.vx v6, t4, v18",
        "vnmsac.vv v6, v12, v18", "vmadd.vx v6, t5, v18",
        "vnmsub.vv v6, v12, v18", "vnmsub.vv v6, v12, v18, v0.t",
        "vwaddu.vv v8, v10, v12", "vwaddu.vx v8, v10, s8",
        "vwadd.vv v8, v10, v12", "vwsubu.vx v8, v10, s9", "vwsub.vv v8, v10, v12",
        "vwaddu.wv v8, v12, v10", "vwaddu.wx v8, v12, s10",
        "vwadd.wv v8, v12, v10", "vwsubu.wx v8, v12, a0", "vwsub.wv v8, v12, v10",
        "vwmulu.vv v14, v16, v18", "vwmulsu.vx v14, v16, a1", "vwmul.vv v14, v16, v18",
        "vwmaccu.vv v20, v22, v24", "vwmacc.vx v20, a2, v24",
        "vwmaccsu.vv v20, v22, v24", "vwmaccus.vx v20, a3, v24",
        "vwsmaccu.vv v26, v28, v30", "vwsmaccu.vx v26, a4, v30",
        "vwsmacc.vv v26, v28, v30", "vwsmacc.vx v26, a5, v30",
        "vwsmaccsu.vv v26, v28, v30", "vwsmaccsu.vx v26, a6, v30",
        "vwsmaccus.vx v26, a7, v30",
        "vredsum.vs v1, v2, v3", "vredsum.vs v1, v2, v3, v0.t",
        "vredand.vs v1, v2, v3", "vredor.vs v1, v2, v3", "vredxor.vs v1, v2, v3",
        "vredminu.vs v1, v2, v3", "vredmin.vs v1, v2, v3",
        "vredmaxu.vs v1, v2, v3", "vredmax.vs v1, v2, v3",
        "vwredsumu.vs v4, v6, v8", "vwredsum.vs v4, v6, v8",
    ]:
        v(asm, A_II)

    for asm in [
        "vfadd.vv v2, v4, v6", "vfadd.vf v2, v4, fa1", "vfadd.vv v2, v4, v6, v0.t",
        "vfsub.vv v2, v4, v6", "vfsub.vf v2, v4, fs0", "vfrsub.vf v2, v4, ft0",
        "vfmul.vv v8, v16, v24", "vfmul.vf v8, v16, fa7",
        "vfdiv.vv v8, v16, v24", "vfdiv.vf v8, v16, fs11", "vfrdiv.vf v8, v16, ft11",
        "vfmin.vv v3, v6, v9", "vfmax.vf v3, v6, fa2",
        "vfsgnj.vv v5, v10, v15", "vfsgnjn.vf v5, v10, fa3", "vfsgnjx.vv v5, v10, v15",
        "vfmacc.vv v6, v12, v18", "vfmacc.vf v6, fa4, v18",
        "vfnmacc.vv v6, v12, v18", "vfmsac.vf v6, fa5, v18",
        "vfnmsac.vv v6, v12, v18", "vfmadd.vv v6, v12, v18",
        "vfnmadd.vf v6, fa6, v18", "vfmsub.vv v6, v12, v18",
        "vfnmsub.vf v6, fs2, v18", "vfmacc.vv v6, v12, v18, v0.t",
        "vfwadd.vv v8, v10, v12", "vfwadd.vf v8, v10, fs3",
        "vfwsub.vv v8, v10, v12", "vfwadd.wv v8, v12, v10",
        "vfwadd.wf v8, v12, fs4", "vfwsub.wv v8, v12, v10",
        "vfwmul.vv v16, v20, v24", "vfwmul.vf v16, v20, fs5",
        "vfwmacc.vv v16, v20, v24", "vfwmacc.vf v16, fs6, v24",
        "vfwnmacc.vv v16, v20, v24", "vfwmsac.vf v16, fs7, v24",
        "vfwnmsac.vv v16, v20, v24",
        "vmfeq.vv v1, v8, v16", "vmfeq.vf v1, v8, fs8",
        "vmfle.vv v2, v8, v16", "vmford.vv v3, v8, v16", "vmford.vf v3, v8, fs9",
        "vmflt.vf v4, v8, fs10", "vmfne.vv v5, v8, v16",
        "vmfgt.vf v6, v8, ft1", "vmfge.vf v7, v8, ft2",
        "vmfeq.vv v1, v8, v16, v0.t",
        "vfsqrt.v v4, v8", "vfsqrt.v v4, v8, v0.t", "vfclass.v v4, v8",
        "vfcvt.xu.f.v v2, v4", "vfcvt.x.f.v v2, v4", "vfcvt.f.xu.v v2, v4",
        "vfcvt.f.x.v v2, v4", "vfcvt.x.f.v v2, v4, v0.t",
        "vfwcvt.xu.f.v v8, v10", "vfwcvt.x.f.v v8, v10", "vfwcvt.f.xu.v v8, v10",
        "vfwcvt.f.x.v v8, v10", "vfwcvt.f.f.v v8, v10",
        "vfncvt.xu.f.v v4, v8", "vfncvt.x.f.v v4, v8", "vfncvt.f.xu.v v4, v8",
        "vfncvt.f.x.v v4, v8", "vfncvt.f.f.v v4, v8", "vfncvt.f.f.v v4, v8, v0.t",
        "vfredsum.vs v1, v2, v3", "vfredosum.vs v1, v2, v3",
        "vfredmin.vs v1, v2, v3", "vfredmax.vs v1, v2, v3",
        "vfwredsum.vs v4, v6, v8", "vfwredosum.vs v4, v6, v8",
        "vfredsum.vs v1, v2, v3, v0.t",
    ]:
        v(asm, A_FF)

    for asm in [
        "vmandnot.mm v1, v2, v3", "vmand.mm v1, v2, v3", "vmor.mm v1, v2, v3",
        "vmxor.mm v1, v2, v3", "vmornot.mm v1, v2, v3", "vmnand.mm v1, v2, v3",
        "vmnor.mm v1, v2, v3", "vmxnor.mm v1, v2, v3",
        "vmpopc.m a0, v8", "vmpopc.m a0, v8, v0.t",
        "vmfirst.m a1, v9", "vmfirst.m a1, v9, v0.t",
        "vmsbf.m v2, v4", "vmsbf.m v2, v4, v0.t", "vmsof.m v2, v4",
        "vmsif.m v2, v4", "viota.m v6, v12", "viota.m v6, v12, v0.t",
        "vid.v v7", "vid.v v7, v0.t",
    ]:
        v(asm, M_NT)

    for asm in [
        "vslideup.vx v4, v8, a0", "vslideup.vi v4, v8, 12",
        "vslideup.vx v4, v8, a0, v0.t",
        "vslidedown.vx v4, v8, a1", "vslidedown.vi v4, v8, 1",
        "vslide1up.vx v6, v12, a2", "vslide1down.vx v6, v12, a3",
        "vrgather.vv v8, v16, v24", "vrgather.vx v8, v16, a4",
        "vrgather.vi v8, v16, 0", "vrgather.vv v8, v16, v24, v0.t",
        "vcompress.vm v4, v8, v12",
        "vmerge.vvm v2, v4, v6, v0", "vmerge.vxm v2, v4, a5, v0",
        "vmerge.vim v2, v4, -7, v0",
        "vmv.v.v v9, v18", "vmv.v.x v9, a6", "vmv.v.i v9, -16",
        "vfmerge.vfm v3, v6, fa0, v0", "vfmv.v.f v3, fa1",
        "vext.x.v a0, v8, a1", "vext.x.v zero, v8, zero",
        "vmv.s.x v5, a2", "vfmv.f.s fa3, v10", "vfmv.s.f v5, fa4",
    ]:
        v(asm, O_NT)

    for asm in [
        "vlb.v v4, (a0)", "vlbu.v v4, (a0)", "vlh.v v4, (a1)", "vlhu.v v4, (a1)",
        "vlw.v v4, (a2)", "vlwu.v v4, (a2)", "vle.v v4, (a3)",
        "vle.v v4, (a3), v0.t", "vlb.v v4, (a0), v0.t",
        "vlbff.v v8, (s0)", "vlhuff.v v8, (s0)", "vleff.v v8, (s1)",
        "vleff.v v8, (s1), v0.t",
        "vsb.v v4, (a0)", "vsh.v v4, (a1)", "vsw.v v4, (a2)", "vse.v v4, (a3)",
        "vse.v v4, (a3), v0.t",
        "vlseg2e.v v2, (a4)", "vlseg3w.v v3, (a4)", "vlseg8b.v v0, (a5)",
        "vlseg2hu.v v6, (a5)", "vlseg4eff.v v8, (a6)",
        "vsseg2e.v v2, (a4)", "vsseg5b.v v5, (a7)",
    ]:
        v(asm, M_U)

    for asm in [
        "vlsb.v v4, (a0), t0", "vlsbu.v v4, (a0), t1", "vlsh.v v4, (a1), t2",
        "vlshu.v v4, (a1), t3", "vlsw.v v4, (a2), t4", "vlswu.v v4, (a2), t5",
        "vlse.v v4, (a3), t6", "vlse.v v4, (a3), t6, v0.t",
        "vssb.v v4, (a0), s2", "vssh.v v4, (a1), s3", "vssw.v v4, (a2), s4",
        "vsse.v v4, (a3), s5", "vsse.v v4, (a3), s5, v0.t",
        "vlsseg3e.v v6, (s6), a0", "vlsseg2bu.v v8, (s7), a1",
        "vssseg4w.v v12, (s8), a2",
    ]:
        v(asm, M_S)

    for asm in [
        "vlxb.v v4, (a0), v8", "vlxbu.v v4, (a0), v8", "vlxh.v v4, (a1), v9",
        "vlxhu.v v4, (a1), v9", "vlxw.v v4, (a2), v10", "vlxwu.v v4, (a2), v10",
        "vlxe.v v4, (a3), v11", "vlxe.v v4, (a3), v11, v0.t",
        "vsxb.v v4, (a0), v12", "vsxh.v v4, (a1), v13", "vsxw.v v4, (a2), v14",
        "vsxe.v v4, (a3), v15", "vsxe.v v4, (a3), v15, v0.t",
        "vsuxb.v v4, (a0), v16", "vsuxh.v v4, (a1), v17", "vsuxw.v v4, (a2), v18",
        "vsuxe.v v4, (a3), v19",
        "vlxseg2e.v v6, (s9), v20", "vsxseg3w.v v9, (s10), v21",
    ]:
        v(asm, M_X)

    for asm in [
        "vsetvli a0, a1, e8, m1", "vsetvli a0, a1, e16, m2",
        "vsetvli t0, t1, e32, m4", "vsetvli s0, s1, e64, m8",
        "vsetvli zero, a2, e32, m1", "vsetvli a3, zero, e64, m1",
        "vsetvl a0, a1, a2", "vsetvl zero, t0, t1",
    ]:
        cfg(asm)

    return rows


# decode is classification-only for these; labels are (word, type, mnemonic)
RAW_ROWS = [
    (0xFFD00013, "MARKER", "li"),
    (0xFFC00013, "MARKER", "li"),
    (0xFFE00013, "MARKER", "li"),
    (0xFFF00013, "MARKER", "li"),
    (0x12345037, "MARKER", "lui"),
    (0x00B56033, "MARKER", "or"),
    (0x00000013, "SCALAR", "addi"),
    (0x00A282B3, "SCALAR", "add"),
    (0xFE0208E3, "SCALAR", "beq"),
    (0x0000100F, "SCALAR", "fence.i"),
]


def check_rows(rows) -> list[str]:
    lines = []
    failures = 0
    seen = set()
    for asm, typ, major, minor in rows:
        word = asm_0_7_1(asm)
        if word in seen:
            raise SystemExit(f"duplicate corpus word {word:08x} for {asm!r}")
        seen.add(word)
        mnem = asm.split()[0]
        try:
            d = decode(word, SpecVersion.V0_7_1, pc=0x1000, record_scalar=True)
        except Exception as exc:  # noqa: BLE001
            print(f"FAIL {word:08x} {asm!r}: decode raised {exc}")
            failures += 1
            continue
        got = (d.instr_type.name, d.v_major.name, d.v_minor.name, d.mnemonic, d.asm_string)
        want = (typ, major, minor, mnem, asm)
        if got != want:
            print(f"FAIL {word:08x}\n  want {want}\n  got  {got}")
            failures += 1
            continue
        lines.append(f"{word:08x}|{typ}|{major}|{minor}|{mnem}|{asm}")
    if failures:
        raise SystemExit(f"{failures} corpus mismatches")
    return lines


def check_raw_rows() -> list[str]:
    lines = []
    for word, typ, mnem in RAW_ROWS:
        d = decode(word, SpecVersion.V0_7_1, record_scalar=True)
        if d.instr_type.name != typ or d.mnemonic != mnem:
            raise SystemExit(
                f"FAIL raw {word:08x}: want {typ}/{mnem}, got {d.instr_type.name}/{d.mnemonic}")
        lines.append(f"{word:08x}|{typ}|{d.v_major.name}|{d.v_minor.name}|{mnem}|{d.asm_string}")
    return lines


def check_rejections() -> None:
    from rave.isa import UndecodableEncoding

    # Zvamo and reserved layouts must be reported, not guessed at.
    amo = (0x00 << 27) | (1 << 26) | (8 << 20) | (5 << 15) | (6 << 12) | (4 << 7) | 0x2F
    bad = [
        amo,
        opv(0x01, 1, 2, 3, F3["fvf"], 1),  # reduction has no vf form
        (0b001 << 26) | (1 << 25) | (5 << 15) | (0 << 12) | (4 << 7) | 0b0000111,
        (0b100100 << 26) | (1 << 25) | (2 << 20) | (9 << 15) | (7 << 12) | (4 << 7) | OP_V,
    ]
    for word in bad:
        try:
            decode(word, SpecVersion.V0_7_1)
        except UndecodableEncoding:
            continue
        raise SystemExit(f"FAIL {word:08x}: expected UndecodableEncoding")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="tests/data/corpus_v0_7_1.txt")
    args = ap.parse_args()

    lines = check_rows(corpus())
    lines += check_raw_rows()
    check_rejections()

    out = pathlib.Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("# word|type|major|minor|mnemonic|asm\n" + "\n".join(lines) + "\n")
    print(f"wrote {len(lines)} corpus rows to {out}")


if __name__ == "__main__":
    main()
