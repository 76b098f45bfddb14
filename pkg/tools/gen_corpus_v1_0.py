#!/usr/bin/env python3
"""Build the frozen v1.0 decode corpus, verified against clang.

Every line of assembly below is written from the instruction listing, fed to
clang's integrated assembler, and the resulting words are decoded by the
package.  The tool fails loudly on any mismatch in classification, mnemonic,
or operand text (the package's disassembly must reassemble to the identical
word).  On success it freezes word + expectations to tests/data/.

Usage: python3 tools/gen_corpus_v1_0.py [--march rv64gcv] [--out PATH]
"""

from __future__ import annotations

import argparse
import pathlib
import random
import subprocess
import sys
import tempfile

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from rave.isa import InstrType, SpecVersion, UndecodableEncoding, decode  # noqa: E402

SCALAR = ("SCALAR", "OTHER", "NOTYPE")
MARKER = ("MARKER", "OTHER", "NOTYPE")
VSET = ("VSETVL", "OTHER", "NOTYPE")


def AI(asm):
    return (asm, "VECTOR", "ARITH", "INT")


def AF(asm):
    return (asm, "VECTOR", "ARITH", "FP")


def MU(asm):
    return (asm, "VECTOR", "MEMORY", "UNIT")


def MS(asm):
    return (asm, "VECTOR", "MEMORY", "STRIDE")


def MI(asm):
    return (asm, "VECTOR", "MEMORY", "INDEX")


def MK(asm):
    return (asm, "VECTOR", "MASK", "NOTYPE")


def OT(asm):
    return (asm, "VECTOR", "OTHER", "NOTYPE")


def corpus() -> list[tuple[str, str, str, str]]:
    rows: list[tuple[str, str, str, str]] = []

    # integer arithmetic, all three operand forms where they exist
    for name in ("vadd", "vand", "vor", "vxor", "vsaddu", "vsadd"):
        rows += [
            AI(f"{name}.vv v2, v4, v6"),
            AI(f"{name}.vx v2, v4, a1"),
            AI(f"{name}.vi v2, v4, 7"),
        ]
    rows += [
        AI("vadd.vi v2, v4, -9"),
        AI("vadd.vv v2, v4, v6, v0.t"),
        AI("vadd.vx v2, v4, a1, v0.t"),
        AI("vadd.vi v2, v4, 7, v0.t"),
    ]
    for name in ("vsub", "vminu", "vmin", "vmaxu", "vmax", "vssubu", "vssub"):
        rows += [AI(f"{name}.vv v8, v10, v12"), AI(f"{name}.vx v8, v10, a3")]
    rows += [AI("vrsub.vx v2, v4, a1"), AI("vrsub.vi v2, v4, -3")]
    for name in ("vsll", "vsrl", "vsra", "vssrl", "vssra"):
        rows += [
            AI(f"{name}.vv v2, v4, v6"),
            AI(f"{name}.vx v2, v4, a1"),
            AI(f"{name}.vi v2, v4, 31"),
        ]
    for name in ("vnsrl", "vnsra", "vnclipu", "vnclip"):
        rows += [
            AI(f"{name}.wv v2, v4, v6"),
            AI(f"{name}.wx v2, v4, a1"),
            AI(f"{name}.wi v2, v4, 15"),
        ]
    for name in ("vdivu", "vdiv", "vremu", "vrem", "vmulhu", "vmul", "vmulhsu", "vmulh"):
        rows += [AI(f"{name}.vv v2, v4, v6"), AI(f"{name}.vx v2, v4, a1")]
    for name in ("vmadd", "vnmsub", "vmacc", "vnmsac"):
        rows += [AI(f"{name}.vv v2, v4, v6"), AI(f"{name}.vx v2, a1, v6")]
    rows += [AI("vmacc.vv v2, v4, v6, v0.t")]
    for name in ("vwaddu", "vwadd", "vwsubu", "vwsub"):
        rows += [
            AI(f"{name}.vv v8, v12, v14"),
            AI(f"{name}.vx v8, v12, a5"),
            AI(f"{name}.wv v8, v12, v14"),
            AI(f"{name}.wx v8, v12, a5"),
        ]
    for name in ("vwmulu", "vwmulsu", "vwmul"):
        rows += [AI(f"{name}.vv v8, v12, v14"), AI(f"{name}.vx v8, v12, a5")]
    for name in ("vwmaccu", "vwmacc", "vwmaccsu"):
        rows += [AI(f"{name}.vv v8, v12, v14"), AI(f"{name}.vx v8, a5, v14")]
    rows += [AI("vwmaccus.vx v8, a5, v14")]
    for name in ("vaaddu", "vaadd", "vasubu", "vasub"):
        rows += [AI(f"{name}.vv v2, v4, v6"), AI(f"{name}.vx v2, v4, a1")]
    rows += [AI("vsmul.vv v2, v4, v6"), AI("vsmul.vx v2, v4, a1")]
    # compares write masks but are arithmetic work
    for name in ("vmseq", "vmsne", "vmsleu", "vmsle"):
        rows += [
            AI(f"{name}.vv v2, v4, v6"),
            AI(f"{name}.vx v2, v4, a1"),
            AI(f"{name}.vi v2, v4, 5"),
        ]
    for name in ("vmsltu", "vmslt"):
        rows += [AI(f"{name}.vv v2, v4, v6"), AI(f"{name}.vx v2, v4, a1")]
    for name in ("vmsgtu", "vmsgt"):
        rows += [AI(f"{name}.vx v2, v4, a1"), AI(f"{name}.vi v2, v4, 5")]
    rows += [AI("vmseq.vv v2, v4, v6, v0.t")]
    # carries
    rows += [
        AI("vadc.vvm v2, v4, v6, v0"),
        AI("vadc.vxm v2, v4, a1, v0"),
        AI("vadc.vim v2, v4, 9, v0"),
        AI("vmadc.vvm v2, v4, v6, v0"),
        AI("vmadc.vxm v2, v4, a1, v0"),
        AI("vmadc.vim v2, v4, 9, v0"),
        AI("vmadc.vv v2, v4, v6"),
        AI("vmadc.vx v2, v4, a1"),
        AI("vmadc.vi v2, v4, 9"),
        AI("vsbc.vvm v2, v4, v6, v0"),
        AI("vsbc.vxm v2, v4, a1, v0"),
        AI("vmsbc.vvm v2, v4, v6, v0"),
        AI("vmsbc.vxm v2, v4, a1, v0"),
        AI("vmsbc.vv v2, v4, v6"),
        AI("vmsbc.vx v2, v4, a1"),
    ]
    # sign/zero extension
    for name in ("vzext", "vsext"):
        for f in (2, 4, 8):
            rows += [AI(f"{name}.vf{f} v2, v4")]
    rows += [AI("vzext.vf2 v2, v4, v0.t")]
    # reductions
    for name in ("vredsum", "vredand", "vredor", "vredxor",
                 "vredminu", "vredmin", "vredmaxu", "vredmax",
                 "vwredsumu", "vwredsum"):
        rows += [AI(f"{name}.vs v2, v4, v6")]
    rows += [AI("vredsum.vs v2, v4, v6, v0.t")]

    # FP arithmetic
    for name in ("vfadd", "vfsub", "vfmul", "vfdiv", "vfmin", "vfmax",
                 "vfsgnj", "vfsgnjn", "vfsgnjx"):
        rows += [AF(f"{name}.vv v2, v4, v6"), AF(f"{name}.vf v2, v4, fa1")]
    rows += [AF("vfadd.vv v2, v4, v6, v0.t")]
    rows += [AF("vfrsub.vf v2, v4, fa1"), AF("vfrdiv.vf v2, v4, fa1")]
    for name in ("vfmadd", "vfnmadd", "vfmsub", "vfnmsub",
                 "vfmacc", "vfnmacc", "vfmsac", "vfnmsac"):
        rows += [AF(f"{name}.vv v2, v4, v6"), AF(f"{name}.vf v2, fa1, v6")]
    for name in ("vfwadd", "vfwsub"):
        rows += [
            AF(f"{name}.vv v8, v12, v14"),
            AF(f"{name}.vf v8, v12, fa1"),
            AF(f"{name}.wv v8, v12, v14"),
            AF(f"{name}.wf v8, v12, fa1"),
        ]
    rows += [AF("vfwmul.vv v8, v12, v14"), AF("vfwmul.vf v8, v12, fa1")]
    for name in ("vfwmacc", "vfwnmacc", "vfwmsac", "vfwnmsac"):
        rows += [AF(f"{name}.vv v8, fa1 ,v14".replace("fa1 ,", "v12, ")),
                 AF(f"{name}.vf v8, fa1, v14")]
    for name in ("vmfeq", "vmfle", "vmflt", "vmfne"):
        rows += [AF(f"{name}.vv v2, v4, v6"), AF(f"{name}.vf v2, v4, fa1")]
    rows += [AF("vmfgt.vf v2, v4, fa1"), AF("vmfge.vf v2, v4, fa1")]
    for name in ("vfredusum", "vfredosum", "vfredmin", "vfredmax",
                 "vfwredusum", "vfwredosum"):
        rows += [AF(f"{name}.vs v2, v4, v6")]
    for cvt in ("vfcvt.xu.f.v", "vfcvt.x.f.v", "vfcvt.f.xu.v", "vfcvt.f.x.v",
                "vfcvt.rtz.xu.f.v", "vfcvt.rtz.x.f.v"):
        rows += [AF(f"{cvt} v2, v4")]
    for cvt in ("vfwcvt.xu.f.v", "vfwcvt.x.f.v", "vfwcvt.f.xu.v", "vfwcvt.f.x.v",
                "vfwcvt.f.f.v", "vfwcvt.rtz.xu.f.v", "vfwcvt.rtz.x.f.v"):
        rows += [AF(f"{cvt} v8, v12")]
    for cvt in ("vfncvt.xu.f.w", "vfncvt.x.f.w", "vfncvt.f.xu.w", "vfncvt.f.x.w",
                "vfncvt.f.f.w", "vfncvt.rod.f.f.w", "vfncvt.rtz.xu.f.w",
                "vfncvt.rtz.x.f.w"):
        rows += [AF(f"{cvt} v2, v4")]
    rows += [
        AF("vfsqrt.v v2, v4"),
        AF("vfrsqrt7.v v2, v4"),
        AF("vfrec7.v v2, v4"),
        AF("vfclass.v v2, v4"),
        AF("vfsqrt.v v2, v4, v0.t"),
    ]

    # mask work
    for name in ("vmandn", "vmand", "vmor", "vmxor", "vmorn",
                 "vmnand", "vmnor", "vmxnor"):
        rows += [MK(f"{name}.mm v2, v4, v6")]
    rows += [
        MK("vcpop.m a1, v4"),
        MK("vcpop.m a1, v4, v0.t"),
        MK("vfirst.m a1, v4"),
        MK("vmsbf.m v2, v4"),
        MK("vmsif.m v2, v4"),
        MK("vmsof.m v2, v4"),
        MK("viota.m v2, v4"),
        MK("vid.v v2"),
        MK("vid.v v2, v0.t"),
        MK("viota.m v2, v4, v0.t"),
    ]

    # data movement and permutation
    rows += [
        OT("vmv.v.v v2, v4"),
        OT("vmv.v.x v2, a1"),
        OT("vmv.v.i v2, -7"),
        OT("vmerge.vvm v2, v4, v6, v0"),
        OT("vmerge.vxm v2, v4, a1, v0"),
        OT("vmerge.vim v2, v4, 11, v0"),
        OT("vfmv.v.f v2, fa1"),
        OT("vfmerge.vfm v2, v4, fa1, v0"),
        OT("vmv.x.s a1, v4"),
        OT("vmv.s.x v2, a1"),
        OT("vfmv.f.s fa1, v4"),
        OT("vfmv.s.f v2, fa1"),
        OT("vslideup.vx v2, v4, a1"),
        OT("vslideup.vi v2, v4, 19"),
        OT("vslidedown.vx v2, v4, a1"),
        OT("vslidedown.vi v2, v4, 19"),
        OT("vslide1up.vx v2, v4, a1"),
        OT("vslide1down.vx v2, v4, a1"),
        OT("vfslide1up.vf v2, v4, fa1"),
        OT("vfslide1down.vf v2, v4, fa1"),
        OT("vrgather.vv v2, v4, v6"),
        OT("vrgather.vx v2, v4, a1"),
        OT("vrgather.vi v2, v4, 19"),
        OT("vrgatherei16.vv v2, v4, v6"),
        OT("vrgather.vv v2, v4, v6, v0.t"),
        OT("vcompress.vm v2, v4, v6"),
        OT("vmv1r.v v2, v4"),
        OT("vmv2r.v v2, v4"),
        OT("vmv4r.v v4, v8"),
        OT("vmv8r.v v8, v16"),
        OT("vslideup.vx v2, v4, a1, v0.t"),
    ]

    # memory, all modes and widths
    for eew in (8, 16, 32, 64):
        rows += [
            MU(f"vle{eew}.v v8, (a0)"),
            MU(f"vle{eew}.v v8, (a0), v0.t"),
            MU(f"vse{eew}.v v8, (a0)"),
            MU(f"vle{eew}ff.v v8, (a0)"),
            MS(f"vlse{eew}.v v8, (a0), a1"),
            MS(f"vsse{eew}.v v8, (a0), a1"),
            MI(f"vluxei{eew}.v v8, (a0), v4"),
            MI(f"vloxei{eew}.v v8, (a0), v4"),
            MI(f"vsuxei{eew}.v v8, (a0), v4"),
            MI(f"vsoxei{eew}.v v8, (a0), v4"),
        ]
    rows += [
        MU("vse32.v v8, (a0), v0.t"),
        MS("vlse32.v v8, (a0), a1, v0.t"),
        MI("vloxei8.v v8, (a0), v4, v0.t"),
        MU("vlm.v v3, (a0)"),
        MU("vsm.v v3, (a0)"),
        MU("vl1re8.v v8, (a0)"),
        MU("vl2re16.v v8, (a0)"),
        MU("vl4re32.v v8, (a0)"),
        MU("vl8re64.v v8, (a0)"),
        MU("vs1r.v v8, (a0)"),
        MU("vs2r.v v8, (a0)"),
        MU("vs4r.v v8, (a0)"),
        MU("vs8r.v v8, (a0)"),
        MU("vlseg2e32.v v8, (a0)"),
        MU("vlseg4e8.v v8, (a0)"),
        MU("vsseg2e32.v v8, (a0)"),
        MU("vlseg2e32ff.v v8, (a0)"),
        MS("vlsseg3e16.v v8, (a0), a1"),
        MS("vssseg2e64.v v8, (a0), a1"),
        MI("vluxseg2ei32.v v8, (a0), v4"),
        MI("vsoxseg2ei64.v v8, (a0), v4"),
    ]

    # configuration
    rows += [
        (f"vsetvli t0, a0, {vt}",) + VSET
        for vt in (
            "e8, m1, ta, ma",
            "e16, m2, tu, ma",
            "e32, m4, ta, mu",
            "e64, m8, tu, mu",
            "e64, m1, ta, ma",
            "e32, mf2, ta, ma",
            "e16, mf4, ta, ma",
            "e8, mf8, ta, ma",
        )
    ]
    rows += [
        ("vsetvli a1, zero, e64, m1, ta, ma",) + VSET,
        ("vsetvli zero, zero, e64, m1, ta, ma",) + VSET,
        ("vsetvli zero, a0, e32, m2, ta, ma",) + VSET,
        ("vsetivli t0, 16, e64, m1, ta, ma",) + VSET,
        ("vsetivli a1, 31, e8, mf2, ta, mu",) + VSET,
        ("vsetvl t0, a0, a1",) + VSET,
        ("vsetvl zero, a0, a1",) + VSET,
    ]

    # markers
    rows += [
        ("li x0, -3",) + MARKER,
        ("li x0, -4",) + MARKER,
        ("li x0, -2",) + MARKER,
        ("li x0, -1",) + MARKER,
        ("lui x0, 1000",) + MARKER,
        ("lui x0, 101",) + MARKER,
        ("or x0, x10, x11",) + MARKER,
        ("or x0, x20, x21",) + MARKER,
    ]

    # plain scalars that must never classify as vector or marker
    rows += [
        ("addi x0, x0, 0",) + SCALAR,
        ("addi x0, x0, 5",) + SCALAR,
        ("addi x0, x1, -1",) + SCALAR,
        ("addi a0, a1, -256",) + SCALAR,
        ("or a0, a1, a2",) + SCALAR,
        ("lui a0, 1000",) + SCALAR,
        ("xor x0, a0, a1",) + SCALAR,
        ("fld fa0, 8(a0)",) + SCALAR,
        ("flw fa0, 8(a0)",) + SCALAR,
        ("fsd fa0, 8(a0)",) + SCALAR,
        ("fsw fa0, 8(a0)",) + SCALAR,
        ("ld a0, 8(a1)",) + SCALAR,
        ("sd a0, 8(a1)",) + SCALAR,
        ("mul a0, a1, a2",) + SCALAR,
        ("jalr ra, 8(a0)",) + SCALAR,
        ("auipc a0, 4096",) + SCALAR,
        ("csrrs a0, 0xc00, x0",) + SCALAR,
        ("amoadd.w a0, a1, (a2)",) + SCALAR,
        ("lr.d a0, (a2)",) + SCALAR,
        ("sc.w.aqrl a0, a1, (a2)",) + SCALAR,
        ("fadd.d fa0, fa1, fa2",) + SCALAR,
        ("fsub.s fa0, fa1, fa2, rtz",) + SCALAR,
        ("fsqrt.d fa0, fa1",) + SCALAR,
        ("fsgnjx.s fa0, fa1, fa2",) + SCALAR,
        ("fmin.d fa0, fa1, fa2",) + SCALAR,
        ("feq.d a0, fa1, fa2",) + SCALAR,
        ("fclass.d a0, fa1",) + SCALAR,
        ("fmv.x.d a0, fa1",) + SCALAR,
        ("fmv.d.x fa1, a0",) + SCALAR,
        ("fmadd.d fa0, fa1, fa2, fa3",) + SCALAR,
        ("fcvt.d.l fa0, a1",) + SCALAR,
        ("fcvt.w.s a0, fa1, rtz",) + SCALAR,
        ("fcvt.d.s fa0, fa1",) + SCALAR,
        ("fcvt.s.d fa0, fa1",) + SCALAR,
        ("slli a0, a1, 33",) + SCALAR,
        ("srai a0, a1, 12",) + SCALAR,
        ("addiw a0, a1, 9",) + SCALAR,
        ("sraw a0, a1, a2",) + SCALAR,
        ("remu a0, a1, a2",) + SCALAR,
        ("ecall",) + SCALAR,
        ("ebreak",) + SCALAR,
        ("fence",) + SCALAR,
        ("fence.i",) + SCALAR,
        ("sub x0, a0, a1",) + SCALAR,  # dead x0 write that is not a marker
        ("and x0, a0, a1",) + SCALAR,
    ]
    return rows


# pc-relative flow control cannot assemble in isolation; each snippet's first
# word is the instruction under test and the rest is label scaffolding
def pcrel_corpus() -> list[tuple[str, str, str, str, str]]:
    return [
        ("beq a0, a1, 1f\nnop\n1:", "beq a0, a1, .+8") + SCALAR,
        ("bne a0, a1, 1f\nnop\n1:", "bne a0, a1, .+8") + SCALAR,
        ("blt a0, a1, 1f\nnop\nnop\n1:", "blt a0, a1, .+12") + SCALAR,
        ("bgeu a0, a1, 1f\n1:", "bgeu a0, a1, .+4") + SCALAR,
        ("jal ra, 1f\nnop\n1:", "jal ra, .+8") + SCALAR,
        ("jal x0, 1f\nnop\nnop\nnop\n1:", "jal zero, .+16") + SCALAR,
    ]


def compressed_corpus() -> list[tuple[str, str, str, str]]:
    rows = [
        ("c.addi sp, -32",) + SCALAR,
        ("c.addi a0, 31",) + SCALAR,
        ("c.addiw a0, -1",) + SCALAR,
        ("c.li a0, -9",) + SCALAR,
        ("c.lui a1, 5",) + SCALAR,
        ("c.addi16sp sp, 496",) + SCALAR,
        ("c.addi16sp sp, -512",) + SCALAR,
        ("c.addi4spn a0, sp, 1020",) + SCALAR,
        ("c.lw a0, 4(a1)",) + SCALAR,
        ("c.ld a0, 8(a1)",) + SCALAR,
        ("c.sw a0, 4(a1)",) + SCALAR,
        ("c.sd a0, 8(a1)",) + SCALAR,
        ("c.fld fa0, 8(a1)",) + SCALAR,
        ("c.fsd fa0, 8(a1)",) + SCALAR,
        ("c.lwsp a0, 4(sp)",) + SCALAR,
        ("c.ldsp a0, 8(sp)",) + SCALAR,
        ("c.swsp a0, 4(sp)",) + SCALAR,
        ("c.sdsp a0, 8(sp)",) + SCALAR,
        ("c.fldsp fa0, 8(sp)",) + SCALAR,
        ("c.fsdsp fa0, 8(sp)",) + SCALAR,
        ("c.srli a0, 5",) + SCALAR,
        ("c.srai a0, 33",) + SCALAR,
        ("c.andi a0, -5",) + SCALAR,
        ("c.slli a0, 63",) + SCALAR,
        ("c.mv a0, a1",) + SCALAR,
        ("c.add a0, a1",) + SCALAR,
        ("c.sub a0, a1",) + SCALAR,
        ("c.xor a0, a1",) + SCALAR,
        ("c.or a0, a1",) + SCALAR,
        ("c.and a0, a1",) + SCALAR,
        ("c.subw a0, a1",) + SCALAR,
        ("c.addw a0, a1",) + SCALAR,
        ("c.jr a0",) + SCALAR,
        ("c.jalr a0",) + SCALAR,
        ("c.nop",) + SCALAR,
        ("c.ebreak",) + SCALAR,
    ]
    return rows


def compressed_pcrel_corpus() -> list[tuple[str, str, str, str, str]]:
    return [
        ("c.j 1f\nc.nop\n1:", "c.j .+4") + SCALAR,
        ("c.beqz a0, 1f\nc.nop\nc.nop\n1:", "c.beqz a0, .+6") + SCALAR,
        ("c.bnez a0, 1f\n1:", "c.bnez a0, .+2") + SCALAR,
    ]


def _run_as(lines: list[str], march: str, rvc: bool) -> subprocess.CompletedProcess:
    prefix = "" if rvc else ".option norvc\n"
    src = prefix + ".text\n" + "\n".join(lines) + "\n"
    with tempfile.TemporaryDirectory() as td:
        asm = pathlib.Path(td) / "c.s"
        obj = pathlib.Path(td) / "c.o"
        asm.write_text(src)
        proc = subprocess.run(
            ["clang", "--target=riscv64", f"-march={march}", "-mno-relax",
             "-c", str(asm), "-o", str(obj)],
            capture_output=True,
            text=True,
        )
        if proc.returncode != 0:
            return proc
        dump = subprocess.run(
            ["readelf", "-x", ".text", str(obj)],
            check=True,
            capture_output=True,
            text=True,
        )
        return subprocess.CompletedProcess(proc.args, 0, dump.stdout, proc.stderr)


def assemble(lines: list[str], march: str, rvc: bool = False) -> list[int]:
    proc = _run_as(lines, march, rvc)
    if proc.returncode != 0:
        sys.stderr.write(proc.stderr)
        raise SystemExit(1)
    dump = proc.stdout
    data = bytearray()
    for line in dump.splitlines():
        parts = line.split()
        if len(parts) >= 2 and parts[0].startswith("0x"):
            for chunk in parts[1:5]:
                if all(c in "0123456789abcdef" for c in chunk):
                    data.extend(bytes.fromhex(chunk))
    words = []
    i = 0
    while i < len(data):
        half = int.from_bytes(data[i : i + 2], "little")
        if (half & 0x3) == 0x3:
            words.append(int.from_bytes(data[i : i + 4], "little"))
            i += 4
        else:
            words.append(half)
            i += 2
    return words


def assemble_tolerant(
    pairs: list[tuple[int, str]], march: str, rvc: bool = False
) -> list[tuple[int, str, int]]:
    """Assemble, dropping lines the assembler rejects for operand
    constraints the decoder does not (and should not) enforce.

    Returns (original_word, asm, reassembled_word) for every kept line.
    """
    kept = list(pairs)
    header = 1 if rvc else 2
    for _ in range(60):
        if not kept:
            return []
        proc = _run_as([a for _, a in kept], march, rvc)
        if proc.returncode == 0:
            words = assemble([a for _, a in kept], march, rvc)
            return [(w, a, g) for (w, a), g in zip(kept, words)]
        bad = set()
        for line in proc.stderr.splitlines():
            parts = line.split(":")
            if len(parts) > 2 and parts[1].isdigit() and "error" in line:
                bad.add(int(parts[1]) - header - 1)
        if not bad:
            sys.stderr.write(proc.stderr)
            raise SystemExit(1)
        kept = [p for i, p in enumerate(kept) if i not in bad]
    raise SystemExit("assembler rejected too many batches")


def check_rows(
    rows: list[tuple[str, str, str, str]],
    words: list[int],
    out_lines: list[str],
    reasm: list[tuple[int, str]],
) -> int:
    failures = 0
    for (asm, ity, maj, mnr), word in zip(rows, words):
        d = decode(word, SpecVersion.V1_0, record_scalar=True)
        got = (d.instr_type.name, d.v_major.name, d.v_minor.name)
        if got != (ity, maj, mnr):
            print(f"CLASS   {asm!r} -> {word:#010x}: want {(ity, maj, mnr)} got {got}")
            failures += 1
            continue
        if d.instr_type in (InstrType.VECTOR, InstrType.VSETVL):
            want_m = asm.split()[0]
            if d.mnemonic != want_m:
                print(f"MNEM    {asm!r}: want {want_m} got {d.mnemonic}")
                failures += 1
                continue
        if ", ." not in d.asm_string and " ." not in d.asm_string:
            reasm.append((word, d.asm_string))
        out_lines.append(f"{word:08x}|{ity}|{maj}|{mnr}|{d.mnemonic}|{d.asm_string}")
    return failures


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--march", default="rv64gcv")
    ap.add_argument(
        "--out",
        default=str(pathlib.Path(__file__).resolve().parent.parent
                    / "tests" / "data" / "corpus_v1_0.txt"),
    )
    ap.add_argument("--fuzz", type=int, default=20000)
    args = ap.parse_args()

    failures = 0
    out_lines = ["# word|type|major|minor|mnemonic|asm"]
    reasm: list[tuple[int, str]] = []

    rows = corpus()
    words = assemble([r[0] for r in rows], args.march)
    if len(words) != len(rows):
        print(f"assembled {len(words)} words for {len(rows)} lines", file=sys.stderr)
        return 1
    failures += check_rows(rows, words, out_lines, reasm)

    crows = compressed_corpus()
    cwords = assemble([r[0] for r in crows], args.march, rvc=True)
    if len(cwords) != len(crows):
        print(f"assembled {len(cwords)} halfwords for {len(crows)} lines", file=sys.stderr)
        return 1
    failures += check_rows(crows, cwords, out_lines, reasm)

    for snippet, want_asm, ity, maj, mnr in pcrel_corpus():
        word = assemble([snippet], args.march)[0]
        d = decode(word, SpecVersion.V1_0, record_scalar=True)
        if (d.instr_type.name, d.v_major.name, d.v_minor.name) != (ity, maj, mnr):
            print(f"CLASS   {snippet!r}: got {d.instr_type.name}")
            failures += 1
            continue
        if d.asm_string != want_asm:
            print(f"PCREL   {word:#010x}: want {want_asm!r} got {d.asm_string!r}")
            failures += 1
            continue
        out_lines.append(f"{word:08x}|{ity}|{maj}|{mnr}|{d.mnemonic}|{d.asm_string}")
    for snippet, want_asm, ity, maj, mnr in compressed_pcrel_corpus():
        word = assemble([snippet], args.march, rvc=True)[0]
        d = decode(word, SpecVersion.V1_0, record_scalar=True)
        if d.asm_string != want_asm:
            print(f"PCREL   {word:#06x}: want {want_asm!r} got {d.asm_string!r}")
            failures += 1
            continue
        out_lines.append(f"{word:04x}|{ity}|{maj}|{mnr}|{d.mnemonic}|{d.asm_string}")

    # the package's own rendering must reassemble to the identical words
    wide = [(w, a) for w, a in reasm if (w & 3) == 3]
    narrow = [(w, a) for w, a in reasm if (w & 3) != 3]
    for batch, rvc in ((wide, False), (narrow, True)):
        words2 = assemble([a for _, a in batch], args.march, rvc=rvc)
        for (w1, asm), w2 in zip(batch, words2):
            if w1 != w2:
                print(f"RENDER  {asm!r} ({w1:#010x}): reassembles to {w2:#010x}")
                failures += 1

    rng = random.Random(7)
    fuzz_asm: list[tuple[int, str]] = []
    for _ in range(args.fuzz):
        op = rng.choice((0x57, 0x07, 0x27))
        word = (rng.getrandbits(25) << 7) | op
        try:
            d = decode(word, SpecVersion.V1_0)
        except UndecodableEncoding:
            continue
        if d.instr_type in (InstrType.VECTOR, InstrType.VSETVL):
            fuzz_asm.append((word, d.asm_string))
    fuzz_results = assemble_tolerant(fuzz_asm, args.march)
    for word, asm, got in fuzz_results:
        if word != got:
            print(f"FUZZ    {word:#010x} -> {asm!r} -> {got:#010x}")
            failures += 1

    # scalar detail rendering must also reassemble into the original word
    sfuzz: list[tuple[int, str]] = []
    for _ in range(args.fuzz):
        word = rng.getrandbits(32)
        try:
            d = decode(word, SpecVersion.V1_0, record_scalar=True)
        except UndecodableEncoding:
            continue
        if d.instr_type is not InstrType.SCALAR:
            continue
        if ", ." in d.asm_string or d.asm_string.startswith("."):
            continue
        sfuzz.append((word, d.asm_string))
    sfuzz_results = assemble_tolerant(sfuzz, args.march, rvc=True)
    for word, asm, got in sfuzz_results:
        if word != got:
            print(f"SFUZZ   {word:#010x} -> {asm!r} -> {got:#010x}")
            failures += 1

    if failures:
        print(f"{failures} failures", file=sys.stderr)
        return 1

    out = pathlib.Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(out_lines) + "\n")
    print(f"wrote {len(out_lines) - 1} corpus rows to {out} "
          f"({len(fuzz_results)} vector and {len(sfuzz_results)} scalar fuzz round-trips)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
