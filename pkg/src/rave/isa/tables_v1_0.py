"""Arithmetic and memory opcode tables for RVV 1.0."""

from __future__ import annotations

from .tables import (
    UnaryGroup,
    arith_f,
    arith_i,
    expand_lanes,
    mask_op,
    other_op,
    unary,
)
from .types import VMajor, VMinor

# funct3 values inside opcode 0x57
F3_OPIVV, F3_OPFVV, F3_OPMVV, F3_OPIVI, F3_OPIVX, F3_OPFVF, F3_OPMVX, F3_CFG = range(8)

OPI = expand_lanes(
    [
        (0b000000, arith_i("vadd", "vxi")),
        (0b000010, arith_i("vsub", "vx")),
        (0b000011, arith_i("vrsub", "xi")),
        (0b000100, arith_i("vminu", "vx")),
        (0b000101, arith_i("vmin", "vx")),
        (0b000110, arith_i("vmaxu", "vx")),
        (0b000111, arith_i("vmax", "vx")),
        (0b001001, arith_i("vand", "vxi")),
        (0b001010, arith_i("vor", "vxi")),
        (0b001011, arith_i("vxor", "vxi")),
        (0b001100, other_op("vrgather", "vxi", "uimm")),
        (
            0b001110,
            {
                "v": other_op("vrgatherei16", "v"),
                "x": other_op("vslideup", "xi", "uimm"),
                "i": other_op("vslideup", "xi", "uimm"),
            },
        ),
        (0b001111, other_op("vslidedown", "xi", "uimm")),
        (0b010000, arith_i("vadc", "vxi", "carry")),
        (0b010001, arith_i("vmadc", "vxi", "mcarry")),
        (0b010010, arith_i("vsbc", "vx", "carry")),
        (0b010011, arith_i("vmsbc", "vx", "mcarry")),
        (0b010111, other_op("vmerge", "vxi", "merge")),
        (0b011000, arith_i("vmseq", "vxi", "cmp")),
        (0b011001, arith_i("vmsne", "vxi", "cmp")),
        (0b011010, arith_i("vmsltu", "vx", "cmp")),
        (0b011011, arith_i("vmslt", "vx", "cmp")),
        (0b011100, arith_i("vmsleu", "vxi", "cmp")),
        (0b011101, arith_i("vmsle", "vxi", "cmp")),
        (0b011110, arith_i("vmsgtu", "xi", "cmp")),
        (0b011111, arith_i("vmsgt", "xi", "cmp")),
        (0b100000, arith_i("vsaddu", "vxi")),
        (0b100001, arith_i("vsadd", "vxi")),
        (0b100010, arith_i("vssubu", "vx")),
        (0b100011, arith_i("vssub", "vx")),
        (0b100101, arith_i("vsll", "vxi", "uimm")),
        (
            0b100111,
            {
                "v": arith_i("vsmul", "vx"),
                "x": arith_i("vsmul", "vx"),
                "i": other_op("vmv<nr>r", "i", "whole_mv"),
            },
        ),
        (0b101000, arith_i("vsrl", "vxi", "uimm")),
        (0b101001, arith_i("vsra", "vxi", "uimm")),
        (0b101010, arith_i("vssrl", "vxi", "uimm")),
        (0b101011, arith_i("vssra", "vxi", "uimm")),
        (0b101100, arith_i("vnsrl", "vxi", "uimm", "narrow")),
        (0b101101, arith_i("vnsra", "vxi", "uimm", "narrow")),
        (0b101110, arith_i("vnclipu", "vxi", "uimm", "narrow")),
        (0b101111, arith_i("vnclip", "vxi", "uimm", "narrow")),
        (0b110000, arith_i("vwredsumu", "v", "red")),
        (0b110001, arith_i("vwredsum", "v", "red")),
    ]
)

OPM = expand_lanes(
    [
        (0b000000, arith_i("vredsum", "v", "red")),
        (0b000001, arith_i("vredand", "v", "red")),
        (0b000010, arith_i("vredor", "v", "red")),
        (0b000011, arith_i("vredxor", "v", "red")),
        (0b000100, arith_i("vredminu", "v", "red")),
        (0b000101, arith_i("vredmin", "v", "red")),
        (0b000110, arith_i("vredmaxu", "v", "red")),
        (0b000111, arith_i("vredmax", "v", "red")),
        (0b001000, arith_i("vaaddu", "vx")),
        (0b001001, arith_i("vaadd", "vx")),
        (0b001010, arith_i("vasubu", "vx")),
        (0b001011, arith_i("vasub", "vx")),
        (0b001110, other_op("vslide1up", "x")),
        (0b001111, other_op("vslide1down", "x")),
        (
            0b010000,
            {
                "v": UnaryGroup(
                    dict(
                        [
                            unary(0b00000, "vmv.x.s", VMajor.OTHER, VMinor.NOTYPE, "rd_vs2"),
                            unary(0b10000, "vcpop.m", VMajor.MASK, VMinor.NOTYPE, "rd_vs2_vm"),
                            unary(0b10001, "vfirst.m", VMajor.MASK, VMinor.NOTYPE, "rd_vs2_vm"),
                        ]
                    )
                ),
                "x": other_op("vmv.s.x", "x", "s_x"),
            },
        ),
        (
            0b010010,
            {
                "v": UnaryGroup(
                    dict(
                        [
                            unary(0b00010, "vzext.vf8", VMajor.ARITH, VMinor.INT),
                            unary(0b00011, "vsext.vf8", VMajor.ARITH, VMinor.INT),
                            unary(0b00100, "vzext.vf4", VMajor.ARITH, VMinor.INT),
                            unary(0b00101, "vsext.vf4", VMajor.ARITH, VMinor.INT),
                            unary(0b00110, "vzext.vf2", VMajor.ARITH, VMinor.INT),
                            unary(0b00111, "vsext.vf2", VMajor.ARITH, VMinor.INT),
                        ]
                    )
                )
            },
        ),
        (
            0b010100,
            {
                "v": UnaryGroup(
                    dict(
                        [
                            unary(0b00001, "vmsbf.m", VMajor.MASK, VMinor.NOTYPE),
                            unary(0b00010, "vmsof.m", VMajor.MASK, VMinor.NOTYPE),
                            unary(0b00011, "vmsif.m", VMajor.MASK, VMinor.NOTYPE),
                            unary(0b10000, "viota.m", VMajor.MASK, VMinor.NOTYPE),
                            unary(0b10001, "vid.v", VMajor.MASK, VMinor.NOTYPE, "vd_vm"),
                        ]
                    )
                )
            },
        ),
        (0b010111, other_op("vcompress", "v", "compress")),
        (0b011000, mask_op("vmandn", "v", "mask_mm")),
        (0b011001, mask_op("vmand", "v", "mask_mm")),
        (0b011010, mask_op("vmor", "v", "mask_mm")),
        (0b011011, mask_op("vmxor", "v", "mask_mm")),
        (0b011100, mask_op("vmorn", "v", "mask_mm")),
        (0b011101, mask_op("vmnand", "v", "mask_mm")),
        (0b011110, mask_op("vmnor", "v", "mask_mm")),
        (0b011111, mask_op("vmxnor", "v", "mask_mm")),
        (0b100000, arith_i("vdivu", "vx")),
        (0b100001, arith_i("vdiv", "vx")),
        (0b100010, arith_i("vremu", "vx")),
        (0b100011, arith_i("vrem", "vx")),
        (0b100100, arith_i("vmulhu", "vx")),
        (0b100101, arith_i("vmul", "vx")),
        (0b100110, arith_i("vmulhsu", "vx")),
        (0b100111, arith_i("vmulh", "vx")),
        (0b101001, arith_i("vmadd", "vx", "macc")),
        (0b101011, arith_i("vnmsub", "vx", "macc")),
        (0b101101, arith_i("vmacc", "vx", "macc")),
        (0b101111, arith_i("vnmsac", "vx", "macc")),
        (0b110000, arith_i("vwaddu", "vx")),
        (0b110001, arith_i("vwadd", "vx")),
        (0b110010, arith_i("vwsubu", "vx")),
        (0b110011, arith_i("vwsub", "vx")),
        (0b110100, arith_i("vwaddu", "vx", "wide_w")),
        (0b110101, arith_i("vwadd", "vx", "wide_w")),
        (0b110110, arith_i("vwsubu", "vx", "wide_w")),
        (0b110111, arith_i("vwsub", "vx", "wide_w")),
        (0b111000, arith_i("vwmulu", "vx")),
        (0b111010, arith_i("vwmulsu", "vx")),
        (0b111011, arith_i("vwmul", "vx")),
        (0b111100, arith_i("vwmaccu", "vx", "macc")),
        (0b111101, arith_i("vwmacc", "vx", "macc")),
        (0b111110, arith_i("vwmaccus", "x", "macc")),
        (0b111111, arith_i("vwmaccsu", "vx", "macc")),
    ]
)

_VFUNARY0 = UnaryGroup(
    dict(
        [
            unary(0b00000, "vfcvt.xu.f.v", VMajor.ARITH, VMinor.FP),
            unary(0b00001, "vfcvt.x.f.v", VMajor.ARITH, VMinor.FP),
            unary(0b00010, "vfcvt.f.xu.v", VMajor.ARITH, VMinor.FP),
            unary(0b00011, "vfcvt.f.x.v", VMajor.ARITH, VMinor.FP),
            unary(0b00110, "vfcvt.rtz.xu.f.v", VMajor.ARITH, VMinor.FP),
            unary(0b00111, "vfcvt.rtz.x.f.v", VMajor.ARITH, VMinor.FP),
            unary(0b01000, "vfwcvt.xu.f.v", VMajor.ARITH, VMinor.FP),
            unary(0b01001, "vfwcvt.x.f.v", VMajor.ARITH, VMinor.FP),
            unary(0b01010, "vfwcvt.f.xu.v", VMajor.ARITH, VMinor.FP),
            unary(0b01011, "vfwcvt.f.x.v", VMajor.ARITH, VMinor.FP),
            unary(0b01100, "vfwcvt.f.f.v", VMajor.ARITH, VMinor.FP),
            unary(0b01110, "vfwcvt.rtz.xu.f.v", VMajor.ARITH, VMinor.FP),
            unary(0b01111, "vfwcvt.rtz.x.f.v", VMajor.ARITH, VMinor.FP),
            unary(0b10000, "vfncvt.xu.f.w", VMajor.ARITH, VMinor.FP),
            unary(0b10001, "vfncvt.x.f.w", VMajor.ARITH, VMinor.FP),
            unary(0b10010, "vfncvt.f.xu.w", VMajor.ARITH, VMinor.FP),
            unary(0b10011, "vfncvt.f.x.w", VMajor.ARITH, VMinor.FP),
            unary(0b10100, "vfncvt.f.f.w", VMajor.ARITH, VMinor.FP),
            unary(0b10101, "vfncvt.rod.f.f.w", VMajor.ARITH, VMinor.FP),
            unary(0b10110, "vfncvt.rtz.xu.f.w", VMajor.ARITH, VMinor.FP),
            unary(0b10111, "vfncvt.rtz.x.f.w", VMajor.ARITH, VMinor.FP),
        ]
    )
)

_VFUNARY1 = UnaryGroup(
    dict(
        [
            unary(0b00000, "vfsqrt.v", VMajor.ARITH, VMinor.FP),
            unary(0b00100, "vfrsqrt7.v", VMajor.ARITH, VMinor.FP),
            unary(0b00101, "vfrec7.v", VMajor.ARITH, VMinor.FP),
            unary(0b10000, "vfclass.v", VMajor.ARITH, VMinor.FP),
        ]
    )
)

OPF = expand_lanes(
    [
        (0b000000, arith_f("vfadd", "vf")),
        (0b000001, arith_f("vfredusum", "v", "red")),
        (0b000010, arith_f("vfsub", "vf")),
        (0b000011, arith_f("vfredosum", "v", "red")),
        (0b000100, arith_f("vfmin", "vf")),
        (0b000101, arith_f("vfredmin", "v", "red")),
        (0b000110, arith_f("vfmax", "vf")),
        (0b000111, arith_f("vfredmax", "v", "red")),
        (0b001000, arith_f("vfsgnj", "vf")),
        (0b001001, arith_f("vfsgnjn", "vf")),
        (0b001010, arith_f("vfsgnjx", "vf")),
        (0b001110, other_op("vfslide1up", "f")),
        (0b001111, other_op("vfslide1down", "f")),
        (
            0b010000,
            {
                "v": UnaryGroup(
                    dict([unary(0b00000, "vfmv.f.s", VMajor.OTHER, VMinor.NOTYPE, "fd_vs2")])
                ),
                "f": other_op("vfmv.s.f", "f", "s_f"),
            },
        ),
        (0b010010, {"v": _VFUNARY0}),
        (0b010011, {"v": _VFUNARY1}),
        (0b010111, other_op("vfmerge", "f", "merge")),
        (0b011000, arith_f("vmfeq", "vf", "cmp")),
        (0b011001, arith_f("vmfle", "vf", "cmp")),
        (0b011011, arith_f("vmflt", "vf", "cmp")),
        (0b011100, arith_f("vmfne", "vf", "cmp")),
        (0b011101, arith_f("vmfgt", "f", "cmp")),
        (0b011111, arith_f("vmfge", "f", "cmp")),
        (0b100000, arith_f("vfdiv", "vf")),
        (0b100001, arith_f("vfrdiv", "f")),
        (0b100100, arith_f("vfmul", "vf")),
        (0b100111, arith_f("vfrsub", "f")),
        (0b101000, arith_f("vfmadd", "vf", "macc")),
        (0b101001, arith_f("vfnmadd", "vf", "macc")),
        (0b101010, arith_f("vfmsub", "vf", "macc")),
        (0b101011, arith_f("vfnmsub", "vf", "macc")),
        (0b101100, arith_f("vfmacc", "vf", "macc")),
        (0b101101, arith_f("vfnmacc", "vf", "macc")),
        (0b101110, arith_f("vfmsac", "vf", "macc")),
        (0b101111, arith_f("vfnmsac", "vf", "macc")),
        (0b110000, arith_f("vfwadd", "vf")),
        (0b110001, arith_f("vfwredusum", "v", "red")),
        (0b110010, arith_f("vfwsub", "vf")),
        (0b110011, arith_f("vfwredosum", "v", "red")),
        (0b110100, arith_f("vfwadd", "vf", "wide_w")),
        (0b110110, arith_f("vfwsub", "vf", "wide_w")),
        (0b111000, arith_f("vfwmul", "vf")),
        (0b111100, arith_f("vfwmacc", "vf", "macc")),
        (0b111101, arith_f("vfwnmacc", "vf", "macc")),
        (0b111110, arith_f("vfwmsac", "vf", "macc")),
        (0b111111, arith_f("vfwnmsac", "vf", "macc")),
    ]
)

# Vector loads/stores (opcodes 0x07/0x27): width field values that select a
# vector operation and the effective element width they encode.
MEM_WIDTH_TO_EEW = {0b000: 8, 0b101: 16, 0b110: 32, 0b111: 64}

# mop field
MOP_UNIT = 0b00
MOP_INDEXED_UNORDERED = 0b01
MOP_STRIDED = 0b10
MOP_INDEXED_ORDERED = 0b11

# lumop/sumop values inside unit-stride
LUMOP_PLAIN = 0b00000
LUMOP_WHOLE = 0b01000
LUMOP_MASK = 0b01011
LUMOP_FF = 0b10000
