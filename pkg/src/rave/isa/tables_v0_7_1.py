"""Arithmetic and memory opcode tables for RVV 0.7.1.

Differences from 1.0 that matter here: averaging ops live in the integer
lane group, widening saturating multiply-adds exist, mask population and
find-first have their own funct6 slots and the *not mask logicals carry the
long names.  Scalar-vector moves sit at funct6 0b001100/0b001101.  There are
no fractional LMUL, no whole-register ops, no vsetivli and no load/store
effective-width encodings; loads pick signed/unsigned via the mop high bit.
"""

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
        (0b001110, other_op("vslideup", "xi", "uimm")),
        (0b001111, other_op("vslidedown", "xi", "uimm")),
        (0b010000, arith_i("vadc", "vxi", "carry")),
        (0b010001, arith_i("vmadc", "vxi", "carry", "cmp")),
        (0b010010, arith_i("vsbc", "vx", "carry")),
        (0b010011, arith_i("vmsbc", "vx", "carry", "cmp")),
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
        (0b100100, arith_i("vaadd", "vxi")),
        (0b100101, arith_i("vsll", "vxi", "uimm")),
        (0b100110, arith_i("vasub", "vx")),
        (0b100111, arith_i("vsmul", "vx")),
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
        (0b111100, arith_i("vwsmaccu", "vx", "macc")),
        (0b111101, arith_i("vwsmacc", "vx", "macc")),
        (0b111110, arith_i("vwsmaccsu", "vx", "macc")),
        (0b111111, arith_i("vwsmaccus", "x", "macc")),
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
        (0b001100, other_op("vext.x.v", "v", "ext_x")),
        (0b001101, other_op("vmv.s.x", "x", "s_x")),
        (0b001110, other_op("vslide1up", "x")),
        (0b001111, other_op("vslide1down", "x")),
        (
            0b010000,
            {
                "v": UnaryGroup(
                    dict(
                        [unary(0b00000, "vmpopc.m", VMajor.MASK, VMinor.NOTYPE, "rd_vs2_vm")]
                    )
                )
            },
        ),
        (
            0b010001,
            {
                "v": UnaryGroup(
                    dict([unary(0b00000, "vmfirst.m", VMajor.MASK, VMinor.NOTYPE, "rd_vs2_vm")])
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
        (0b011000, mask_op("vmandnot", "v", "mask_mm")),
        (0b011001, mask_op("vmand", "v", "mask_mm")),
        (0b011010, mask_op("vmor", "v", "mask_mm")),
        (0b011011, mask_op("vmxor", "v", "mask_mm")),
        (0b011100, mask_op("vmornot", "v", "mask_mm")),
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
        (0b111110, arith_i("vwmaccsu", "vx", "macc")),
        (0b111111, arith_i("vwmaccus", "x", "macc")),
    ]
)

_VFUNARY0 = UnaryGroup(
    dict(
        [
            unary(0b00000, "vfcvt.xu.f.v", VMajor.ARITH, VMinor.FP),
            unary(0b00001, "vfcvt.x.f.v", VMajor.ARITH, VMinor.FP),
            unary(0b00010, "vfcvt.f.xu.v", VMajor.ARITH, VMinor.FP),
            unary(0b00011, "vfcvt.f.x.v", VMajor.ARITH, VMinor.FP),
            unary(0b01000, "vfwcvt.xu.f.v", VMajor.ARITH, VMinor.FP),
            unary(0b01001, "vfwcvt.x.f.v", VMajor.ARITH, VMinor.FP),
            unary(0b01010, "vfwcvt.f.xu.v", VMajor.ARITH, VMinor.FP),
            unary(0b01011, "vfwcvt.f.x.v", VMajor.ARITH, VMinor.FP),
            unary(0b01100, "vfwcvt.f.f.v", VMajor.ARITH, VMinor.FP),
            unary(0b10000, "vfncvt.xu.f.v", VMajor.ARITH, VMinor.FP),
            unary(0b10001, "vfncvt.x.f.v", VMajor.ARITH, VMinor.FP),
            unary(0b10010, "vfncvt.f.xu.v", VMajor.ARITH, VMinor.FP),
            unary(0b10011, "vfncvt.f.x.v", VMajor.ARITH, VMinor.FP),
            unary(0b10100, "vfncvt.f.f.v", VMajor.ARITH, VMinor.FP),
        ]
    )
)

_VFUNARY1 = UnaryGroup(
    dict(
        [
            unary(0b00000, "vfsqrt.v", VMajor.ARITH, VMinor.FP),
            unary(0b10000, "vfclass.v", VMajor.ARITH, VMinor.FP),
        ]
    )
)

OPF = expand_lanes(
    [
        (0b000000, arith_f("vfadd", "vf")),
        (0b000001, arith_f("vfredsum", "v", "red")),
        (0b000010, arith_f("vfsub", "vf")),
        (0b000011, arith_f("vfredosum", "v", "red")),
        (0b000100, arith_f("vfmin", "vf")),
        (0b000101, arith_f("vfredmin", "v", "red")),
        (0b000110, arith_f("vfmax", "vf")),
        (0b000111, arith_f("vfredmax", "v", "red")),
        (0b001000, arith_f("vfsgnj", "vf")),
        (0b001001, arith_f("vfsgnjn", "vf")),
        (0b001010, arith_f("vfsgnjx", "vf")),
        (0b001100, {"v": UnaryGroup(dict([unary(0b00000, "vfmv.f.s", VMajor.OTHER, VMinor.NOTYPE, "fd_vs2")]))}),
        (0b001101, other_op("vfmv.s.f", "f", "s_f")),
        (0b010111, other_op("vfmerge", "f", "merge")),
        (0b011000, arith_f("vmfeq", "vf", "cmp")),
        (0b011001, arith_f("vmfle", "vf", "cmp")),
        (0b011010, arith_f("vmford", "vf", "cmp")),
        (0b011011, arith_f("vmflt", "vf", "cmp")),
        (0b011100, arith_f("vmfne", "vf", "cmp")),
        (0b011101, arith_f("vmfgt", "f", "cmp")),
        (0b011111, arith_f("vmfge", "f", "cmp")),
        (0b100000, arith_f("vfdiv", "vf")),
        (0b100001, arith_f("vfrdiv", "f")),
        (0b100010, {"v": _VFUNARY0}),
        (0b100011, {"v": _VFUNARY1}),
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
        (0b110001, arith_f("vfwredsum", "v", "red")),
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

# Loads/stores: width field selects element size (or SEW), mop high bit on
# loads selects sign extension, low bits select the addressing mode.
MEM_WIDTH_LETTER = {0b000: "b", 0b101: "h", 0b110: "w", 0b111: "e"}

MOP_ADDR_UNIT = 0b00
MOP_ADDR_STRIDED = 0b10
MOP_ADDR_INDEXED = 0b11

LUMOP_PLAIN = 0b00000
LUMOP_FF = 0b10000
