"""vtype field parsing and rendering for both vector spec revisions."""

from __future__ import annotations

from dataclasses import dataclass

from .types import SpecVersion

ELEN = 64

# v1.0 vlmul encodings to (numerator, denominator)
_LMUL_V1_0 = {
    0b000: (1, 1),
    0b001: (2, 1),
    0b010: (4, 1),
    0b011: (8, 1),
    0b101: (1, 8),
    0b110: (1, 4),
    0b111: (1, 2),
}


@dataclass(frozen=True, slots=True)
class Vtype:
    """Parsed vtype value.  ``ill`` set means the rest is meaningless."""

    ill: bool
    sew: int = 8
    lmul_num: int = 1
    lmul_den: int = 1
    ta: bool = False
    ma: bool = False
    raw: int = 0

    def vlmax(self, vlen_bits: int) -> int:
        return (vlen_bits * self.lmul_num) // (self.sew * self.lmul_den)


def parse_vtype(spec: SpecVersion, value: int) -> Vtype:
    """Parse a vtype register value (any width; high garbage means invalid)."""
    if value < 0:
        return Vtype(ill=True, raw=value)
    if spec is SpecVersion.V1_0:
        if value >> 8:
            return Vtype(ill=True, raw=value)
        lmul = _LMUL_V1_0.get(value & 0x7)
        vsew = (value >> 3) & 0x7
        if lmul is None or vsew > 3:
            return Vtype(ill=True, raw=value)
        sew = 8 << vsew
        num, den = lmul
        # fractional LMUL must still cover one element: SEW <= LMUL * ELEN
        if sew * den > ELEN * num:
            return Vtype(ill=True, raw=value)
        return Vtype(
            ill=False,
            sew=sew,
            lmul_num=num,
            lmul_den=den,
            ta=bool(value & 0x40),
            ma=bool(value & 0x80),
            raw=value,
        )
    # v0.7.1: vlmul[1:0], vsew[4:2], vediv[6:5], everything above reserved
    if value >> 7:
        return Vtype(ill=True, raw=value)
    vsew = (value >> 2) & 0x7
    if vsew > 3:
        return Vtype(ill=True, raw=value)
    if (value >> 5) & 0x3:
        # EDIV is not supported by any profiled hardware; treat as invalid
        return Vtype(ill=True, raw=value)
    return Vtype(
        ill=False,
        sew=8 << vsew,
        lmul_num=1 << (value & 0x3),
        lmul_den=1,
        raw=value,
    )


def render_vtype(spec: SpecVersion, value: int) -> str:
    """Render a vtype immediate the way assemblers print it.

    Invalid encodings render as the bare number, matching common
    disassembler output for reserved vtype values.
    """
    vt = parse_vtype(spec, value)
    if vt.ill:
        return str(value)
    if vt.lmul_den > 1:
        lmul = f"mf{vt.lmul_den}"
    else:
        lmul = f"m{vt.lmul_num}"
    if spec is SpecVersion.V1_0:
        ta = "ta" if vt.ta else "tu"
        ma = "ma" if vt.ma else "mu"
        return f"e{vt.sew}, {lmul}, {ta}, {ma}"
    return f"e{vt.sew}, {lmul}"
