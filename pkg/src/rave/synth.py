"""Synthetic workload generator for benchmarking the pipeline.

Emits a leading vsetvli (with its AVL register value attached, so strict
analysis can track vl) followed by `total` instructions in which exactly
round(total * vec_per_million / 10^6) are vector instructions, spread evenly
across the stream. PCs cycle through a small loop-like window so the decode
cache behaves as it would on real code.
"""

from __future__ import annotations

from random import Random
from typing import Iterator

from .isa.types import SpecVersion
from .wire import TraceRecord

_SEW_CODE = {8: 0, 16: 1, 32: 2, 64: 3}
_PC_BASE = 0x10000
_PC_WINDOW = 256


def _opv(f6: int, vm: int, vs2: int, vs1: int, f3: int, vd: int) -> int:
    return (f6 << 26) | (vm << 25) | (vs2 << 20) | (vs1 << 15) | (f3 << 12) | (vd << 7) | 0x57


def _vsetvli_word(spec: SpecVersion, sew: int, rd: int = 11, rs1: int = 10) -> int:
    if spec is SpecVersion.V1_0:
        zimm = (_SEW_CODE[sew] << 3) | (1 << 6) | (1 << 7)  # m1, ta, ma
    else:
        zimm = _SEW_CODE[sew] << 2  # m1
    return (zimm << 20) | (rs1 << 15) | (7 << 12) | (rd << 7) | 0x57


def _mem_word(sew: int, mop: int, store: bool, vd: int, r2: int = 0) -> int:
    width = {8: 0, 16: 5, 32: 6, 64: 7}[sew]  # v0.7.1 b/h/w/e letters share these codes
    opcode = 0b0100111 if store else 0b0000111
    return (mop << 26) | (1 << 25) | (r2 << 20) | (10 << 15) | (width << 12) | (vd << 7) | opcode


def _vector_pool(spec: SpecVersion, sew: int) -> list[int]:
    pool = [
        _opv(0x00, 1, 4, 6, 0, 2),  # vadd.vv: ARITH/INT
        _opv(0x25, 1, 4, 6, 2, 2),  # vmul.vv: ARITH/INT
        _opv(0x00, 1, 4, 6, 1, 2),  # vfadd.vv: ARITH/FP
        _opv(0x19, 1, 2, 3, 2, 1),  # vmand.mm: MASK
        _opv(0x0C, 1, 8, 12, 0, 4),  # vrgather.vv: OTHER
        _mem_word(sew, 0b000, False, 8),  # unit load
        _mem_word(sew, 0b000, True, 8),  # unit store
        _mem_word(sew, 0b010, False, 8, r2=12),  # strided load
    ]
    if spec is SpecVersion.V1_0:
        pool.append(_mem_word(sew, 0b01, False, 8, r2=16))  # indexed load
    else:
        # v0.7.1 loads spell the sign in mop bit 2; indexed-signed is 0b111
        pool.append(_mem_word(sew, 0b111, False, 8, r2=16))
    return pool


_SCALAR_POOL = [
    0x00178793,  # addi a5, a5, 1
    0x00C585B3,  # add a1, a1, a2
    0x00F70733,  # add a4, a4, a5
    0xFE0796E3,  # bnez a5, back
]


def generate_synthetic(
    total: int,
    vec_per_million: int,
    vlen_bits: int = 16384,
    sew: int = 64,
    avl: int = 256,
    seed: int = 0,
    spec: SpecVersion = SpecVersion.V1_0,
) -> Iterator[TraceRecord]:
    """Yield the vsetvli prologue plus `total` filler/vector records."""
    if not 0 <= vec_per_million <= 10**6:
        raise ValueError("vec_per_million must be within 0..10^6")
    if sew not in _SEW_CODE:
        raise ValueError(f"unsupported SEW {sew}")
    if total < 0:
        raise ValueError("total must be nonnegative")
    if vlen_bits < 128 or vlen_bits & (vlen_bits - 1):
        raise ValueError("vlen must be a power of two >= 128")

    rng = Random(seed)
    vectors = _vector_pool(spec, sew)
    n_vec = len(vectors)
    n_scalar = len(_SCALAR_POOL)
    want = round(total * vec_per_million / 10**6)

    yield TraceRecord(_PC_BASE, _vsetvli_word(spec, sew), avl, None)
    acc = 0
    pc = _PC_BASE + 4
    limit = _PC_BASE + 4 * (_PC_WINDOW + 1)
    for _ in range(total):
        acc += want
        if acc >= total:
            acc -= total
            raw = vectors[rng.randrange(n_vec)]
        else:
            raw = _SCALAR_POOL[rng.randrange(n_scalar)]
        yield TraceRecord(pc, raw)
        pc += 4
        if pc >= limit:
            pc = _PC_BASE + 4
