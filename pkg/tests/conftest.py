import shutil
from pathlib import Path

import pytest

from rave import markers
from rave.wire import TraceRecord

DATA = Path(__file__).parent / "data"

CORPUS_FIELDS = ("word", "itype", "major", "minor", "mnemonic", "asm")


def load_corpus(name: str) -> list[dict]:
    rows = []
    for line in (DATA / name).read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        word, itype, major, minor, mnemonic, asm = line.split("|")
        rows.append(
            {
                "word": int(word, 16),
                "itype": itype,
                "major": major,
                "minor": minor,
                "mnemonic": mnemonic,
                "asm": asm,
            }
        )
    return rows


@pytest.fixture(scope="session")
def corpus_v071():
    return load_corpus("corpus_v0_7_1.txt")


@pytest.fixture(scope="session")
def corpus_v10():
    return load_corpus("corpus_v1_0.txt")


def clang_path() -> str | None:
    return shutil.which("clang")


requires_clang = pytest.mark.skipif(
    clang_path() is None, reason="clang not available"
)


def marker_records(words, pc=0x20000):
    return [TraceRecord(pc, w) for w in words]


def fixed_stream() -> list[TraceRecord]:
    """Small deterministic v1.0 stream exercising every output feature.

    Names two events, runs one region of mixed vector work at e32/vl=80,
    toggles tracing around untraced noise, and finishes with a second
    region at e64 carrying an unnamed value.
    """
    vsetvli_e32 = (0xD0 << 20) | (10 << 15) | (7 << 12) | (11 << 7) | 0x57
    vsetvli_e64 = (0xD8 << 20) | (10 << 15) | (7 << 12) | (11 << 7) | 0x57
    recs = []
    recs += marker_records(markers.name_event_words(1000, "code_region"))
    recs += marker_records(markers.name_value_words(1000, 3, "BU"))
    recs += marker_records(markers.name_value_words(1000, 5, "FFT"))
    recs.append(TraceRecord(0x100, vsetvli_e32, 80, None))
    recs.append(TraceRecord(0x104, markers.or_word(10, 11), 1000, 3))
    body = [
        0x02430157,  # vadd.vv     ARITH/INT
        0x02431157,  # vfadd.vv    ARITH/FP
        0x00C585B3,  # add         scalar
        0x6631A0D7,  # vmand.mm    MASK
        0x02056407,  # vle32.v     MEM/UNIT
        0x0AC56407,  # vlse32.v    MEM/STRIDE
        0x07056407,  # vluxei32.v  MEM/INDEX
        0x30C60257,  # vrgather.vv OTHER
        0x00178793,  # addi        scalar
    ]
    recs += [TraceRecord(0x108 + 4 * i, w) for i, w in enumerate(body)]
    recs.append(TraceRecord(0x200, markers.or_word(10, 11), 1000, 0))
    recs.append(TraceRecord(0x204, markers.STOP_WORD))
    recs.append(TraceRecord(0x208, 0x00C585B3))  # untraced noise
    recs.append(TraceRecord(0x20C, markers.START_WORD))
    recs.append(TraceRecord(0x210, vsetvli_e64, 7, None))
    recs.append(TraceRecord(0x214, markers.or_word(10, 11), 1000, 5))
    recs.append(TraceRecord(0x218, 0x02430157))
    recs.append(TraceRecord(0x21C, 0x02430157))
    recs.append(TraceRecord(0x220, markers.or_word(10, 11), 1000, 0))
    return recs
