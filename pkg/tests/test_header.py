"""Guest-side instrumentation header: emitted machine words match the
marker vocabulary the analyzer decodes."""

import re
import subprocess

import pytest
from conftest import clang_path, requires_clang
from rave import markers
from rave.markers import ProtocolState
from rave.wire import TraceRecord

pytestmark = requires_clang

HEADER_DIR = "include"

PRIMITIVES = """
#include "rave_markers.h"
void f_start(void) { qemu_start_trace(); }
void f_stop(void) { qemu_stop_trace(); }
void f_restart(void) { qemu_restart_trace(); }
void f_delim(void) { __rave_name_delim(); }
void f_event(unsigned long e, unsigned long v) { qemu_event_and_value(e, v); }
void f_name_id(void) { __rave_lui_imm(1000); }
void f_name_event(void) { qemu_name_event(77, "Hi"); }
void f_name_value(void) { qemu_name_value(77, 5, "Hi"); }
void f_byte(unsigned char c) { __rave_lui_byte(c); }
"""


def compile_object(tmp_path, source, opt="-O0"):
    src = tmp_path / "probe.c"
    obj = tmp_path / "probe.o"
    src.write_text(source)
    subprocess.run(
        [
            clang_path(), "--target=riscv64", "-march=rv64gcv", "-mno-relax",
            opt, "-I", HEADER_DIR, "-c", str(src), "-o", str(obj),
        ],
        check=True,
        capture_output=True,
    )
    return obj


def section_bytes(obj, section=".text"):
    dump = subprocess.run(
        ["readelf", "-x", section, str(obj)],
        check=True,
        capture_output=True,
        text=True,
    ).stdout
    blob = b""
    for m in re.finditer(r"^\s*0x[0-9a-f]+ ((?:[0-9a-f]{2,8} ){1,4})", dump, re.M):
        for group in m.group(1).split():
            blob += bytes.fromhex(group)
    return blob


def function_ranges(obj):
    dump = subprocess.run(
        ["readelf", "-sW", str(obj)], check=True, capture_output=True, text=True
    ).stdout
    ranges = {}
    for line in dump.splitlines():
        m = re.match(
            r"\s*\d+: ([0-9a-f]+)\s+(\d+)\s+FUNC\s+\S+\s+\S+\s+\S+\s+(\S+)", line
        )
        if m:
            ranges[m.group(3)] = (int(m.group(1), 16), int(m.group(2)))
    return ranges


def words_in(blob):
    """Walk RISC-V code positionally, honoring compressed encodings."""
    found, i = [], 0
    while i + 2 <= len(blob):
        half = int.from_bytes(blob[i : i + 2], "little")
        if half & 3 == 3:
            if i + 4 > len(blob):
                break
            found.append(int.from_bytes(blob[i : i + 4], "little"))
            i += 4
        else:
            found.append(half)
            i += 2
    return found


@pytest.fixture(scope="module")
def primitive_words(tmp_path_factory):
    tmp = tmp_path_factory.mktemp("hdr")
    obj = compile_object(tmp, PRIMITIVES)
    blob = section_bytes(obj)
    return {
        name: words_in(blob[off : off + size])
        for name, (off, size) in function_ranges(obj).items()
    }


def test_header_compiles_at_o2(tmp_path):
    compile_object(tmp_path, PRIMITIVES, opt="-O2")


def test_header_is_idempotent_and_rejects_non_riscv(tmp_path):
    compile_object(
        tmp_path, '#include "rave_markers.h"\n#include "rave_markers.h"\nint x;\n'
    )
    with pytest.raises(subprocess.CalledProcessError) as exc_info:
        subprocess.run(
            [clang_path(), "-I", HEADER_DIR, "-c", "-o", str(tmp_path / "n.o"),
             str(tmp_path / "probe.c")],
            check=True,
            capture_output=True,
        )
    assert b"RISC-V" in exc_info.value.stderr


def test_control_markers_emit_pinned_words(primitive_words):
    assert markers.START_WORD in primitive_words["f_start"]
    assert markers.STOP_WORD in primitive_words["f_stop"]
    assert markers.RESTART_WORD in primitive_words["f_restart"]
    assert markers.DELIM_WORD in primitive_words["f_delim"]


def test_event_macro_emits_an_or_to_x0(primitive_words):
    hits = [
        w for w in primitive_words["f_event"] if (w & 0xFE007FFF) == 0x00006033
    ]
    assert len(hits) == 1


def test_id_macro_emits_lui_x0_with_literal(primitive_words):
    assert markers.lui_word(1000) in primitive_words["f_name_id"]
    assert markers.lui_word(77) in primitive_words["f_name_event"]
    assert primitive_words["f_name_value"].count(markers.lui_word(77)) == 1
    assert markers.lui_word(5) in primitive_words["f_name_value"]


def test_name_value_orders_ids_before_the_name_call(primitive_words):
    words = primitive_words["f_name_value"]
    assert words.index(markers.lui_word(77)) < words.index(markers.lui_word(5))


def test_byte_sender_covers_all_256_values(primitive_words):
    words = set(primitive_words["__rave_lui_byte"])
    missing = [c for c in range(256) if markers.lui_word(c) not in words]
    assert missing == []


def test_documented_emission_decodes_back():
    # qemu_name_event(id, name) emits: lui id, delim, one lui per byte, delim
    seq = [markers.lui_word(77), markers.DELIM_WORD]
    seq += [markers.lui_word(b) for b in "Hi".encode()]
    seq += [markers.DELIM_WORD]

    from rave.analysis import Analysis, SessionConfig
    from rave.isa.types import SpecVersion

    an = Analysis(SessionConfig(spec=SpecVersion.V1_0))
    an.consume(TraceRecord(0x100 + 4 * i, w) for i, w in enumerate(seq))
    an.finish()
    assert an.ledger.event_names == {77: "Hi"}


def test_protocol_state_sees_header_words_as_markers():
    proto = ProtocolState()
    for word, attr in [
        (markers.START_WORD, "START_WORD"),
        (markers.STOP_WORD, "STOP_WORD"),
        (markers.RESTART_WORD, "RESTART_WORD"),
        (markers.DELIM_WORD, "DELIM_WORD"),
    ]:
        assert word & 0x7F == 0x13  # addi-class, rd = x0
        assert (word >> 7) & 0x1F == 0
