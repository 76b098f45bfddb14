"""Session pipeline: gating, restarts, fallbacks, and the reader thread."""

import io
import logging

import pytest
from conftest import fixed_stream, marker_records
from rave import markers
from rave.analysis import (
    Analysis,
    AnalysisError,
    InstructionLog,
    SessionConfig,
    open_input,
    run_stream,
)
from rave.isa.types import SpecVersion
from rave.paraver import ParaverWriter
from rave.wire import MalformedLine, TraceRecord, write_stream

VSETVLI_E32 = (0xD0 << 20) | (10 << 15) | (7 << 12) | (11 << 7) | 0x57
VSETVLI_E64 = (0xD8 << 20) | (10 << 15) | (7 << 12) | (11 << 7) | 0x57
VADD = 0x02430157
ADD = 0x00C585B3
RESERVED_OPV = (0x16 << 26) | (1 << 25) | (4 << 20) | (3 << 15) | (2 << 7) | 0x57


def v10(**kw) -> SessionConfig:
    return SessionConfig(spec=SpecVersion.V1_0, **kw)


def run(records, config=None, **kw) -> Analysis:
    an = Analysis(config or v10(), **kw)
    an.consume(iter(records))
    an.finish()
    return an


def test_fixed_stream_counters():
    an = run(fixed_stream())
    c = an.counters
    assert c.scalar_instr == 2  # the add inside STOP..START is not counted
    assert c.vsetvl_instr == 2
    assert c.vector_instr == [0, 0, 7, 2]
    assert c.velem == [0, 0, 7 * 80, 2 * 7]
    assert c.total() == 13


def test_fixed_stream_regions():
    an = run(fixed_stream())
    assert len(an.ledger.completed) == 2
    first, second = an.ledger.completed
    assert (first.event_id, first.open_value) == (1000, 3)
    assert first.delta.total() == 9
    assert first.delta.vector_instr[2] == 7
    assert (second.event_id, second.open_value) == (1000, 5)
    assert second.delta.total() == 2
    assert an.ledger.event_names[1000] == "code_region"
    assert an.ledger.value_names[(1000, 3)] == "BU"
    assert an.ledger.value_names[(1000, 5)] == "FFT"


def test_index_counts_only_counted_instructions():
    an = run(fixed_stream())
    assert an.records_seen == len(fixed_stream())
    # 13 counted instructions -> next time coordinate is 13
    assert an.index == 13


def test_markers_keep_working_while_disabled():
    recs = [
        TraceRecord(0x0, VSETVLI_E32, 50, None),
        TraceRecord(0x4, markers.STOP_WORD),
        TraceRecord(0x8, markers.or_word(10, 11), 7, 1),
        TraceRecord(0xC, VADD),
        TraceRecord(0x10, markers.or_word(10, 11), 7, 0),
        TraceRecord(0x14, markers.START_WORD),
    ]
    an = run(recs)
    assert an.counters.vector_instr[2] == 0
    (region,) = an.ledger.completed
    assert region.partial
    assert region.delta.total() == 0


def test_start_disabled_counts_nothing_until_start():
    recs = [
        TraceRecord(0x0, VSETVLI_E32, 50, None),
        TraceRecord(0x4, VADD),
        TraceRecord(0x8, ADD),
        TraceRecord(0xC, markers.START_WORD),
        TraceRecord(0x10, VADD),
    ]
    an = run(recs, v10(start_disabled=True))
    assert an.counters.vsetvl_instr == 0
    assert an.counters.scalar_instr == 0
    # vtype state was still tracked across the disabled stretch
    assert an.counters.vector_instr[2] == 1
    assert an.counters.velem[2] == 50


def test_vsetvl_updates_state_even_while_disabled():
    recs = [
        TraceRecord(0x0, VSETVLI_E32, 9, None),
        TraceRecord(0x4, markers.STOP_WORD),
        TraceRecord(0x8, VSETVLI_E64, 3, None),
        TraceRecord(0xC, markers.START_WORD),
        TraceRecord(0x10, VADD),
    ]
    an = run(recs)
    assert an.counters.vsetvl_instr == 1  # only the enabled one was counted
    assert an.counters.vector_instr == [0, 0, 0, 1]
    assert an.counters.velem[3] == 3


def suffix_records() -> list[TraceRecord]:
    recs = [TraceRecord(0x300, VSETVLI_E64, 12, None)]
    recs += marker_records(markers.name_event_words(50, "tail"), pc=0x310)
    recs.append(TraceRecord(0x340, markers.or_word(10, 11), 50, 2))
    recs += [TraceRecord(0x344 + 4 * i, VADD) for i in range(5)]
    recs.append(TraceRecord(0x360, ADD))
    recs.append(TraceRecord(0x364, markers.or_word(10, 11), 50, 0))
    return recs


def test_restart_equals_suffix_only_run(tmp_path):
    full = fixed_stream() + [TraceRecord(0x2F0, markers.RESTART_WORD)] + suffix_records()

    def run_paraver(records, name):
        writer = ParaverWriter(str(tmp_path / name))
        an = Analysis(v10(), paraver=writer)
        an.consume(iter(records))
        an.finish()
        files = writer.finalize(an.ledger)
        return an, {f.suffix: f.read_bytes() for f in files}

    full_an, full_out = run_paraver(full, "full")
    suf_an, suf_out = run_paraver(suffix_records(), "suffix")
    assert full_an.counters == suf_an.counters
    assert full_an.report() == suf_an.report()
    assert full_out[".prv"] == suf_out[".prv"]
    assert full_an.index == suf_an.index


def test_restart_preserves_names():
    recs = marker_records(markers.name_event_words(9, "early"))
    recs.append(TraceRecord(0x40, markers.RESTART_WORD))
    recs.append(TraceRecord(0x44, VSETVLI_E32, 4, None))
    an = run(recs)
    assert an.ledger.event_names[9] == "early"
    assert an.counters.total() == 1


def test_threaded_and_inline_run_stream_agree():
    buf = io.StringIO()
    write_stream(iter(fixed_stream()), buf)
    data = buf.getvalue().encode()

    results = []
    for threaded in (False, True):
        an = Analysis(v10())
        run_stream(an, io.BytesIO(data), threaded=threaded, batch_size=3)
        an.finish()
        results.append(an)
    assert results[0].counters == results[1].counters
    assert results[0].report() == results[1].report()


def test_run_stream_propagates_parse_errors():
    data = b"# rave-wire v1\nI 100 02430157\nbogus line\n"
    an = Analysis(v10())
    with pytest.raises(MalformedLine) as exc_info:
        run_stream(an, io.BytesIO(data))
    assert exc_info.value.lineno == 3


def test_strict_raises_on_vector_before_vtype():
    an = Analysis(v10())
    with pytest.raises(AnalysisError) as exc_info:
        an.consume([TraceRecord(0x100, VADD)])
    msg = str(exc_info.value)
    assert msg.startswith("record 1: vector instruction")
    assert "before any valid vtype" in msg


def test_strict_raises_on_undecodable():
    an = Analysis(v10())
    an.feed(TraceRecord(0x0, VSETVLI_E32, 4, None))
    with pytest.raises(AnalysisError, match="record 2:"):
        an.feed(TraceRecord(0x4, RESERVED_OPV))


def test_permissive_counts_undecodable_as_scalar(caplog):
    an = Analysis(v10(permissive=True))
    with caplog.at_level(logging.WARNING, logger="rave.analysis"):
        an.feed(TraceRecord(0x4, RESERVED_OPV))
    an.finish()
    assert an.counters.scalar_instr == 1
    assert "counted as scalar" in caplog.text


def test_permissive_vector_without_vtype_lands_in_default_bucket():
    an = Analysis(v10(permissive=True))
    an.feed(TraceRecord(0x0, VADD))
    assert an.counters.vector_instr == [0, 0, 0, 1]
    assert an.counters.velem == [0, 0, 0, 0]


def test_missing_avl_strict_vs_permissive():
    base = [TraceRecord(0x0, VSETVLI_E32, 44, None)]
    bare = TraceRecord(0x4, VSETVLI_E32, None, None)

    an = Analysis(v10())
    an.consume(base)
    with pytest.raises(AnalysisError, match="record 2:"):
        an.feed(bare)

    an = Analysis(v10(permissive=True))
    an.consume(base)
    an.feed(bare)  # carries the previous vl forward
    an.feed(TraceRecord(0x8, VADD))
    assert an.counters.velem[2] == 44


def test_missing_vtype_strict_vs_permissive():
    # register-form vsetvl without an rs2 value cannot be interpreted
    vsetvl = (1 << 31) | (12 << 20) | (10 << 15) | (7 << 12) | (11 << 7) | 0x57
    rec = TraceRecord(0x0, vsetvl, 5, None)

    an = Analysis(v10())
    with pytest.raises(AnalysisError, match="record 1:"):
        an.feed(rec)

    an = Analysis(v10(permissive=True))
    an.feed(rec)
    an.feed(TraceRecord(0x4, VADD))  # illegal state -> default bucket, vl 0
    assert an.counters.vector_instr[3] == 1
    assert an.counters.velem[3] == 0


def test_missing_marker_registers_strict_vs_permissive():
    rec = TraceRecord(0x0, markers.or_word(10, 11), None, None)

    an = Analysis(v10())
    with pytest.raises(AnalysisError, match="record 1:"):
        an.feed(rec)

    an = Analysis(v10(permissive=True))
    an.feed(rec)
    an.finish()
    assert an.ledger.completed == []
    assert an.ledger.open_regions == {}


def test_instruction_log_lists_vector_work_only():
    log = InstructionLog()
    an = Analysis(v10(), instr_log=log)
    an.consume(iter(fixed_stream()))
    an.finish()
    out = io.StringIO()
    log.finalize(out)
    lines = out.getvalue().splitlines()
    assert len(lines) == 9  # 7 e32 + 2 e64 vector instructions
    first = lines[0].split("\t")
    assert first[0] == "1"  # right after the vsetvli at time 0
    assert first[2].startswith("vadd.vv")
    assert "vl=80" in lines[0] and "sew=32" in lines[0] and "lmul=1" in lines[0]
    assert "vl=7" in lines[-1] and "sew=64" in lines[-1]
    indices = [int(l.split("\t")[0]) for l in lines]
    assert indices == sorted(indices)


def test_decode_cache_reuses_entries():
    an = Analysis(v10())
    an.feed(TraceRecord(0x0, VSETVLI_E32, 4, None))
    for _ in range(5):
        an.feed(TraceRecord(0x10, VADD))
    assert len(an._cache) == 2
    assert an.counters.vector_instr[2] == 5


def test_finish_warns_about_open_regions(caplog):
    an = Analysis(v10())
    an.feed(TraceRecord(0x0, markers.or_word(10, 11), 3, 1))
    with caplog.at_level(logging.WARNING, logger="rave.analysis"):
        an.finish()
    assert "still open" in caplog.text
    assert an.ledger.completed == []


def test_open_input_reads_files(tmp_path):
    p = tmp_path / "t.rw"
    p.write_bytes(b"# rave-wire v1\n")
    with open_input(str(p)) as fh:
        assert fh.read() == b"# rave-wire v1\n"


def test_config_rejects_bad_vlen():
    with pytest.raises(ValueError, match="power of two"):
        SessionConfig(spec=SpecVersion.V1_0, vlen_bits=1000)
    with pytest.raises(ValueError, match="power of two"):
        SessionConfig(spec=SpecVersion.V1_0, vlen_bits=64)
