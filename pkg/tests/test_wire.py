"""Wire-format parsing: round trips, malformed input, throughput."""

import gc
import io
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rave.wire import (
    MalformedLine,
    TraceRecord,
    WIRE_HEADER,
    format_record,
    parse_stream,
    write_stream,
)


def parse_text(text, permissive=False):
    return list(parse_stream(io.BytesIO(text.encode()), permissive=permissive))


def round_trip(records):
    out = io.StringIO()
    write_stream(iter(records), out)
    return parse_text(out.getvalue())


wide_words = st.integers(0, (1 << 32) - 1).map(lambda w: w | 3)
narrow_words = st.integers(0, (1 << 16) - 1).filter(lambda w: w & 3 != 3)
reg_values = st.one_of(st.none(), st.integers(0, (1 << 64) - 1))


@st.composite
def trace_records(draw):
    pc = draw(st.integers(0, (1 << 64) - 1))
    raw = draw(st.one_of(wide_words, narrow_words.filter(lambda w: w > 0)))
    rs1 = draw(reg_values)
    rs2 = draw(reg_values)
    return TraceRecord(pc, raw, rs1, rs2)


@given(st.lists(trace_records(), max_size=50))
@settings(max_examples=80, deadline=None)
def test_round_trip(records):
    assert round_trip(records) == records


def test_header_expected_version_accepted():
    assert parse_text(f"{WIRE_HEADER}\nI 80000000 00b56033 3e8 3\n") == [
        TraceRecord(0x80000000, 0x00B56033, 0x3E8, 3)
    ]


def test_missing_register_columns_yield_none():
    (rec,) = parse_text("I 1000 02430157\n")
    assert rec.rs1_value is None and rec.rs2_value is None


def test_dash_register_placeholder():
    (rec,) = parse_text("I 1000 0d0575d7 64 -\n")
    assert rec.rs1_value == 0x64 and rec.rs2_value is None


def test_comments_and_blank_lines_skipped():
    text = "# a comment\n\nI 1000 4501\n   \n# more\nI 1004 4501\n"
    assert len(parse_text(text)) == 2


def test_wrong_version_fatal_even_permissive():
    with pytest.raises(MalformedLine):
        parse_text("# rave-wire v2\n", permissive=True)


@pytest.mark.parametrize(
    "line",
    [
        "I 1000",  # missing encoding
        "I 1000 02430157 5",  # one register column only
        "I 1000 02430157 5 6 7",  # too many columns
        "I xyz 02430157",  # bad pc
        "I 1000 zzzz",  # bad encoding
        "I 1000 0",  # zero encoding
        "I 1000 123456789",  # >32-bit encoding
        "I 1000 12345678 1 123456789abcdef01",  # >64-bit register
        "I 10000000000000000 00000013",  # >64-bit pc
        "I 1000 00010002",  # 32-bit length bits on a wide value
        "X 1000 02430157",  # unknown prefix
        "I\t1000\t02430157",  # tabs are not the column separator
    ],
)
def test_malformed_lines_raise_with_position(line):
    with pytest.raises(MalformedLine) as exc:
        parse_text(f"{WIRE_HEADER}\n{line}\n")
    assert exc.value.lineno == 2


@pytest.mark.parametrize("junk", ["I 1000 zzzz", "garbage", "I 1000 0"])
def test_permissive_skips_junk(junk, caplog):
    text = f"I 1000 4501\n{junk}\nI 1008 4501\n"
    with caplog.at_level("WARNING"):
        records = parse_text(text, permissive=True)
    assert len(records) == 2
    assert "line 2" in caplog.text or "skipping" in caplog.text


def test_format_record_widths():
    assert format_record(TraceRecord(0x10, 0x4501)) == "I 10 4501"
    assert format_record(TraceRecord(0x10, 0x13)) == "I 10 00000013"
    assert format_record(TraceRecord(0x10, 0x02430157)) == "I 10 02430157"
    assert format_record(TraceRecord(0x10, 0x57, 5, None)) == "I 10 00000057 5 -"


def test_write_stream_header_optional():
    out = io.StringIO()
    write_stream(iter([TraceRecord(4, 0x4501)]), out, header=False)
    assert out.getvalue() == "I 4 4501\n"


def test_parse_throughput_meets_budget():
    # the analyzer must keep up with streams of 10^6 records per second
    n = 300_000
    line_three = b"I 80001234 02430157\n"
    line_five = b"I 80001234 0d0575d7 3e8 -\n"
    for payload, label in ((line_three, 3), (line_five, 5)):
        data = payload * n
        best = float("inf")
        gc.collect()
        gc.disable()
        try:
            for _ in range(3):
                stream = io.BytesIO(data)
                t0 = time.perf_counter()
                count = sum(1 for _ in parse_stream(stream))
                best = min(best, time.perf_counter() - t0)
        finally:
            gc.enable()
        assert count == n
        rate = n / best
        assert rate >= 1_000_000, f"{label}-column rate {rate:,.0f}/s"
