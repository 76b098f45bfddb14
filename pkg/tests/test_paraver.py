"""Trace file emission: golden bytes, cross-references, determinism."""

import re
from pathlib import Path

import pytest

from conftest import fixed_stream
from rave.analysis import Analysis, SessionConfig
from rave.isa.types import SpecVersion, VMajor, VMinor, class_value
from rave.paraver import (
    FIRST_SCALAR_DETAIL_CODE,
    TYPE_CLASS,
    TYPE_MNEMONIC,
    TYPE_SEW,
    TYPE_VL,
    ParaverWriter,
)

GOLDEN = Path(__file__).parent / "data" / "golden"


def run_fixed(tmp_path, split_events=False, record_scalar=True):
    writer = ParaverWriter(str(tmp_path / "out"), split_events=split_events)
    an = Analysis(
        SessionConfig(
            spec=SpecVersion.V1_0, record_scalar=record_scalar, region_index_base=1
        ),
        paraver=writer,
    )
    an.consume(iter(fixed_stream()))
    an.finish()
    return an, writer.finalize(an.ledger)


@pytest.mark.parametrize("ext", ["prv", "pcf", "row"])
def test_golden_bytes(tmp_path, ext):
    _, files = run_fixed(tmp_path)
    got = {f.suffix: f for f in files}
    golden = (GOLDEN / f"fixed.{ext}").read_bytes()
    assert got[f".{ext}"].read_bytes() == golden


def test_golden_split_events(tmp_path):
    _, files = run_fixed(tmp_path, split_events=True)
    prv = next(f for f in files if f.suffix == ".prv")
    assert prv.read_bytes() == (GOLDEN / "fixed_split.prv").read_bytes()


def test_runs_are_byte_identical(tmp_path):
    _, first = run_fixed(tmp_path / "a")
    _, second = run_fixed(tmp_path / "b")
    for f1, f2 in zip(first, second):
        assert f1.read_bytes() == f2.read_bytes()


def test_split_and_combined_carry_same_events(tmp_path):
    _, combined_files = run_fixed(tmp_path / "c", split_events=False)
    _, split_files = run_fixed(tmp_path / "s", split_events=True)

    def events(path):
        out = []
        for line in path.read_text().splitlines():
            if not line.startswith("2:"):
                continue
            f = line.split(":")
            time = int(f[5])
            pairs = f[6:]
            out += [(time, int(t), int(v)) for t, v in zip(pairs[::2], pairs[1::2])]
        return out

    combined = events(next(f for f in combined_files if f.suffix == ".prv"))
    split = events(next(f for f in split_files if f.suffix == ".prv"))
    assert combined == split


def _pcf_values(pcf_text, type_id):
    block = re.search(
        rf"EVENT_TYPE\n0    {type_id}    [^\n]+\nVALUES\n((?:\S+ +[^\n]+\n)*)",
        pcf_text,
    )
    if block is None:
        return None
    values = {}
    for line in block.group(1).splitlines():
        code, name = line.split(None, 1)
        values[int(code)] = name
    return values


def test_prv_pcf_cross_reference(tmp_path):
    _, files = run_fixed(tmp_path)
    prv = next(f for f in files if f.suffix == ".prv").read_text()
    pcf = next(f for f in files if f.suffix == ".pcf").read_text()

    used = {}
    for line in prv.splitlines():
        if not line.startswith("2:"):
            continue
        f = line.split(":")
        pairs = f[6:]
        for t, v in zip(pairs[::2], pairs[1::2]):
            used.setdefault(int(t), set()).add(int(v))

    for type_id in (TYPE_MNEMONIC, TYPE_CLASS):
        values = _pcf_values(pcf, type_id)
        for v in used.get(type_id, ()):
            assert v in values, f"type {type_id} value {v} unnamed"
    # user event values are named except the conventional close value 0
    values = _pcf_values(pcf, 1000)
    for v in used.get(1000, ()) - {0}:
        assert v in values
    # magnitude types carry no VALUES table
    assert _pcf_values(pcf, TYPE_VL) is None
    assert _pcf_values(pcf, TYPE_SEW) is None


def test_header_time_is_max_emitted_index(tmp_path):
    _, files = run_fixed(tmp_path)
    prv = next(f for f in files if f.suffix == ".prv").read_text().splitlines()
    header_time = int(re.match(r"#Paraver \([^)]*\):(\d+):", prv[0]).group(1))
    times = [int(line.split(":")[5]) for line in prv[1:]]
    assert header_time == max(times)


def test_scalar_detail_codes_first_appearance(tmp_path):
    an, files = run_fixed(tmp_path, record_scalar=True)
    prv = next(f for f in files if f.suffix == ".prv").read_text()
    pcf = next(f for f in files if f.suffix == ".pcf").read_text()
    # "add" executes before "addi" in the fixed stream
    values = _pcf_values(pcf, TYPE_MNEMONIC)
    assert values[FIRST_SCALAR_DETAIL_CODE] == "add"
    assert values[FIRST_SCALAR_DETAIL_CODE + 1] == "addi"
    assert f":{TYPE_MNEMONIC}:{FIRST_SCALAR_DETAIL_CODE}\n" in prv + "\n" or \
        f":{TYPE_MNEMONIC}:{FIRST_SCALAR_DETAIL_CODE}" in prv


def test_plain_mode_shares_one_scalar_code(tmp_path):
    writer = ParaverWriter(str(tmp_path / "plain"))
    an = Analysis(
        SessionConfig(spec=SpecVersion.V1_0, record_scalar=False), paraver=writer
    )
    an.consume(iter(fixed_stream()))
    an.finish()
    files = writer.finalize(an.ledger)
    pcf = next(f for f in files if f.suffix == ".pcf").read_text()
    values = _pcf_values(pcf, TYPE_MNEMONIC)
    assert values[1] == "scalar"
    assert not any(v >= FIRST_SCALAR_DETAIL_CODE for v in values)


def test_class_event_only_on_vector_lines(tmp_path):
    _, files = run_fixed(tmp_path)
    prv = next(f for f in files if f.suffix == ".prv").read_text()
    for line in prv.splitlines():
        if not line.startswith("2:"):
            continue
        f = line.split(":")
        pairs = {int(t) for t in f[6::2]}
        if TYPE_CLASS in pairs:
            assert TYPE_VL in pairs and TYPE_SEW in pairs


def test_class_values_avoid_zero():
    for major in VMajor:
        for minor in VMinor:
            assert class_value(major, minor) != 0


def test_unnamed_user_values_fall_back_to_numbers(tmp_path):
    # value 5 is named FFT; strip the naming markers and it must still list
    recs = [r for r in fixed_stream()]
    from rave.markers import name_value_words

    drop = set()
    words = name_value_words(1000, 5, "FFT")
    # remove exactly the FFT naming prefix records from the stream
    start = next(
        i
        for i in range(len(recs))
        if [r.raw for r in recs[i : i + len(words)]] == words
    )
    keep = recs[:start] + recs[start + len(words) :]
    writer = ParaverWriter(str(tmp_path / "nn"))
    an = Analysis(SessionConfig(spec=SpecVersion.V1_0), paraver=writer)
    an.consume(iter(keep))
    an.finish()
    files = writer.finalize(an.ledger)
    pcf = next(f for f in files if f.suffix == ".pcf").read_text()
    values = _pcf_values(pcf, 1000)
    assert values[5] == "5"
    assert values[3] == "BU"
