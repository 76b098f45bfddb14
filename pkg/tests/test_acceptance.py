"""Acceptance gate: one test per shipping requirement, pinned tolerances.

Run with -v to get one pass/fail line per requirement.
"""

import io
import random
import re
import time
from pathlib import Path

from conftest import fixed_stream, load_corpus
from rave import markers
from rave.analysis import Analysis, SessionConfig
from rave.counters import MetricCounters
from rave.isa.decode import decode
from rave.isa.types import SpecVersion
from rave.paraver import ParaverWriter
from rave.report import render_report
from rave.synth import generate_synthetic
from rave.vstate import VectorState, apply_vsetvl
from rave.wire import TraceRecord, parse_stream, write_stream

GOLDEN = Path(__file__).parent / "data" / "golden"

PCT_TOL = 0.01  # percentage points
MIX_REPORT_BUDGET_S = 1.0
SUM_IDENTITY_BUDGET_S = 30.0
THROUGHPUT_SPREAD_LIMIT = 2.0


# --- reference vector-mix reports -------------------------------------------

LEFT_COUNTS = dict(
    scalar=15818, vsetvl=5236, vector=17818, velem=4554281,
    vint=2466, vfp=0, vunit=1573, vstride=0, vidx=1569, vmask=8171,
)
RIGHT_COUNTS = dict(
    scalar=21866, vsetvl=9556, vector=13358, velem=3403218,
    vint=2481, vfp=0, vunit=1454, vstride=0, vidx=1574, vmask=4992,
)
LEFT_EXPECT = {
    "scalar_instr": 40.69, "vsetvl_instr": 13.47, "SEW 64 vector_instr": 45.84,
    "Arith": 13.84, "INT": 100.00, "Mem": 17.63, "unit": 50.06,
    "indexed": 49.94, "Mask": 45.86, "Other": 22.67,
}
RIGHT_EXPECT = {
    "scalar_instr": 48.83, "vsetvl_instr": 21.34, "SEW 64 vector_instr": 29.83,
    "Arith": 18.57, "Mem": 22.67, "unit": 48.02, "indexed": 51.98,
    "Mask": 37.37, "Other": 21.39,
}


def _counters_from(d) -> MetricCounters:
    c = MetricCounters()
    c.scalar_instr = d["scalar"]
    c.vsetvl_instr = d["vsetvl"]
    c.vector_instr[3] = d["vector"]
    c.velem[3] = d["velem"]
    for key in ("vint", "vfp", "vunit", "vstride", "vidx", "vmask"):
        getattr(c, f"{key}_instr")[3] = d[key]
    return c


def _percentages(text: str) -> dict[str, float]:
    out = {}
    for line in text.splitlines():
        if m := re.match(r"\s*(.+): \d+ \((\d+\.\d+) %\)", line):
            out.setdefault(m.group(1), float(m.group(2)))
    return out


def test_reference_mix_report_percentages():
    t0 = time.perf_counter()
    for counts, expect, avg in (
        (LEFT_COUNTS, LEFT_EXPECT, "255.60"),
        (RIGHT_COUNTS, RIGHT_EXPECT, "254.77"),
    ):
        text = render_report([], _counters_from(counts))
        got = _percentages(text)
        for label, want in expect.items():
            assert abs(got[label] - want) <= PCT_TOL, (label, got[label], want)
        assert f"avg_VL: {avg} elements" in text
    assert time.perf_counter() - t0 < MIX_REPORT_BUDGET_S


# --- counter sum identities on randomized streams ---------------------------

def test_counter_sum_identities_hold_on_randomized_streams():
    t0 = time.perf_counter()
    rng = random.Random(2024)
    for _ in range(1000):
        spec = rng.choice((SpecVersion.V0_7_1, SpecVersion.V1_0))
        vlen = 128 << rng.randrange(8)
        total = rng.randrange(20, 300)
        recs = list(
            generate_synthetic(
                total,
                rng.randrange(0, 10**6 + 1),
                vlen_bits=vlen,
                sew=rng.choice((8, 16, 32, 64)),
                avl=rng.randrange(1, 400),
                seed=rng.randrange(2**32),
                spec=spec,
            )
        )
        an = Analysis(SessionConfig(spec=spec, vlen_bits=vlen))
        an.consume(iter(recs))
        an.finish()
        c = an.counters
        assert c.scalar_instr + c.vsetvl_instr + sum(c.vector_instr) == len(recs)
        for s in range(4):
            assert c.arith(s) == c.vfp_instr[s] + c.vint_instr[s]
            assert c.mem(s) == (
                c.vunit_instr[s] + c.vstride_instr[s] + c.vidx_instr[s]
            )
            assert c.vector_instr[s] == (
                c.arith(s) + c.mem(s) + c.vmask_instr[s] + c.other(s)
            )
    assert time.perf_counter() - t0 < SUM_IDENTITY_BUDGET_S


# --- marker name/event round trip through the full pipeline -----------------

def test_marker_names_and_events_round_trip_through_pipeline():
    rng = random.Random(99)
    alphabet = (
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-./ "
    )
    ids = rng.sample(range(1, 0x100000), 400)
    cases = []
    records: list[TraceRecord] = []
    pc = 0x1000
    for i in range(200):
        event_id, value_id = ids[2 * i], rng.randrange(1, 0x100000)
        ename = "".join(rng.choice(alphabet) for _ in range(rng.randrange(1, 32)))
        vname = "".join(rng.choice(alphabet) for _ in range(rng.randrange(1, 32)))
        cases.append((event_id, value_id, ename, vname))
        words = markers.name_event_words(event_id, ename)
        words += markers.name_value_words(event_id, value_id, vname)
        for w in words:
            records.append(TraceRecord(pc, w))
            pc += 4
        records.append(TraceRecord(pc, markers.or_word(10, 11), event_id, value_id))
        records.append(TraceRecord(pc + 4, markers.or_word(10, 11), event_id, 0))
        pc += 8

    buf = io.StringIO()
    write_stream(iter(records), buf)
    an = Analysis(SessionConfig(spec=SpecVersion.V1_0))
    an.consume(parse_stream(io.BytesIO(buf.getvalue().encode())))
    an.finish()

    assert len(an.ledger.completed) == 200
    by_event = {r.event_id: r for r in an.ledger.completed}
    for event_id, value_id, ename, vname in cases:
        assert an.ledger.event_names[event_id] == ename
        assert an.ledger.value_names[(event_id, value_id)] == vname
        region = by_event[event_id]
        assert (region.open_value, region.close_value) == (value_id, 0)


# --- decoder equivalence against the frozen assembler oracle ----------------

def test_decoder_matches_frozen_assembler_oracle():
    rows = 0
    for name, spec in (
        ("corpus_v0_7_1.txt", SpecVersion.V0_7_1),
        ("corpus_v1_0.txt", SpecVersion.V1_0),
    ):
        for row in load_corpus(name):
            d = decode(row["word"], spec, record_scalar=True)
            got = (
                d.instr_type.name, d.v_major.name, d.v_minor.name,
                d.mnemonic, d.asm_string,
            )
            want = (
                row["itype"], row["major"], row["minor"],
                row["mnemonic"], row["asm"],
            )
            assert got == want, f"{name}: {row['word']:#010x}"
            rows += 1
    assert rows >= 300


# --- vsetvl semantics against a reference functional model ------------------

_V10_LMUL = {(1, 1): 0, (2, 1): 1, (4, 1): 2, (8, 1): 3,
             (1, 8): 5, (1, 4): 6, (1, 2): 7}
_V071_LMUL = {(1, 1): 0, (2, 1): 1, (4, 1): 2, (8, 1): 3}
_SEW_CODE = {8: 0, 16: 1, 32: 2, 64: 3}


def _vsetvli_word(spec, sew, lmul, rd=11, rs1=10) -> int:
    if spec is SpecVersion.V1_0:
        zimm = _V10_LMUL[lmul] | (_SEW_CODE[sew] << 3) | (1 << 6) | (1 << 7)
    else:
        zimm = _V071_LMUL[lmul] | (_SEW_CODE[sew] << 2)
    return (zimm << 20) | (rs1 << 15) | (7 << 12) | (rd << 7) | 0x57


def _reference_vl(vlen, sew, lmul, avl) -> int:
    num, den = lmul
    vlmax = (vlen * num) // (sew * den)
    return min(avl, vlmax)


def test_vsetvl_matches_reference_functional_model():
    def configure(spec, sew, lmul, avl, vlen=16384):
        instr = decode(_vsetvli_word(spec, sew, lmul), spec)
        return apply_vsetvl(VectorState(vlen_bits=vlen), instr, spec, avl=avl)

    # pinned cases: vlen=16384, SEW=64, LMUL=1 -> VLMAX=256
    assert configure(SpecVersion.V1_0, 64, (1, 1), 10**9).vl == 256
    assert configure(SpecVersion.V1_0, 64, (1, 1), 100).vl == 100

    rng = random.Random(5)
    for _ in range(50):
        spec = rng.choice((SpecVersion.V0_7_1, SpecVersion.V1_0))
        table = _V10_LMUL if spec is SpecVersion.V1_0 else _V071_LMUL
        while True:
            sew = rng.choice((8, 16, 32, 64))
            lmul = rng.choice(sorted(table))
            if sew * lmul[1] <= 64 * lmul[0]:  # fractional-LMUL legality
                break
        vlmax = _reference_vl(16384, sew, lmul, 10**9)
        avl = max(0, vlmax + rng.randrange(-3, 4))
        if rng.random() < 0.2:
            avl = rng.randrange(0, 2 * vlmax)
        state = configure(spec, sew, lmul, avl)
        assert not state.vill
        assert state.vl == _reference_vl(16384, sew, lmul, avl)
        assert state.sew == sew
        assert (state.lmul_num, state.lmul_den) == lmul


# --- restart report equals a suffix-only run --------------------------------

def test_restart_report_equals_suffix_only_report():
    rng = random.Random(31337)
    for _ in range(100):
        spec = rng.choice((SpecVersion.V0_7_1, SpecVersion.V1_0))
        prefix = list(
            generate_synthetic(
                rng.randrange(10, 200), rng.randrange(0, 10**6 + 1),
                sew=rng.choice((8, 16, 32, 64)), avl=rng.randrange(1, 300),
                seed=rng.randrange(2**32), spec=spec,
            )
        )
        suffix = list(
            generate_synthetic(
                rng.randrange(10, 200), rng.randrange(0, 10**6 + 1),
                sew=rng.choice((8, 16, 32, 64)), avl=rng.randrange(1, 300),
                seed=rng.randrange(2**32), spec=spec,
            )
        )
        if rng.random() < 0.5:  # wrap the tail in one user-event region
            event_id = rng.randrange(1, 1000)
            suffix.insert(1, TraceRecord(0x9000, markers.or_word(10, 11), event_id, 1))
            suffix.append(TraceRecord(0x9004, markers.or_word(10, 11), event_id, 0))
        full = prefix + [TraceRecord(0x8000, markers.RESTART_WORD)] + suffix

        runs = []
        for recs in (full, suffix):
            an = Analysis(SessionConfig(spec=spec))
            an.consume(iter(recs))
            an.finish()
            runs.append(an)
        assert runs[0].counters == runs[1].counters
        assert runs[0].report() == runs[1].report()


# --- throughput stays flat as vector density sweeps -------------------------

def test_throughput_flat_across_vector_densities():
    times = []
    for ratio in (10, 10**3, 10**5):
        an = Analysis(SessionConfig(spec=SpecVersion.V1_0))
        t0 = time.perf_counter()
        an.consume(generate_synthetic(10**7, ratio, seed=ratio))
        times.append(time.perf_counter() - t0)
        assert an.counters.total() == 10**7 + 1
    assert max(times) / min(times) < THROUGHPUT_SPREAD_LIMIT, times


# --- trace files are reproducible and internally cross-referenced -----------

def _run_fixed_trace(tmp_path, name):
    writer = ParaverWriter(str(tmp_path / name))
    an = Analysis(
        SessionConfig(spec=SpecVersion.V1_0, record_scalar=True, region_index_base=1),
        paraver=writer,
    )
    an.consume(iter(fixed_stream()))
    an.finish()
    return {f.suffix: f.read_bytes() for f in writer.finalize(an.ledger)}


def _pcf_value_ids(pcf: str) -> dict[int, set[int]]:
    named: dict[int, set[int]] = {}
    current: list[int] = []
    in_values = False
    for line in pcf.splitlines():
        if line.startswith("EVENT_TYPE"):
            current, in_values = [], False
        elif m := re.match(r"\d+\s+(\d+)\s", line):
            current.append(int(m.group(1)))
            in_values = False
        elif line.startswith("VALUES"):
            in_values = True
            for t in current:
                named.setdefault(t, set())
        elif in_values and (m := re.match(r"(\d+)\s", line)):
            for t in current:
                named[t].add(int(m.group(1)))
    return named


def test_paraver_outputs_reproducible_and_cross_referenced(tmp_path):
    first = _run_fixed_trace(tmp_path, "a")
    second = _run_fixed_trace(tmp_path, "b")
    for ext in (".prv", ".pcf", ".row"):
        assert first[ext] == second[ext]
        assert first[ext] == (GOLDEN / f"fixed{ext}").read_bytes()

    named = _pcf_value_ids(first[".pcf"].decode())
    emitted: dict[int, set[int]] = {}
    for line in first[".prv"].decode().splitlines()[1:]:
        fields = line.split(":")
        assert fields[0] == "2"
        pairs = fields[6:]
        for t, v in zip(pairs[::2], pairs[1::2]):
            emitted.setdefault(int(t), set()).add(int(v))

    for event_type, values in emitted.items():
        if event_type not in named:  # numeric payload types (vl, SEW widths)
            assert all(v > 0 for v in values)
            continue
        for v in values:
            assert v == 0 or v in named[event_type], (event_type, v)
