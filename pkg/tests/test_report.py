"""Console report rendering: pinned reference percentages and layout."""

import re
from pathlib import Path

from conftest import fixed_stream
from rave.analysis import Analysis, SessionConfig
from rave.counters import MetricCounters, Region
from rave.isa.types import SpecVersion
from rave.report import render_report

GOLDEN = Path(__file__).parent / "data" / "golden"


def sew64_counters(
    scalar, vsetvl, vector, velem, vint, vfp, vunit, vstride, vidx, vmask
) -> MetricCounters:
    c = MetricCounters()
    c.scalar_instr = scalar
    c.vsetvl_instr = vsetvl
    c.vector_instr[3] = vector
    c.velem[3] = velem
    c.vint_instr[3] = vint
    c.vfp_instr[3] = vfp
    c.vunit_instr[3] = vunit
    c.vstride_instr[3] = vstride
    c.vidx_instr[3] = vidx
    c.vmask_instr[3] = vmask
    return c


# two published per-region listings with independently known percentages
LEFT = sew64_counters(
    scalar=15818,
    vsetvl=5236,
    vector=17818,
    velem=4554281,
    vint=2466,
    vfp=0,
    vunit=1573,
    vstride=0,
    vidx=1569,
    vmask=8171,
)
RIGHT = sew64_counters(
    scalar=21866,
    vsetvl=9556,
    vector=13358,
    velem=3403218,
    vint=2481,
    vfp=0,
    vunit=1454,
    vstride=0,
    vidx=1574,
    vmask=4992,
)


def render_whole(counters):
    return render_report([], counters)


def test_left_column_reference_values():
    text = render_whole(LEFT)
    assert "tot_instr: 38872" in text
    assert "scalar_instr: 15818 (40.69 %)" in text
    assert "vsetvl_instr: 5236 (13.47 %)" in text
    assert "SEW 64 vector_instr: 17818 (45.84 %)" in text
    assert "avg_VL: 255.60 elements" in text
    assert "Arith: 2466 (13.84 %)" in text
    assert "FP: 0 (0.00 %)" in text
    assert "INT: 2466 (100.00 %)" in text
    assert "Mem: 3142 (17.63 %)" in text
    assert "unit: 1573 (50.06 %)" in text
    assert "strided: 0 (0.00 %)" in text
    assert "indexed: 1569 (49.94 %)" in text
    assert "Mask: 8171 (45.86 %)" in text
    assert "Other: 4039 (22.67 %)" in text


def test_right_column_reference_values():
    text = render_whole(RIGHT)
    assert "tot_instr: 44780" in text
    assert "scalar_instr: 21866 (48.83 %)" in text
    assert "vsetvl_instr: 9556 (21.34 %)" in text
    assert "SEW 64 vector_instr: 13358 (29.83 %)" in text
    assert "avg_VL: 254.77 elements" in text
    assert "Arith: 2481 (18.57 %)" in text
    assert "Mem: 3028 (22.67 %)" in text
    assert "unit: 1454 (48.02 %)" in text
    assert "indexed: 1574 (51.98 %)" in text
    assert "Mask: 4992 (37.37 %)" in text
    assert "Other: 2857 (21.39 %)" in text


def test_rendered_percentages_match_recomputation():
    text = render_whole(LEFT) + render_whole(RIGHT)
    for count, pct, base in re.findall(
        r"(\d+) \((\d+\.\d\d) %\)(?:.*of (\d+))?", text
    ):
        assert 0.0 <= float(pct) <= 100.0
    # spot check the independent recomputation path for every line
    for c in (LEFT, RIGHT):
        tot = c.total()
        text = render_whole(c)
        scalar_pct = float(re.search(r"scalar_instr: \d+ \((\d+\.\d+) %", text).group(1))
        assert abs(scalar_pct - 100 * c.scalar_instr / tot) < 0.005 + 1e-9


def test_region_header_and_numbering():
    region = Region(
        event_id=1000,
        open_value=3,
        open_index=120,
        start_snapshot=MetricCounters(),
        close_value=0,
        close_index=260,
        delta=LEFT.copy(),
    )
    text = render_report(
        [region],
        LEFT,
        event_names={1000: "code_region"},
        value_names={(1000, 3): "BU"},
        region_index_base=3,
    )
    assert "Reg. #3: Event 1000(code_region), Value 3(BU)" in text
    assert text.count("tot_instr: 38872") == 2  # region delta + whole stream


def test_unnamed_ids_render_numerically():
    region = Region(
        event_id=42,
        open_value=9,
        open_index=0,
        start_snapshot=MetricCounters(),
        close_value=0,
        close_index=1,
        delta=MetricCounters(),
    )
    text = render_report([region], MetricCounters())
    assert "Reg. #0: Event 42(42), Value 9(9)" in text


def test_partial_region_is_annotated():
    region = Region(
        event_id=1,
        open_value=2,
        open_index=0,
        start_snapshot=MetricCounters(),
        close_value=0,
        close_index=0,
        delta=MetricCounters(),
        partial=True,
    )
    text = render_report([region], MetricCounters())
    assert "[partially traced]" in text


def test_empty_counters_render_without_percentages():
    text = render_whole(MetricCounters())
    assert "tot_instr: 0" in text
    assert "avg_VL" not in text
    assert "%" not in text.split("scalar_instr:")[1].splitlines()[0]


def test_zero_vector_block_suppressed():
    c = MetricCounters()
    c.scalar_instr = 5
    text = render_whole(c)
    assert "SEW" not in text


def test_velem_only_bucket_still_listed():
    c = MetricCounters()
    c.velem[0] = 7  # counted elements without instructions cannot happen in
    # practice, but the renderer must not divide by zero
    text = render_whole(c)
    assert "SEW 8 vector_instr: 0" in text
    assert "avg_VL" not in text


def test_color_mode_wraps_headers_only():
    region = Region(
        event_id=1,
        open_value=2,
        open_index=0,
        start_snapshot=MetricCounters(),
        close_value=0,
        close_index=0,
        delta=MetricCounters(),
    )
    plain = render_report([region], MetricCounters())
    colored = render_report([region], MetricCounters(), color=True)
    assert "\x1b[1m" in colored and "\x1b[0m" in colored
    assert colored.replace("\x1b[1m", "").replace("\x1b[0m", "") == plain


def test_render_is_pure():
    assert render_whole(LEFT) == render_whole(LEFT)


def test_full_session_report_golden():
    an = Analysis(
        SessionConfig(spec=SpecVersion.V1_0, record_scalar=True, region_index_base=1)
    )
    an.consume(iter(fixed_stream()))
    an.finish()
    assert an.report() == (GOLDEN / "fixed_report.txt").read_text()
