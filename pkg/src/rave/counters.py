"""Vectorization counters, region bookkeeping, and derived metrics.

Counts are exact 64-bit-scale integers, bucketed by the SEW in effect when
each vector instruction executed (buckets 0..3 = SEW 8/16/32/64). Regions
are spans between user events on one event id, carrying the counter delta
accumulated inside the span.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, fields, replace

from .isa.types import DecodedInstr, InstrType, VMajor, VMinor
from .markers import NameEvent, NameValue, UserEvent
from .vstate import VectorState, VectorStateUnknown

log = logging.getLogger(__name__)

SEWS = 4
SEW_BITS = (8, 16, 32, 64)


def _buckets() -> list[int]:
    return [0] * SEWS


@dataclass
class MetricCounters:
    scalar_instr: int = 0
    vsetvl_instr: int = 0
    vector_instr: list[int] = field(default_factory=_buckets)
    vunit_instr: list[int] = field(default_factory=_buckets)
    vstride_instr: list[int] = field(default_factory=_buckets)
    vidx_instr: list[int] = field(default_factory=_buckets)
    vfp_instr: list[int] = field(default_factory=_buckets)
    vint_instr: list[int] = field(default_factory=_buckets)
    vmask_instr: list[int] = field(default_factory=_buckets)
    velem: list[int] = field(default_factory=_buckets)

    def copy(self) -> MetricCounters:
        return replace(
            self,
            **{
                f.name: list(getattr(self, f.name))
                for f in fields(self)
                if f.name not in ("scalar_instr", "vsetvl_instr")
            },
        )

    def zero(self) -> None:
        self.scalar_instr = 0
        self.vsetvl_instr = 0
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, list):
                value[:] = _buckets()

    def total_vector(self) -> int:
        return sum(self.vector_instr)

    def total(self) -> int:
        return self.scalar_instr + self.vsetvl_instr + self.total_vector()

    def arith(self, s: int) -> int:
        return self.vfp_instr[s] + self.vint_instr[s]

    def mem(self, s: int) -> int:
        return self.vunit_instr[s] + self.vstride_instr[s] + self.vidx_instr[s]

    def other(self, s: int) -> int:
        return self.vector_instr[s] - self.arith(s) - self.mem(s) - self.vmask_instr[s]

    def delta(self, earlier: MetricCounters) -> MetricCounters:
        """Componentwise self − earlier; counters never run backwards."""
        out = MetricCounters()
        for f in fields(self):
            a, b = getattr(self, f.name), getattr(earlier, f.name)
            if isinstance(a, list):
                diff = [x - y for x, y in zip(a, b)]
                if any(d < 0 for d in diff):
                    raise ValueError(f"negative delta in {f.name}")
                setattr(out, f.name, diff)
            else:
                if a < b:
                    raise ValueError(f"negative delta in {f.name}")
                setattr(out, f.name, a - b)
        return out


_ARITH_COUNTER = {VMinor.FP: "vfp_instr", VMinor.INT: "vint_instr"}
_MEM_COUNTER = {
    VMinor.UNIT: "vunit_instr",
    VMinor.STRIDE: "vstride_instr",
    VMinor.INDEX: "vidx_instr",
}


def count_instruction(
    counters: MetricCounters,
    instr: DecodedInstr,
    state: VectorState,
    strict: bool = False,
) -> None:
    """Apply one counted instruction; markers never reach this point."""
    t = instr.instr_type
    if t is InstrType.SCALAR:
        counters.scalar_instr += 1
        return
    if t is InstrType.VSETVL:
        counters.vsetvl_instr += 1
        return
    if t is not InstrType.VECTOR:
        raise ValueError(f"uncountable instruction type {t}")
    if state.vill and strict:
        raise VectorStateUnknown(
            f"vector instruction {instr.asm_string!r} with no valid vtype"
        )
    s = state.sew_bucket
    counters.vector_instr[s] += 1
    counters.velem[s] += state.vl
    if instr.v_major is VMajor.ARITH:
        getattr(counters, _ARITH_COUNTER[instr.v_minor])[s] += 1
    elif instr.v_major is VMajor.MEMORY:
        getattr(counters, _MEM_COUNTER[instr.v_minor])[s] += 1
    elif instr.v_major is VMajor.MASK:
        counters.vmask_instr[s] += 1
    # OTHER has no sub-counter; it is the derived remainder


@dataclass
class Region:
    event_id: int
    open_value: int
    open_index: int
    start_snapshot: MetricCounters
    close_value: int | None = None
    close_index: int | None = None
    delta: MetricCounters | None = None
    partial: bool = False  # a boundary fired while tracing was disabled

    @property
    def closed(self) -> bool:
        return self.close_index is not None


@dataclass
class RegionLedger:
    open_regions: dict[int, Region] = field(default_factory=dict)
    completed: list[Region] = field(default_factory=list)
    event_names: dict[int, str] = field(default_factory=dict)
    value_names: dict[tuple[int, int], str] = field(default_factory=dict)

    def on_user_event(self, ev: UserEvent, counters: MetricCounters) -> None:
        open_region = self.open_regions.pop(ev.event_id, None)
        if open_region is not None:
            open_region.close_value = ev.value_id
            open_region.close_index = ev.instr_index
            open_region.delta = counters.delta(open_region.start_snapshot)
            open_region.partial = open_region.partial or ev.while_disabled
            self.completed.append(open_region)
        elif ev.value_id == 0:
            log.warning(
                "event %d value 0 closes nothing (no open region)", ev.event_id
            )
        if ev.value_id != 0:
            self.open_regions[ev.event_id] = Region(
                event_id=ev.event_id,
                open_value=ev.value_id,
                open_index=ev.instr_index,
                start_snapshot=counters.copy(),
                partial=ev.while_disabled,
            )

    def on_name(self, action: NameEvent | NameValue) -> None:
        if isinstance(action, NameEvent):
            self.event_names[action.event_id] = action.name
        else:
            self.value_names[(action.event_id, action.value_id)] = action.name

    def reset(self) -> None:
        """Forget regions; names were declared once and survive."""
        self.open_regions.clear()
        self.completed.clear()


def derived_metrics(c: MetricCounters) -> dict:
    """Programmatic summary; zero denominators yield absent (None) values."""
    total = c.total()
    out: dict = {
        "total": total,
        "vector_mix": c.total_vector() / total if total else None,
        "avg_vl": {},
        "categories": {},
    }
    for s in range(SEWS):
        v = c.vector_instr[s]
        if not v:
            continue
        out["avg_vl"][SEW_BITS[s]] = c.velem[s] / v
        out["categories"][SEW_BITS[s]] = {
            "arith": c.arith(s) / v,
            "mem": c.mem(s) / v,
            "mask": c.vmask_instr[s] / v,
            "other": c.other(s) / v,
        }
    return out


def reset(counters: MetricCounters, ledger: RegionLedger) -> None:
    counters.zero()
    ledger.reset()
