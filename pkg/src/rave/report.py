"""Console report: per-region counter blocks plus a whole-stream summary.

Percentages are two-decimal, rounded half away from zero. Denominators:
scalar/vsetvl/vector lines against tot_instr; Arith/Mem/Mask/Other against
the SEW bucket's vector_instr; FP/INT against Arith; unit/strided/indexed
against Mem. A zero denominator suppresses the parenthetical instead of
dividing.
"""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal

from .counters import SEW_BITS, SEWS, MetricCounters, Region

_TWO_PLACES = Decimal("0.01")
_BOLD = "\x1b[1m"
_RESET = "\x1b[0m"


def _quant(num: int, den: int) -> str:
    return str((Decimal(num) * 100 / Decimal(den)).quantize(_TWO_PLACES, ROUND_HALF_UP))


def _line(out: list[str], indent: int, label: str, count: int, den: int) -> None:
    if den:
        out.append(f"{' ' * indent}{label}: {count} ({_quant(count, den)} %)")
    else:
        out.append(f"{' ' * indent}{label}: {count}")


def _counter_block(out: list[str], c: MetricCounters, indent: int) -> None:
    tot = c.total()
    out.append(f"{' ' * indent}tot_instr: {tot}")
    _line(out, indent + 4, "scalar_instr", c.scalar_instr, tot)
    _line(out, indent + 4, "vsetvl_instr", c.vsetvl_instr, tot)
    for s in range(SEWS):
        vec = c.vector_instr[s]
        if not vec and not c.velem[s]:
            continue
        _line(out, indent + 4, f"SEW {SEW_BITS[s]} vector_instr", vec, tot)
        if vec:
            avg = (Decimal(c.velem[s]) / Decimal(vec)).quantize(_TWO_PLACES, ROUND_HALF_UP)
            out.append(f"{' ' * (indent + 8)}avg_VL: {avg} elements")
        arith, mem = c.arith(s), c.mem(s)
        _line(out, indent + 8, "Arith", arith, vec)
        _line(out, indent + 12, "FP", c.vfp_instr[s], arith)
        _line(out, indent + 12, "INT", c.vint_instr[s], arith)
        _line(out, indent + 8, "Mem", mem, vec)
        _line(out, indent + 12, "unit", c.vunit_instr[s], mem)
        _line(out, indent + 12, "strided", c.vstride_instr[s], mem)
        _line(out, indent + 12, "indexed", c.vidx_instr[s], mem)
        _line(out, indent + 8, "Mask", c.vmask_instr[s], vec)
        _line(out, indent + 8, "Other", c.other(s), vec)


def render_report(
    regions: list[Region],
    counters: MetricCounters,
    event_names: dict[int, str] | None = None,
    value_names: dict[tuple[int, int], str] | None = None,
    region_index_base: int = 0,
    color: bool = False,
) -> str:
    """Pure text rendering; byte-identical for identical inputs."""
    event_names = event_names or {}
    value_names = value_names or {}
    bold = (lambda s: f"{_BOLD}{s}{_RESET}") if color else (lambda s: s)
    out: list[str] = []
    for n, region in enumerate(regions, region_index_base):
        ename = event_names.get(region.event_id, str(region.event_id))
        vname = value_names.get(
            (region.event_id, region.open_value), str(region.open_value)
        )
        suffix = " [partially traced]" if region.partial else ""
        out.append(
            bold(
                f"Reg. #{n}: Event {region.event_id}({ename}), "
                f"Value {region.open_value}({vname}){suffix}"
            )
        )
        _counter_block(out, region.delta, 4)
    out.append(bold("Whole stream:"))
    _counter_block(out, counters, 4)
    return "\n".join(out) + "\n"
