"""Paraver trace emission: .prv records, .pcf name tables, .row labels.

The "time" axis is the 0-based index of counted instructions; markers and
untraced spans consume no time. One combined event line is written per
instruction (``--split-events`` switches to one line per type/value pair).
The header carries a fixed date so identical inputs produce byte-identical
files.
"""

from __future__ import annotations

import shutil
import tempfile
from pathlib import Path

from .counters import RegionLedger
from .isa.types import DecodedInstr, InstrType, class_value, class_value_names
from .markers import UserEvent
from .vstate import VectorState

TYPE_MNEMONIC = 90000001
TYPE_VL = 90000002
TYPE_SEW = 90000003
TYPE_CLASS = 90000004

FIRST_SCALAR_DETAIL_CODE = 100000

_HEADER_DATE = "01/01/1970 at 00:00"
_RECORD_PREFIX = "2:1:1:1:1:"


class ParaverWriter:
    """Accumulates event records in a spool so a trace restart can drop
    everything emitted so far; finalize() assembles the three files."""

    def __init__(self, prefix: str | Path, split_events: bool = False):
        self.prefix = Path(prefix)
        self.split_events = split_events
        self._spool = tempfile.TemporaryFile(mode="w+", encoding="ascii")
        self._max_time = 0
        self._used_codes: dict[int, str] = {}
        self._scalar_detail: dict[str, int] = {}
        self._used_classes: set[int] = set()
        self._used_events: dict[int, set[int]] = {}

    def instruction(self, index: int, instr: DecodedInstr, state: VectorState) -> None:
        code = instr.paraver_code
        if instr.instr_type is InstrType.SCALAR and instr.mnemonic:
            code = self._scalar_detail.setdefault(
                instr.mnemonic, FIRST_SCALAR_DETAIL_CODE + len(self._scalar_detail)
            )
            self._used_codes[code] = instr.mnemonic
        elif instr.instr_type is InstrType.SCALAR:
            self._used_codes[code] = "scalar"
        else:
            self._used_codes[code] = instr.mnemonic
        pairs = [(TYPE_MNEMONIC, code)]
        if instr.instr_type is InstrType.VECTOR:
            cls = class_value(instr.v_major, instr.v_minor)
            self._used_classes.add(cls)
            pairs += [(TYPE_VL, state.vl), (TYPE_SEW, state.sew), (TYPE_CLASS, cls)]
        self._emit(index, pairs)

    def user_event(self, ev: UserEvent) -> None:
        self._used_events.setdefault(ev.event_id, set()).add(ev.value_id)
        self._emit(ev.instr_index, [(ev.event_id, ev.value_id)])

    def reset(self) -> None:
        """Restart marker: drop every record emitted so far."""
        self._spool.seek(0)
        self._spool.truncate()
        self._max_time = 0
        self._used_codes.clear()
        self._scalar_detail.clear()
        self._used_classes.clear()
        self._used_events.clear()

    def _emit(self, time: int, pairs: list[tuple[int, int]]) -> None:
        if time > self._max_time:
            self._max_time = time
        if self.split_events:
            for t, v in pairs:
                self._spool.write(f"{_RECORD_PREFIX}{time}:{t}:{v}\n")
        else:
            tail = ":".join(f"{t}:{v}" for t, v in pairs)
            self._spool.write(f"{_RECORD_PREFIX}{time}:{tail}\n")

    def finalize(self, ledger: RegionLedger) -> list[Path]:
        """Write .prv/.pcf/.row next to the prefix and return their paths."""
        self.prefix.parent.mkdir(parents=True, exist_ok=True)
        prv = self.prefix.with_suffix(".prv")
        pcf = self.prefix.with_suffix(".pcf")
        row = self.prefix.with_suffix(".row")

        with prv.open("w", encoding="ascii") as out:
            out.write(f"#Paraver ({_HEADER_DATE}):{self._max_time}:1(1):1:1(1:1)\n")
            self._spool.seek(0)
            shutil.copyfileobj(self._spool, out)
        self._spool.close()

        pcf.write_text(self._render_pcf(ledger), encoding="utf-8")
        row.write_text(
            "LEVEL CPU SIZE 1\n1.node1\n\n"
            "LEVEL NODE SIZE 1\nnode1\n\n"
            "LEVEL THREAD SIZE 1\nTHREAD 1.1.1\n",
            encoding="ascii",
        )
        return [prv, pcf, row]

    def _render_pcf(self, ledger: RegionLedger) -> str:
        parts = [
            "DEFAULT_OPTIONS\n\nLEVEL               THREAD\nUNITS               INSTRUCTIONS\n\n",
            "DEFAULT_SEMANTIC\n\nTHREAD_FUNC          State As Is\n\n",
        ]

        def block(type_id: int, name: str, values: dict[int, str] | None) -> None:
            parts.append(f"EVENT_TYPE\n0    {type_id}    {name}\n")
            if values is not None:
                parts.append("VALUES\n0      End\n")
                for v in sorted(values):
                    parts.append(f"{v}      {values[v]}\n")
            parts.append("\n")

        block(TYPE_MNEMONIC, "Instruction mnemonic",
              {c: self._used_codes[c] for c in self._used_codes})
        block(TYPE_VL, "Vector length (elements)", None)
        block(TYPE_SEW, "Element width (bits)", None)
        names = class_value_names()
        block(TYPE_CLASS, "Vector instruction class",
              {c: names[c] for c in self._used_classes})
        for event_id in sorted(self._used_events):
            ename = ledger.event_names.get(event_id, str(event_id))
            values = {
                v: ledger.value_names.get((event_id, v), str(v))
                for v in self._used_events[event_id]
                if v != 0
            }
            block(event_id, ename, values)
        return "".join(parts)
