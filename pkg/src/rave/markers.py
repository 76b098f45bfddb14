"""In-band instrumentation protocol: gating, user events, name transmission.

Marker instructions are dead writes to x0 (see isa.decode.classify_marker).
This module turns the recognized MarkerKind stream into protocol actions:
trace gating toggles, counter resets, user events, and region/value names
spelled out one character per lui payload between delimiter pairs.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .isa.types import MarkerKind, MarkerOp

log = logging.getLogger(__name__)

START_WORD = 0xFFD00013  # li x0, -3
STOP_WORD = 0xFFC00013  # li x0, -4
RESTART_WORD = 0xFFE00013  # li x0, -2
DELIM_WORD = 0xFFF00013  # li x0, -1


def lui_word(imm20: int) -> int:
    if not 0 <= imm20 < (1 << 20):
        raise ValueError(f"lui payload out of range: {imm20}")
    return (imm20 << 12) | 0x37


def or_word(rs1: int, rs2: int) -> int:
    return (rs2 << 20) | (rs1 << 15) | (0b110 << 12) | 0x33


def name_event_words(event_id: int, name: str) -> list[int]:
    """Marker sequence declaring a display name for an event id."""
    words = [lui_word(event_id), DELIM_WORD]
    words += [lui_word(b) for b in name.encode()]
    words.append(DELIM_WORD)
    return words


def name_value_words(event_id: int, value_id: int, name: str) -> list[int]:
    """Marker sequence declaring a display name for one value of an event."""
    words = [lui_word(event_id), lui_word(value_id), DELIM_WORD]
    words += [lui_word(b) for b in name.encode()]
    words.append(DELIM_WORD)
    return words


def decode_name_chars(payloads: list[int]) -> str:
    """Low byte of each payload is one character; lossy UTF-8."""
    return bytes(p & 0xFF for p in payloads).decode("utf-8", errors="replace")


class MissingRegisterValues(ValueError):
    """Event marker reached the analyzer without its register values."""


@dataclass(frozen=True)
class Reset:
    instr_index: int


@dataclass(frozen=True)
class UserEvent:
    event_id: int
    value_id: int
    instr_index: int
    while_disabled: bool = False


@dataclass(frozen=True)
class NameEvent:
    event_id: int
    name: str


@dataclass(frozen=True)
class NameValue:
    event_id: int
    value_id: int
    name: str


Action = Reset | UserEvent | NameEvent | NameValue


@dataclass
class ProtocolState:
    tracing_enabled: bool = True
    # payloads seen outside a delimiter pair, with the marker ordinal they
    # arrived at; stale ones (no delimiter within 2 markers) are discarded
    _pending: list[tuple[int, int]] = field(default_factory=list)
    _collecting: bool = False
    _ids: tuple[int, ...] = ()
    _chars: list[int] = field(default_factory=list)
    _marker_ordinal: int = 0

    def on_marker(
        self,
        kind: MarkerKind,
        reg_values: tuple[int, int] | None = None,
        instr_index: int = 0,
    ) -> list[Action]:
        self._marker_ordinal += 1
        op = kind.op

        if op is MarkerOp.LUI_PAYLOAD:
            if self._collecting:
                self._chars.append(kind.imm)
            else:
                self._drop_stale()
                self._pending.append((kind.imm, self._marker_ordinal))
            return []

        if op is MarkerOp.NAME_DELIMITER:
            return self._on_delimiter()

        actions = list(self._abort_collection(f"interrupted by {op.value} marker"))
        if op is MarkerOp.START_TRACE:
            self.tracing_enabled = True
        elif op is MarkerOp.STOP_TRACE:
            self.tracing_enabled = False
        elif op is MarkerOp.RESTART_TRACE:
            actions.append(Reset(instr_index))
        elif op is MarkerOp.EVENT_AND_VALUE:
            if reg_values is None:
                raise MissingRegisterValues(
                    f"event marker needs x{kind.src1}/x{kind.src2} values"
                )
            actions.append(
                UserEvent(
                    event_id=reg_values[0],
                    value_id=reg_values[1],
                    instr_index=instr_index,
                    while_disabled=not self.tracing_enabled,
                )
            )
        return actions

    def finish(self) -> None:
        """End of stream; report an unterminated name sequence."""
        self._abort_collection("stream ended")
        self._pending.clear()

    def _on_delimiter(self) -> list[Action]:
        if self._collecting:
            name = decode_name_chars(self._chars)
            ids = self._ids
            self._collecting = False
            self._ids = ()
            self._chars = []
            if len(ids) == 1:
                return [NameEvent(ids[0], name)]
            return [NameValue(ids[0], ids[1], name)]
        self._drop_stale()
        ids = tuple(imm for imm, _ in self._pending)
        self._pending.clear()
        if not ids:
            log.warning("name delimiter with no preceding id payload; ignored")
            return []
        if len(ids) > 2:
            log.warning("%d id payloads before delimiter; keeping the last two", len(ids))
            ids = ids[-2:]
        self._collecting = True
        self._ids = ids
        self._chars = []
        return []

    def _drop_stale(self) -> None:
        fresh = [(imm, seen) for imm, seen in self._pending if self._marker_ordinal - seen <= 2]
        for imm, _ in self._pending[: len(self._pending) - len(fresh)]:
            log.warning("discarding id payload %#x with no delimiter", imm)
        self._pending = fresh

    def _abort_collection(self, why: str) -> list[Action]:
        if self._collecting:
            log.warning("name sequence %s; partial name dropped", why)
            self._collecting = False
            self._ids = ()
            self._chars = []
        if self._pending:
            for imm, _ in self._pending:
                log.warning("discarding id payload %#x with no delimiter", imm)
            self._pending.clear()
        return []
