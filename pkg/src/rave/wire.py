"""The rave-wire v1 text format carrying executed-instruction records.

One record per line: `I <pc-hex> <raw-hex> [<rs1-hex|-> <rs2-hex|->]`.
Lines starting with `#` are comments; a `# rave-wire v<N>` comment declares
the format version. Producers must attach the two register-value columns on
event markers (`or x0,rs1,rs2`) and on vsetvl-family instructions with
rs1 != x0 — the only records whose register contents the analysis reads.
"""

from __future__ import annotations

import logging
from typing import IO, Iterable, Iterator, NamedTuple

log = logging.getLogger(__name__)

WIRE_HEADER = "# rave-wire v1"


class TraceRecord(NamedTuple):
    pc: int
    raw: int
    rs1_value: int | None = None
    rs2_value: int | None = None


class MalformedLine(ValueError):
    def __init__(self, lineno: int, text: bytes | str, why: str):
        if isinstance(text, bytes):
            text = text.decode("ascii", errors="replace")
        super().__init__(f"line {lineno}: {why}: {text.strip()!r}")
        self.lineno = lineno


def parse_stream(stream: Iterable[bytes], permissive: bool = False) -> Iterator[TraceRecord]:
    """Yield records from a binary line source (file, pipe, or stdin buffer).

    Malformed lines raise MalformedLine in strict mode and are skipped with
    a warning in permissive mode; a wire-format version mismatch is always
    fatal. The record path is kept allocation-light: million-record streams
    must parse in about a second.
    """
    _int = int
    _new = tuple.__new__
    _rec = TraceRecord
    lineno = 0
    for line in stream:
        lineno += 1
        if line.startswith(b"I "):
            try:
                parts = line.split()
                pc = _int(parts[1], 16)
                raw = _int(parts[2], 16)
                n = len(parts)
                if n == 3:
                    rs1 = rs2 = None
                elif n == 5:
                    p = parts[3]
                    rs1 = None if p == b"-" else _int(p, 16)
                    p = parts[4]
                    rs2 = None if p == b"-" else _int(p, 16)
                else:
                    raise ValueError
            except (ValueError, IndexError):
                if permissive:
                    log.warning("skipping line %d (bad fields)", lineno)
                    continue
                raise MalformedLine(lineno, line, "bad record fields") from None
            if (
                0 < raw < 4294967296
                and (raw <= 65535 or raw & 3 == 3)
                and 0 <= pc < 18446744073709551616
                and (rs1 is None or 0 <= rs1 < 18446744073709551616)
                and (rs2 is None or 0 <= rs2 < 18446744073709551616)
            ):
                yield _new(_rec, (pc, raw, rs1, rs2))
                continue
            if permissive:
                log.warning("skipping line %d (%s)", lineno, _why(pc, raw))
                continue
            raise MalformedLine(lineno, line, _why(pc, raw))
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith(b"#"):
            if stripped.startswith(b"# rave-wire") and stripped != WIRE_HEADER.encode():
                raise MalformedLine(lineno, line, "unsupported wire version")
            continue
        if permissive:
            log.warning("skipping line %d (unrecognized)", lineno)
            continue
        raise MalformedLine(lineno, line, "unrecognized line")


def _why(pc: int, raw: int) -> str:
    if not 0 < raw < (1 << 32):
        return "encoding outside 32 bits"
    if raw > 0xFFFF and raw & 3 != 3:
        return "compressed encoding wider than 16 bits"
    if not 0 <= pc < (1 << 64):
        return "pc outside 64 bits"
    return "register value outside 64 bits"


def format_record(rec: TraceRecord) -> str:
    raw = f"{rec.raw:04x}" if rec.raw <= 0xFFFF and (rec.raw & 3) != 3 else f"{rec.raw:08x}"
    if rec.rs1_value is None and rec.rs2_value is None:
        return f"I {rec.pc:x} {raw}"
    rs1 = "-" if rec.rs1_value is None else f"{rec.rs1_value:x}"
    rs2 = "-" if rec.rs2_value is None else f"{rec.rs2_value:x}"
    return f"I {rec.pc:x} {raw} {rs1} {rs2}"


def write_stream(records: Iterable[TraceRecord], out: IO[str], header: bool = True) -> None:
    """Inverse of parse_stream; emits the version header by default."""
    if header:
        out.write(WIRE_HEADER + "\n")
    write = out.write
    for rec in records:
        write(format_record(rec))
        write("\n")
