"""Regenerate include/rave_markers.h.

lui immediates must be literals in the instruction word, so sending one
runtime byte takes a 256-way switch with one distinct lui per arm; this
script writes that switch plus the fixed macro scaffolding around it.
"""

import sys
from pathlib import Path

HEADER = Path(__file__).resolve().parent.parent / "include" / "rave_markers.h"

PREAMBLE = """\
/* In-band instrumentation markers for traced RISC-V guests.
 *
 * Every marker is a dead write to x0: a real instruction an execution
 * tracer observes but whose architectural effect is void. Control words
 * use li x0, <n>; name payloads ride the 20-bit immediate of lui x0;
 * user events put (event, value) in a register pair read out through
 * or x0, rs1, rs2.
 *
 * Generated by tools/gen_marker_switch.py; edit that script, not this file.
 */

#ifndef RAVE_MARKERS_H
#define RAVE_MARKERS_H

#ifndef __riscv
#error "rave_markers.h emits RISC-V instructions; compile for a RISC-V target"
#endif

#define qemu_start_trace()   __asm__ volatile ("li x0, -3")
#define qemu_stop_trace()    __asm__ volatile ("li x0, -4")
#define qemu_restart_trace() __asm__ volatile ("li x0, -2")
#define __rave_name_delim()  __asm__ volatile ("li x0, -1")

#define qemu_event_and_value(e, v)                                          \\
    do {                                                                    \\
        unsigned long __rave_e = (unsigned long)(e);                        \\
        unsigned long __rave_v = (unsigned long)(v);                        \\
        __asm__ volatile ("or x0, %0, %1" : : "r"(__rave_e), "r"(__rave_v)); \\
    } while (0)

/* One byte of a name; the immediate must be a literal, hence the switch. */
static inline void __rave_lui_byte(unsigned char c)
{
    switch (c) {
"""

POSTAMBLE = """\
    }
}

static inline void __rave_send_name(const char *name)
{
    __rave_name_delim();
    for (; *name; ++name)
        __rave_lui_byte((unsigned char)*name);
    __rave_name_delim();
}

/* id and val must be integer literals (they become lui immediates) no
 * larger than 0xFFFFF; wider event ids still work via
 * qemu_event_and_value, they just cannot carry a display name. */
#define __rave_lui_imm(imm) __asm__ volatile ("lui x0, " #imm)

#define qemu_name_event(id, name)                                           \\
    do {                                                                    \\
        __rave_lui_imm(id);                                                 \\
        __rave_send_name(name);                                             \\
    } while (0)

#define qemu_name_value(id, val, name)                                      \\
    do {                                                                    \\
        __rave_lui_imm(id);                                                 \\
        __rave_lui_imm(val);                                                \\
        __rave_send_name(name);                                             \\
    } while (0)

#endif /* RAVE_MARKERS_H */
"""


def render() -> str:
    cases = "".join(
        f'    case 0x{c:02x}: __asm__ volatile ("lui x0, 0x{c:02x}"); break;\n'
        for c in range(256)
    )
    return PREAMBLE + cases + POSTAMBLE


def main() -> int:
    text = render()
    HEADER.parent.mkdir(parents=True, exist_ok=True)
    if HEADER.exists() and HEADER.read_text() == text:
        print(f"{HEADER} already current")
        return 0
    HEADER.write_text(text)
    print(f"wrote {HEADER} ({len(text.splitlines())} lines)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
