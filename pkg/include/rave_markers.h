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

#define qemu_event_and_value(e, v)                                          \
    do {                                                                    \
        unsigned long __rave_e = (unsigned long)(e);                        \
        unsigned long __rave_v = (unsigned long)(v);                        \
        __asm__ volatile ("or x0, %0, %1" : : "r"(__rave_e), "r"(__rave_v)); \
    } while (0)

/* One byte of a name; the immediate must be a literal, hence the switch. */
static inline void __rave_lui_byte(unsigned char c)
{
    switch (c) {
    case 0x00: __asm__ volatile ("lui x0, 0x00"); break;
    case 0x01: __asm__ volatile ("lui x0, 0x01"); break;
    case 0x02: __asm__ volatile ("lui x0, 0x02"); break;
    case 0x03: __asm__ volatile ("lui x0, 0x03"); break;
    case 0x04: __asm__ volatile ("lui x0, 0x04"); break;
    case 0x05: __asm__ volatile ("lui x0, 0x05"); break;
    case 0x06: __asm__ volatile ("lui x0, 0x06"); break;
    case 0x07: __asm__ volatile ("lui x0, 0x07"); break;
    case 0x08: __asm__ volatile ("lui x0, 0x08"); break;
    case 0x09: __asm__ volatile ("lui x0, 0x09"); break;
    case 0x0a: __asm__ volatile ("lui x0, 0x0a"); break;
    case 0x0b: __asm__ volatile ("lui x0, 0x0b"); break;
    case 0x0c: __asm__ volatile ("lui x0, 0x0c"); break;
    case 0x0d: __asm__ volatile ("lui x0, 0x0d"); break;
    case 0x0e: __asm__ volatile ("lui x0, 0x0e"); break;
    case 0x0f: __asm__ volatile ("lui x0, 0x0f"); break;
    case 0x10: __asm__ volatile ("lui x0, 0x10"); break;
    case 0x11: __asm__ volatile ("lui x0, 0x11"); break;
    case 0x12: __asm__ volatile ("lui x0, 0x12"); break;
    case 0x13: __asm__ volatile ("lui x0, 0x13"); break;
    case 0x14: __asm__ volatile ("lui x0, 0x14"); break;
    case 0x15: __asm__ volatile ("lui x0, 0x15"); break;
    case 0x16: __asm__ volatile ("lui x0, 0x16"); break;
    case 0x17: __asm__ volatile ("lui x0, 0x17"); break;
    case 0x18: __asm__ volatile ("lui x0, 0x18"); break;
    case 0x19: __asm__ volatile ("lui x0, 0x19"); break;
    case 0x1a: __asm__ volatile ("lui x0, 0x1a"); break;
    case 0x1b: __asm__ volatile ("lui x0, 0x1b"); break;
    case 0x1c: __asm__ volatile ("lui x0, 0x1c"); break;
    case 0x1d: __asm__ volatile ("lui x0, 0x1d"); break;
    case 0x1e: __asm__ volatile ("lui x0, 0x1e"); break;
    case 0x1f: __asm__ volatile ("lui x0, 0x1f"); break;
    case 0x20: __asm__ volatile ("lui x0, 0x20"); break;
    case 0x21: __asm__ volatile ("lui x0, 0x21"); break;
    case 0x22: __asm__ volatile ("lui x0, 0x22"); break;
    case 0x23: __asm__ volatile ("lui x0, 0x23"); break;
    case 0x24: __asm__ volatile ("lui x0, 0x24"); break;
    case 0x25: __asm__ volatile ("lui x0, 0x25"); break;
    case 0x26: __asm__ volatile ("lui x0, 0x26"); break;
    case 0x27: __asm__ volatile ("lui x0, 0x27"); break;
    case 0x28: __asm__ volatile ("lui x0, 0x28"); break;
    case 0x29: __asm__ volatile ("lui x0, 0x29"); break;
    case 0x2a: __asm__ volatile ("lui x0, 0x2a"); break;
    case 0x2b: __asm__ volatile ("lui x0, 0x2b"); break;
    case 0x2c: __asm__ volatile ("lui x0, 0x2c"); break;
    case 0x2d: __asm__ volatile ("lui x0, 0x2d"); break;
    case 0x2e: __asm__ volatile ("lui x0, 0x2e"); break;
    case 0x2f: __asm__ volatile ("lui x0, 0x2f"); break;
    case 0x30: __asm__ volatile ("lui x0, 0x30"); break;
    case 0x31: __asm__ volatile ("lui x0, 0x31"); break;
    case 0x32: __asm__ volatile ("lui x0, 0x32"); break;
    case 0x33: __asm__ volatile ("lui x0, 0x33"); break;
    case 0x34: __asm__ volatile ("lui x0, 0x34"); break;
    case 0x35: __asm__ volatile ("lui x0, 0x35"); break;
    case 0x36: __asm__ volatile ("lui x0, 0x36"); break;
    case 0x37: __asm__ volatile ("lui x0, 0x37"); break;
    case 0x38: __asm__ volatile ("lui x0, 0x38"); break;
    case 0x39: __asm__ volatile ("lui x0, 0x39"); break;
    case 0x3a: __asm__ volatile ("lui x0, 0x3a"); break;
    case 0x3b: __asm__ volatile ("lui x0, 0x3b"); break;
    case 0x3c: __asm__ volatile ("lui x0, 0x3c"); break;
    case 0x3d: __asm__ volatile ("lui x0, 0x3d"); break;
    case 0x3e: __asm__ volatile ("lui x0, 0x3e"); break;
    case 0x3f: __asm__ volatile ("lui x0, 0x3f"); break;
    case 0x40: __asm__ volatile ("lui x0, 0x40"); break;
    case 0x41: __asm__ volatile ("lui x0, 0x41"); break;
    case 0x42: __asm__ volatile ("lui x0, 0x42"); break;
    case 0x43: __asm__ volatile ("lui x0, 0x43"); break;
    case 0x44: __asm__ volatile ("lui x0, 0x44"); break;
    case 0x45: __asm__ volatile ("lui x0, 0x45"); break;
    case 0x46: __asm__ volatile ("lui x0, 0x46"); break;
    case 0x47: __asm__ volatile ("lui x0, 0x47"); break;
    case 0x48: __asm__ volatile ("lui x0, 0x48"); break;
    case 0x49: __asm__ volatile ("lui x0, 0x49"); break;
    case 0x4a: __asm__ volatile ("lui x0, 0x4a"); break;
    case 0x4b: __asm__ volatile ("lui x0, 0x4b"); break;
    case 0x4c: __asm__ volatile ("lui x0, 0x4c"); break;
    case 0x4d: __asm__ volatile ("lui x0, 0x4d"); break;
    case 0x4e: __asm__ volatile ("lui x0, 0x4e"); break;
    case 0x4f: __asm__ volatile ("lui x0, 0x4f"); break;
    case 0x50: __asm__ volatile ("lui x0, 0x50"); break;
    case 0x51: __asm__ volatile ("lui x0, 0x51"); break;
    case 0x52: __asm__ volatile ("lui x0, 0x52"); break;
    case 0x53: __asm__ volatile ("lui x0, 0x53"); break;
    case 0x54: __asm__ volatile ("lui x0, 0x54"); break;
    case 0x55: __asm__ volatile ("lui x0, 0x55"); break;
    case 0x56: __asm__ volatile ("lui x0, 0x56"); break;
    case 0x57: __asm__ volatile ("lui x0, 0x57"); break;
    case 0x58: __asm__ volatile ("lui x0, 0x58"); break;
    case 0x59: __asm__ volatile ("lui x0, 0x59"); break;
    case 0x5a: __asm__ volatile ("lui x0, 0x5a"); break;
    case 0x5b: __asm__ volatile ("lui x0, 0x5b"); break;
    case 0x5c: __asm__ volatile ("lui x0, 0x5c"); break;
    case 0x5d: __asm__ volatile ("lui x0, 0x5d"); break;
    case 0x5e: __asm__ volatile ("lui x0, 0x5e"); break;
    case 0x5f: __asm__ volatile ("lui x0, 0x5f"); break;
    case 0x60: __asm__ volatile ("lui x0, 0x60"); break;
    case 0x61: __asm__ volatile ("lui x0, 0x61"); break;
    case 0x62: __asm__ volatile ("lui x0, 0x62"); break;
    case 0x63: __asm__ volatile ("lui x0, 0x63"); break;
    case 0x64: __asm__ volatile ("lui x0, 0x64"); break;
    case 0x65: __asm__ volatile ("lui x0, 0x65"); break;
    case 0x66: __asm__ volatile ("lui x0, 0x66"); break;
    case 0x67: __asm__ volatile ("lui x0, 0x67"); break;
    case 0x68: __asm__ volatile ("lui x0, 0x68"); break;
    case 0x69: __asm__ volatile ("lui x0, 0x69"); break;
    case 0x6a: __asm__ volatile ("lui x0, 0x6a"); break;
    case 0x6b: __asm__ volatile ("lui x0, 0x6b"); break;
    case 0x6c: __asm__ volatile ("lui x0, 0x6c"); break;
    case 0x6d: __asm__ volatile ("lui x0, 0x6d"); break;
    case 0x6e: __asm__ volatile ("lui x0, 0x6e"); break;
    case 0x6f: __asm__ volatile ("lui x0, 0x6f"); break;
    case 0x70: __asm__ volatile ("lui x0, 0x70"); break;
    case 0x71: __asm__ volatile ("lui x0, 0x71"); break;
    case 0x72: __asm__ volatile ("lui x0, 0x72"); break;
    case 0x73: __asm__ volatile ("lui x0, 0x73"); break;
    case 0x74: __asm__ volatile ("lui x0, 0x74"); break;
    case 0x75: __asm__ volatile ("lui x0, 0x75"); break;
    case 0x76: __asm__ volatile ("lui x0, 0x76"); break;
    case 0x77: __asm__ volatile ("lui x0, 0x77"); break;
    case 0x78: __asm__ volatile ("lui x0, 0x78"); break;
    case 0x79: __asm__ volatile ("lui x0, 0x79"); break;
    case 0x7a: __asm__ volatile ("lui x0, 0x7a"); break;
    case 0x7b: __asm__ volatile ("lui x0, 0x7b"); break;
    case 0x7c: __asm__ volatile ("lui x0, 0x7c"); break;
    case 0x7d: __asm__ volatile ("lui x0, 0x7d"); break;
    case 0x7e: __asm__ volatile ("lui x0, 0x7e"); break;
    case 0x7f: __asm__ volatile ("lui x0, 0x7f"); break;
    case 0x80: __asm__ volatile ("lui x0, 0x80"); break;
    case 0x81: __asm__ volatile ("lui x0, 0x81"); break;
    case 0x82: __asm__ volatile ("lui x0, 0x82"); break;
    case 0x83: __asm__ volatile ("lui x0, 0x83"); break;
    case 0x84: __asm__ volatile ("lui x0, 0x84"); break;
    case 0x85: __asm__ volatile ("lui x0, 0x85"); break;
    case 0x86: __asm__ volatile ("lui x0, 0x86"); break;
    case 0x87: __asm__ volatile ("lui x0, 0x87"); break;
    case 0x88: __asm__ volatile ("lui x0, 0x88"); break;
    case 0x89: __asm__ volatile ("lui x0, 0x89"); break;
    case 0x8a: __asm__ volatile ("lui x0, 0x8a"); break;
    case 0x8b: __asm__ volatile ("lui x0, 0x8b"); break;
    case 0x8c: __asm__ volatile ("lui x0, 0x8c"); break;
    case 0x8d: __asm__ volatile ("lui x0, 0x8d"); break;
    case 0x8e: __asm__ volatile ("lui x0, 0x8e"); break;
    case 0x8f: __asm__ volatile ("lui x0, 0x8f"); break;
    case 0x90: __asm__ volatile ("lui x0, 0x90"); break;
    case 0x91: __asm__ volatile ("lui x0, 0x91"); break;
    case 0x92: __asm__ volatile ("lui x0, 0x92"); break;
    case 0x93: __asm__ volatile ("lui x0, 0x93"); break;
    case 0x94: __asm__ volatile ("lui x0, 0x94"); break;
    case 0x95: __asm__ volatile ("lui x0, 0x95"); break;
    case 0x96: __asm__ volatile ("lui x0, 0x96"); break;
    case 0x97: __asm__ volatile ("lui x0, 0x97"); break;
    case 0x98: __asm__ volatile ("lui x0, 0x98"); break;
    case 0x99: __asm__ volatile ("lui x0, 0x99"); break;
    case 0x9a: __asm__ volatile ("lui x0, 0x9a"); break;
    case 0x9b: __asm__ volatile ("lui x0, 0x9b"); break;
    case 0x9c: __asm__ volatile ("lui x0, 0x9c"); break;
    case 0x9d: __asm__ volatile ("lui x0, 0x9d"); break;
    case 0x9e: __asm__ volatile ("lui x0, 0x9e"); break;
    case 0x9f: __asm__ volatile ("lui x0, 0x9f"); break;
    case 0xa0: __asm__ volatile ("lui x0, 0xa0"); break;
    case 0xa1: __asm__ volatile ("lui x0, 0xa1"); break;
    case 0xa2: __asm__ volatile ("lui x0, 0xa2"); break;
    case 0xa3: __asm__ volatile ("lui x0, 0xa3"); break;
    case 0xa4: __asm__ volatile ("lui x0, 0xa4"); break;
    case 0xa5: __asm__ volatile ("lui x0, 0xa5"); break;
    case 0xa6: __asm__ volatile ("lui x0, 0xa6"); break;
    case 0xa7: __asm__ volatile ("lui x0, 0xa7"); break;
    case 0xa8: __asm__ volatile ("lui x0, 0xa8"); break;
    case 0xa9: __asm__ volatile ("lui x0, 0xa9"); break;
    case 0xaa: __asm__ volatile ("lui x0, 0xaa"); break;
    case 0xab: __asm__ volatile ("lui x0, 0xab"); break;
    case 0xac: __asm__ volatile ("lui x0, 0xac"); break;
    case 0xad: __asm__ volatile ("lui x0, 0xad"); break;
    case 0xae: __asm__ volatile ("lui x0, 0xae"); break;
    case 0xaf: __asm__ volatile ("lui x0, 0xaf"); break;
    case 0xb0: __asm__ volatile ("lui x0, 0xb0"); break;
    case 0xb1: __asm__ volatile ("lui x0, 0xb1"); break;
    case 0xb2: __asm__ volatile ("lui x0, 0xb2"); break;
    case 0xb3: __asm__ volatile ("lui x0, 0xb3"); break;
    case 0xb4: __asm__ volatile ("lui x0, 0xb4"); break;
    case 0xb5: __asm__ volatile ("lui x0, 0xb5"); break;
    case 0xb6: __asm__ volatile ("lui x0, 0xb6"); break;
    case 0xb7: __asm__ volatile ("lui x0, 0xb7"); break;
    case 0xb8: __asm__ volatile ("lui x0, 0xb8"); break;
    case 0xb9: __asm__ volatile ("lui x0, 0xb9"); break;
    case 0xba: __asm__ volatile ("lui x0, 0xba"); break;
    case 0xbb: __asm__ volatile ("lui x0, 0xbb"); break;
    case 0xbc: __asm__ volatile ("lui x0, 0xbc"); break;
    case 0xbd: __asm__ volatile ("lui x0, 0xbd"); break;
    case 0xbe: __asm__ volatile ("lui x0, 0xbe"); break;
    case 0xbf: __asm__ volatile ("lui x0, 0xbf"); break;
    case 0xc0: __asm__ volatile ("lui x0, 0xc0"); break;
    case 0xc1: __asm__ volatile ("lui x0, 0xc1"); break;
    case 0xc2: __asm__ volatile ("lui x0, 0xc2"); break;
    case 0xc3: __asm__ volatile ("lui x0, 0xc3"); break;
    case 0xc4: __asm__ volatile ("lui x0, 0xc4"); break;
    case 0xc5: __asm__ volatile ("lui x0, 0xc5"); break;
    case 0xc6: __asm__ volatile ("lui x0, 0xc6"); break;
    case 0xc7: __asm__ volatile ("lui x0, 0xc7"); break;
    case 0xc8: __asm__ volatile ("lui x0, 0xc8"); break;
    case 0xc9: __asm__ volatile ("lui x0, 0xc9"); break;
    case 0xca: __asm__ volatile ("lui x0, 0xca"); break;
    case 0xcb: __asm__ volatile ("lui x0, 0xcb"); break;
    case 0xcc: __asm__ volatile ("lui x0, 0xcc"); break;
    case 0xcd: __asm__ volatile ("lui x0, 0xcd"); break;
    case 0xce: __asm__ volatile ("lui x0, 0xce"); break;
    case 0xcf: __asm__ volatile ("lui x0, 0xcf"); break;
    case 0xd0: __asm__ volatile ("lui x0, 0xd0"); break;
    case 0xd1: __asm__ volatile ("lui x0, 0xd1"); break;
    case 0xd2: __asm__ volatile ("lui x0, 0xd2"); break;
    case 0xd3: __asm__ volatile ("lui x0, 0xd3"); break;
    case 0xd4: __asm__ volatile ("lui x0, 0xd4"); break;
    case 0xd5: __asm__ volatile ("lui x0, 0xd5"); break;
    case 0xd6: __asm__ volatile ("lui x0, 0xd6"); break;
    case 0xd7: __asm__ volatile ("lui x0, 0xd7"); break;
    case 0xd8: __asm__ volatile ("lui x0, 0xd8"); break;
    case 0xd9: __asm__ volatile ("lui x0, 0xd9"); break;
    case 0xda: __asm__ volatile ("lui x0, 0xda"); break;
    case 0xdb: __asm__ volatile ("lui x0, 0xdb"); break;
    case 0xdc: __asm__ volatile ("lui x0, 0xdc"); break;
    case 0xdd: __asm__ volatile ("lui x0, 0xdd"); break;
    case 0xde: __asm__ volatile ("lui x0, 0xde"); break;
    case 0xdf: __asm__ volatile ("lui x0, 0xdf"); break;
    case 0xe0: __asm__ volatile ("lui x0, 0xe0"); break;
    case 0xe1: __asm__ volatile ("lui x0, 0xe1"); break;
    case 0xe2: __asm__ volatile ("lui x0, 0xe2"); break;
    case 0xe3: __asm__ volatile ("lui x0, 0xe3"); break;
    case 0xe4: __asm__ volatile ("lui x0, 0xe4"); break;
    case 0xe5: __asm__ volatile ("lui x0, 0xe5"); break;
    case 0xe6: __asm__ volatile ("lui x0, 0xe6"); break;
    case 0xe7: __asm__ volatile ("lui x0, 0xe7"); break;
    case 0xe8: __asm__ volatile ("lui x0, 0xe8"); break;
    case 0xe9: __asm__ volatile ("lui x0, 0xe9"); break;
    case 0xea: __asm__ volatile ("lui x0, 0xea"); break;
    case 0xeb: __asm__ volatile ("lui x0, 0xeb"); break;
    case 0xec: __asm__ volatile ("lui x0, 0xec"); break;
    case 0xed: __asm__ volatile ("lui x0, 0xed"); break;
    case 0xee: __asm__ volatile ("lui x0, 0xee"); break;
    case 0xef: __asm__ volatile ("lui x0, 0xef"); break;
    case 0xf0: __asm__ volatile ("lui x0, 0xf0"); break;
    case 0xf1: __asm__ volatile ("lui x0, 0xf1"); break;
    case 0xf2: __asm__ volatile ("lui x0, 0xf2"); break;
    case 0xf3: __asm__ volatile ("lui x0, 0xf3"); break;
    case 0xf4: __asm__ volatile ("lui x0, 0xf4"); break;
    case 0xf5: __asm__ volatile ("lui x0, 0xf5"); break;
    case 0xf6: __asm__ volatile ("lui x0, 0xf6"); break;
    case 0xf7: __asm__ volatile ("lui x0, 0xf7"); break;
    case 0xf8: __asm__ volatile ("lui x0, 0xf8"); break;
    case 0xf9: __asm__ volatile ("lui x0, 0xf9"); break;
    case 0xfa: __asm__ volatile ("lui x0, 0xfa"); break;
    case 0xfb: __asm__ volatile ("lui x0, 0xfb"); break;
    case 0xfc: __asm__ volatile ("lui x0, 0xfc"); break;
    case 0xfd: __asm__ volatile ("lui x0, 0xfd"); break;
    case 0xfe: __asm__ volatile ("lui x0, 0xfe"); break;
    case 0xff: __asm__ volatile ("lui x0, 0xff"); break;
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

#define qemu_name_event(id, name)                                           \
    do {                                                                    \
        __rave_lui_imm(id);                                                 \
        __rave_send_name(name);                                             \
    } while (0)

#define qemu_name_value(id, val, name)                                      \
    do {                                                                    \
        __rave_lui_imm(id);                                                 \
        __rave_lui_imm(val);                                                \
        __rave_send_name(name);                                             \
    } while (0)

#endif /* RAVE_MARKERS_H */
