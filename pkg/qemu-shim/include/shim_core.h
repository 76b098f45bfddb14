/* Core of the tracing shim: rave-wire v1 emission and the predicate that
 * decides which instructions need their source-register values attached.
 * Kept free of any QEMU dependency so it can be unit-tested and driven by
 * the mock runner on the host. */

#ifndef SHIM_CORE_H
#define SHIM_CORE_H

#include <stdint.h>
#include <stdio.h>

typedef struct {
    const char *out_path;    /* "-" or NULL means stdout */
    unsigned flush_every;    /* flush after this many records; 0 = at close */
    int single_insn_tb;      /* request one-instruction translation blocks */
} shim_config;

typedef struct shim_stream shim_stream;

/* Open cfg->out_path for writing and emit the format header. Returns NULL
 * (with errno set) if the output is not writable; callers must abort the
 * run in that case, before any simulation starts. */
shim_stream *shim_open(const shim_config *cfg);

/* Wrap an already-open file; the caller keeps ownership of `f`. */
shim_stream *shim_attach(FILE *f, unsigned flush_every);

/* 1 if the analyzer reads rs1/rs2 values for this encoding: event markers
 * (`or` writing x0) and vsetvl/vsetvli (AVL and, for the register form,
 * vtype live in registers). vsetivli carries both as immediates. */
int shim_needs_regs(uint32_t insn);

/* Source register numbers as encoded in bits 19:15 and 24:20. */
unsigned shim_rs1_index(uint32_t insn);
unsigned shim_rs2_index(uint32_t insn);

void shim_emit(shim_stream *s, uint64_t pc, uint32_t raw);
void shim_emit_regs(shim_stream *s, uint64_t pc, uint32_t raw,
                    uint64_t rs1, uint64_t rs2);

/* Flush and release; closes the file only if shim_open created it.
 * Returns 0 on success, EOF on write failure. */
int shim_close(shim_stream *s);

#endif
