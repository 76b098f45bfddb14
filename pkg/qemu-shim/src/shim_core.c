#include "shim_core.h"

#include <inttypes.h>
#include <stdlib.h>
#include <string.h>

struct shim_stream {
    FILE *f;
    int owns_file;
    unsigned flush_every;
    unsigned since_flush;
};

static shim_stream *attach(FILE *f, unsigned flush_every, int owns)
{
    shim_stream *s = calloc(1, sizeof *s);
    if (!s)
        return NULL;
    s->f = f;
    s->owns_file = owns;
    s->flush_every = flush_every;
    if (fputs("# rave-wire v1\n", f) == EOF) {
        free(s);
        return NULL;
    }
    return s;
}

shim_stream *shim_attach(FILE *f, unsigned flush_every)
{
    return attach(f, flush_every, 0);
}

shim_stream *shim_open(const shim_config *cfg)
{
    if (!cfg->out_path || strcmp(cfg->out_path, "-") == 0)
        return attach(stdout, cfg->flush_every, 0);
    FILE *f = fopen(cfg->out_path, "w");
    if (!f)
        return NULL;
    shim_stream *s = attach(f, cfg->flush_every, 1);
    if (!s)
        fclose(f);
    return s;
}

int shim_needs_regs(uint32_t insn)
{
    /* or rd=x0: opcode 0110011, funct3 110, funct7 0000000 */
    if ((insn & 0xFE007FFFu) == 0x00006033u)
        return 1;
    /* vsetvl family: opcode 1010111, funct3 111; bits 31:30 = 11 is the
     * immediate-AVL form and needs nothing from the register file */
    if ((insn & 0x0000707Fu) == 0x00007057u && (insn >> 30) != 3u)
        return 1;
    return 0;
}

unsigned shim_rs1_index(uint32_t insn)
{
    return (insn >> 15) & 0x1Fu;
}

unsigned shim_rs2_index(uint32_t insn)
{
    return (insn >> 20) & 0x1Fu;
}

static void after_record(shim_stream *s)
{
    if (s->flush_every && ++s->since_flush >= s->flush_every) {
        fflush(s->f);
        s->since_flush = 0;
    }
}

/* 16-bit encodings print as four digits, 32-bit ones as eight. */
static int narrow(uint32_t raw)
{
    return raw <= 0xFFFFu && (raw & 3u) != 3u;
}

void shim_emit(shim_stream *s, uint64_t pc, uint32_t raw)
{
    if (narrow(raw))
        fprintf(s->f, "I %" PRIx64 " %04" PRIx32 "\n", pc, raw);
    else
        fprintf(s->f, "I %" PRIx64 " %08" PRIx32 "\n", pc, raw);
    after_record(s);
}

void shim_emit_regs(shim_stream *s, uint64_t pc, uint32_t raw,
                    uint64_t rs1, uint64_t rs2)
{
    if (narrow(raw))
        fprintf(s->f, "I %" PRIx64 " %04" PRIx32 " %" PRIx64 " %" PRIx64 "\n",
                pc, raw, rs1, rs2);
    else
        fprintf(s->f, "I %" PRIx64 " %08" PRIx32 " %" PRIx64 " %" PRIx64 "\n",
                pc, raw, rs1, rs2);
    after_record(s);
}

int shim_close(shim_stream *s)
{
    int rc = fflush(s->f) == 0 && !ferror(s->f) ? 0 : EOF;
    if (s->owns_file && fclose(s->f) == EOF)
        rc = EOF;
    free(s);
    return rc;
}
