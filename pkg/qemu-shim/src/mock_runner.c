/* Host-side stand-in for the QEMU plugin: replays a scripted or fuzzed
 * guest execution through shim_core, producing the same stream the plugin
 * would write. Used to exercise the analyzer end to end where no RISC-V
 * emulator is available.
 *
 * Arguments use the plugin's key=value style:
 *   out=<path|->  mode=<demo|fuzz>  seed=<n>  n=<records>  flush=<n>
 */

#include "shim_core.h"

#include <inttypes.h>
#include <stdint.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#define LUI(imm) (((uint32_t)(imm) << 12) | 0x37u)
#define LI_X0(k) ((((uint32_t)(k) & 0xFFFu) << 20) | 0x13u)

static const uint32_t START = LI_X0(-3), STOP = LI_X0(-4), DELIM = LI_X0(-1);
static const uint32_t OR_A0_A1 = 0x00B56033; /* or x0, x10, x11 */

/* OP-V and vector memory words used by the scripted guest (v1.0, e32) */
static const uint32_t VSETVLI_E32 = (0xD0u << 20) | (10u << 15) | (7u << 12) | (11u << 7) | 0x57u;
static const uint32_t VSETVLI_E64 = (0xD8u << 20) | (10u << 15) | (7u << 12) | (11u << 7) | 0x57u;
static const uint32_t VLE32 = 0x02056407;  /* vle32.v v8, (a0) */
static const uint32_t VSE32 = 0x02056427;  /* vse32.v v8, (a0) */
static const uint32_t VADD = 0x02430157;   /* vadd.vv v2, v4, v6 */
static const uint32_t VFMUL = 0x92431157;  /* vfmul.vv v2, v4, v6 */
static const uint32_t ADDI = 0x00178793;   /* addi a5, a5, 1 */
static const uint32_t BNE = 0xFE0796E3;    /* bne a5, zero, back */
static const uint32_t C_LI = 0x4501;       /* c.li a0, 0 */

typedef struct {
    shim_stream *s;
    uint64_t pc;
} hart;

static void step(hart *h, uint32_t word)
{
    shim_emit(h->s, h->pc, word);
    h->pc += (word & 3u) == 3u ? 4 : 2;
}

static void step_regs(hart *h, uint32_t word, uint64_t rs1, uint64_t rs2)
{
    shim_emit_regs(h->s, h->pc, word, rs1, rs2);
    h->pc += 4;
}

static void send_name(hart *h, const char *name)
{
    step(h, DELIM);
    for (; *name; name++)
        step(h, LUI((unsigned char)*name));
    step(h, DELIM);
}

static void name_event(hart *h, uint32_t id, const char *name)
{
    step(h, LUI(id));
    send_name(h, name);
}

static void name_value(hart *h, uint32_t id, uint32_t val, const char *name)
{
    step(h, LUI(id));
    step(h, LUI(val));
    send_name(h, name);
}

static void run_demo(hart *h)
{
    name_event(h, 1000, "main_loop");
    name_value(h, 1000, 1, "saxpy");
    step_regs(h, VSETVLI_E32, 123, 0);
    step_regs(h, OR_A0_A1, 1000, 1);
    for (int i = 0; i < 16; i++) {
        uint64_t top = h->pc;
        step(h, VLE32);
        step(h, VADD);
        step(h, VFMUL);
        step(h, VSE32);
        step(h, ADDI);
        step(h, C_LI);
        step(h, BNE);
        if (i < 15)
            h->pc = top;
    }
    step_regs(h, OR_A0_A1, 1000, 0);
    step(h, STOP);
    step(h, ADDI); /* untraced stretch */
    step(h, START);
    step_regs(h, VSETVLI_E64, 5, 0);
    step(h, VADD);
    step(h, VADD);
}

/* --- fuzz mode: random but protocol-valid executions --------------------- */

static uint64_t rng_state;

static uint64_t rng_next(void)
{
    rng_state ^= rng_state << 13;
    rng_state ^= rng_state >> 7;
    rng_state ^= rng_state << 17;
    return rng_state;
}

static uint32_t rng_below(uint32_t n)
{
    return (uint32_t)(rng_next() % n);
}

static void fuzz_name(hart *h)
{
    static const char alpha[] =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-./";
    char name[24];
    uint32_t len = 1 + rng_below(sizeof name - 2);
    for (uint32_t i = 0; i < len; i++)
        name[i] = alpha[rng_below(sizeof alpha - 1)];
    name[len] = 0;
    uint32_t id = 1 + rng_below(0xFFFFF);
    if (rng_below(2))
        name_event(h, id, name);
    else
        name_value(h, id, 1 + rng_below(0xFFFFF), name);
}

static void run_fuzz(hart *h, uint64_t seed, unsigned long n)
{
    static const uint32_t scalars[] = { ADDI, BNE, 0x00C585B3, C_LI };
    static const uint32_t vectors[] = { VLE32, VSE32, VADD, VFMUL, 0x6631A0D7 };
    rng_state = seed ? seed : 0x9E3779B97F4A7C15u;
    int tracing = 1, open_event = 0;
    step_regs(h, VSETVLI_E32, 1 + rng_below(400), 0);
    for (unsigned long i = 0; i < n; i++) {
        uint32_t roll = rng_below(1000);
        if (roll < 450) {
            step(h, scalars[rng_below(4)]);
        } else if (roll < 900) {
            step(h, vectors[rng_below(5)]);
        } else if (roll < 940) {
            uint32_t w = rng_below(2) ? VSETVLI_E32 : VSETVLI_E64;
            step_regs(h, w, 1 + rng_below(600), 0);
        } else if (roll < 960) {
            fuzz_name(h);
        } else if (roll < 985) {
            if (open_event) {
                step_regs(h, OR_A0_A1, (uint32_t)open_event, 0);
                open_event = 0;
            } else {
                open_event = 1 + (int)rng_below(4096);
                step_regs(h, OR_A0_A1, (uint32_t)open_event, 1 + rng_below(64));
            }
        } else {
            step(h, tracing ? STOP : START);
            tracing = !tracing;
        }
    }
    if (!tracing)
        step(h, START);
    if (open_event)
        step_regs(h, OR_A0_A1, (uint32_t)open_event, 0);
}

int main(int argc, char **argv)
{
    shim_config cfg = { .out_path = "-", .flush_every = 0, .single_insn_tb = 1 };
    const char *mode = "demo";
    uint64_t seed = 1;
    unsigned long n = 10000;

    for (int i = 1; i < argc; i++) {
        if (strncmp(argv[i], "out=", 4) == 0)
            cfg.out_path = argv[i] + 4;
        else if (strncmp(argv[i], "mode=", 5) == 0)
            mode = argv[i] + 5;
        else if (strncmp(argv[i], "seed=", 5) == 0)
            seed = strtoull(argv[i] + 5, NULL, 0);
        else if (strncmp(argv[i], "n=", 2) == 0)
            n = strtoul(argv[i] + 2, NULL, 0);
        else if (strncmp(argv[i], "flush=", 6) == 0)
            cfg.flush_every = (unsigned)strtoul(argv[i] + 6, NULL, 0);
        else {
            fprintf(stderr, "mock_runner: unknown argument '%s'\n", argv[i]);
            return 2;
        }
    }

    shim_stream *s = shim_open(&cfg);
    if (!s) {
        perror("mock_runner: cannot open output");
        return 1;
    }
    hart h = { .s = s, .pc = 0x10000 };
    if (strcmp(mode, "demo") == 0) {
        run_demo(&h);
    } else if (strcmp(mode, "fuzz") == 0) {
        run_fuzz(&h, seed, n);
    } else {
        fprintf(stderr, "mock_runner: unknown mode '%s'\n", mode);
        shim_close(s);
        return 2;
    }
    return shim_close(s) == 0 ? 0 : 1;
}
