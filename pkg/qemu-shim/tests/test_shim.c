/* Unit tests for shim_core: register-read predicate, wire formatting,
 * and flush behavior. Exits nonzero on the first failure. */

#define _POSIX_C_SOURCE 200809L

#include "shim_core.h"

#include <assert.h>
#include <stdint.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>
#include <unistd.h>

static int failures;

#define CHECK(cond)                                                        \
    do {                                                                   \
        if (!(cond)) {                                                     \
            fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond); \
            failures++;                                                    \
        }                                                                  \
    } while (0)

static void test_needs_regs(void)
{
    CHECK(shim_needs_regs(0x00B56033));  /* or x0, x10, x11 */
    CHECK(shim_needs_regs(0x01FF6033));  /* or x0, x30, x31 */
    CHECK(!shim_needs_regs(0x00B56533)); /* or x10, .. (rd != x0) */
    CHECK(!shim_needs_regs(0x00B54033)); /* xor x0, .. (funct3 != 6) */
    CHECK(!shim_needs_regs(0x40B56033)); /* funct7 != 0 */

    uint32_t vsetvli = (0xD0u << 20) | (10u << 15) | (7u << 12) | (11u << 7) | 0x57u;
    uint32_t vsetvl = (1u << 31) | (12u << 20) | (10u << 15) | (7u << 12) | (11u << 7) | 0x57u;
    uint32_t vsetivli = (3u << 30) | (0xD0u << 20) | (9u << 15) | (7u << 12) | (11u << 7) | 0x57u;
    CHECK(shim_needs_regs(vsetvli));
    CHECK(shim_needs_regs(vsetvl));
    CHECK(!shim_needs_regs(vsetivli));   /* AVL and vtype are immediates */

    CHECK(!shim_needs_regs(0x02430157)); /* vadd.vv */
    CHECK(!shim_needs_regs(0xFFD00013)); /* li x0, -3 marker */
    CHECK(!shim_needs_regs(0x003E8037)); /* lui x0 payload */
    CHECK(!shim_needs_regs(0x4501));     /* compressed */

    CHECK(shim_rs1_index(0x00B56033) == 10);
    CHECK(shim_rs2_index(0x00B56033) == 11);
    CHECK(shim_rs1_index(vsetvli) == 10);
}

static char *capture(void (*scenario)(shim_stream *))
{
    char *buf = NULL;
    size_t len = 0;
    FILE *mem = open_memstream(&buf, &len);
    assert(mem);
    shim_stream *s = shim_attach(mem, 0);
    assert(s);
    scenario(s);
    CHECK(shim_close(s) == 0);
    fclose(mem);
    return buf;
}

static void scenario_formats(shim_stream *s)
{
    shim_emit(s, 0x10, 0x4501);               /* narrow: 4 digits */
    shim_emit(s, 0x14, 0x13);                 /* wide despite small value */
    shim_emit(s, 0x80001234, 0x02430157);
    shim_emit_regs(s, 0x18, 0x00B56033, 0x3E8, 0x5);
    shim_emit_regs(s, 0x1C, 0x4501, 1, 0);    /* regs keep narrow encoding */
}

static void test_formats(void)
{
    char *got = capture(scenario_formats);
    const char *want =
        "# rave-wire v1\n"
        "I 10 4501\n"
        "I 14 00000013\n"
        "I 80001234 02430157\n"
        "I 18 00b56033 3e8 5\n"
        "I 1c 4501 1 0\n";
    CHECK(strcmp(got, want) == 0);
    if (strcmp(got, want) != 0)
        fprintf(stderr, "got:\n%s", got);
    free(got);
}

static void scenario_max_values(shim_stream *s)
{
    shim_emit_regs(s, UINT64_MAX, 0xFFFFFFFFu, UINT64_MAX, 0);
}

static void test_max_values(void)
{
    char *got = capture(scenario_max_values);
    CHECK(strcmp(got,
                 "# rave-wire v1\n"
                 "I ffffffffffffffff ffffffff ffffffffffffffff 0\n") == 0);
    free(got);
}

static void test_flush_interval(void)
{
    char path[] = "/tmp/shim_test_XXXXXX";
    int fd = mkstemp(path);
    assert(fd >= 0);
    FILE *f = fdopen(fd, "w");
    assert(f);
    setvbuf(f, NULL, _IOFBF, 1 << 16);

    shim_stream *s = shim_attach(f, 2);
    FILE *reader = fopen(path, "r");
    assert(reader);
    char buf[256];

    shim_emit(s, 0x10, 0x4501); /* 1 record: below interval, still buffered */
    CHECK(fread(buf, 1, sizeof buf, reader) == 0);
    clearerr(reader); /* rearm after EOF so new bytes become readable */

    shim_emit(s, 0x12, 0x4501); /* hits the interval: all bytes visible */
    size_t n = fread(buf, 1, sizeof buf - 1, reader);
    buf[n] = 0;
    CHECK(strcmp(buf, "# rave-wire v1\nI 10 4501\nI 12 4501\n") == 0);

    CHECK(shim_close(s) == 0);
    fclose(f);
    fclose(reader);
    remove(path);
}

static void test_open_rejects_unwritable_path(void)
{
    shim_config cfg = { .out_path = "/nonexistent-dir/trace.rw" };
    CHECK(shim_open(&cfg) == NULL);
}

static void test_open_writes_header_to_file(void)
{
    char path[] = "/tmp/shim_test_XXXXXX";
    int fd = mkstemp(path);
    assert(fd >= 0);
    close(fd);
    shim_config cfg = { .out_path = path, .flush_every = 1 };
    shim_stream *s = shim_open(&cfg);
    CHECK(s != NULL);
    shim_emit(s, 0x100, 0x02430157);
    CHECK(shim_close(s) == 0);

    FILE *f = fopen(path, "r");
    char buf[128];
    size_t n = fread(buf, 1, sizeof buf - 1, f);
    buf[n] = 0;
    CHECK(strcmp(buf, "# rave-wire v1\nI 100 02430157\n") == 0);
    fclose(f);
    remove(path);
}

int main(void)
{
    test_needs_regs();
    test_formats();
    test_max_values();
    test_flush_interval();
    test_open_rejects_unwritable_path();
    test_open_writes_header_to_file();
    if (failures) {
        fprintf(stderr, "%d check(s) failed\n", failures);
        return 1;
    }
    puts("shim_core: all checks passed");
    return 0;
}
