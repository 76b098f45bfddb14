/* QEMU TCG plugin emitting rave-wire v1 for a single RISC-V hart.
 *
 * Per translated block, every instruction gets an execution callback that
 * records pc and raw bytes; event markers (`or` to x0) and register-form
 * vsetvl instructions additionally read their two source registers at
 * execution time through the plugin register API (QEMU >= 8.2). On QEMU
 * builds predating that API, the historical alternative is forcing
 * one-instruction translation blocks (-one-insn-per-tb) and patching in
 * register reads; this source keeps to the supported API path.
 *
 * Build:  make plugin QEMU_PLUGIN_INC=/path/to/qemu/include/qemu
 * Run:    qemu-riscv64 -plugin ./rave_shim.so,out=trace.rw -- ./guest
 */

#include <glib.h>
#include <inttypes.h>
#include <stdint.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include <qemu-plugin.h>

#include "shim_core.h"

QEMU_PLUGIN_EXPORT int qemu_plugin_version = QEMU_PLUGIN_VERSION;

typedef struct {
    uint64_t pc;
    uint32_t raw;
    int needs_regs;
    unsigned rs1;
    unsigned rs2;
} insn_ctx;

static shim_stream *stream;
static struct qemu_plugin_register *gpr[32];
static int gpr_ready;

/* Resolve x0..x31 handles once the vcpu exists; descriptor names follow
 * the gdbstub convention for the RISC-V core feature. */
static void vcpu_init(qemu_plugin_id_t id, unsigned int vcpu_index)
{
    (void)id;
    if (vcpu_index != 0) {
        qemu_plugin_outs("rave_shim: multiple vcpus; stream order is per-hart\n");
        return;
    }
    GArray *regs = qemu_plugin_get_registers();
    for (guint i = 0; i < regs->len; i++) {
        qemu_plugin_reg_descriptor *d =
            &g_array_index(regs, qemu_plugin_reg_descriptor, i);
        unsigned n;
        if (sscanf(d->name, "x%u", &n) == 1 && n < 32)
            gpr[n] = d->handle;
    }
    g_array_free(regs, TRUE);
    gpr_ready = 1;
}

static uint64_t read_gpr(unsigned idx)
{
    if (idx == 0 || !gpr_ready || !gpr[idx])
        return 0;
    GByteArray *buf = g_byte_array_new();
    uint64_t value = 0;
    if (qemu_plugin_read_register(gpr[idx], buf) > 0) {
        size_t n = buf->len < 8 ? buf->len : 8;
        memcpy(&value, buf->data, n); /* guest and host both little-endian */
    }
    g_byte_array_free(buf, TRUE);
    return value;
}

static void insn_exec(unsigned int vcpu_index, void *userdata)
{
    (void)vcpu_index;
    const insn_ctx *ctx = userdata;
    if (ctx->needs_regs)
        shim_emit_regs(stream, ctx->pc, ctx->raw,
                       read_gpr(ctx->rs1), read_gpr(ctx->rs2));
    else
        shim_emit(stream, ctx->pc, ctx->raw);
}

static void tb_trans(qemu_plugin_id_t id, struct qemu_plugin_tb *tb)
{
    (void)id;
    size_t n = qemu_plugin_tb_n_insns(tb);
    for (size_t i = 0; i < n; i++) {
        struct qemu_plugin_insn *insn = qemu_plugin_tb_get_insn(tb, i);
        insn_ctx *ctx = g_new0(insn_ctx, 1);
        uint32_t raw = 0;
        qemu_plugin_insn_data(insn, &raw, sizeof raw);
        if (qemu_plugin_insn_size(insn) == 2)
            raw &= 0xFFFFu;
        ctx->pc = qemu_plugin_insn_vaddr(insn);
        ctx->raw = raw;
        ctx->needs_regs = shim_needs_regs(raw);
        ctx->rs1 = shim_rs1_index(raw);
        ctx->rs2 = shim_rs2_index(raw);
        qemu_plugin_register_vcpu_insn_exec_cb(
            insn, insn_exec,
            ctx->needs_regs ? QEMU_PLUGIN_CB_R_REGS : QEMU_PLUGIN_CB_NO_REGS,
            ctx);
    }
}

static void plugin_exit(qemu_plugin_id_t id, void *userdata)
{
    (void)id;
    (void)userdata;
    if (stream && shim_close(stream) != 0)
        qemu_plugin_outs("rave_shim: write error while closing trace\n");
    stream = NULL;
}

QEMU_PLUGIN_EXPORT int qemu_plugin_install(qemu_plugin_id_t id,
                                           const qemu_info_t *info,
                                           int argc, char **argv)
{
    shim_config cfg = { .out_path = "-", .flush_every = 0, .single_insn_tb = 0 };

    for (int i = 0; i < argc; i++) {
        if (strncmp(argv[i], "out=", 4) == 0) {
            cfg.out_path = argv[i] + 4;
        } else if (strncmp(argv[i], "flush=", 6) == 0) {
            cfg.flush_every = (unsigned)strtoul(argv[i] + 6, NULL, 0);
        } else {
            fprintf(stderr, "rave_shim: unknown argument '%s'\n", argv[i]);
            return -1;
        }
    }

    if (info->system_emulation && info->system.smp_vcpus > 1) {
        fprintf(stderr, "rave_shim: single-hart guests only\n");
        return -1;
    }

    stream = shim_open(&cfg);
    if (!stream) {
        fprintf(stderr, "rave_shim: cannot open '%s' for writing\n",
                cfg.out_path);
        return -1;
    }

    qemu_plugin_register_vcpu_init_cb(id, vcpu_init);
    qemu_plugin_register_vcpu_tb_trans_cb(id, tb_trans);
    qemu_plugin_register_atexit_cb(id, plugin_exit, NULL);
    return 0;
}
