/* Instrumented RISC-V guest: a stripmined saxpy with one named region.
 *
 * Build (object or, with a riscv64 libc, a runnable binary):
 *   clang --target=riscv64 -march=rv64gcv -O2 -I../include -c vector_demo.c
 * Run under the plugin:
 *   qemu-riscv64 -plugin ./rave_shim.so,out=trace.rw -- ./vector_demo
 */

#include "rave_markers.h"

#define N 256

static float xs[N], ys[N];

static void saxpy(float a)
{
    const float *px = xs;
    float *py = ys;
    long n = N, vl;
    while (n > 0) {
        __asm__ volatile(
            "vsetvli %[vl], %[n], e32, m1, ta, ma\n\t"
            "vle32.v v0, (%[x])\n\t"
            "vle32.v v8, (%[y])\n\t"
            "vfmacc.vf v8, %[a], v0\n\t"
            "vse32.v v8, (%[y])"
            : [vl] "=&r"(vl)
            : [n] "r"(n), [x] "r"(px), [y] "r"(py), [a] "f"(a)
            : "v0", "v8", "memory");
        px += vl;
        py += vl;
        n -= vl;
    }
}

int main(void)
{
    for (int i = 0; i < N; i++) {
        xs[i] = (float)i;
        ys[i] = 1.0f;
    }

    qemu_name_event(1000, "main_loop");
    qemu_name_value(1000, 1, "saxpy");

    qemu_event_and_value(1000, 1);
    saxpy(2.0f);
    qemu_event_and_value(1000, 0);
    qemu_stop_trace();

    return ys[N - 1] > 0.0f ? 0 : 1;
}
