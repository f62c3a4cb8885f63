#include "phigamma/kernels.hpp"

#include <vector>

namespace phigamma::kernels {

void convolve_reference(const GroupLevelParams& gp, const i64* r, const i64* s, i64* out) {
    const i64 size = gp.order, Q = gp.Q;
    for (i64 k = 0; k < size; ++k) out[k] = 0;
    for (i64 g = 0; g < size; ++g) {
        if (r[g] == 0) continue;
        for (i64 h = 0; h < size; ++h) {
            if (s[h] == 0) continue;
            Elem k = elem_mul(gp, g, h);
            out[k] = (out[k] + (i128)r[g] * s[h]) % Q;
        }
    }
}

void convolve(const GroupLevelParams& gp, const i64* r, const i64* s, i64* out) {
    const i64 size = gp.order, Q = gp.Q;
    std::vector<i64> ginv(size);
    for (i64 g = 0; g < size; ++g) ginv[g] = elem_inv(gp, g);
#pragma omp parallel for schedule(static)
    for (i64 k = 0; k < size; ++k) {
        i64 acc = 0;
        for (i64 g = 0; g < size; ++g) {
            if (r[g] == 0) continue;
            acc = (acc + (i128)r[g] * s[elem_mul(gp, ginv[g], k)]) % Q;
        }
        out[k] = acc;
    }
}

void matmul_rowmod_reference(const i64* A, const i64* B, i64* C, int rt, int k, int c,
                             const i64* rowmod) {
    for (int r = 0; r < rt; ++r) {
        const i64 mod = rowmod[r];
        for (int j = 0; j < c; ++j) {
            i64 acc = 0;
            for (int t = 0; t < k; ++t) acc = (acc + (i128)A[r * k + t] * B[t * c + j]) % mod;
            C[r * c + j] = acc;
        }
    }
}

void matmul_rowmod(const i64* A, const i64* B, i64* C, int rt, int k, int c, const i64* rowmod) {
#pragma omp parallel for schedule(static)
    for (int r = 0; r < rt; ++r) {
        const i64 mod = rowmod[r];
        for (int j = 0; j < c; ++j) {
            i64 acc = 0;
            for (int t = 0; t < k; ++t) acc = (acc + (i128)A[r * k + t] * B[t * c + j]) % mod;
            C[r * c + j] = acc;
        }
    }
}

}  // namespace phigamma::kernels
