#pragma once

#include "phigamma/group.hpp"

namespace phigamma::kernels {

/*
 * Group-ring convolution out = r * s over Z/Q, dense coefficient arrays of
 * length gp.order.  The parallel kernel uses the gather form
 *   out[k] = sum_g r[g] * s[g^-1 k]
 * with each output index owned by one thread, so results are bitwise
 * deterministic under any schedule.  convolve_reference is the literal
 * scatter-form definition, kept serial as the testing reference.
 */
void convolve(const GroupLevelParams& gp, const i64* r, const i64* s, i64* out);
void convolve_reference(const GroupLevelParams& gp, const i64* r, const i64* s, i64* out);

/*
 * C = A * B with row-dependent moduli: A is rt x k, B is k x c, row r of C is
 * reduced mod rowmod[r].  Entries are expected in [0, 2^31); the accumulator
 * reduces every product so sums cannot overflow.  Parallel over rows of C;
 * matmul_rowmod_reference is the serial reference.
 */
void matmul_rowmod(const i64* A, const i64* B, i64* C, int rt, int k, int c, const i64* rowmod);
void matmul_rowmod_reference(const i64* A, const i64* B, i64* C, int rt, int k, int c,
                             const i64* rowmod);

}  // namespace phigamma::kernels
