#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "phigamma/kernels.hpp"

using namespace phigamma;

namespace {

double seconds_per_call(const std::function<void()>& fn, int reps) {
    fn();  // warm up
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / reps;
}

std::vector<i64> random_coeffs(size_t size, i64 mod, std::mt19937_64& rng) {
    std::vector<i64> v(size);
    for (auto& x : v) x = (i64)(rng() % (unsigned long long)mod);
    return v;
}

}  // namespace

int main() {
    std::mt19937_64 rng(12345);

    std::printf("%-34s %12s %12s %8s\n", "kernel", "serial s", "parallel s", "speedup");

    // group-ring convolution at a few truncation levels
    struct Level {
        i64 p, n, m, N, l;
    };
    for (Level lv : {Level{2, 2, 2, 2, 5}, Level{3, 2, 2, 2, 4}, Level{2, 3, 2, 2, 5}}) {
        GroupLevelParams gp = validate_params(lv.p, lv.n, lv.m, lv.N, lv.l);
        std::vector<i64> a = random_coeffs((size_t)gp.order, gp.Q, rng);
        std::vector<i64> b = random_coeffs((size_t)gp.order, gp.Q, rng);
        std::vector<i64> out((size_t)gp.order);
        int reps = gp.order > 1000 ? 3 : 50;
        double ts = seconds_per_call(
            [&] { kernels::convolve_reference(gp, a.data(), b.data(), out.data()); }, reps);
        double tp =
            seconds_per_call([&] { kernels::convolve(gp, a.data(), b.data(), out.data()); }, reps);
        char label[64];
        std::snprintf(label, sizeof label, "convolve |G|=%lld", (long long)gp.order);
        std::printf("%-34s %12.6f %12.6f %8.2f\n", label, ts, tp, ts / tp);
    }

    // row-modulus matrix product
    for (int dim : {64, 128, 256}) {
        std::vector<i64> A((size_t)dim * dim), B((size_t)dim * dim), C((size_t)dim * dim);
        std::vector<i64> mods(dim);
        for (auto& x : A) x = (i64)(rng() % 1024);
        for (auto& x : B) x = (i64)(rng() % 1024);
        for (auto& x : mods) x = 1 << (1 + (int)(rng() % 10));
        int reps = dim >= 256 ? 3 : 20;
        double ts = seconds_per_call(
            [&] {
                kernels::matmul_rowmod_reference(A.data(), B.data(), C.data(), dim, dim, dim,
                                                 mods.data());
            },
            reps);
        double tp = seconds_per_call(
            [&] { kernels::matmul_rowmod(A.data(), B.data(), C.data(), dim, dim, dim, mods.data()); },
            reps);
        char label[64];
        std::snprintf(label, sizeof label, "matmul_rowmod %dx%d", dim, dim);
        std::printf("%-34s %12.6f %12.6f %8.2f\n", label, ts, tp, ts / tp);
    }
    return 0;
}
