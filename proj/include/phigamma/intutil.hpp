#pragma once

#include <cstdint>

#include "phigamma/errors.hpp"

namespace phigamma {

using i64 = long long;
using i128 = __int128;

inline i64 checked_narrow(i128 v, const char* where) {
    if (v > INT64_MAX || v < INT64_MIN) fail(ErrCode::Overflow, where);
    return (i64)v;
}

inline i64 checked_mul(i64 a, i64 b, const char* where = "checked_mul") {
    return checked_narrow((i128)a * (i128)b, where);
}

inline i64 checked_add(i64 a, i64 b, const char* where = "checked_add") {
    return checked_narrow((i128)a + (i128)b, where);
}

/* nonnegative representative of a mod m, m > 0 */
inline i64 umod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 ipow_checked(i64 base, i64 exp, const char* where = "ipow") {
    i64 r = 1;
    for (i64 i = 0; i < exp; ++i) r = checked_mul(r, base, where);
    return r;
}

inline i64 powmod(i64 base, i64 exp, i64 mod) {
    base = umod(base, mod);
    i64 r = 1 % mod;
    while (exp > 0) {
        if (exp & 1) r = (i128)r * base % mod;
        base = (i128)base * base % mod;
        exp >>= 1;
    }
    return r;
}

/* extended gcd: returns g, sets x,y with a*x + b*y = g */
inline i64 egcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = a < 0 ? -1 : 1;
        y = 0;
        return a < 0 ? -a : a;
    }
    i64 x1, y1;
    i64 g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

/* inverse of a mod m; throws NotAUnit if gcd(a,m) != 1 */
inline i64 invmod(i64 a, i64 m) {
    i64 x, y;
    i64 g = egcd(umod(a, m), m, x, y);
    if (g != 1) fail(ErrCode::NotAUnit, "invmod: not invertible");
    return umod(x, m);
}

inline bool is_prime(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/* p-adic valuation of a != 0; valuation(0) reported as cap */
inline int valuation(i64 a, i64 p, int cap = 64) {
    if (a == 0) return cap;
    if (a < 0) a = -a;
    int v = 0;
    while (v < cap && a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

/* binomial C(l,k) mod p^N, exact, via unit-part/valuation bookkeeping */
inline i64 binomial_mod_ppow(i64 l, i64 k, i64 p, i64 ppowN, int N) {
    if (k < 0 || k > l) return 0;
    int v = 0;
    i64 unit = 1;
    for (i64 j = 1; j <= k; ++j) {
        i64 num = l - j + 1;
        int vn = valuation(num, p);
        v += vn;
        i64 nu = num;
        for (int t = 0; t < vn; ++t) nu /= p;
        unit = (i128)unit * umod(nu, ppowN) % ppowN;
        int vd = valuation(j, p);
        v -= vd;
        i64 de = j;
        for (int t = 0; t < vd; ++t) de /= p;
        unit = (i128)unit * invmod(de, ppowN) % ppowN;
    }
    if (v >= N) return 0;
    i64 scale = 1;
    for (int t = 0; t < v; ++t) scale *= p;
    return (i128)unit * scale % ppowN;
}

}  // namespace phigamma
