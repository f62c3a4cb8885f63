#include "phigamma/group.hpp"

namespace phigamma {

Elem elem_encode(const GroupLevelParams& gp, const ElemParts& parts) {
    Elem idx = umod(parts.a, gp.q);
    for (i64 i = 0; i < gp.n; ++i) idx = idx * gp.q + umod(parts.c[i], gp.q);
    return idx;
}

ElemParts elem_decode(const GroupLevelParams& gp, Elem g) {
    ElemParts parts;
    parts.c.resize(gp.n);
    for (i64 i = gp.n - 1; i >= 0; --i) {
        parts.c[i] = g % gp.q;
        g /= gp.q;
    }
    parts.a = g % gp.q;
    return parts;
}

Elem elem_gamma(const GroupLevelParams& gp) {
    Elem idx = 1 % gp.q;
    for (i64 i = 0; i < gp.n; ++i) idx *= gp.q;
    return idx;
}

Elem elem_beta(const GroupLevelParams& gp, i64 i) {
    if (i < 1 || i > gp.n) fail(ErrCode::BadLevel, "beta index out of range");
    Elem idx = 1 % gp.q;
    for (i64 j = i; j < gp.n; ++j) idx *= gp.q;
    return idx;
}

Elem elem_mul(const GroupLevelParams& gp, Elem g, Elem h) {
    const i64 q = gp.q;
    /* peel h from the low end: c'_n, ..., c'_1, then a' */
    i64 hv = h, gv = g;
    i64 out = 0, place = 1;
    i64 tmp[64];
    for (i64 i = gp.n - 1; i >= 0; --i) {
        tmp[i] = hv % q;
        hv /= q;
    }
    i64 a2 = hv % q;
    i64 twist = gp.lam_inv_pow[a2];
    for (i64 i = gp.n - 1; i >= 0; --i) {
        i64 ci = gv % q;
        gv /= q;
        i64 cc = ((i128)ci * twist + tmp[i]) % q;
        out += cc * place;
        place *= q;
    }
    i64 a1 = gv % q;
    out += ((a1 + a2) % q) * place;
    return out;
}

Elem elem_inv(const GroupLevelParams& gp, Elem g) {
    ElemParts parts = elem_decode(gp, g);
    ElemParts inv;
    inv.a = umod(-parts.a, gp.q);
    inv.c.resize(gp.n);
    i64 twist = gp.lam_pow[umod(parts.a, gp.q)];
    for (i64 i = 0; i < gp.n; ++i) inv.c[i] = umod(-(i128)parts.c[i] * twist % gp.q, gp.q);
    return elem_encode(gp, inv);
}

}  // namespace phigamma
