#include "phigamma/ring.hpp"

#include <string>

#include "phigamma/kernels.hpp"

namespace phigamma {

Ring ring_zero(const GroupLevelParams& gp) { return Ring(gp.order, 0); }

Ring ring_one(const GroupLevelParams& gp) { return ring_basis(gp, elem_identity(gp)); }

Ring ring_basis(const GroupLevelParams& gp, Elem g) {
    Ring r(gp.order, 0);
    r[g] = 1 % gp.Q;
    return r;
}

Ring ring_add(const GroupLevelParams& gp, const Ring& a, const Ring& b) {
    Ring out(gp.order);
    for (i64 i = 0; i < gp.order; ++i) out[i] = (a[i] + b[i]) % gp.Q;
    return out;
}

Ring ring_sub(const GroupLevelParams& gp, const Ring& a, const Ring& b) {
    Ring out(gp.order);
    for (i64 i = 0; i < gp.order; ++i) out[i] = umod(a[i] - b[i], gp.Q);
    return out;
}

Ring ring_neg(const GroupLevelParams& gp, const Ring& a) {
    Ring out(gp.order);
    for (i64 i = 0; i < gp.order; ++i) out[i] = umod(-a[i], gp.Q);
    return out;
}

Ring ring_scale(const GroupLevelParams& gp, i64 k, const Ring& a) {
    Ring out(gp.order);
    k = umod(k, gp.Q);
    for (i64 i = 0; i < gp.order; ++i) out[i] = (i128)k * a[i] % gp.Q;
    return out;
}

Ring ring_mul(const GroupLevelParams& gp, const Ring& a, const Ring& b) {
    Ring out(gp.order);
    kernels::convolve(gp, a.data(), b.data(), out.data());
    return out;
}

Ring ring_mul_reference(const GroupLevelParams& gp, const Ring& a, const Ring& b) {
    Ring out(gp.order);
    kernels::convolve_reference(gp, a.data(), b.data(), out.data());
    return out;
}

bool ring_eq(const Ring& a, const Ring& b) { return a == b; }

bool ring_is_zero(const Ring& a) {
    for (i64 v : a)
        if (v != 0) return false;
    return true;
}

i64 augmentation(const GroupLevelParams& gp, const Ring& a) {
    i64 acc = 0;
    for (i64 v : a) acc = (acc + v) % gp.Q;
    return acc;
}

Ring omega(const GroupLevelParams& gp, i64 i) {
    Ring r = ring_basis(gp, elem_beta(gp, i));
    r[elem_identity(gp)] = umod(r[elem_identity(gp)] - 1, gp.Q);
    return r;
}

Ring big_w(const GroupLevelParams& gp, i64 i) {
    ElemParts parts;
    parts.a = 0;
    parts.c.assign(gp.n, 0);
    parts.c[i - 1] = gp.lambda % gp.q;
    Ring r = ring_basis(gp, elem_encode(gp, parts));
    r[elem_identity(gp)] = umod(r[elem_identity(gp)] - 1, gp.Q);
    return r;
}

Ring u_unit(const GroupLevelParams& gp, i64 i) {
    Ring acc = ring_zero(gp);
    Ring pw = ring_one(gp);  // omega_i^(k-1)
    Ring om = omega(gp, i);
    for (i64 k = 1; k <= gp.l; ++k) {
        i64 coeff = binomial_mod_ppow(gp.l, k, gp.p, gp.Q, (int)gp.N);
        acc = ring_add(gp, acc, ring_scale(gp, coeff, pw));
        if (k == gp.l) break;
        pw = ring_mul(gp, pw, om);
        if (ring_is_zero(pw)) break;  // omega_i is nilpotent
    }
    return acc;
}

/*
 * Solve s * r = 1 mod Q.  Column j of the system matrix is g_j * r, whose
 * coefficient at g_i is r(g_j^-1 g_i).  Gaussian elimination over Z/Q with
 * unit pivots; if at some step no unit pivot exists the matrix is singular
 * mod p, which is equivalent to r not being a unit.
 */
Ring invert_unit(const GroupLevelParams& gp, const Ring& r) {
    const i64 size = gp.order, Q = gp.Q, p = gp.p;
    std::vector<i64> M(size * size);
    std::vector<i64> ginv(size);
    for (i64 g = 0; g < size; ++g) ginv[g] = elem_inv(gp, g);
    for (i64 j = 0; j < size; ++j)
        for (i64 i = 0; i < size; ++i) M[i * size + j] = r[elem_mul(gp, ginv[j], i)];
    std::vector<i64> b(size, 0);
    b[elem_identity(gp)] = 1 % Q;
    std::vector<i64> colperm(size);
    for (i64 j = 0; j < size; ++j) colperm[j] = j;

    for (i64 t = 0; t < size; ++t) {
        i64 pr = -1, pc = -1;
        for (i64 i = t; i < size && pr < 0; ++i)
            for (i64 j = t; j < size; ++j)
                if (M[i * size + j] % p != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) fail(ErrCode::NotAUnit, "element is not invertible mod p");
        if (pr != t) {
            for (i64 j = 0; j < size; ++j) std::swap(M[pr * size + j], M[t * size + j]);
            std::swap(b[pr], b[t]);
        }
        if (pc != t) {
            for (i64 i = 0; i < size; ++i) std::swap(M[i * size + pc], M[i * size + t]);
            std::swap(colperm[pc], colperm[t]);
        }
        i64 inv = invmod(M[t * size + t], Q);
        for (i64 j = t; j < size; ++j) M[t * size + j] = (i128)M[t * size + j] * inv % Q;
        b[t] = (i128)b[t] * inv % Q;
        for (i64 i = t + 1; i < size; ++i) {
            i64 f = M[i * size + t];
            if (f == 0) continue;
            for (i64 j = t; j < size; ++j)
                M[i * size + j] = umod(M[i * size + j] - (i128)f * M[t * size + j] % Q, Q);
            b[i] = umod(b[i] - (i128)f * b[t] % Q, Q);
        }
    }
    std::vector<i64> x(size);
    for (i64 t = size - 1; t >= 0; --t) {
        i64 acc = b[t];
        for (i64 j = t + 1; j < size; ++j)
            acc = umod(acc - (i128)M[t * size + j] * x[j] % Q, Q);
        x[t] = acc;
    }
    Ring s(size);
    for (i64 j = 0; j < size; ++j) s[colperm[j]] = x[j];

    if (!ring_eq(ring_mul(gp, s, r), ring_one(gp)) || !ring_eq(ring_mul(gp, r, s), ring_one(gp)))
        fail(ErrCode::Internal, "invert_unit produced a non-inverse");
    return s;
}

Ring v_unit(const GroupLevelParams& gp, i64 i) { return invert_unit(gp, u_unit(gp, i)); }

Ring tau(const GroupLevelParams& gp, const std::vector<i64>& S) {
    Ring acc = ring_basis(gp, elem_gamma(gp));
    for (auto it = S.rbegin(); it != S.rend(); ++it) acc = ring_mul(gp, v_unit(gp, *it), acc);
    acc[elem_identity(gp)] = umod(acc[elem_identity(gp)] - 1, gp.Q);
    return acc;
}

Ring project_level(const GroupLevelParams& from, const GroupLevelParams& to, const Ring& r) {
    if (!from.same_shape(to))
        fail(ErrCode::IncompatibleLevels, "p, n, l must agree");
    if (to.m > from.m || to.N > from.N)
        fail(ErrCode::IncompatibleLevels, "target level must be coarser");
    Ring out = ring_zero(to);
    for (Elem g = 0; g < from.order; ++g) {
        if (r[g] == 0) continue;
        ElemParts parts = elem_decode(from, g);
        parts.a %= to.q;
        for (i64 i = 0; i < to.n; ++i) parts.c[i] %= to.q;
        Elem h = elem_encode(to, parts);
        out[h] = (out[h] + r[g]) % to.Q;
    }
    return out;
}

static std::string first_diff(const GroupLevelParams& gp, const Ring& a, const Ring& b) {
    for (i64 i = 0; i < gp.order; ++i)
        if (a[i] != b[i])
            return "coefficient at index " + std::to_string(i) + ": " + std::to_string(a[i]) +
                   " vs " + std::to_string(b[i]);
    return "";
}

CheckReport check_relations(const GroupLevelParams& gp) {
    CheckReport rep;
    const i64 n = gp.n;
    std::vector<Ring> om(n + 1), Wx(n + 1), ux(n + 1), vx(n + 1);
    for (i64 i = 1; i <= n; ++i) {
        om[i] = omega(gp, i);
        Wx[i] = big_w(gp, i);
        ux[i] = u_unit(gp, i);
        vx[i] = v_unit(gp, i);
    }
    Ring gam = ring_basis(gp, elem_gamma(gp));

    for (i64 i = 1; i <= n; ++i)
        for (i64 j = i + 1; j <= n; ++j) {
            Ring lhs = ring_mul(gp, om[i], om[j]), rhs = ring_mul(gp, om[j], om[i]);
            rep.add("omega_commute_" + std::to_string(i) + "_" + std::to_string(j),
                    ring_eq(lhs, rhs), first_diff(gp, lhs, rhs));
            Ring lw = ring_mul(gp, Wx[i], Wx[j]), rw = ring_mul(gp, Wx[j], Wx[i]);
            rep.add("W_commute_" + std::to_string(i) + "_" + std::to_string(j), ring_eq(lw, rw),
                    first_diff(gp, lw, rw));
        }

    for (i64 i = 1; i <= n; ++i) {
        Ring lhs = ring_mul(gp, gam, om[i]), rhs = ring_mul(gp, Wx[i], gam);
        rep.add("gamma_omega_" + std::to_string(i), ring_eq(lhs, rhs), first_diff(gp, lhs, rhs));
    }

    /* tau_S omega_i = omega_i tau_{S\{i}} for every S containing i */
    for (i64 mask = 0; mask < (1 << n); ++mask) {
        std::vector<i64> S;
        for (i64 i = 1; i <= n; ++i)
            if (mask & (1 << (i - 1))) S.push_back(i);
        if (S.empty()) continue;
        Ring tS = tau(gp, S);
        for (i64 i : S) {
            std::vector<i64> Sm;
            for (i64 x : S)
                if (x != i) Sm.push_back(x);
            Ring lhs = ring_mul(gp, tS, om[i]);
            Ring rhs = ring_mul(gp, om[i], tau(gp, Sm));
            std::string nm = "tau_omega_{";
            for (size_t t = 0; t < S.size(); ++t) nm += (t ? "," : "") + std::to_string(S[t]);
            nm += "}_" + std::to_string(i);
            rep.add(nm, ring_eq(lhs, rhs), first_diff(gp, lhs, rhs));
        }
    }

    for (i64 i = 1; i <= n; ++i) {
        Ring uo = ring_mul(gp, ux[i], om[i]);
        rep.add("u_omega_is_W_" + std::to_string(i), ring_eq(uo, Wx[i]),
                first_diff(gp, uo, Wx[i]));
        i64 aug = augmentation(gp, ux[i]);
        rep.add("u_augmentation_" + std::to_string(i), aug == gp.l % gp.Q,
                "augmentation " + std::to_string(aug) + " != l mod Q");
        Ring uv = ring_mul(gp, ux[i], vx[i]), vu = ring_mul(gp, vx[i], ux[i]);
        rep.add("v_is_inverse_" + std::to_string(i),
                ring_eq(uv, ring_one(gp)) && ring_eq(vu, ring_one(gp)),
                "u_i v_i or v_i u_i differs from 1");
        Ring pw = ring_one(gp);
        for (i64 k = 0; k < gp.N * gp.q; ++k) pw = ring_mul(gp, pw, om[i]);
        rep.add("omega_nilpotent_" + std::to_string(i), ring_is_zero(pw),
                "omega^{N p^m} is nonzero");
    }

    for (i64 i = 1; i <= n; ++i) {
        Elem g = elem_gamma(gp), bi = elem_beta(gp, i);
        Elem lhs = elem_mul(gp, elem_mul(gp, g, bi), elem_inv(gp, g));
        ElemParts parts;
        parts.a = 0;
        parts.c.assign(gp.n, 0);
        parts.c[i - 1] = gp.lambda % gp.q;
        rep.add("conj_beta_" + std::to_string(i), lhs == elem_encode(gp, parts),
                "gamma beta_i gamma^-1 != beta_i^lambda");
    }
    return rep;
}

}  // namespace phigamma
