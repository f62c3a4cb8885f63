#include "phigamma/params.hpp"

#include <string>

namespace phigamma {

static const i64 kMaxGroupOrder = 1 << 20;  // library is designed for |G| <= 4096
static const i64 kMaxCoeff = 1LL << 31;

const char* err_name(ErrCode c) {
    switch (c) {
        case ErrCode::NonPrime: return "NonPrime";
        case ErrCode::BadUnit: return "BadUnit";
        case ErrCode::CongruenceViolation: return "CongruenceViolation";
        case ErrCode::BadLevel: return "BadLevel";
        case ErrCode::NotAUnit: return "NotAUnit";
        case ErrCode::IncompatibleLevels: return "IncompatibleLevels";
        case ErrCode::RelationFailure: return "RelationFailure";
        case ErrCode::RankMismatch: return "RankMismatch";
        case ErrCode::NotAMorphism: return "NotAMorphism";
        case ErrCode::NotAComplex: return "NotAComplex";
        case ErrCode::NotAChainMap: return "NotAChainMap";
        case ErrCode::OperatorsDoNotCommute: return "OperatorsDoNotCommute";
        case ErrCode::NonVanishingStrand: return "NonVanishingStrand";
        case ErrCode::BadMatrixShape: return "BadMatrixShape";
        case ErrCode::NotInvertible: return "NotInvertible";
        case ErrCode::OrderViolation: return "OrderViolation";
        case ErrCode::NotCommuting: return "NotCommuting";
        case ErrCode::ConjugationViolation: return "ConjugationViolation";
        case ErrCode::PhiDoesNotCommute: return "PhiDoesNotCommute";
        case ErrCode::FamilyConstraintViolated: return "FamilyConstraintViolated";
        case ErrCode::FixtureMismatch: return "FixtureMismatch";
        case ErrCode::ParseError: return "ParseError";
        case ErrCode::Overflow: return "Overflow";
        case ErrCode::Internal: return "Internal";
    }
    return "Unknown";
}

GroupLevelParams validate_params(i64 p, i64 n, i64 m, i64 N, i64 l) {
    if (!is_prime(p)) fail(ErrCode::NonPrime, "p = " + std::to_string(p));
    if (n < 0) fail(ErrCode::BadLevel, "n = " + std::to_string(n) + " < 0");
    if (m < 1) fail(ErrCode::BadLevel, "m = " + std::to_string(m) + " < 1");
    if (N < 1) fail(ErrCode::BadLevel, "N = " + std::to_string(N) + " < 1");
    if (l < 1) fail(ErrCode::BadUnit, "l = " + std::to_string(l) + " must be a positive integer");
    if (l % p == 0) fail(ErrCode::BadUnit, "l = " + std::to_string(l) + " divisible by p");
    if (p == 2) {
        if (l % 4 != 1) fail(ErrCode::CongruenceViolation, "l = 1 mod 4 required for p = 2");
    } else {
        if (l % p != 1) fail(ErrCode::CongruenceViolation, "l = 1 mod p required for odd p");
    }

    GroupLevelParams gp;
    gp.p = p;
    gp.n = n;
    gp.m = m;
    gp.N = N;
    gp.l = l;
    gp.q = ipow_checked(p, m, "p^m");
    gp.Q = ipow_checked(p, N, "p^N");
    if (gp.Q > kMaxCoeff) fail(ErrCode::BadLevel, "p^N exceeds 2^31");
    gp.lambda = l % gp.q;
    gp.order = 1;
    for (i64 i = 0; i <= n; ++i) {
        gp.order = checked_mul(gp.order, gp.q, "group order");
        if (gp.order > kMaxGroupOrder) fail(ErrCode::BadLevel, "group order exceeds 2^20");
    }

    gp.lam_pow.resize(gp.q);
    gp.lam_inv_pow.resize(gp.q);
    i64 linv = invmod(gp.lambda, gp.q);
    gp.lam_pow[0] = 1 % gp.q;
    gp.lam_inv_pow[0] = 1 % gp.q;
    for (i64 j = 1; j < gp.q; ++j) {
        gp.lam_pow[j] = (i128)gp.lam_pow[j - 1] * gp.lambda % gp.q;
        gp.lam_inv_pow[j] = (i128)gp.lam_inv_pow[j - 1] * linv % gp.q;
    }
    /* lambda^q = 1 mod q follows from the congruence condition on l */
    if (powmod(gp.lambda, gp.q, gp.q) != 1 % gp.q)
        fail(ErrCode::Internal, "lambda^q != 1 mod q");
    return gp;
}

}  // namespace phigamma
