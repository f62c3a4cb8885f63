#pragma once

#include <stdexcept>
#include <string>

namespace phigamma {

enum class ErrCode {
    NonPrime,
    BadUnit,
    CongruenceViolation,
    BadLevel,
    NotAUnit,
    IncompatibleLevels,
    RelationFailure,
    RankMismatch,
    NotAMorphism,
    NotAComplex,
    NotAChainMap,
    OperatorsDoNotCommute,
    NonVanishingStrand,
    BadMatrixShape,
    NotInvertible,
    OrderViolation,
    NotCommuting,
    ConjugationViolation,
    PhiDoesNotCommute,
    FamilyConstraintViolated,
    FixtureMismatch,
    ParseError,
    Overflow,
    Internal,
};

const char* err_name(ErrCode c);

struct Error : std::runtime_error {
    ErrCode code;
    Error(ErrCode c, const std::string& msg)
        : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(ErrCode c, const std::string& msg) { throw Error(c, msg); }

}  // namespace phigamma
