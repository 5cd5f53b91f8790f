#pragma once

#include <stdexcept>
#include <string>

namespace sforge {

enum class Err {
    NotPrime,
    ReducibleModulus,
    SizeBoundExceeded,
    ZeroInput,
    PreconditionFailed,
    InvalidParams,
    NotPresemifield,
    NotCommutative,
    NotPlanar,
    NotInSubfield,
    NoSolution,
    NoSuchElement,
    NoSquareRoot,
    Singular,
    VerificationFailure,
};

class Error : public std::runtime_error {
public:
    Error(Err kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    Err kind() const { return kind_; }

private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

inline const char* err_name(Err e) {
    switch (e) {
    case Err::NotPrime: return "NotPrime";
    case Err::ReducibleModulus: return "ReducibleModulus";
    case Err::SizeBoundExceeded: return "SizeBoundExceeded";
    case Err::ZeroInput: return "ZeroInput";
    case Err::PreconditionFailed: return "PreconditionFailed";
    case Err::InvalidParams: return "InvalidParams";
    case Err::NotPresemifield: return "NotPresemifield";
    case Err::NotCommutative: return "NotCommutative";
    case Err::NotPlanar: return "NotPlanar";
    case Err::NotInSubfield: return "NotInSubfield";
    case Err::NoSolution: return "NoSolution";
    case Err::NoSuchElement: return "NoSuchElement";
    case Err::NoSquareRoot: return "NoSquareRoot";
    case Err::Singular: return "Singular";
    case Err::VerificationFailure: return "VerificationFailure";
    }
    return "Unknown";
}

} // namespace sforge
