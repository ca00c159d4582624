#pragma once

#include <stdexcept>
#include <string>

namespace biratlab {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& msg) : Error(msg) {}
};

struct InexactDivision : Error {
    explicit InexactDivision(const std::string& msg) : Error(msg) {}
};

struct IdenticallyZero : Error {
    explicit IdenticallyZero(const std::string& msg) : Error(msg) {}
};

struct NonRealCoefficients : Error {
    NonRealCoefficients() : Error("polynomial has non-real coefficients") {}
};

struct NoRealRoot : Error {
    NoRealRoot() : Error("polynomial has no real root") {}
};

struct ZeroVector : Error {
    ZeroVector() : Error("zero coordinate triple") {}
};

struct NotBirational : Error {
    std::string witness;
    explicit NotBirational(const std::string& w)
        : Error("map is not birational: " + w), witness(w) {}
};

struct DegreeDrop : Error {
    explicit DegreeDrop(const std::string& msg) : Error(msg) {}
};

struct DegenerateMap : Error {
    std::string witness;
    explicit DegenerateMap(const std::string& w)
        : Error("degenerate map: " + w), witness(w) {}
};

struct IndeterminatePoint : Error {
    explicit IndeterminatePoint(const std::string& msg) : Error(msg) {}
};

struct JetOrderExceeded : Error {
    explicit JetOrderExceeded(const std::string& msg) : Error(msg) {}
};

struct UnresolvedIndeterminacy : Error {
    explicit UnresolvedIndeterminacy(const std::string& msg) : Error(msg) {}
};

struct WrongBranch : Error {
    explicit WrongBranch(const std::string& msg) : Error(msg) {}
};

struct InconsistentTau : Error {
    explicit InconsistentTau(const std::string& msg) : Error(msg) {}
};

struct UnknownFamily : Error {
    explicit UnknownFamily(const std::string& msg) : Error(msg) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

struct SequenceTooShort : Error {
    explicit SequenceTooShort(const std::string& msg) : Error(msg) {}
};

struct NotRootOfUnity : Error {
    explicit NotRootOfUnity(const std::string& msg) : Error(msg) {}
};

struct InvalidMultiplier : Error {
    explicit InvalidMultiplier(const std::string& msg) : Error(msg) {}
};

struct InvalidFamilyParams : Error {
    explicit InvalidFamilyParams(const std::string& msg) : Error(msg) {}
};

struct UndefinedComposition : Error {
    explicit UndefinedComposition(const std::string& msg) : Error(msg) {}
};

struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(int ln, int col, const std::string& msg)
        : Error("parse error at " + std::to_string(ln) + ":" + std::to_string(col) + ": " + msg),
          line(ln), column(col) {}
};

struct ArityError : Error {
    explicit ArityError(const std::string& msg) : Error(msg) {}
};

/// Raised when exact computation contradicts a structural fact the source
/// theory guarantees (e.g. two SE orbits claiming the same terminal point).
struct Inconsistency : Error {
    explicit Inconsistency(const std::string& msg) : Error(msg) {}
};

} // namespace biratlab
