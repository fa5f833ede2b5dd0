#pragma once

#include <stdexcept>
#include <string>

namespace pbv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct PoleError : Error {
    PoleError() : Error("evaluation hit a pole (denominator vanished)") {}
    explicit PoleError(const std::string& what) : Error(what) {}
};

struct SyntaxError : Error {
    size_t position;
    SyntaxError(const std::string& what, size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct UnknownFamily : Error {
    explicit UnknownFamily(const std::string& fam) : Error("unknown variable family: " + fam) {}
};

struct NonIntegerExponent : Error {
    NonIntegerExponent() : Error("exponent must be an integer") {}
};

struct InvalidCrossFraction : Error {
    InvalidCrossFraction() : Error("cross fraction requires x != t and y != z") {}
};

struct DegenerateCrossRatio : Error {
    DegenerateCrossRatio() : Error("cross ratio undefined: coincident points in a forbidden slot") {}
};

struct DegeneratePolygon : Error {
    explicit DegeneratePolygon(const std::string& what) : Error(what) {}
};

struct NonUniqueHill : Error {
    NonUniqueHill() : Error("Hill reconstruction requires odd period N") {}
};

struct NoRealBranch : Error {
    NoRealBranch() : Error("alternating product of B is not a positive square; no real branch") {}
};

struct PeriodTooSmall : Error {
    explicit PeriodTooSmall(const std::string& what) : Error(what) {}
};

struct InconsistentTable : Error {
    explicit InconsistentTable(const std::string& what) : Error(what) {}
};

struct StructureMismatch : Error {
    explicit StructureMismatch(const std::string& what) : Error(what) {}
};

}  // namespace pbv
