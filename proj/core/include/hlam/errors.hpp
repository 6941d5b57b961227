#pragma once

#include <stdexcept>
#include <string>

namespace hlam {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct RingMismatch : Error {
    explicit RingMismatch(const std::string& w = "operands live in different rings") : Error(w) {}
};
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& w = "division by zero") : Error(w) {}
};
// Raised when inverting a + b*t whose norm a^2 - b^2*D vanishes: the
// discriminant D is secretly a square and the quadratic ring is not a field.
struct ZeroDivisor : Error {
    explicit ZeroDivisor(const std::string& w = "zero divisor in quadratic extension") : Error(w) {}
};
struct OrderNotDividing : Error {
    explicit OrderNotDividing(const std::string& w = "root order does not divide the field order") : Error(w) {}
};
struct Singular : Error {
    explicit Singular(const std::string& w = "matrix is singular") : Error(w) {}
};
struct NotInO4 : Error {
    explicit NotInO4(const std::string& w = "character is not in the dimension-4 stratum") : Error(w) {}
};
struct WrongStratum : Error {
    explicit WrongStratum(const std::string& w = "character stratum incompatible with constructor") : Error(w) {}
};
struct BadD : Error {
    explicit BadD(const std::string& w = "d is not a root of the defining quadratic") : Error(w) {}
};
struct BadParam : Error {
    explicit BadParam(const std::string& w = "invalid constructor parameter") : Error(w) {}
};
struct NOddRequired : Error {
    explicit NOddRequired(const std::string& w = "operation requires odd N") : Error(w) {}
};
struct NotAHom : Error {
    explicit NotAHom(const std::string& w = "matrix is not a module homomorphism") : Error(w) {}
};
struct SplitFailed : Error {
    explicit SplitFailed(const std::string& w = "projective splitting system is inconsistent") : Error(w) {}
};
struct NotDiagonalizable : Error {
    explicit NotDiagonalizable(const std::string& w = "group action is not simultaneously diagonalizable") : Error(w) {}
};

}  // namespace hlam
