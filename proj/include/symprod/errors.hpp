#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symprod {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input document (JSON shape, rational literal, unknown key).
class ParseError : public Error {
public:
    using Error::Error;
};

// A well-formed algebra document that violates a Frobenius algebra axiom.
class ValidationError : public Error {
public:
    ValidationError(std::string axiom, const std::string& detail)
        : Error(axiom + ": " + detail), axiom_(std::move(axiom)) {}

    const std::string& axiom() const noexcept { return axiom_; }

private:
    std::string axiom_;
};

class OddDimensionError : public ValidationError {
public:
    explicit OddDimensionError(int dim)
        : ValidationError("even dimension", "complex_dim " + std::to_string(dim) + " is odd") {}
};

class UnknownBasisId : public Error {
public:
    using Error::Error;
};

class SizeMismatch : public Error {
public:
    using Error::Error;
};

class NotStable : public Error {
public:
    using Error::Error;
};

class NotJointOrbit : public Error {
public:
    using Error::Error;
};

// Raised when a graph defect comes out negative or half-integral. Never
// expected; it means the orbit bookkeeping is broken.
class DefectError : public Error {
public:
    using Error::Error;
};

class NotCoarsening : public Error {
public:
    using Error::Error;
};

class NotRefinement : public Error {
public:
    using Error::Error;
};

class AlgebraMismatch : public Error {
public:
    using Error::Error;
};

class SingularPairing : public Error {
public:
    using Error::Error;
};

class NotASurface : public Error {
public:
    using Error::Error;
};

// Term or cycle expression that failed to parse; carries the offending
// column so callers can draw a caret under the input.
class ExpressionError : public Error {
public:
    ExpressionError(const std::string& message, std::size_t position)
        : Error(message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace symprod
