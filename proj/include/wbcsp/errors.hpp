#pragma once

#include <stdexcept>
#include <string>

namespace wbcsp {

// Input violates an operation's precondition (bad arity, index out of
// range, method forced on an inapplicable language, ...).
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// A configurable resource bound was exceeded (brute-force variable cap,
// graph size cap).
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when evaluation is requested for a HARD language whose instance
// is beyond the brute-force bound.  Carries the witness pair: a function
// that is not pure affine of degree <= 2 and one that is not of product
// type of degree <= 1.
class IntractableError : public std::runtime_error {
public:
    IntractableError(const std::string& what, std::string affine_witness, std::string product_witness)
        : std::runtime_error(what),
          affine_witness(std::move(affine_witness)),
          product_witness(std::move(product_witness)) {}

    std::string affine_witness;
    std::string product_witness;
};

// Error while reading one of the text document formats; line is 1-based,
// 0 when the error is not tied to a specific line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line(line),
          message(message) {}

    int line;
    std::string message;
};

}  // namespace wbcsp
