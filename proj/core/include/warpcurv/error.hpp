#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace warpcurv {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed warp expression. offset is the byte offset into the source text.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Invalid construction of a warp function, fiber or spacetime.
class ConstructionError : public Error {
public:
    using Error::Error;
};

// Evaluation outside the domain, at an ambiguous junction point, or producing
// a non-finite intermediate.
class EvaluationError : public Error {
public:
    using Error::Error;
};

// A distributional product that has no classical meaning (delta times a
// jumping factor).
class DistributionError : public Error {
public:
    using Error::Error;
};

} // namespace warpcurv
