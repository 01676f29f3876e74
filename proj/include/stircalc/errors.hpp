#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stircalc {

// Raised by rational division and by constructing a rational with a zero
// denominator.
class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("exact rational: division by zero") {}
};

// Raised when an operation needs more series coefficients than the
// truncation order provides.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a triangle build would exceed the configured row cap.
class RowCapExceeded : public std::length_error {
public:
    RowCapExceeded(std::size_t requested_rows, std::size_t cap)
        : std::length_error("triangle row cap exceeded: requested " +
                            std::to_string(requested_rows) + " rows, cap is " +
                            std::to_string(cap)),
          requested(requested_rows),
          cap(cap) {}

    std::size_t requested;
    std::size_t cap;
};

// Raised on malformed numeric text. Carries the offending token and its
// character offset in the input.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& reason, std::string bad_token, std::size_t offset)
        : std::invalid_argument(reason + ": token \"" + bad_token + "\" at position " +
                                std::to_string(offset)),
          token(std::move(bad_token)),
          position(offset) {}

    std::string token;
    std::size_t position;
};

} // namespace stircalc
