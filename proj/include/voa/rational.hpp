#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace voa {

/// Arbitrary-precision rational number.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "a" or "a/b" with optional sign. Throws std::invalid_argument on bad input.
Rat parse_rat(const std::string& text);

std::string to_string(const Rat& r);

/// Error raised when an operation leaves its mathematical domain
/// (division by zero, pole at a requested parameter value, ...).
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace voa
