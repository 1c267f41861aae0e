#pragma once

#include <stdexcept>
#include <string>

namespace rabu {

// Bad user input: unknown generator names, malformed permutations,
// out-of-range colors, config schema violations.
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A documented operation precondition was violated (non-reduced word,
// non-ideal subset, invalid square configuration, ...).
class PreconditionError : public std::logic_error {
public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

// A configured resource cap (radius, ball size, enumeration count) was hit.
class CapExceeded : public std::runtime_error {
public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rabu
