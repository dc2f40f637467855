#pragma once

#include <stdexcept>
#include <string>

namespace fcube {

// Malformed or inconsistent input: bad digit, dimension mismatch, bad schema.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured size guard (refinement cells, image size) would be exceeded.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fcube
