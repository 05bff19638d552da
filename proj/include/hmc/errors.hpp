#pragma once

#include <stdexcept>
#include <string>

namespace hmc {

// Bad caller input: malformed strings, mixtures, parameters. CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a brute-force guard. CLI exit code 3.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// A "cannot happen" invariant fired (e.g. duplicate XOR subset). CLI exit code 4.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hmc
