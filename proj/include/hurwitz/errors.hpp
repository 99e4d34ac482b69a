#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

// Error taxonomy mirrored by the CLI exit codes:
//   InvalidInput -> 2, CapExceeded -> 3, HypothesisViolation -> 4,
//   anything else -> 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hurwitz
