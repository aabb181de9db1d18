#pragma once

#include <stdexcept>
#include <string>

namespace reeskit {

/// Base error for every failure reported by the library. The CLI maps these
/// to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented limit (Kronecker bound, retry cap, iteration cap) was hit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace reeskit
