#pragma once

#include <stdexcept>
#include <string>

namespace anyonwalk {

/// Invalid walk configuration or argument (CLI exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation was asked to run past its exponential-cost cap (CLI exit code 3).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A link outside the family an invariant routine supports.
class UnsupportedLink : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Milnor sign extraction did not yield ±identity: the sublink has odd
/// pairwise linking, or r/s do not name pinned components of this link.
class NotProperError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that holds for every walk-generated link was violated.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace anyonwalk
