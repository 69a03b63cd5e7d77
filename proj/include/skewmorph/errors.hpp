#pragma once

#include <stdexcept>

namespace skewmorph {

/// An internal consistency check failed: a constructed object violated an
/// invariant that the theory guarantees. Distinct from bad input, which is
/// reported with std::invalid_argument.
class SelfCheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace skewmorph
