#pragma once

#include <stdexcept>

namespace cardalg {

/// A materialization or enumeration limit was exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cardalg
