#pragma once

#include <stdexcept>

namespace pair014 {

/// Raised for malformed input or violated preconditions across the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pair014
