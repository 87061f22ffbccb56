#pragma once

#include <stdexcept>

namespace hqc {

/// Malformed serialized input (bad length or nonzero padding bits).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hqc
