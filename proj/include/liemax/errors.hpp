#pragma once

#include <stdexcept>
#include <string>

namespace liemax {

/// Malformed input file or text; the message carries line/field context.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured enumeration limit (automorphism count, vertex count,
/// direction count, group size) was exceeded.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

} // namespace liemax
