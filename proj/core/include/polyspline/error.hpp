#pragma once

#include <stdexcept>
#include <string>

namespace polyspline {

/// Raised when an input document or a constructed complex violates a
/// structural invariant. The message names the violated invariant.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace polyspline
