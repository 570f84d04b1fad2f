#pragma once

#include <stdexcept>
#include <string>

namespace knotmosaic {

// Raised when a request exceeds a size guard of the chosen counting method.
// The message names the guard and suggests an alternative method.
class LimitExceeded : public std::runtime_error {
 public:
  explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace knotmosaic
