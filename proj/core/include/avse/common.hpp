#pragma once

#include <stdexcept>
#include <string>

namespace avse {

// Content-dependent failures: malformed files, mismatched signals, silent
// references. Mapped to exit code 3 by the CLI.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical breakdowns that are not the caller's fault: divergent values,
// non-finite intermediates. Mapped to exit code 4 by the CLI.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace avse
