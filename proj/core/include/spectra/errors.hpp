#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

/// Invalid parameters or malformed input files (CLI exit code 3).
class ConstraintError : public std::runtime_error {
  public:
    explicit ConstraintError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Exhaustive enumeration would exceed the configured limit (CLI exit code 3).
class EnumerationLimitError : public ConstraintError {
  public:
    explicit EnumerationLimitError(const std::string& msg) : ConstraintError(msg) {}
};

}  // namespace spectra
