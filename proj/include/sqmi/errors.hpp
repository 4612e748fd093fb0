#pragma once

#include <stdexcept>
#include <string>

namespace sqmi {

// Invalid user input or violated data invariant (CLI exit code 1).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed container file: bad magic, version, or structural mismatch.
class FormatError : public ValidationError {
 public:
  explicit FormatError(const std::string& what) : ValidationError(what) {}
};

// Structurally valid file whose payload violates data invariants (NaN/Inf).
class DataError : public ValidationError {
 public:
  explicit DataError(const std::string& what) : ValidationError(what) {}
};

// A Gaussian fit that cannot be completed (too few samples, or the jitter
// policy exhausted its cap). The attack engine converts these into
// per-canary fallbacks instead of aborting a run.
class DegenerateFitError : public std::runtime_error {
 public:
  explicit DegenerateFitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sqmi
