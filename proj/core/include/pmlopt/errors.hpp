#pragma once

#include <stdexcept>

namespace pmlopt {

// Numeric breakdowns: the requested computation has no usable answer.
struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnresolvableWave : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateBasis : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Contract violations: the caller passed something outside the documented domain.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidInterval : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct LengthMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace pmlopt
