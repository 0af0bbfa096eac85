// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace tropt {

// Base class for everything thrown by tropt.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dimension mismatch: non-conforming operands or a non-square matrix.
struct shape_error : error {
  using error::error;
};

// A value outside the operation's domain: inverse of the semifield zero,
// conjugate of an all-zero vector, a matrix that is not column-regular,
// an irregular bound vector, a degenerate objective.
struct domain_error : error {
  using error::error;
};

// The system or problem has no regular solution. The message carries the
// diagnostic sub-cause; the condition itself is always the folded test
// against the identity element.
struct no_solution_error : error {
  using error::error;
};

// Brute-force grid exceeds the enumeration cap.
struct grid_error : error {
  using error::error;
};

// Malformed literal or document; message includes the offending field.
struct parse_error : error {
  using error::error;
};

}  // namespace tropt
