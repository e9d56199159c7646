#pragma once

#include <stdexcept>
#include <string>

namespace qpriv {

// Numerical thresholds shared across the library. Every validation and
// inequality check reads its threshold from one of these fields; override
// a copy per run instead of scattering magic numbers.
struct Tolerances {
  double hermiticity = 1e-10;
  double unitarity = 1e-9;
  double psd_clip = 1e-9;   // eigenvalues in [-psd_clip, 0) count as zero
  double unit_trace = 1e-10;
  double inequality_slack = 1e-8;
  int max_dimension = 4096;  // cap on any matrix side length
};

// Shape or index mismatch (wrong dims, out-of-range subsystem, size cap).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input violates a declared invariant (non-Hermitian state, bad probability
// weights, unknown channel name, malformed file, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numeric routine failed to deliver its contract (eigensolver did not
// converge, unitary completion lost rank).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qpriv
