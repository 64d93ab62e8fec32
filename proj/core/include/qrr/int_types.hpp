#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qrr {

/// Exact arbitrary-precision integer. All coefficients in this library are
/// integers; anything that would leave the integers is reported as an error
/// rather than approximated.
using Int = mpz_class;

inline bool is_unit(const Int& v) { return v == 1 || v == -1; }

/// A series/specialization that falls outside the integral model: a vanishing
/// Pochhammer factor, a non-unit leading coefficient that would have to be
/// inverted, or a sum that fails its termination precondition. Verification
/// engines classify these as INVALID, distinct from a genuine mismatch.
class invalid_specialization : public std::runtime_error {
 public:
  explicit invalid_specialization(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qrr
