#pragma once

#include <string>
#include <vector>

#include "qrr/int_types.hpp"

namespace qrr {

class QSeries;

/// Exact dense polynomial in q (finite support, lowest exponent 0).
/// Used where a computation is a genuine polynomial identity and no
/// truncation order applies: Gaussian polynomials, the T/U family, and the
/// q-difference polynomial sequences.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Int c) { if (c != 0) c_.push_back(std::move(c)); }
  explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly one() { return Poly(Int(1)); }
  static Poly monomial(const Int& c, int e);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Int& coefficient(int k) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly shifted(int e) const;  ///< * q^e, e >= 0
  Poly scaled(const Int& c) const;
  void add_scaled_inplace(const Poly& o, const Int& c, int shift);

  /// *this *= (1 - c q^e), e >= 1.
  void mul_binomial_inplace(const Int& c, int e);
  /// Exact division by (1 - c q^e), e >= 1; throws if a remainder is left.
  void div_binomial_exact_inplace(const Int& c, int e);

  /// q -> q^m.
  Poly substituted_power(int m) const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  QSeries to_series(int order) const;
  std::string str(int max_terms = 16) const;

 private:
  void trim();
  std::vector<Int> c_;
};

}  // namespace qrr
