#pragma once

#include <string>
#include <vector>

#include "qrr/int_types.hpp"

namespace qrr {

/// A signed integer coefficient times an integer power of q. Monomials are
/// the only values that identity parameters may be bound to.
struct Monomial {
  Int coeff{1};
  int exp{0};

  Monomial() = default;
  Monomial(Int c, int e) : coeff(std::move(c)), exp(e) {
    if (coeff == 0) throw std::invalid_argument("Monomial: zero coefficient");
  }

  Monomial operator*(const Monomial& o) const {
    return Monomial(coeff * o.coeff, exp + o.exp);
  }
  Monomial operator-() const { return Monomial(-coeff, exp); }
  /// Exact division; requires o.coeff | coeff.
  Monomial operator/(const Monomial& o) const;
  Monomial pow(int k) const;

  bool operator==(const Monomial& o) const = default;
  std::string str() const;
};

/// Truncated Laurent series in q with exact integer coefficients.
///
/// A series carries its truncation order N: coefficients of q^k are known
/// exactly for every k <= N and unknown beyond. The zero series is canonical
/// (empty support, lead 0), so equality is structural. Nonzero series store
/// exactly N - lead + 1 coefficients and have a nonzero leading one.
///
/// Values are immutable from the caller's point of view except through the
/// explicitly mutating *_inplace style members; all operations are exact.
class QSeries {
 public:
  /// The canonical zero series at truncation order n.
  explicit QSeries(int order) : order_(order) {}
  static QSeries zero(int order) { return QSeries(order); }
  static QSeries one(int order) { return monomial(Int(1), 0, order); }
  static QSeries monomial(const Int& c, int e, int order);
  /// Build from a coefficient run starting at exponent `lead`.
  QSeries(int order, int lead, std::vector<Int> coeffs);

  int order() const { return order_; }
  int lead() const { return lead_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;

  /// Coefficient of q^k; zero below the lead, error beyond the order.
  const Int& coefficient(int k) const;
  /// Exact leading coefficient (error on the zero series).
  const Int& lead_coeff() const;

  QSeries truncated(int new_order) const;

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator-() const;
  QSeries operator*(const QSeries& o) const;

  /// Multiplicative inverse through the truncation order.
  /// Requires a leading coefficient of +1 or -1 (the integral model).
  QSeries inverse() const;

  /// q -> q^m, m >= 1. Exponents beyond the truncation order are dropped.
  QSeries substituted_power(int m) const;

  QSeries shifted(int e) const;        ///< multiply by q^e
  QSeries scaled(const Int& c) const;  ///< multiply by the integer c
  QSeries scaled(const Monomial& m) const { return shifted(m.exp).scaled(m.coeff); }

  /// *this *= (1 - c q^e). O(N) and exact for any integer c.
  void mul_binomial_inplace(const Int& c, int e);
  /// *this /= (1 - c q^e). Exact; e < 0 or e == 0 require the factor to be
  /// invertible in the integral model, otherwise invalid_specialization.
  void div_binomial_inplace(const Int& c, int e);
  void add_scaled_inplace(const QSeries& o, const Int& c, int shift);

  bool operator==(const QSeries& o) const {
    return order_ == o.order_ && lead_ == o.lead_ && coeffs_ == o.coeffs_;
  }

  std::string str(int max_terms = 12) const;

 private:
  void normalize();

  int order_{0};
  int lead_{0};
  std::vector<Int> coeffs_;  // exponents lead_ .. order_
};

QSeries add(const QSeries& f, const QSeries& g);
QSeries mul(const QSeries& f, const QSeries& g);
inline QSeries invert(const QSeries& f) { return f.inverse(); }
inline QSeries substitute_power(const QSeries& f, int m) { return f.substituted_power(m); }
inline const Int& coefficient(const QSeries& f, int k) { return f.coefficient(k); }

}  // namespace qrr
