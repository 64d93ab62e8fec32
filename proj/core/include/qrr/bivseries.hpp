#pragma once

#include <vector>

#include "qrr/qseries.hpp"

namespace qrr {

/// Truncated bivariate series in (t, q): a list of QSeries indexed by
/// t-degree 0..D, all sharing the same q-truncation order. Only what the
/// functional-equation machinery needs is provided; the workhorses are
/// multiplication and exact division by binomials 1 - c t^d q^e, which keep
/// every operation O(D*N).
class BivSeries {
 public:
  BivSeries(int t_degree, int q_order);
  static BivSeries one(int t_degree, int q_order);

  int t_degree() const { return static_cast<int>(tc_.size()) - 1; }
  int q_order() const { return qorder_; }

  const QSeries& t_coefficient(int n) const;
  void set_t_coefficient(int n, QSeries s);

  BivSeries operator+(const BivSeries& o) const;

  /// *this *= c t^d q^e (d >= 0).
  void mul_monomial_inplace(const Int& c, int d, int e);
  /// *this *= (1 - c t^d q^e), d >= 0. For d == 0, e must be >= 1.
  void mul_binomial_inplace(const Int& c, int d, int e);
  /// *this /= (1 - c t^d q^e); requires d >= 1 (t-adically invertible)
  /// or d == 0 with e >= 1. Exact over the integers.
  void div_binomial_inplace(const Int& c, int d, int e);

  void add_inplace(const BivSeries& o);

  bool operator==(const BivSeries& o) const = default;

 private:
  int qorder_;
  std::vector<QSeries> tc_;
};

}  // namespace qrr
