#include "qrr/bivseries.hpp"

namespace qrr {

BivSeries::BivSeries(int t_degree, int q_order) : qorder_(q_order) {
  if (t_degree < 0) throw std::invalid_argument("BivSeries: negative t-degree");
  tc_.assign(static_cast<size_t>(t_degree + 1), QSeries(q_order));
}

BivSeries BivSeries::one(int t_degree, int q_order) {
  BivSeries r(t_degree, q_order);
  r.tc_[0] = QSeries::one(q_order);
  return r;
}

const QSeries& BivSeries::t_coefficient(int n) const {
  if (n < 0 || n > t_degree())
    throw std::out_of_range("BivSeries::t_coefficient: t-degree out of range");
  return tc_[static_cast<size_t>(n)];
}

void BivSeries::set_t_coefficient(int n, QSeries s) {
  if (n < 0 || n > t_degree())
    throw std::out_of_range("BivSeries::set_t_coefficient: t-degree out of range");
  if (s.order() != qorder_)
    throw std::invalid_argument("BivSeries: mismatched q-truncation order");
  tc_[static_cast<size_t>(n)] = std::move(s);
}

BivSeries BivSeries::operator+(const BivSeries& o) const {
  if (t_degree() != o.t_degree() || qorder_ != o.qorder_)
    throw std::invalid_argument("BivSeries: mismatched truncation");
  BivSeries r = *this;
  r.add_inplace(o);
  return r;
}

void BivSeries::add_inplace(const BivSeries& o) {
  if (t_degree() != o.t_degree() || qorder_ != o.qorder_)
    throw std::invalid_argument("BivSeries: mismatched truncation");
  for (size_t n = 0; n < tc_.size(); ++n)
    tc_[n].add_scaled_inplace(o.tc_[n], Int(1), 0);
}

void BivSeries::mul_monomial_inplace(const Int& c, int d, int e) {
  if (d < 0) throw std::invalid_argument("BivSeries: negative t-power");
  const int D = t_degree();
  for (int n = D; n >= 0; --n) {
    if (n >= d)
      tc_[n] = tc_[n - d].shifted(e).scaled(c);
    else
      tc_[n] = QSeries(qorder_);
  }
}

void BivSeries::mul_binomial_inplace(const Int& c, int d, int e) {
  if (c == 0) return;
  if (d == 0) {
    for (auto& s : tc_) s.mul_binomial_inplace(c, e);
    return;
  }
  for (int n = t_degree(); n >= d; --n)
    tc_[n].add_scaled_inplace(tc_[n - d], -c, e);
}

void BivSeries::div_binomial_inplace(const Int& c, int d, int e) {
  if (c == 0) return;
  if (d == 0) {
    if (e < 1)
      throw std::invalid_argument("BivSeries: division by constant-in-t, constant-in-q factor");
    for (auto& s : tc_) s.div_binomial_inplace(c, e);
    return;
  }
  for (int n = d; n <= t_degree(); ++n)
    tc_[n].add_scaled_inplace(tc_[n - d], c, e);
}

}  // namespace qrr
