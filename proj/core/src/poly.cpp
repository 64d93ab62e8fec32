#include "qrr/poly.hpp"

#include <algorithm>
#include <sstream>

#include "qrr/qseries.hpp"

namespace qrr {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const Int& c, int e) {
  Poly r;
  if (c == 0) return r;
  if (e < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
  r.c_.assign(static_cast<size_t>(e + 1), Int(0));
  r.c_.back() = c;
  return r;
}

const Int& Poly::coefficient(int k) const {
  static const Int kZero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(k)];
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

Poly Poly::shifted(int e) const {
  if (e < 0) throw std::invalid_argument("Poly::shifted: negative exponent");
  Poly r;
  if (is_zero()) return r;
  r.c_.assign(static_cast<size_t>(e), Int(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::scaled(const Int& c) const {
  if (c == 0) return Poly();
  Poly r = *this;
  if (c != 1)
    for (auto& x : r.c_) x *= c;
  return r;
}

void Poly::add_scaled_inplace(const Poly& o, const Int& c, int shift) {
  if (o.is_zero() || c == 0) return;
  if (shift < 0) throw std::invalid_argument("Poly::add_scaled_inplace: negative shift");
  size_t need = o.c_.size() + static_cast<size_t>(shift);
  if (c_.size() < need) c_.resize(need, Int(0));
  for (size_t i = 0; i < o.c_.size(); ++i)
    if (o.c_[i] != 0) c_[i + shift] += c * o.c_[i];
  trim();
}

void Poly::mul_binomial_inplace(const Int& c, int e) {
  if (e < 1) throw std::invalid_argument("Poly::mul_binomial: e must be >= 1");
  if (is_zero() || c == 0) return;
  c_.resize(c_.size() + static_cast<size_t>(e), Int(0));
  for (int k = static_cast<int>(c_.size()) - 1; k >= e; --k)
    if (c_[k - e] != 0) c_[k] -= c * c_[k - e];
  trim();
}

void Poly::div_binomial_exact_inplace(const Int& c, int e) {
  if (e < 1) throw std::invalid_argument("Poly::div_binomial: e must be >= 1");
  if (is_zero()) return;
  // quotient coefficients accumulate in place: out_k = f_k + c out_{k-e};
  // the top e coefficients of the result must come out zero.
  const int n = static_cast<int>(c_.size());
  for (int k = e; k < n; ++k)
    if (c_[k - e] != 0) c_[k] += c * c_[k - e];
  for (int k = std::max(0, n - e); k < n; ++k)
    if (c_[k] != 0) throw std::logic_error("Poly: inexact division by binomial");
  c_.resize(static_cast<size_t>(std::max(0, n - e)));
  trim();
}

Poly Poly::substituted_power(int m) const {
  if (m < 1) throw std::invalid_argument("Poly::substituted_power: m must be >= 1");
  if (m == 1) return *this;
  Poly r;
  if (is_zero()) return r;
  r.c_.assign((c_.size() - 1) * static_cast<size_t>(m) + 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i * m] = c_[i];
  return r;
}

QSeries Poly::to_series(int order) const {
  std::vector<Int> c(c_.begin(),
                     c_.begin() + std::min(c_.size(), static_cast<size_t>(order + 1)));
  return QSeries(order, 0, std::move(c));
}

std::string Poly::str(int max_terms) const {
  return to_series(std::max(0, degree())).str(max_terms);
}

}  // namespace qrr
