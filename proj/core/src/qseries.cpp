#include "qrr/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace qrr {

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  if (!mpz_divisible_p(coeff.get_mpz_t(), o.coeff.get_mpz_t()))
    throw std::invalid_argument("Monomial: inexact coefficient division");
  r.coeff = coeff / o.coeff;
  r.exp = exp - o.exp;
  return r;
}

Monomial Monomial::pow(int k) const {
  Monomial r;
  if (k >= 0) {
    mpz_pow_ui(r.coeff.get_mpz_t(), coeff.get_mpz_t(), k);
  } else {
    if (!is_unit(coeff))
      throw invalid_specialization("monomial with non-unit coefficient raised to negative power");
    r.coeff = (k % 2 == 0) ? Int(1) : coeff;
  }
  r.exp = exp * k;
  return r;
}

std::string Monomial::str() const {
  std::ostringstream os;
  if (coeff == -1)
    os << '-';
  else if (coeff != 1)
    os << coeff << '*';
  if (exp == 0)
    os << '1';
  else if (exp == 1)
    os << 'q';
  else
    os << "q^" << exp;
  return os.str();
}

QSeries QSeries::monomial(const Int& c, int e, int order) {
  QSeries r(order);
  if (c == 0 || e > order) return r;
  r.lead_ = e;
  r.coeffs_.assign(static_cast<size_t>(order - e + 1), Int(0));
  r.coeffs_[0] = c;
  return r;
}

QSeries::QSeries(int order, int lead, std::vector<Int> coeffs)
    : order_(order), lead_(lead), coeffs_(std::move(coeffs)) {
  coeffs_.resize(static_cast<size_t>(std::max(0, order_ - lead_ + 1)), Int(0));
  normalize();
}

void QSeries::normalize() {
  size_t drop = 0;
  while (drop < coeffs_.size() && coeffs_[drop] == 0) ++drop;
  if (drop == coeffs_.size()) {
    coeffs_.clear();
    lead_ = 0;
    return;
  }
  if (drop > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(drop));
    lead_ += static_cast<int>(drop);
  }
}

bool QSeries::is_one() const {
  if (is_zero() || lead_ != 0 || coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

const Int& QSeries::coefficient(int k) const {
  static const Int kZero(0);
  if (k > order_)
    throw std::out_of_range("QSeries::coefficient: exponent beyond truncation order");
  if (is_zero() || k < lead_) return kZero;
  return coeffs_[static_cast<size_t>(k - lead_)];
}

const Int& QSeries::lead_coeff() const {
  if (is_zero()) throw std::logic_error("QSeries::lead_coeff on zero series");
  return coeffs_.front();
}

QSeries QSeries::truncated(int new_order) const {
  if (new_order > order_)
    throw std::invalid_argument("QSeries::truncated: cannot extend a truncated series");
  QSeries r(new_order);
  if (is_zero() || lead_ > new_order) return r;
  r.lead_ = lead_;
  r.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + (new_order - lead_ + 1));
  r.normalize();
  return r;
}

namespace {
void require_same_order(const QSeries& f, const QSeries& g) {
  if (f.order() != g.order())
    throw std::invalid_argument("QSeries: mismatched truncation orders");
}
}  // namespace

QSeries QSeries::operator+(const QSeries& o) const {
  require_same_order(*this, o);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lead = std::min(lead_, o.lead_);
  std::vector<Int> c(static_cast<size_t>(order_ - lead + 1), Int(0));
  for (int k = lead_; k <= order_; ++k) c[k - lead] = coeffs_[k - lead_];
  for (int k = o.lead_; k <= order_; ++k) c[k - lead] += o.coeffs_[k - o.lead_];
  return QSeries(order_, lead, std::move(c));
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const QSeries& o) const {
  require_same_order(*this, o);
  QSeries r(order_);
  if (is_zero() || o.is_zero()) return r;
  int lead = lead_ + o.lead_;
  if (lead > order_) return r;
  std::vector<Int> c(static_cast<size_t>(order_ - lead + 1), Int(0));
  const int an = static_cast<int>(coeffs_.size());
  const int bn = static_cast<int>(o.coeffs_.size());
  const int cn = static_cast<int>(c.size());
  for (int i = 0; i < an && i < cn; ++i) {
    if (coeffs_[i] == 0) continue;
    const int jmax = std::min(bn, cn - i);
    for (int j = 0; j < jmax; ++j) {
      if (o.coeffs_[j] == 0) continue;
      c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return QSeries(order_, lead, std::move(c));
}

QSeries QSeries::inverse() const {
  if (is_zero()) throw invalid_specialization("QSeries::inverse of zero series");
  if (!is_unit(coeffs_.front()))
    throw invalid_specialization("QSeries::inverse: non-unit leading coefficient");
  // g * f = 1 solved coefficient by coefficient; exact since lead(f) = +-1.
  const int lead = -lead_;
  const int n = order_ - lead + 1;
  QSeries r(order_);
  if (n <= 0) return r;
  std::vector<Int> g(static_cast<size_t>(n), Int(0));
  const Int& f0 = coeffs_.front();
  g[0] = f0;  // 1/f0 == f0 for units
  Int acc;
  for (int k = 1; k < n; ++k) {
    acc = 0;
    const int jmax = std::min(k, static_cast<int>(coeffs_.size()) - 1);
    for (int j = 1; j <= jmax; ++j) {
      if (coeffs_[j] != 0) acc += coeffs_[j] * g[k - j];
    }
    g[k] = (f0 == 1) ? -acc : acc;
  }
  return QSeries(order_, lead, std::move(g));
}

QSeries QSeries::substituted_power(int m) const {
  if (m < 1) throw std::invalid_argument("substitute_power: m must be >= 1");
  if (m == 1) return *this;
  QSeries r(order_);
  if (is_zero()) return r;
  for (int k = lead_; k <= order_; ++k) {
    // k*m may overflow the truncation window quickly; drop such terms.
    long e = static_cast<long>(k) * m;
    if (e > order_) {
      if (k > 0) break;
      continue;
    }
    const Int& c = coeffs_[k - lead_];
    if (c != 0) r = r + QSeries::monomial(c, static_cast<int>(e), order_);
  }
  return r;
}

QSeries QSeries::shifted(int e) const {
  if (is_zero() || e == 0) return *this;
  QSeries r(order_);
  int lead = lead_ + e;
  if (lead > order_) return r;
  std::vector<Int> c(coeffs_.begin(),
                     coeffs_.begin() + std::min(coeffs_.size(),
                                                static_cast<size_t>(order_ - lead + 1)));
  return QSeries(order_, lead, std::move(c));
}

QSeries QSeries::scaled(const Int& c) const {
  if (c == 0) return QSeries(order_);
  QSeries r = *this;
  if (c != 1)
    for (auto& x : r.coeffs_) x *= c;
  return r;
}

void QSeries::mul_binomial_inplace(const Int& c, int e) {
  // f - c q^e f
  if (is_zero() || c == 0) return;
  if (e >= 0) {
    const int n = static_cast<int>(coeffs_.size());
    if (e == 0) {
      Int s = 1 - c;
      if (s == 0) {
        coeffs_.clear();
        lead_ = 0;
        return;
      }
      for (auto& x : coeffs_) x *= s;
      return;
    }
    // work from the top so lower coefficients are still unscaled
    for (int k = n - 1; k >= 0; --k) {
      if (k - e >= 0 && coeffs_[k - e] != 0) coeffs_[k] -= c * coeffs_[k - e];
    }
    normalize();
    return;
  }
  // e < 0: the lead moves down.
  int lead = lead_ + e;
  std::vector<Int> out(static_cast<size_t>(order_ - lead + 1), Int(0));
  for (int k = lead_; k <= order_; ++k) {
    const Int& x = coeffs_[k - lead_];
    if (x == 0) continue;
    out[k - lead] += x;
    if (k + e >= lead) out[k + e - lead] -= c * x;
  }
  lead_ = lead;
  coeffs_ = std::move(out);
  normalize();
}

void QSeries::div_binomial_inplace(const Int& c, int e) {
  if (c == 0) return;
  if (e == 0) {
    Int s = 1 - c;
    if (s == 0) throw invalid_specialization("division by vanishing factor (1 - q^0)");
    if (!is_unit(s))
      throw invalid_specialization("division by non-unit constant factor");
    if (s == -1)
      for (auto& x : coeffs_) x = -x;
    return;
  }
  if (e < 0) {
    // (1 - c q^e) = -c q^e (1 - (1/c) q^-e); requires unit c.
    if (!is_unit(c))
      throw invalid_specialization("division by non-unit Laurent binomial");
    // divide by -c q^e ...
    if (c == 1)
      for (auto& x : coeffs_) x = -x;
    *this = shifted(-e);
    // ... then by (1 - c q^{-e}) (1/c == c for units)
    div_binomial_inplace(c, -e);
    return;
  }
  if (is_zero()) return;
  // synthetic division: out_k = f_k + c * out_{k-e}
  const int n = static_cast<int>(coeffs_.size());
  for (int k = e; k < n; ++k) {
    if (coeffs_[k - e] != 0) coeffs_[k] += c * coeffs_[k - e];
  }
}

void QSeries::add_scaled_inplace(const QSeries& o, const Int& c, int shift) {
  require_same_order(*this, o);
  if (o.is_zero() || c == 0) return;
  int olead = o.lead_ + shift;
  if (olead > order_) return;
  int lead = is_zero() ? olead : std::min(lead_, olead);
  if (is_zero()) lead_ = lead;
  if (lead < lead_) {
    coeffs_.insert(coeffs_.begin(), static_cast<size_t>(lead_ - lead), Int(0));
    lead_ = lead;
  }
  if (coeffs_.size() < static_cast<size_t>(order_ - lead_ + 1))
    coeffs_.resize(static_cast<size_t>(order_ - lead_ + 1), Int(0));
  const int kmax = std::min(order_, order_ + shift);
  for (int k = olead; k <= kmax; ++k)
    coeffs_[k - lead_] += c * o.coeffs_[k - shift - o.lead_];
  normalize();
}

std::string QSeries::str(int max_terms) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  int printed = 0;
  for (int k = lead_; k <= order_ && printed < max_terms; ++k) {
    const Int& c = coefficient(k);
    if (c == 0) continue;
    if (printed > 0) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Int a = abs(c);
    if (a != 1 || k == 0) os << a.get_str();
    if (k != 0) {
      if (a != 1) os << "*";
      os << "q";
      if (k != 1) os << "^" << k;
    }
    ++printed;
  }
  os << " + O(q^" << (order_ + 1) << ")";
  return os.str();
}

QSeries add(const QSeries& f, const QSeries& g) { return f + g; }
QSeries mul(const QSeries& f, const QSeries& g) { return f * g; }

}  // namespace qrr
