#include "qrr/qspecial.hpp"

#include <map>

namespace qrr {

namespace {

void check_not_vanishing(const Monomial& a, long factor_exp) {
  if (a.coeff == 1 && factor_exp == 0)
    throw invalid_specialization("vanishing Pochhammer factor (1 - q^0)");
}

}  // namespace

QSeries poch(const PochSpec& spec, int N) {
  const int t = spec.base_exp;
  if (t < 1) throw std::invalid_argument("poch: base exponent must be >= 1");
  QSeries r = QSeries::one(N);
  if (!spec.length) {
    for (long k = 0;; ++k) {
      long e = spec.a.exp + static_cast<long>(t) * k;
      if (e > N) break;
      check_not_vanishing(spec.a, e);
      r.mul_binomial_inplace(spec.a.coeff, static_cast<int>(e));
    }
    return r;
  }
  long n = *spec.length;
  if (n >= 0) {
    for (long k = 0; k < n; ++k) {
      long e = spec.a.exp + static_cast<long>(t) * k;
      check_not_vanishing(spec.a, e);
      if (e > N) continue;  // factor cannot touch coefficients <= N
      r.mul_binomial_inplace(spec.a.coeff, static_cast<int>(e));
    }
    return r;
  }
  // (a; q^t)_{-m} = 1 / prod_{k=1..m} (1 - a q^{-tk})
  for (long k = 1; k <= -n; ++k) {
    long e = spec.a.exp - static_cast<long>(t) * k;
    r.div_binomial_inplace(spec.a.coeff, static_cast<int>(e));
  }
  return r;
}

QSeries poch_infinite(std::span<const Monomial> args, int base_exp, int N) {
  QSeries r = QSeries::one(N);
  for (const auto& a : args) r = r * poch(PochSpec::infinite(a, base_exp), N);
  return r;
}

Poly q_binomial(long n, long m, int base_exp) {
  if (m < 0 || n < 0 || m > n) return Poly();
  Poly r = Poly::one();
  for (long k = 1; k <= m; ++k) {
    r.mul_binomial_inplace(Int(1), static_cast<int>(base_exp * (n - m + k)));
    r.div_binomial_exact_inplace(Int(1), static_cast<int>(base_exp * k));
  }
  return r;
}

QSeries triple_product(const Monomial& z, int base_exp, int N) {
  if (!is_unit(z.coeff))
    throw invalid_specialization("triple_product: bilateral sum needs a unit coefficient");
  const QSeries one = QSeries::one(N);
  QSeries acc(N);
  auto exponent = [&](long n) {
    return static_cast<long>(base_exp) * n * (n - 1) / 2 + static_cast<long>(z.exp) * n;
  };
  for (int dir : {+1, -1}) {
    for (long n = (dir > 0 ? 0 : -1);; n += dir) {
      long e = exponent(n);
      if (e <= N) {
        bool odd = (n & 1L) != 0;
        Int c = odd ? Int(-1) : Int(1);       // (-1)^n
        if (z.coeff == -1 && odd) c = -c;     // z^n sign
        acc.add_scaled_inplace(one, c, static_cast<int>(e));
      } else if (exponent(n + dir) > e) {
        break;  // past the vertex of the quadratic; exponents only grow now
      }
      if (n > 8L * N + 64 || n < -8L * N - 64)
        throw std::logic_error("triple_product: summation bound not reached");
    }
  }
  return acc;
}

namespace {

Poly t_poly_definitional(TPolyKind kind, long L, long A) {
  if (kind == TPolyKind::U)
    return t_poly(TPolyKind::T0, L, A) + t_poly(TPolyKind::T0, L, A + 1);
  Poly acc;
  if (L < 0) return acc;
  for (long r = 0; r <= L; ++r) {
    Poly term = q_binomial(L, r, 2) * q_binomial(2 * L - 2 * r, L - A - r, 1);
    if (term.is_zero()) continue;
    Int sign = (r % 2 == 0) ? Int(1) : Int(-1);
    int shift = (kind == TPolyKind::T1) ? static_cast<int>(r) : 0;
    acc.add_scaled_inplace(term, sign, shift);
  }
  return acc;
}

std::map<std::tuple<int, long, long>, Poly> g_tpoly_memo;
std::mutex g_tpoly_mutex;

}  // namespace

Poly t_poly(const TPolySpec& p) { return t_poly(p.kind, p.L, p.A); }

Poly t_poly(TPolyKind kind, long L, long A) {
  if (kind != TPolyKind::U && A < 0) A = -A;  // T0, T1 are even in A
  std::tuple<int, long, long> key{static_cast<int>(kind), L, A};
  {
    std::lock_guard<std::mutex> lock(g_tpoly_mutex);
    auto it = g_tpoly_memo.find(key);
    if (it != g_tpoly_memo.end()) return it->second;
  }
  Poly value = t_poly_definitional(kind, L, A);
  std::lock_guard<std::mutex> lock(g_tpoly_mutex);
  return g_tpoly_memo.emplace(std::move(key), std::move(value)).first->second;
}

TPolyTable::TPolyTable(long max_L, int trunc_order) : max_L_(max_L), trunc_(trunc_order) {
  t0_.resize(max_L_ + 1);
  t1_.resize(max_L_ + 1);
  auto trunc = [&](Poly& p) {
    if (trunc_ < 0) return;
    std::vector<Int> c;
    c.reserve(trunc_ + 1);
    for (int k = 0; k <= std::min(trunc_, p.degree()); ++k) c.push_back(p.coefficient(k));
    p = Poly(std::move(c));
  };
  for (long L = 0; L <= max_L_; ++L) {
    const long width = L + 4;  // A = 0 .. L+3
    t0_[L].assign(width, Poly());
    t1_[L].assign(width, Poly());
    if (L == 0) {
      t0_[0][0] = Poly::one();
      t1_[0][0] = Poly::one();
      continue;
    }
    for (long A = 0; A < width; ++A) {
      // T0(L,A) = T0(L-1,A-1) + q^{L+A} T1(L-1,A) + q^{2L+2A} T0(L-1,A+1)
      Poly v = t0(L - 1, A - 1);
      v.add_scaled_inplace(t1(L - 1, A), Int(1), static_cast<int>(L + A));
      v.add_scaled_inplace(t0(L - 1, A + 1), Int(1), static_cast<int>(2 * L + 2 * A));
      trunc(v);
      t0_[L][A] = std::move(v);
    }
    for (long A = width - 1; A >= 0; --A) {
      // T1(L,A) = q^{L-A} T0(L,A) + T1(L,A+1) - q^{L+A+1} T0(L,A+1)
      if (A > L) continue;  // zero beyond the support
      Poly v = (A + 1 <= width - 1) ? t1_[L][A + 1] : Poly();
      if (L - A >= 0)
        v.add_scaled_inplace(t0_[L][A], Int(1), static_cast<int>(L - A));
      v.add_scaled_inplace(t0(L, A + 1), Int(-1), static_cast<int>(L + A + 1));
      trunc(v);
      t1_[L][A] = std::move(v);
    }
  }
}

const Poly& TPolyTable::t0(long L, long A) const {
  static const Poly kZero;
  if (A < 0) A = -A;
  if (L < 0 || L > max_L_ || A >= static_cast<long>(t0_[L].size())) return kZero;
  return t0_[L][A];
}

const Poly& TPolyTable::t1(long L, long A) const {
  static const Poly kZero;
  if (A < 0) A = -A;
  if (L < 0 || L > max_L_ || A >= static_cast<long>(t1_[L].size())) return kZero;
  return t1_[L][A];
}

Poly TPolyTable::u(long L, long A) const { return t0(L, A) + t0(L, A + 1); }

}  // namespace qrr
