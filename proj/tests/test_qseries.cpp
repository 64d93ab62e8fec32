#include <random>

#include "doctest.h"
#include "qrr/bivseries.hpp"
#include "qrr/poly.hpp"
#include "qrr/qseries.hpp"

using namespace qrr;

namespace {

QSeries geometric(int N) {  // 1 + q + q^2 + ...
  std::vector<Int> c(static_cast<size_t>(N + 1), Int(1));
  return QSeries(N, 0, std::move(c));
}

QSeries random_series(std::mt19937& rng, int N, bool laurent = false) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> leaddist(laurent ? -3 : 0, 2);
  int lead = leaddist(rng);
  std::vector<Int> c;
  for (int k = lead; k <= N; ++k) c.emplace_back(coeff(rng));
  return QSeries(N, lead, std::move(c));
}

}  // namespace

TEST_CASE("monomial basics") {
  Monomial a(Int(-1), 3), b(Int(1), -1);
  CHECK((a * b) == Monomial(Int(-1), 2));
  CHECK(a.pow(2) == Monomial(Int(1), 6));
  CHECK(a.pow(-1) == Monomial(Int(-1), -3));
  CHECK((a / b) == Monomial(Int(-1), 4));
  CHECK_THROWS_AS(Monomial(Int(0), 1), std::invalid_argument);
}

TEST_CASE("mul: telescoping (1-q) * geometric = 1") {
  int N = 30;
  QSeries one_minus_q = QSeries::one(N) - QSeries::monomial(Int(1), 1, N);
  CHECK((one_minus_q * geometric(N)).is_one());
}

TEST_CASE("mul: zero annihilates") {
  int N = 10;
  CHECK((geometric(N) * QSeries(N)).is_zero());
}

TEST_CASE("mul: (1-q)(1-q^2) = 1 - q - q^2 + q^3") {
  int N = 10;
  QSeries f = QSeries::one(N) - QSeries::monomial(Int(1), 1, N);
  QSeries g = QSeries::one(N) - QSeries::monomial(Int(1), 2, N);
  QSeries p = f * g;
  CHECK(p.coefficient(0) == 1);
  CHECK(p.coefficient(1) == -1);
  CHECK(p.coefficient(2) == -1);
  CHECK(p.coefficient(3) == 1);
  CHECK(p.coefficient(4) == 0);
}

TEST_CASE("mul rejects mismatched truncation orders") {
  CHECK_THROWS_AS(QSeries::one(10) * QSeries::one(11), std::invalid_argument);
}

TEST_CASE("invert: geometric series") {
  int N = 24;
  QSeries f = QSeries::one(N) - QSeries::monomial(Int(1), 1, N);
  CHECK(f.inverse() == geometric(N));
  CHECK(QSeries::one(N).inverse().is_one());
}

TEST_CASE("invert: Laurent lead q*(1-q)") {
  int N = 12;
  QSeries f = QSeries::monomial(Int(1), 1, N) - QSeries::monomial(Int(1), 2, N);
  QSeries g = f.inverse();
  CHECK(g.lead() == -1);
  CHECK((f * g).is_one());
}

TEST_CASE("invert requires unit lead") {
  int N = 6;
  QSeries f = QSeries::monomial(Int(2), 0, N) - QSeries::monomial(Int(1), 1, N);
  CHECK_THROWS_AS(f.inverse(), invalid_specialization);
  CHECK_THROWS_AS(QSeries(N).inverse(), invalid_specialization);
}

TEST_CASE("invert is a two-sided inverse on random unit-lead series") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    QSeries f = random_series(rng, 40, true);
    if (f.is_zero()) continue;
    // force a unit lead
    QSeries unit = QSeries::monomial(Int(trial % 2 ? 1 : -1), f.lead(), 40);
    f = f - QSeries::monomial(f.lead_coeff(), f.lead(), 40) + unit;
    if (f.is_zero() || !is_unit(f.lead_coeff())) continue;
    CHECK((f * f.inverse()).is_one());
  }
}

TEST_CASE("substitute_power basics") {
  int N = 20;
  QSeries f = QSeries::one(N) + QSeries::monomial(Int(1), 1, N);
  QSeries g = f.substituted_power(2);
  CHECK(g.coefficient(2) == 1);
  CHECK(g.coefficient(1) == 0);
  CHECK(f.substituted_power(1) == f);
}

TEST_CASE("substitute_power is a ring homomorphism") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    QSeries f = random_series(rng, 36);
    QSeries g = random_series(rng, 36);
    for (int m : {2, 3}) {
      CHECK((f * g).substituted_power(m) == f.substituted_power(m) * g.substituted_power(m));
      CHECK((f + g).substituted_power(m) == f.substituted_power(m) + g.substituted_power(m));
    }
  }
}

TEST_CASE("coefficient access") {
  int N = 10;
  QSeries f = QSeries::one(N) - QSeries::monomial(Int(1), 1, N) -
              QSeries::monomial(Int(1), 2, N) + QSeries::monomial(Int(1), 3, N);
  CHECK(f.coefficient(2) == -1);
  CHECK(f.coefficient(-5) == 0);  // below the lead
  CHECK_THROWS_AS(f.coefficient(11), std::out_of_range);
}

TEST_CASE("coefficient is additive") {
  std::mt19937 rng(99);
  QSeries f = random_series(rng, 25, true);
  QSeries g = random_series(rng, 25, true);
  QSeries s = f + g;
  for (int k = std::min(f.lead(), g.lead()); k <= 25; ++k)
    CHECK(s.coefficient(k) == f.coefficient(k) + g.coefficient(k));
}

TEST_CASE("ring laws on random small series") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 25; ++trial) {
    QSeries a = random_series(rng, 30, true);
    QSeries b = random_series(rng, 30, true);
    QSeries c = random_series(rng, 30, true);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("binomial multiply/divide round trip, including Laurent exponents") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    QSeries f = random_series(rng, 30, true);
    for (auto [c, e] : {std::pair<int, int>{1, 3}, {-1, 1}, {1, -2}, {-1, -1}, {3, 2}}) {
      QSeries g = f;
      g.mul_binomial_inplace(Int(c), e);
      if (e <= 0 && std::abs(c) != 1) continue;
      g.div_binomial_inplace(Int(c), e);
      CHECK(g == f);
    }
  }
}

TEST_CASE("canonical zero makes equality structural") {
  int N = 8;
  QSeries a = QSeries::monomial(Int(1), 2, N) - QSeries::monomial(Int(1), 2, N);
  CHECK(a == QSeries(N));
  CHECK(a.is_zero());
  CHECK(a.lead() == 0);
}

TEST_CASE("poly exact division asserts remainder") {
  Poly p = Poly::one();
  p.mul_binomial_inplace(Int(1), 2);  // 1 - q^2
  Poly q = p;
  q.div_binomial_exact_inplace(Int(1), 2);
  CHECK(q == Poly::one());
  Poly bad = Poly::one();
  bad.mul_binomial_inplace(Int(1), 3);
  CHECK_THROWS_AS(bad.div_binomial_exact_inplace(Int(1), 2), std::logic_error);
}

TEST_CASE("bivseries: t-coefficients of 1/(1-t) are all 1") {
  BivSeries f = BivSeries::one(6, 10);
  f.div_binomial_inplace(Int(1), 1, 0);  // 1/(1-t)
  for (int n = 0; n <= 6; ++n) CHECK(f.t_coefficient(n).is_one());
  CHECK_THROWS_AS(f.t_coefficient(7), std::out_of_range);
}

TEST_CASE("bivseries binomial mul/div round trip") {
  BivSeries f = BivSeries::one(5, 12);
  f.div_binomial_inplace(Int(1), 1, 0);
  BivSeries g = f;
  g.mul_binomial_inplace(Int(-1), 2, 3);
  g.div_binomial_inplace(Int(-1), 2, 3);
  CHECK(g == f);
}
