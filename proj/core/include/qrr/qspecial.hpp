#pragma once

#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "qrr/poly.hpp"
#include "qrr/qseries.hpp"

namespace qrr {

/// Specification of a q-Pochhammer symbol (a; q^t)_len with monomial a.
/// An empty length means the infinite product.
struct PochSpec {
  Monomial a;
  int base_exp{1};
  std::optional<long> length;  // nullopt == infinite

  static PochSpec finite(Monomial a, int base_exp, long n) {
    return PochSpec{std::move(a), base_exp, n};
  }
  static PochSpec infinite(Monomial a, int base_exp) {
    return PochSpec{std::move(a), base_exp, std::nullopt};
  }
};

/// (a; q^t)_n or (a; q^t)_inf as a truncated series.
///
/// Finite nonnegative lengths give the exact Laurent polynomial
/// prod_{k=0}^{n-1} (1 - a q^{tk}); negative lengths use the standard
/// convention (a;q)_{-m} = 1 / prod_{k=1}^{m} (1 - a q^{-tk}); the infinite
/// product stops once factors can no longer touch order N. A factor that is
/// identically zero, or a negative-length factor that cannot be inverted
/// integrally, raises invalid_specialization.
QSeries poch(const PochSpec& spec, int N);

/// Shorthand for (x_1, ..., x_r; q^t)_inf.
QSeries poch_infinite(std::span<const Monomial> args, int base_exp, int N);

/// Gaussian polynomial [n m] in base q^t; zero outside 0 <= m <= n.
/// Computed by exact multiply/divide with the remainder asserted zero.
Poly q_binomial(long n, long m, int base_exp = 1);

/// Bilateral theta sum sum_{n in Z} (-1)^n q^{t n(n-1)/2} z^n as a series,
/// with the summation bound chosen so skipped terms lie beyond order N.
QSeries triple_product(const Monomial& z, int base_exp, int N);

enum class TPolyKind { T0, T1, U };

struct TPolySpec {
  TPolyKind kind;
  long L{0};
  long A{0};
};

/// The Andrews-Baxter polynomials from their defining q-binomial sums.
/// Memoized by (kind, L, A); safe for concurrent callers.
Poly t_poly(const TPolySpec& p);
Poly t_poly(TPolyKind kind, long L, long A);

/// Table of T0/T1 computed by the two recurrences (fast path for large L).
/// The definitional t_poly stays the reference; tests pin the two routes
/// against each other over an envelope before the table is trusted.
/// A truncation order >= 0 keeps only coefficients up to that order.
class TPolyTable {
 public:
  explicit TPolyTable(long max_L, int trunc_order = -1);
  const Poly& t0(long L, long A) const;
  const Poly& t1(long L, long A) const;
  Poly u(long L, long A) const;

 private:
  long max_L_;
  int trunc_;
  // rows_[L] holds T0/T1 for A = 0..L+3 (negative A by symmetry).
  std::vector<std::vector<Poly>> t0_, t1_;
};

}  // namespace qrr
