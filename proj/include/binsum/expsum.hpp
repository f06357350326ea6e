#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "binsum/modarith.hpp"

namespace binsum {

/// omega_t = e^{2 pi i t / p} for t in [0, p), each entry computed directly.
class RootOfUnityTable {
 public:
  explicit RootOfUnityTable(std::uint32_t p);

  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(w_.size()); }
  const std::complex<double>& operator[](std::uint32_t t) const noexcept { return w_[t]; }
  /// Bound on |omega_t - exact| for every entry.
  static double entry_error() noexcept;

 private:
  std::vector<std::complex<double>> w_;
};

/// Per accumulated term; covers the table entry and the addition.
double per_term_error() noexcept;

struct SumValue {
  std::complex<double> value;
  double err = 0.0;
};

/// Evaluates S(a, b) = sum_x e_p(a x^k + b x^n) from shared power tables.
class SumEvaluator {
 public:
  SumEvaluator(const PrimeContext& ctx, const ExponentPair& pair);

  std::uint32_t p() const noexcept { return p_; }
  SumValue operator()(std::uint32_t a, std::uint32_t b) const noexcept;
  double abs(std::uint32_t a, std::uint32_t b) const noexcept { return std::abs((*this)(a, b).value); }
  double err() const noexcept;

 private:
  std::uint32_t p_;
  RootOfUnityTable w_;
  std::vector<std::uint32_t> xk_, xn_;
};

SumValue eval_sum(const PrimeContext& ctx, const ExponentPair& pair, Residue a, Residue b);

/// Lexicographically smallest member of each orbit of (a, b) -> (a z^k, b z^n)
/// on nonzero pairs; there are s (p - 1) of them.
std::vector<std::pair<std::uint32_t, std::uint32_t>> orbit_representatives(const PrimeContext& ctx,
                                                                            const ExponentPair& pair);

enum class ScanMode { full, orbit };

struct MaxSumResult {
  double m_value = 0.0;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  double err = 0.0;
  std::uint64_t scanned = 0;
};

/// max |S(a, b)| over a, b != 0. The argmax is the smallest pair whose value
/// lies within 2 err of the maximum.
MaxSumResult max_sum(const PrimeContext& ctx, const ExponentPair& pair, ScanMode mode = ScanMode::orbit);

struct MomentResult {
  double value = 0.0;
  double err = 0.0;
  /// value / p^2 rounded to the nearest integer.
  std::uint64_t quotient = 0;
};

/// sum over all (l, m) in F_p^2 of |S(l, m)|^4. Throws IdentityViolation when
/// value / p^2 is not within 1e-3 of an integer.
MomentResult fourth_moment(const PrimeContext& ctx, const ExponentPair& pair);

/// sum over all (l, m) of |S(l, m)|^2; quotient is value / p^2, which is p.
MomentResult second_moment(const PrimeContext& ctx, const ExponentPair& pair);

/// Single-threaded references with identical results.
namespace serial {
MaxSumResult max_sum(const PrimeContext& ctx, const ExponentPair& pair, ScanMode mode = ScanMode::orbit);
MomentResult fourth_moment(const PrimeContext& ctx, const ExponentPair& pair);
MomentResult second_moment(const PrimeContext& ctx, const ExponentPair& pair);
}  // namespace serial

}  // namespace binsum
