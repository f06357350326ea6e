#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "binsum/modarith.hpp"

namespace binsum {

/// Largest prime for which a dense p x p spectrum is built.
inline constexpr std::uint32_t kMaxSpectrumPrime = 1u << 13;

/// r[c][d] = #{(u, v) in F_p^2 : u^k + v^k = c, u^n + v^n = d}.
class PairSpectrum {
 public:
  PairSpectrum(std::uint32_t p, std::vector<std::uint32_t> counts) : p_(p), counts_(std::move(counts)) {}

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t at(std::uint32_t c, std::uint32_t d) const noexcept {
    return counts_[static_cast<std::size_t>(c) * p_ + d];
  }
  const std::vector<std::uint32_t>& counts() const noexcept { return counts_; }
  std::uint64_t total() const noexcept;
  /// sum of r[c][d]^2, the number of solutions of the two-equation system.
  std::uint64_t sum_of_squares() const noexcept;

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> counts_;
};

PairSpectrum pair_spectrum(const PrimeContext& ctx, const ExponentPair& pair);

struct CountReport {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  std::uint64_t T = 0;
  std::optional<std::uint64_t> N;
  std::optional<std::uint64_t> A0;
};

/// T_{k,n}: quadruples with u^k + v^k = x^k + y^k and u^n + v^n = x^n + y^n.
CountReport count_T(const PrimeContext& ctx, const ExponentPair& pair);

/// N_{k,n}: F_p-points of (x^n + y^n - 1)^{k/r} - (x^k + y^k - 1)^{n/r}.
/// Fills T as well. Throws DegenerateFamily for k = n.
CountReport count_N(const PrimeContext& ctx, const ExponentPair& pair);

struct Decomposition {
  std::uint64_t A0 = 0;
  std::uint64_t N = 0;
  std::uint64_t T = 0;
};

/// For k = 1: A0 = #{(x + y)^n = x^n + y^n}, N = N_n and T = T_n, with
/// T = A0 + (p - 1) N checked exactly (IdentityViolation otherwise).
Decomposition decompose_T(const PrimeContext& ctx, std::int64_t n);

struct RootExtractionReport {
  std::uint64_t T = 0;
  /// #{(v, x, y) : (x^n + y^n - v^n)^{k/r} = (x^k + y^k - v^k)^{n/r}}
  std::uint64_t R = 0;
  std::uint32_t s = 1;
  bool holds = false;  // T <= s R
};

RootExtractionReport root_extraction(const PrimeContext& ctx, const ExponentPair& pair);

/// Single-threaded references with identical results.
namespace serial {
PairSpectrum pair_spectrum(const PrimeContext& ctx, const ExponentPair& pair);
CountReport count_T(const PrimeContext& ctx, const ExponentPair& pair);
CountReport count_N(const PrimeContext& ctx, const ExponentPair& pair);
}  // namespace serial

}  // namespace binsum
