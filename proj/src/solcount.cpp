#include "binsum/solcount.hpp"

#include <string>

#include "binsum/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace binsum {
namespace {

void require_spectrum_size(const PrimeContext& ctx) {
  if (ctx.p() > kMaxSpectrumPrime)
    throw OutOfRange("pair spectrum needs p <= " + std::to_string(kMaxSpectrumPrime));
}

PairSpectrum spectrum_impl(const PrimeContext& ctx, const ExponentPair& pair, bool parallel) {
  require_spectrum_size(ctx);
  const std::uint32_t p = ctx.p();
  const auto xk = ctx.power_table(pair.k);
  const auto xn = ctx.power_table(pair.n);
  const std::size_t cells = static_cast<std::size_t>(p) * p;
  std::vector<std::uint32_t> counts(cells, 0);
#pragma omp parallel if (parallel)
  {
    std::vector<std::uint32_t> local(cells, 0);
#pragma omp for schedule(static)
    for (std::int64_t ui = 0; ui < static_cast<std::int64_t>(p); ++ui) {
      const auto u = static_cast<std::uint32_t>(ui);
      for (std::uint32_t v = 0; v < p; ++v)
        ++local[static_cast<std::size_t>(ctx.add(xk[u], xk[v])) * p + ctx.add(xn[u], xn[v])];
    }
#pragma omp critical
    for (std::size_t i = 0; i < cells; ++i) counts[i] += local[i];
  }
  return PairSpectrum(p, std::move(counts));
}

/// #{(x, y) : (x^n + y^n - 1)^{k/r} = (x^k + y^k - 1)^{n/r}}.
std::uint64_t count_points(const PrimeContext& ctx, const ExponentPair& pair, bool parallel) {
  const std::uint32_t p = ctx.p();
  const auto xk = ctx.power_table(pair.k);
  const auto xn = ctx.power_table(pair.n);
  const auto e1 = ctx.power_table(pair.k / pair.r);
  const auto e2 = ctx.power_table(pair.n / pair.r);
  std::uint64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static) if (parallel)
  for (std::int64_t xi = 0; xi < static_cast<std::int64_t>(p); ++xi) {
    const auto x = static_cast<std::uint32_t>(xi);
    for (std::uint32_t y = 0; y < p; ++y) {
      const std::uint32_t a = ctx.sub(ctx.add(xn[x], xn[y]), 1);
      const std::uint32_t b = ctx.sub(ctx.add(xk[x], xk[y]), 1);
      if (e1[a] == e2[b]) ++total;
    }
  }
  return total;
}

CountReport count_T_impl(const PrimeContext& ctx, const ExponentPair& pair, bool parallel) {
  CountReport rep;
  rep.p = ctx.p();
  rep.k = pair.k;
  rep.n = pair.n;
  rep.T = spectrum_impl(ctx, pair, parallel).sum_of_squares();
  return rep;
}

CountReport count_N_impl(const PrimeContext& ctx, const ExponentPair& pair, bool parallel) {
  if (pair.k == pair.n) throw DegenerateFamily("N_{k,n} is undefined for k = n");
  CountReport rep = count_T_impl(ctx, pair, parallel);
  rep.N = count_points(ctx, pair, parallel);
  return rep;
}

}  // namespace

std::uint64_t PairSpectrum::total() const noexcept {
  std::uint64_t t = 0;
  for (auto c : counts_) t += c;
  return t;
}

std::uint64_t PairSpectrum::sum_of_squares() const noexcept {
  std::uint64_t t = 0;
  for (auto c : counts_) t += std::uint64_t{c} * c;
  return t;
}

PairSpectrum pair_spectrum(const PrimeContext& ctx, const ExponentPair& pair) {
  return spectrum_impl(ctx, pair, true);
}
CountReport count_T(const PrimeContext& ctx, const ExponentPair& pair) { return count_T_impl(ctx, pair, true); }
CountReport count_N(const PrimeContext& ctx, const ExponentPair& pair) { return count_N_impl(ctx, pair, true); }

Decomposition decompose_T(const PrimeContext& ctx, std::int64_t n) {
  const ExponentPair pair = exponent_pair(ctx, 1, n);
  const std::uint32_t p = ctx.p();
  const auto xn = ctx.power_table(pair.n);
  Decomposition d;
  for (std::uint32_t x = 0; x < p; ++x)
    for (std::uint32_t y = 0; y < p; ++y) {
      const std::uint32_t s = ctx.add(xn[x], xn[y]);
      if (xn[ctx.add(x, y)] == s) ++d.A0;
      if (ctx.add(1, xn[ctx.sub(ctx.add(x, y), 1)]) == s) ++d.N;
    }
  d.T = count_T(ctx, pair).T;
  if (d.T != d.A0 + std::uint64_t{p - 1} * d.N)
    throw IdentityViolation("T = " + std::to_string(d.T) + " differs from A0 + (p-1) N = " +
                            std::to_string(d.A0 + std::uint64_t{p - 1} * d.N));
  return d;
}

RootExtractionReport root_extraction(const PrimeContext& ctx, const ExponentPair& pair) {
  const std::uint32_t p = ctx.p();
  const auto xk = ctx.power_table(pair.k);
  const auto xn = ctx.power_table(pair.n);
  const auto e1 = ctx.power_table(pair.k / pair.r);
  const auto e2 = ctx.power_table(pair.n / pair.r);
  RootExtractionReport rep;
  rep.s = pair.s;
  rep.T = count_T(ctx, pair).T;
  std::uint64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t vi = 0; vi < static_cast<std::int64_t>(p); ++vi) {
    const auto v = static_cast<std::uint32_t>(vi);
    for (std::uint32_t x = 0; x < p; ++x)
      for (std::uint32_t y = 0; y < p; ++y) {
        const std::uint32_t a = ctx.sub(ctx.add(xn[x], xn[y]), xn[v]);
        const std::uint32_t b = ctx.sub(ctx.add(xk[x], xk[y]), xk[v]);
        if (e1[a] == e2[b]) ++total;
      }
  }
  rep.R = total;
  rep.holds = rep.T <= std::uint64_t{rep.s} * rep.R;
  return rep;
}

namespace serial {
PairSpectrum pair_spectrum(const PrimeContext& ctx, const ExponentPair& pair) {
  return spectrum_impl(ctx, pair, false);
}
CountReport count_T(const PrimeContext& ctx, const ExponentPair& pair) { return count_T_impl(ctx, pair, false); }
CountReport count_N(const PrimeContext& ctx, const ExponentPair& pair) { return count_N_impl(ctx, pair, false); }
}  // namespace serial

}  // namespace binsum
