#include "binsum/expsum.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>

#include "binsum/errors.hpp"

namespace binsum {
namespace {

double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v.data(), v.size()); }

/// Fills out[a * cols + j] = fn(a, j) for a in [0, rows), row by row.
template <class Fn>
void fill_rows(std::vector<double>& out, std::uint32_t first_row, std::uint32_t rows, std::uint32_t cols,
               bool parallel, Fn fn) {
  out.assign(static_cast<std::size_t>(rows) * cols, 0.0);
  const auto nrows = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
  for (std::int64_t a = 0; a < nrows; ++a)
    for (std::uint32_t j = 0; j < cols; ++j)
      out[static_cast<std::size_t>(a) * cols + j] = fn(static_cast<std::uint32_t>(a) + first_row, j);
}

MaxSumResult pick_max(const SumEvaluator& ev, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
                      const std::vector<double>& values) {
  MaxSumResult res;
  res.err = ev.err();
  res.scanned = pairs.size();
  if (pairs.empty()) return res;
  double best = 0.0;
  for (double v : values) best = std::max(best, v);
  res.m_value = best;
  // pairs are in lexicographic order
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (values[i] >= best - 2 * res.err) {
      res.a = pairs[i].first;
      res.b = pairs[i].second;
      break;
    }
  return res;
}

MaxSumResult max_sum_impl(const PrimeContext& ctx, const ExponentPair& pair, ScanMode mode, bool parallel) {
  const SumEvaluator ev(ctx, pair);
  const std::uint32_t p = ctx.p();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  if (mode == ScanMode::orbit) {
    pairs = orbit_representatives(ctx, pair);
  } else {
    pairs.reserve(static_cast<std::size_t>(p - 1) * (p - 1));
    for (std::uint32_t a = 1; a < p; ++a)
      for (std::uint32_t b = 1; b < p; ++b) pairs.emplace_back(a, b);
  }
  std::vector<double> values(pairs.size());
  const auto n = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = ev.abs(pairs[i].first, pairs[i].second);
  return pick_max(ev, pairs, values);
}

MomentResult moment_impl(const PrimeContext& ctx, const ExponentPair& pair, int power, bool parallel,
                         bool check) {
  const SumEvaluator ev(ctx, pair);
  const std::uint32_t p = ctx.p();
  std::vector<double> cells;
  fill_rows(cells, 0, p, p, parallel, [&](std::uint32_t l, std::uint32_t m) {
    const double s = std::norm(ev(l, m).value);
    return power == 4 ? s * s : s;
  });
  std::vector<double> rows(p);
  for (std::uint32_t l = 0; l < p; ++l) rows[l] = pairwise_sum(cells.data() + static_cast<std::size_t>(l) * p, p);
  MomentResult res;
  res.value = pairwise_sum(rows);
  const double pd = p, e = ev.err();
  const double cells_n = pd * pd;
  res.err = cells_n * (std::pow(pd + e, power) - std::pow(pd, power)) +
            (std::log2(cells_n) + 2.0) * DBL_EPSILON * res.value;
  const double q = res.value / (pd * pd);
  const double rounded = std::nearbyint(q);
  res.quotient = rounded < 0 ? 0 : static_cast<std::uint64_t>(rounded);
  if (check && std::abs(q - rounded) > 1e-3)
    throw IdentityViolation("moment / p^2 = " + std::to_string(q) + " is not within 1e-3 of an integer");
  return res;
}

}  // namespace

RootOfUnityTable::RootOfUnityTable(std::uint32_t p) : w_(p) {
  for (std::uint32_t t = 0; t < p; ++t) {
    if (t == 0) {
      w_[t] = {1.0, 0.0};
      continue;
    }
    const long double angle = 2.0L * std::numbers::pi_v<long double> * t / p;
    w_[t] = {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
  }
}

double RootOfUnityTable::entry_error() noexcept { return 2 * DBL_EPSILON; }

double per_term_error() noexcept { return 8 * DBL_EPSILON; }

SumEvaluator::SumEvaluator(const PrimeContext& ctx, const ExponentPair& pair)
    : p_(ctx.p()), w_(ctx.p()), xk_(ctx.power_table(pair.k)), xn_(ctx.power_table(pair.n)) {}

SumValue SumEvaluator::operator()(std::uint32_t a, std::uint32_t b) const noexcept {
  double re = 0.0, im = 0.0;
  const std::uint64_t p = p_;
  for (std::uint32_t x = 0; x < p_; ++x) {
    const auto t = static_cast<std::uint32_t>((std::uint64_t{a} * xk_[x] + std::uint64_t{b} * xn_[x]) % p);
    re += w_[t].real();
    im += w_[t].imag();
  }
  return {{re, im}, err()};
}

double SumEvaluator::err() const noexcept { return p_ * per_term_error(); }

SumValue eval_sum(const PrimeContext& ctx, const ExponentPair& pair, Residue a, Residue b) {
  if (a.modulus() != ctx.p() || b.modulus() != ctx.p()) throw Error("residue modulus differs from p");
  return SumEvaluator(ctx, pair)(a.value(), b.value());
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> orbit_representatives(const PrimeContext& ctx,
                                                                            const ExponentPair& pair) {
  const std::uint32_t p = ctx.p();
  const auto zk = ctx.power_table(pair.k);
  const auto zn = ctx.power_table(pair.n);
  std::vector<char> seen(static_cast<std::size_t>(p) * p, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> reps;
  for (std::uint32_t a = 1; a < p; ++a)
    for (std::uint32_t b = 1; b < p; ++b) {
      if (seen[static_cast<std::size_t>(a) * p + b]) continue;
      reps.emplace_back(a, b);
      for (std::uint32_t z = 1; z < p; ++z)
        seen[static_cast<std::size_t>(ctx.mul(a, zk[z])) * p + ctx.mul(b, zn[z])] = 1;
    }
  return reps;
}

MaxSumResult max_sum(const PrimeContext& ctx, const ExponentPair& pair, ScanMode mode) {
  return max_sum_impl(ctx, pair, mode, true);
}
MomentResult fourth_moment(const PrimeContext& ctx, const ExponentPair& pair) {
  return moment_impl(ctx, pair, 4, true, true);
}
MomentResult second_moment(const PrimeContext& ctx, const ExponentPair& pair) {
  return moment_impl(ctx, pair, 2, true, false);
}

namespace serial {
MaxSumResult max_sum(const PrimeContext& ctx, const ExponentPair& pair, ScanMode mode) {
  return max_sum_impl(ctx, pair, mode, false);
}
MomentResult fourth_moment(const PrimeContext& ctx, const ExponentPair& pair) {
  return moment_impl(ctx, pair, 4, false, true);
}
MomentResult second_moment(const PrimeContext& ctx, const ExponentPair& pair) {
  return moment_impl(ctx, pair, 2, false, false);
}
}  // namespace serial

}  // namespace binsum
